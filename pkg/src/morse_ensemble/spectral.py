"""Exact graph fast paths for the Morse ensemble polynomial.

For a connected graph G with n vertices and m edges the whole polynomial is
z1^(m-n) * det(z0*z1*I + L_G), so one integer characteristic polynomial of the
Laplacian yields every coefficient.  The determinant polynomial is computed by
fraction-free elimination at the integer points 0..n followed by exact
Lagrange interpolation; eigenvalues themselves are never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Sequence, Tuple

from .complexes import Graph, cartesian_product
from .errors import InternalConsistencyError, ParameterError, PreconditionError
from .polyring import MorsePolynomial, coefficient, mul, one, specialize_all

__all__ = [
    "LaplacianCharPoly",
    "laplacian_matrix",
    "bareiss_determinant",
    "laplacian_det_poly",
    "laplacian_me",
    "spanning_tree_count",
    "forest_expansion_me",
    "path_me",
    "cycle_me",
    "dictionary_coefficient",
    "two_pair_coefficient_formula",
    "perfect_count_graph",
    "cartesian_me",
    "fibonacci",
    "lucas",
    "TotalCountRecord",
    "total_count_identities",
]


@dataclass(frozen=True)
class LaplacianCharPoly:
    """Integer coefficients c_0..c_n of det(lambda*I + L_G).

    c_j equals the elementary symmetric polynomial e_{n-j} of the Laplacian
    eigenvalues, which is the coefficient dictionary into ME_G.
    """

    n: int
    m: int
    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.n + 1:
            raise InternalConsistencyError("coefficient list has wrong length")
        if self.coeffs[self.n] != 1 or self.coeffs[0] != 0:
            raise InternalConsistencyError(
                "det(lambda*I + L) must be monic with zero constant term"
            )
        if any(c < 0 for c in self.coeffs):
            raise InternalConsistencyError("Laplacian char poly has negative coefficient")


def laplacian_matrix(G: Graph) -> List[List[int]]:
    L = [[0] * G.n for _ in range(G.n)]
    for u, v in G.edges:
        L[u][u] += 1
        L[v][v] += 1
        L[u][v] -= 1
        L[v][u] -= 1
    return L


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ParameterError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def laplacian_det_poly(G: Graph) -> LaplacianCharPoly:
    """det(lambda*I + L_G) via evaluation at lambda = 0..n and interpolation."""
    L = laplacian_matrix(G)
    n = G.n
    points = list(range(n + 1))
    values = []
    for x in points:
        shifted = [
            [L[i][j] + (x if i == j else 0) for j in range(n)] for i in range(n)
        ]
        values.append(bareiss_determinant(shifted))
    coeffs = _interpolate_integer_poly(points, values, n)
    return LaplacianCharPoly(n=n, m=G.m, coeffs=tuple(coeffs))


def _interpolate_integer_poly(
    points: Sequence[int], values: Sequence[int], degree: int
) -> List[int]:
    """Lagrange interpolation over Fractions with an integrality assertion."""
    coeffs = [Fraction(0)] * (degree + 1)
    for i, (xi, yi) in enumerate(zip(points, values)):
        # Build the Lagrange basis polynomial for x_i as coefficient list.
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k in range(len(basis)):
            coeffs[k] += yi * basis[k] / denom
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise InternalConsistencyError(f"non-integer interpolated coefficient {c}")
        out.append(int(c))
    return out


def laplacian_me(G: Graph) -> MorsePolynomial:
    """ME of a graph from its Laplacian, multiplicatively over components."""
    result = one(2)
    for comp in G.components():
        sub = G.subgraph(comp)
        char = laplacian_det_poly(sub)
        shift = sub.m - sub.n
        terms: Dict[Tuple[int, int], int] = {}
        for j in range(1, sub.n + 1):
            if char.coeffs[j]:
                terms[(j, j + shift)] = char.coeffs[j]
        result = mul(result, MorsePolynomial(2, terms))
    return result


def spanning_tree_count(G: Graph) -> int:
    """tau(G) for connected G, read off as c_1 / n (matrix-forest value)."""
    if not G.is_connected():
        raise PreconditionError("spanning tree count needs a connected graph")
    c1 = laplacian_det_poly(G).coeffs[1]
    if c1 % G.n:
        raise InternalConsistencyError(f"c_1 = {c1} not divisible by n = {G.n}")
    return c1 // G.n


def forest_expansion_me(G: Graph) -> MorsePolynomial:
    """Sum over spanning forests F of (prod of component orders) z0^(n-|F|) z1^(m-|F|).

    Isolated vertices count as components of order one.  Forests are
    enumerated directly with an undoable union-find.
    """
    n, m = G.n, G.m
    edges = G.sorted_edges()
    parent = list(range(n))
    size = [1] * n

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    terms: Dict[Tuple[int, int], int] = {}
    # weight = product of component orders for the current forest
    state = {"edges": 0, "weight": 1}

    def record() -> None:
        k = state["edges"]
        exps = (n - k, m - k)
        terms[exps] = terms.get(exps, 0) + state["weight"]

    def walk(start: int) -> None:
        record()
        for j in range(start, m):
            u, v = edges[j]
            ru, rv = find(u), find(v)
            if ru == rv:
                continue
            su, sv = size[ru], size[rv]
            parent[ru] = rv
            size[rv] = su + sv
            state["edges"] += 1
            state["weight"] = state["weight"] // (su * sv) * (su + sv)
            walk(j + 1)
            state["weight"] = state["weight"] // (su + sv) * (su * sv)
            state["edges"] -= 1
            size[rv] = sv
            parent[ru] = ru

    walk(0)
    return MorsePolynomial(2, terms)


def path_me(n: int) -> MorsePolynomial:
    """Closed form for the path on n vertices."""
    if n < 1:
        raise ParameterError(f"path needs n >= 1, got {n}")
    terms = {(k, k - 1): comb(n + k - 1, 2 * k - 1) for k in range(1, n + 1)}
    return MorsePolynomial(2, terms)


def cycle_me(n: int) -> MorsePolynomial:
    """Closed form for the cycle on n vertices."""
    if n < 3:
        raise ParameterError(f"cycle needs n >= 3, got {n}")
    terms = {}
    for k in range(1, n + 1):
        numerator = n * comb(n + k - 1, 2 * k - 1)
        if numerator % k:
            raise InternalConsistencyError(
                f"cycle coefficient (n={n}, k={k}) is not integral"
            )
        terms[(k, k)] = numerator // k
    return MorsePolynomial(2, terms)


def dictionary_coefficient(G: Graph, j: int) -> int:
    """The antidiagonal coefficient [z0^j z1^(m-n+j)] ME_G, read spectrally.

    It equals e_{n-j} of the Laplacian eigenvalues, i.e. coefficient c_j of
    det(lambda*I + L_G).
    """
    if not G.is_connected():
        raise PreconditionError("dictionary coefficients need a connected graph")
    if not 0 <= j <= G.n:
        raise ParameterError(f"index {j} out of range 0..{G.n}")
    return laplacian_det_poly(G).coeffs[j]


def two_pair_coefficient_formula(G: Graph) -> int:
    """Count of two-pair acyclic matchings: C(2m,2) - m - sum_v C(deg v, 2)."""
    m = G.m
    return comb(2 * m, 2) - m - sum(comb(G.degree(v), 2) for v in range(G.n))


def perfect_count_graph(G: Graph) -> int:
    """[z0 z1^(m-n+1)] ME_G = n * tau(G) for connected G."""
    if not G.is_connected():
        raise PreconditionError("perfect matching count needs a connected graph")
    value = G.n * spanning_tree_count(G)
    check = coefficient(laplacian_me(G), (1, G.m - G.n + 1))
    if check != value:
        raise InternalConsistencyError(
            f"n*tau = {value} but [z0 z1^(m-n+1)] ME = {check}"
        )
    return value


def cartesian_me(G1: Graph, G2: Graph) -> MorsePolynomial:
    """ME of the Cartesian product graph, by the exact Laplacian route."""
    if not (G1.is_connected() and G2.is_connected()):
        raise PreconditionError("product fast path needs connected factors")
    return laplacian_me(cartesian_product(G1, G2))


def fibonacci(k: int) -> int:
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def lucas(k: int) -> int:
    a, b = 2, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class TotalCountRecord:
    """Closed-form totals versus evaluated totals for size n (cycles need n >= 3)."""

    n: int
    path_total: int
    fibonacci_2n: int
    cycle_total: int | None
    lucas_2n_minus_2: int | None
    complete_total: int
    complete_closed_form: int


def total_count_identities(n: int) -> TotalCountRecord:
    """Totals of acyclic-matching counts for P_n, C_n, K_n with their closed forms."""
    if n < 1:
        raise ParameterError(f"needs n >= 1, got {n}")
    path_total = specialize_all(path_me(n), 1)
    fib = fibonacci(2 * n)
    cycle_total = specialize_all(cycle_me(n), 1) if n >= 3 else None
    luc = lucas(2 * n) - 2 if n >= 3 else None
    from .complexes import complete_graph

    complete_total = specialize_all(laplacian_me(complete_graph(n)), 1)
    complete_closed = (n + 1) ** (n - 1)
    record = TotalCountRecord(
        n, path_total, fib, cycle_total, luc, complete_total, complete_closed
    )
    if path_total != fib or cycle_total != luc or complete_total != complete_closed:
        raise InternalConsistencyError(f"total-count identity failed: {record}")
    return record
