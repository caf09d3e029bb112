"""Simplicial homology ranks over the rationals or a prime field.

Betti numbers feed the strong Morse inequality checks, the perfect
coefficient, and the legality tests for reduction moves.  Everything is exact:
rational elimination uses Fractions, prime fields use modular inverses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .complexes import Simplex, SimplicialComplex, make_simplex
from .errors import ParameterError, PreconditionError

__all__ = [
    "BettiVector",
    "boundary_matrix",
    "matrix_rank",
    "betti",
    "reduced_betti",
    "boundary_class_vanishes",
]


def _check_field(field: int | None) -> None:
    """field=None means the rationals; otherwise a prime for F_p."""
    if field is None:
        return
    if field < 2 or any(field % q == 0 for q in range(2, int(field**0.5) + 1)):
        raise ParameterError(f"field must be None (rationals) or a prime, got {field}")


def boundary_matrix(K: SimplicialComplex, i: int) -> List[List[int]]:
    """The i-th boundary matrix over the integers.

    Rows index sorted (i-1)-simplices, columns sorted i-simplices; the entry
    for dropping the j-th vertex of a column simplex is (-1)^j.
    """
    if not 1 <= i <= K.dim:
        raise ParameterError(f"boundary index {i} out of range 1..{K.dim}")
    rows = K.cells(i - 1)
    cols = K.cells(i)
    row_index = {s: r for r, s in enumerate(rows)}
    matrix = [[0] * len(cols) for _ in rows]
    for c, s in enumerate(cols):
        for j in range(len(s)):
            face = s[:j] + s[j + 1 :]
            matrix[row_index[face]][c] = (-1) ** j
    return matrix


def matrix_rank(matrix: Sequence[Sequence[int]], field: int | None = None) -> int:
    """Exact rank by Gaussian elimination over Q (field=None) or F_p."""
    _check_field(field)
    if not matrix or not matrix[0]:
        return 0
    if field is None:
        work = [[Fraction(x) for x in row] for row in matrix]
    else:
        work = [[x % field for x in row] for row in matrix]
    n_rows, n_cols = len(work), len(work[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = (
            1 / work[rank][col]
            if field is None
            else pow(work[rank][col], -1, field)
        )
        for r in range(rank + 1, n_rows):
            if work[r][col] == 0:
                continue
            factor = work[r][col] * inv
            if field is None:
                work[r] = [a - factor * b for a, b in zip(work[r], work[rank])]
            else:
                work[r] = [
                    (a - factor * b) % field for a, b in zip(work[r], work[rank])
                ]
        rank += 1
        if rank == n_rows:
            break
    return rank


@dataclass(frozen=True)
class BettiVector:
    """Betti numbers beta_0..beta_d over the given field (None = rationals)."""

    field: int | None
    betti: Tuple[int, ...]

    def __iter__(self):
        return iter(self.betti)

    def __getitem__(self, i: int) -> int:
        return self.betti[i] if 0 <= i < len(self.betti) else 0


def betti(K: SimplicialComplex, field: int | None = None) -> BettiVector:
    """beta_i = f_i - rank d_i - rank d_{i+1}, with d_0 and d_{dim+1} zero."""
    _check_field(field)
    f = K.f_vector()
    ranks = [0] * (K.dim + 2)
    for i in range(1, K.dim + 1):
        ranks[i] = matrix_rank(boundary_matrix(K, i), field)
    values = tuple(f[i] - ranks[i] - ranks[i + 1] for i in range(K.dim + 1))
    return BettiVector(field, values)


def reduced_betti(K: SimplicialComplex, i: int, field: int | None = None) -> int:
    """Reduced Betti number: ordinary one except one less in dimension zero."""
    b = betti(K, field)
    return b[0] - 1 if i == 0 else b[i]


def boundary_class_vanishes(
    K: SimplicialComplex, sigma: Simplex, field: int | None = None
) -> bool:
    """Whether the boundary cycle of sigma already bounds in K.

    Precondition: sigma is not in K, but all its facets are.  Computed by
    comparing beta_{d-1}(K) with beta_{d-1}(K + sigma): attaching sigma either
    creates new d-homology (boundary class vanishes, "birth") or kills a
    (d-1)-class (it does not vanish, "death"); nothing else can happen.
    """
    sigma = make_simplex(sigma)
    if sigma in K:
        raise PreconditionError(f"{sigma} is already in the complex")
    d = len(sigma) - 1
    if d < 1:
        raise PreconditionError("needs a simplex of dimension >= 1")
    attached = K.with_simplex(sigma)
    return betti(K, field)[d - 1] == betti(attached, field)[d - 1]
