"""Simplicial complexes, face posets, punctured graded posets, and graphs.

Vertices are dense non-negative integers.  A simplex is a strictly increasing
tuple of vertices; a complex stores the full face-closed simplex set with
per-dimension buckets.  The graded poset type is standalone because punctured
posets (a face poset minus a few cells) are not face posets of any complex.
"""

from __future__ import annotations

import json
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from .errors import (
    EmptyInputError,
    NotFoundError,
    ParameterError,
    StructuralError,
)

__all__ = [
    "Simplex",
    "make_simplex",
    "SimplicialComplex",
    "GradedPoset",
    "face_poset",
    "puncture",
    "Graph",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
    "hypercube_graph",
    "cartesian_product",
    "simplex",
    "boundary_simplex",
    "from_facets",
    "dunce_hat",
    "torus_7",
    "rp2_6",
    "independence_complex",
    "clique_complex",
    "complement",
    "skeleton",
    "parse_facets_json",
    "parse_edge_list",
    "from_graph6",
    "to_graph6",
]

Simplex = Tuple[int, ...]


def make_simplex(vertices: Iterable[int]) -> Simplex:
    """Normalize to a sorted tuple; reject repeats and negative vertices."""
    vs = tuple(sorted(vertices))
    if not vs:
        raise ParameterError("a simplex needs at least one vertex")
    if any(v < 0 for v in vs):
        raise ParameterError(f"negative vertex in {vs}")
    if any(vs[i] == vs[i + 1] for i in range(len(vs) - 1)):
        raise ParameterError(f"repeated vertex in {vs}")
    return vs


def _proper_faces(s: Simplex) -> Iterable[Simplex]:
    for k in range(1, len(s)):
        yield from combinations(s, k)


class SimplicialComplex:
    """Finite simplicial complex: a face-closed set of simplices."""

    __slots__ = ("by_dim", "simplices", "dim")

    def __init__(self, simplices: Iterable[Simplex]):
        all_simplices: Set[Simplex] = {make_simplex(s) for s in simplices}
        if not all_simplices:
            raise EmptyInputError("a complex needs at least one simplex")
        for s in all_simplices:
            for f in _proper_faces(s):
                if f not in all_simplices:
                    raise StructuralError(f"face {f} of {s} is missing; not face-closed")
        dim = max(len(s) for s in all_simplices) - 1
        by_dim: List[FrozenSet[Simplex]] = [
            frozenset(s for s in all_simplices if len(s) == k + 1)
            for k in range(dim + 1)
        ]
        object.__setattr__(self, "simplices", frozenset(all_simplices))
        object.__setattr__(self, "by_dim", tuple(by_dim))
        object.__setattr__(self, "dim", dim)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("SimplicialComplex is immutable")

    def __reduce__(self):
        return (SimplicialComplex, (tuple(self.simplices),))

    @classmethod
    def from_maximal(cls, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build the face closure of the given simplices."""
        closure: Set[Simplex] = set()
        for f in facets:
            s = make_simplex(f)
            closure.add(s)
            closure.update(_proper_faces(s))
        return cls(closure)

    def __contains__(self, s: object) -> bool:
        return s in self.simplices

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.simplices == other.simplices

    def __hash__(self) -> int:
        return hash(self.simplices)

    def __repr__(self) -> str:
        return f"SimplicialComplex(f_vector={self.f_vector()})"

    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(bucket) for bucket in self.by_dim)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * f for i, f in enumerate(self.f_vector()))

    def n_cells(self) -> int:
        return len(self.simplices)

    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(v for (v,) in self.by_dim[0]))

    def cells(self, k: int) -> Tuple[Simplex, ...]:
        """Sorted k-simplices; empty beyond the dimension."""
        if k < 0 or k > self.dim:
            return ()
        return tuple(sorted(self.by_dim[k]))

    def facets(self) -> Tuple[Simplex, ...]:
        """Maximal simplices, sorted."""
        maximal = [s for s in self.simplices if not self.cofacets(s)]
        return tuple(sorted(maximal, key=lambda s: (len(s), s)))

    def cofacets(self, s: Simplex) -> Tuple[Simplex, ...]:
        """Simplices covering s (one extra vertex), sorted."""
        k = len(s)
        if k > self.dim:
            return ()
        out = [t for t in self.by_dim[k] if set(s) < set(t)] if k <= self.dim else []
        return tuple(sorted(out))

    def free_pairs(self) -> Tuple[Tuple[Simplex, Simplex], ...]:
        """All (free face, unique coface) pairs, sorted.

        A simplex is free when exactly one other simplex properly contains it;
        that coface is then necessarily one dimension up and maximal.
        """
        out = []
        for s in self.simplices:
            cofaces = [t for t in self.simplices if set(s) < set(t)]
            if len(cofaces) == 1:
                out.append((s, cofaces[0]))
        return tuple(sorted(out))

    def with_simplex(self, s: Simplex) -> "SimplicialComplex":
        """New complex with s attached; all proper faces of s must exist."""
        s = make_simplex(s)
        if s in self.simplices:
            raise StructuralError(f"{s} is already present")
        for f in _proper_faces(s):
            if f not in self.simplices:
                raise StructuralError(f"cannot attach {s}: face {f} missing")
        return SimplicialComplex(set(self.simplices) | {s})

    def without_simplex(self, s: Simplex) -> "SimplicialComplex":
        """New complex with the maximal simplex s removed."""
        s = make_simplex(s)
        if s not in self.simplices:
            raise NotFoundError(f"{s} is not in the complex")
        if self.cofacets(s):
            raise StructuralError(f"{s} is not maximal; removal would break closure")
        return SimplicialComplex(set(self.simplices) - {s})

    def without_pair(self, tau: Simplex, sigma: Simplex) -> "SimplicialComplex":
        """New complex after an elementary collapse removing (tau, sigma)."""
        tau, sigma = make_simplex(tau), make_simplex(sigma)
        if (tau, sigma) not in self.free_pairs():
            raise StructuralError(f"({tau}, {sigma}) is not a free pair")
        return SimplicialComplex(set(self.simplices) - {tau, sigma})


class GradedPoset:
    """Elements graded by dimension with covers between consecutive grades.

    Element ids are the simplex tuples themselves when the poset comes from a
    complex, which keeps ids stable under puncturing.
    """

    __slots__ = ("dims", "up", "down")

    def __init__(self, dims: Dict[Simplex, int], covers: Iterable[Tuple[Simplex, Simplex]]):
        up: Dict[Simplex, Tuple[Simplex, ...]] = {e: () for e in dims}
        down: Dict[Simplex, Tuple[Simplex, ...]] = {e: () for e in dims}
        up_build: Dict[Simplex, List[Simplex]] = {}
        down_build: Dict[Simplex, List[Simplex]] = {}
        for lo, hi in covers:
            if lo not in dims or hi not in dims:
                raise StructuralError(f"cover ({lo}, {hi}) references unknown elements")
            if dims[hi] != dims[lo] + 1:
                raise StructuralError(
                    f"cover ({lo}, {hi}) skips grades {dims[lo]} -> {dims[hi]}"
                )
            up_build.setdefault(lo, []).append(hi)
            down_build.setdefault(hi, []).append(lo)
        for e, lst in up_build.items():
            up[e] = tuple(sorted(set(lst)))
        for e, lst in down_build.items():
            down[e] = tuple(sorted(set(lst)))
        object.__setattr__(self, "dims", dict(dims))
        object.__setattr__(self, "up", up)
        object.__setattr__(self, "down", down)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("GradedPoset is immutable")

    def __reduce__(self):
        return (GradedPoset, (self.dims, self.covers()))

    def __len__(self) -> int:
        return len(self.dims)

    def __contains__(self, e: object) -> bool:
        return e in self.dims

    def elements(self) -> Tuple[Simplex, ...]:
        return tuple(sorted(self.dims, key=lambda e: (self.dims[e], e)))

    def covers(self) -> Tuple[Tuple[Simplex, Simplex], ...]:
        return tuple(
            sorted((lo, hi) for lo, his in self.up.items() for hi in his)
        )

    def n_covers(self) -> int:
        return sum(len(his) for his in self.up.values())

    def max_dim(self) -> int:
        """Largest grade present; -1 for the empty poset."""
        return max(self.dims.values(), default=-1)

    def grade_counts(self, num_grades: int | None = None) -> Tuple[int, ...]:
        """Element count per grade 0..num_grades-1."""
        n = (self.max_dim() + 1) if num_grades is None else num_grades
        counts = [0] * n
        for d in self.dims.values():
            if d >= n:
                raise ParameterError(f"grade {d} exceeds requested {n} grades")
            counts[d] += 1
        return tuple(counts)

    def is_cover(self, lo: Simplex, hi: Simplex) -> bool:
        return hi in self.up.get(lo, ())


def face_poset(K: SimplicialComplex) -> GradedPoset:
    """Face poset of K: one element per simplex, covers are codim-1 containments."""
    dims = {s: len(s) - 1 for s in K.simplices}
    covers = [
        (f, s)
        for s in K.simplices
        if len(s) >= 2
        for f in combinations(s, len(s) - 1)
    ]
    return GradedPoset(dims, covers)


def puncture(P: GradedPoset, removed: Iterable[Simplex]) -> GradedPoset:
    """Delete the given elements and every cover touching them."""
    gone = set(removed)
    for e in gone:
        if e not in P.dims:
            raise NotFoundError(f"{e} is not an element of the poset")
    dims = {e: d for e, d in P.dims.items() if e not in gone}
    covers = [
        (lo, hi)
        for lo, his in P.up.items()
        if lo not in gone
        for hi in his
        if hi not in gone
    ]
    return GradedPoset(dims, covers)


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]]):
        if n < 1:
            raise ParameterError(f"graph needs n >= 1 vertices, got {n}")
        norm: Set[Tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise StructuralError(f"loop at {u} not allowed in simple form")
            if not (0 <= u < n and 0 <= v < n):
                raise StructuralError(f"edge ({u}, {v}) out of range for n={n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, tuple(self.edges)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(sorted(u + w - v for (u, w) in self.edges if v in (u, w)))

    def components(self) -> Tuple[Tuple[int, ...], ...]:
        seen: Set[int] = set()
        comps: List[Tuple[int, ...]] = []
        for start in range(self.n):
            if start in seen:
                continue
            stack, comp = [start], set()
            while stack:
                v = stack.pop()
                if v in comp:
                    continue
                comp.add(v)
                stack.extend(u for u in self.neighbors(v) if u not in comp)
            seen |= comp
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def is_bridge(self, e: Tuple[int, int]) -> bool:
        """True iff removing e increases the number of components."""
        e = (min(e), max(e))
        if e not in self.edges:
            raise NotFoundError(f"{e} is not an edge")
        before = len(self.components())
        after = len(Graph(self.n, self.edges - {e}).components())
        return after > before

    def without_edge(self, e: Tuple[int, int]) -> "Graph":
        """Same vertex set, edge e removed."""
        e = (min(e), max(e))
        if e not in self.edges:
            raise NotFoundError(f"{e} is not an edge")
        return Graph(self.n, self.edges - {e})

    def to_complex(self) -> SimplicialComplex:
        """The graph as a simplicial complex (vertices and edges)."""
        cells: List[Sequence[int]] = [(v,) for v in range(self.n)]
        cells.extend(self.edges)
        return SimplicialComplex.from_maximal(cells)

    def subgraph(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph, vertices relabeled 0..k-1 in sorted order."""
        keep_sorted = sorted(set(keep))
        index = {v: i for i, v in enumerate(keep_sorted)}
        edges = [
            (index[u], index[v])
            for (u, v) in self.edges
            if u in index and v in index
        ]
        return Graph(len(keep_sorted), edges)


# ---------------------------------------------------------------------------
# builders


def path_graph(n: int) -> Graph:
    """Path on n vertices (n-1 edges)."""
    if n < 1:
        raise ParameterError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ParameterError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def star_graph(n: int) -> Graph:
    """Star with center 0 and n leaves (the complete bipartite K_{1,n})."""
    if n < 1:
        raise ParameterError(f"star needs n >= 1 leaves, got {n}")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def hypercube_graph(n: int) -> Graph:
    """n-cube graph on 2^n bitstring vertices."""
    if n < 1:
        raise ParameterError(f"hypercube needs n >= 1, got {n}")
    edges = [
        (v, v ^ (1 << b))
        for v in range(1 << n)
        for b in range(n)
        if v < v ^ (1 << b)
    ]
    return Graph(1 << n, edges)


def cartesian_product(G1: Graph, G2: Graph) -> Graph:
    """Cartesian product: (a,x)~(b,y) iff a=b and x~y, or x=y and a~b."""
    n1, n2 = G1.n, G2.n

    def idx(a: int, x: int) -> int:
        return a * n2 + x

    edges = []
    for a in range(n1):
        for (x, y) in G2.edges:
            edges.append((idx(a, x), idx(a, y)))
    for (a, b) in G1.edges:
        for x in range(n2):
            edges.append((idx(a, x), idx(b, x)))
    return Graph(n1 * n2, edges)


def simplex(d: int) -> SimplicialComplex:
    """The full d-simplex on vertices 0..d."""
    if d < 0:
        raise ParameterError(f"simplex needs d >= 0, got {d}")
    return SimplicialComplex.from_maximal([tuple(range(d + 1))])


def boundary_simplex(d: int) -> SimplicialComplex:
    """Boundary of the d-simplex: all proper faces, a (d-1)-sphere."""
    if d < 1:
        raise ParameterError(f"boundary needs d >= 1, got {d}")
    return SimplicialComplex.from_maximal(combinations(range(d + 1), d))


def from_facets(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex.from_maximal(facets)


def dunce_hat() -> SimplicialComplex:
    """An 8-vertex triangulation of the dunce hat.

    Contractible but not collapsible: no simplex is free.  The facet list is
    validated by the test suite through its homology (Betti (1,0,0) over the
    rationals) and the absence of free faces.
    """
    return from_facets(
        [
            (0, 1, 3), (1, 2, 3), (2, 3, 4), (0, 2, 4), (0, 1, 4),
            (1, 4, 5), (1, 2, 5), (0, 2, 5), (0, 5, 6), (0, 2, 6),
            (1, 2, 6), (1, 6, 7), (0, 1, 7), (0, 3, 7), (3, 4, 5),
            (3, 5, 6), (3, 6, 7),
        ]
    )


def torus_7() -> SimplicialComplex:
    """The 7-vertex triangulation of the torus (Betti (1,2,1) over Q)."""
    facets = []
    for i in range(7):
        facets.append(tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))))
        facets.append(tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))))
    return from_facets(facets)


def rp2_6() -> SimplicialComplex:
    """The 6-vertex triangulation of the real projective plane."""
    return from_facets(
        [
            (0, 1, 2), (0, 2, 3), (0, 1, 5), (0, 3, 4), (0, 4, 5),
            (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5),
        ]
    )


def independence_complex(G: Graph) -> SimplicialComplex:
    """Complex whose k-simplices are the independent vertex sets of size k+1."""
    adjacency = {v: set(G.neighbors(v)) for v in range(G.n)}
    sets: List[Simplex] = []

    def grow(current: Tuple[int, ...], candidates: List[int]) -> None:
        for i, v in enumerate(candidates):
            nxt = current + (v,)
            sets.append(nxt)
            grow(nxt, [u for u in candidates[i + 1 :] if u not in adjacency[v]])

    grow((), list(range(G.n)))
    return SimplicialComplex(sets)


def clique_complex(G: Graph) -> SimplicialComplex:
    """Complex whose simplices are the non-empty cliques of G."""
    adjacency = {v: set(G.neighbors(v)) for v in range(G.n)}
    cliques: List[Simplex] = []

    def grow(current: Tuple[int, ...], candidates: List[int]) -> None:
        for i, v in enumerate(candidates):
            nxt = current + (v,)
            cliques.append(nxt)
            grow(nxt, [u for u in candidates[i + 1 :] if u in adjacency[v]])

    grow((), list(range(G.n)))
    return SimplicialComplex(cliques)


def complement(G: Graph) -> Graph:
    edges = [
        (u, v) for u, v in combinations(range(G.n), 2) if (u, v) not in G.edges
    ]
    return Graph(G.n, edges)


def skeleton(K: SimplicialComplex, k: int) -> SimplicialComplex:
    """All simplices of dimension <= k."""
    if k < 0:
        raise ParameterError(f"skeleton dimension must be >= 0, got {k}")
    return SimplicialComplex(s for s in K.simplices if len(s) <= k + 1)


# ---------------------------------------------------------------------------
# ingestion formats


def parse_facets_json(text: str) -> SimplicialComplex:
    """Parse {"facets": [[0,1,2], ...]} into a complex."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"facet JSON does not parse: {exc}") from None
    if not isinstance(doc, dict) or "facets" not in doc:
        raise ParameterError('facet JSON must be an object with a "facets" key')
    facets = doc["facets"]
    if not isinstance(facets, list) or not all(
        isinstance(f, list) and all(isinstance(v, int) for v in f) for f in facets
    ):
        raise ParameterError('"facets" must be a list of integer lists')
    return from_facets(facets)


def parse_edge_list(text: str) -> Graph:
    """Parse one "u v" pair per line; n is 1 + the largest vertex seen."""
    edges = []
    top = 0
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParameterError(f"bad edge line: {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParameterError(f"bad edge line: {line!r}") from None
        top = max(top, u, v)
        edges.append((u, v))
    return Graph(top + 1, edges)


def from_graph6(text: str) -> Graph:
    """Decode one graph6-encoded graph (optionally prefixed '>>graph6<<')."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise ParameterError(f"invalid graph6 byte in {s!r}")
    if not data:
        raise ParameterError("empty graph6 string")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    elif len(data) >= 8:
        n = 0
        for b in data[2:8]:
            n = (n << 6) | b
        pos = 8
    else:
        raise ParameterError(f"truncated graph6 header in {s!r}")
    if n < 1:
        raise ParameterError("graph6 graph must have at least one vertex")
    bits = []
    for b in data[pos:]:
        bits.extend((b >> shift) & 1 for shift in range(5, -1, -1))
    need = n * (n - 1) // 2
    if len(bits) < need:
        raise ParameterError(f"graph6 body too short for n={n}")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return Graph(n, edges)


def to_graph6(G: Graph) -> str:
    """Encode in graph6 (n < 2^18 is plenty here)."""
    n = G.n
    if n <= 62:
        header = [n]
    elif n <= 258047:
        header = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        raise ParameterError(f"n={n} too large for this encoder")
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if (u, v) in G.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        b = 0
        for bit in bits[i : i + 6]:
            b = (b << 1) | bit
        body.append(b)
    return "".join(chr(63 + b) for b in header + body)
