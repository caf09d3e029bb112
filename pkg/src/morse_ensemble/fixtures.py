"""Named built-in graphs, complexes, attachments, and filtrations.

The registry backs the command-line --fixture flag and the test corpora.
The witness pairs ship with the exact edge sets that exhibit each
separation: a Laplacian-cospectral pair with different Tutte polynomials,
a pair sharing Tutte and independence polynomials but separated by the
independence-complex ensemble, and a Whitney-equivalent pair separated by
the clique-complex ensemble.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterator, List, Tuple, Union

from .complexes import (
    Graph,
    Simplex,
    SimplicialComplex,
    boundary_simplex,
    complete_graph,
    cycle_graph,
    dunce_hat,
    from_facets,
    hypercube_graph,
    path_graph,
    rp2_6,
    simplex,
    star_graph,
    torus_7,
)
from .errors import ParameterError
from .recursion import Attachment

__all__ = [
    "FIXTURES",
    "fixture",
    "fixture_names",
    "cospectral_pair",
    "matroid_twin_pair",
    "whitney_pair",
    "cone_disk",
    "triangle_filtration",
    "tetrahedron_filtration",
    "cycle_closure",
    "two_triangle_attachment",
    "chorded_cycle_attachment",
    "attachment_corpus",
]

FixtureValue = Union[Graph, SimplicialComplex]


def cospectral_pair() -> Tuple[Graph, Graph]:
    """Laplacian-cospectral non-isomorphic pair: equal ensembles, unequal Tutte.

    The first contains a triangle, the second is triangle-free; their
    independence complexes even have different homotopy types.
    """
    return (
        Graph(6, [(0, 1), (0, 2), (0, 3), (0, 5), (1, 4), (2, 3), (4, 5)]),
        Graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 4), (2, 5)]),
    )


def matroid_twin_pair() -> Tuple[Graph, Graph]:
    """Same Tutte and independence polynomials, different independence ensembles."""
    return (
        Graph(6, [(0, 1), (0, 2), (0, 3), (0, 5), (1, 5), (3, 4)]),
        Graph(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5)]),
    )


def whitney_pair() -> Tuple[Graph, Graph]:
    """Whitney-equivalent pair whose clique-complex ensembles differ."""
    return (
        Graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 5), (3, 4), (3, 5)]),
        Graph(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (3, 4), (3, 5), (4, 5)]),
    )


def cone_disk() -> SimplicialComplex:
    """Three triangles sharing vertex 0: a disk coning off a 3-cycle."""
    return from_facets([(0, 1, 2), (0, 1, 3), (0, 2, 3)])


def _graph_fixtures() -> Dict[str, Callable[[], Graph]]:
    registry: Dict[str, Callable[[], Graph]] = {}
    for n in range(2, 8):
        registry[f"P{n}"] = (lambda k: lambda: path_graph(k))(n)
    for n in range(3, 8):
        registry[f"C{n}"] = (lambda k: lambda: cycle_graph(k))(n)
    for n in range(2, 6):
        registry[f"K{n}"] = (lambda k: lambda: complete_graph(k))(n)
    registry["K1_3"] = lambda: star_graph(3)
    for n in range(1, 5):
        registry[f"Q{n}"] = (lambda k: lambda: hypercube_graph(k))(n)
    pairs = {
        "cospectral": cospectral_pair,
        "matroid_twin": matroid_twin_pair,
        "whitney": whitney_pair,
    }
    for name, pair in pairs.items():
        registry[f"{name}_1"] = (lambda p: lambda: p()[0])(pair)
        registry[f"{name}_2"] = (lambda p: lambda: p()[1])(pair)
    return registry


FIXTURES: Dict[str, Callable[[], FixtureValue]] = {
    **_graph_fixtures(),
    "delta_2": lambda: simplex(2),
    "delta_3": lambda: simplex(3),
    "boundary_delta_2": lambda: boundary_simplex(2),
    "boundary_delta_3": lambda: boundary_simplex(3),
    "cone_disk": cone_disk,
    "dunce_hat": dunce_hat,
    "torus_7": torus_7,
    "rp2_6": rp2_6,
}


def fixture_names() -> Tuple[str, ...]:
    return tuple(sorted(FIXTURES))


def fixture(name: str) -> FixtureValue:
    """Look up a built-in graph or complex by registry name."""
    try:
        build = FIXTURES[name]
    except KeyError:
        raise ParameterError(
            f"unknown fixture {name!r}; available: {', '.join(fixture_names())}"
        ) from None
    return build()


def triangle_filtration() -> Tuple[SimplicialComplex, Tuple[Simplex, ...]]:
    """A 3-cycle closed into a solid triangle by one attachment."""
    base = from_facets([(0, 1), (0, 2), (1, 2)])
    return base, ((0, 1, 2),)


def tetrahedron_filtration() -> Tuple[SimplicialComplex, Tuple[Simplex, ...]]:
    """The complete graph on 1..4 filled into a 2-sphere, one triangle at a time.

    The first three attachments are deaths killing the independent 1-cycles;
    the last is a birth whose boundary already bounds in the disk.
    """
    base = from_facets([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    return base, ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4))


def cycle_closure(n: int) -> Attachment:
    """A path on n vertices closed into the n-cycle by its missing edge."""
    if n < 3:
        raise ParameterError(f"cycle closure needs n >= 3, got {n}")
    base = from_facets([(i, i + 1) for i in range(n - 1)])
    return Attachment(base, (0, n - 1))


def two_triangle_attachment() -> Attachment:
    """Third triangle of the cone disk as an attachment; obstruction distance 3."""
    sigma = (0, 2, 3)
    return Attachment(cone_disk().without_simplex(sigma), sigma)


def chorded_cycle_attachment() -> Attachment:
    """A chord closing across a 7-cycle; obstruction distance 5."""
    base = from_facets([(i, i + 1) for i in range(6)] + [(0, 6)])
    return Attachment(base, (0, 3))


def _triangle_attachments(K: SimplicialComplex) -> Iterator[Attachment]:
    """Every single-triangle attachment whose boundary K already carries."""
    from itertools import combinations

    for sigma in combinations(sorted(v[0] for v in K.cells(0)), 3):
        if sigma in K:
            continue
        if all(f in K for f in combinations(sigma, 2)):
            yield Attachment(K, sigma)


def attachment_corpus() -> Tuple[Attachment, ...]:
    """Deterministic attachment corpus for exactness and obstruction tests.

    Growth steps of the solid triangle and the tetrahedron boundary, cycle
    closures, the two obstruction fixtures, and every triangle attachment
    onto a spread of 2-complexes on at most five vertices.
    """
    corpus: List[Attachment] = []
    base, steps = triangle_filtration()
    for sigma in steps:
        a = Attachment(base, sigma)
        corpus.append(a)
        base = a.result()
    base, steps = tetrahedron_filtration()
    for sigma in steps:
        a = Attachment(base, sigma)
        corpus.append(a)
        base = a.result()
    for n in range(3, 7):
        corpus.append(cycle_closure(n))
    corpus.append(two_triangle_attachment())
    corpus.append(chorded_cycle_attachment())
    seeds = (
        from_facets([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (1, 4)]),
        from_facets([(0, 1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]),
        from_facets([(0, 1, 2), (0, 1, 3), (2, 3), (2, 4), (3, 4)]),
        from_facets([(0, 1, 2), (0, 2, 3), (0, 1, 4), (1, 2, 4), (3, 4)]),
        boundary_simplex(3).without_simplex((1, 2, 3)),
    )
    for K in seeds:
        corpus.extend(_triangle_attachments(K))
    return tuple(corpus)
