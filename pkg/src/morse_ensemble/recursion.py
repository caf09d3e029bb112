"""Deletion recursions for the Morse ensemble polynomial.

Attaching a simplex sigma whose boundary is already present splits the
ensemble of the enlarged complex by the fate of sigma: critical (z_d times
the smaller ensemble) or matched with one of its facets tau.  The matchings
in the tau case are exactly the matchings of the doubly-punctured poset that
stay acyclic when the pair (tau, sigma) is adjoined; the ones that do not
form the correction term, a componentwise non-negative polynomial with its
own combinatorial structure: every non-liftable matching contains an
alternating facet/cofacet path from the other facets of sigma to the cells
of the base that contain tau.  For graphs and a bridge edge the correction
vanishes and the split becomes the bridge recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Set, Tuple

from .complexes import (
    Graph,
    Simplex,
    SimplicialComplex,
    face_poset,
    make_simplex,
    puncture,
)
from .errors import (
    BudgetExceededError,
    InternalConsistencyError,
    ParameterError,
    PreconditionError,
)
from .matchings import _closes_cycle, enumerate_me, enumerate_me_forced, iter_acyclic_matchings
from .polyring import MorsePolynomial, add, monomial, mul, scale, zero

__all__ = [
    "Attachment",
    "liftable_term",
    "correction_term",
    "top_face_me",
    "incidence_separated",
    "ObstructionRecord",
    "leading_obstruction",
    "obstruction_paths",
    "correction_by_paths",
    "bridge_recursion_me",
    "naive_overcount",
]


@dataclass(frozen=True)
class Attachment:
    """A simplex glued onto a complex that already holds its whole boundary."""

    base: SimplicialComplex
    sigma: Simplex

    def __post_init__(self) -> None:
        object.__setattr__(self, "sigma", make_simplex(self.sigma))
        if len(self.sigma) < 2:
            raise PreconditionError("attached simplex must have dimension >= 1")
        if self.sigma in self.base:
            raise PreconditionError(f"{self.sigma} is already in the base complex")
        for facet in combinations(self.sigma, len(self.sigma) - 1):
            if facet not in self.base:
                raise PreconditionError(
                    f"facet {facet} of {self.sigma} is missing from the base"
                )

    @property
    def dim(self) -> int:
        return len(self.sigma) - 1

    def result(self) -> SimplicialComplex:
        """The enlarged complex; sigma is maximal in it by construction."""
        return self.base.with_simplex(self.sigma)

    def facets_of_sigma(self) -> Tuple[Simplex, ...]:
        return tuple(combinations(self.sigma, len(self.sigma) - 1))


def _check_tau(a: Attachment, tau: Simplex) -> Simplex:
    tau = make_simplex(tau)
    if tau not in a.facets_of_sigma():
        raise PreconditionError(f"{tau} is not a facet of {a.sigma}")
    return tau


def _lift_split(
    a: Attachment, tau: Simplex, budget: int | None = None
) -> Tuple[MorsePolynomial, MorsePolynomial]:
    """(liftable, non-liftable) split of the doubly-punctured ensemble.

    Iterates the acyclic matchings of P(result) - {tau, sigma} once; each
    either stays acyclic when (tau, sigma) is adjoined in the full poset or
    closes a cycle in the layer of tau's dimension.
    """
    tau = _check_tau(a, tau)
    result = a.result()
    P = face_poset(result)
    Q = puncture(P, (tau, a.sigma))
    num_vars = result.dim + 1
    lift: Dict[Tuple[int, ...], int] = {}
    fail: Dict[Tuple[int, ...], int] = {}
    for matching, crit in iter_acyclic_matchings(Q, budget=budget):
        exps = crit + (0,) * (num_vars - len(crit))
        partner_up = {lo: hi for lo, hi in matching}
        partner_up[tau] = a.sigma
        bucket = fail if _closes_cycle(P, partner_up, tau) else lift
        bucket[exps] = bucket.get(exps, 0) + 1
    return MorsePolynomial(num_vars, lift), MorsePolynomial(num_vars, fail)


def liftable_term(
    a: Attachment, tau: Simplex, budget: int | None = None
) -> MorsePolynomial:
    """Ensemble over matchings of the doubly-punctured poset that lift.

    A matching of P(result) - {tau, sigma} lifts when adjoining the pair
    (tau, sigma) keeps it acyclic; its monomial keeps the punctured critical
    counts, because the adjoined pair leaves no cell critical.
    """
    return _lift_split(a, tau, budget)[0]


def correction_term(
    a: Attachment, tau: Simplex, budget: int | None = None
) -> MorsePolynomial:
    """Ensemble over the non-liftable matchings; componentwise non-negative."""
    return _lift_split(a, tau, budget)[1]


def top_face_me(
    a: Attachment, budget: int | None = None, workers: int = 1
) -> MorsePolynomial:
    """ME of the enlarged complex by recursion on the attached simplex.

    Splits on the fate of sigma: critical (z_d times the base ensemble) or
    matched to one of its facets (the liftable terms).  Equals the direct
    enumeration of the enlarged complex.
    """
    result = a.result()
    num_vars = result.dim + 1
    d = a.dim
    sigma_critical = mul(
        monomial(num_vars, tuple(1 if i == d else 0 for i in range(num_vars))),
        enumerate_me(face_poset(a.base), num_vars, budget=budget, workers=workers),
    )
    total = sigma_critical
    for tau in a.facets_of_sigma():
        total = add(total, liftable_term(a, tau, budget))
    return total


def _incidence_sets(
    a: Attachment, tau: Simplex
) -> Tuple[Tuple[Simplex, ...], Tuple[Simplex, ...]]:
    """(other facets of sigma, cells of the base that cover tau)."""
    tau = _check_tau(a, tau)
    sources = tuple(s for s in a.facets_of_sigma() if s != tau)
    targets = tuple(a.base.cofacets(tau))
    return sources, targets


def incidence_separated(a: Attachment, tau: Simplex) -> bool:
    """Whether the correction term for (a, tau) vanishes for reachability reasons.

    In the bipartite incidence graph on the top two grades of the base, with
    tau deleted, the other facets of sigma must not reach any base cell
    containing tau; every non-liftable matching contains such a connecting
    path, so separation forces a zero correction.
    """
    tau = _check_tau(a, tau)
    sources, targets = _incidence_sets(a, tau)
    if not targets:
        return True
    d = a.dim
    target_set = set(targets)
    seen: Set[Simplex] = set(sources)
    stack: List[Simplex] = list(sources)
    while stack:
        x = stack.pop()
        if x in target_set:
            return False
        if len(x) == d:  # a (d-1)-cell: move up to its cofacets in the base
            nbrs: Iterable[Simplex] = a.base.cofacets(x)
        else:  # a d-cell: move down to its facets, never back through tau
            nbrs = (f for f in combinations(x, d) if f != tau)
        for y in nbrs:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return True


@dataclass(frozen=True)
class ObstructionRecord:
    """Shortest-obstruction data for a non-separated (attachment, facet) pair.

    delta is the incidence distance from the other facets of sigma to the
    base cells containing tau (always odd), r = (delta + 1) / 2 is the number
    of pairs a shortest obstruction uses, and n_min counts the shortest
    obstruction paths.  exponent is where the minimal obstructions land in
    the correction term; top_degree is the correction's degree in the last
    variable.  The coefficient at exponent is at least n_min; strict records
    whether that bound is strict.
    """

    delta: int
    r: int
    n_min: int
    exponent: Tuple[int, ...]
    coefficient: int
    top_degree: int
    strict: bool


def leading_obstruction(
    a: Attachment, tau: Simplex, budget: int | None = None
) -> ObstructionRecord:
    """Distance, multiplicity, and coefficient bound of the shortest obstructions.

    Multi-source breadth-first search in the incidence graph (tau deleted)
    gives the distance delta and the number n_min of shortest paths; each
    shortest path is a minimal non-liftable matching, and distinct shortest
    paths give distinct matchings with the same critical counts, so the
    correction coefficient there is at least n_min.  The correction's degree
    in z_d is pinned at the base's d-cell count minus r: an obstruction needs
    at least r matched d-cells, and a shortest path achieves exactly r.
    """
    tau = _check_tau(a, tau)
    sources, targets = _incidence_sets(a, tau)
    d = a.dim
    if not targets:
        raise PreconditionError("separated pair: the correction term is zero")
    dist: Dict[Simplex, int] = {s: 0 for s in sources}
    ways: Dict[Simplex, int] = {s: 1 for s in sources}
    frontier: List[Simplex] = list(sources)
    level = 0
    target_set = set(targets)
    while frontier and not any(x in target_set for x in frontier):
        nxt: List[Simplex] = []
        for x in frontier:
            if len(x) == d:
                nbrs: Iterable[Simplex] = a.base.cofacets(x)
            else:
                nbrs = (f for f in combinations(x, d) if f != tau)
            for y in nbrs:
                if y in dist and dist[y] <= level:
                    continue
                if y not in dist:
                    dist[y] = level + 1
                    ways[y] = 0
                    nxt.append(y)
                ways[y] += ways[x]
        frontier = nxt
        level += 1
    if not frontier:
        raise PreconditionError("separated pair: the correction term is zero")
    delta = level
    if delta % 2 != 1:
        raise InternalConsistencyError(f"incidence distance {delta} should be odd")
    r = (delta + 1) // 2
    n_min = sum(ways[x] for x in frontier if x in target_set)
    f = face_poset(a.base).grade_counts(d + 1)
    exponent = tuple(f[: d - 1]) + (f[d - 1] - 1 - r, f[d] - r)
    correction = correction_term(a, tau, budget)
    coefficient = correction.terms.get(exponent, 0)
    if coefficient < n_min:
        raise InternalConsistencyError(
            f"correction coefficient {coefficient} below path count {n_min}"
        )
    top_degree = max(e[d] for e in correction.terms)
    if top_degree != f[d] - r:
        raise InternalConsistencyError(
            f"correction degree {top_degree} in the top variable, expected {f[d] - r}"
        )
    return ObstructionRecord(
        delta=delta,
        r=r,
        n_min=n_min,
        exponent=exponent,
        coefficient=coefficient,
        top_degree=top_degree,
        strict=coefficient > n_min,
    )


def obstruction_paths(
    a: Attachment, tau: Simplex, path_budget: int | None = None
) -> Tuple[Tuple[Tuple[Simplex, Simplex], ...], ...]:
    """The minimal family of alternating obstruction paths, as pair sequences.

    Each path alternates between the top two grades of the base: it starts at
    an other-facet of sigma, ends at a base cell containing tau, visits no
    cell twice, re-enters the start set and hits the target set only at its
    ends, and avoids tau.  A matching fails to lift exactly when it contains
    all the (facet, cofacet) pairs of such a path, so this family drives the
    inclusion-exclusion form of the correction term.  path_budget caps the
    family size; exceeding it raises.
    """
    tau = _check_tau(a, tau)
    sources, targets = _incidence_sets(a, tau)
    d = a.dim
    source_set = set(sources)
    target_set = set(targets)
    paths: List[Tuple[Tuple[Simplex, Simplex], ...]] = []
    used: Set[Simplex] = set()
    trail: List[Tuple[Simplex, Simplex]] = []

    def extend_down(t: Simplex) -> None:
        # t is the cofacet just matched; the path must stop at a target.
        if t in target_set:
            paths.append(tuple(trail))
            if path_budget is not None and len(paths) > path_budget:
                raise BudgetExceededError(
                    f"obstruction path budget {path_budget} exceeded"
                )
            return
        for rho in combinations(t, d):
            if rho == tau or rho in used or rho in source_set:
                continue
            extend_up(rho)

    def extend_up(rho: Simplex) -> None:
        used.add(rho)
        for t in a.base.cofacets(rho):
            if t in used:
                continue
            used.add(t)
            trail.append((rho, t))
            extend_down(t)
            trail.pop()
            used.discard(t)
        used.discard(rho)

    for rho in sorted(sources):
        extend_up(rho)
    return tuple(paths)


def correction_by_paths(
    a: Attachment,
    tau: Simplex,
    budget: int | None = None,
    path_budget: int | None = None,
) -> MorsePolynomial:
    """The correction term by inclusion-exclusion over obstruction paths.

    The non-liftable matchings are the union, over the minimal path family,
    of the matchings containing a given path's pairs; forcing a pair set that
    clashes or closes a cycle contributes the zero polynomial, which is
    exactly the forced-enumeration convention.
    """
    tau = _check_tau(a, tau)
    family = obstruction_paths(a, tau, path_budget)
    result = a.result()
    Q = puncture(face_poset(result), (tau, a.sigma))
    num_vars = result.dim + 1
    total = zero(num_vars)
    for size in range(1, len(family) + 1):
        sign = 1 if size % 2 == 1 else -1
        for subset in combinations(family, size):
            forced: Set[Tuple[Simplex, Simplex]] = set()
            for path in subset:
                forced.update(path)
            part = enumerate_me_forced(Q, sorted(forced), num_vars, budget)
            total = add(total, scale(part, sign))
    return total


def _endpoint_cases(
    G: Graph, edge: Tuple[int, int], budget: int | None, workers: int
) -> MorsePolynomial:
    """Sum of the two matched-endpoint cases of an edge removal."""
    e_cell = make_simplex(edge)
    P = face_poset(G.to_complex())
    total = zero(2)
    for endpoint in e_cell:
        Q = puncture(P, ((endpoint,), e_cell))
        total = add(total, enumerate_me(Q, 2, budget=budget, workers=workers))
    return total


def _check_edge(G: Graph, edge) -> Tuple[int, int]:
    """Normalize an explicit edge argument; reject missing or malformed ones."""
    try:
        u, v = edge
    except (TypeError, ValueError):
        raise ParameterError("an explicit edge (u, v) is required") from None
    pair = (min(u, v), max(u, v))
    if pair not in G.edges:
        raise ParameterError(f"{pair} is not an edge of the graph")
    return pair


def bridge_recursion_me(
    G: Graph,
    edge: Tuple[int, int],
    budget: int | None = None,
    workers: int = 1,
) -> MorsePolynomial:
    """ME of a graph by recursion on a bridge.

    A matching either leaves the bridge critical (z1 times the ensemble of
    the graph without it) or pairs it with one endpoint; for a bridge every
    acyclic matching of the punctured poset stays acyclic after the pairing,
    because a closed gradient path would have to cross the matched bridge
    twice.  Deleting a non-bridge breaks this, which naive_overcount
    measures, so non-bridges are rejected.
    """
    edge = _check_edge(G, edge)
    if not G.is_bridge(edge):
        raise PreconditionError(f"{edge} is not a bridge")
    critical_case = mul(
        monomial(2, (0, 1)),
        enumerate_me(face_poset(G.without_edge(edge).to_complex()), 2,
                     budget=budget, workers=workers),
    )
    return add(critical_case, _endpoint_cases(G, edge, budget, workers))


def naive_overcount(
    G: Graph,
    edge: Tuple[int, int],
    budget: int | None = None,
    workers: int = 1,
) -> MorsePolynomial:
    """How far the bridge recursion overshoots when applied to any edge.

    The recursion right-hand side minus the true ensemble; componentwise
    non-negative, counting the matchings of the punctured posets whose
    endpoint pairing closes a gradient cycle.  Zero exactly when every such
    matching lifts — bridges in particular.
    """
    edge = _check_edge(G, edge)
    rhs = add(
        mul(monomial(2, (0, 1)),
            enumerate_me(face_poset(G.without_edge(edge).to_complex()), 2,
                         budget=budget, workers=workers)),
        _endpoint_cases(G, edge, budget, workers),
    )
    me = enumerate_me(face_poset(G.to_complex()), 2, budget=budget, workers=workers)
    diff = {e: rhs.terms.get(e, 0) - me.terms.get(e, 0)
            for e in set(rhs.terms) | set(me.terms)}
    if any(c < 0 for c in diff.values()):
        raise InternalConsistencyError("recursion undershot the true ensemble")
    return MorsePolynomial(2, diff)