"""Perfect matchings, optimal critical counts, and reduction sequences.

A matching is perfect over a coefficient field when its critical-cell counts
equal the Betti numbers — the smallest counts homology permits.  The perfect
coefficient is the number of such matchings, one exact coefficient of the
ensemble polynomial.  Attaching a top cell moves this coefficient by a
birth/death recursion, and a reduction calculus ties it to geometry:
elementary collapses plus removals of maximal cells whose boundary class
already vanishes drive a complex down to a single vertex exactly when the
perfect coefficient is positive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from .complexes import Simplex, SimplicialComplex, face_poset, make_simplex
from .errors import (
    BudgetExceededError,
    InternalConsistencyError,
    ParameterError,
    PreconditionError,
)
from .homology import betti, boundary_class_vanishes, reduced_betti
from .matchings import (
    _components_of,
    count_with_critical,
    enumerate_me,
    find_collapsing_matching,
)
from .polyring import coefficient, min_total_degree
from .recursion import Attachment, liftable_term

__all__ = [
    "betti_target",
    "perfect_coefficient",
    "PerfectRecursionRecord",
    "perfect_coefficient_recursion_check",
    "optimal_count",
    "OptimalRecursionRecord",
    "optimal_count_recursion_check",
    "ReductionMove",
    "ReductionResult",
    "find_reduction_sequence",
    "reduction_iff_perfect_check",
    "reduction_to_json",
    "reduction_from_json",
    "replay_reduction",
]


def betti_target(K: SimplicialComplex, field: int | None = None) -> Tuple[int, ...]:
    """The Betti numbers of K over the field, as a critical-count target."""
    b = betti(K, field)
    return tuple(b[i] for i in range(K.dim + 1))


def perfect_coefficient(
    K: SimplicialComplex,
    field: int | None = None,
    budget: int | None = None,
) -> int:
    """Number of matchings whose critical counts equal the Betti numbers.

    When the target is a single critical vertex, such matchings exist exactly
    when the complex collapses to a point, so a failed collapse search settles
    the zero case without touching the matching walk.
    """
    target = betti_target(K, field)
    if target == (1,) + (0,) * K.dim and find_collapsing_matching(K) is None:
        return 0
    return count_with_critical(face_poset(K), target, budget)


@dataclass(frozen=True)
class PerfectRecursionRecord:
    """Both sides of the perfect-coefficient recursion for one attachment.

    kind classifies the attachment homologically: "birth" when the new cell
    raises the Betti number in its own dimension, "death" when it lowers the
    one below (no other change is possible).  lhs is the perfect coefficient
    of the enlarged complex; critical_case is the contribution with the new
    cell critical (always zero for deaths); matched_cases holds one liftable
    contribution per facet.  lhs equals their sum.
    """

    kind: str
    lhs: int
    critical_case: int
    matched_cases: Tuple[int, ...]


def classify_attachment(a: Attachment, field: int | None = None) -> str:
    """"birth" or "death": the homological effect of one attachment.

    Attaching a d-cell either creates a d-dimensional homology class or
    destroys a (d-1)-dimensional one; any other Betti change is impossible
    and reported as an internal error.
    """
    d = a.dim
    before = betti(a.base, field)
    after = betti(a.result(), field)
    top = max(a.result().dim, a.base.dim) + 1
    delta = tuple(after[i] - before[i] for i in range(top + 1))
    if delta == tuple(1 if i == d else 0 for i in range(top + 1)):
        return "birth"
    if delta == tuple(-1 if i == d - 1 else 0 for i in range(top + 1)):
        return "death"
    raise InternalConsistencyError(
        f"attachment changed Betti numbers by {delta}; expected one birth or death"
    )


def perfect_coefficient_recursion_check(
    a: Attachment,
    field: int | None = None,
    budget: int | None = None,
) -> PerfectRecursionRecord:
    """Verify the attachment recursion at the Betti exponent.

    Splitting on the fate of the attached cell, the perfect coefficient of
    the enlarged complex must equal the count of base matchings at the Betti
    target with the top entry lowered (zero when that would go negative, as
    it always does for deaths) plus the Betti coefficient of every liftable
    term.  Returns the verified record; a mismatch is an internal error.
    """
    d = a.dim
    result = a.result()
    target = betti_target(result, field)
    lhs = perfect_coefficient(result, field, budget)
    lowered = tuple(t - 1 if i == d else t for i, t in enumerate(target))
    critical_case = count_with_critical(face_poset(a.base), lowered, budget)
    matched_cases = tuple(
        coefficient(liftable_term(a, tau, budget), target)
        for tau in a.facets_of_sigma()
    )
    kind = classify_attachment(a, field)
    if lhs != critical_case + sum(matched_cases):
        raise InternalConsistencyError(
            f"perfect recursion mismatch: {lhs} != "
            f"{critical_case} + {sum(matched_cases)}"
        )
    if kind == "death" and critical_case != 0:
        raise InternalConsistencyError(
            "death attachment took a contribution from the critical branch"
        )
    return PerfectRecursionRecord(kind, lhs, critical_case, matched_cases)


def optimal_count(K: SimplicialComplex, budget: int | None = None) -> int:
    """The fewest critical cells any acyclic matching on K achieves."""
    me = enumerate_me(face_poset(K), K.dim + 1, budget=budget)
    degree = min_total_degree(me)
    if degree is None:  # unreachable: the empty matching always contributes
        raise PreconditionError("ensemble polynomial is zero")
    return degree


@dataclass(frozen=True)
class OptimalRecursionRecord:
    """Both sides of the optimal-count recursion for one attachment.

    lhs is the optimal critical count of the enlarged complex;
    critical_branch leaves the new cell critical (one more than the base
    optimum); matched_branches holds, per facet, the smallest total degree
    in the liftable term, or None when that term is the zero polynomial.
    lhs equals the least branch.
    """

    lhs: int
    critical_branch: int
    matched_branches: Tuple[Optional[int], ...]


def optimal_count_recursion_check(
    a: Attachment, budget: int | None = None
) -> OptimalRecursionRecord:
    """Verify the attachment recursion for the optimal critical count.

    The optimum over the enlarged complex either leaves the new cell
    critical or pairs it with a facet; empty liftable terms drop out of the
    minimum.  Returns the verified record; a mismatch is an internal error.
    """
    lhs = optimal_count(a.result(), budget)
    critical_branch = 1 + optimal_count(a.base, budget)
    matched_branches = tuple(
        min_total_degree(liftable_term(a, tau, budget))
        for tau in a.facets_of_sigma()
    )
    best = min(
        [critical_branch] + [b for b in matched_branches if b is not None]
    )
    if lhs != best:
        raise InternalConsistencyError(
            f"optimal recursion mismatch: {lhs} != {best}"
        )
    return OptimalRecursionRecord(lhs, critical_branch, matched_branches)


@dataclass(frozen=True)
class ReductionMove:
    """One reduction step: a free-pair collapse or a maximal-cell removal."""

    kind: str  # "collapse", "removal", or "strong-removal"
    cells: Tuple[Simplex, ...]  # (free face, its coface) or (maximal cell,)


@dataclass(frozen=True)
class ReductionResult:
    """Outcome of the reduction search.

    status is "found" with the move sequence, "none" when the exhausted
    search space holds no sequence, or "inconclusive" when the budget ran
    out first — which, unlike "none", says nothing about existence.
    """

    status: str
    moves: Tuple[ReductionMove, ...]
    states: int


class _SearchBudgetExhausted(Exception):
    pass


def find_reduction_sequence(
    K: SimplicialComplex,
    field: int | None = None,
    strong_only: bool = False,
    budget: int | None = None,
) -> ReductionResult:
    """Search for a move sequence reducing K to a single vertex.

    Moves, tried collapses first, are elementary collapses of free pairs and
    removals of maximal cells of dimension >= 1 whose boundary class vanishes
    over the field in what remains; with strong_only the removal additionally
    requires the reduced homology of the remainder to vanish one dimension
    below the removed cell.  Depth-first search with memoization on the cell
    set; budget caps the number of distinct states expanded, and exhausting
    it abandons the search as inconclusive rather than mislabeling it "none".
    """
    if len(_components_of(K)) != 1:
        raise PreconditionError("reduction search needs a connected complex")
    removal_kind = "strong-removal" if strong_only else "removal"
    memo: Dict[FrozenSet[Simplex], Optional[Tuple[ReductionMove, ...]]] = {}
    state = {"expanded": 0}

    def search(cells: FrozenSet[Simplex]) -> Optional[Tuple[ReductionMove, ...]]:
        if len(cells) == 1:
            return ()
        if cells in memo:
            return memo[cells]
        state["expanded"] += 1
        if budget is not None and state["expanded"] > budget:
            raise _SearchBudgetExhausted
        current = SimplicialComplex(tuple(cells))
        for tau, sig in current.free_pairs():
            rest = search(cells - {tau, sig})
            if rest is not None:
                found = (ReductionMove("collapse", (tau, sig)),) + rest
                memo[cells] = found
                return found
        for sig in current.facets():
            if len(sig) < 2:
                continue
            remainder = current.without_simplex(sig)
            if not boundary_class_vanishes(remainder, sig, field):
                continue
            if strong_only and reduced_betti(remainder, len(sig) - 2, field) != 0:
                continue
            rest = search(cells - {sig})
            if rest is not None:
                found = (ReductionMove(removal_kind, (sig,)),) + rest
                memo[cells] = found
                return found
        memo[cells] = None
        return None

    try:
        moves = search(frozenset(K.simplices))
    except _SearchBudgetExhausted:
        return ReductionResult("inconclusive", (), state["expanded"])
    if moves is None:
        return ReductionResult("none", (), state["expanded"])
    return ReductionResult("found", moves, state["expanded"])


def reduction_iff_perfect_check(
    K: SimplicialComplex,
    field: int | None = None,
    budget: int | None = None,
) -> bool:
    """The shared truth value of "reducible to a vertex" and "perfect".

    A reduction sequence with general removals exists exactly when the
    perfect coefficient is positive; the two are computed independently and
    a disagreement is an internal error.  An inconclusive search (budget)
    raises rather than standing in for a real answer.
    """
    result = find_reduction_sequence(K, field, strong_only=False, budget=budget)
    if result.status == "inconclusive":
        raise BudgetExceededError(
            f"reduction search inconclusive after {result.states} states"
        )
    reducible = result.status == "found"
    perfect = perfect_coefficient(K, field, budget) > 0
    if reducible != perfect:
        raise InternalConsistencyError(
            f"reducibility ({reducible}) disagrees with perfectness ({perfect})"
        )
    return reducible


def reduction_to_json(result: ReductionResult) -> str:
    """Serialize a reduction outcome as a JSON certificate."""
    return json.dumps(
        {
            "status": result.status,
            "states": result.states,
            "moves": [
                {"kind": m.kind, "cells": [list(c) for c in m.cells]}
                for m in result.moves
            ],
        }
    )


def reduction_from_json(text: str) -> ReductionResult:
    """Parse a JSON certificate back into a reduction outcome."""
    try:
        data = json.loads(text)
        moves = tuple(
            ReductionMove(
                str(m["kind"]),
                tuple(make_simplex(c) for c in m["cells"]),
            )
            for m in data["moves"]
        )
        return ReductionResult(str(data["status"]), moves, int(data["states"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParameterError(f"malformed reduction certificate: {exc}") from exc


def replay_reduction(
    K: SimplicialComplex,
    moves: Iterable[ReductionMove],
    field: int | None = None,
) -> bool:
    """Check a move sequence: every step legal and the end a single vertex.

    Collapses need a free pair, removals a maximal cell of dimension >= 1
    whose boundary class vanishes in the remainder, strong removals also the
    vanishing of the remainder's reduced homology one dimension below.
    Illegal or inapplicable moves make the certificate invalid (False), not
    an error; only a structurally malformed move raises.
    """
    current = K
    for move in moves:
        if move.kind == "collapse":
            if len(move.cells) != 2:
                raise ParameterError("collapse move needs exactly two cells")
            tau, sig = move.cells
            if (tau, sig) not in current.free_pairs():
                return False
            current = current.without_pair(tau, sig)
        elif move.kind in ("removal", "strong-removal"):
            if len(move.cells) != 1:
                raise ParameterError("removal move needs exactly one cell")
            (sig,) = move.cells
            if len(sig) < 2 or sig not in current.facets():
                return False
            remainder = current.without_simplex(sig)
            if not boundary_class_vanishes(remainder, sig, field):
                return False
            if move.kind == "strong-removal" and (
                reduced_betti(remainder, len(sig) - 2, field) != 0
            ):
                return False
            current = remainder
        else:
            raise ParameterError(f"unknown reduction move kind {move.kind!r}")
    return current.n_cells() == 1 and current.dim == 0
