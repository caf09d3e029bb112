"""Brute-force enumeration of acyclic matchings on graded posets.

The enumeration is a depth-first include/skip walk over the cover pairs in a
fixed canonical order (lower grade, lower id, upper id), pruning pairs whose
elements are already matched and testing acyclicity incrementally on each
insertion.  Every visited node of the walk is itself a valid acyclic matching,
so each one contributes a monomial of critical-cell counts.

A matching is acyclic exactly when, for every grade i, the digraph on
upward-matched i-cells (arc u -> w when w is a facet of u's partner, w != u,
and w is itself matched upward) has no directed cycle.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, Iterator, List, Sequence, Set, Tuple

from .complexes import GradedPoset, Simplex, SimplicialComplex, face_poset
from .errors import BudgetExceededError, PreconditionError, StructuralError
from .polyring import MorsePolynomial

__all__ = [
    "Matching",
    "is_acyclic",
    "iter_acyclic_matchings",
    "enumerate_me",
    "enumerate_me_forced",
    "count_matchings",
    "count_with_critical",
    "find_collapsing_matching",
    "canonical_pairs",
]

Matching = Tuple[Tuple[Simplex, Simplex], ...]


def canonical_pairs(P: GradedPoset) -> Matching:
    """Cover pairs in the canonical enumeration order."""
    return tuple(
        sorted(
            ((lo, hi) for lo, his in P.up.items() for hi in his),
            key=lambda pair: (P.dims[pair[0]], pair[0], pair[1]),
        )
    )


def _validate_matching(P: GradedPoset, pairs: Iterable[Tuple[Simplex, Simplex]]) -> Matching:
    pairs = tuple(pairs)
    used: Set[Simplex] = set()
    for lo, hi in pairs:
        if not P.is_cover(lo, hi):
            raise StructuralError(f"({lo}, {hi}) is not a cover relation of the poset")
        if lo in used or hi in used:
            raise StructuralError(f"element reused by pair ({lo}, {hi})")
        used.add(lo)
        used.add(hi)
    return pairs


def is_acyclic(P: GradedPoset, matching: Iterable[Tuple[Simplex, Simplex]]) -> bool:
    """Full acyclicity check of a valid matching, layer by layer."""
    pairs = _validate_matching(P, matching)
    partner_up: Dict[Simplex, Simplex] = {lo: hi for lo, hi in pairs}

    def successors(x: Simplex) -> List[Simplex]:
        return [y for y in P.down[partner_up[x]] if y != x and y in partner_up]

    # Three-color DFS per layer; layers are independent because arcs stay
    # within one grade.
    color: Dict[Simplex, int] = {}
    for node in partner_up:
        if color.get(node, 0) != 0:
            continue
        stack: List[Tuple[Simplex, Iterator[Simplex]]] = [(node, iter(successors(node)))]
        color[node] = 1
        while stack:
            current, it = stack[-1]
            advanced = False
            for nxt in it:
                c = color.get(nxt, 0)
                if c == 1:
                    return False
                if c == 0:
                    color[nxt] = 1
                    stack.append((nxt, iter(successors(nxt))))
                    advanced = True
                    break
            if not advanced:
                color[current] = 2
                stack.pop()
    return True


def _closes_cycle(
    P: GradedPoset, partner_up: Dict[Simplex, Simplex], new_lo: Simplex
) -> bool:
    """Whether adding new_lo (already in partner_up) created a layer cycle.

    The layer digraph was acyclic before, so any new cycle passes through
    new_lo; a DFS from it suffices.
    """

    def successors(x: Simplex) -> List[Simplex]:
        return [y for y in P.down[partner_up[x]] if y != x and y in partner_up]

    seen: Set[Simplex] = set()
    stack = successors(new_lo)
    while stack:
        x = stack.pop()
        if x == new_lo:
            return True
        if x in seen:
            continue
        seen.add(x)
        stack.extend(successors(x))
    return False


def iter_acyclic_matchings(
    P: GradedPoset,
    forced: Iterable[Tuple[Simplex, Simplex]] = (),
    budget: int | None = None,
    _first_index: int | None = None,
) -> Iterator[Tuple[Matching, Tuple[int, ...]]]:
    """Yield (matching, critical-cell counts) for every acyclic matching.

    Each yielded matching contains the forced pairs; forced must itself be a
    valid acyclic matching.  The critical counts cover grades 0..max_dim.
    budget caps the number of matchings yielded; exceeding it raises rather
    than truncating.  _first_index is the enumeration-internal work split: it
    restricts output to matchings whose first non-forced pair (in canonical
    order) is exactly that one.
    """
    forced = _validate_matching(P, forced)
    if not is_acyclic(P, forced):
        raise PreconditionError("forced pairs are not an acyclic matching")
    num_grades = P.max_dim() + 1
    totals = list(P.grade_counts(num_grades))
    pairs = canonical_pairs(P)

    partner_up: Dict[Simplex, Simplex] = {}
    used: Set[Simplex] = set()
    matched_per_grade = [0] * num_grades
    current: List[Tuple[Simplex, Simplex]] = []

    def include(lo: Simplex, hi: Simplex) -> None:
        partner_up[lo] = hi
        used.add(lo)
        used.add(hi)
        matched_per_grade[P.dims[lo]] += 1
        matched_per_grade[P.dims[hi]] += 1
        current.append((lo, hi))

    def exclude(lo: Simplex, hi: Simplex) -> None:
        del partner_up[lo]
        used.discard(lo)
        used.discard(hi)
        matched_per_grade[P.dims[lo]] -= 1
        matched_per_grade[P.dims[hi]] -= 1
        current.pop()

    for lo, hi in forced:
        include(lo, hi)

    count = 0

    def critical() -> Tuple[int, ...]:
        return tuple(t - m for t, m in zip(totals, matched_per_grade))

    def walk(start: int) -> Iterator[Tuple[Matching, Tuple[int, ...]]]:
        nonlocal count
        count += 1
        if budget is not None and count > budget:
            raise BudgetExceededError(
                f"matching budget {budget} exceeded; partial results discarded"
            )
        yield tuple(current), critical()
        for j in range(start, len(pairs)):
            lo, hi = pairs[j]
            if lo in used or hi in used:
                continue
            include(lo, hi)
            if not _closes_cycle(P, partner_up, lo):
                yield from walk(j + 1)
            exclude(lo, hi)

    if _first_index is None:
        yield from walk(0)
        return

    # Work-split mode: force pairs[_first_index] as the first free pair.
    lo, hi = pairs[_first_index]
    if lo in used or hi in used:
        return
    include(lo, hi)
    if not _closes_cycle(P, partner_up, lo):
        yield from walk(_first_index + 1)
    exclude(lo, hi)


def _assemble(
    it: Iterator[Tuple[Matching, Tuple[int, ...]]], num_vars: int
) -> Tuple[Dict[Tuple[int, ...], int], int]:
    terms: Dict[Tuple[int, ...], int] = {}
    count = 0
    pad = None
    for _, crit in it:
        if pad is None:
            pad = (0,) * (num_vars - len(crit))
        exps = crit + pad
        terms[exps] = terms.get(exps, 0) + 1
        count += 1
    return terms, count


def _enumerate_task(
    job: Tuple[GradedPoset, int, Matching, int, int | None]
) -> Tuple[Dict[Tuple[int, ...], int], int]:
    P, num_vars, forced, first_index, budget = job
    it = iter_acyclic_matchings(P, forced, budget, _first_index=first_index)
    return _assemble(it, num_vars)


def enumerate_me(
    P: GradedPoset,
    num_vars: int | None = None,
    forced: Iterable[Tuple[Simplex, Simplex]] = (),
    budget: int | None = None,
    workers: int = 1,
) -> MorsePolynomial:
    """Sum z_0^{c_0} ... z_d^{c_d} over all acyclic matchings containing forced.

    num_vars defaults to max grade + 1.  With workers > 1 the walk is
    partitioned by the index of the first included non-forced pair and merged
    by polynomial addition; the result is identical to the serial walk.
    """
    forced = tuple(forced)
    if num_vars is None:
        num_vars = P.max_dim() + 1
    if num_vars < P.max_dim() + 1:
        raise PreconditionError(
            f"num_vars {num_vars} cannot hold grades up to {P.max_dim()}"
        )
    if workers <= 1:
        terms, _ = _assemble(iter_acyclic_matchings(P, forced, budget), num_vars)
        return MorsePolynomial(num_vars, terms)

    pairs = canonical_pairs(P)
    jobs = [(P, num_vars, forced, j, budget) for j in range(len(pairs))]
    merged: Dict[Tuple[int, ...], int] = {}
    total = 1  # the forced-only matching, added back below
    if jobs:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for terms, count in pool.map(_enumerate_task, jobs):
                total += count
                for exps, c in terms.items():
                    merged[exps] = merged.get(exps, 0) + c
    if budget is not None and total > budget:
        raise BudgetExceededError(
            f"matching budget {budget} exceeded; partial results discarded"
        )
    # The split tasks cover every matching with at least one free pair; the
    # forced-only matching is the single remaining one.
    base_crit = morse_vector(P, forced)
    base = base_crit + (0,) * (num_vars - len(base_crit))
    merged[base] = merged.get(base, 0) + 1
    return MorsePolynomial(num_vars, merged)


def enumerate_me_forced(
    P: GradedPoset,
    forced: Iterable[Tuple[Simplex, Simplex]],
    num_vars: int | None = None,
    budget: int | None = None,
) -> MorsePolynomial:
    """ME restricted to acyclic matchings containing forced.

    A forced set that is not a matching (reused element) or not acyclic
    contributes nothing, so the zero polynomial comes back; a pair that is not
    a cover relation at all is a caller error and raises.
    """
    forced = tuple(forced)
    if num_vars is None:
        num_vars = P.max_dim() + 1
    used: Set[Simplex] = set()
    for lo, hi in forced:
        if not P.is_cover(lo, hi):
            raise StructuralError(f"({lo}, {hi}) is not a cover relation of the poset")
        if lo in used or hi in used:
            return MorsePolynomial(num_vars, {})
        used.add(lo)
        used.add(hi)
    if not is_acyclic(P, forced):
        return MorsePolynomial(num_vars, {})
    return enumerate_me(P, num_vars, forced, budget)


def count_matchings(P: GradedPoset, budget: int | None = None) -> int:
    """|A(P)|: the number of acyclic matchings, empty one included."""
    count = 0
    for _ in iter_acyclic_matchings(P, (), budget):
        count += 1
    return count


def count_with_critical(
    P: GradedPoset, target: Sequence[int], budget: int | None = None
) -> int:
    """Exact count of acyclic matchings whose critical-cell counts equal target.

    This is one coefficient of the full polynomial, computed without building
    the rest of it.  A matching with the target counts uses a fixed number of
    pairs per grade step; since the digraph of grade step i involves only the
    step-i pairs, the layers interact solely through which middle-grade cells
    they consume.  The count therefore factors into a layered sum: enumerate
    the step-i part, then recurse on the remaining steps, memoized on the set
    of grade-(i+1) cells the step-i part used up.  budget caps the number of
    search states visited (memoized subtrees are only paid for once);
    exceeding it raises rather than truncating.
    """
    num_grades = P.max_dim() + 1
    target = tuple(target)
    if len(target) < num_grades:
        raise PreconditionError(
            f"target {target} does not cover grades 0..{num_grades - 1}"
        )
    if any(t != 0 for t in target[num_grades:]) or any(t < 0 for t in target):
        return 0  # no matching has negative or out-of-grade critical counts
    target = target[:num_grades]
    needed = [t - g for t, g in zip(target, P.grade_counts(num_grades))]
    # needed[i] = -(pairs on step i-1) - (pairs on step i); solve for the
    # per-step pair counts and reject impossible targets outright.
    quota = [0] * max(num_grades - 1, 0)
    carry = 0
    for i in range(num_grades - 1):
        quota[i] = -needed[i] - carry
        carry = quota[i]
    if any(x < 0 for x in quota) or -needed[-1] != carry:
        return 0

    all_pairs = canonical_pairs(P)
    layer_pairs: List[List[Tuple[Simplex, Simplex]]] = [
        [] for _ in range(num_grades - 1)
    ]
    for lo, hi in all_pairs:
        layer_pairs[P.dims[lo]].append((lo, hi))

    state = {"nodes": 0}
    memo: Dict[Tuple[int, frozenset], int] = {}

    def layer_count(i: int, taken_from_below: frozenset) -> int:
        """Completions over steps i.., given grade-i cells already consumed."""
        if i == num_grades - 1:
            return 1
        key = (i, taken_from_below)
        cached = memo.get(key)
        if cached is not None:
            return cached
        pairs = layer_pairs[i]
        partner_up: Dict[Simplex, Simplex] = {}
        lows_used: Set[Simplex] = set(taken_from_below)
        highs_used: Set[Simplex] = set()

        def dfs(start: int, owed: int) -> int:
            state["nodes"] += 1
            if budget is not None and state["nodes"] > budget:
                raise BudgetExceededError(
                    f"matching budget {budget} exceeded; partial results discarded"
                )
            if owed == 0:
                return layer_count(i + 1, frozenset(highs_used))
            total = 0
            for j in range(start, len(pairs)):
                if owed > len(pairs) - j:
                    break
                lo, hi = pairs[j]
                if lo in lows_used or hi in highs_used:
                    continue
                partner_up[lo] = hi
                lows_used.add(lo)
                highs_used.add(hi)
                if not _closes_cycle(P, partner_up, lo):
                    total += dfs(j + 1, owed - 1)
                del partner_up[lo]
                lows_used.discard(lo)
                highs_used.discard(hi)
            return total

        result = dfs(0, quota[i])
        memo[key] = result
        return result

    return layer_count(0, frozenset())


def find_collapsing_matching(K: SimplicialComplex) -> Matching | None:
    """A matching whose only critical cell is one vertex, or None.

    Greedy free-pair collapse with backtracking and memoization on the
    surviving cell set; existence of such a matching is equivalent to
    collapsibility, so complexes without free faces fail immediately.
    """
    if len(_components_of(K)) != 1:
        raise PreconditionError("collapse search needs a connected complex")

    def free_pairs(cells: frozenset) -> List[Tuple[Simplex, Simplex]]:
        out = []
        for s in cells:
            cofaces = [t for t in cells if len(t) > len(s) and set(s) < set(t)]
            if len(cofaces) == 1:
                out.append((s, cofaces[0]))
        out.sort()
        return out

    dead_ends: Set[frozenset] = set()

    def search(cells: frozenset) -> List[Tuple[Simplex, Simplex]] | None:
        if len(cells) == 1:
            return []
        if cells in dead_ends:
            return None
        for tau, sigma in free_pairs(cells):
            rest = search(cells - {tau, sigma})
            if rest is not None:
                return [(tau, sigma)] + rest
        dead_ends.add(cells)
        return None

    result = search(frozenset(K.simplices))
    return tuple(result) if result is not None else None


def _components_of(K: SimplicialComplex) -> List[Set[int]]:
    vertices = {v for s in K.simplices for v in s}
    adjacency: Dict[int, Set[int]] = {v: set() for v in vertices}
    for s in K.simplices:
        if len(s) == 2:
            adjacency[s[0]].add(s[1])
            adjacency[s[1]].add(s[0])
    comps: List[Set[int]] = []
    seen: Set[int] = set()
    for v in vertices:
        if v in seen:
            continue
        comp: Set[int] = set()
        stack = [v]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(adjacency[x] - comp)
        seen |= comp
        comps.append(comp)
    return comps


def morse_vector(
    P: GradedPoset,
    matching: Iterable[Tuple[Simplex, Simplex]],
    num_grades: int | None = None,
) -> Tuple[int, ...]:
    """Critical-cell counts of a valid matching on P."""
    pairs = _validate_matching(P, matching)
    if num_grades is None:
        num_grades = P.max_dim() + 1
    counts = list(P.grade_counts(num_grades))
    for lo, hi in pairs:
        counts[P.dims[lo]] -= 1
        counts[P.dims[hi]] -= 1
    return tuple(counts)
