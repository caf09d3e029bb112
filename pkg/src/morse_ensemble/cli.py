"""Command-line surface: ingestion, dispatch, golden-value checks, filtration traces.

Subcommands:
  me          compute the ensemble polynomial of one graph or complex
  verify      run a named golden-value suite (table1, phi-witnesses, identities)
  filtration  step a base complex through a JSON list of attachments

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 budget or resource exhaustion.  Machine output (--json) renders every
numeric quantity outside polynomial exponent vectors as a decimal string.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from . import polyring
from .complexes import (
    Graph,
    SimplicialComplex,
    face_poset,
    from_graph6,
    independence_complex,
    make_simplex,
    parse_edge_list,
    parse_facets_json,
)
from .errors import (
    BudgetExceededError,
    InternalConsistencyError,
    ParameterError,
    PreconditionError,
)
from .fixtures import cospectral_pair, fixture, matroid_twin_pair
from .invariants import independence_me
from .matchings import count_matchings, enumerate_me, find_collapsing_matching
from .perfectness import classify_attachment, optimal_count, perfect_coefficient
from .polyring import MorsePolynomial, coefficient, pad_to, specialize_all
from .recursion import Attachment, correction_term, incidence_separated, top_face_me
from .spectral import (
    cycle_me,
    forest_expansion_me,
    laplacian_me,
    path_me,
    total_count_identities,
)

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

METHODS = ("enumerate", "laplacian", "forest", "recursion", "closed-form")

TABLE1_TOTALS = {"P3": 8, "P4": 21, "C3": 16, "C4": 45, "K1_3": 20, "K4": 125}


class UsageError(Exception):
    """Bad flag combination or malformed input; maps to exit code 2."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morse-ensemble",
        description="Exact ensemble polynomials of acyclic matchings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--fixture", help="built-in graph or complex name")
        p.add_argument("--edges", metavar="FILE", help="edge-list file, one 'u v' per line")
        p.add_argument("--graph6", metavar="FILE", help="file whose first line is a graph6 code")
        p.add_argument("--facets", metavar="JSON_OR_FILE", help="facet JSON, inline or a file path")

    def add_common_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--budget", type=int, default=None, help="cap on enumeration steps")
        p.add_argument("--workers", type=int, default=1, help="parallel enumeration lanes")
        p.add_argument("--json", metavar="OUT", default=None, help="write machine-readable JSON here")

    p_me = sub.add_parser("me", help="compute one ensemble polynomial")
    add_input_flags(p_me)
    p_me.add_argument(
        "--method",
        action="append",
        choices=METHODS,
        default=None,
        help="computation route; repeat to cross-check two routes",
    )
    p_me.add_argument(
        "--op",
        choices=("me", "collapsible"),
        default="me",
        help="'me' for the polynomial, 'collapsible' for a collapse-search verdict",
    )
    add_common_flags(p_me)

    p_verify = sub.add_parser("verify", help="run a golden-value suite")
    p_verify.add_argument("suite", choices=("table1", "phi-witnesses", "identities"))
    p_verify.add_argument(
        "--n", default="1..8", help="size range for the identities suite, e.g. 1..8"
    )
    add_common_flags(p_verify)

    p_filt = sub.add_parser("filtration", help="trace a list of attachments")
    p_filt.add_argument("file", help="JSON list of steps: [{\"sigma\": [v, ...]}, ...]")
    add_input_flags(p_filt)
    add_common_flags(p_filt)
    return parser


def _load_input(args: argparse.Namespace) -> Tuple[str, Any]:
    """Resolve the input flags to ('graph'|'complex', object)."""
    sources = [
        name
        for name in ("fixture", "edges", "graph6", "facets")
        if getattr(args, name, None) is not None
    ]
    if len(sources) != 1:
        raise UsageError(
            "exactly one of --fixture/--edges/--graph6/--facets is required"
        )
    kind = sources[0]
    if kind == "fixture":
        value = fixture(args.fixture)
    elif kind == "edges":
        value = parse_edge_list(Path(args.edges).read_text())
    elif kind == "graph6":
        lines = [ln.strip() for ln in Path(args.graph6).read_text().splitlines()]
        codes = [ln for ln in lines if ln]
        if not codes:
            raise UsageError(f"no graph6 code found in {args.graph6}")
        value = from_graph6(codes[0])
    else:
        text = args.facets
        if not text.lstrip().startswith("{"):
            text = Path(text).read_text()
        value = parse_facets_json(text)
    return ("graph" if isinstance(value, Graph) else "complex", value)


def _detect_path_or_cycle(G: Graph) -> Optional[MorsePolynomial]:
    """Closed form when the graph is a path or a cycle, else None."""
    if not G.is_connected():
        return None
    if G.n == 1:
        return path_me(1)
    degrees = sorted(G.degree(v) for v in range(G.n))
    if degrees == [1, 1] + [2] * (G.n - 2):
        return path_me(G.n)
    if G.n >= 3 and degrees == [2] * G.n:
        return cycle_me(G.n)
    return None


def _complex_of(kind: str, value: Any) -> SimplicialComplex:
    return value.to_complex() if kind == "graph" else value


def _me_by_method(
    method: str, kind: str, value: Any, budget: Optional[int], workers: int
) -> MorsePolynomial:
    if method in ("laplacian", "forest", "closed-form") and kind != "graph":
        raise UsageError(f"method {method!r} needs a graph input")
    if method == "laplacian":
        return laplacian_me(value)
    if method == "forest":
        return forest_expansion_me(value)
    if method == "closed-form":
        closed = _detect_path_or_cycle(value)
        if closed is None:
            raise UsageError("method 'closed-form' needs a path or cycle graph")
        return closed
    K = _complex_of(kind, value)
    if method == "enumerate":
        return enumerate_me(face_poset(K), K.dim + 1, budget=budget, workers=workers)
    top = [s for s in K.facets() if len(s) == K.dim + 1 and len(s) >= 2]
    if not top:
        return enumerate_me(face_poset(K), K.dim + 1, budget=budget, workers=workers)
    sigma = max(top)
    a = Attachment(K.without_simplex(sigma), sigma)
    return pad_to(top_face_me(a, budget=budget, workers=workers), K.dim + 1)


def _poly_payload(p: MorsePolynomial) -> Dict[str, Any]:
    return {
        "polynomial": json.loads(polyring.to_json(p)),
        "pretty": p.to_string(),
        "total_at_one": str(specialize_all(p, 1)),
    }


def _emit(args: argparse.Namespace, payload: Dict[str, Any]) -> None:
    if getattr(args, "json", None):
        Path(args.json).write_text(json.dumps(payload, indent=2) + "\n")


def _cmd_me(args: argparse.Namespace) -> int:
    kind, value = _load_input(args)
    if args.op == "collapsible":
        if args.method:
            raise UsageError("--op collapsible does not take --method")
        K = _complex_of(kind, value)
        matching = find_collapsing_matching(K)
        verdict = "collapsible" if matching is not None else "not collapsible"
        print(verdict)
        payload: Dict[str, Any] = {"command": "me", "op": "collapsible", "verdict": verdict}
        if matching is not None:
            payload["matching_size"] = str(len(matching))
        _emit(args, payload)
        return EXIT_OK

    methods = args.method or ["enumerate"]
    results: List[Tuple[str, MorsePolynomial]] = []
    for method in dict.fromkeys(methods):
        results.append(
            (method, _me_by_method(method, kind, value, args.budget, args.workers))
        )
    width = max(p.num_vars for _, p in results)
    padded = [(m, pad_to(p, width)) for m, p in results]
    for method, p in padded:
        print(f"{method}: {p.to_string()}")
        print(f"  total at z=1: {specialize_all(p, 1)}")
    payload = {
        "command": "me",
        "op": "me",
        "results": [dict(method=m, **_poly_payload(p)) for m, p in padded],
    }
    exit_code = EXIT_OK
    if len(padded) > 1:
        match = all(p == padded[0][1] for _, p in padded[1:])
        verdict = "match" if match else "MISMATCH"
        print(f"cross-check: {verdict}")
        payload["cross_check"] = verdict
        if not match:
            exit_code = EXIT_MISMATCH
    _emit(args, payload)
    return exit_code


def _print_rows(rows: List[Tuple[str, bool]]) -> int:
    failures = [name for name, ok in rows if not ok]
    for name, ok in rows:
        print(f"  [{'ok' if ok else 'FAIL'}] {name}")
    print(f"{len(rows) - len(failures)}/{len(rows)} checks passed")
    return EXIT_OK if not failures else EXIT_MISMATCH


def _suite_table1(args: argparse.Namespace) -> List[Tuple[str, bool]]:
    rows: List[Tuple[str, bool]] = []
    for name, total in TABLE1_TOTALS.items():
        G = fixture(name)
        routes = [
            enumerate_me(
                face_poset(G.to_complex()), 2, budget=args.budget, workers=args.workers
            ),
            laplacian_me(G),
            forest_expansion_me(G),
        ]
        ok = (
            all(p == routes[0] for p in routes[1:])
            and specialize_all(routes[0], 1) == total
        )
        rows.append((f"{name}: enumerate/laplacian/forest agree, total {total}", ok))
    return rows


def _suite_phi_witnesses(args: argparse.Namespace) -> List[Tuple[str, bool]]:
    twin = matroid_twin_pair()
    cosp = cospectral_pair()

    def z0_coeff(G: Graph) -> int:
        ensemble = independence_me(G, budget=args.budget)
        return coefficient(ensemble, (1,) + (0,) * (ensemble.num_vars - 1))

    def matching_total(G: Graph) -> int:
        return count_matchings(face_poset(independence_complex(G)), args.budget)

    checks = [
        ("[z0] of independence ensemble, twin pair first graph = 270", z0_coeff(twin[0]), 270),
        ("[z0] of independence ensemble, twin pair second graph = 324", z0_coeff(twin[1]), 324),
        ("[z0] of independence ensemble, cospectral first graph = 0", z0_coeff(cosp[0]), 0),
        ("[z0] of independence ensemble, cospectral second graph = 144", z0_coeff(cosp[1]), 144),
        ("matching count on independence complex, cospectral first = 6212", matching_total(cosp[0]), 6212),
        ("matching count on independence complex, cospectral second = 15464", matching_total(cosp[1]), 15464),
    ]
    return [(name, got == want) for name, got, want in checks]


def _parse_range(text: str) -> Tuple[int, int]:
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected forms like 3 or 1..8") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"bad range {text!r}; needs 1 <= lo <= hi")
    return lo, hi


def _suite_identities(args: argparse.Namespace) -> List[Tuple[str, bool]]:
    lo, hi = _parse_range(args.n)
    rows: List[Tuple[str, bool]] = []
    for n in range(lo, hi + 1):
        record = total_count_identities(n)
        rows.append(
            (
                f"path total for n={n} equals Fibonacci(2n) = {record.fibonacci_2n}",
                record.path_total == record.fibonacci_2n,
            )
        )
        if record.cycle_total is not None:
            rows.append(
                (
                    f"cycle total for n={n} equals Lucas(2n) - 2 = {record.lucas_2n_minus_2}",
                    record.cycle_total == record.lucas_2n_minus_2,
                )
            )
        rows.append(
            (
                f"complete-graph total for n={n} equals (n+1)^(n-1) = {record.complete_closed_form}",
                record.complete_total == record.complete_closed_form,
            )
        )
    return rows


def _cmd_verify(args: argparse.Namespace) -> int:
    suites = {
        "table1": _suite_table1,
        "phi-witnesses": _suite_phi_witnesses,
        "identities": _suite_identities,
    }
    rows = suites[args.suite](args)
    code = _print_rows(rows)
    _emit(
        args,
        {
            "command": "verify",
            "suite": args.suite,
            "rows": [{"check": name, "ok": ok} for name, ok in rows],
            "passed": str(sum(1 for _, ok in rows if ok)),
            "failed": str(sum(1 for _, ok in rows if not ok)),
        },
    )
    return code


def _parse_filtration_file(path: str) -> List[Tuple[int, ...]]:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise UsageError(f"filtration file is not valid JSON: {exc}") from None
    if not isinstance(data, list):
        raise UsageError("filtration file must be a JSON list of steps")
    steps: List[Tuple[int, ...]] = []
    for k, entry in enumerate(data, start=1):
        if not isinstance(entry, dict) or "sigma" not in entry:
            raise UsageError(f"step {k} must be an object with a 'sigma' key")
        sigma = entry["sigma"]
        if not isinstance(sigma, list) or not all(isinstance(v, int) for v in sigma):
            raise UsageError(f"step {k}: 'sigma' must be a list of integers")
        steps.append(tuple(sigma))
    return steps


def _facet_summary(a: Attachment, tau: Tuple[int, ...], budget: Optional[int]) -> Dict[str, Any]:
    separated = incidence_separated(a, tau)
    F = correction_term(a, tau, budget=budget)
    if separated and not F.is_zero():
        raise InternalConsistencyError(
            f"facet {tau} is incidence-separated but its correction is nonzero"
        )
    summary: Dict[str, Any] = {
        "facet": list(tau),
        "separated": separated,
        "correction_terms": str(len(F.terms)),
        "correction_total_at_one": str(specialize_all(F, 1)),
    }
    return summary


def _cmd_filtration(args: argparse.Namespace) -> int:
    kind, value = _load_input(args)
    running = _complex_of(kind, value)
    steps = _parse_filtration_file(args.file)
    base_me = enumerate_me(
        face_poset(running), running.dim + 1, budget=args.budget, workers=args.workers
    )
    print(f"base: {base_me.to_string()}")
    payload: Dict[str, Any] = {
        "command": "filtration",
        "base": _poly_payload(base_me),
        "steps": [],
    }
    for k, sigma_vertices in enumerate(steps, start=1):
        try:
            sigma = make_simplex(sigma_vertices)
            a = Attachment(running, sigma)
        except (ParameterError, PreconditionError) as exc:
            raise UsageError(f"invalid attachment at step {k}: {exc}") from None
        kind_tag = classify_attachment(a)
        result = a.result()
        me = enumerate_me(
            face_poset(result), result.dim + 1, budget=args.budget, workers=args.workers
        )
        facets = [_facet_summary(a, tau, args.budget) for tau in a.facets_of_sigma()]
        p_k = perfect_coefficient(result, budget=args.budget)
        mu = optimal_count(result, budget=args.budget)
        sep_all = all(f["separated"] for f in facets)
        print(
            f"step {k}: attach {list(sigma)} ({kind_tag}); "
            f"total {specialize_all(me, 1)}; "
            f"{'all facets separated' if sep_all else 'correction present'}; "
            f"perfect coefficient {p_k}; optimal count {mu}"
        )
        payload["steps"].append(
            {
                "step": str(k),
                "sigma": list(sigma),
                "kind": kind_tag,
                "me": _poly_payload(me),
                "facets": facets,
                "perfect_coefficient": str(p_k),
                "optimal_count": str(mu),
            }
        )
        running = result
    _emit(args, payload)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    handlers = {"me": _cmd_me, "verify": _cmd_verify, "filtration": _cmd_filtration}
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParameterError, PreconditionError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exhausted before completion: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InternalConsistencyError as exc:
        print(f"verification mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    raise SystemExit(main())
