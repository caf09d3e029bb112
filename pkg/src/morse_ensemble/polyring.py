"""Sparse multivariate polynomials with arbitrary-precision integer coefficients.

A Morse ensemble polynomial of a d-dimensional complex lives in variables
z_0..z_d, one per simplex dimension.  Supports are tiny but coefficients grow
fast, so the representation is a dict keyed by exponent tuples with plain
Python ints as values.  Everything here is exact; no floating point.
"""

from __future__ import annotations

import json
from typing import Dict, Iterable, Iterator, Tuple

from .errors import DimensionMismatchError, ParameterError

__all__ = [
    "MorsePolynomial",
    "zero",
    "one",
    "monomial",
    "add",
    "mul",
    "scale",
    "coefficient",
    "specialize_all",
    "min_total_degree",
    "max_degree_in_var",
    "pad_to",
    "to_json",
    "from_json",
]

Exponent = Tuple[int, ...]


class MorsePolynomial:
    """Immutable sparse polynomial in a fixed number of variables.

    terms maps exponent tuples (length num_vars, entries >= 0) to nonzero
    integer coefficients.  Zero coefficients are dropped on construction.
    """

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Dict[Exponent, int] | None = None):
        if num_vars < 0:
            raise ParameterError(f"num_vars must be >= 0, got {num_vars}")
        clean: Dict[Exponent, int] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != num_vars:
                raise DimensionMismatchError(
                    f"exponent vector {exps} has length {len(exps)}, expected {num_vars}"
                )
            if any(e < 0 for e in exps):
                raise ParameterError(f"negative exponent in {exps}")
            if coeff != 0:
                clean[exps] = coeff
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("MorsePolynomial is immutable")

    def __reduce__(self):
        return (MorsePolynomial, (self.num_vars, self.terms))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MorsePolynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __add__(self, other: "MorsePolynomial") -> "MorsePolynomial":
        return add(self, other)

    def __mul__(self, other: "MorsePolynomial") -> "MorsePolynomial":
        return mul(self, other)

    def __sub__(self, other: "MorsePolynomial") -> "MorsePolynomial":
        return add(self, scale(other, -1))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> Iterator[Tuple[Exponent, int]]:
        """Terms in graded-lexicographic order (total degree, then exponents)."""
        return iter(sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])))

    def __repr__(self) -> str:
        return f"MorsePolynomial({self.num_vars}, {self.to_string()!r})"

    def to_string(self) -> str:
        """Deterministic human-readable form, graded-lex term order."""
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = [
                f"z{i}" if e == 1 else f"z{i}^{e}"
                for i, e in enumerate(exps)
                if e != 0
            ]
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            elif coeff == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{coeff}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")


def zero(num_vars: int) -> MorsePolynomial:
    return MorsePolynomial(num_vars, {})


def one(num_vars: int) -> MorsePolynomial:
    return MorsePolynomial(num_vars, {(0,) * num_vars: 1})


def monomial(num_vars: int, exps: Iterable[int], coeff: int = 1) -> MorsePolynomial:
    return MorsePolynomial(num_vars, {tuple(exps): coeff})


def add(p: MorsePolynomial, q: MorsePolynomial) -> MorsePolynomial:
    """Exact sum; requires matching num_vars (use pad_to to align first)."""
    if p.num_vars != q.num_vars:
        raise DimensionMismatchError(
            f"cannot add polynomials in {p.num_vars} and {q.num_vars} variables"
        )
    terms = dict(p.terms)
    for exps, coeff in q.terms.items():
        terms[exps] = terms.get(exps, 0) + coeff
    return MorsePolynomial(p.num_vars, terms)


def scale(p: MorsePolynomial, c: int) -> MorsePolynomial:
    if c == 0:
        return zero(p.num_vars)
    return MorsePolynomial(p.num_vars, {e: c * v for e, v in p.terms.items()})


def mul(p: MorsePolynomial, q: MorsePolynomial) -> MorsePolynomial:
    """Exact convolution product; operands are padded to the wider num_vars."""
    n = max(p.num_vars, q.num_vars)
    p = pad_to(p, n)
    q = pad_to(q, n)
    terms: Dict[Exponent, int] = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            terms[e] = terms.get(e, 0) + c1 * c2
    return MorsePolynomial(n, terms)


def coefficient(p: MorsePolynomial, exps: Iterable[int]) -> int:
    exps = tuple(exps)
    if len(exps) != p.num_vars:
        raise DimensionMismatchError(
            f"exponent vector length {len(exps)} does not match num_vars {p.num_vars}"
        )
    return p.terms.get(exps, 0)


def specialize_all(p: MorsePolynomial, t: int) -> int:
    """Substitute z_i = t for every variable; exact integer result."""
    return sum(coeff * t ** sum(exps) for exps, coeff in p.terms.items())


def min_total_degree(p: MorsePolynomial) -> int | None:
    """Minimum exponent sum over stored terms; None for the zero polynomial."""
    if not p.terms:
        return None
    return min(sum(exps) for exps in p.terms)


def max_degree_in_var(p: MorsePolynomial, i: int) -> int | None:
    """Largest exponent of variable i over the support; None if p = 0."""
    if not p.terms:
        return None
    if not 0 <= i < p.num_vars:
        raise ParameterError(f"variable index {i} out of range for {p.num_vars} variables")
    return max(exps[i] for exps in p.terms)


def pad_to(p: MorsePolynomial, num_vars: int) -> MorsePolynomial:
    """Reinterpret p in a larger variable ring by appending zero exponents."""
    if num_vars == p.num_vars:
        return p
    if num_vars < p.num_vars:
        raise DimensionMismatchError(
            f"cannot pad from {p.num_vars} down to {num_vars} variables"
        )
    extra = (0,) * (num_vars - p.num_vars)
    return MorsePolynomial(num_vars, {exps + extra: c for exps, c in p.terms.items()})


def to_json(p: MorsePolynomial) -> str:
    """Serialize as {"vars": n, "terms": [...]}, graded-lex sorted.

    Coefficients are decimal strings so arbitrary-precision values survive
    any downstream JSON tooling.
    """
    doc = {
        "vars": p.num_vars,
        "terms": [
            {"exp": list(exps), "coeff": str(coeff)}
            for exps, coeff in p.sorted_terms()
        ],
    }
    return json.dumps(doc)


def from_json(text: str) -> MorsePolynomial:
    try:
        doc = json.loads(text)
        num_vars = int(doc["vars"])
        terms: Dict[Exponent, int] = {}
        for row in doc["terms"]:
            exps = tuple(int(e) for e in row["exp"])
            terms[exps] = terms.get(exps, 0) + int(row["coeff"])
        result = MorsePolynomial(num_vars, terms)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ParameterError(f"malformed polynomial JSON: {exc}") from None
    return result
