"""Sparse exact polynomial ring: arithmetic, ordering, serialization."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from morse_ensemble import (
    DimensionMismatchError,
    MorsePolynomial,
    ParameterError,
    add,
    coefficient,
    from_json,
    max_degree_in_var,
    min_total_degree,
    monomial,
    mul,
    one,
    pad_to,
    scale,
    specialize_all,
    to_json,
    zero,
)


def test_zero_and_one():
    assert zero(2).is_zero()
    assert not one(2).is_zero()
    assert specialize_all(one(3), 7) == 1
    assert specialize_all(zero(3), 7) == 0


def test_monomial_and_coefficient():
    p = monomial(3, (1, 2, 0), 5)
    assert coefficient(p, (1, 2, 0)) == 5
    assert coefficient(p, (0, 0, 0)) == 0
    assert specialize_all(p, 2) == 5 * 2**3


def test_zero_coefficients_dropped():
    p = add(monomial(2, (1, 1), 4), monomial(2, (1, 1), -4))
    assert p.is_zero()
    assert p.terms == {}


def test_addition_and_multiplication():
    p = add(monomial(2, (1, 0), 2), monomial(2, (0, 1), 3))
    q = mul(p, p)
    assert coefficient(q, (2, 0)) == 4
    assert coefficient(q, (1, 1)) == 12
    assert coefficient(q, (0, 2)) == 9
    assert p + p == scale(p, 2)
    assert p - p == zero(2)


def test_operator_aliases_match_functions():
    p = monomial(2, (1, 2), 3)
    q = monomial(2, (0, 1), 1)
    assert p + q == add(p, q)
    assert p * q == mul(p, q)


def test_mismatched_arity_add_strict_mul_pads():
    with pytest.raises(DimensionMismatchError):
        add(one(2), one(3))
    assert mul(monomial(2, (1, 1), 2), one(3)) == monomial(3, (1, 1, 0), 2)


def test_negative_exponent_rejected():
    with pytest.raises(ParameterError):
        monomial(2, (-1, 0), 1)


def test_graded_lex_term_order():
    p = add(
        add(monomial(2, (0, 2), 1), monomial(2, (1, 0), 1)),
        monomial(2, (3, 1), 1),
    )
    exps = [e for e, _ in p.sorted_terms()]
    assert exps == [(1, 0), (0, 2), (3, 1)]


def test_to_string_readable():
    p = add(monomial(2, (1, 0), 9), monomial(2, (2, 1), -3))
    s = p.to_string()
    assert "9*z0" in s and "z0^2*z1" in s
    assert zero(2).to_string() == "0"


def test_min_total_degree_and_max_in_var():
    p = add(monomial(3, (1, 0, 0), 1), monomial(3, (0, 2, 3), 4))
    assert min_total_degree(p) == 1
    assert max_degree_in_var(p, 2) == 3
    assert min_total_degree(zero(3)) is None


def test_pad_to_widens_only():
    p = monomial(2, (1, 1), 6)
    q = pad_to(p, 4)
    assert q.num_vars == 4
    assert coefficient(q, (1, 1, 0, 0)) == 6
    assert pad_to(q, 4) == q
    with pytest.raises(DimensionMismatchError):
        pad_to(q, 2)


def test_json_round_trip_fixed():
    p = add(monomial(2, (1, 3), 64), monomial(2, (4, 6), 1))
    text = to_json(p)
    data = json.loads(text)
    assert data["vars"] == 2
    assert all(isinstance(t["coeff"], str) for t in data["terms"])
    assert from_json(text) == p


def test_json_rejects_garbage():
    with pytest.raises(ParameterError):
        from_json("{}")
    with pytest.raises(ParameterError):
        from_json('{"vars": 2, "terms": [{"exp": [1], "coeff": "3"}]}')


@st.composite
def polynomials(draw):
    num_vars = draw(st.integers(min_value=1, max_value=4))
    n_terms = draw(st.integers(min_value=0, max_value=6))
    terms = {}
    for _ in range(n_terms):
        exp = tuple(
            draw(st.integers(min_value=0, max_value=5)) for _ in range(num_vars)
        )
        coeff = draw(st.integers(min_value=-(10**12), max_value=10**12))
        if coeff:
            terms[exp] = coeff
    return MorsePolynomial(num_vars, terms)


@given(polynomials())
def test_json_round_trip_property(p):
    assert from_json(to_json(p)) == p


@given(polynomials(), polynomials())
def test_addition_commutes(p, q):
    if p.num_vars != q.num_vars:
        q = pad_to(q, p.num_vars) if q.num_vars < p.num_vars else q
        p = pad_to(p, q.num_vars)
    assert add(p, q) == add(q, p)


@given(polynomials(), st.integers(min_value=-3, max_value=3))
def test_specialize_is_ring_hom_under_scale(p, c):
    assert specialize_all(scale(p, c), 2) == c * specialize_all(p, 2)
