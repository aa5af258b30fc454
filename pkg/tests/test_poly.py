import json

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cauchy_vertex.poly import (
    MultiPoly,
    QSeries,
    coefficient_of,
    expand_factor_product,
    first_mismatch_poly,
    poly_mul,
    series_to_poly,
)

from oracles import factor_product_coeffs_sympy, poly_to_sympy, sympy_to_terms


def polys(arity=3, max_exp=3):
    exps = st.tuples(*[st.integers(0, max_exp)] * arity)
    return st.dictionaries(exps, st.integers(-5, 5), max_size=5).map(lambda t: MultiPoly(arity, t))


def one_minus(arity, exp):
    return MultiPoly(arity, {(0,) * arity: 1, tuple(exp): -1})


def test_zero_coefficients_are_dropped():
    p = MultiPoly(2, {(1, 0): 0, (0, 1): 3})
    assert p.terms == {(0, 1): 3}
    assert (p - p).is_zero()
    assert MultiPoly.zero(2).terms == {}


def test_mul_examples():
    # arity 2 ring with x1 at slot 0 and y1 at slot 1
    f = one_minus(2, (1, 1))
    assert poly_mul(f, MultiPoly.constant(2)) == f
    s = MultiPoly(2, {(1, 0): 1, (0, 1): 1})
    assert poly_mul(s, s) == MultiPoly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    q2, q3 = one_minus(1, (2,)), one_minus(1, (3,))
    assert poly_mul(q2, q3, total_degree_cap=4) == MultiPoly(1, {(0,): 1, (2,): -1, (3,): -1})


def test_coefficient_examples():
    assert coefficient_of(one_minus(2, (1, 1)), (1, 1)) == -1
    s = MultiPoly(2, {(1, 0): 1, (0, 1): 1})
    assert coefficient_of(poly_mul(s, s), (1, 1)) == 2
    assert coefficient_of(MultiPoly.zero(4), (3, 0, 1, 2)) == 0


def test_arity_mismatch_raises():
    with pytest.raises(ValueError):
        poly_mul(MultiPoly.constant(1), MultiPoly.constant(2))
    with pytest.raises(ValueError):
        coefficient_of(MultiPoly.constant(2), (0,))
    with pytest.raises(ValueError):
        MultiPoly(2, {(1,): 1})


@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a - a == MultiPoly.zero(3)


@given(polys(), polys())
@settings(max_examples=50)
def test_mul_matches_sympy(a, b):
    xs = sympy.symbols("x1:4")
    expected = sympy_to_terms(poly_to_sympy(a, xs) * poly_to_sympy(b, xs), xs)
    assert poly_mul(a, b).terms == expected


@given(polys(), polys(), st.integers(0, 8))
def test_capped_mul_is_truncated_mul(a, b, cap):
    assert poly_mul(a, b, cap) == poly_mul(a, b).truncate(cap)


def test_embed_and_permute():
    p = MultiPoly(2, {(2, 1): 5})
    assert p.embed(4, 1).terms == {(0, 2, 1, 0): 5}
    assert p.permute([1, 0]).terms == {(1, 2): 5}
    with pytest.raises(ValueError):
        p.embed(2, 1)


def test_poly_json_roundtrip_sorted():
    p = MultiPoly(2, {(0, 2): 3, (1, 0): -1, (0, 0): 10**30})
    data = p.to_json()
    assert [t["exp"] for t in data] == [[0, 0], [1, 0], [0, 2]]
    assert data[0]["coef"] == str(10**30)
    assert MultiPoly.from_json(json.loads(json.dumps(data))) == p


def test_first_mismatch_is_graded_lex_smallest():
    a = MultiPoly(2, {(0, 0): 1, (0, 2): 1, (1, 0): 4})
    b = MultiPoly(2, {(0, 0): 1, (2, 0): 1, (1, 0): 3})
    assert first_mismatch_poly(a, b) == ((1, 0), 4, 3)
    assert first_mismatch_poly(a, a) is None


def test_format():
    p = MultiPoly(2, {(0, 0): 1, (1, 1): -2, (2, 0): 1})
    assert p.format(["x", "y"]) == "1 - 2*x*y + x^2"
    assert MultiPoly.zero(1).format() == "0"


# -- QSeries -------------------------------------------------------------------

def test_series_shape_and_truncation():
    s = QSeries(4, [1, 2, 3])
    assert len(s) == 5 and s.coeffs == (1, 2, 3, 0, 0)
    t = QSeries(2, [1, 1, 1])
    assert (s + t).order == 2
    assert (s * t).order == 2
    assert (s * t).coeffs == (1, 3, 6)


@given(
    st.lists(st.integers(-4, 4), min_size=1, max_size=8),
    st.lists(st.integers(-4, 4), min_size=1, max_size=8),
)
def test_series_mul_agrees_with_poly_mul(a, b):
    sa, sb = QSeries(len(a) - 1, a), QSeries(len(b) - 1, b)
    n = min(sa.order, sb.order)
    via_poly = poly_mul(series_to_poly(sa), series_to_poly(sb), total_degree_cap=n)
    assert series_to_poly(sa * sb) == via_poly


def test_series_json_roundtrip():
    s = QSeries(3, [1, -(10**40), 0, 7])
    data = json.loads(json.dumps(s.to_json()))
    assert data == {"order": 3, "coeffs": ["1", str(-(10**40)), "0", "7"]}
    assert QSeries.from_json(data) == s


@pytest.mark.parametrize(
    "factors, order, expected",
    [
        ([(2, 1)], 5, [1, 0, -1, 0, 0, 0]),
        ([(1, -1)], 3, [1, 1, 1, 1]),
        ([(i, i - 1) for i in range(1, 11)], 5, [1, 0, -1, -2, -3, -2]),
    ],
)
def test_expand_factor_product_examples(factors, order, expected):
    assert list(expand_factor_product(factors, order).coeffs) == expected


def test_expand_factor_product_against_sympy():
    for factors in ([(i, i - 1) for i in range(1, 9)], [(i, -i) for i in range(1, 9)], [(3, 2), (1, -3), (5, 1)]):
        assert list(expand_factor_product(factors, 8).coeffs) == factor_product_coeffs_sympy(factors, 8)


def test_factor_and_inverse_cancel():
    for d in range(13):
        for e in range(1, d + 1):
            assert expand_factor_product([(e, 1), (e, -1)], d) == QSeries.one(d)


def test_expand_rejects_nonpositive_exponent():
    with pytest.raises(ValueError):
        expand_factor_product([(0, 1)], 3)


def test_series_format():
    assert str(QSeries(3, [1, 0, -1, -2])) == "1 - q^2 - 2*q^3 + O(q^4)"
    assert QSeries(5, [1, 1, 1, 1, 1, 1]).format(display_cap=2) == "1 + q + q^2 + ... + O(q^6)"
