import pytest
from hypothesis import given
from hypothesis import strategies as st

from braid3.errors import PolySyntaxError
from braid3.laurent import (
    LaurentPoly1,
    LaurentPoly2,
    alexander,
    conway,
    delta_unlink_factor,
    jones,
    mirror_image,
    parse_poly,
    render_poly,
)


poly2_st = st.dictionaries(
    st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
    st.integers(-9, 9),
    max_size=6,
).map(LaurentPoly2)


def test_delta_values():
    d = delta_unlink_factor()
    assert d.coefficient(-1, -1) == 1
    assert d.coefficient(1, -1) == -1
    assert len(list(d.items())) == 2


def test_delta_squared():
    d = delta_unlink_factor()
    assert d * d == LaurentPoly2({(-2, -2): 1, (0, -2): -2, (2, -2): 1})


def test_delta_times_z():
    d = delta_unlink_factor()
    z = LaurentPoly2.monomial(1, 0, 1)
    assert d * z == LaurentPoly2({(-1, 0): 1, (1, 0): -1})


def test_product_difference_of_squares():
    v = LaurentPoly2.monomial(1, 1, 0)
    z = LaurentPoly2.monomial(1, 0, 1)
    assert (v + z) * (v - z) == LaurentPoly2({(2, 0): 1, (0, 2): -1})


def test_add_zero_is_identity():
    p = LaurentPoly2({(1, 2): 3})
    assert p + LaurentPoly2.zero() == p


def test_degrees_and_z_coefficient():
    d2 = delta_unlink_factor() ** 2
    assert d2.max_deg_z() == -2
    assert d2.min_deg_v() == -2
    assert d2.z_coefficient(-2) == LaurentPoly1("v", {-2: 1, 0: -2, 2: 1})
    assert d2.z_coefficient(5).is_zero


def test_degree_of_zero_raises():
    with pytest.raises(ValueError):
        LaurentPoly2.zero().max_deg_z()
    with pytest.raises(ValueError):
        LaurentPoly1.zero("v").max_deg()


@given(poly2_st, poly2_st, poly2_st)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(poly2_st)
def test_mirror_is_involution(p):
    assert mirror_image(mirror_image(p)) == p


def test_conway_of_delta_vanishes():
    assert conway(delta_unlink_factor()).is_zero


def test_conway_of_unit():
    assert conway(LaurentPoly2.one()) == LaurentPoly1("z", {0: 1})


def test_alexander_basic():
    assert alexander(LaurentPoly1("z", {0: 1})) == LaurentPoly1("s", {0: 1})
    a = alexander(LaurentPoly1("z", {2: 1, 0: 1}))
    assert a == LaurentPoly1("s", {2: 1, 0: -1, -2: 1})
    assert a == a.invert_variable()


def test_alexander_rejects_negative_exponents():
    with pytest.raises(ValueError):
        alexander(LaurentPoly1("z", {-1: 1}))


def test_jones_of_unit_and_delta():
    assert jones(LaurentPoly2.one()) == LaurentPoly1("s", {0: 1})
    assert jones(delta_unlink_factor()) == LaurentPoly1("s", {1: -1, -1: -1})


def test_div_exact():
    s_minus = LaurentPoly1("s", {1: 1, -1: -1})
    p = s_minus * s_minus * LaurentPoly1("s", {3: 2, 0: -1})
    assert p.div_exact(s_minus * s_minus) == LaurentPoly1("s", {3: 2, 0: -1})
    with pytest.raises(ValueError):
        LaurentPoly1.one("s").div_exact(s_minus)


def test_parse_render_examples():
    assert parse_poly("1") == LaurentPoly2.one()
    assert parse_poly("0").is_zero
    assert render_poly(LaurentPoly2.zero()) == "0"
    p = parse_poly("-1*v^4*z^0 + 2*v^2*z^0 + 1*v^2*z^2")
    assert p.coefficient(4, 0) == -1
    assert p.coefficient(2, 0) == 2
    assert p.coefficient(2, 2) == 1
    assert parse_poly("1*v^-1*z^-1 + -1*v^1*z^-1") == delta_unlink_factor()


def test_render_order_is_canonical():
    p = parse_poly("-1*v^4*z^0 + 2*v^2*z^0 + 1*v^2*z^2")
    assert render_poly(p) == "2*v^2*z^0 + -1*v^4*z^0 + 1*v^2*z^2"


@given(poly2_st)
def test_parse_render_round_trip(p):
    assert parse_poly(render_poly(p)) == p


def test_parse_errors_carry_position():
    with pytest.raises(PolySyntaxError) as exc:
        parse_poly("1*v^2*z^0 + 2*v^bad*z^0")
    assert exc.value.term_index == 1
    with pytest.raises(PolySyntaxError):
        parse_poly("")
