from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from isomf.companion import glp_trace
from isomf.isobaric import (
    IsobaricPoly,
    WeightVector,
    format_isobaric,
    gfp_poly,
    glp_poly,
    series_div,
    series_from_genfun,
    wip_poly,
    wip_recursive,
)
from isomf.ring import PolyP


def test_gfp_low_degrees():
    assert format_isobaric(gfp_poly(3, 1)) == "t1"
    assert format_isobaric(gfp_poly(3, 3)) == "t1^3 + 2*t1*t2 + t3"
    assert format_isobaric(gfp_poly(5, 5)) == "t1^5 + 4*t1^3*t2 + 3*t1*t2^2 + 3*t1^2*t3 + 2*t2*t3 + 2*t1*t4 + t5"
    assert gfp_poly(4, 0) == IsobaricPoly.one(4)


def test_fewer_variables_drop_terms():
    assert format_isobaric(gfp_poly(2, 3)) == "t1^3 + 2*t1*t2"


def test_glp_examples():
    assert format_isobaric(glp_poly(2, 2)) == "t1^2 + 2*t2"
    assert format_isobaric(glp_poly(2, 1)) == "t1"
    assert [glp_poly(2, n).evaluate((1, 1)) for n in range(1, 5)] == [1, 3, 4, 7]


def test_wip_special_weights():
    for n in range(0, 7):
        assert wip_poly(WeightVector.gfp(), 4, n) == gfp_poly(4, n)
    for n in range(1, 7):
        assert wip_poly(WeightVector.glp(), 4, n) == glp_poly(4, n)
    assert format_isobaric(wip_poly(WeightVector((0, 1), None), 2, 2)) == "t2"


def test_rational_coefficients_print_as_fractions():
    w = WeightVector((0, 1), None)
    poly = wip_poly(w, 2, 3)  # t1*t2 has weight (0 + 1)/2
    assert format_isobaric(poly) == "t1*t2"  # multinomial 2 times 1/2
    half = IsobaricPoly(1, 2, {(2,): Fraction(1, 2)})
    assert format_isobaric(half) == "1/2*t1^2"
    assert format_isobaric(IsobaricPoly(2, 2, {(2, 0): 1, (0, 1): -3})) == "t1^2 - 3*t2"


def test_isobaric_degree_is_enforced():
    with pytest.raises(ValueError):
        IsobaricPoly(2, 3, {(1, 0): 1})


def test_weight_tails():
    assert [WeightVector.glp()(j) for j in range(1, 6)] == [1, 2, 3, 4, 5]
    assert [WeightVector.gfp()(j) for j in range(1, 4)] == [1, 1, 1]
    assert [WeightVector.hook(2)(j) for j in range(1, 5)] == [0, 0, 1, 1]
    assert WeightVector((3,), None)(2) == 0
    with pytest.raises(ValueError):
        WeightVector((), "constant")


def test_genfun_examples():
    assert series_from_genfun(WeightVector.gfp(), (1, 1), 5) == [1, 1, 2, 3, 5, 8]
    assert series_from_genfun(WeightVector.glp(), (1, 1), 4) == [1, 1, 3, 4, 7]
    assert series_from_genfun(WeightVector.gfp(), (2, -1), 4) == [1, 2, 3, 4, 5]


def test_series_division_by_geometric():
    assert series_div([1], [1, -1], 4) == [1, 1, 1, 1, 1]


def test_symbolic_prime_parameters():
    p = PolyP.gen()
    vals = wip_recursive(WeightVector.gfp(), (p + 1, -p), 3)
    assert vals[3] == p**3 + p**2 + p + 1


def test_substitution_keeps_isobaric_degree():
    images = [gfp_poly(3, j) for j in range(1, 4)]
    assert gfp_poly(3, 2).substitute(images).degree == 2


WEIGHTS = [WeightVector.gfp(), WeightVector.glp(), WeightVector.hook(1), WeightVector.hook(2), WeightVector((0, 1), None)]


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_closed_form_recursion_and_genfun_agree(k):
    for w in WEIGHTS:
        polys = [wip_poly(w, k, n) for n in range(9)]
        for t in product(range(-2, 3), repeat=k):
            closed = [q.evaluate(t) for q in polys]
            assert closed == wip_recursive(w, t, 8) == series_from_genfun(w, t, 8)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=4).filter(lambda t: t[-1] != 0),
       st.integers(1, 8))
def test_glp_is_trace(t, n):
    assert glp_poly(len(t), n).evaluate(t) == glp_trace(tuple(t), n)


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=4), st.integers(0, 10))
def test_gfp_closed_form_matches_recursion(t, n):
    assert gfp_poly(len(t), n).evaluate(t) == wip_recursive(WeightVector.gfp(), t, n)[n]
