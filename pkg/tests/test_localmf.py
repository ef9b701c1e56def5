import json
import math
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import int_cores
from isomf.catalog import catalog_mf, family
from isomf.companion import CoreParams
from isomf.localmf import (
    BOTH_INFINITE,
    FINITE_PARAMS,
    FINITE_VALUES,
    DualityViolation,
    LocalMF,
    NotInvertible,
    classify_type,
    convolve,
    degree,
    factorize,
    from_params,
    from_values,
    global_eval,
    identity_mf,
    inverse,
    normal_form,
    recover_params,
)
from isomf.ring import PolyP

p = PolyP.gen()


def test_from_params_examples():
    assert from_params((1, 1), 5).values == (1, 1, 2, 3, 5, 8)
    assert from_params((2, -1), 4).values == (1, 2, 3, 4, 5)
    phi = from_params(CoreParams((p - 1,) * 3, finite=False), 3)
    assert phi.values == (1, p - 1, p**2 - p, p**3 - p**2)


def test_recover_examples():
    assert recover_params([1, 2, 3, 4, 5]).params == (2, -1, 0, 0)
    sig = recover_params([1, 1 + p, 1 + p + p**2, 1 + p + p**2 + p**3]).params
    assert sig == (p + 1, -p, 0)
    assert recover_params([1, -1, 0, 0, 0]).params == (-1, -1, -1, -1)
    with pytest.raises(NotInvertible):
        recover_params([2, 1])


@pytest.mark.parametrize("k", range(1, 5))
def test_round_trip_on_grid(k):
    for t in product(range(-3, 4), repeat=k):
        if t[-1] == 0:
            continue
        f = from_params(t, 12)
        assert CoreParams.trimmed(recover_params(f.values).params).params == t


@settings(max_examples=60)
@given(st.lists(st.integers(-3, 3), min_size=5, max_size=6).filter(lambda t: t[-1] != 0))
def test_round_trip_up_to_degree_six(t):
    f = from_params(tuple(t), 12)
    assert CoreParams.trimmed(recover_params(f.values).params).params == tuple(t)


def test_convolution_examples():
    zeta = catalog_mf("zeta", p=2, N=8)
    assert convolve(zeta, zeta).values == tuple(range(1, 10))
    prod = convolve(catalog_mf("tau", p=2, N=8), catalog_mf("sigma_1", p=2, N=8))
    assert prod.values[:5] == (1, 5, 16, 42, 99)
    assert prod.params[:5] == (5, -9, 7, -2, 0)
    f = from_params((3, -1, 2), 10)
    assert convolve(f, identity_mf(10)).values == f.values


def test_horizons_truncate_to_shorter():
    assert convolve(from_params((1,), 5), from_params((1,), 9)).horizon == 5


def test_inverse_examples():
    assert inverse(catalog_mf("zeta", p=3, N=4)).values == (1, -1, 0, 0, 0)
    phi_inv = inverse(catalog_mf("phi", N=4))
    assert phi_inv.values == (1, 1 - p, 1 - p, 1 - p, 1 - p)
    with pytest.raises(NotInvertible):
        LocalMF((2, 1))


def test_inconsistent_params_are_rejected():
    with pytest.raises(ValueError):
        LocalMF((1, 1, 2), params=(1, 5))


def test_inverse_detects_broken_duality(monkeypatch):
    import isomf.localmf as lm

    monkeypatch.setattr(lm, "inverse_values", lambda v: [1] + [0] * (len(v) - 1))
    with pytest.raises(DualityViolation):
        inverse(from_params((1, 1), 4))


@settings(max_examples=60)
@given(int_cores())
def test_inverse_is_involution(t):
    f = from_params(t, 12)
    g = inverse(inverse(f))
    assert g.values == f.values
    assert convolve(f, inverse(f)).values == identity_mf(12).values


@settings(max_examples=40)
@given(int_cores(), int_cores(), int_cores())
def test_convolution_is_commutative_and_associative(a, b, c):
    f, g, h = (from_params(x, 10) for x in (a, b, c))
    assert convolve(f, g).values == convolve(g, f).values
    assert convolve(convolve(f, g), h).values == convolve(f, convolve(g, h)).values


def test_degree_examples():
    assert degree(catalog_mf("tau", N=8)) == 2
    assert degree(convolve(catalog_mf("tau", N=12), catalog_mf("sigma_1", N=12))) == 4
    assert degree(catalog_mf("phi", N=8)) == math.inf
    assert degree(identity_mf(4)) == 0


def test_classification():
    assert classify_type(identity_mf(6)) == 1
    assert classify_type(catalog_mf("sigma_1", N=6)) == 2
    assert classify_type(catalog_mf("mu", N=6)) == 3
    assert classify_type(catalog_mf("phi", N=6)) == 4
    assert classify_type(inverse(catalog_mf("tau", N=6))) == 3
    assert classify_type(convolve(catalog_mf("zeta", N=6), catalog_mf("mu", N=6))) == 1


def test_structure_and_valence_propagate():
    prod = convolve(catalog_mf("zeta_1", N=6), inverse(catalog_mf("zeta", N=6)))
    assert prod.structure == BOTH_INFINITE and prod.valence == (1, 1)
    assert inverse(catalog_mf("tau", N=6)).structure == FINITE_VALUES
    assert convolve(catalog_mf("tau", N=6), catalog_mf("zeta", N=6)).structure == FINITE_PARAMS


def test_normal_form():
    pending, val, f = normal_form([(3, 1), (3, -1)], 6)
    assert pending == [] and val == (0, 0) and f.is_identity()
    _, val, f = normal_form([(p, 1), (1, -1)], 6)
    assert val == (1, 1) and f.values == catalog_mf("phi", N=6).values and classify_type(f) == 4
    _, val, f = normal_form([(1, 1), (1, 1)], 6)
    assert val == (2, 0) and f.values == tuple(range(1, 8))
    with pytest.raises(ValueError):
        normal_form([(0, 1)])


def test_json_round_trip():
    for f in (catalog_mf("sigma_1", N=5), catalog_mf("phi", p=3, N=5), inverse(from_params((3, 2), 5))):
        text = f.to_json()
        assert json.loads(text)["horizon"] == 5
        back = LocalMF.from_json(text)
        assert back.values == f.values and back.params == f.params and back.structure == f.structure


def test_global_assembly():
    assert global_eval(family("sigma_1"), 12) == 28
    assert global_eval(family("tau"), 36) == 9
    assert global_eval(family("phi"), 100) == 40
    assert global_eval(family("mu"), 30) == -1
    assert global_eval(family("mu"), 12) == 0
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
    with pytest.raises(ValueError):
        global_eval(family("tau"), 0)


def test_specialize_symbolic_function():
    f = catalog_mf("sigma_1", N=5).specialize(2)
    assert f.values == (1, 3, 7, 15, 31, 63)


def test_from_values_keeps_params_consistent():
    f = from_values([1, 3, 8, 21])
    assert f.recursion_holds()
