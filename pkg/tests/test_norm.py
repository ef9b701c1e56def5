import pytest

from isomf.catalog import catalog_mf, fibonacci_mf
from isomf.localmf import from_params, identity_mf
from isomf.norm import (
    HorizonTooShort,
    check_norm_degree,
    check_norm_mult,
    check_norm_oracle,
    check_norm_inverse_params,
    divisor_sum_norm,
    km_norm,
    sweep_norm_mult,
    textbook,
)


def test_fibonacci_norm():
    res = km_norm(fibonacci_mf(16), 8)
    assert res.values[:3] == (1, 3, 8)
    assert res.params[:3] == (3, -1, 0)
    assert res.consumed == 16


def test_tau_norm():
    res = km_norm(catalog_mf("tau", p=3, N=10), 5)
    assert res.values == (1, 2, 3, 4, 5, 6)
    assert res.params[:3] == (2, -1, 0)


def test_identity_norm():
    assert km_norm(identity_mf(8), 4).values == (1, 0, 0, 0, 0)


def test_norm_params_reproduce_values():
    res = km_norm(from_params((2, -3, 1), 12), 6)
    assert from_params(res.params, 6).values == res.values


def test_horizon_check():
    with pytest.raises(HorizonTooShort):
        km_norm(fibonacci_mf(5), 3)


def test_multiplicativity_examples():
    z = catalog_mf("zeta", p=2, N=10)
    assert km_norm(z, 5).values == (1,) * 6
    assert check_norm_mult(z, z, 5).passed
    assert check_norm_mult(catalog_mf("tau", p=2, N=8), catalog_mf("sigma_1", p=2, N=8), 4).passed
    assert check_norm_mult(from_params((1, -2), 10), from_params((2, 1, -1), 10), 5).passed
    assert check_norm_mult(catalog_mf("tau", N=8), catalog_mf("sigma_1", N=8), 4).passed


def test_multiplicativity_grid():
    assert sweep_norm_mult(-2, 2, 4).passed


def test_degree_examples():
    assert check_norm_degree(catalog_mf("tau", p=2, N=20)).passed
    assert check_norm_degree(fibonacci_mf(20)).passed
    assert check_norm_degree(catalog_mf("zeta_1", p=2, N=12)).passed
    assert check_norm_degree(from_params((1, 0, 0, 2), 8)).passed


def test_inverse_parameter_form():
    for f in (fibonacci_mf(12), catalog_mf("tau", p=2, N=12), identity_mf(12), from_params((1, 2, -1), 12)):
        r = check_norm_inverse_params(f, 6)
        assert r.passed
    assert check_norm_inverse_params(fibonacci_mf(12), 6).notes["leading_minus_s2n_failures"] == 6


def test_divisor_sum_oracle():
    assert divisor_sum_norm(textbook("tau"), 2) == 2
    assert divisor_sum_norm(textbook("tau"), 4) == 3
    assert check_norm_oracle().passed
