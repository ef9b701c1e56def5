import pytest

from isomf.periodicity import (
    BoundExceeded,
    check_column_periods,
    check_period_divides,
    cyclotomic,
    cyclotomic_core,
    detect_integral_period,
    is_irreducible_mod_p,
    period_mod,
    roots_of_unity_certificate,
    sweep_column_periods,
    sweep_period_divides,
)


def test_fibonacci_periods():
    assert period_mod((1, 1), 2).period == 3
    assert period_mod((1, 1), 3).period == 8
    assert period_mod((1, 1), 7).period == 16
    r = period_mod((1, 1), 5)
    assert r.period == 20 and r.preperiod == 0
    assert period_mod((1, 1), 10).period == 60


def test_preperiod_when_tk_shares_factor():
    r = period_mod((1, 2), 4)
    assert r.preperiod > 0


def test_bound():
    with pytest.raises(BoundExceeded):
        period_mod((1, 1), 7, bound=5)


def test_period_divides_examples():
    r = check_period_divides((1, 1), 3)
    assert r.passed and r.notes["irreducible"] and r.notes["period"] == 8
    r = check_period_divides((1, 1), 7)
    assert r.passed and r.notes["irreducible"] and r.notes["period"] == 16
    r = check_period_divides((1, 1), 5)
    assert r.passed and not r.notes["irreducible"] and r.notes["period"] == 20
    assert (5**2 - 1) % 20 != 0
    with pytest.raises(ValueError):
        check_period_divides((1, 1), 4)
    with pytest.raises(ValueError):
        check_period_divides((1, 5), 5)


def test_irreducibility():
    assert is_irreducible_mod_p((1, 1), 2)
    assert not is_irreducible_mod_p((1, 1), 5)  # (X - 3)^2
    assert not is_irreducible_mod_p((0, 1), 3)  # X^2 - 1
    assert is_irreducible_mod_p((0, 0, 1), 7) is False  # X^3 - 1 has root 1
    assert is_irreducible_mod_p((1, 0, 1), 2)  # X^3 + X^2 + 1
    assert not is_irreducible_mod_p((1, 1, 1), 2)  # (X + 1)^3
    assert is_irreducible_mod_p((0, 1, 1), 2)  # X^3 + X + 1


def test_sweep():
    r = sweep_period_divides()
    assert r.passed and r.notes["irreducible_cases"] > 0


def test_integral_periods():
    assert detect_integral_period((-1, -1)).period == 3
    assert detect_integral_period((-1,)).period == 2
    assert detect_integral_period((1, 1), 2000) is None


@pytest.mark.parametrize("d", range(1, 13))
def test_cyclotomic_cores(d):
    res = detect_integral_period(cyclotomic_core(d))
    assert res.period == d
    assert roots_of_unity_certificate(cyclotomic_core(d).params, d)


def test_cyclotomic_polynomials():
    assert cyclotomic(1) == [1, -1]
    assert cyclotomic(6) == [1, -1, 1]
    assert cyclotomic(12) == [1, 0, -1, 0, 1]


def test_column_periods():
    for p in (2, 3, 7):
        assert check_column_periods((1, 1), p).passed
    r = check_column_periods((1, 1, 1), 2)
    assert r.passed and not r.notes["irreducible"] and r.notes["column_periods"] == [4, 2, 4]
    assert sweep_column_periods().passed
