from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings

from conftest import int_cores
from isomf.companion import (
    CoreParams,
    SingularMatrix,
    check_negative_hook_magnitude,
    companion_inverse,
    companion_matrix,
    determinant,
    gfp_extended,
    glp_trace,
    hook,
    hook_jt,
    hook_row,
    identity_matrix,
    mat_mul,
    matrix_power,
    orbit_rows,
    schur_general,
)
from isomf.identities import column_recursion_holds
from isomf.ring import ModInt, PolyP

p = PolyP.gen()


def test_companion_layout():
    assert companion_matrix((1, 1)) == [[0, 1], [1, 1]]
    assert companion_matrix((2, -1)) == [[0, 1], [-1, 2]]
    assert companion_matrix((p + 1, -p)) == [[0, 1], [-p, p + 1]]


def test_truncated_and_empty_cores_have_no_matrix():
    with pytest.raises(ValueError):
        companion_matrix(CoreParams((1, 1), finite=False))
    with pytest.raises(ValueError):
        CoreParams((1, 0))


def test_powers():
    assert matrix_power((1, 1), 2) == [[1, 1], [1, 2]]
    assert matrix_power((1, 1), -1) == [[-1, 1], [1, 0]]
    assert matrix_power((3, 2), -2) == [[Fraction(11, 4), Fraction(-3, 4)], [Fraction(-3, 2), Fraction(1, 2)]]
    assert matrix_power((3, 2), 0) == identity_matrix(2)


def test_singular_negative_power():
    with pytest.raises(SingularMatrix):
        matrix_power((p + 1, -p), -1)
    with pytest.raises(SingularMatrix):
        matrix_power((ModInt(1, 6), ModInt(2, 6)), -1)


def test_modular_inverse():
    t = (ModInt(1, 7), ModInt(3, 7))
    A = companion_matrix(t)
    assert mat_mul(A, companion_inverse(t)) == identity_matrix(2, ModInt(1, 7))


def test_hook_examples():
    assert hook((1, 1), 5, 0) == 8
    assert hook((1, 1), 2, 1) == -1
    assert hook((1, 1), -1, 0) == 0
    assert hook_jt((1, 1), 2, 1) == -1
    assert hook_jt((2, -1), 3, 1) == 3
    assert hook_jt((2, -1), 4, 0) == 5


def test_schur_examples():
    assert schur_general((1, 1), [5]) == 8
    assert schur_general((1, 1), [1, 1]) == -1
    assert schur_general((3, 2), [2, 2]) == 4
    with pytest.raises(ValueError):
        schur_general((1, 1), [1, 2])


def test_determinant_small():
    assert determinant([[2, 3], [1, 4]]) == 5
    assert determinant([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3


def test_trace_examples():
    assert [glp_trace((1, 1), n) for n in range(1, 5)] == [1, 3, 4, 7]
    assert glp_trace((2, -1), 3) == 2
    assert glp_trace((5, -3, 2), 1) == 5


def test_negative_hook_magnitude_examples():
    r = check_negative_hook_magnitude((3, 2), 1, 0)
    assert r.passed and r.notes["lhs"] == Fraction(-3, 4) and r.notes["observed_sign"] == -1
    r = check_negative_hook_magnitude((3, 2), 0, 0)
    assert r.passed and r.notes["lhs"] == Fraction(1, 2) and r.notes["observed_sign"] == 1
    r = check_negative_hook_magnitude((3, 2), 2, 0)
    assert r.passed and r.notes["lhs"] == Fraction(11, 8)


def test_negative_f_values_vanish_on_first_k_minus_one_indices():
    F = gfp_extended((1, 2, 3), -2, 3)
    assert F[-2] == F[-1] == 0 and F[0] == 1


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_orbit_hooks_match_jacobi_trudi(k):
    for t in product(range(-2, 3), repeat=k):
        if t[-1] == 0:
            continue
        for n in range(1, 9):
            row = hook_row(t, n)
            assert row == [hook_jt(t, n, j) for j in range(k)]
            assert row == [hook(t, n, j) for j in range(k)]


@settings(max_examples=40)
@given(int_cores(max_k=4))
def test_columns_are_recursions(t):
    assert column_recursion_holds(t, -5, 10).passed


@settings(max_examples=30)
@given(int_cores(max_k=3))
def test_power_group_law(t):
    for m in range(-4, 5):
        for n in range(-4, 5):
            assert mat_mul(matrix_power(t, m), matrix_power(t, n)) == matrix_power(t, m + n)


@settings(max_examples=30)
@given(int_cores(max_k=4))
def test_orbit_rows_are_bottom_rows(t):
    rows = orbit_rows(t, -3, 6)
    for n in range(-3, 7):
        assert rows[n] == matrix_power(t, n)[-1]


def test_symbolic_hooks():
    t = (p + 1, -p)
    assert hook(t, 3, 0) == p**3 + p**2 + p + 1
    assert hook_row(t, 3) == [hook_jt(t, 3, 0), hook_jt(t, 3, 1)]
