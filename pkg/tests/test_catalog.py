import pytest

from isomf.catalog import UnknownFunction, catalog, catalog_mf
from isomf.localmf import convolve, from_params
from isomf.norm import textbook
from isomf.ring import PolyP

p = PolyP.gen()


def test_symbolic_entries():
    assert catalog("tau").params == (2, -1)
    assert catalog("sigma_1").params == (p + 1, -p)
    assert catalog("zeta_3").params == (p**3,)
    assert catalog("liouville").params == (-1,)
    assert all(isinstance(x, PolyP) for x in catalog("tau").params)
    phi = catalog("phi", horizon=5)
    assert not phi.finite and phi.params == (p - 1,) * 5


def test_unknown_name():
    with pytest.raises(UnknownFunction):
        catalog("ramanujan")
    with pytest.raises(ValueError):
        catalog("sigma_k")


def test_liouville_values():
    assert from_params(catalog("liouville", p=5), 3).values == (1, -1, 1, -1)


CASES = [("zeta", None), ("zeta_k", 1), ("zeta_k", 2), ("tau", None), ("sigma_k", 1), ("sigma_k", 2),
         ("phi", None), ("mu", None), ("liouville", None)]


@pytest.mark.parametrize("name,k", CASES)
@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_values_match_textbook_definitions(name, k, q):
    f = catalog_mf(name, k, q, 8)
    alpha = textbook(name, k)
    assert list(f.values) == [alpha(q**n) for n in range(9)]


@pytest.mark.parametrize("name,k", CASES)
def test_symbolic_specialises_to_numeric(name, k):
    sym = catalog_mf(name, k, None, 6)
    for q in (2, 3):
        assert sym.specialize(q).values == catalog_mf(name, k, q, 6).values


@pytest.mark.parametrize("k", [1, 2, 3])
def test_sigma_is_zeta_k_times_zeta(k):
    lhs = catalog_mf("sigma_k", k, None, 10)
    rhs = convolve(catalog_mf("zeta_k", k, None, 10), catalog_mf("zeta", None, None, 10))
    assert lhs.values == rhs.values
