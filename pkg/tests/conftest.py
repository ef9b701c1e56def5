from fractions import Fraction

from hypothesis import strategies as st

from isomf.ring import ModInt, PolyP

small_ints = st.integers(min_value=-50, max_value=50)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=30))
polys = st.lists(st.integers(min_value=-9, max_value=9), max_size=5).map(PolyP)


@st.composite
def residues(draw, modulus=None):
    m = modulus if modulus is not None else draw(st.integers(min_value=2, max_value=40))
    return ModInt(draw(st.integers(min_value=-100, max_value=100)), m)


@st.composite
def int_cores(draw, max_k=3, lo=-3, hi=3):
    k = draw(st.integers(min_value=1, max_value=max_k))
    head = draw(st.lists(st.integers(min_value=lo, max_value=hi), min_size=k - 1, max_size=k - 1))
    last = draw(st.integers(min_value=lo, max_value=hi).filter(lambda x: x != 0))
    return tuple(head) + (last,)
