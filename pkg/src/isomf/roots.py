"""Rational convolution powers of local multiplicative functions.

For ``B(y) = sum F_n y^n`` with ``F_0 = 1`` the series ``H = B^q`` satisfies
``y H' B = q H y B'``.  Comparing coefficients gives

    n H_n = sum_{j=1}^{n} ((q + 1) j - n) F_j H_(n-j),

which determines ``H`` from ``H_0 = 1`` for any rational ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .localmf import BOTH_INFINITE, LocalMF, NotInvertible, cauchy, from_values
from .report import CheckReport


@dataclass(frozen=True)
class ConvPowerSeq:
    base: LocalMF
    q: Fraction
    values: tuple

    def as_mf(self) -> LocalMF:
        mf = from_values(self.values, structure=BOTH_INFINITE)
        return mf if self.q.denominator != 1 else from_values(self.values, structure=self.base.structure)


def conv_power(f: LocalMF, q, N: int | None = None) -> ConvPowerSeq:
    q = Fraction(q)
    N = f.horizon if N is None else N
    if N > f.horizon:
        raise ValueError(f"horizon {f.horizon} < {N}")
    F = f.values
    if F[0] != 1:
        raise NotInvertible("convolution powers need F_0 = 1")
    H = [F[0]]
    for n in range(1, N + 1):
        acc = 0 * F[0]
        for j in range(1, n + 1):
            c = (q + 1) * j - n
            if c:
                acc = acc + F[j] * H[n - j] * c
        h = acc * Fraction(1, n)
        if isinstance(h, Fraction) and h.denominator == 1:
            h = h.numerator
        H.append(h)
    return ConvPowerSeq(f, q, tuple(H))


def repeated_convolution(values, m: int, N: int) -> list:
    out = [values[0]] + [0 * values[0]] * N
    for _ in range(m):
        out = cauchy(out, values, N)
    return out


def check_root_roundtrip(f: LocalMF, m: int, N: int | None = None) -> CheckReport:
    """``(f^(1/m))^(*m) = f`` exactly to horizon ``N``."""
    if m < 2:
        raise ValueError("root order must be at least 2")
    N = f.horizon if N is None else N
    root = conv_power(f, Fraction(1, m), N).values
    back = repeated_convolution(root, m, N)
    rep = CheckReport("root-roundtrip", f"m={m}, N={N}")
    for n in range(N + 1):
        rep.record(back[n] == f.values[n], n=n, lhs=back[n], rhs=f.values[n])
    return rep
