"""The Kesava Menon norm of a local multiplicative function.

``N_n = sum_{j=0}^{2n} (-1)^j F_(2n-j) F_j`` is the coefficient of ``y^(2n)``
in ``A(y) A(-y)`` where ``A`` is the value generating function.  That
product is even in ``y``, so the norm is again a local multiplicative
function, and it is multiplicative in ``f`` because ``A`` is.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .companion import CoreParams
from .localmf import (
    FINITE_PARAMS,
    LocalMF,
    convolve,
    degree,
    from_params,
    from_values,
    recover_params,
    with_inverse_params,
)
from .report import CheckReport


class HorizonTooShort(ValueError):
    pass


@dataclass(frozen=True)
class NormResult:
    values: tuple  # N_0 = 1, N_1, ..., N_M
    params: tuple
    consumed: int  # source horizon used (2M)

    @property
    def M(self) -> int:
        return len(self.values) - 1

    def as_mf(self, structure: str = FINITE_PARAMS) -> LocalMF:
        return LocalMF(self.values, self.params, None, structure)


def km_norm(f: LocalMF, M: int | None = None) -> NormResult:
    M = f.horizon // 2 if M is None else M
    if f.horizon < 2 * M:
        raise HorizonTooShort(f"the norm to index {M} needs values up to {2 * M}, horizon is {f.horizon}")
    F = f.values
    vals = [F[0]]
    for n in range(1, M + 1):
        acc = 0 * F[0]
        for j in range(2 * n + 1):
            term = F[2 * n - j] * F[j]
            acc = acc - term if j % 2 else acc + term
        vals.append(acc)
    return NormResult(tuple(vals), tuple(recover_params(vals).params), 2 * M)


# ---------------------------------------------------------------- divisor-sum oracle


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _omega_big(n: int) -> int:
    count, d = 0, 2
    while d * d <= n:
        while n % d == 0:
            n //= d
            count += 1
        d += 1
    return count + (1 if n > 1 else 0)


def _squarefree(n: int) -> bool:
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def liouville(n: int) -> int:
    return -1 if _omega_big(n) % 2 else 1


def textbook(name: str, k: int | None = None):
    """Integer-level definitions, independent of any core parameters."""
    if name == "zeta":
        return lambda n: 1
    if name == "zeta_k":
        return lambda n: n**k
    if name == "tau":
        return lambda n: len(_divisors(n))
    if name == "sigma_k":
        return lambda n: sum(d**k for d in _divisors(n))
    if name == "liouville":
        return liouville
    if name == "mu":
        return lambda n: 0 if not _squarefree(n) else liouville(n)
    if name == "phi":
        return _totient
    raise KeyError(name)


def _totient(n: int) -> int:
    out, m, d = n, n, 2
    while d * d <= m:
        if m % d == 0:
            out -= out // d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out -= out // m
    return out


def divisor_sum_norm(alpha, n: int) -> int:
    """``sum_{d | n^2} alpha(n^2 / d) lambda(d) alpha(d)``."""
    m = n * n
    return sum(alpha(m // d) * liouville(d) * alpha(d) for d in _divisors(m))


# ---------------------------------------------------------------- checks


def check_norm_mult(f: LocalMF, g: LocalMF, M: int) -> CheckReport:
    """``N(f * g) = N(f) * N(g)`` entry-wise up to ``M``."""
    lhs = km_norm(convolve(f, g), M).values
    nf, ng = km_norm(f, M), km_norm(g, M)
    rhs = convolve(nf.as_mf(), ng.as_mf()).values
    rep = CheckReport("norm-multiplicative", f"M={M}")
    for n in range(M + 1):
        rep.record(lhs[n] == rhs[n], n=n, lhs=lhs[n], rhs=rhs[n])
    return rep


def check_norm_degree(f: LocalMF) -> CheckReport:
    """The norm's core has the same degree, computed to horizon ``2k+4``."""
    k = degree(f)
    if not isinstance(k, int):
        raise ValueError("degree preservation needs a finite core")
    M = 2 * k + 4
    if f.horizon < 2 * M:
        if f.params is None:
            raise HorizonTooShort(f"need horizon {2 * M}")
        f = from_params(CoreParams.trimmed(f.params), 2 * M)
    nm = km_norm(f, M)
    d = degree(from_values(nm.values))
    rep = CheckReport("norm-degree", f"k={k}, norm horizon {M}")
    rep.record(d == k, lhs=d, rhs=k, params=list(f.params[:k]) if f.params else None)
    return rep


def check_norm_inverse_params(f: LocalMF, M: int) -> CheckReport:
    """Norm in terms of the inverse parameters ``s`` (``s_0 = -1``).

    Asserted: ``N_n = -2 s_2n + 2 sum_{j=1}^{n-1} (-1)^j s_(2n-j) s_j + (-1)^n s_n^2``.
    The variant with leading ``-s_2n`` is evaluated and its failures are
    counted in ``notes``.
    """
    if f.horizon < 2 * M:
        raise HorizonTooShort(f"need horizon {2 * M}")
    g = with_inverse_params(f)
    s = (-1,) + tuple(g.inv_params)
    N = km_norm(f, M).values
    rep = CheckReport("norm-in-inverse-params", f"M={M}")
    truncated_failures = 0
    for n in range(1, M + 1):
        mid = 0 * N[0]
        for j in range(1, n):
            term = s[2 * n - j] * s[j]
            mid = mid - term if j % 2 else mid + term
        tail = s[n] * s[n] * (-1) ** n
        corrected = -2 * s[2 * n] + 2 * mid + tail
        rep.record(corrected == N[n], n=n, lhs=N[n], rhs=corrected)
        if -s[2 * n] + 2 * mid + tail != N[n]:
            truncated_failures += 1
    rep.notes = {"leading_minus_s2n_failures": truncated_failures}
    return rep


def sweep_norm_mult(lo: int = -2, hi: int = 2, M: int = 4) -> CheckReport:
    """Every pair of integer cores of degree at most 2 with entries in ``[lo, hi]``."""
    cores = []
    for k in (1, 2):
        for t in itertools.product(range(lo, hi + 1), repeat=k):
            if t[-1] != 0:
                cores.append(CoreParams(t))
    rep = CheckReport("norm-multiplicative", f"all degree <= 2 cores in [{lo},{hi}], M={M}")
    mfs = [from_params(c, 2 * M) for c in cores]
    for f, g in itertools.product(mfs, repeat=2):
        rep.merge(check_norm_mult(f, g, M))
    return rep


def sweep_norm_degree(max_k: int = 4, count: int = 60, seed: int = 7) -> CheckReport:
    rng = random.Random(seed)
    rep = CheckReport("norm-degree", f"{count} random cores per k <= {max_k}")
    for k in range(1, max_k + 1):
        for _ in range(count):
            t = [rng.randint(-3, 3) for _ in range(k - 1)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
            rep.merge(check_norm_degree(from_params(CoreParams(tuple(t)), 2 * (2 * k + 4))))
    return rep


def check_norm_oracle(names=None, primes=(2, 3, 5), max_n: int = 5) -> CheckReport:
    """``km_norm`` of each catalog function against the integer divisor sum."""
    from .catalog import catalog_mf

    names = names or [("zeta", None), ("zeta_k", 2), ("tau", None), ("sigma_k", 1),
                      ("sigma_k", 2), ("liouville", None), ("phi", None), ("mu", None)]
    rep = CheckReport("norm-divisor-sum", f"catalog, p in {list(primes)}, n <= {max_n}")
    for name, k in names:
        alpha = textbook(name, k)
        for p in primes:
            f = catalog_mf(name, k, p, 2 * max_n)
            N = km_norm(f, max_n).values
            for n in range(max_n + 1):
                oracle = divisor_sum_norm(alpha, p**n)
                rep.record(N[n] == oracle, name=name, k=k, p=p, n=n, lhs=N[n], rhs=oracle)
    return rep
