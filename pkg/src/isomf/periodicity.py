"""Periods of GFP sequences over the integers and modulo m."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .companion import CoreParams, orbit_rows
from .report import CheckReport

INTEGRAL = "integral"


class BoundExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class PeriodResult:
    preperiod: int
    period: int
    modulus: object  # int, or INTEGRAL
    bound: int

    def to_dict(self) -> dict:
        return {"preperiod": self.preperiod, "period": self.period}


def _int_core(t) -> CoreParams:
    t = t if isinstance(t, CoreParams) else CoreParams(tuple(t))
    if not t.finite:
        raise ValueError("periods need a finite core")
    if not all(isinstance(x, int) for x in t):
        raise TypeError("periods need integer parameters")
    return t


def _step(t, state, m=None):
    nxt = sum(t[j] * state[-1 - j] for j in range(len(t)))
    if m is not None:
        nxt %= m
    return state[1:] + (nxt,)


def _initial_state(t, m=None):
    k = len(t)
    state = (0,) * (k - 1) + (1,)  # F_(1-k) .. F_0
    for _ in range(k - 1):
        state = _step(t, state, m)
    return state  # F_0 .. F_(k-1)


def period_mod(t, m: int, bound: int | None = None) -> PeriodResult:
    """First repeat of the state ``(F_n, ..., F_(n+k-1)) mod m``, starting at ``n = 0``."""
    t = _int_core(t)
    if m < 2:
        raise ValueError("modulus must be at least 2")
    tm = tuple(x % m for x in t)
    k = len(tm)
    bound = m**k + 1 if bound is None else bound
    seen = {}
    state = tuple(x % m for x in _initial_state(tm, m))
    n = 0
    while state not in seen:
        if n > bound:
            raise BoundExceeded(f"no repeat within {bound} states")
        seen[state] = n
        state = _step(tm, state, m)
        n += 1
    first = seen[state]
    return PeriodResult(first, n - first, m, bound)


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def _poly_mod(a: list, b: list, p: int) -> list:
    """Remainder of ``a`` by monic ``b`` over the field of ``p`` elements (highest power first)."""
    a = [x % p for x in a]
    while len(a) >= len(b):
        c = a[0]
        if c:
            for i in range(len(b)):
                a[i] = (a[i] - c * b[i]) % p
        a.pop(0)
    return a


def is_irreducible_mod_p(t, p: int) -> bool:
    """Trial division of the core by every monic polynomial of degree ``1..k//2``."""
    core = [x % p for x in CoreParams(tuple(t), finite=False).polynomial()]
    k = len(core) - 1
    if k <= 1:
        return True
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not any(_poly_mod(core, [1, *tail], p)):
                return False
    return True


def check_period_divides(t, p: int) -> CheckReport:
    """For a core irreducible mod ``p`` the period divides ``p^k - 1``."""
    t = _int_core(t)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if t[len(t) - 1] % p == 0:
        raise ValueError("t_k vanishes mod p")
    k = len(t)
    res = period_mod(t, p)
    irreducible = is_irreducible_mod_p(t.params, p)
    rep = CheckReport("period-divides-p^k-1", f"t={list(t.params)}, p={p}")
    rep.record(res.preperiod == 0, t=list(t.params), p=p, what="pure period", preperiod=res.preperiod)
    if irreducible:
        rep.record((p**k - 1) % res.period == 0, t=list(t.params), p=p, period=res.period, bound=p**k - 1)
    rep.notes = {"irreducible": irreducible, "period": res.period, "asserted": irreducible}
    return rep


def column_periods(t, p: int) -> list[int]:
    """Minimal period of every orbit column ``(-1)^j S_(n,1^j) mod p``."""
    t = _int_core(t)
    P = period_mod(t, p).period
    k = len(t)
    rows = orbit_rows(t, 0, 2 * P)
    periods = []
    for c in range(k):
        col = [rows[n][c] % p for n in range(2 * P + 1)]
        for d in range(1, P + 1):
            if P % d == 0 and all(col[n] == col[n + d] for n in range(P)):
                periods.append(d)
                break
    return periods


def check_column_periods(t, p: int) -> CheckReport:
    """Every column period divides the F-period; they coincide when the core is irreducible mod ``p``.

    For reducible cores a column can have a strictly shorter period
    (``t = (1, 1, 1)`` mod 2 has a column of period 2 against 4).
    """
    t = _int_core(t)
    P = period_mod(t, p).period
    cols = column_periods(t, p)
    irreducible = is_irreducible_mod_p(t.params, p)
    rep = CheckReport("column-period", f"t={list(t.params)}, p={p}")
    for c, d in enumerate(cols):
        ok = d == P if irreducible else P % d == 0
        rep.record(ok, t=list(t.params), p=p, column=c, column_period=d, period=P)
    rep.notes = {"irreducible": irreducible, "column_periods": cols, "period": P}
    return rep


def sweep_column_periods(max_k: int = 3, primes=(2, 3, 5, 7), lo: int = -2, hi: int = 2) -> CheckReport:
    rep = CheckReport("column-period", f"k <= {max_k}, p in {list(primes)}, t in [{lo},{hi}]^k")
    shorter = 0
    for p in primes:
        for k in range(1, max_k + 1):
            for t in itertools.product(range(lo, hi + 1), repeat=k):
                if t[-1] % p == 0:
                    continue
                sub = check_column_periods(CoreParams(t), p)
                rep.cases += sub.cases
                if not sub.passed and rep.passed:
                    rep.passed, rep.witness = False, sub.witness
                if any(d != sub.notes["period"] for d in sub.notes["column_periods"]):
                    shorter += 1
    rep.notes = {"reducible_cores_with_shorter_columns": shorter}
    return rep


def sweep_period_divides(max_k: int = 3, primes=(2, 3, 5, 7, 11, 13), lo: int = -2, hi: int = 2) -> CheckReport:
    rep = CheckReport("period-divides-p^k-1", f"k <= {max_k}, p in {list(primes)}, t in [{lo},{hi}]^k")
    asserted = reducible = 0
    for p in primes:
        for k in range(1, max_k + 1):
            for t in itertools.product(range(lo, hi + 1), repeat=k):
                if t[-1] == 0 or t[-1] % p == 0:
                    continue
                sub = check_period_divides(CoreParams(t), p)
                rep.cases += sub.cases
                if not sub.passed and rep.passed:
                    rep.passed, rep.witness = False, sub.witness
                if sub.notes["irreducible"]:
                    asserted += 1
                else:
                    reducible += 1
    rep.notes = {"irreducible_cases": asserted, "reducible_cases": reducible}
    return rep


# ---------------------------------------------------------------- over the integers


def _poly_divides(d: list, n: list) -> bool:
    """Does monic ``d`` divide ``n`` over the integers (highest power first)?"""
    a = list(n)
    while len(a) >= len(d):
        c = a[0]
        for i in range(len(d)):
            a[i] -= c * d[i]
        a.pop(0)
    return not any(a)


def detect_integral_period(t, bound: int = 10**4) -> PeriodResult | None:
    """Period of the integer sequence, or ``None`` if none is found within ``bound`` steps.

    With ``t_k != 0`` the companion matrix is invertible over the rationals,
    so any eventual period is a pure one and it suffices to wait for the
    initial state to come back.
    """
    t = _int_core(t)
    start = _initial_state(t)
    state = start
    for n in range(1, bound + 1):
        state = _step(t, state)
        if state == start:
            return PeriodResult(0, n, INTEGRAL, bound)
    return None


def roots_of_unity_certificate(t, period: int) -> bool:
    """The core divides ``X^period - 1``, so every root is a root of unity."""
    core = CoreParams(tuple(t)).polynomial()
    return _poly_divides(core, [1] + [0] * (period - 1) + [-1])


def cyclotomic(d: int) -> list:
    """Coefficients of the d-th cyclotomic polynomial, highest power first."""
    num = [1] + [0] * (d - 1) + [-1]
    for e in range(1, d):
        if d % e == 0:
            num = _poly_quotient(num, cyclotomic(e))
    return num


def _poly_quotient(n: list, d: list) -> list:
    a, q = list(n), []
    while len(a) >= len(d):
        c = a[0]
        q.append(c)
        for i in range(len(d)):
            a[i] -= c * d[i]
        a.pop(0)
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return q


def cyclotomic_core(d: int) -> CoreParams:
    return CoreParams(tuple(-c for c in cyclotomic(d)[1:]))
