"""The twelve acceptance criteria, one function each.

Each function returns a :class:`CheckReport`; the CLI suites and the test
suite both call these, so a green CLI run and a green test mean the same
thing.  Expected constants are either frozen reference strings or values
produced by an oracle that does not share code with the routine under test
(integer divisor sums, direct binomial coefficients, plain Fibonacci loops).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .catalog import catalog_mf, family, fibonacci_mf
from .companion import CoreParams
from .identities import (
    check_core_product,
    check_symbolic_br,
    check_wip_consistency,
    sweep_busche_ramanujan,
    sweep_duality,
    sweep_negative_hook_magnitude,
    sweep_hook_expansion,
)
from .isobaric import format_isobaric, gfp_poly
from .localmf import convolve, degree, from_values, global_eval, inverse, recover_params
from .norm import (
    check_norm_oracle,
    check_norm_inverse_params,
    km_norm,
    sweep_norm_degree,
    sweep_norm_mult,
    textbook,
)
from .periodicity import check_column_periods, is_irreducible_mod_p, period_mod, sweep_period_divides
from .report import CheckReport
from .ring import PolyP
from .roots import check_root_roundtrip, conv_power

# Reference table of the first five symbolic GFP polynomials.
GFP_TABLE = {
    1: "t1",
    2: "t1^2 + t2",
    3: "t1^3 + 2*t1*t2 + t3",
    4: "t1^4 + 3*t1^2*t2 + t2^2 + 2*t1*t3 + t4",
    5: "t1^5 + 4*t1^3*t2 + 3*t1*t2^2 + 3*t1^2*t3 + 2*t2*t3 + 2*t1*t4 + t5",
}


def gfp_table() -> CheckReport:
    rep = CheckReport("gfp-table", "n = 1..5, symbolic")
    for n, expected in GFP_TABLE.items():
        got = format_isobaric(gfp_poly(n, n))
        rep.record(got == expected, n=n, lhs=got, rhs=expected)
    return rep


def _fib(N):
    f = [1, 1]
    while len(f) <= N:
        f.append(f[-1] + f[-2])
    return f


def recoveries(N: int = 12) -> CheckReport:
    rep = CheckReport("recoveries", f"horizon {N}")
    tau = recover_params([n + 1 for n in range(N + 1)]).params
    rep.record(list(tau) == [2, -1] + [0] * (N - 2), what="tau", lhs=list(tau))

    p = PolyP.gen()
    sigma_vals = [sum((p**j for j in range(n + 1)), PolyP.const(0)) for n in range(N + 1)]
    sig = recover_params(sigma_vals).params
    rep.record(list(sig) == [p + 1, -p] + [0] * (N - 2), what="sigma symbolic", lhs=list(sig))

    phi_sym = [PolyP.const(1)] + [p**n - p ** (n - 1) for n in range(1, N + 1)]
    rep.record(list(recover_params(phi_sym).params) == [p - 1] * N, what="phi symbolic")
    for q in (2, 3, 5, 7):
        phi = textbook("phi")
        got = recover_params([phi(q**n) for n in range(N + 1)]).params
        rep.record(list(got) == [q - 1] * N, what="phi", p=q, lhs=list(got))
        mu = textbook("mu")
        got = recover_params([mu(q**n) for n in range(N + 1)]).params
        rep.record(list(got) == [-1] * N, what="mu", p=q, lhs=list(got))
    return rep


def core_product() -> CheckReport:
    rep = CheckReport("core-product", "tau * sigma_1, symbolic and p = 2")
    p = PolyP.gen()
    expected = [p + 3, -3 * (p + 1), 3 * p + 1, -p]
    tau, sig = catalog_mf("tau", N=12), catalog_mf("sigma_1", N=12)
    prod = convolve(tau, sig)
    got = list(prod.params[:4])
    rep.record(got == expected and all(x == 0 for x in prod.params[4:]), what="params", lhs=got)
    rep.record(degree(prod) == 4, what="degree", lhs=degree(prod))
    rep.merge(check_core_product(tau.params[:2], sig.params[:2]))
    # p = 2 from integer values only
    t2 = [n + 1 for n in range(13)]
    s2 = [2 ** (n + 1) - 1 for n in range(13)]
    prod2 = from_values([sum(t2[j] * s2[n - j] for j in range(n + 1)) for n in range(13)])
    rep.record(list(prod2.params[:4]) == [5, -9, 7, -2] and degree(prod2) == 4, what="p=2",
               lhs=list(prod2.params[:4]))
    rep.record(list(prod2.values[:5]) == [1, 5, 16, 42, 99], what="p=2 values", lhs=list(prod2.values[:5]))
    rep.merge(check_core_product((2, -1), (3, -2)))
    rep.notes = {"params": got}
    return rep


def busche_ramanujan() -> CheckReport:
    rep = sweep_busche_ramanujan()
    rep.merge(check_symbolic_br())
    return rep


def hook_generalisation() -> CheckReport:
    return sweep_hook_expansion()


def norm_suite() -> CheckReport:
    rep = CheckReport("norm", "Fibonacci, tau, multiplicativity grid, degree, divisor-sum oracle")
    fib = fibonacci_mf(16)
    f = _fib(17)
    nm = km_norm(fib, 8)
    rep.record(list(nm.values[1:]) == [f[2 * n + 1] for n in range(1, 9)], what="fibonacci N_n = f_2n+1",
               lhs=list(nm.values))
    rep.record(list(nm.params) == [3, -1] + [0] * 6, what="fibonacci params", lhs=list(nm.params))
    nt = km_norm(catalog_mf("tau", p=2, N=16), 8)
    rep.record(list(nt.values) == [n + 1 for n in range(9)], what="N(tau) = tau", lhs=list(nt.values))
    rep.record(list(nt.params) == [2, -1] + [0] * 6, what="N(tau) params", lhs=list(nt.params))
    rep.merge(sweep_norm_mult(-2, 2, 4))
    rep.merge(sweep_norm_degree(4))
    rep.merge(check_norm_oracle())
    rep.merge(check_norm_inverse_params(fib, 8))
    return rep


_CATALOG = [("zeta", None), ("zeta_k", 2), ("tau", None), ("sigma_k", 1), ("sigma_k", 3),
            ("phi", None), ("mu", None), ("liouville", None)]


def roots_suite(N: int = 12) -> CheckReport:
    rep = CheckReport("roots", f"horizon {N}")
    for name, k in _CATALOG:
        for p in (2, 3, None):
            f = catalog_mf(name, k, p, N)
            rep.record(list(conv_power(f, 1).values) == list(f.values), what="q=1", name=name, p=p)
            rep.record(list(conv_power(f, -1).values) == list(inverse(f).values), what="q=-1", name=name, p=p)
    half = conv_power(catalog_mf("zeta", p=2, N=8), Fraction(1, 2)).values
    rep.record(list(half) == [Fraction(comb(2 * n, n), 4**n) for n in range(9)], what="zeta^(1/2)",
               lhs=list(half))
    for f, label in ((catalog_mf("tau", p=2, N=N), "tau"), (catalog_mf("sigma_1", p=2, N=N), "sigma p=2"),
                     (fibonacci_mf(N), "fibonacci")):
        for m in (2, 3, 5):
            sub = check_root_roundtrip(f, m, N)
            rep.record(sub.passed, what="roundtrip", name=label, m=m, witness=sub.witness)
    return rep


def periodicity_suite() -> CheckReport:
    rep = CheckReport("periodicity", "Fibonacci periods and irreducible sweep")
    for p, expected in ((2, 3), (3, 8), (7, 16)):
        res = period_mod((1, 1), p)
        rep.record(res.period == expected and (p * p - 1) % res.period == 0 and res.preperiod == 0,
                   p=p, period=res.period, expected=expected)
        rep.record(is_irreducible_mod_p((1, 1), p), p=p, what="irreducible")
    res5 = period_mod((1, 1), 5)
    rep.record(res5.period == 20 and not is_irreducible_mod_p((1, 1), 5), p=5, period=res5.period)
    sweep = sweep_period_divides()
    rep.merge(sweep)
    for p in (2, 3, 7):
        rep.merge(check_column_periods((1, 1), p))
    rep.notes = {**sweep.notes, "fibonacci_mod_5_period": res5.period}
    return rep


def wip_suite() -> CheckReport:
    return check_wip_consistency(4, 10)


def duality_suite() -> CheckReport:
    return sweep_duality(500, max_k=3, N=12)


def negative_hooks() -> CheckReport:
    return sweep_negative_hook_magnitude((2, 3), 3)


def global_smoke() -> CheckReport:
    rep = CheckReport("global", "local assembly")
    for fam, n, expected in ((family("sigma_1"), 12, 28), (family("tau"), 36, 9), (family("phi"), 100, 40)):
        got = global_eval(fam, n)
        rep.record(got == expected, name=fam.name, n=n, lhs=got, rhs=expected)
    return rep


CRITERIA = {
    1: ("gfp-table", gfp_table),
    2: ("recoveries", recoveries),
    3: ("core-product", core_product),
    4: ("busche-ramanujan", busche_ramanujan),
    5: ("hook-generalisation", hook_generalisation),
    6: ("norm", norm_suite),
    7: ("roots", roots_suite),
    8: ("periodicity", periodicity_suite),
    9: ("wip", wip_suite),
    10: ("duality", duality_suite),
    11: ("negative-hooks", negative_hooks),
    12: ("global", global_smoke),
}

SUITES = {name: fn for name, fn in CRITERIA.values()}
