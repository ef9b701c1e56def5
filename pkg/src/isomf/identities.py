"""Checkers for identities about local multiplicative functions.

Every checker computes both sides from the recursion or the convolution,
never from a closed form under test, and returns a :class:`CheckReport`.
"""

from __future__ import annotations

import itertools
import random
from math import comb

from .companion import (
    CoreParams,
    check_negative_hook_magnitude,
    core_multiply,
    gfp_values,
    glp_trace,
    hook_jt,
    hook_row,
    orbit_rows,
)
from .isobaric import (
    IsobaricPoly,
    WeightVector,
    gfp_poly,
    glp_poly,
    series_from_genfun,
    wip_poly,
    wip_recursive,
)
from .localmf import (
    FINITE_PARAMS,
    LocalMF,
    DualityViolation,
    convolve,
    degree,
    from_params,
    inverse,
    recover_params,
    with_inverse_params,
)
from .report import CheckReport

# ---------------------------------------------------------------- Busche-Ramanujan


def _F2(t1, t2, N):
    return gfp_values((t1, t2), N)


def check_br_product(t1, t2, r: int, s: int) -> CheckReport:
    """``F_(r+s) = F_r F_s + t_2 F_(r-1) F_(s-1)`` for a degree-2 core."""
    if not 1 <= r <= s:
        raise ValueError("need 1 <= r <= s")
    F = _F2(t1, t2, r + s)
    rep = CheckReport("busche-ramanujan-product", f"t=({t1},{t2}), r={r}, s={s}")
    lhs = F[r + s]
    rhs = F[r] * F[s] + t2 * F[r - 1] * F[s - 1]
    rep.record(lhs == rhs, t=[t1, t2], r=r, s=s, lhs=lhs, rhs=rhs)
    return rep


def check_br_inverse(t1, t2, r: int, s: int) -> CheckReport:
    """Expansion form, the vanishing companion sum, and the equivalence of the product and expansion forms."""
    if not 1 <= r <= s:
        raise ValueError("need 1 <= r <= s")
    F = _F2(t1, t2, r + s)
    m = -t2
    rep = CheckReport("busche-ramanujan-expansion", f"t=({t1},{t2}), r={r}, s={s}")

    lhs42 = F[r] * F[s]
    rhs42 = sum((m**j * F[r + s - 2 * j] for j in range(r + 1)), 0 * lhs42)
    rep.record(lhs42 == rhs42, form="expansion", t=[t1, t2], r=r, s=s, lhs=lhs42, rhs=rhs42)

    lemma = t2 * F[r - 1] * F[s - 1] + sum(
        (m**j * F[r + s - 2 * j] for j in range(1, r + 1)), 0 * lhs42
    )
    rep.record(lemma == 0, form="lemma", t=[t1, t2], r=r, s=s, lhs=lemma, rhs=0)

    # product residual + expansion residual + vanishing sum vanishes identically
    res41 = F[r + s] - F[r] * F[s] - t2 * F[r - 1] * F[s - 1]
    res42 = lhs42 - rhs42
    rep.record(
        res41 + res42 + lemma == 0,
        form="equivalence",
        t=[t1, t2],
        r=r,
        s=s,
        lhs=res41 + res42 + lemma,
        rhs=0,
    )
    return rep


def sweep_busche_ramanujan(lo: int = -3, hi: int = 3, max_rs: int = 12) -> CheckReport:
    rep = CheckReport(
        "busche-ramanujan",
        f"t1,t2 in [{lo},{hi}], t2 != 0, 1 <= r <= s, r+s <= {max_rs}",
    )
    for t1, t2 in itertools.product(range(lo, hi + 1), repeat=2):
        if t2 == 0:
            continue
        for r in range(1, max_rs // 2 + 1):
            for s in range(r, max_rs - r + 1):
                rep.merge(check_br_product(t1, t2, r, s))
                rep.merge(check_br_inverse(t1, t2, r, s))
    return rep


# ---------------------------------------------------------------- McCarthy


def check_mccarthy(f: LocalMF, N: int | None = None):
    """Returns ``(recursion_report, b_report)`` for a degree-2 local function.

    The recursion ``F_(n+1) = F_1 F_n - F_(n-1) B`` is checked with
    ``B = F_1^2 - F_2``.  The sequence ``b_n = F_n^2 - F_(2n)`` (``b_0 = 1``)
    is then recovered to parameters ``u``; ``notes['degree_one']`` says
    whether ``u_j`` vanishes for ``j >= 2`` within the horizon.
    """
    if degree(f) != 2:
        raise ValueError(f"McCarthy's recursion needs a degree-2 function, got degree {degree(f)}")
    F = f.values
    t = f.params if f.params is not None else recover_params(F).params
    B = F[1] ** 2 - F[2]
    rec = CheckReport("mccarthy-recursion", f"n < {f.horizon}")
    rec.record(B == -t[1], n=None, lhs=B, rhs=-t[1], what="B = -t2")
    for n in range(1, f.horizon):
        lhs = F[n + 1]
        rhs = F[1] * F[n] - F[n - 1] * B
        rec.record(lhs == rhs, n=n, lhs=lhs, rhs=rhs)
    rec.notes["B"] = B

    M = f.horizon // 2 if N is None else N
    if 2 * M > f.horizon:
        raise ValueError("b_n needs values up to 2n")
    b = [F[0]] + [F[n] ** 2 - F[2 * n] for n in range(1, M + 1)]
    u = recover_params(b).params
    degree_one = len(u) >= 1 and u[0] != 0 and all(x == 0 for x in u[1:])
    brep = CheckReport("mccarthy-B-degree", f"b_n = F_n^2 - F_2n, n <= {M}")
    if len(u) >= 2:
        brep.record(u[1] == -t[1] * F[2], lhs=u[1], rhs=-t[1] * F[2], what="u2 = -t2 F2")
    if degree_one:
        brep.record(F[2] == 0 or t[1] == 0, what="degree one forces F2 = 0", F2=F[2])
    brep.notes = {"u": list(u), "degree_one": degree_one, "F2_zero": F[2] == 0}
    return rec, brep


# ---------------------------------------------------------------- hook generalisation


def check_hook_expansion(t, r: int, s: int, *, cross_validate: bool = True) -> CheckReport:
    """``F_(r+s) = sum_j (-1)^j S_(r,1^j) F_(s-j)`` over the whole hook row ``j = 0..k-1``.

    The row sum is what the orbit factorisation ``A^(r+s) = A^r A^s``
    gives.  The truncated range ``j <= (s-r)+1`` is evaluated as well and
    reported in ``notes['truncated_range_holds']`` without affecting the
    verdict.  Hooks are cross-checked against Jacobi-Trudi determinants.
    """
    t = t if isinstance(t, CoreParams) else CoreParams(tuple(t))
    if not 0 <= r <= s:
        raise ValueError("need 0 <= r <= s")
    k = t.k
    F = gfp_values(t, r + s)
    Fx = {m: (0 * F[0] if m < 0 else F[m]) for m in range(-(k - 1), r + s + 1)}
    hooks = hook_row(t, r)
    rep = CheckReport("hook-busche-ramanujan", f"t={list(t.params)}, r={r}, s={s}")
    terms = [(-1) ** j * hooks[j] * Fx[s - j] for j in range(k)]
    lhs = Fx[r + s]
    rhs = sum(terms, 0 * lhs)
    rep.record(lhs == rhs, t=list(t.params), r=r, s=s, lhs=lhs, rhs=rhs)
    if cross_validate and r >= 1:
        for j in range(k):
            jt = hook_jt(t, r, j)
            rep.record(jt == hooks[j], t=list(t.params), r=r, j=j, orbit=hooks[j], jacobi_trudi=jt)
    e = s - r
    truncated = sum(terms[: min(e + 1, k - 1) + 1], 0 * lhs)
    rep.notes["truncated_range_holds"] = truncated == lhs
    return rep


def sweep_hook_expansion(max_k: int = 4, lo: int = -2, hi: int = 2, max_s: int = 8) -> CheckReport:
    rep = CheckReport(
        "hook-busche-ramanujan",
        f"k <= {max_k}, t in [{lo},{hi}]^k, t_k != 0, 0 <= r <= s <= {max_s}",
    )
    truncated_failures = 0
    first_truncated_failure = None
    for k in range(1, max_k + 1):
        for t in itertools.product(range(lo, hi + 1), repeat=k):
            if t[-1] == 0:
                continue
            core = CoreParams(t)
            # hooks agree with Jacobi-Trudi for every arm length used below
            for r in range(1, max_s + 1):
                for j, h in enumerate(hook_row(core, r)):
                    jt = hook_jt(core, r, j)
                    rep.record(jt == h, t=list(t), r=r, j=j, orbit=h, jacobi_trudi=jt)
            for s in range(max_s + 1):
                for r in range(s + 1):
                    sub = check_hook_expansion(core, r, s, cross_validate=False)
                    rep.merge(sub)
                    if not sub.notes["truncated_range_holds"]:
                        truncated_failures += 1
                        if first_truncated_failure is None:
                            first_truncated_failure = {"t": list(t), "r": r, "s": s}
    rep.notes = {
        "truncated_range_failures": truncated_failures,
        "first_truncated_range_failure": first_truncated_failure,
    }
    return rep


# ---------------------------------------------------------------- parameters from values


def params_from_F(n: int) -> CheckReport:
    """Substitute ``t_j <- (-1)^(j+1) F_j`` into ``F_n`` and compare with ``(-1)^(n+1) t_n``.

    Both sides are symbolic polynomials in ``t_1..t_n``.
    """
    if not 1 <= n <= 12:
        raise ValueError("n out of range")
    images = [gfp_poly(n, j).scale((-1) ** (j + 1)) for j in range(1, n + 1)]
    lhs = gfp_poly(n, n).substitute(images)
    rhs = IsobaricPoly.variable(n, n).scale((-1) ** (n + 1))
    rep = CheckReport("params-from-values", f"n={n}")
    rep.record(lhs == rhs, n=n, lhs=str(lhs), rhs=str(rhs))
    return rep


# ---------------------------------------------------------------- binomial identity


def check_binomial(t1, t2, n: int) -> CheckReport:
    """``F_n = sum_j (-1)^j C(n-j, j) F_1^(n-2j) (-t_2)^j`` for a degree-2 core."""
    F = _F2(t1, t2, n)
    rhs = sum(
        ((-1) ** j * comb(n - j, j) * F[1] ** (n - 2 * j) * (-t2) ** j for j in range(n // 2 + 1)),
        0 * F[0],
    )
    rep = CheckReport("binomial", f"t=({t1},{t2}), n={n}")
    rep.record(F[n] == rhs, t=[t1, t2], n=n, lhs=F[n], rhs=rhs)
    # the display with F_(n-2j) in place of F_1^(n-2j)
    alternative = sum(
        ((-1) ** j * comb(n - j, j) * F[n - 2 * j] * (-t2) ** j for j in range(n // 2 + 1)),
        0 * F[0],
    )
    rep.notes["F_n_minus_2j_form_holds"] = alternative == F[n]
    return rep


def sweep_binomial(lo=-3, hi=3, max_n=10) -> CheckReport:
    rep = CheckReport("binomial", f"t1,t2 in [{lo},{hi}], t2 != 0, 1 <= n <= {max_n}")
    other_form_failures = 0
    for t1, t2 in itertools.product(range(lo, hi + 1), repeat=2):
        if t2 == 0:
            continue
        for n in range(1, max_n + 1):
            sub = check_binomial(t1, t2, n)
            other_form_failures += not sub.notes["F_n_minus_2j_form_holds"]
            sub.notes = {}
            rep.merge(sub)
    rep.notes = {"F_n_minus_2j_form_failures": other_form_failures}
    return rep


# ---------------------------------------------------------------- valence <1,1>


def _cm(t1, N):
    return from_params(CoreParams((t1,)), N, valence=(1, 0))


def check_totient_formulas(tp, tpp, N: int = 12) -> CheckReport:
    """For ``beta * gamma^-1`` with degree-1 cores ``tp != tpp``:

    ``F_n = tp^n - tp^(n-1) tpp``, ``t_n = -tpp^n + tp tpp^(n-1)``,
    ``F_n = tp^(n-1) F_1``, and every ``F_n``, ``t_n`` is non-zero.
    """
    if tp == tpp:
        raise ValueError("tp == tpp gives the identity")
    if tp == 0 or tpp == 0:
        raise ValueError("degree-1 parameters must be non-zero")
    alpha = convolve(_cm(tp, N), inverse(_cm(tpp, N)))
    F, t = alpha.values, alpha.params
    rep = CheckReport("valence-1-1", f"t'={tp}, t''={tpp}, n <= {N}")
    for n in range(1, N + 1):
        rep.record(F[n] == tp**n - tp ** (n - 1) * tpp, n=n, what="F_n", lhs=F[n])
        rep.record(t[n - 1] == -(tpp**n) + tp * tpp ** (n - 1), n=n, what="t_n", lhs=t[n - 1])
        rep.record(F[n] == tp ** (n - 1) * F[1], n=n, what="F_n = t'^(n-1) F_1", lhs=F[n])
        rep.record(F[n] != 0 and t[n - 1] != 0, n=n, what="type (inf, inf)")
    return rep


# ---------------------------------------------------------------- duality and products


def check_duality(f: LocalMF) -> CheckReport:
    """Inverse values are ``-t_n`` and inverse parameters are ``-F_n``."""
    rep = CheckReport("duality", f"horizon {f.horizon}")
    try:
        g = inverse(f)
    except DualityViolation as exc:
        rep.record(False, error=str(exc))
        return rep
    f2 = with_inverse_params(f)
    for n in range(1, f.horizon + 1):
        rep.record(f2.values[n] == -f2.inv_params[n - 1], n=n, what="F_n = -s_n")
        rep.record(g.values[n] == -f2.params[n - 1], n=n, what="F^-1_n = -t_n")
    return rep


def check_product_params(f1: LocalMF, f2: LocalMF) -> CheckReport:
    """Product parameter and value formulas in terms of the factors' parameters."""
    a, b = with_inverse_params(f1), with_inverse_params(f2)
    prod = with_inverse_params(convolve(a, b))
    N = prod.horizon
    tp, tpp, sp, spp = a.params, b.params, a.inv_params, b.inv_params
    rep = CheckReport("product-params", f"horizon {N}")
    for n in range(1, N + 1):
        t_n = tp[n - 1] - sum(
            (tp[n - j - 1] * tpp[j - 1] for j in range(1, n)), 0 * tp[0]
        ) + tpp[n - 1]
        rep.record(prod.params[n - 1] == t_n, n=n, what="t_n", lhs=prod.params[n - 1], rhs=t_n)
        F_n = -sp[n - 1] + sum((sp[n - j - 1] * spp[j - 1] for j in range(1, n)), 0 * sp[0]) - spp[n - 1]
        rep.record(prod.values[n] == F_n, n=n, what="F_n", lhs=prod.values[n], rhs=F_n)
    return rep


def check_core_product(t1, t2, N: int | None = None) -> CheckReport:
    """Recovered core of a product equals the product of the cores; degrees add."""
    c1 = t1 if isinstance(t1, CoreParams) else CoreParams(tuple(t1))
    c2 = t2 if isinstance(t2, CoreParams) else CoreParams(tuple(t2))
    N = N if N is not None else max(12, 2 * (c1.k + c2.k) + 2)
    prod = convolve(from_params(c1, N), from_params(c2, N))
    expected = core_multiply(c1.polynomial(), c2.polynomial())
    got = CoreParams.trimmed(prod.params).polynomial()
    rep = CheckReport("core-product", f"{list(c1.params)} * {list(c2.params)}")
    rep.record(got == expected, lhs=got, rhs=expected, what="core")
    rep.record(degree(prod) == c1.k + c2.k, lhs=degree(prod), rhs=c1.k + c2.k, what="degree")
    rep.notes = {"params": list(CoreParams.trimmed(prod.params).params)}
    return rep


def check_degree_one_times_inverse(t_beta, gamma_params, N: int = 12) -> CheckReport:
    """``beta`` of degree 1 times the inverse of a positive core ``gamma_params``.

    ``F_n = sum_j t'^(n-j) F''_j = -sum_j t'^(n-j) s''_j`` with ``s''_0 = -1``.
    """
    beta = _cm(t_beta, N)
    pos = from_params(CoreParams(tuple(gamma_params)), N)
    gamma = inverse(pos)
    alpha = convolve(beta, gamma)
    s2 = [-1] + list(pos.params)  # parameters of gamma^-1 = the positive factor
    rep = CheckReport("beta-times-negative", f"t'={t_beta}, gamma core {list(gamma_params)}")
    for n in range(N + 1):
        via_values = sum((t_beta ** (n - j) * gamma.values[j] for j in range(n + 1)), 0)
        via_params = -sum((t_beta ** (n - j) * s2[j] for j in range(n + 1)), 0)
        rep.record(alpha.values[n] == via_values == via_params, n=n, lhs=alpha.values[n],
                   rhs=via_values, alt=via_params)
    # truncated three-term shape for a degree-m positive factor
    m = len(gamma_params)
    for n in range(1, N + 1):
        shape = t_beta ** (n - 1) * alpha.values[1] - sum(
            (t_beta ** (n - j) * gamma_params[j - 1] for j in range(2, min(n, m) + 1)), 0
        )
        rep.record(alpha.values[n] == shape, n=n, what="t'^(n-1) F_1 - sum t'^(n-j) s''_j",
                   lhs=alpha.values[n], rhs=shape)
    return rep


def random_core(rng: random.Random, max_k: int = 3, lo: int = -3, hi: int = 3) -> CoreParams:
    k = rng.randint(1, max_k)
    t = [rng.randint(lo, hi) for _ in range(k - 1)]
    last = 0
    while last == 0:
        last = rng.randint(lo, hi)
    return CoreParams(tuple(t + [last]))


def sweep_duality(count: int = 500, seed: int = 20240601, max_k: int = 3, N: int = 12) -> CheckReport:
    """Duality, product-parameter formulas, core multiplicativity and degree additivity."""
    rng = random.Random(seed)
    rep = CheckReport("duality-and-products", f"{count} random cores, k <= {max_k}, horizon {N}")
    for _ in range(count):
        c1, c2 = random_core(rng, max_k), random_core(rng, max_k)
        f1, f2 = from_params(c1, N), from_params(c2, N)
        rep.merge(check_duality(f1))
        rep.merge(check_product_params(f1, f2))
        rep.merge(check_product_params(f1, inverse(f2)))
        rep.merge(check_core_product(c1, c2, N))
    return rep


# ---------------------------------------------------------------- WIP consistency


def check_wip_consistency(max_k: int = 4, max_n: int = 10, lo: int = -2, hi: int = 2) -> CheckReport:
    """Closed form, recursion and generating function agree; GLP equals the trace."""
    weights = {
        "gfp": WeightVector.gfp(),
        "glp": WeightVector.glp(),
    }
    for z in range(1, max_k):
        weights[f"hook{z}"] = WeightVector.hook(z)
    rep = CheckReport("wip-consistency", f"k <= {max_k}, n <= {max_n}, t in [{lo},{hi}]^k")
    for k in range(1, max_k + 1):
        symbolic = {
            name: [wip_poly(w, k, n) for n in range(max_n + 1)] for name, w in weights.items()
        }
        for n in range(1, max_n + 1):
            rep.record(symbolic["gfp"][n] == gfp_poly(k, n), k=k, n=n, what="gfp closed form")
            rep.record(symbolic["glp"][n] == glp_poly(k, n), k=k, n=n, what="glp closed form")
        for t in itertools.product(range(lo, hi + 1), repeat=k):
            for name, w in weights.items():
                closed = [symbolic[name][n].evaluate(t) for n in range(max_n + 1)]
                rec = wip_recursive(w, t, max_n)
                gf = series_from_genfun(w, t, max_n)
                ok = closed == rec == gf
                rep.record(ok, k=k, t=list(t), weight=name, closed=closed, recursion=rec, genfun=gf)
            if t[-1] != 0:
                core = CoreParams(t)
                for n in range(1, min(max_n, 8) + 1):
                    tr = glp_trace(core, n)
                    rep.record(tr == symbolic["glp"][n].evaluate(t), k=k, t=list(t), n=n,
                               what="trace", trace=tr)
    return rep


def check_gfp_recursion_symbolic(max_k: int = 4, max_n: int = 10) -> CheckReport:
    rep = CheckReport("gfp-recursion-symbolic", f"k <= {max_k}, n <= {max_n}")
    for k in range(1, max_k + 1):
        F = [gfp_poly(k, n) for n in range(max_n + 1)]
        for n in range(1, max_n + 1):
            acc = IsobaricPoly(k, n, {})
            for j in range(1, min(n, k) + 1):
                acc = acc + IsobaricPoly.variable(k, j) * F[n - j]
            rep.record(acc == F[n], k=k, n=n)
    return rep


# ---------------------------------------------------------------- negative hooks


def sweep_negative_hook_magnitude(ks=(2, 3), max_j: int = 3, lo: int = -2, hi: int = 2) -> CheckReport:
    rep = CheckReport("negative-hook-magnitude", f"k in {list(ks)}, j <= {max_j}, t in [{lo},{hi}]^k, t_k != 0")
    signs: dict = {}
    for k in ks:
        for t in itertools.product(range(lo, hi + 1), repeat=k):
            if t[-1] == 0:
                continue
            for j in range(max_j + 1):
                for s in range(k):
                    sub = check_negative_hook_magnitude(CoreParams(t), j, s)
                    rep.merge(sub)
                    sign = sub.notes["observed_sign"]
                    if sign is not None:
                        signs.setdefault(f"k={k},j={j},s={s}", set()).add(sign)
    rep.notes = {
        "observed_signs": {key: sorted(v) for key, v in sorted(signs.items())},
        "conjectured_sign": -1,
    }
    return rep


def column_recursion_holds(t, lo: int = -5, hi: int = 10) -> CheckReport:
    """Each orbit column satisfies ``c_n = sum_i t_i c_(n-i)``."""
    t = t if isinstance(t, CoreParams) else CoreParams(tuple(t))
    rows = orbit_rows(t, lo - t.k, hi)
    rep = CheckReport("orbit-column-recursion", f"t={list(t.params)}, {lo} <= n <= {hi}")
    for col in range(t.k):
        for n in range(lo, hi + 1):
            rhs = sum((t[i - 1] * rows[n - i][col] for i in range(1, t.k + 1)), 0 * rows[n][col])
            rep.record(rows[n][col] == rhs, col=col, n=n)
    return rep


def check_symbolic_br(N: int = 6) -> CheckReport:
    """Product and expansion forms with the symbolic divisor-sum core ``(p+1, -p)``."""
    from .catalog import catalog

    t = catalog("sigma_1")
    rep = CheckReport("busche-ramanujan-symbolic", f"t=(p+1,-p), r+s <= {N}")
    for r in range(1, N // 2 + 1):
        for s in range(r, N - r + 1):
            rep.merge(check_br_product(t[0], t[1], r, s))
            rep.merge(check_br_inverse(t[0], t[1], r, s))
    return rep


__all__ = [name for name in dir() if name.startswith(("check_", "sweep_", "params_", "column_"))] + [
    "random_core",
    "FINITE_PARAMS",
]
