"""Command-line front end.

Every subcommand prints one compact JSON document on standard output
(or CSV / plain text with ``--format``).  Exit status: 0 success or
passing check, 1 failing check, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction

from . import acceptance
from .catalog import UnknownFunction, catalog_mf, family
from .companion import CoreParams, hook_row, schur_general
from .identities import (
    check_binomial,
    check_br_inverse,
    check_br_product,
    check_mccarthy,
    check_hook_expansion,
    check_totient_formulas,
    params_from_F,
)
from .isobaric import WeightVector, format_isobaric, gfp_poly, glp_poly, wip_poly, wip_recursive
from .localmf import (
    DualityViolation,
    LocalMF,
    classify_type,
    convolve,
    default_horizon,
    degree,
    from_params,
    from_values,
    global_eval,
    inverse,
)
from .norm import km_norm
from .periodicity import check_period_divides, detect_integral_period, period_mod, roots_of_unity_certificate
from .report import CheckReport, jsonable
from .ring import RingError, format_scalar, parse_scalar, parse_scalar_list
from .roots import check_root_roundtrip, conv_power


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- operands


def _scalars(text: str) -> list:
    return parse_scalar_list(text)


def _prime_arg(text):
    if text is None or text == "p":
        return None
    return int(text)


def load_mf(text: str, horizon: int, p=None) -> LocalMF:
    """``tau`` / ``sigma_2`` (catalog), ``t=2,-1`` (parameters), ``v=1,2,3`` (values) or ``@file.json``."""
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            return LocalMF.from_json(fh.read())
    if text.startswith("t="):
        return from_params(CoreParams.trimmed(_scalars(text[2:])), horizon)
    if text.startswith("v="):
        return from_values(_scalars(text[2:]))
    return catalog_mf(text, None, p, horizon)


# ---------------------------------------------------------------- output


def _text(x) -> str:
    return x if isinstance(x, str) else format_scalar(x)


def _texts(seq) -> list[str]:
    """Scalar sequences are always emitted as strings, whatever their variant."""
    return [_text(v) for v in seq]


def _emit(payload, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(jsonable(payload, ints_as_text=False), separators=(",", ":")) + "\n")
        return
    seq = None
    if isinstance(payload, dict):
        for key in ("values", "params", "hooks"):
            if key in payload and isinstance(payload[key], (list, tuple)):
                seq = payload[key]
                break
    if fmt == "csv":
        if seq is None:
            raise UsageError("csv output needs a sequence-valued result")
        out.write("n,value\n")
        for n, v in enumerate(seq):
            out.write(f"{n},{_text(v)}\n")
        return
    # plain
    if seq is not None:
        out.write(" ".join(_text(v) for v in seq) + "\n")
    elif isinstance(payload, dict):
        for k, v in payload.items():
            shown = v if isinstance(v, str) else json.dumps(jsonable(v, ints_as_text=False), separators=(",", ":"))
            out.write(f"{k}: {shown}\n")
    else:
        out.write(f"{_text(payload)}\n")


# ---------------------------------------------------------------- commands


def _isobaric_cmd(args, poly_fn, weight):
    if args.symbolic:
        k = args.k if args.k is not None else args.n
        return {"poly": format_isobaric(poly_fn(k, args.n))}
    if args.t is None:
        raise UsageError("give --t or --symbolic")
    t = _scalars(args.t)
    return {"values": _texts(wip_recursive(weight, t, args.n))}


def cmd_gfp(args):
    return _isobaric_cmd(args, gfp_poly, WeightVector.gfp())


def cmd_glp(args):
    return _isobaric_cmd(args, glp_poly, WeightVector.glp())


def cmd_wip(args):
    head = tuple(int(x) for x in args.omega.split(","))
    tail = None if args.tail == "zero" else args.tail
    w = WeightVector(head, tail)
    return _isobaric_cmd(args, lambda k, n: wip_poly(w, k, n), w)


def cmd_hooks(args):
    t = CoreParams(tuple(_scalars(args.t)))
    return {"hooks": _texts(hook_row(t, args.n))}


def cmd_schur(args):
    lam = [int(x) for x in args.shape.split(",")]
    return {"value": _text(schur_general(CoreParams(tuple(_scalars(args.t))), lam))}


def cmd_recover(args):
    f = from_values(_scalars(args.values))
    d = degree(f)
    return {"params": _texts(f.params), "degree": d}


def _mf_payload(f: LocalMF):
    return f.to_dict()


def cmd_convolve(args):
    fs = [load_mf(s, args.horizon, _prime_arg(args.p)) for s in args.operands]
    out = fs[0]
    for g in fs[1:]:
        out = convolve(out, g)
    return _mf_payload(out)


def cmd_invert(args):
    return _mf_payload(inverse(load_mf(args.operand, args.horizon, _prime_arg(args.p))))


def cmd_classify(args):
    f = load_mf(args.operand, args.horizon, _prime_arg(args.p))
    d = degree(f)
    return {
        "type": classify_type(f),
        "structure": f.structure,
        "degree": d if isinstance(d, int) else "unbounded",
        "valence": list(f.valence) if f.valence is not None else None,
    }


def cmd_catalog(args):
    return _mf_payload(catalog_mf(args.name, args.k, _prime_arg(args.p), args.horizon))


def cmd_global(args):
    return {"value": _text(global_eval(family(args.name, args.k), args.n))}


_CHECKS = {
    "br-product": lambda a: check_br_product(*_pair(a), a.r, a.s),
    "br-inverse": lambda a: check_br_inverse(*_pair(a), a.r, a.s),
    "hook-br": lambda a: check_hook_expansion(CoreParams(tuple(_scalars(a.t))), a.r, a.s),
    "params-from-values": lambda a: params_from_F(a.n),
    "binomial": lambda a: check_binomial(*_pair(a), a.n),
    "totient": lambda a: check_totient_formulas(*_pair(a), a.n or 12),
}


def _pair(a):
    t = _scalars(a.t)
    if len(t) != 2:
        raise UsageError("this check needs a degree-2 core --t t1,t2")
    return t[0], t[1]


def cmd_identity(args):
    if args.suite:
        return _run_suite(args.suite, _IDENTITY_SUITES)
    if args.check == "mccarthy":
        operand = args.operand or (f"t={args.t}" if args.t else "tau")
        f = load_mf(operand, args.horizon, _prime_arg(args.p))
        rec, brep = check_mccarthy(f)
        rec.merge(brep)
        rec.notes = {**brep.notes, "B": rec.notes.get("B")}
        return rec
    if args.check is None:
        raise UsageError("give --suite or --check")
    if args.check in ("br-product", "br-inverse", "hook-br") and (args.r is None or args.s is None):
        raise UsageError("this check needs --r and --s")
    return _CHECKS[args.check](args)


def cmd_norm(args):
    if args.suite:
        return _run_suite("norm", {"norm": acceptance.norm_suite})
    f = load_mf(args.operand, args.horizon, _prime_arg(args.p))
    M = args.m if args.m is not None else f.horizon // 2
    res = km_norm(f, M)
    return {"values": _texts(res.values), "params": _texts(res.params), "degree": degree(from_values(res.values))}


def cmd_root(args):
    if args.suite:
        return _run_suite("roots", {"roots": acceptance.roots_suite})
    f = load_mf(args.operand, args.horizon, _prime_arg(args.p))
    if args.roundtrip is not None:
        return check_root_roundtrip(f, args.roundtrip)
    return {"q": str(Fraction(args.q)), "values": _texts(conv_power(f, Fraction(args.q)).values)}


def cmd_period(args):
    if args.suite:
        return _run_suite("periodicity", {"periodicity": acceptance.periodicity_suite})
    if args.t is None:
        raise UsageError("give --t")
    t = CoreParams(tuple(int(x) for x in _scalars(args.t)))
    if args.check_prime is not None:
        return check_period_divides(t, args.check_prime)
    if args.mod is not None:
        return period_mod(t, args.mod).to_dict()
    res = detect_integral_period(t, args.bound)
    if res is None:
        return {"periodic": False, "bound": args.bound}
    return {"periodic": True, "period": res.period,
            "roots_of_unity": roots_of_unity_certificate(t.params, res.period)}


def cmd_bench(args):
    out = {}
    for i, (name, fn) in acceptance.CRITERIA.items():
        start = time.perf_counter()
        rep = fn()
        out[name] = {"pass": rep.passed, "seconds": round(time.perf_counter() - start, 3)}
    return out


_IDENTITY_SUITES = {name: fn for name, fn in acceptance.SUITES.items()}


def _run_suite(name, table):
    if name == "all":
        rep = CheckReport("all", "every acceptance criterion")
        for fn in table.values():
            rep.merge(fn())
        return rep
    if name not in table:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(sorted(table))}")
    return table[name]()


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="isomf", description="Multiplicative functions as isobaric polynomial sequences.")
    top.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, horizon=True):
        p.add_argument("--format", choices=("json", "csv", "plain"), default=argparse.SUPPRESS)
        if horizon:
            p.add_argument("--horizon", type=int, default=None)
            p.add_argument("--p", default=None, help="prime for catalog operands (default: symbolic p)")

    for name in ("gfp", "glp", "wip"):
        p = sub.add_parser(name)
        common(p, horizon=False)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, default=None, help="number of variables (default n)")
        p.add_argument("--t", default=None)
        p.add_argument("--symbolic", action="store_true")
        if name == "wip":
            p.add_argument("--omega", required=True, help="leading weights, e.g. 0,1")
            p.add_argument("--tail", choices=("constant", "arithmetic", "zero"), default="constant")

    p = sub.add_parser("hooks")
    common(p, horizon=False)
    p.add_argument("--t", required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("schur")
    common(p, horizon=False)
    p.add_argument("--t", required=True)
    p.add_argument("--shape", "--lambda", dest="shape", required=True)

    p = sub.add_parser("recover")
    common(p, horizon=False)
    p.add_argument("--values", required=True)

    p = sub.add_parser("convolve")
    common(p)
    p.add_argument("operands", nargs="+")

    for name in ("invert", "classify"):
        p = sub.add_parser(name)
        common(p)
        p.add_argument("operand")

    p = sub.add_parser("catalog")
    common(p)
    p.add_argument("--name", required=True)
    p.add_argument("--k", type=int, default=None)

    p = sub.add_parser("global")
    common(p, horizon=False)
    p.add_argument("--name", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("identity")
    common(p)
    p.add_argument("--suite", default=None)
    p.add_argument("--check", choices=sorted([*_CHECKS, "mccarthy"]), default=None)
    p.add_argument("--t", default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--operand", default=None)

    p = sub.add_parser("norm")
    common(p)
    p.add_argument("operand", nargs="?")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--suite", action="store_true")

    p = sub.add_parser("root")
    common(p)
    p.add_argument("operand", nargs="?")
    p.add_argument("--q", default="1/2")
    p.add_argument("--roundtrip", type=int, default=None)
    p.add_argument("--suite", action="store_true")

    p = sub.add_parser("period")
    common(p, horizon=False)
    p.add_argument("--t", default=None)
    p.add_argument("--mod", type=int, default=None)
    p.add_argument("--check-prime", type=int, default=None)
    p.add_argument("--bound", type=int, default=10**4)
    p.add_argument("--suite", action="store_true")

    p = sub.add_parser("bench")
    common(p, horizon=False)
    return top


_VALUE_LIKE = re.compile(r"^-[\dp(]")


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Turn ``--t -1,-1`` into ``--t=-1,-1`` so values are not mistaken for flags."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("--") and "=" not in tok and i + 1 < len(argv) and _VALUE_LIKE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def run_command(argv, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    if getattr(args, "horizon", None) is None and hasattr(args, "horizon"):
        args.horizon = default_horizon()
    if args.command in ("norm", "root") and not args.suite and args.operand is None:
        err.write(f"isomf {args.command}: an operand or --suite is required\n")
        return 2
    handler = globals()[f"cmd_{args.command}"]
    try:
        result = handler(args)
        if isinstance(result, CheckReport):
            _emit(result.to_dict(), args.format, out)
            return 0 if result.passed else 1
        _emit(result, args.format, out)
        return 0
    except UsageError as exc:
        err.write(f"isomf {args.command}: {exc}\n")
        return 2
    except DualityViolation as exc:
        err.write(f"isomf {args.command}: {exc}\n")
        return 1
    except (RingError, ValueError, TypeError, KeyError, OSError, UnknownFunction) as exc:
        err.write(f"isomf {args.command}: {type(exc).__name__}: {exc}\n")
        return 2


def main(argv=None) -> None:
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
