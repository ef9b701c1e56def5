"""Classical multiplicative functions as prime-parameterised cores."""

from __future__ import annotations

import re

from .companion import CoreParams
from .localmf import (
    BOTH_INFINITE,
    FINITE_PARAMS,
    FINITE_VALUES,
    LocalMF,
    MFFamily,
    default_horizon,
    from_params,
)
from .ring import PolyP

NAMES = ("zeta", "zeta_k", "tau", "sigma_k", "phi", "mu", "liouville")

_STRUCTURE = {
    "zeta": FINITE_PARAMS,
    "zeta_k": FINITE_PARAMS,
    "tau": FINITE_PARAMS,
    "sigma_k": FINITE_PARAMS,
    "liouville": FINITE_PARAMS,
    "phi": BOTH_INFINITE,
    "mu": FINITE_VALUES,
}

_VALENCE = {
    "zeta": (1, 0),
    "zeta_k": (1, 0),
    "tau": (2, 0),
    "sigma_k": (2, 0),
    "liouville": (1, 0),
    "phi": (1, 1),
    "mu": (0, 1),
}


class UnknownFunction(KeyError):
    pass


def _split_name(name: str, k):
    """Accept ``sigma_2`` as shorthand for ``sigma_k`` with ``k=2``; ``sigma`` means k=1."""
    m = re.fullmatch(r"(zeta|sigma)_(\d+)", name)
    if m:
        return m.group(1) + "_k", int(m.group(2))
    if name == "sigma":
        return "sigma_k", 1 if k is None else k
    if name not in NAMES:
        raise UnknownFunction(name)
    if name in ("zeta_k", "sigma_k") and k is None:
        raise ValueError(f"{name} needs the exponent k")
    return name, k


def _prime(p):
    if p is None or p == "p":
        return PolyP.gen(), True
    return int(p), False


def catalog(name: str, k: int | None = None, p=None, horizon: int | None = None) -> CoreParams:
    """Local core parameters of a named function at the prime ``p``.

    ``p=None`` (or ``"p"``) keeps the prime symbolic; every entry is then a
    :class:`PolyP`.  Power-series cores (phi, mu) are truncated at ``horizon``.
    """
    name, k = _split_name(name, k)
    P, symbolic = _prime(p)
    N = default_horizon() if horizon is None else horizon
    lift = PolyP.const if symbolic else (lambda c: c)
    if name == "zeta":
        return CoreParams((lift(1),))
    if name == "zeta_k":
        return CoreParams((P**k,))
    if name == "tau":
        return CoreParams((lift(2), lift(-1)))
    if name == "sigma_k":
        return CoreParams((P**k + 1, -(P**k)))
    if name == "liouville":
        return CoreParams((lift(-1),))
    if name == "phi":
        return CoreParams((P - 1,) * N, finite=False)
    if name == "mu":
        return CoreParams((lift(-1),) * N, finite=False)
    raise UnknownFunction(name)


def catalog_mf(name: str, k: int | None = None, p=None, N: int | None = None) -> LocalMF:
    N = default_horizon() if N is None else N
    base, _ = _split_name(name, k)
    t = catalog(name, k, p, N)
    prime = p if p not in (None, "p") else "p"
    return from_params(t, N, structure=_STRUCTURE[base], valence=_VALENCE[base], prime=prime)


def family(name: str, k: int | None = None) -> MFFamily:
    base, kk = _split_name(name, k)
    label = base.replace("_k", f"_{kk}") if kk is not None else base
    return MFFamily(label, lambda p, N: catalog(name, k, p, N), _STRUCTURE[base])


def fibonacci_mf(N: int | None = None) -> LocalMF:
    """The function with ``f(p^n)`` the n-th Fibonacci number (``f_0 = f_1 = 1``) at every prime."""
    return from_params(CoreParams((1, 1)), N)
