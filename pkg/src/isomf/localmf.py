"""Local multiplicative functions: value sequences ``F_n = f(p^n)`` and their parameters."""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

from .companion import CoreParams, gfp_values
from .ring import (
    RingError,
    format_scalar,
    parse_scalar,
    ring_of,
    unify,
)

FINITE_PARAMS = "finite-params"
FINITE_VALUES = "finite-values"
BOTH_INFINITE = "both-infinite"
STRUCTURES = (FINITE_PARAMS, FINITE_VALUES, BOTH_INFINITE)

UNBOUNDED = math.inf


def default_horizon() -> int:
    return int(os.environ.get("ISOMF_HORIZON", "16"))


class NotInvertible(RingError):
    """The sequence does not start with ``F_0 = 1``."""


@dataclass(frozen=True)
class LocalMF:
    values: tuple
    params: tuple | None = None
    inv_params: tuple | None = None
    structure: str = FINITE_PARAMS
    valence: tuple | None = None
    prime: object = None

    def __post_init__(self):
        if self.structure not in STRUCTURES:
            raise ValueError(f"unknown structure {self.structure!r}")
        if not self.values or self.values[0] != 1:
            raise NotInvertible("local values must start with F_0 = 1")
        object.__setattr__(self, "values", tuple(unify(list(self.values))))
        if self.params is not None:
            object.__setattr__(self, "params", tuple(self.params[: self.horizon]))
        if self.inv_params is not None:
            object.__setattr__(self, "inv_params", tuple(self.inv_params[: self.horizon]))
        if self.params is not None and not self.recursion_holds():
            raise ValueError("values do not follow the recursion of the given parameters")

    @property
    def horizon(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n):
        return self.values[n]

    def is_identity(self) -> bool:
        return all(v == 0 for v in self.values[1:])

    def recursion_holds(self) -> bool:
        if self.params is None:
            return True
        return list(self.values) == gfp_values(self.params, self.horizon)

    def truncate(self, N: int) -> "LocalMF":
        if N > self.horizon:
            raise ValueError(f"horizon {self.horizon} < {N}")
        return replace(
            self,
            values=self.values[: N + 1],
            params=None if self.params is None else self.params[:N],
            inv_params=None if self.inv_params is None else self.inv_params[:N],
        )

    def specialize(self, pval: int) -> "LocalMF":
        from .ring import specialize

        def sp(seq):
            return None if seq is None else tuple(specialize(x, pval) for x in seq)

        return replace(
            self,
            values=sp(self.values),
            params=sp(self.params),
            inv_params=sp(self.inv_params),
            prime=pval,
        )

    # ------------------------------------------------------------ JSON

    def to_dict(self) -> dict:
        out: dict = {}
        if self.prime is not None:
            out["prime"] = self.prime if isinstance(self.prime, int) else str(self.prime)
        out["horizon"] = self.horizon
        out["values"] = [format_scalar(v) for v in self.values]
        if self.params is not None:
            out["params"] = [format_scalar(v) for v in self.params]
        if self.inv_params is not None:
            out["inv_params"] = [format_scalar(v) for v in self.inv_params]
        out["structure"] = self.structure
        if self.valence is not None:
            out["valence"] = list(self.valence)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "LocalMF":
        ring = None
        texts = list(d["values"]) + list(d.get("params") or []) + list(d.get("inv_params") or [])
        if any("p" in s for s in texts):
            ring = "polyp"
        elif any("/" in s for s in texts):
            ring = "rat"

        def conv(key):
            if d.get(key) is None:
                return None
            return tuple(parse_scalar(s, ring) for s in d[key])

        values = conv("values")
        if len(values) != d.get("horizon", len(values) - 1) + 1:
            raise ValueError("horizon does not match the number of values")
        valence = tuple(d["valence"]) if d.get("valence") is not None else None
        return cls(
            values=values,
            params=conv("params"),
            inv_params=conv("inv_params"),
            structure=d.get("structure", FINITE_PARAMS),
            valence=valence,
            prime=d.get("prime"),
        )

    @classmethod
    def from_json(cls, text: str) -> "LocalMF":
        return cls.from_dict(json.loads(text))


# ---------------------------------------------------------------- construction


def recover_params(values: Sequence) -> CoreParams:
    """Invert the GFP recursion: ``t_n = a_n - sum_{j=1}^{n-1} t_j a_{n-j}``.

    The result is marked truncated (``finite=False``) because only the
    first ``N`` parameters are determined by ``N`` values.
    """
    if not values or values[0] != 1:
        raise NotInvertible("parameter recovery needs F_0 = 1")
    a = list(values)
    t: list = []
    for n in range(1, len(a)):
        acc = a[n]
        for j in range(1, n):
            acc = acc - t[j - 1] * a[n - j]
        t.append(acc)
    return CoreParams(tuple(t), finite=False)


def from_params(
    t, N: int | None = None, *, structure: str | None = None, valence=None, prime=None
) -> LocalMF:
    """Values ``F_0..F_N`` of the GFP sequence of the core ``t``."""
    N = default_horizon() if N is None else N
    t = t if isinstance(t, CoreParams) else CoreParams.trimmed(t)
    if not t.finite and t.k < N:
        raise ValueError(f"truncated core known to {t.k} < horizon {N}")
    values = gfp_values(t, N)
    zero = 0 * values[-1] if values else 0
    params = tuple(t.params[:N]) + (zero,) * max(0, N - t.k)
    if structure is None:
        structure = FINITE_PARAMS if t.finite else BOTH_INFINITE
    return LocalMF(tuple(values), params, None, structure, valence, prime)


def from_values(values: Sequence, *, structure: str = FINITE_PARAMS, valence=None, prime=None) -> LocalMF:
    values = unify(list(values))
    return LocalMF(tuple(values), tuple(recover_params(values).params), None, structure, valence, prime)


def identity_mf(N: int | None = None) -> LocalMF:
    N = default_horizon() if N is None else N
    return LocalMF((1,) + (0,) * N, (0,) * N, (0,) * N, FINITE_PARAMS, (0, 0))


# ---------------------------------------------------------------- convolution algebra


def cauchy(a: Sequence, b: Sequence, N: int) -> list:
    return [
        sum((a[j] * b[n - j] for j in range(n + 1)), 0 * a[0])
        for n in range(N + 1)
    ]


def _combine_structure(f: LocalMF, g: LocalMF) -> str:
    if f.is_identity():
        return g.structure
    if g.is_identity():
        return f.structure
    if f.structure == g.structure and f.structure in (FINITE_PARAMS, FINITE_VALUES):
        return f.structure
    return BOTH_INFINITE


def convolve(f: LocalMF, g: LocalMF) -> LocalMF:
    """Dirichlet convolution at one prime: the Cauchy product of value sequences."""
    if ring_of(f.values[0]) != ring_of(g.values[0]):
        f_vals, g_vals = _lift_pair(f.values, g.values)
    else:
        f_vals, g_vals = f.values, g.values
    N = min(f.horizon, g.horizon)
    values = cauchy(f_vals, g_vals, N)
    valence = None
    if f.valence is not None and g.valence is not None:
        valence = (f.valence[0] + g.valence[0], f.valence[1] + g.valence[1])
    prime = f.prime if f.prime == g.prime else None
    return LocalMF(
        tuple(values),
        tuple(recover_params(values).params),
        None,
        _combine_structure(f, g),
        valence,
        prime,
    )


def _lift_pair(a, b):
    both = unify(list(a) + list(b))
    return both[: len(a)], both[len(a):]


def inverse_values(values: Sequence) -> list:
    """Solve ``(f * g)_n = [n == 0]`` for ``g`` by forward substitution."""
    if not values or values[0] != 1:
        raise NotInvertible("convolution inverse needs F_0 = 1")
    g = [values[0]]
    for n in range(1, len(values)):
        acc = 0 * values[0]
        for j in range(1, n + 1):
            acc = acc + values[j] * g[n - j]
        g.append(-acc)
    return g


class DualityViolation(AssertionError):
    pass


def inverse(f: LocalMF) -> LocalMF:
    """Convolution inverse, cross-checked against the parameter/value duality.

    The inverse's values must equal ``-t_n`` and its parameters ``-F_n``;
    both are computed independently of the triangular solve and compared.
    """
    g_values = inverse_values(f.values)
    t = f.params if f.params is not None else recover_params(f.values).params
    s = recover_params(g_values).params
    N = f.horizon
    for n in range(1, N + 1):
        if g_values[n] != -t[n - 1] or s[n - 1] != -f.values[n]:
            raise DualityViolation(f"duality fails at n={n}")
    structure = {FINITE_PARAMS: FINITE_VALUES, FINITE_VALUES: FINITE_PARAMS}.get(
        f.structure, BOTH_INFINITE
    )
    if f.is_identity():
        structure = FINITE_PARAMS
    valence = None if f.valence is None else (f.valence[1], f.valence[0])
    return LocalMF(tuple(g_values), tuple(s), tuple(t), structure, valence, f.prime)


def with_inverse_params(f: LocalMF) -> LocalMF:
    """Attach ``s`` (the parameters of the inverse) if missing."""
    if f.inv_params is not None:
        return f
    s = recover_params(inverse_values(f.values)).params
    params = f.params if f.params is not None else recover_params(f.values).params
    return replace(f, params=tuple(params), inv_params=tuple(s))


def degree(f: LocalMF):
    """Core degree: an int, or ``math.inf`` when unbounded within the horizon."""
    if f.is_identity():
        return 0
    if f.structure != FINITE_PARAMS:
        return UNBOUNDED
    t = f.params if f.params is not None else recover_params(f.values).params
    nz = [i for i, x in enumerate(t, start=1) if x != 0]
    return nz[-1] if nz else 0


def classify_type(f: LocalMF) -> int:
    """1 identity, 2 finite parameters, 3 finite values, 4 both infinite.

    Types 2-4 are read from the declared structure; a horizon can never
    certify that a sequence vanishes eventually.
    """
    if f.is_identity():
        return 1
    return {FINITE_PARAMS: 2, FINITE_VALUES: 3, BOTH_INFINITE: 4}[f.structure]


def normal_form(factors: Sequence[tuple], N: int | None = None):
    """Reduce a product of degree-1 factors ``(t1, +-1)`` by cancelling inverse pairs.

    Returns ``(reduced, (r, s), product)``.
    """
    N = default_horizon() if N is None else N
    pending = []
    for t1, e in factors:
        if t1 == 0:
            raise ValueError("degree-1 factor with t1 = 0")
        if e not in (1, -1):
            raise ValueError("exponents must be +1 or -1")
        for i, (u, d) in enumerate(pending):
            if u == t1 and d == -e:
                del pending[i]
                break
        else:
            pending.append((t1, e))
    r = sum(1 for _, e in pending if e == 1)
    s = len(pending) - r
    product = identity_mf(N)
    for t1, e in pending:
        base = from_params(CoreParams((t1,)), N, valence=(1, 0))
        product = convolve(product, base if e == 1 else inverse(base))
    if r and s:
        structure = BOTH_INFINITE
    elif s:
        structure = FINITE_VALUES
    else:
        structure = FINITE_PARAMS
    product = replace(product, structure=structure, valence=(r, s))
    return pending, (r, s), product


# ---------------------------------------------------------------- global assembly


@dataclass(frozen=True)
class MFFamily:
    """A multiplicative function given prime by prime: ``rule(p, horizon) -> CoreParams``."""

    name: str
    rule: Callable = field(compare=False)
    structure: str = FINITE_PARAMS

    def local(self, p, N: int | None = None) -> LocalMF:
        N = default_horizon() if N is None else N
        return from_params(self.rule(p, N), N, structure=self.structure, prime=p)


def factorize(n: int) -> list[tuple[int, int]]:
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def global_eval(fam: MFFamily, n: int):
    if n < 1:
        raise ValueError("arithmetic functions are evaluated at n >= 1")
    result = 1
    for p, e in factorize(n):
        result = result * gfp_values(fam.rule(p, max(e, 1)), e)[e]
    return result
