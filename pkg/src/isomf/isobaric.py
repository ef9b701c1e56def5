"""Symbolic isobaric polynomials (GFP, GLP and weighted) and their series."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .partitions import enumerate_partitions, monomial_key, multinomial, weight_factor, weighted_sum
from .ring import div


@dataclass(frozen=True)
class WeightVector:
    """Weights ``w_1, w_2, ...`` given by a finite head and an extension rule.

    ``tail`` is ``"constant"`` (repeat the last weight), ``"arithmetic"``
    (continue with the last difference) or ``None`` (zero beyond the head).
    """

    head: tuple
    tail: str | None = "constant"

    def __post_init__(self):
        if len(self.head) < 1:
            raise ValueError("weight vector needs at least one entry")
        if self.tail not in (None, "constant", "arithmetic"):
            raise ValueError(f"unknown tail rule {self.tail!r}")
        if self.tail == "arithmetic" and len(self.head) < 2:
            raise ValueError("arithmetic tail needs two head entries")

    def __call__(self, j: int):
        if j < 1:
            raise IndexError("weights are indexed from 1")
        h = self.head
        if j <= len(h):
            return h[j - 1]
        if self.tail == "constant":
            return h[-1]
        if self.tail == "arithmetic":
            return h[-1] + (j - len(h)) * (h[-1] - h[-2])
        return 0

    @classmethod
    def gfp(cls) -> "WeightVector":
        return cls((1,), "constant")

    @classmethod
    def glp(cls) -> "WeightVector":
        return cls((1, 2), "arithmetic")

    @classmethod
    def hook(cls, zeros: int) -> "WeightVector":
        """``(0, ..., 0, 1, 1, ...)`` with ``zeros`` leading zeros."""
        return cls((0,) * zeros + (1,), "constant")


@dataclass(frozen=True)
class IsobaricPoly:
    k: int
    degree: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for alpha, c in self.terms.items():
            alpha = tuple(alpha) + (0,) * (self.k - len(alpha))
            if len(alpha) > self.k and any(alpha[self.k:]):
                raise ValueError(f"monomial {alpha} uses more than {self.k} variables")
            alpha = alpha[: self.k]
            if weighted_sum(alpha) != self.degree:
                raise ValueError(f"monomial {alpha} is not of isobaric degree {self.degree}")
            if c:
                clean[alpha] = clean.get(alpha, 0) + c
        object.__setattr__(self, "terms", {a: c for a, c in clean.items() if c})

    @classmethod
    def one(cls, k: int) -> "IsobaricPoly":
        return cls(k, 0, {(0,) * k: Fraction(1)})

    @classmethod
    def variable(cls, k: int, j: int) -> "IsobaricPoly":
        alpha = [0] * k
        alpha[j - 1] = 1
        return cls(k, j, {tuple(alpha): Fraction(1)})

    def widen(self, k: int) -> "IsobaricPoly":
        if k < self.k:
            raise ValueError("cannot drop variables")
        return IsobaricPoly(k, self.degree, dict(self.terms))

    def __add__(self, other: "IsobaricPoly") -> "IsobaricPoly":
        if self.degree != other.degree:
            raise ValueError("isobaric degrees differ")
        k = max(self.k, other.k)
        a, b = self.widen(k), other.widen(k)
        terms = dict(a.terms)
        for alpha, c in b.terms.items():
            terms[alpha] = terms.get(alpha, 0) + c
        return IsobaricPoly(k, self.degree, terms)

    def __neg__(self):
        return IsobaricPoly(self.k, self.degree, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "IsobaricPoly":
        return IsobaricPoly(self.k, self.degree, {a: c * v for a, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, IsobaricPoly):
            return self.scale(other)
        k = max(self.k, other.k)
        a, b = self.widen(k), other.widen(k)
        terms: dict = {}
        for x, cx in a.terms.items():
            for y, cy in b.terms.items():
                z = tuple(i + j for i, j in zip(x, y))
                terms[z] = terms.get(z, 0) + cx * cy
        return IsobaricPoly(k, self.degree + other.degree, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = IsobaricPoly.one(self.k)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, IsobaricPoly):
            return NotImplemented
        if self.degree != other.degree:
            return False
        k = max(self.k, other.k)
        return self.widen(k).terms == other.widen(k).terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.terms.values())

    def evaluate(self, t: Sequence):
        """Value at ``t_1..t_k = t`` in whatever ring the entries of ``t`` live."""
        if len(t) < self.k and any(
            alpha[j] for alpha in self.terms for j in range(len(t), self.k)
        ):
            raise ValueError("not enough parameter values")
        total = 0
        for alpha, c in self.terms.items():
            term = c if Fraction(c).denominator != 1 else int(c)
            for j, a in enumerate(alpha):
                if a:
                    term = term * t[j] ** a
            total = total + term
        return total

    def substitute(self, images: Sequence["IsobaricPoly"]) -> "IsobaricPoly":
        """Replace ``t_j`` by ``images[j-1]``; each image must have degree ``j``."""
        for j, img in enumerate(images, start=1):
            if img.degree != j:
                raise ValueError(f"image of t{j} must have isobaric degree {j}")
        k = max(img.k for img in images)
        total = IsobaricPoly(k, self.degree, {})
        for alpha, c in self.terms.items():
            term = IsobaricPoly.one(k)
            for j, a in enumerate(alpha):
                if a:
                    term = term * images[j] ** a
            total = total + term.scale(c)
        return total

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: monomial_key(kv[0]), reverse=False)

    def __str__(self):
        return format_isobaric(self)


def _monomial(alpha) -> str:
    parts = []
    for j, a in enumerate(alpha, start=1):
        if a == 1:
            parts.append(f"t{j}")
        elif a:
            parts.append(f"t{j}^{a}")
    return "*".join(parts)


def format_isobaric(poly: IsobaricPoly) -> str:
    """``t1^3 + 2*t1*t2 + t3`` style, monomials in :func:`monomial_key` order."""
    if poly.is_zero():
        return "0"
    out = []
    for alpha, c in poly.sorted_terms():
        c = Fraction(c)
        mag = abs(c)
        mono = _monomial(alpha)
        coef = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        if not mono:
            body = coef
        elif mag == 1:
            body = mono
        else:
            body = f"{coef}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def wip_poly(omega: WeightVector, k: int, n: int) -> IsobaricPoly:
    """Weighted isobaric polynomial as the closed-form partition sum."""
    if n < 0:
        raise ValueError("isobaric degree must be non-negative")
    if n == 0:
        return IsobaricPoly.one(k)
    terms = {}
    for alpha in enumerate_partitions(n, k):
        terms[alpha] = multinomial(alpha) * weight_factor(alpha, omega)
    return IsobaricPoly(k, n, terms)


def gfp_poly(k: int, n: int) -> IsobaricPoly:
    poly = wip_poly(WeightVector.gfp(), k, n)
    assert poly.is_integral()
    return poly


def glp_poly(k: int, n: int) -> IsobaricPoly:
    if n < 1:
        raise ValueError("GLP is defined for n >= 1")
    poly = wip_poly(WeightVector.glp(), k, n)
    if not poly.is_integral():
        raise AssertionError(f"non-integral GLP coefficient in degree {n}")
    return poly


# ---------------------------------------------------------------- power series


def series_mul(a: Sequence, b: Sequence, N: int) -> list:
    out = [0] * (N + 1)
    for i, x in enumerate(a[: N + 1]):
        if not x:
            continue
        for j, y in enumerate(b[: N + 1 - i]):
            out[i + j] = out[i + j] + x * y
    return out


def series_div(num: Sequence, den: Sequence, N: int) -> list:
    """First ``N+1`` coefficients of ``num/den``; ``den[0]`` must be a unit."""
    if not den or den[0] == 0:
        raise ZeroDivisionError("series denominator has zero constant term")
    lead = den[0]
    out = []
    for n in range(N + 1):
        acc = num[n] if n < len(num) else 0
        for j in range(1, min(n, len(den) - 1) + 1):
            acc = acc - den[j] * out[n - j]
        out.append(acc if lead == 1 else div(acc, lead))
    return out


def series_from_genfun(omega: WeightVector, t: Sequence, N: int) -> list:
    """Coefficients of ``1 + (sum w_j t_j y^j) / (1 - sum t_j y^j)``."""
    k = len(t)
    num = [0] + [omega(j) * t[j - 1] for j in range(1, k + 1)]
    den = [1] + [-x for x in t]
    q = series_div(num, den, N)
    return [1 + q[0]] + q[1:]


def wip_recursive(omega: WeightVector, t: Sequence, N: int) -> list:
    """``P_n = w_n t_n + sum_{j<n} t_j P_{n-j}`` for n >= 1, ``P_0 = 1``."""
    k = len(t)
    out = [1]
    for n in range(1, N + 1):
        acc = omega(n) * t[n - 1] if n <= k else 0
        for j in range(1, min(n - 1, k) + 1):
            acc = acc + t[j - 1] * out[n - j]
        out.append(acc)
    return out
