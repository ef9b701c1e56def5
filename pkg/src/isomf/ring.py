"""Exact scalar domains.

Four scalar variants are supported:

* ``int`` (BigInt)
* ``fractions.Fraction`` (BigRat)
* :class:`PolyP`, a univariate polynomial in the symbol ``p``
* :class:`ModInt`, a residue modulo ``m >= 2``

Python operators work across ``int``/``Fraction`` and the two classes
below with the usual coercions, which is what the sequence algorithms rely
on.  The ``scalar_*`` functions are the strict entry points: they refuse
operands from different variants.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union


class RingError(ArithmeticError):
    """Base class for scalar-domain failures."""


class DomainMismatch(RingError, TypeError):
    pass


class InexactDivision(RingError):
    pass


class ScalarParseError(RingError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _norm_coeff(c):
    if isinstance(c, bool):
        raise DomainMismatch("bool is not a scalar")
    if isinstance(c, (int, Fraction)):
        return c
    raise DomainMismatch(f"unsupported PolyP coefficient {c!r}")


class PolyP:
    """Dense polynomial in ``p``; ``coeffs[i]`` multiplies ``p**i``.

    Coefficients are ints, or Fractions once the polynomial has been moved
    into the rational polynomial ring (needed for negative matrix powers).
    The zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def gen(cls) -> "PolyP":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "PolyP":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_integral(self) -> bool:
        return all(type(c) is int or c.denominator == 1 for c in self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else 0

    def to_rational(self) -> "PolyP":
        return PolyP(Fraction(c) for c in self.coeffs)

    def _coerce(self, other):
        if isinstance(other, PolyP):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return PolyP((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        n = max(len(a), len(b))
        return PolyP(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return PolyP(-c for c in self.coeffs)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return PolyP()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return PolyP(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("PolyP powers must be non-negative integers")
        result, base = PolyP((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod_rational(self, other: "PolyP"):
        """Long division in Q[p]; returns (quotient, remainder)."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        lead = Fraction(other.coeffs[-1])
        dq = len(rem) - len(other.coeffs) + 1
        quot = [Fraction(0)] * max(dq, 0)
        for i in range(dq - 1, -1, -1):
            c = rem[i + len(other.coeffs) - 1] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return PolyP(quot), PolyP(rem)

    def exact_div(self, other) -> "PolyP":
        o = self._coerce(other)
        if o is None:
            raise DomainMismatch(f"cannot divide PolyP by {type(other).__name__}")
        q, r = self.divmod_rational(o)
        if r.coeffs:
            raise InexactDivision(f"{format_scalar(o)} does not divide {format_scalar(self)}")
        integral_inputs = all(type(c) is int for c in self.coeffs + o.coeffs)
        if integral_inputs:
            if not q.is_integral:
                raise InexactDivision(
                    f"quotient of {format_scalar(self)} by {format_scalar(o)} is not integral"
                )
            return PolyP(int(c) for c in q.coeffs)
        return q

    def __truediv__(self, other):
        return self.exact_div(other)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.exact_div(self)

    def __call__(self, value):
        return polyp_eval(self, value)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant_term())
        return hash(("PolyP", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"PolyP({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


@dataclass(frozen=True)
class ModInt:
    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise DomainMismatch(
                    f"moduli differ: {self.modulus} vs {other.modulus}"
                )
            return other.residue
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        if isinstance(other, Fraction):
            return _frac_mod(other, self.modulus)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModInt(self.residue + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModInt(self.residue - o, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModInt(o - self.residue, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModInt(self.residue * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return ModInt(-self.residue, self.modulus)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return ModInt(pow(self.residue, e, self.modulus), self.modulus)

    def inverse(self) -> "ModInt":
        if gcd(self.residue, self.modulus) != 1:
            raise ZeroDivisionError(f"{self.residue} is not a unit mod {self.modulus}")
        return ModInt(pow(self.residue, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * ModInt(o, self.modulus).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModInt(o, self.modulus) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.modulus == other.modulus and self.residue == other.residue
        if isinstance(other, int) and not isinstance(other, bool):
            return (other - self.residue) % self.modulus == 0
        return NotImplemented

    def __hash__(self):
        return hash(("ModInt", self.residue, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def __repr__(self):
        return f"ModInt({self.residue}, {self.modulus})"

    def __str__(self):
        return format_scalar(self)


def _frac_mod(x: Fraction, m: int) -> int:
    if gcd(x.denominator, m) != 1:
        raise ZeroDivisionError(f"denominator {x.denominator} is not a unit mod {m}")
    return x.numerator * pow(x.denominator, -1, m) % m


Scalar = Union[int, Fraction, PolyP, ModInt]

INT, RAT, POLYP, MOD = "int", "rat", "polyp", "mod"


def ring_of(x) -> str:
    if isinstance(x, bool):
        raise DomainMismatch("bool is not a scalar")
    if isinstance(x, int):
        return INT
    if isinstance(x, Fraction):
        return RAT
    if isinstance(x, PolyP):
        return POLYP
    if isinstance(x, ModInt):
        return MOD
    raise DomainMismatch(f"not a scalar: {x!r}")


def _check_same(a, b) -> str:
    ra, rb = ring_of(a), ring_of(b)
    if ra != rb:
        raise DomainMismatch(f"mixed scalar variants: {ra} and {rb}")
    if ra == MOD and a.modulus != b.modulus:
        raise DomainMismatch(f"moduli differ: {a.modulus} vs {b.modulus}")
    return ra


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    _check_same(a, b)
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    _check_same(a, b)
    return a * b


def scalar_neg(a: Scalar) -> Scalar:
    ring_of(a)
    return -a


def scalar_div_exact(a: Scalar, b: Scalar) -> Scalar:
    """``a / b`` without leaving the ring of the operands."""
    kind = _check_same(a, b)
    if not b:
        raise ZeroDivisionError("division by zero")
    if kind == INT:
        q, r = divmod(a, b)
        if r:
            raise InexactDivision(f"{b} does not divide {a}")
        return q
    if kind == RAT:
        return a / b
    if kind == POLYP:
        return a.exact_div(b)
    return a / b


def div(a, b):
    """Division used inside the algorithms: exact in the natural field of ``a``/``b``.

    ints are lifted to Fractions and integral PolyPs to rational PolyPs, so
    the result is always defined when ``b`` is a unit of that field.
    """
    if isinstance(b, PolyP) or isinstance(a, PolyP):
        a = a if isinstance(a, PolyP) else PolyP.const(a)
        b = b if isinstance(b, PolyP) else PolyP.const(b)
        return a.to_rational().exact_div(b)
    if isinstance(a, ModInt) or isinstance(b, ModInt):
        return a / b
    return Fraction(a) / Fraction(b)


def is_unit(x) -> bool:
    """Whether ``x`` is invertible in the field it is lifted to by :func:`div`."""
    if isinstance(x, PolyP):
        return x.is_constant() and bool(x)
    if isinstance(x, ModInt):
        return gcd(x.residue, x.modulus) == 1
    return x != 0


def polyp_eval(f: PolyP, pval):
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * pval + c
    return acc


def specialize(x, pval):
    """Substitute a number for ``p`` if ``x`` is symbolic; other scalars pass through."""
    return polyp_eval(x, pval) if isinstance(x, PolyP) else x


def unify(values: Sequence) -> list:
    """Lift a list of mixed int/Fraction/PolyP scalars into one variant."""
    kinds = {ring_of(v) for v in values}
    if len(kinds) <= 1:
        return list(values)
    if MOD in kinds:
        mods = {v.modulus for v in values if isinstance(v, ModInt)}
        if len(mods) > 1 or kinds - {MOD, INT}:
            raise DomainMismatch(f"cannot unify scalar variants {sorted(kinds)}")
        m = mods.pop()
        return [v if isinstance(v, ModInt) else ModInt(v, m) for v in values]
    if POLYP in kinds:
        return [v if isinstance(v, PolyP) else PolyP.const(v) for v in values]
    return [Fraction(v) for v in values]


# ---------------------------------------------------------------- text form


def _format_rat(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def format_scalar(x) -> str:
    kind = ring_of(x)
    if kind == INT:
        return str(x)
    if kind == RAT:
        return _format_rat(x)
    if kind == MOD:
        return f"{x.residue} mod {x.modulus}"
    if not x.coeffs:
        return "0"
    parts = []
    for e in range(len(x.coeffs) - 1, -1, -1):
        c = x.coeffs[e]
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = _format_rat(mag)
        else:
            mono = "p" if e == 1 else f"p^{e}"
            body = mono if mag == 1 else f"{_format_rat(mag)}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts)


_INT_RE = re.compile(r"-?[0-9]+\Z")
_RAT_RE = re.compile(r"(-?[0-9]+)/([0-9]+)\Z")
_PREFIX_RE = re.compile(r"-?[0-9]*(?:/[0-9]*)?")
_MOD_RE = re.compile(r"(-?[0-9]+) mod ([0-9]+)\Z")
_TERM_RE = re.compile(r"([0-9]+(?:/[0-9]+)?)?(\*?p(?:\^([0-9]+))?)?")


def _parse_polyp(text: str) -> PolyP:
    coeffs: dict[int, Fraction] = {}
    rational = False
    pos = 0
    n = len(text)
    first = True
    while pos < n:
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ScalarParseError("expected '+' or '-'", pos)
        m = _TERM_RE.match(text, pos)
        num, ptail, exp = m.group(1), m.group(2), m.group(3)
        if not num and not ptail:
            raise ScalarParseError("expected a term", pos)
        if ptail and ptail.startswith("*") and not num:
            raise ScalarParseError("'*' without a coefficient", pos)
        if num and ptail and not ptail.startswith("*"):
            raise ScalarParseError("missing '*' between coefficient and p", m.start(2))
        if num and "/" in num:
            a, b = num.split("/")
            if int(b) == 0:
                raise ScalarParseError("zero denominator", pos)
            c = Fraction(int(a), int(b))
            rational = True
        else:
            c = Fraction(int(num)) if num else Fraction(1)
        e = 0
        if ptail:
            e = int(exp) if exp is not None else 1
        coeffs[e] = coeffs.get(e, Fraction(0)) + sign * c
        pos = m.end()
        first = False
    if first:
        raise ScalarParseError("empty polynomial", 0)
    deg = max(coeffs) if coeffs else -1
    dense = [coeffs.get(i, Fraction(0)) for i in range(deg + 1)]
    if rational:
        return PolyP(dense)
    return PolyP(int(c) for c in dense)


def parse_scalar(text: str, ring: str | None = None):
    """Parse the textual scalar grammar.

    Without ``ring`` the variant is inferred from the text.  Passing
    ``ring`` forces it, which is how constant polynomials and integral
    rationals keep their variant through a format/parse round trip.
    """
    s = text.strip()
    if not s:
        raise ScalarParseError("empty scalar", 0)
    m = _MOD_RE.match(s)
    if m:
        modulus = int(m.group(2))
        if modulus < 2:
            raise ScalarParseError("modulus must be >= 2", m.start(2))
        value = ModInt(int(m.group(1)), modulus)
        if ring not in (None, MOD):
            raise DomainMismatch(f"expected {ring}, got a residue")
        return value
    if "p" in s or ring == POLYP:
        value = _parse_polyp(s.replace(" ", ""))
        if ring not in (None, POLYP):
            raise DomainMismatch(f"expected {ring}, got a polynomial")
        return value
    if _INT_RE.match(s):
        v = int(s)
    else:
        m = _RAT_RE.match(s)
        if not m:
            bad = _PREFIX_RE.match(s).end()
            raise ScalarParseError(f"malformed scalar {s!r}", bad)
        if int(m.group(2)) == 0:
            raise ScalarParseError("zero denominator", m.start(2))
        v = Fraction(int(m.group(1)), int(m.group(2)))
    if ring == RAT:
        return Fraction(v)
    if ring == INT:
        if isinstance(v, Fraction):
            raise DomainMismatch(f"expected an integer, got {s!r}")
        return v
    if ring == MOD:
        raise ScalarParseError("residue needs ' mod m'", len(s))
    return v


def parse_scalar_list(text: str, ring: str | None = None) -> list:
    """Comma-separated scalars, lifted into a single variant."""
    items = [t for t in text.split(",")]
    if any(not t.strip() for t in items):
        raise ScalarParseError("empty list entry", text.find(",,") if ",," in text else 0)
    return unify([parse_scalar(t, ring) for t in items])
