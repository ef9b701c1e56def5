from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .ring import ModInt, PolyP, format_scalar


def jsonable(x, ints_as_text: bool = True):
    """Turn scalars (and containers of them) into JSON-safe values.

    Scalars become their textual form so that integers, rationals and
    polynomials in ``p`` share one encoding.  With ``ints_as_text=False``
    plain integers stay numbers, which suits counts and indices.
    """
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int) and not ints_as_text:
        return x
    if isinstance(x, (int, Fraction, PolyP, ModInt)):
        return format_scalar(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v, ints_as_text) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [jsonable(v, ints_as_text) for v in x]
    return str(x)


@dataclass
class CheckReport:
    """Outcome of an identity check over a declared sweep.

    ``passed`` is true exactly when no counterexample was found; ``witness``
    holds the first one otherwise.  ``notes`` carries documented
    discrepancies that do not affect ``passed``.
    """

    identity: str
    sweep: str
    passed: bool = True
    witness: dict | None = None
    cases: int = 0
    notes: dict = field(default_factory=dict)

    def record(self, ok: bool, **witness) -> bool:
        self.cases += 1
        if not ok and self.passed:
            self.passed = False
            self.witness = witness
        return ok

    def merge(self, other: "CheckReport") -> "CheckReport":
        self.cases += other.cases
        if not other.passed and self.passed:
            self.passed = False
            self.witness = {"check": other.identity, **(other.witness or {})}
        for k, v in other.notes.items():
            self.notes.setdefault(k, v)
        return self

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "sweep": self.sweep,
            "pass": self.passed,
            "cases": self.cases,
            "witness": jsonable(self.witness),
            "notes": jsonable(self.notes, ints_as_text=False),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"), sort_keys=False)

    def __bool__(self):
        return self.passed
