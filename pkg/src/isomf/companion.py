"""Core polynomials, companion matrices and the Schur-hook orbit.

For ``t = (t_1, ..., t_k)`` the companion matrix has ones on the
superdiagonal and last row ``(t_k, ..., t_1)``.  The bottom row of ``A**n``
is ``((-1)^(k-1) S_(n,1^(k-1)), ..., -S_(n,1), S_(n))``, so reading column
``k-1-j`` and applying the sign ``(-1)^j`` gives the hook ``S_(n,1^j)``.
Column ``k-1`` is the sequence ``F_n`` for every integer ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .report import CheckReport
from .ring import PolyP, RingError, div, is_unit, ring_of, unify


class SingularMatrix(RingError):
    pass


@dataclass(frozen=True)
class CoreParams:
    """Recursion parameters ``t_1..t_k`` of the core ``X^k - t_1 X^(k-1) - ... - t_k``.

    ``finite=False`` marks a truncated power-series core (known only up to
    ``len(params)``).
    """

    params: tuple
    finite: bool = True

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(unify(list(self.params))))
        if self.finite and self.params and self.params[-1] == 0:
            raise ValueError("a finite core of degree k needs t_k != 0")

    @property
    def k(self) -> int:
        return len(self.params)

    def __len__(self):
        return len(self.params)

    def __getitem__(self, i):
        return self.params[i]

    def __iter__(self):
        return iter(self.params)

    @classmethod
    def trimmed(cls, params: Sequence) -> "CoreParams":
        """Finite core from a parameter list, dropping trailing zeros."""
        ps = list(params)
        while ps and ps[-1] == 0:
            ps.pop()
        return cls(tuple(ps), True)

    def polynomial(self) -> list:
        """Core coefficients, highest power first: ``[1, -t_1, ..., -t_k]``."""
        return [1] + [-x for x in self.params]


def _as_core(t) -> CoreParams:
    return t if isinstance(t, CoreParams) else CoreParams(tuple(t))


def core_multiply(a: Sequence, b: Sequence) -> list:
    """Product of two cores given in ``[1, -t_1, ...]`` form."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


# ---------------------------------------------------------------- matrices


def identity_matrix(k: int, one=1):
    zero = one - one
    return [[one if i == j else zero for j in range(k)] for i in range(k)]


def mat_mul(A, B):
    n, m = len(A), len(B[0])
    inner = len(B)
    return [[sum((A[i][l] * B[l][j] for l in range(inner)), 0 * A[0][0]) for j in range(m)] for i in range(n)]


def trace(A):
    return sum((A[i][i] for i in range(len(A))), 0 * A[0][0])


def companion_matrix(t) -> list:
    t = _as_core(t)
    if not t.finite:
        raise ValueError("a truncated core has no finite companion matrix")
    k = t.k
    if k == 0:
        raise ValueError("the identity core has no companion matrix")
    zero = 0 * t[0]
    one = zero + 1
    A = [[zero] * k for _ in range(k)]
    for i in range(k - 1):
        A[i][i + 1] = one
    for c in range(k):
        A[k - 1][c] = t[k - 1 - c]
    return A


def companion_inverse(t) -> list:
    """Closed-form inverse: first row ``(-t_(k-1), ..., -t_1, 1) / t_k``, then a shifted identity."""
    t = _as_core(t)
    k = t.k
    tk = t[k - 1]
    if not is_unit(tk):
        raise SingularMatrix(f"t_k = {tk} is not invertible; the companion matrix is singular")
    inv_tk = div(1, tk)
    zero = 0 * inv_tk
    one = zero + 1
    B = [[zero] * k for _ in range(k)]
    for c in range(k - 1):
        B[0][c] = -t[k - 2 - c] * inv_tk
    B[0][k - 1] = inv_tk
    for i in range(1, k):
        B[i][i - 1] = one
    return B


def matrix_power(A_or_t, n: int):
    """``A**n`` by binary exponentiation; negative ``n`` goes through the closed-form inverse.

    Accepts a :class:`CoreParams` (or parameter tuple) rather than a raw
    matrix when ``n < 0``, since the inverse is built from the parameters.
    """
    if isinstance(A_or_t, (CoreParams, tuple)):
        t = _as_core(A_or_t)
        base = companion_matrix(t) if n >= 0 else companion_inverse(t)
    else:
        if n < 0:
            raise ValueError("pass the core parameters to take negative powers")
        base = A_or_t
    k = len(base)
    result = identity_matrix(k, 0 * base[0][0] + 1)
    e = abs(n)
    while e:
        if e & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        e >>= 1
    return result


# ---------------------------------------------------------------- orbit rows


def row_step(t: CoreParams, row: list) -> list:
    """``row * A`` in O(k)."""
    k = t.k
    last = row[k - 1]
    return [last * t[k - 1]] + [row[c - 1] + last * t[k - 1 - c] for c in range(1, k)]


def row_step_back(t: CoreParams, row: list) -> list:
    """``row * A^-1`` in O(k)."""
    k = t.k
    inv_tk = div(1, t[k - 1])
    first = row[0] * inv_tk
    return [row[c + 1] - first * t[k - 2 - c] for c in range(k - 1)] + [first]


def orbit_rows(t, lo: int, hi: int) -> dict:
    """Bottom rows of ``A**n`` for ``lo <= n <= hi`` (keys are ``n``)."""
    t = _as_core(t)
    k = t.k
    zero = 0 * t[0]
    row0 = [zero] * (k - 1) + [zero + 1]
    rows = {0: row0}
    row = row0
    for n in range(1, hi + 1):
        row = row_step(t, row)
        rows[n] = row
    if lo < 0:
        if not is_unit(t[k - 1]):
            raise SingularMatrix("negative orbit rows need an invertible t_k")
        row = row0
        for n in range(-1, lo - 1, -1):
            row = row_step_back(t, row)
            rows[n] = row
    return {n: r for n, r in rows.items() if lo <= n <= hi}


def hook(t, n: int, j: int):
    """``S_(n,1^j)`` read off the bottom row of ``A**n``."""
    t = _as_core(t)
    k = t.k
    if not 0 <= j <= k - 1:
        raise ValueError(f"leg length must lie in [0, {k - 1}]")
    row = matrix_power(t, n)[k - 1]
    v = row[k - 1 - j]
    return -v if j % 2 else v


def hook_row(t, n: int) -> list:
    """All hooks ``S_(n,1^j)``, ``j = 0..k-1``, from the orbit recursion."""
    t = _as_core(t)
    row = orbit_rows(t, min(n, 0), max(n, 0))[n]
    k = t.k
    return [(-1) ** j * row[k - 1 - j] for j in range(k)]


def gfp_values(t, N: int) -> list:
    """``F_0..F_N`` by the k-term recursion (truncated cores allowed)."""
    params = list(t.params if isinstance(t, CoreParams) else t)
    out = [1]
    for n in range(1, N + 1):
        acc = 0
        for j in range(1, min(n, len(params)) + 1):
            acc = acc + params[j - 1] * out[n - j]
        out.append(acc)
    return out


def gfp_extended(t, lo: int, hi: int) -> dict:
    """``F_n`` for ``lo <= n <= hi`` including negative indices."""
    t = _as_core(t)
    rows = orbit_rows(t, lo, hi)
    return {n: r[-1] for n, r in rows.items()}


def determinant(M) -> object:
    """Division-free Laplace expansion memoised on column subsets."""
    n = len(M)
    if n == 0:
        return 1

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset):
        if row == n:
            return 1
        acc = 0
        for pos, c in enumerate(sorted(cols)):
            entry = M[row][c]
            if entry == 0:
                continue
            sub = minor(row + 1, cols - {c})
            term = entry * sub
            acc = acc - term if pos % 2 else acc + term
        return acc

    return minor(0, frozenset(range(n)))


def jacobi_trudi(F: Sequence, lam: Sequence[int]):
    """``det(F[lam_i - i + c])`` with ``F_m = 0`` for negative ``m``."""
    parts = [x for x in lam if x > 0]
    size = len(parts)

    def f(m):
        return 0 if m < 0 else F[m]

    M = [[f(parts[i] - i + c) for c in range(size)] for i in range(size)]
    return determinant(M)


def schur_general(t, lam: Sequence[int]):
    lam = list(lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or any(x < 0 for x in lam):
        raise ValueError(f"{lam} is not a partition")
    top = (lam[0] + len(lam)) if lam else 0
    return jacobi_trudi(gfp_values(t, top), lam)


def hook_jt(t, n: int, j: int):
    if n < 1 or j < 0:
        raise ValueError("Jacobi-Trudi hooks need n >= 1 and j >= 0")
    return schur_general(t, [n] + [1] * j)


def glp_trace(t, n: int):
    if n < 1:
        raise ValueError("n must be positive")
    return trace(matrix_power(_as_core(t), n))


def check_negative_hook_magnitude(t, j: int, s: int) -> CheckReport:
    """Compare ``|S_(-k-j,1^s)|`` with ``|S_((j+1)^s, j^(k-s-1))| / |t_k|^(j+1)``.

    Only magnitudes are asserted; the observed sign ratio is reported.
    """
    t = _as_core(t)
    k = t.k
    if ring_of(t[0]) not in ("int", "rat"):
        raise TypeError("magnitude comparison needs numeric parameters")
    if not 0 <= s <= k - 1:
        raise ValueError("column index out of range")
    lhs = Fraction(hook(t, -k - j, s))
    lam = [j + 1] * s + [j] * (k - s - 1)
    rhs = Fraction(schur_general(t, lam)) / Fraction(t[k - 1]) ** (j + 1)
    rep = CheckReport("negative-hook-magnitude", f"t={list(t.params)}, j={j}, s={s}")
    rep.record(abs(lhs) == abs(rhs), t=list(t.params), j=j, s=s, lhs=lhs, rhs=rhs)
    sign = None if rhs == 0 else int(lhs / rhs)
    rep.notes = {
        "lhs": lhs,
        "rhs": rhs,
        "observed_sign": sign,
        "conjectured_sign": (-1) ** (s + 1) * (-1) ** s,
    }
    return rep
