"""Exact arithmetic building blocks.

Everything downstream that claims to be "exact" bottoms out here: rational
matrix elimination (determinants, minors, inverses, rank), arithmetic in the
quadratic field Q(sqrt(15)), the Lucas-style integer pair attached to the
fundamental unit 4 + sqrt(15), and string/decimal rendering of rationals.
All rational work uses :class:`fractions.Fraction`; integer determinants use
Bareiss elimination so intermediate values stay integral.
"""

from __future__ import annotations

import decimal
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class ConsistencyError(ArithmeticError):
    """Two independent computations of the same quantity disagreed."""


class SingularMatrixError(ArithmeticError):
    """A matrix that was required to be invertible is singular."""


# ---------------------------------------------------------------------------
# Q(sqrt(15))
# ---------------------------------------------------------------------------


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class QuadExt:
    """An element a + b*sqrt(15) with rational a, b."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))

    @staticmethod
    def _coerce(other) -> "QuadExt":
        if isinstance(other, QuadExt):
            return other
        return QuadExt(_as_fraction(other), Fraction(0))

    def __add__(self, other) -> "QuadExt":
        other = self._coerce(other)
        return QuadExt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.a, -self.b)

    def __sub__(self, other) -> "QuadExt":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QuadExt":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "QuadExt":
        other = self._coerce(other)
        return QuadExt(
            self.a * other.a + 15 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QuadExt":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "QuadExt":
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "QuadExt":
        return quad_pow(self, k)

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm a**2 - 15*b**2 (multiplicative)."""
        return self.a * self.a - 15 * self.b * self.b

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(15))")
        return QuadExt(self.a / n, -self.b / n)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __str__(self) -> str:
        if self.b < 0:
            return f"{frac_to_str(self.a)} - {frac_to_str(-self.b)}*sqrt15"
        return f"{frac_to_str(self.a)} + {frac_to_str(self.b)}*sqrt15"


def quad_pow(x: QuadExt, k: int) -> QuadExt:
    """x**k by binary exponentiation (k >= 0)."""
    if k < 0:
        return quad_pow(x.inverse(), -k)
    result = QuadExt(1, 0)
    base = x
    while k:
        if k & 1:
            result = result * base
        base = base * base
        k >>= 1
    return result


# ---------------------------------------------------------------------------
# Lucas-style pair for the unit 4 + sqrt(15)
# ---------------------------------------------------------------------------
#
# t_k and u_k are defined by (4 + sqrt(15))**k = (t_k + u_k*sqrt(15)) / 2.
# Both satisfy s_k = 8*s_{k-1} - s_{k-2}; t pairs with u via
# t_k**2 - 15*u_k**2 = 4.


def _lucas(k: int, s0: int, s1: int) -> int:
    if k < 0:
        raise ValueError("index must be non-negative")
    a, b = s0, s1
    for _ in range(k):
        a, b = b, 8 * b - a
    return a


def lucas_t(k: int) -> int:
    return _lucas(k, 2, 8)


def lucas_u(k: int) -> int:
    return _lucas(k, 0, 2)


def quad_to_lucas_consistency(k: int) -> bool:
    """Check (4 + sqrt(15))**k against the recurrence pair (t_k, u_k)."""
    power = quad_pow(QuadExt(4, 1), k)
    return power == QuadExt(Fraction(lucas_t(k), 2), Fraction(lucas_u(k), 2))


# ---------------------------------------------------------------------------
# Exact linear algebra on rational matrices
# ---------------------------------------------------------------------------


def bareiss_det_int(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    a = [[int(x) for x in row] for row in rows]
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _fraction_rows(m: Sequence[Sequence]) -> list[list[Fraction]]:
    return [[_as_fraction(x) for x in row] for row in m]


def det_fraction(m: Sequence[Sequence]) -> Fraction:
    """Determinant of a rational matrix, exactly.

    Each row is scaled to integers by its denominator lcm, the integer
    determinant is taken with Bareiss elimination, and the scaling is undone.
    """
    rows = _fraction_rows(m)
    if not rows:
        return Fraction(1)
    scale = 1
    int_rows = []
    for row in rows:
        l = math.lcm(*(x.denominator for x in row)) if row else 1
        scale *= l
        int_rows.append([int(x * l) for x in row])
    return Fraction(bareiss_det_int(int_rows), scale)


def leading_principal_minors(m: Sequence[Sequence]) -> list[Fraction]:
    """All leading principal minors det(m[:k, :k]) for k = 1..n.

    Uses pivot products from a no-swap LU pass; if a zero pivot shows up the
    minors are recomputed one by one (swaps would corrupt the running
    products).
    """
    rows = _fraction_rows(m)
    n = len(rows)
    a = [row[:] for row in rows]
    minors: list[Fraction] = []
    running = Fraction(1)
    for k in range(n):
        pivot = a[k][k]
        if pivot == 0:
            return [
                det_fraction([row[: j + 1] for row in rows[: j + 1]])
                for j in range(n)
            ]
        running *= pivot
        minors.append(running)
        for i in range(k + 1, n):
            factor = a[i][k] / pivot
            if factor == 0:
                continue
            for j in range(k, n):
                a[i][j] -= factor * a[k][j]
    return minors


def invert_fraction_matrix(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination with row pivoting."""
    a = _fraction_rows(m)
    n = len(a)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        aug[col] = [x / pivot for x in aug[col]]
        for i in range(n):
            if i == col or aug[i][col] == 0:
                continue
            factor = aug[i][col]
            aug[i] = [x - factor * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def rank_fraction(m: Sequence[Sequence]) -> int:
    """Rank of a rational matrix by exact row reduction."""
    a = _fraction_rows(m)
    if not a:
        return 0
    n_rows, n_cols = len(a), len(a[0])
    rank = 0
    for col in range(n_cols):
        pivot_row = next((i for i in range(rank, n_rows) if a[i][col] != 0), None)
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        pivot = a[rank][col]
        for i in range(rank + 1, n_rows):
            if a[i][col] == 0:
                continue
            factor = a[i][col] / pivot
            for j in range(col, n_cols):
                a[i][j] -= factor * a[rank][j]
        rank += 1
        if rank == n_rows:
            break
    return rank


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def frac_to_str(q: Fraction) -> str:
    """Render a rational as "p/q" with the denominator always explicit."""
    q = _as_fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_frac(text: str) -> Fraction:
    return Fraction(text.strip())


def parse_quadext(text: str) -> QuadExt:
    """Parse the "p/q + r/s*sqrt15" rendering produced by str(QuadExt)."""
    body, star, tail = text.strip().rpartition("*")
    if star != "*" or tail != "sqrt15":
        raise ValueError(f"not a Q(sqrt(15)) literal: {text!r}")
    head, sep, b_part = body.partition(" + ")
    b_sign = 1
    if not sep:
        head, sep, b_part = body.partition(" - ")
        b_sign = -1
    if not sep:
        raise ValueError(f"not a Q(sqrt(15)) literal: {text!r}")
    return QuadExt(parse_frac(head), b_sign * parse_frac(b_part))


def frac_to_decimal_str(q: Fraction, places: int) -> str:
    """Fixed-point decimal rendering with banker's (half-even) rounding.

    Rounding is done on exact integer arithmetic so ties are decided
    correctly no matter how long the repeating expansion is.
    """
    q = _as_fraction(q)
    if places < 0:
        raise ValueError("places must be non-negative")
    sign = "-" if q < 0 else ""
    scaled = abs(q) * 10**places
    whole, remainder = divmod(scaled.numerator, scaled.denominator)
    doubled = 2 * remainder
    if doubled > scaled.denominator or (
        doubled == scaled.denominator and whole % 2 == 1
    ):
        whole += 1
    digits = str(whole).rjust(places + 1, "0")
    if places == 0:
        return f"{sign}{digits}"
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def frac_to_sig_str(q: Fraction, sig: int) -> str:
    """Plain decimal rendering rounded to `sig` significant digits."""
    q = _as_fraction(q)
    if sig < 1:
        raise ValueError("need at least one significant digit")
    with decimal.localcontext() as ctx:
        ctx.prec = sig
        ctx.rounding = decimal.ROUND_HALF_EVEN
        value = decimal.Decimal(q.numerator) / decimal.Decimal(q.denominator)
    return f"{value:f}"
