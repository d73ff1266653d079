"""Closed-form spectral invariants of the twisted octagonal chain.

All formulas are driven by the algebraic pair x = (4 +- sqrt(15))/12, the two
roots that govern the period-three minor recurrences of the chain blocks.
Powers of 4 + sqrt(15) are tracked two independent ways: through integer
Lucas-style recurrences (t_k, u_k) and through literal exponentiation in
Q(sqrt(15)).  Every function that has both routes available computes both and
raises :class:`ConsistencyError` if they ever disagree, so a silent algebra
slip cannot produce a plausible-looking number.

Quantities provided (for the closed chain with parameter n):

* ``sum_recip_alpha`` / ``xi`` -- reciprocal eigenvalue sums of the two
  fold blocks (the zero mode excluded from the first);
* ``kemeny`` and ``dk_index`` -- Kemeny's constant and the degree-weighted
  resistance (degree-Kirchhoff) index, related by dk = 14 n * kemeny;
* ``spanning_trees`` -- the spanning tree count 3n (t_n + 2) / 2;
* minor ladders ``w_minor`` / ``q_minor`` and the vertex-deleted
  determinants ``minor_det_la`` / ``minor_det_ls`` with their coefficient
  sums, feeding the verification layer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact_algebra import (
    ConsistencyError,
    QuadExt,
    frac_to_sig_str,
    frac_to_str,
    lucas_t,
    lucas_u,
    quad_pow,
)

F = Fraction

# the two recurrence roots (4 +- sqrt(15)) / 12
X_PLUS = QuadExt(F(1, 3), F(1, 12))
X_MINUS = X_PLUS.conjugate()
_INV_SQRT15 = QuadExt(0, F(1, 15))  # 1/sqrt(15)
_TWELFTH = F(1, 12)


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError("n must be a positive integer")


# ---------------------------------------------------------------------------
# Minor ladders of the phase-shifted tridiagonal sections
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def w_minor(phase: int, j: int) -> Fraction:
    """Order-j leading principal minor of the sum-block section at `phase`.

    Conventions w(-1) = 0 and w(0) = 1 make the tridiagonal recurrences and
    the vertex-deletion splitting formulas uniform.
    """
    if phase not in (0, 1, 2):
        raise ValueError(f"no such phase {phase}")
    if j < -1:
        raise ValueError("index must be at least -1")
    if j == -1:
        return F(0)
    if j == 0:
        return F(1)
    r = j % 3
    if phase == 0:
        if r == 0:
            return (1 + j) * _TWELFTH ** (j // 3)
        if r == 1:
            return F(1 + j, 3) * _TWELFTH ** ((j - 1) // 3)
        k = (j - 2) // 3
        return F(1 + k, 2) * _TWELFTH**k
    if phase == 1:
        if r == 0:
            return (1 + j) * _TWELFTH ** (j // 3)
        if r == 1:
            return F(1 + j, 2) * _TWELFTH ** ((j - 1) // 3)
        return F(1 + j, 4) * _TWELFTH ** ((j - 2) // 3)
    # phase 2 has no simple product form; peel off the first row, whose
    # neighbours restart the ladder at phases 0 and 1
    return w_minor(0, j - 1) - F(1, 6) * w_minor(1, j - 2)


# coefficients c with q_j = c * x_plus**k + conj(c) * x_minus**k, k = (j-r)/3,
# keyed by (phase, j mod 3)
_Q_COEFF = {
    (0, 0): QuadExt(F(1, 2), F(1, 5)),
    (0, 1): QuadExt(F(2, 3), F(17, 90)),
    (0, 2): QuadExt(F(7, 12), F(7, 45)),
    (1, 0): QuadExt(F(1, 2), F(1, 5)),
    (1, 1): QuadExt(F(1, 2), F(3, 20)),
    (1, 2): QuadExt(F(3, 8), F(1, 10)),
}


@lru_cache(maxsize=None)
def q_minor(phase: int, j: int) -> Fraction:
    """Order-j leading principal minor of the difference-block section."""
    if phase not in (0, 1):
        raise ValueError(f"no such phase {phase}")
    if j < 0:
        raise ValueError("index must be non-negative")
    r = j % 3
    k = (j - r) // 3
    c = _Q_COEFF[(phase, r)]
    value = c * quad_pow(X_PLUS, k) + c.conjugate() * quad_pow(X_MINUS, k)
    if not value.is_rational:
        raise ConsistencyError(f"minor q({phase}, {j}) has an irrational part")
    return value.a


# ---------------------------------------------------------------------------
# Reciprocal eigenvalue sums and the derived indices
# ---------------------------------------------------------------------------


def sum_recip_alpha(n: int) -> Fraction:
    """Sum of reciprocals of the nonzero sum-block eigenvalues."""
    _require_positive(n)
    return F(147 * n * n - 19, 84)


def xi(n: int) -> Fraction:
    """Sum of reciprocals of the difference-block eigenvalues.

    Evaluated through the integer recurrence pair and, independently,
    through exponentiation in Q(sqrt(15)); the two must agree.
    """
    _require_positive(n)
    from_lucas = F(37 * n * lucas_u(n), 2 * (lucas_t(n) + 2))

    xp, xm = quad_pow(X_PLUS, n), quad_pow(X_MINUS, n)
    ratio = (xp - xm) * _INV_SQRT15 / (xp + xm + 2 * _TWELFTH**n)
    from_field = F(37 * n, 2) * ratio
    if not from_field.is_rational or from_field.a != from_lucas:
        raise ConsistencyError(f"xi({n}): field route {from_field} != {from_lucas}")
    return from_lucas


def kemeny(n: int) -> Fraction:
    """Kemeny's constant of the random walk on the closed chain."""
    _require_positive(n)
    return sum_recip_alpha(n) + xi(n)


def dk_index(n: int) -> Fraction:
    """Degree-weighted resistance index sum d_i d_j r_ij over vertex pairs."""
    _require_positive(n)
    return 14 * n * kemeny(n)


def spanning_trees(n: int) -> int:
    """Number of spanning trees, 3n (t_n + 2) / 2."""
    _require_positive(n)
    count = F(3 * n, 2) * (lucas_t(n) + 2)
    if count.denominator != 1:
        raise ConsistencyError(f"tree count for n={n} is not an integer: {count}")
    return count.numerator


# ---------------------------------------------------------------------------
# Determinant-level identities for the two blocks
# ---------------------------------------------------------------------------


def det_ls(n: int) -> Fraction:
    """Determinant of the difference block, (t_n + 2) / 12**n."""
    _require_positive(n)
    from_lucas = F(lucas_t(n) + 2, 12**n)
    from_field = quad_pow(X_PLUS, n) + quad_pow(X_MINUS, n) + 2 * _TWELFTH**n
    if not from_field.is_rational or from_field.a != from_lucas:
        raise ConsistencyError(f"det({n}): field route {from_field} != {from_lucas}")
    return from_lucas


def coeff_d_3n_minus_1(n: int) -> Fraction:
    """Magnitude of the linear charpoly coefficient of the sum block."""
    _require_positive(n)
    return F(21 * n * n, 12**n)


def coeff_d_3n_minus_2(n: int) -> Fraction:
    """Magnitude of the quadratic charpoly coefficient of the sum block."""
    _require_positive(n)
    return F(147 * n**4 - 19 * n**2, 4 * 12**n)


def coeff_t_3n_minus_1(n: int) -> Fraction:
    """Magnitude of the linear charpoly coefficient of the difference block."""
    _require_positive(n)
    from_lucas = F(37 * n * lucas_u(n), 2 * 12**n)
    from_field = F(37 * n, 2) * (
        (quad_pow(X_PLUS, n) - quad_pow(X_MINUS, n)) * _INV_SQRT15
    )
    if not from_field.is_rational or from_field.a != from_lucas:
        raise ConsistencyError(
            f"coefficient({n}): field route {from_field} != {from_lucas}"
        )
    return from_lucas


def minor_det_la(x: int, n: int) -> Fraction:
    """Determinant of the sum block with row and column x removed.

    Deleting position x cuts the cyclic band into a single path whose two
    ends carry the seam coupling; it splits into ladder products with the
    right-hand segment restarting at phase x mod 3.
    """
    _require_positive(n)
    if not 1 <= x <= 3 * n:
        raise ValueError(f"position {x} outside 1..{3 * n}")
    r = x % 3
    return w_minor(0, x - 1) * w_minor(r, 3 * n - x) - F(1, 6) * w_minor(
        1, x - 2
    ) * w_minor(r, 3 * n - x - 1)


def minor_det_ls(x: int, n: int) -> Fraction:
    """Determinant of the difference block with row and column x removed."""
    _require_positive(n)
    if not 1 <= x <= 3 * n:
        raise ValueError(f"position {x} outside 1..{3 * n}")
    if x % 3 == 1:
        from_lucas = F(9 * lucas_u(n), 2 * 12**n)
        scale = QuadExt(0, F(3, 10))  # (3/10) sqrt(15)
    else:
        from_lucas = F(7 * lucas_u(n), 12**n)
        scale = QuadExt(0, F(7, 15))  # (7/15) sqrt(15)
    from_field = scale * (quad_pow(X_PLUS, n) - quad_pow(X_MINUS, n))
    if not from_field.is_rational or from_field.a != from_lucas:
        raise ConsistencyError(
            f"deleted minor ({x}, {n}): field route {from_field} != {from_lucas}"
        )
    return from_lucas


# ---------------------------------------------------------------------------
# Bundled summary
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpectralSummary:
    n: int
    sum_recip_alpha: Fraction
    sum_recip_rho: Fraction
    dk: Fraction
    kemeny: Fraction
    tau: int


def spectral_summary(n: int) -> SpectralSummary:
    _require_positive(n)
    return SpectralSummary(
        n=n,
        sum_recip_alpha=sum_recip_alpha(n),
        sum_recip_rho=xi(n),
        dk=dk_index(n),
        kemeny=kemeny(n),
        tau=spanning_trees(n),
    )


def summary_json(s: SpectralSummary) -> str:
    return json.dumps(
        {
            "n": s.n,
            "sum_recip_alpha": frac_to_str(s.sum_recip_alpha),
            "xi": frac_to_str(s.sum_recip_rho),
            "dk": frac_to_str(s.dk),
            "dk_decimal": float(frac_to_sig_str(s.dk, 15)),
            "kemeny": frac_to_str(s.kemeny),
            "tau": str(s.tau),
        }
    )
