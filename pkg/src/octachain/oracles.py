"""Independent brute-force checks for every closed-form quantity.

Nothing in this module knows the chain formulas: eigenvalues come from a
hand-rolled cyclic Jacobi iteration, characteristic polynomials from exact
integer determinant evaluation plus interpolation, resistances from an exact
grounded-Laplacian inverse, and tree counts from an exact cofactor.  Any
graph can be passed in, either a :class:`~octachain.graph_gen.ChainGraph`
or a plain ``(vertex_count, edges)`` pair, which keeps the oracles honest:
they are exercised on tiny hand-checkable graphs in the tests before being
pointed at the chains.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exact_algebra import (
    ConsistencyError,
    bareiss_det_int,
    invert_fraction_matrix,
    leading_principal_minors,
)
from .graph_gen import _graph_data, is_connected
from .laplacian import combinatorial_laplacian, rational_walk_laplacian

F = Fraction


class NumericFailure(RuntimeError):
    """An iterative numeric routine did not reach its tolerance."""


class DisconnectedGraph(ValueError):
    """The requested quantity is only defined for connected graphs."""


# ---------------------------------------------------------------------------
# Eigenvalues: cyclic Jacobi rotations
# ---------------------------------------------------------------------------


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diagonal(a))
    return float(np.sqrt(np.sum(off * off)))


def eigenvalues_symmetric(m, tol: float = 1e-12, max_sweeps: int = 100) -> list[float]:
    """All eigenvalues of a symmetric matrix, ascending.

    Runs cyclic Jacobi sweeps until the off-diagonal Frobenius norm drops
    below ``tol * order``; raises :class:`NumericFailure` if that does not
    happen within ``max_sweeps`` sweeps.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    order = a.shape[0]
    if order == 0:
        return []
    if _off_norm(a - a.T) > 1e-9 * max(1.0, float(np.max(np.abs(a)))):
        raise ValueError("matrix must be symmetric")
    threshold = tol * order
    for _ in range(max_sweeps):
        if _off_norm(a) < threshold:
            break
        for p in range(order - 1):
            for q in range(p + 1, order):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (
                    abs(theta) + math.hypot(theta, 1.0)
                )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, q] = a[q, p] = 0.0
    else:
        if _off_norm(a) >= threshold:
            raise NumericFailure(
                f"Jacobi iteration stalled after {max_sweeps} sweeps"
            )
    return sorted(np.diagonal(a).tolist())


# ---------------------------------------------------------------------------
# Exact characteristic polynomials
# ---------------------------------------------------------------------------


def charpoly_exact(m) -> list[Fraction]:
    """Ascending coefficients of det(zI - M) for a rational square matrix.

    Denominators are cleared globally, the integer polynomial det(tI - N)
    is sampled at t = 0..order and interpolated with Newton divided
    differences, and the clearing substitution t = cz is undone.  Every step
    is exact.
    """
    rows = [[F(x) for x in row] for row in m]
    order = len(rows)
    if any(len(row) != order for row in rows):
        raise ValueError("matrix must be square")
    if order == 0:
        return [F(1)]
    clear = math.lcm(*(x.denominator for row in rows for x in row))
    scaled = [[int(x * clear) for x in row] for row in rows]

    values = []
    for t in range(order + 1):
        shifted = [
            [(t * clear if i == j else 0) - scaled[i][j] for j in range(order)]
            for i in range(order)
        ]
        values.append(bareiss_det_int(shifted))

    # Newton divided differences on the nodes 0..order
    dd = [F(v) for v in values]
    for k in range(1, order + 1):
        for i in range(order, k - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / k

    poly = [F(0)] * (order + 1)
    basis = [F(1)]  # ascending coefficients of prod_{j<k} (t - j)
    for k, coeff in enumerate(dd):
        for idx, b in enumerate(basis):
            poly[idx] += coeff * b
        if k < order:
            shifted_basis = [F(0)] * (len(basis) + 1)
            for idx, b in enumerate(basis):
                shifted_basis[idx + 1] += b
                shifted_basis[idx] -= k * b
            basis = shifted_basis

    # the samples were det((clear * t) I - N) = clear**order * det(tI - M)
    scale = F(1, clear**order)
    return [poly[k] * scale for k in range(order + 1)]


def recip_sum_from_charpoly(coeffs) -> Fraction:
    """Sum of reciprocals of the nonzero roots, read off by Vieta.

    For p(z) = c_k z^k + c_{k+1} z^{k+1} + ... with c_k != 0 the sum is
    -c_{k+1}/c_k.  A double zero root (k >= 2) is rejected because the
    quantity would silently lose information.
    """
    coeffs = [F(c) for c in coeffs]
    k0 = next((i for i, c in enumerate(coeffs) if c != 0), None)
    if k0 is None:
        raise ValueError("zero polynomial")
    if k0 >= 2:
        raise ValueError("polynomial has a repeated zero root")
    if k0 + 1 == len(coeffs):
        return F(0)
    return -coeffs[k0 + 1] / coeffs[k0]


# ---------------------------------------------------------------------------
# Exact resistances, tree counts and the derived indices
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def resistance_matrix_exact(g, ground: int = 0):
    """Effective resistance between every vertex pair, exactly.

    Inverts the Laplacian grounded at `ground`; the answer is independent of
    that choice, which the tests exercise directly.
    """
    vertex_count, _ = _graph_data(g)
    if not 0 <= ground < vertex_count:
        raise ValueError("ground vertex out of range")
    if not is_connected(g):
        raise DisconnectedGraph("resistances need a connected graph")
    lap = combinatorial_laplacian(g)
    keep = [i for i in range(vertex_count) if i != ground]
    grounded = [[F(lap[i][j]) for j in keep] for i in keep]
    green = invert_fraction_matrix(grounded)
    pos = {v: k for k, v in enumerate(keep)}

    def pair(i: int, j: int) -> Fraction:
        if i == j:
            return F(0)
        if i == ground:
            return green[pos[j]][pos[j]]
        if j == ground:
            return green[pos[i]][pos[i]]
        return (
            green[pos[i]][pos[i]]
            + green[pos[j]][pos[j]]
            - 2 * green[pos[i]][pos[j]]
        )

    return tuple(
        tuple(pair(i, j) for j in range(vertex_count)) for i in range(vertex_count)
    )


@lru_cache(maxsize=None)
def kemeny_oracle(g) -> Fraction:
    """Kemeny's constant via the exact walk-matrix characteristic polynomial."""
    if not is_connected(g):
        raise DisconnectedGraph("Kemeny's constant needs a connected graph")
    return recip_sum_from_charpoly(charpoly_exact(rational_walk_laplacian(g)))


def kf_oracle(g) -> Fraction:
    """Kirchhoff index: sum of resistances over unordered vertex pairs."""
    r = resistance_matrix_exact(g)
    vertex_count = len(r)
    return sum(
        r[i][j] for i in range(vertex_count) for j in range(i + 1, vertex_count)
    )


def dk_oracle(g) -> Fraction:
    """Degree-weighted resistance sum, cross-checked against the spectral
    route 2|E| * kemeny before being returned."""
    vertex_count, edges = _graph_data(g)
    degrees = [0] * vertex_count
    for a, b in edges:
        degrees[a] += 1
        degrees[b] += 1
    r = resistance_matrix_exact(g)
    total = sum(
        degrees[i] * degrees[j] * r[i][j]
        for i in range(vertex_count)
        for j in range(i + 1, vertex_count)
    )
    spectral = 2 * len(edges) * kemeny_oracle(g)
    if total != spectral:
        raise ConsistencyError(
            f"resistance route {total} != spectral route {spectral}"
        )
    return total


@lru_cache(maxsize=None)
def spanning_trees_oracle(g) -> int:
    """Spanning tree count by an exact Laplacian cofactor."""
    lap = combinatorial_laplacian(g)
    minor = [row[1:] for row in lap[1:]]
    return bareiss_det_int(minor)


def leading_principal_minors_exact(m) -> list[Fraction]:
    """Exact leading principal minors of a rational matrix."""
    return leading_principal_minors(m)
