"""Distance matrix operators: Laplacian, signless Laplacian, Brauer shift."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class OperatorBundle:
    """Integer matrices built from one distance matrix.

    d_mat: the distance matrix itself
    l_mat: diag(tr) - d_mat (singular, row sums zero)
    q_mat: diag(tr) + d_mat
    b_mat: l_mat + ones * p^T, the rank-one shift whose extra eigenvalue is
           the eccentricity sum while the rest of the l_mat spectrum carries
           over (b_mat is generally not symmetric)
    """

    d_mat: np.ndarray
    l_mat: np.ndarray
    q_mat: np.ndarray
    b_mat: np.ndarray


def build_operators(dd):
    """Exact integer operator matrices for a connected graph's distance data."""
    d = dd.dist
    t = np.diag(dd.tr)
    l = t - d
    q = t + d
    b = l + dd.p[None, :]
    return OperatorBundle(d_mat=d, l_mat=l, q_mat=q, b_mat=b)


def polynomial_row_sums(q_mat, coeffs):
    """Row sums of p(q_mat) for a polynomial p of degree at most 2.

    coeffs is (c0, c1, c2...) lowest degree first, at most three entries.
    Computed with matrix-vector products against the all-ones vector only;
    the matrix power is never formed. Integer inputs give exact integer
    output.
    """
    if len(coeffs) == 0 or len(coeffs) > 3:
        raise ValueError(
            f"need 1 to 3 coefficients (degree <= 2), got {len(coeffs)}")
    q = np.asarray(q_mat)
    if q.ndim != 2 or q.shape[0] != q.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {q.shape}")
    exact = q.dtype.kind in "iu" and all(
        isinstance(c, (int, np.integer)) for c in coeffs)
    dtype = np.int64 if exact else np.float64
    v = np.ones(q.shape[0], dtype=dtype)
    out = coeffs[0] * v
    power = v
    for c in coeffs[1:]:
        power = q @ power
        out = out + c * power
    return out
