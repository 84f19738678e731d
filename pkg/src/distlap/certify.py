"""Equality-case diagnosis and proven-identity checks.

The diagnose_* functions compare a bound against the relevant spectral radius
at the diagnosis tolerance and attach the structural certificate that the
equality characterization predicts. When a characterization is an iff, both
directions are enforced and a failure raises TheoremViolationError: that
exception firing on a valid connected graph would mean the implementation
(or the statement) is wrong, so sweeps treat it as a violation, not an error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import BoundId, bound_L_n3, bound_Q_cs7, bound_Q_tb
from .errors import NotApplicableError, TheoremViolationError
from .graphs import is_tree, transmission_regularity
from .linalg import is_irreducible, multiplicity

DIAG_ABS = 1e-6
DIAG_REL = 1e-8

CERT_NONE = "none"
CERT_COMPLETE = "complete-graph"
CERT_THREE_L = "three-distinct-L-eigenvalues"
CERT_B_REDUCIBLE = "B-reducible-necessary"
CERT_REGULAR = "transmission-regular"


def equality_tol(x):
    return DIAG_ABS + DIAG_REL * abs(x)


@dataclass(frozen=True)
class EqualityDiagnosis:
    bound: BoundId
    equality_within_tol: bool
    certificate: str

    def __post_init__(self):
        if (self.certificate == CERT_NONE) == self.equality_within_tol:
            raise ValueError(
                "certificate must be 'none' exactly when equality is absent")


def _is_complete(dd):
    # complete iff every off-diagonal distance is 1
    return dd.n == 1 or int(dd.p.max()) == 1


def diagnose_n1(bundle, spectrum_l, dd):
    """Equality in the row-maxima sum bound requires the rank-one-shifted
    matrix to be reducible (necessary, not sufficient)."""
    value = float(dd.p.sum())
    radius = spectrum_l.largest
    eq = abs(value - radius) <= equality_tol(radius)
    if eq:
        if is_irreducible(bundle.b_mat):
            raise TheoremViolationError(
                "row-maxima bound met with an irreducible shifted matrix "
                f"(value {value!r}, radius {radius!r})")
        return EqualityDiagnosis(BoundId.L_N1, True, CERT_B_REDUCIBLE)
    return EqualityDiagnosis(BoundId.L_N1, False, CERT_NONE)


def diagnose_n3(spectrum_l, dd):
    """Equality in the Laplacian trace/Frobenius bound happens exactly for the
    complete graph or a spectrum with three distinct values
    {r, (2W - r)/(n - 2), 0}."""
    n = dd.n
    if n < 2:
        raise NotApplicableError("needs n >= 2")
    tr2 = int((dd.tr.astype(np.int64) ** 2).sum())
    d2 = int((dd.dist.astype(np.int64) ** 2).sum())
    value = bound_L_n3(dd, math.sqrt(tr2 + d2))
    radius = spectrum_l.largest
    eq = abs(value - radius) <= equality_tol(radius)
    if not eq:
        return EqualityDiagnosis(BoundId.L_N3, False, CERT_NONE)
    vals = spectrum_l.values
    tol = equality_tol(radius)
    if abs(float(vals[-1])) > tol:
        raise TheoremViolationError(
            "trace/Frobenius equality with nonzero smallest eigenvalue "
            f"{vals[-1]!r}")
    if multiplicity(spectrum_l, radius, tol) >= n - 1:
        return EqualityDiagnosis(BoundId.L_N3, True, CERT_COMPLETE)
    mid = (2.0 * dd.wiener - radius) / (n - 2)
    middle = vals[1:n - 1]
    if np.abs(middle - mid).max() > equality_tol(mid):
        raise TheoremViolationError(
            "trace/Frobenius equality without the predicted "
            f"three-value spectrum (middle block {middle!r} vs {mid!r})")
    return EqualityDiagnosis(BoundId.L_N3, True, CERT_THREE_L)


def diagnose_cs7(spectrum_q, dd):
    """Equality in the signless trace/Frobenius bound iff the graph is complete.
    Both directions are enforced."""
    tr2 = int((dd.tr.astype(np.int64) ** 2).sum())
    d2 = int((dd.dist.astype(np.int64) ** 2).sum())
    value = bound_Q_cs7(dd, math.sqrt(tr2 + d2))
    radius = spectrum_q.largest
    eq = abs(value - radius) <= equality_tol(radius)
    complete = _is_complete(dd)
    if eq and not complete:
        raise TheoremViolationError(
            "signless trace/Frobenius equality on a non-complete graph "
            f"(value {value!r}, radius {radius!r})")
    if complete and not eq:
        raise TheoremViolationError(
            "complete graph missed signless trace/Frobenius equality "
            f"(value {value!r}, radius {radius!r})")
    if eq:
        return EqualityDiagnosis(BoundId.Q_CS7, True, CERT_COMPLETE)
    return EqualityDiagnosis(BoundId.Q_CS7, False, CERT_NONE)


def diagnose_tb(spectrum_q, dd):
    """The signless radius hits either transmission endpoint iff the graph is
    transmission-regular (in which case it hits both). Both directions are
    enforced. One diagnosis covers the interval pair; it carries the
    upper-bound id."""
    lo, up = bound_Q_tb(dd)
    radius = spectrum_q.largest
    eq_lo = abs(radius - lo) <= equality_tol(radius)
    eq_up = abs(radius - up) <= equality_tol(radius)
    regular = transmission_regularity(dd) is not None
    if (eq_lo or eq_up) and not regular:
        raise TheoremViolationError(
            "transmission endpoint met by a non-transmission-regular graph "
            f"(radius {radius!r}, interval ({lo!r}, {up!r}))")
    if regular and not (eq_lo and eq_up):
        raise TheoremViolationError(
            "transmission-regular graph missed its endpoint equality "
            f"(radius {radius!r}, interval ({lo!r}, {up!r}))")
    if regular:
        return EqualityDiagnosis(BoundId.Q_TB_UP, True, CERT_REGULAR)
    return EqualityDiagnosis(BoundId.Q_TB_UP, False, CERT_NONE)


def check_han_multiplicity(spectrum_l, g):
    """Largest Laplacian eigenvalue has multiplicity at most n - 2 unless the
    graph is complete, where it is exactly n - 1. Returns True when the
    spectrum respects that. Needs n > 2."""
    n = g.n
    if n <= 2:
        raise NotApplicableError("needs n > 2")
    m = multiplicity(spectrum_l, spectrum_l.largest)
    complete = g.edge_count == n * (n - 1) // 2
    if complete:
        return m == n - 1
    return m <= n - 2


def check_tree_determinant(g, dd):
    """Distance-matrix determinant of a tree matches the closed form
    (-1)^(n-1) * (n-1) * 2^(n-2) to 1e-6 relative. Not applicable off trees."""
    if not is_tree(g):
        raise NotApplicableError("graph is not a tree")
    n = g.n
    if n == 1:
        expected = 0.0
    else:
        expected = float((-1) ** (n - 1) * (n - 1) * 2 ** (n - 2))
    det = float(np.linalg.det(dd.dist.astype(np.float64)))
    return abs(det - expected) <= 1e-6 * max(1.0, abs(expected))
