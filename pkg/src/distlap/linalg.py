"""Symmetric eigensolving, Perron radius via power iteration, irreducibility."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, ConvergenceError


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues in descending order.

    tol is the tolerance the values were computed/validated to; multiplicity
    queries default to a looser grouping tolerance of their own.
    """

    values: np.ndarray
    tol: float

    def __len__(self):
        return len(self.values)

    @property
    def largest(self):
        return float(self.values[0])


def frobenius_norm(m):
    a = np.asarray(m, dtype=float)
    return float(np.sqrt((a * a).sum()))


def eig_symmetric(m, tol=1e-12):
    """Full spectrum of an exactly symmetric real matrix, descending.

    Rejects non-square or non-symmetric input (entry-for-entry equality is
    required, which integer-built matrices always satisfy). Cross-checks the
    eigenvalue sum against the trace to 1e-9 * ||m||_F before returning.
    """
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        raise ValueError("empty matrix")
    if not np.isfinite(a).all():
        raise ValueError("matrix contains non-finite entries")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    w = np.linalg.eigvalsh(a)[::-1].copy()
    drift = abs(float(w.sum()) - float(np.trace(a)))
    if drift > 1e-9 * frobenius_norm(a) + 1e-12:
        raise ConsistencyError(
            f"eigenvalue sum drifted from trace by {drift:.3e}")
    return Spectrum(values=w, tol=tol)


def spectral_radius_nonneg(m, tol=1e-12, max_iter=200000):
    """Perron radius of an entrywise-nonnegative square matrix.

    Power iteration on m + I (the shift makes the dominant eigenvalue simple
    in modulus for irreducible patterns and kills oscillation on bipartite
    ones); stops when successive Rayleigh quotients agree to
    tol * (1 + |estimate|). Raises ConvergenceError with the last residual if
    the budget runs out.
    """
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        raise ValueError("empty matrix")
    if not np.isfinite(a).all():
        raise ValueError("matrix contains non-finite entries")
    if (a < 0).any():
        raise ValueError("matrix has negative entries")
    n = a.shape[0]
    x = np.full(n, 1.0 / np.sqrt(n))
    prev = np.inf
    residual = np.inf
    for _ in range(max_iter):
        y = a @ x + x
        est = float(x @ y) - 1.0
        residual = abs(est - prev)
        if residual <= tol * (1.0 + abs(est)):
            return est
        prev = est
        # y >= x component-wise, so the norm never vanishes
        x = y / np.linalg.norm(y)
    raise ConvergenceError(
        f"power iteration did not converge in {max_iter} iterations",
        residual=residual)


def _pattern_reach(pattern, start):
    n = pattern.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[start] = True
    frontier = seen.copy()
    while frontier.any():
        nxt = pattern[frontier].any(axis=0) & ~seen
        seen |= nxt
        frontier = nxt
    return bool(seen.all())


def is_irreducible(m):
    """True iff the directed nonzero-entry pattern is strongly connected.

    Checked by forward reachability from vertex 0 and backward reachability
    (forward in the transpose); both full covers strong connectivity. A 1x1
    matrix is irreducible iff its entry is nonzero (the usual convention).
    """
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    pattern = a != 0
    if a.shape[0] == 1:
        return bool(pattern[0, 0])
    return _pattern_reach(pattern, 0) and _pattern_reach(pattern.T, 0)


def multiplicity(s, value, tol=None):
    """Count of eigenvalues in s within tol of value.

    Default tol is 1e-6 * (1 + |value|).
    """
    if tol is None:
        tol = 1e-6 * (1.0 + abs(value))
    return int((np.abs(s.values - value) <= tol).sum())
