"""Eigensolver contract, power iteration, irreducibility, multiplicities."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from distlap import (
    ConvergenceError, build_operators, compute_distance_data,
    eig_symmetric, enumerate_connected, frobenius_norm, is_irreducible,
    multiplicity, spectral_radius_nonneg)
from distlap.named_graphs import complete_graph, path_graph


def test_frobenius_norm():
    assert frobenius_norm([[3, 4], [0, 0]]) == 5.0
    assert frobenius_norm(np.zeros((3, 3))) == 0.0


def test_eig_symmetric_known_values():
    s = eig_symmetric(np.diag([1.0, 5.0, 3.0]))
    assert s.values.tolist() == [5.0, 3.0, 1.0]
    s = eig_symmetric([[0.0, 1.0], [1.0, 0.0]])
    assert np.allclose(s.values, [1.0, -1.0])
    s = eig_symmetric([[2.0]])
    assert s.values.tolist() == [2.0]


def test_eig_symmetric_rejects_bad_input():
    with pytest.raises(ValueError, match="square"):
        eig_symmetric(np.ones((2, 3)))
    with pytest.raises(ValueError, match="symmetric"):
        eig_symmetric([[0.0, 1.0], [1.0 + 1e-12, 0.0]])
    with pytest.raises(ValueError, match="finite"):
        eig_symmetric([[np.nan, 0.0], [0.0, 1.0]])


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=8), st.integers())
def test_eig_symmetric_descending_and_trace(n, seed):
    rng = np.random.default_rng(abs(seed) % 2**32)
    a = rng.normal(size=(n, n))
    a = a + a.T
    s = eig_symmetric(a)
    assert all(s.values[i] >= s.values[i + 1] for i in range(n - 1))
    assert abs(s.values.sum() - np.trace(a)) <= 1e-9 * (1 + frobenius_norm(a))


def test_power_iteration_known_matrices():
    assert spectral_radius_nonneg([[0.0]]) == 0.0
    assert abs(spectral_radius_nonneg([[0, 1], [1, 0]]) - 1.0) < 1e-10
    # adjacency of the star on 4 vertices: radius sqrt(3)
    a = np.zeros((4, 4))
    a[0, 1:] = a[1:, 0] = 1
    assert abs(spectral_radius_nonneg(a) - np.sqrt(3)) < 1e-9


def test_power_iteration_rejects_bad_input():
    with pytest.raises(ValueError, match="negative"):
        spectral_radius_nonneg([[0, -1], [1, 0]])
    with pytest.raises(ValueError, match="square"):
        spectral_radius_nonneg(np.ones((2, 3)))


def test_power_iteration_convergence_error():
    # ones is not an eigenvector here, so the estimate keeps moving
    a = np.zeros((3, 3))
    a[0, 1:] = a[1:, 0] = 1.0
    with pytest.raises(ConvergenceError) as exc:
        spectral_radius_nonneg(a, tol=0.0, max_iter=3)
    assert exc.value.residual > 0


def test_power_iteration_agrees_with_eigensolver_on_operators():
    # distance and signless matrices of every connected graph on <= 5 vertices
    for n in range(1, 6):
        for g in enumerate_connected(n):
            bundle = build_operators(compute_distance_data(g))
            for m in (bundle.d_mat, bundle.q_mat):
                rho = spectral_radius_nonneg(m.astype(float))
                ref = eig_symmetric(m.astype(float)).largest
                assert abs(rho - ref) <= 1e-9 * (1 + abs(ref)), (n, m)


def test_power_iteration_nonsymmetric():
    rng = np.random.default_rng(5)
    for _ in range(25):
        n = int(rng.integers(2, 7))
        a = rng.random((n, n))
        rho = spectral_radius_nonneg(a, tol=1e-13)
        ref = max(abs(np.linalg.eigvals(a)))
        assert abs(rho - ref) <= 1e-8 * (1 + ref)


def test_is_irreducible_cases():
    assert not is_irreducible(3 * np.eye(3))
    assert is_irreducible([[0, 1], [1, 0]])
    assert not is_irreducible([[1, 1], [0, 1]])  # upper triangular
    assert is_irreducible([[5.0]])
    # distance matrices of connected graphs are positive off-diagonal
    d = compute_distance_data(path_graph(4)).dist
    assert is_irreducible(d)


def test_multiplicity():
    s = eig_symmetric(np.diag([4.0, 4.0, 4.0, 0.0]))
    assert multiplicity(s, 4.0) == 3
    assert multiplicity(s, 0.0) == 1
    assert multiplicity(s, 2.0) == 0
    assert multiplicity(s, 4.0 + 1e-7) == 3  # default tol absorbs it
    assert multiplicity(s, 4.0, tol=1e-12) == 3


def test_complete_graph_multiplicity():
    s = eig_symmetric(
        build_operators(
            compute_distance_data(complete_graph(6))).l_mat.astype(float))
    assert multiplicity(s, 6.0) == 5


def test_charpoly_oracle_self_check():
    # the oracle itself must nail an easy known spectrum
    roots = oracles.charpoly_eigenvalues(np.diag([3.0, 1.0, -2.0]))
    assert np.allclose(roots, [3.0, 1.0, -2.0], atol=1e-9)
    assert abs(oracles.lu_determinant([[1, 2], [3, 4]]) + 2.0) < 1e-12
    assert oracles.lu_determinant([[1, 1], [1, 1]]) == 0.0
