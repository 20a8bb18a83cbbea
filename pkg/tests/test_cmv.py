"""Banded pencil matrices: structure, products, and defining identities."""

import numpy as np
import pytest

from cmvpencil.cmv import (
    BandedMatrix,
    TruncationSpec,
    banded_product,
    build_H,
    build_J,
    build_K,
    build_L,
    build_M,
    tridiagonal_eigenvalues,
    verify_identities,
)
from cmvpencil.errors import InvalidParameterError, TruncationError
from cmvpencil.recurrences import ReflectionSequence, jacobi_opuc_reflections

TRUNC8 = TruncationSpec(n_blocks=4)


def dense_reference(a, lam, dim):
    """Independent dense construction of L, M straight from the block layout."""
    L = np.zeros((dim, dim))
    M = np.zeros((dim, dim))
    for k in range(0, dim - 1, 2):  # L blocks start at row 0
        an, rn = float(a(k)), a.r(k)
        L[k : k + 2, k : k + 2] = [[an, rn], [rn, -an]]
    M[0, 0] = 1.0
    for k in range(1, dim - 1, 2):  # M blocks start at row 1
        an, rn = float(a(k)), a.r(k)
        M[k : k + 2, k : k + 2] = [[an, rn], [rn, -an]]
    M[dim - 1, dim - 1] = float(a(dim - 1))  # truncated block keeps its corner
    return L, M


def test_truncation_spec():
    assert TruncationSpec(n_blocks=5).dim == 10
    with pytest.raises(TruncationError):
        TruncationSpec(n_blocks=1)


def test_block_structure_free_case():
    a = ReflectionSequence.constant(0.0)
    L = build_L(a, TRUNC8)
    M = build_M(a, TRUNC8)
    Ld, Md = dense_reference(a, 1.0, 8)
    np.testing.assert_allclose(L.to_dense(), Ld, atol=0)
    np.testing.assert_allclose(M.to_dense(), Md, atol=0)
    # the free L is a perfect antidiagonal-block matrix
    assert L.entry(0, 1) == 1.0 and L.entry(0, 0) == 0.0
    assert M.entry(0, 0) == 1.0 and M.entry(7, 7) == 0.0


def test_dense_reference_agreement():
    a = jacobi_opuc_reflections(0.3, 0.7)
    Ld, Md = dense_reference(a, 1.0, 8)
    np.testing.assert_allclose(build_L(a, TRUNC8).to_dense(), Ld, atol=1e-15)
    np.testing.assert_allclose(build_M(a, TRUNC8).to_dense(), Md, atol=1e-15)


def test_J_and_K_match_sums():
    a = jacobi_opuc_reflections(0.3, 0.7)
    Ld, Md = dense_reference(a, 1.0, 8)
    np.testing.assert_allclose(build_J(a, TRUNC8).to_dense(), Ld + Md, atol=1e-14)
    for lam in (-2.0, 0.0, 0.5, 3.0):
        np.testing.assert_allclose(
            build_K(a, lam, TRUNC8).to_dense(), Ld + lam * Md, atol=1e-14
        )


def test_H_is_anticommutator():
    a = jacobi_opuc_reflections(0.3, 0.7)
    Ld, Md = dense_reference(a, 1.0, 8)
    np.testing.assert_allclose(
        build_H(a, TRUNC8).to_dense(), Ld @ Md + Md @ Ld, atol=1e-14
    )


def test_involution_and_pencil_identities():
    a = jacobi_opuc_reflections(0.3, 0.7)
    for lam in (-1.0, 0.5, 1.0, 3.0):
        residuals = verify_identities(a, lam, TruncationSpec(n_blocks=16))
        assert set(residuals) == {
            "L_squared_is_identity",
            "M_squared_is_identity",
            "J_equals_L_plus_M",
            "K_equals_L_plus_lam_M",
            "H_equals_J_squared_minus_2",
            "K_squared_identity",
        }
        assert max(residuals.values()) <= 1e-13


def test_product_is_not_symmetric():
    # L*M is five-diagonal but not symmetric, hence the general banded type
    a = jacobi_opuc_reflections(0.3, 0.7)
    L = BandedMatrix.from_symmetric(build_L(a, TRUNC8))
    M = BandedMatrix.from_symmetric(build_M(a, TRUNC8))
    U = banded_product(L, M).to_dense()
    assert np.max(np.abs(U - U.T)) > 0.1


def test_banded_product_matches_dense():
    rng = np.random.default_rng(7)
    dim = 9
    a = BandedMatrix(dim, {0: rng.normal(size=dim), 1: rng.normal(size=dim - 1), -2: rng.normal(size=dim - 2)})
    b = BandedMatrix(dim, {0: rng.normal(size=dim), -1: rng.normal(size=dim - 1), 2: rng.normal(size=dim - 2)})
    np.testing.assert_allclose(
        banded_product(a, b).to_dense(), a.to_dense() @ b.to_dense(), atol=1e-13
    )


def test_transpose_and_add():
    rng = np.random.default_rng(11)
    dim = 6
    a = BandedMatrix(dim, {0: rng.normal(size=dim), 2: rng.normal(size=dim - 2)})
    np.testing.assert_allclose(a.transpose().to_dense(), a.to_dense().T, atol=0)
    np.testing.assert_allclose(a.add(a).to_dense(), 2 * a.to_dense(), atol=0)


def test_eigenvalues_match_dense_solver():
    a = jacobi_opuc_reflections(0.3, 0.7)
    K = build_K(a, 2.0, TruncationSpec(n_blocks=10))
    computed = tridiagonal_eigenvalues(K)
    reference = np.linalg.eigvalsh(K.to_dense())
    np.testing.assert_allclose(computed, reference, atol=1e-12)


def test_tridiagonal_eigenvalues_rejects_wider_bands():
    a = jacobi_opuc_reflections(0.3, 0.7)
    with pytest.raises(InvalidParameterError):
        tridiagonal_eigenvalues(build_H(a, TRUNC8))


def test_identities_hold_for_random_sequences():
    rng = np.random.default_rng(3)
    for _ in range(3):
        a = ReflectionSequence.from_list(rng.uniform(-0.9, 0.9, size=18))
        residuals = verify_identities(a, 0.7, TruncationSpec(n_blocks=8))
        assert max(residuals.values()) <= 1e-13
