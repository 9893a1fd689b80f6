"""Conjugacy solver tests against an independent Kronecker-product oracle.

The oracle never touches the package's nullspace/RREF path: it builds
the 4x4 Sylvester operator kron(A, I) - kron(I, B^T) with numpy, takes
its SVD nullspace, and probes invertibility by random combinations.
"""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modulilab.mat2 import (
    DEFAULT_TOL,
    Mat2,
    discriminant,
    mat_allclose,
    min_norm_conjugator,
    solve_conjugacy,
    trace,
)

RNG_SEED = 20260817


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------


def sylvester_operator(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """L with L @ vec_rowmajor(P) = vec_rowmajor(A P - P B)."""
    I = np.eye(2)
    return np.kron(A, I) - np.kron(I, B.T)


def oracle_nullspace(A: np.ndarray, B: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    L = sylvester_operator(A, B)
    _, s, vh = np.linalg.svd(L)
    scale = max(1.0, s[0]) if len(s) else 1.0
    keep = [i for i in range(4) if s[i] <= tol * scale]
    return np.conj(vh[keep])  # rows span the right null space


def oracle_dim(A: np.ndarray, B: np.ndarray) -> int:
    return oracle_nullspace(A, B).shape[0]


def oracle_conjugate(A: np.ndarray, B: np.ndarray, rng) -> bool:
    """Invertible intertwiner exists iff a random combo has det away from 0."""
    N = oracle_nullspace(A, B)
    if N.shape[0] == 0:
        return False
    best = 0.0
    for _ in range(16):
        c = rng.standard_normal(N.shape[0]) + 1j * rng.standard_normal(N.shape[0])
        P = (c @ N).reshape(2, 2)
        n = np.linalg.norm(P)
        if n > 1e-12:
            best = max(best, abs(np.linalg.det(P / n)))
    return best > 1e-8


def random_chart_matrix(rng) -> np.ndarray:
    """Random member of the |trace| > 3, |disc| < 1 chart."""
    r = 3.2 + 1.6 * rng.random()
    sigma = r * np.exp(2j * np.pi * rng.random())
    delta = 0.9 * rng.random() * np.exp(2j * np.pi * rng.random())
    det = (sigma * sigma - delta) / 4
    # companion-like realization, then a random conjugation
    A = np.array([[0, -det], [1, sigma]], dtype=complex)
    while True:
        Q = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        if abs(np.linalg.det(Q)) > 0.3:
            break
    return Q @ A @ np.linalg.inv(Q)


def as_mat2(arr: np.ndarray) -> Mat2:
    return Mat2(arr[0, 0], arr[0, 1], arr[1, 0], arr[1, 1])


# ---------------------------------------------------------------------------
# basic matrix algebra
# ---------------------------------------------------------------------------


def test_mat2_algebra_roundtrip():
    A = Mat2(1, 2j, -3, 4 + 1j)
    assert np.allclose((A @ A.inverse()).to_array(), np.eye(2))
    assert complex(A.trace()) == complex(A[0, 0]) + complex(A[1, 1])
    assert A.transpose().transpose() == A
    got = complex(discriminant(A))
    want = complex(trace(A)) ** 2 - 4 * complex(A.det())
    assert got == pytest.approx(want)


def test_mat2_exactness_flag():
    assert Mat2(1, 2, 3, 4).is_exact
    assert Mat2(Fraction(1, 3), 0, 0, 1).is_exact
    assert not Mat2(0.5, 0, 0, 1.0).is_exact


def test_mat2_scalar_multiplication_both_sides():
    A = Mat2(1, 2, 3, 4)
    assert (2 * A) == (A * 2)
    assert ((1 + 1j) * A).to_array()[0, 1] == pytest.approx(2 + 2j)


# ---------------------------------------------------------------------------
# solver vs oracle
# ---------------------------------------------------------------------------


def test_intertwiner_dimension_matches_oracle():
    rng = np.random.default_rng(RNG_SEED)
    for _ in range(200):
        A = random_chart_matrix(rng)
        B = random_chart_matrix(rng)
        sol = solve_conjugacy(as_mat2(A), as_mat2(B))
        assert sol.dim == oracle_dim(A, B)


def test_classification_agreement_1000_pairs():
    rng = np.random.default_rng(RNG_SEED + 1)
    disagreements = 0
    for k in range(1000):
        A = random_chart_matrix(rng)
        if k % 3 == 0:
            # force related pairs so both answers occur
            Q = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
            B = Q @ A @ np.linalg.inv(Q)
        else:
            B = random_chart_matrix(rng)
        package = not solve_conjugacy(as_mat2(A), as_mat2(B)).det1.empty
        oracle = oracle_conjugate(A, B, rng)
        if package != oracle:
            disagreements += 1
    assert disagreements == 0


def test_witness_residual_and_unit_determinant():
    rng = np.random.default_rng(RNG_SEED + 2)
    for _ in range(100):
        A = random_chart_matrix(rng)
        Q = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        B = Q @ A @ np.linalg.inv(Q)
        got = min_norm_conjugator(as_mat2(A), as_mat2(B))
        assert got is not None
        P, norm = got
        Pa = P.to_array()
        scale = (1 + np.linalg.norm(A) + np.linalg.norm(B)) * (1 + norm)
        assert np.linalg.norm(A @ Pa - Pa @ B) <= 1e-8 * scale
        assert abs(np.linalg.det(Pa) - 1) <= 1e-8
        assert norm == pytest.approx(np.linalg.norm(Pa), rel=1e-9)


def test_min_norm_not_beaten_by_grid_sampling():
    rng = np.random.default_rng(RNG_SEED + 3)
    for _ in range(25):
        A = random_chart_matrix(rng)
        Q = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        B = Q @ A @ np.linalg.inv(Q)
        sol = solve_conjugacy(as_mat2(A), as_mat2(B))
        got = sol.min_norm_det1()
        assert got is not None
        _, norm, _ = got
        fam = sol.det1
        for _ in range(100):
            if fam.kind == "hyperbolic":
                al = math.exp(rng.uniform(-2, 2)) * np.exp(2j * np.pi * rng.random())
                cand = fam.branches[0].at(alpha=al)
            elif fam.kind == "affine":
                br = fam.branches[int(rng.integers(len(fam.branches)))]
                coeffs = tuple(
                    rng.standard_normal() + 1j * rng.standard_normal()
                    for _ in br.free
                )
                cand = br.at(coeffs=coeffs)
            else:
                break
            assert cand.frobenius() >= norm - 1e-7


# ---------------------------------------------------------------------------
# frozen families
# ---------------------------------------------------------------------------


def test_shear_to_transpose_family_closed_form():
    for t in (Fraction(1, 2), Fraction(1, 10), 0.37):
        A = Mat2(2, t, 0, 2)
        sol = solve_conjugacy(A, A.transpose())
        fam = sol.det1
        assert fam.kind == "affine"
        assert len(fam.branches) == 2
        assert fam.free_parameters == 1
        leads = []
        for br in fam.branches:
            L = br.at(coeffs=(0,)).to_array()
            assert abs(L[0, 0]) < 1e-12 and abs(L[1, 1]) < 1e-12
            assert L[0, 1] == pytest.approx(L[1, 0])
            assert abs(L[0, 1].real) < 1e-12 and abs(abs(L[0, 1].imag) - 1) < 1e-12
            F = br.free[0].to_array()
            assert np.allclose(F, [[1, 0], [0, 0]])
            leads.append(L[0, 1])
        assert leads[0] == pytest.approx(-leads[1])


def test_diagonal_self_conjugators_closed_form():
    D = Mat2.diag(2, Fraction(5, 2))
    fam = solve_conjugacy(D, D).det1
    assert fam.kind == "hyperbolic"
    assert fam.free_parameters == 1
    br = fam.branches[0]
    assert not br.free
    P2 = br.at(alpha=2).to_array()
    assert np.allclose(P2, np.diag([2, 0.5])) or np.allclose(P2, np.diag([0.5, 2]))
    P1 = br.at(alpha=1)
    assert mat_allclose(P1, Mat2.identity(), 1e-12)


def test_disjoint_spectra_have_no_conjugator():
    sol = solve_conjugacy(Mat2.diag(1, 2), Mat2.diag(3, 4))
    assert sol.dim == 0
    assert sol.det1.kind == "empty"
    assert sol.min_norm_det1() is None
    assert min_norm_conjugator(Mat2.diag(1, 2), Mat2.diag(3, 4)) is None


def test_self_conjugacy_of_diagonal_min_norm_is_identity():
    got = min_norm_conjugator(Mat2.diag(1, 2), Mat2.diag(1, 2))
    assert got is not None
    P, norm = got
    assert mat_allclose(P, Mat2.identity(), 1e-9)
    assert norm == pytest.approx(math.sqrt(2))


def test_scalar_pair_full_family():
    sol = solve_conjugacy(Mat2.scalar(2), Mat2.scalar(2))
    assert sol.dim == 4
    assert sol.det1.kind == "full"
    P, norm, label = sol.min_norm_det1()
    assert label == "full"
    assert mat_allclose(P, Mat2.identity(), 1e-12)
    assert norm == pytest.approx(math.sqrt(2))


def test_exact_entries_produce_exact_basis():
    A = Mat2(2, Fraction(1, 2), 0, 2)
    sol = solve_conjugacy(A, A.transpose())
    assert sol.exact
    for M in sol.basis:
        assert M.is_exact


# ---------------------------------------------------------------------------
# property tests
# ---------------------------------------------------------------------------


finite = st.floats(-2, 2, allow_nan=False, allow_infinity=False)


@settings(max_examples=60, deadline=None)
@given(finite, finite, finite, finite, finite, finite, finite, finite)
def test_conjugated_matrices_always_related(qa, qb, qc, qd, wa, wb, wc, wd):
    Q = np.array([[1 + qa, qb + 1j * wa], [qc + 1j * wb, 1 + qd]], dtype=complex)
    if abs(np.linalg.det(Q)) < 0.2:
        return
    A = np.array([[4 + wc, wd], [0.1 * qa, 4.5]], dtype=complex)
    B = Q @ A @ np.linalg.inv(Q)
    sol = solve_conjugacy(as_mat2(A), as_mat2(B))
    assert not sol.det1.empty
    P, norm, _ = sol.min_norm_det1()
    Pa = P.to_array()
    scale = (1 + np.linalg.norm(A) + np.linalg.norm(B)) * (1 + norm)
    assert np.linalg.norm(A @ Pa - Pa @ B) <= 1e-7 * scale


@settings(max_examples=60, deadline=None)
@given(finite, finite, finite, finite)
def test_solution_dim_is_symmetric(a, b, c, d):
    A = np.array([[4 + a, b], [c, 4 + d]], dtype=complex)
    B = np.array([[4 + b, d], [a, 4 + c]], dtype=complex)
    d1 = solve_conjugacy(as_mat2(A), as_mat2(B)).dim
    d2 = solve_conjugacy(as_mat2(B), as_mat2(A)).dim
    assert d1 == d2
