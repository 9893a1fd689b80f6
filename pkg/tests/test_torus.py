"""Torus moduli: lattice action, witness search, flat gluing functions."""

import math

import numpy as np
import pytest

from modulilab.mat2 import Mat2
from modulilab.torus import (
    GAMMA_SWAP,
    FlatFunctionParams,
    IntMat4,
    TorusPoint,
    act,
    automorphisms,
    equivalent,
    f_bump,
    flat_b,
    flat_c,
    flatness_defect,
    genericity_certificate,
    h_flat,
    in_moduli,
    induced_linear_part,
    omega1,
    omega2,
    random_unimodular,
    search_witnesses,
    zero_sequence,
)

RNG_SEED = 77


# ---------------------------------------------------------------------------
# IntMat4
# ---------------------------------------------------------------------------


def test_intmat4_validates_determinant():
    with pytest.raises(ValueError):
        IntMat4([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    with pytest.raises(ValueError):
        IntMat4([[0.5] * 4] * 4)
    assert (-IntMat4.identity()).det() == 1  # -Id is unimodular in dim 4


def test_intmat4_inverse_and_product():
    rng = np.random.default_rng(RNG_SEED)
    for _ in range(50):
        g = random_unimodular(rng)
        assert g.det() == 1
        assert g @ g.inverse() == IntMat4.identity()
        assert g.inverse() @ g == IntMat4.identity()


def test_sign_canonical_prefers_nonnegative_lead():
    g = GAMMA_SWAP
    assert g.sign_canonical() == g
    assert (-g).sign_canonical() == g
    assert g.sign_canonical().sign_canonical() == g.sign_canonical()


def test_gamma_swap_is_an_involution():
    assert GAMMA_SWAP @ GAMMA_SWAP == IntMat4.identity()
    assert GAMMA_SWAP.det() == 1


# ---------------------------------------------------------------------------
# moduli membership and the action
# ---------------------------------------------------------------------------


def test_moduli_membership():
    assert in_moduli(Mat2.scalar(1j))
    assert in_moduli(omega1(0.3))
    assert not in_moduli(Mat2.scalar(1))       # real period matrix
    assert not in_moduli(Mat2.diag(1j, -1j))   # det Im < 0
    with pytest.raises(Exception):
        TorusPoint(Mat2.scalar(1))


def test_action_is_a_right_action():
    rng = np.random.default_rng(RNG_SEED + 1)
    A = omega1(0.37)
    checked = 0
    for _ in range(100):
        g = random_unimodular(rng)
        h = random_unimodular(rng)
        lhs = act(act(A, g), h)
        rhs = act(A, g @ h)
        assert (lhs - rhs).frobenius() <= 1e-10 * (1 + rhs.frobenius())
        checked += 1
    assert checked == 100
    assert (act(A, IntMat4.identity()) - A).frobenius() == 0.0


def test_action_preserves_membership():
    rng = np.random.default_rng(RNG_SEED + 2)
    A = omega1(0.21)
    for _ in range(50):
        g = random_unimodular(rng)
        assert in_moduli(act(A, g))


def test_gamma_swap_acts_as_transpose():
    for t in (0.5, 0.37, -0.2, 1.3):
        W = omega1(t)
        assert (act(W, GAMMA_SWAP) - W.transpose()).frobenius() == 0.0
    # symmetric points are fixed
    assert (act(Mat2.scalar(1j), GAMMA_SWAP) - Mat2.scalar(1j)).frobenius() == 0.0


def test_induced_linear_parts_of_named_witnesses():
    B = omega1(0.4)
    C_id = induced_linear_part(IntMat4.identity(), B)
    assert (C_id - Mat2.identity()).frobenius() == 0.0
    C_swap = induced_linear_part(GAMMA_SWAP, B)
    assert (C_swap - Mat2(0, 1, 1, 0)).frobenius() == 0.0


# ---------------------------------------------------------------------------
# witness search
# ---------------------------------------------------------------------------


def test_search_recovers_planted_witness():
    rng = np.random.default_rng(RNG_SEED + 3)
    A = omega1(0.37)
    found_some = 0
    for _ in range(10):
        g0 = random_unimodular(rng, factors=2)
        if g0.max_entry_abs() > 1:
            continue
        B = act(A, g0)
        wits = search_witnesses(A, B, bound=1)
        assert g0 in wits or (-g0) in wits
        for w in wits:
            assert (act(A, w) - B).frobenius() <= 1e-8 * (1 + B.frobenius())
        found_some += 1
    assert found_some >= 3


def test_equivalent_returns_lex_min_self_witness():
    A = omega1(0.37)
    g = equivalent(A, A, bound=1)
    assert g == IntMat4.identity()


def test_unrelated_points_have_no_bounded_witness():
    A = Mat2.scalar(1j)
    B = Mat2(0.37 + 1j, 0, 0, 1j)
    assert in_moduli(A) and in_moduli(B)
    assert equivalent(A, B, bound=2) is None


def test_square_lattice_point_has_extra_automorphisms():
    # at i*Id the transpose fix and coordinate swaps inflate the group
    auts = automorphisms(Mat2.scalar(1j), bound=1)
    assert len(auts) > 2
    assert not genericity_certificate(Mat2.scalar(1j), bound=1)


def test_generic_flat_point_has_only_sign_automorphisms():
    p = FlatFunctionParams(variant=1)
    assert genericity_certificate(omega1(0.37, p), bound=2)


# ---------------------------------------------------------------------------
# flat gluing functions
# ---------------------------------------------------------------------------


def test_flat_profile_values():
    assert h_flat(-1.0) == 0.0
    assert h_flat(0.0) == 0.0
    assert h_flat(1.0) == pytest.approx(math.exp(-1))
    assert f_bump(-3) == 0.0  # integer zeros of the bump comb
    assert f_bump(-2.5) > 0.0


def test_flat_pair_ordering_and_zeros():
    p1 = FlatFunctionParams(variant=1)
    assert flat_b(0.4, p1) > flat_c(0.4, p1) > 0.0
    assert flat_b(0.0, p1) == flat_c(0.0, p1) == 0.0
    p2 = FlatFunctionParams(variant=2)
    for n in (1, 2, 3, 4):
        assert flat_b(zero_sequence(n), p2) == 0.0
        assert flat_c(zero_sequence(n), p2) == 0.0
    assert flat_b(math.exp(-2.5), p2) > 0.0


def test_flat_params_validate():
    with pytest.raises(ValueError):
        FlatFunctionParams(variant=3)
    with pytest.raises(ValueError):
        FlatFunctionParams(alpha=1.0, beta=2.0)


def test_flatness_defect_separates_flat_from_linear():
    p1 = FlatFunctionParams(variant=1)
    assert flatness_defect(lambda t: flat_b(t, p1), 0.0) <= 1e-6
    p2 = FlatFunctionParams(variant=2)
    for n in (1, 2, 3, 4):
        assert flatness_defect(lambda t: flat_b(t, p2), zero_sequence(n)) <= 1e-6
    # visibly non-flat functions are rejected at the same threshold
    assert flatness_defect(lambda t: t, 0.0) > 1e-6
    assert flatness_defect(lambda t: flat_b(t, p1), 0.4) > 1e-6


def test_period_families_and_gluing():
    p1 = FlatFunctionParams(variant=1)
    for t in (-0.5, -0.1, 0.0, 0.1, 0.5):
        W1 = omega1(t, p1)
        W2 = omega2(t, "transpose_split", p1)
        assert in_moduli(W1) and in_moduli(W2)
        if t >= 0:
            assert (W2 - W1.transpose()).frobenius() == 0.0
        else:
            assert (W2 - W1).frobenius() == 0.0
    p2 = FlatFunctionParams(variant=2)
    inside = math.exp(-1.5)   # odd interval: transposed
    outside = math.exp(-0.5)  # even interval: plain
    assert (omega2(inside, "interval_alternating", p2)
            - omega1(inside, p2).transpose()).frobenius() == 0.0
    assert (omega2(outside, "interval_alternating", p2)
            - omega1(outside, p2)).frobenius() == 0.0
    with pytest.raises(ValueError):
        omega2(0.1, "diagonal_stripes", p2)
