"""Family paths, pointwise sweeps, locality probes, and model summaries."""

import math

import numpy as np
import pytest

from modulilab.errors import MembershipError, ModelInconsistencyError
from modulilab.families import (
    FamilyPath,
    ModelKind,
    Verdict,
    constant_family,
    fischer_grauert_check,
    hopf_counterexample_pair,
    hopf_jumping_family,
    local_equivalence_probe,
    local_iso_probe,
    model_summary,
    pointwise_iso_sweep,
    pullback_family,
    torus_counterexample_pair,
    transpose_lift_check,
)
from modulilab.hopf import dim_kuranishi_at
from modulilab.jets import Jet
from modulilab.mat2 import Mat2
from modulilab.torus import FlatFunctionParams, IntMat4, act


# ---------------------------------------------------------------------------
# paths
# ---------------------------------------------------------------------------


def test_family_path_validates_grid():
    with pytest.raises(MembershipError):
        FamilyPath(
            ModelKind.HOPF,
            lambda t: Mat2(2, t, 0, 2),
            0.1,                      # grid point outside the domain
            "bad", "x", (0.0, 0.5),
        )
    with pytest.raises(MembershipError):
        FamilyPath(
            ModelKind.HOPF,
            lambda t: Mat2.diag(1, 2),  # not a chart member
            0.5, "bad", "x", (0.0,),
        )


def test_counterexample_pair_shapes():
    F1, F2 = hopf_counterexample_pair()
    assert F1(0.1)[0, 1] == pytest.approx(0.1)
    assert F2(0.1)[0, 1] == pytest.approx(0.001)
    assert (F1(0.0) - F2(0.0)).frobenius() == 0.0


# ---------------------------------------------------------------------------
# pointwise sweeps
# ---------------------------------------------------------------------------


def test_hopf_sweep_finds_witness_everywhere():
    F1, F2 = hopf_counterexample_pair()
    trace = pointwise_iso_sweep(F1, F2)
    assert trace.all_found
    norms = {s.t: s.witness_norm for s in trace.samples}
    assert norms[0.0] == pytest.approx(math.sqrt(2))  # identity at the seam
    for t in (0.01, 0.1, 0.5):
        assert norms[t] >= 0.99 / t
        assert norms[-t] >= 0.99 / t
    for s in trace.samples:
        if s.t != 0.0:
            A, B = F1(s.t), F2(s.t)
            P = s.witness
            scale = (1 + A.frobenius() + B.frobenius()) * (1 + s.witness_norm)
            assert (A @ P - P @ B).frobenius() <= 1e-9 * scale


def test_sweep_rejects_mixed_models():
    F1, _ = hopf_counterexample_pair()
    T1, _ = torus_counterexample_pair()
    with pytest.raises(ValueError):
        pointwise_iso_sweep(F1, T1)


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------


def test_verdict_vocabulary_is_enforced():
    with pytest.raises(ValueError):
        Verdict(True, "Maybe", "Yes", "divergence")
    with pytest.raises(ValueError):
        Verdict(True, "Yes", "Perhaps", "divergence")
    with pytest.raises(ModelInconsistencyError):
        Verdict(False, "Yes", "Unknown", "continuation-success")


def test_hopf_counterexample_probe_diverges():
    F1, F2 = hopf_counterexample_pair()
    v = local_iso_probe(F1, F2)
    assert v.pointwise_iso
    assert v.locally_iso == "No"
    assert v.diagnosis == "divergence"
    assert v.details["loglog_slope"] <= -0.9


def test_hopf_equivalence_probe_uses_trace_separation():
    F1, F2 = hopf_counterexample_pair()
    v = local_equivalence_probe(F1, F2)
    assert v.locally_equivalent == "No"
    assert v.diagnosis == "divergence"
    assert v.details.get("trace_separation") is True


def test_hopf_self_probe_continues():
    F1, _ = hopf_counterexample_pair()
    v = local_iso_probe(F1, F1)
    assert v.locally_iso == "Yes"
    assert v.diagnosis == "continuation-success"
    P = v.details["witness"]
    for t in F1.grid:
        A = F1(t)
        scale = (1 + 2 * A.frobenius()) * (1 + P.frobenius())
        assert (A @ P - P @ A).frobenius() <= 1e-9 * scale


@pytest.mark.parametrize("mode", ["transpose_split", "interval_alternating"])
def test_torus_probe_reports_class_jump(mode):
    F1, F2 = torus_counterexample_pair(mode)
    v = local_iso_probe(F1, F2)
    assert v.pointwise_iso
    assert v.locally_iso == "No"
    assert v.diagnosis == "class-jump"
    C1, C2 = v.details["limit_actions"]
    gap = min((C1 - C2).frobenius(), (C1 + C2).frobenius())
    assert gap > 0.5


def test_torus_self_probe_continues():
    F1, _ = torus_counterexample_pair()
    v = local_iso_probe(F1, F1)
    assert v.locally_iso == "Yes"
    assert v.diagnosis == "continuation-success"
    g = v.details["witness"]
    for t in F1.grid:
        A = F1(t)
        assert (act(A, g) - A).frobenius() <= 1e-10 * (1 + A.frobenius())


def test_torus_witness_classes_follow_the_gluing():
    F1, F2 = torus_counterexample_pair("transpose_split")
    trace = pointwise_iso_sweep(F1, F2)
    swap = repr(
        IntMat4([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]).rows()
    )
    ident = repr(IntMat4.identity().rows())
    for s in trace.samples:
        assert s.witness_class == (swap if s.t > 0 else ident)


# ---------------------------------------------------------------------------
# reparametrized pull-backs
# ---------------------------------------------------------------------------


def test_pullback_degree_separates_square_from_cube():
    base = hopf_jumping_family()
    Fa = pullback_family(base, Jet.monomial(2), "square-pull")
    Fb = pullback_family(base, Jet.monomial(3), "cube-pull")
    v = local_equivalence_probe(Fa, Fb)
    assert v.locally_equivalent == "No"
    assert v.details["covering_degrees"] == [2, 3]
    assert v.pointwise_iso  # fiberwise the surfaces match for t != 0 too


def test_pullback_same_degree_is_equivalent():
    base = hopf_jumping_family()
    Fa = pullback_family(base, Jet.monomial(2), "square-pull")
    g = Jet([0, 0, 1.0, 0.5])  # z^2 + z^3/2: still degree 2
    Fb = pullback_family(base, g, "square-ish-pull")
    v = local_equivalence_probe(Fa, Fb)
    assert v.locally_equivalent == "Yes"
    assert v.details["covering_degrees"] == [2, 2]


def test_pullback_keeps_base_model_and_marks_provenance():
    base = hopf_jumping_family()
    Fa = pullback_family(base, Jet.monomial(2), "square-pull")
    assert Fa.model is ModelKind.HOPF
    assert Fa.pullback is not None
    assert Fa.pullback.base_label == base.label
    assert (Fa(0.1) - base(0.01)).frobenius() <= 1e-12


# ---------------------------------------------------------------------------
# transpose lift and rigidity sweep
# ---------------------------------------------------------------------------


def test_transpose_lift_families_stay_apart():
    rep = transpose_lift_check()
    assert rep.passed
    assert rep.set_distance >= 1 - 1e-9
    assert rep.set_distance == pytest.approx(1.0)


def test_fischer_grauert_check_cases():
    const = constant_family(Mat2.scalar(2), ModelKind.HOPF)
    jump = hopf_jumping_family()
    assert fischer_grauert_check(const) is True
    assert fischer_grauert_check(jump) is True      # vacuous: fibers differ
    assert fischer_grauert_check(jump, same_surface_fn=lambda A, B: True) is False


# ---------------------------------------------------------------------------
# model summaries
# ---------------------------------------------------------------------------


def test_model_summaries():
    hopf = model_summary(ModelKind.HOPF)
    assert [s.name for s in hopf.strata] == ["K4", "K2"]
    assert hopf.h0_profile == {"K4": 4, "K2": 2}
    assert not hopf.foliation_trivial

    torus = model_summary(ModelKind.TORUS)
    assert torus.foliation_trivial
    assert torus.h0_profile == {"M": 4}

    f2 = model_summary(ModelKind.HIRZEBRUCH_F2)
    assert [s.dim for s in f2.strata] == [1, 0]
    assert not f2.foliation_trivial
    assert not f2.h0_constant


def test_model_summary_couples_foliation_to_h0():
    from modulilab.families import ModelSummary, StratumInfo

    with pytest.raises(ModelInconsistencyError):
        ModelSummary(
            ModelKind.TORUS,
            (StratumInfo("M", 4, "x"),),
            {"M": 4},
            False,  # constant h0 but claims a nontrivial foliation
        )


def test_dimension_jump_is_upper_semicontinuous():
    jump = hopf_jumping_family()
    dims = {t: dim_kuranishi_at(jump(t)) for t in jump.grid}
    assert dims[0.0] == 4
    for t, d in dims.items():
        assert d <= dims[0.0]
        if t != 0.0:
            assert d == 2
