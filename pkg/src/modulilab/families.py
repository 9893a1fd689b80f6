"""Deformation families as parameter paths into a moduli model.

A FamilyPath is a map t -> moduli point together with a sampled grid.
The lab asks three graded questions about a pair of families:

  * pointwise: is there a witness (conjugator / lattice isomorphism)
    fiber by fiber?  (pointwise_iso_sweep)
  * locally at 0: do the fiberwise witnesses assemble into one witness
    valid on a neighborhood?  (local_iso_probe)
  * locally at 0 up to reparametrization of the base?
    (local_equivalence_probe)

Verdicts are three-valued {Yes, No, Unknown}: bounded searches and
finite sampling can certify Yes (an explicit continued witness) and, in
closed-form cases, No (witness norms forced to diverge, or witnesses
locked in discrete classes that do not merge), but otherwise must say
Unknown.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .errors import MembershipError, ModelInconsistencyError
from .jets import Jet, normalize_covering, type2_verdict
from .mat2 import DEFAULT_TOL, Mat2, solve_conjugacy, trace
from . import hopf as hopf_mod
from . import torus as torus_mod
from .torus import FlatFunctionParams, IntMat4, act, induced_linear_part

DYADIC_SEQ = tuple(2.0 ** (-k) for k in range(1, 13))
SWEEP_GRID_SIZE = 41


class ModelKind(Enum):
    HOPF = "hopf"
    TORUS = "torus"
    HIRZEBRUCH_F2 = "hirzebruch-f2"


def _hopf_surface_exists(A: Mat2) -> bool:
    """A defines a Hopf surface iff it is a contraction inverse:
    both eigenvalues strictly outside the unit circle."""
    ev = np.linalg.eigvals(A.to_array())
    return bool(np.all(np.abs(ev) > 1.0))


def _is_member(model: ModelKind, point) -> bool:
    if model is ModelKind.HOPF:
        return _hopf_surface_exists(point)
    if model is ModelKind.TORUS:
        return torus_mod.in_moduli(point)
    return abs(complex(point)) < 1.0  # F2 base: unit disk


@dataclass(frozen=True)
class PullbackData:
    """Marks a family as base pulled back along a reparametrizing germ."""

    base_label: str
    reparam: Jet


@dataclass(frozen=True)
class FamilyPath:
    """One-parameter path t -> moduli point with its sampled grid."""

    model: ModelKind
    evaluator: Callable
    domain_halfwidth: float
    label: str
    closed_form: str
    grid: tuple
    pullback: Optional[PullbackData] = None

    def __post_init__(self):
        for t in self.grid:
            if abs(float(t)) > self.domain_halfwidth + 1e-15:
                raise MembershipError(
                    f"grid point {t} outside domain of {self.label}"
                )
            if not _is_member(self.model, self.evaluator(t)):
                raise MembershipError(
                    f"{self.label}({t}) violates the {self.model.value} "
                    "membership predicate"
                )

    def __call__(self, t):
        return self.evaluator(t)


# ---------------------------------------------------------------------------
# stock families
# ---------------------------------------------------------------------------


def hopf_counterexample_pair(halfwidth: float = 0.5):
    """Pointwise-isomorphic Hopf family pair that is not locally so.

    F1(t) = [[2+t, t], [0, 2+t]],  F2(t) = [[2+t, t^3], [0, 2+t]].
    Fiberwise conjugate for every t, but every det-1 conjugator family
    has norm growing like 1/|t|.
    """
    grid = (-0.5, -0.1, -0.01, 0.0, 0.01, 0.1, 0.5)

    def f1(t):
        return Mat2(2 + t, t, 0, 2 + t)

    def f2(t):
        return Mat2(2 + t, t * t * t, 0, 2 + t)

    F1 = FamilyPath(
        ModelKind.HOPF, f1, halfwidth, "hopf-shear", "[[2+t, t], [0, 2+t]]", grid
    )
    F2 = FamilyPath(
        ModelKind.HOPF, f2, halfwidth, "hopf-shear-cubed",
        "[[2+t, t^3], [0, 2+t]]", grid,
    )
    return F1, F2


def hopf_jumping_family(halfwidth: float = 0.5) -> FamilyPath:
    """A(t) = [[2, t], [0, 2]]: scalar fiber at 0, one fixed non-scalar
    surface for every t != 0 (the fiber type jumps at the origin)."""
    grid = (-0.5, -0.25, -0.1, 0.0, 0.1, 0.25, 0.5)
    return FamilyPath(
        ModelKind.HOPF,
        lambda t: Mat2(2, t, 0, 2),
        halfwidth,
        "hopf-jumping",
        "[[2, t], [0, 2]]",
        grid,
    )


def constant_family(point, model: ModelKind, label: str = "constant") -> FamilyPath:
    grid = (-0.5, -0.25, 0.0, 0.25, 0.5)
    return FamilyPath(model, lambda t: point, 0.5, label, "constant", grid)


def evaluate_germ(germ: Jet, t) -> complex:
    """Numeric value of a scalar jet at t (plain polynomial evaluation)."""
    val = 0j
    for c in reversed(germ.coeffs):
        val = val * t + complex(c)
    return val


def pullback_family(base: FamilyPath, germ: Jet, label: str) -> FamilyPath:
    """base composed with a reparametrizing germ s = germ(t), germ(0) = 0."""
    if abs(complex(germ.constant_term())) > 1e-12:
        raise ValueError("reparametrizing germ must fix 0")

    def ev(t):
        s = evaluate_germ(germ, t)
        if abs(s.imag) < 1e-15:
            s = s.real
        return base.evaluator(s)

    # grid chosen so the germ image stays inside the base domain
    grid = tuple(x / 2 for x in base.grid)
    return FamilyPath(
        base.model,
        ev,
        base.domain_halfwidth,
        label,
        f"{base.closed_form} after t -> germ(t)",
        grid,
        pullback=PullbackData(base.label, germ),
    )


def torus_counterexample_pair(
    mode: str = "transpose_split",
    params: Optional[FlatFunctionParams] = None,
):
    """Torus family pair glued from a period matrix and its transpose.

    transpose_split: Omega2 = transpose(Omega1) for t >= 0, Omega1 for
    t < 0 (flat coefficients vanish to infinite order at the seam 0).
    interval_alternating: the transpose is applied on alternating
    intervals of the zero sequence t_n = e^-n accumulating at 0.
    """
    if mode == "transpose_split":
        p = params or FlatFunctionParams(variant=1)
        grid = (-0.5, -0.4, -0.3, -0.25, 0.25, 0.3, 0.4, 0.5)
    elif mode == "interval_alternating":
        p = params or FlatFunctionParams(variant=2)
        if p.variant != 2:
            raise ValueError("interval_alternating needs variant-2 coefficients")
        mids = [math.exp(-(k + 0.5)) for k in range(3)]
        grid = tuple(sorted([-x for x in mids] + mids))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    F1 = FamilyPath(
        ModelKind.TORUS,
        lambda t: torus_mod.omega1(t, p),
        0.7,
        f"torus-base[{mode}]",
        "[[i+t, b(t)], [c(t), i+t]]",
        grid,
    )
    F2 = FamilyPath(
        ModelKind.TORUS,
        lambda t: torus_mod.omega2(t, mode, p),
        0.7,
        f"torus-glued[{mode}]",
        "transpose on alternating side/intervals",
        grid,
    )
    return F1, F2


# ---------------------------------------------------------------------------
# witness traces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WitnessSample:
    t: float
    witness: object  # Mat2 | IntMat4 | None
    witness_class: Optional[str]
    witness_norm: Optional[float]
    residual: Optional[float]


@dataclass(frozen=True)
class WitnessTrace:
    model: ModelKind
    family1: str
    family2: str
    samples: tuple

    @property
    def all_found(self) -> bool:
        return all(s.witness is not None for s in self.samples)


def _hopf_witness(A: Mat2, B: Mat2, tol: float) -> WitnessSample:
    sol = solve_conjugacy(A, B, tol)
    got = sol.min_norm_det1()
    if got is None:
        return WitnessSample(0.0, None, None, None, None)
    P, norm, label = got
    resid = (A @ P - P @ B).frobenius()
    return WitnessSample(0.0, P, label, norm, resid)


def _torus_witness(A: Mat2, B: Mat2, bound: int, tol: float) -> WitnessSample:
    g = torus_mod.equivalent(A, B, bound, tol)
    if g is None:
        return WitnessSample(0.0, None, None, None, None)
    resid = (act(A, g) - B).frobenius()
    cls = repr(g.sign_canonical().rows())
    return WitnessSample(0.0, g, cls, g.frobenius(), resid)


def pointwise_iso_sweep(
    F1: FamilyPath,
    F2: FamilyPath,
    grid=None,
    bound: int = 2,
    tol: float = DEFAULT_TOL,
) -> WitnessTrace:
    """Fiber-by-fiber witness search along a grid.

    Hopf: minimal-norm det-1 conjugator (complete solver; a missing
    witness is conclusive).  Torus: bounded lattice-isomorphism search
    (a missing witness is only bounded-search exhaustion).
    """
    if F1.model is not F2.model:
        raise ValueError("families live in different models")
    ts = F1.grid if grid is None else tuple(grid)
    out = []
    for t in ts:
        A, B = F1(t), F2(t)
        if F1.model is ModelKind.HOPF:
            s = _hopf_witness(A, B, tol)
        elif F1.model is ModelKind.TORUS:
            s = _torus_witness(A, B, bound, tol)
        else:
            raise ValueError("sweeps are defined for Hopf and torus models")
        out.append(WitnessSample(float(t), s.witness, s.witness_class,
                                 s.witness_norm, s.residual))
    return WitnessTrace(F1.model, F1.label, F2.label, tuple(out))


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    pointwise_iso: bool
    locally_iso: str  # Yes | No | Unknown
    locally_equivalent: str  # Yes | No | Unknown
    diagnosis: str  # divergence | class-jump | continuation-success | search-exhausted
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.locally_iso not in ("Yes", "No", "Unknown"):
            raise ValueError(f"bad locally_iso {self.locally_iso!r}")
        if self.locally_equivalent not in ("Yes", "No", "Unknown"):
            raise ValueError(f"bad locally_equivalent {self.locally_equivalent!r}")
        if self.locally_iso == "Yes" and not self.pointwise_iso:
            raise ModelInconsistencyError(
                "locally isomorphic verdict without pointwise witnesses"
            )


def _witness_scale(A: Mat2, P, B: Mat2) -> float:
    pn = P.frobenius() if P is not None else 1.0
    return (1.0 + A.frobenius() + B.frobenius()) * (1.0 + pn)


def _hopf_continuation(F1, F2, ts, P, tol) -> bool:
    for t in list(ts) + [0.0]:
        A, B = F1(t), F2(t)
        if (A @ P - P @ B).frobenius() > tol * _witness_scale(A, P, B):
            return False
    return True


def _torus_continuation(F1, F2, ts, g: IntMat4, tol) -> bool:
    for t in list(ts) + [0.0]:
        A, B = F1(t), F2(t)
        if (act(A, g) - B).frobenius() > tol * _witness_scale(A, None, B):
            return False
    return True


def local_iso_probe(
    F1: FamilyPath,
    F2: FamilyPath,
    t_seq=None,
    bound: int = 2,
    tol: float = DEFAULT_TOL,
) -> Verdict:
    """Do fiberwise witnesses assemble into one near t = 0?

    Hopf: fit log(min witness norm) against log|t|; slope <= -0.9 over
    at least 8 samples with final norm >= 10 reports No ("divergence").
    Otherwise a single witness is continued across the whole window
    including 0 ("continuation-success") or the probe gives Unknown.

    Torus: witnesses are discrete group elements; a single class (up to
    sign) continued across the window including 0 gives Yes; two
    classes whose induced linear actions on the limit fiber differ
    (up to sign) give No ("class-jump"); otherwise Unknown.
    """
    if F1.model is not F2.model:
        raise ValueError("families live in different models")
    if F1.model is ModelKind.HOPF:
        ts = tuple(t_seq) if t_seq is not None else DYADIC_SEQ
        return _local_iso_hopf(F1, F2, ts, tol)
    if F1.model is ModelKind.TORUS:
        ts = tuple(t_seq) if t_seq is not None else F1.grid
        return _local_iso_torus(F1, F2, ts, bound, tol)
    raise ValueError("probe is defined for Hopf and torus models")


def _local_iso_hopf(F1, F2, ts, tol) -> Verdict:
    trace_ = pointwise_iso_sweep(F1, F2, grid=ts, tol=tol)
    found = [s for s in trace_.samples if s.witness is not None and s.t != 0.0]
    pointwise = trace_.all_found
    details = {
        "witness_norms": [(s.t, s.witness_norm) for s in trace_.samples],
    }
    if not pointwise:
        return Verdict(False, "No", "Unknown", "search-exhausted", details)
    norms = np.array([s.witness_norm for s in found])
    tsabs = np.array([abs(s.t) for s in found])
    if len(found) >= 8 and np.all(norms > 0):
        slope = float(np.polyfit(np.log(tsabs), np.log(norms), 1)[0])
        details["loglog_slope"] = slope
        smallest = norms[int(np.argmin(tsabs))]
        if slope <= -0.9 and smallest >= 10.0:
            return Verdict(True, "No", "Unknown", "divergence", details)
    # continuation attempt with the witness at the largest |t|
    ref = max(found, key=lambda s: abs(s.t))
    if _hopf_continuation(F1, F2, [s.t for s in trace_.samples], ref.witness, tol):
        details["witness"] = ref.witness
        return Verdict(True, "Yes", "Unknown", "continuation-success", details)
    return Verdict(pointwise, "Unknown", "Unknown", "search-exhausted", details)


def _local_iso_torus(F1, F2, ts, bound, tol) -> Verdict:
    trace_ = pointwise_iso_sweep(F1, F2, grid=ts, bound=bound, tol=tol)
    pointwise = trace_.all_found
    details = {
        "witness_classes": [(s.t, s.witness_class) for s in trace_.samples],
    }
    if not pointwise:
        return Verdict(False, "Unknown", "Unknown", "search-exhausted", details)
    by_closeness = sorted(trace_.samples, key=lambda s: abs(s.t))
    classes = []
    for s in by_closeness:
        g = s.witness.sign_canonical()
        if g not in classes:
            classes.append(g)
    if len(classes) == 1:
        g = classes[0]
        if _torus_continuation(F1, F2, [s.t for s in trace_.samples], g, tol):
            details["witness"] = g
            return Verdict(True, "Yes", "Unknown", "continuation-success", details)
        return Verdict(True, "Unknown", "Unknown", "search-exhausted", details)
    # two nearest distinct classes: compare induced actions on the limit fiber
    g1, g2 = classes[0], classes[1]
    B0 = F2(0.0)
    C1 = induced_linear_part(g1, B0)
    C2 = induced_linear_part(g2, B0)
    gap = min((C1 - C2).frobenius(), (C1 + C2).frobenius())
    details["limit_actions"] = [C1, C2]
    if gap > tol * (1.0 + C1.frobenius() + C2.frobenius()):
        return Verdict(True, "No", "Unknown", "class-jump", details)
    return Verdict(True, "Unknown", "Unknown", "search-exhausted", details)


def _traces_separate(F: FamilyPath, ts, tol) -> bool:
    """Fiber traces pairwise distinct along the grid: the trace pins t."""
    vals = [complex(trace(F(t))) for t in ts]
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            if abs(vals[i] - vals[j]) <= tol * (1 + abs(vals[i])):
                return False
    return True


def local_equivalence_probe(
    F1: FamilyPath,
    F2: FamilyPath,
    t_seq=None,
    bound: int = 2,
    tol: float = DEFAULT_TOL,
    reparam_degree_bound: int = 6,
) -> Verdict:
    """Local isomorphism up to reparametrizing the base.

    Pairs tagged as pull-backs of one base family are compared by
    covering degree (normal form of the reparametrizing germ): equal
    degrees are equivalent, distinct degrees are not.  Otherwise, if
    fiber traces separate parameters along the grid, a reparametrization
    cannot move t, so the question reduces to plain local isomorphism
    and that verdict is copied.
    """
    if (
        F1.pullback is not None
        and F2.pullback is not None
        and F1.pullback.base_label == F2.pullback.base_label
    ):
        n = normalize_covering(F1.pullback.reparam).degree
        m = normalize_covering(F2.pullback.reparam).degree
        if max(n, m) > reparam_degree_bound:
            base = local_iso_probe(F1, F2, t_seq, bound, tol)
            return Verdict(base.pointwise_iso, base.locally_iso, "Unknown",
                           "search-exhausted", dict(base.details))
        word = type2_verdict(n, m)
        iso = local_iso_probe(F1, F2, t_seq, bound, tol)
        details = dict(iso.details)
        details["covering_degrees"] = [n, m]
        if word == "Equivalent":
            return Verdict(iso.pointwise_iso, iso.locally_iso, "Yes",
                           "continuation-success", details)
        return Verdict(iso.pointwise_iso, iso.locally_iso, "No",
                       "class-jump", details)
    if F1.model is ModelKind.HOPF:
        ts = tuple(t_seq) if t_seq is not None else F1.grid
        if _traces_separate(F1, [t for t in ts if t != 0.0], tol):
            iso = local_iso_probe(F1, F2, None, bound, tol)
            details = dict(iso.details)
            details["trace_separation"] = True
            return Verdict(iso.pointwise_iso, iso.locally_iso, iso.locally_iso,
                           iso.diagnosis, details)
    iso = local_iso_probe(F1, F2, t_seq, bound, tol)
    return Verdict(iso.pointwise_iso, iso.locally_iso, "Unknown",
                   iso.diagnosis, dict(iso.details))


# ---------------------------------------------------------------------------
# transpose lift check
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TransposeLiftReport:
    t_values: tuple
    family1_shape: str
    family2_shape: str
    set_distance: float
    passed: bool


def _check_antidiag_branches(fam) -> None:
    """Conjugators to the transpose of a shear: [[alpha, ±i], [±i, 0]]."""
    if fam.kind != "affine" or len(fam.branches) != 2 or fam.free_parameters != 1:
        raise ModelInconsistencyError(
            f"expected two affine branches with one free direction, got {fam.kind}"
        )
    leads = []
    for br in fam.branches:
        L = br.at(coeffs=(0,))
        arr = L.to_array()
        if not (
            abs(arr[0, 0]) < 1e-12
            and abs(arr[1, 1]) < 1e-12
            and abs(arr[0, 1] - arr[1, 0]) < 1e-12
            and abs(abs(arr[0, 1]) - 1.0) < 1e-12
            and abs(arr[0, 1].real) < 1e-12
        ):
            raise ModelInconsistencyError(f"unexpected branch lead {arr}")
        F = br.free[0].to_array()
        if not (abs(F[0, 0] - 1) < 1e-12 and abs(F[0, 1]) < 1e-12
                and abs(F[1, 0]) < 1e-12 and abs(F[1, 1]) < 1e-12):
            raise ModelInconsistencyError(f"unexpected free direction {F}")
        leads.append(arr[0, 1])
    if abs(leads[0] + leads[1]) > 1e-12:
        raise ModelInconsistencyError("branch signs are not opposite")


def _check_diag_branch(fam) -> None:
    """Self-conjugators of a generic diagonal: diag(alpha, 1/alpha)."""
    if fam.kind != "hyperbolic" or fam.free_parameters != 1:
        raise ModelInconsistencyError(
            f"expected a hyperbolic branch (alpha only), got {fam.kind}"
        )
    br = fam.branches[0]
    if br.free:
        raise ModelInconsistencyError("unexpected radical directions")
    Ep, Em = br.lead.to_array(), br.tail.to_array()
    diags = {
        (round(abs(Ep[0, 0]), 9), round(abs(Ep[1, 1]), 9)),
        (round(abs(Em[0, 0]), 9), round(abs(Em[1, 1]), 9)),
    }
    offs = max(abs(Ep[0, 1]), abs(Ep[1, 0]), abs(Em[0, 1]), abs(Em[1, 0]))
    if offs > 1e-12 or diags != {(1.0, 0.0), (0.0, 1.0)}:
        raise ModelInconsistencyError("unexpected diagonal branch pair")


def transpose_lift_check(t_grid=None, tol: float = DEFAULT_TOL) -> TransposeLiftReport:
    """Compare self/transpose conjugator families of two shear paths.

    For A(t) = [[2, t], [0, 2]] the det-1 conjugators onto the transpose
    form {[[alpha, s i], [s i, 0]] : s = ±1}; for A(t) = diag(2, 2+t)
    the self-conjugators form {diag(alpha, 1/alpha)}.  The entrywise
    sup-distance between the two sets is >= 1 (the corner entries ±i
    against 0), so no member of the second family approximates a member
    of the first: the transposition does not come from the family that
    stays diagonal.
    """
    ts = tuple(t_grid) if t_grid is not None else (
        Fraction(1, 2), Fraction(1, 4), Fraction(1, 10))
    if not ts:
        raise ValueError("need at least one grid point")
    fam1 = fam2 = None
    for t in ts:
        A = Mat2(2, t, 0, 2)
        fam1 = solve_conjugacy(A, A.transpose(), tol).det1
        _check_antidiag_branches(fam1)
        D = Mat2.diag(2, 2 + t)
        fam2 = solve_conjugacy(D, D, tol).det1
        _check_diag_branch(fam2)
    # set distance: inf over both free parameters of the entrywise sup-gap
    alphas = [x * p for x in (0.25, 0.5, 1.0, 2.0, 4.0) for p in (1, -1, 1j, -1j)]
    best = math.inf
    for a in alphas:
        for br in fam1.branches:
            M1 = br.at(coeffs=(a,)).to_array()
            for b in alphas:
                M2 = fam2.branches[0].at(alpha=b).to_array()
                best = min(best, float(np.max(np.abs(M1 - M2))))
    passed = best >= 1.0 - tol
    return TransposeLiftReport(
        tuple(float(t) for t in ts),
        "[[alpha, ±i], [±i, 0]]",
        "diag(alpha, 1/alpha)",
        best,
        passed,
    )


# ---------------------------------------------------------------------------
# rigidity of the scalar fiber along paths
# ---------------------------------------------------------------------------


def fischer_grauert_check(
    F: FamilyPath,
    grid=None,
    tol: float = DEFAULT_TOL,
    same_surface_fn=None,
) -> bool:
    """All fibers equal to the base fiber forces a constant path.

    Sweeps same-surface against F(0); if every fiber matches, the path
    itself must be constant within tol, and that is what is returned.
    Paths with at least one differing fiber satisfy the implication
    vacuously.  A deliberately wrong same-surface oracle can be
    injected to exercise the detector.
    """
    same = same_surface_fn or hopf_mod.same_hopf_surface
    ts = tuple(grid) if grid is not None else F.grid
    base = F(0.0)
    if not all(same(F(t), base) for t in ts):
        return True
    scale = 1.0 + base.frobenius()
    return all((F(t) - base).frobenius() <= tol * scale for t in ts)


# ---------------------------------------------------------------------------
# per-model stratification summaries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StratumInfo:
    name: str
    dim: int
    predicate: str


@dataclass(frozen=True)
class ModelSummary:
    model: ModelKind
    strata: tuple
    h0_profile: object  # dict name -> int, or the flag "nonconstant"
    foliation_trivial: bool

    @property
    def h0_constant(self) -> bool:
        if isinstance(self.h0_profile, str):
            return False
        return len(set(self.h0_profile.values())) == 1

    def __post_init__(self):
        if self.foliation_trivial != self.h0_constant:
            raise ModelInconsistencyError(
                f"{self.model.value}: foliation triviality must match "
                "constancy of the automorphism dimension"
            )


def model_summary(model: ModelKind) -> ModelSummary:
    """Stratification of the deformation space and the h0 profile.

    The defining coupling: the leaf foliation is trivial exactly when
    h0 (dimension of fiberwise vector fields) is constant across strata.
    """
    if model is ModelKind.TORUS:
        return ModelSummary(
            model,
            (StratumInfo("M", 4, "det Im(period matrix) > 0"),),
            {"M": 4},
            True,
        )
    if model is ModelKind.HOPF:
        return ModelSummary(
            model,
            (
                StratumInfo("K4", 4, "scalar matrices in the chart"),
                StratumInfo("K2", 2, "non-scalar chart points"),
            ),
            {"K4": 4, "K2": 2},
            False,
        )
    if model is ModelKind.HIRZEBRUCH_F2:
        return ModelSummary(
            model,
            (
                StratumInfo("K1", 1, "origin of the unit disk"),
                StratumInfo("K0", 0, "punctured unit disk"),
            ),
            "nonconstant",
            False,
        )
    raise ValueError(f"unknown model {model!r}")
