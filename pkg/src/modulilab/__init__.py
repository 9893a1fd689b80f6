"""Desk-scale laboratory for three explicit moduli models.

Three families of compact complex surfaces/tori with completely explicit
parameter spaces:

* a Hopf-surface chart of 2x2 matrices, stratified by the scalar locus,
  where the invariant map (trace, discriminant) cuts out the leaves;
* 2-dimensional complex tori with lattice-witness searches over SL4(Z);
* jet-level covering maps z -> z^n with a normal form and a verdict on
  equivalence of pull-back families.

The package favours small frozen dataclasses, plain functions, and
explicit tolerances; every randomized experiment is reproducible from a
single seed.
"""

from ._scalars import GaussianRational
from .errors import (
    MembershipError,
    ModelInconsistencyError,
    ModuliLabError,
    SingularMatrixError,
)
from .families import (
    FamilyPath,
    ModelKind,
    ModelSummary,
    TransposeLiftReport,
    Verdict,
    WitnessSample,
    WitnessTrace,
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
from .hopf import (
    HopfLeaf,
    HopfPoint,
    dim_kuranishi_at,
    h0,
    in_kuranishi,
    leaf_of,
    phi,
    same_hopf_surface,
    sample_kuranishi_point,
    stratum,
)
from .jets import (
    CoveringNormalForm,
    Jet,
    compose,
    density_gap,
    normalize_covering,
    type2_verdict,
    vanishing_order,
)
from .mat2 import (
    DEFAULT_TOL,
    ConjugacySolution,
    Det1Branch,
    Det1Family,
    Mat2,
    discriminant,
    min_norm_conjugator,
    solve_conjugacy,
    trace,
)
from .torus import (
    GAMMA_SWAP,
    FlatFunctionParams,
    IntMat4,
    TorusPoint,
    act,
    automorphisms,
    equivalent,
    flat_b,
    flat_c,
    flatness_defect,
    genericity_certificate,
    in_moduli,
    induced_linear_part,
    omega1,
    omega2,
    search_witnesses,
    zero_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "ConjugacySolution",
    "CoveringNormalForm",
    "DEFAULT_TOL",
    "Det1Branch",
    "Det1Family",
    "FamilyPath",
    "FlatFunctionParams",
    "GAMMA_SWAP",
    "GaussianRational",
    "HopfLeaf",
    "HopfPoint",
    "IntMat4",
    "Jet",
    "Mat2",
    "MembershipError",
    "ModelInconsistencyError",
    "ModelKind",
    "ModelSummary",
    "ModuliLabError",
    "SingularMatrixError",
    "TorusPoint",
    "TransposeLiftReport",
    "Verdict",
    "WitnessSample",
    "WitnessTrace",
    "act",
    "automorphisms",
    "compose",
    "constant_family",
    "density_gap",
    "dim_kuranishi_at",
    "discriminant",
    "equivalent",
    "fischer_grauert_check",
    "flat_b",
    "flat_c",
    "flatness_defect",
    "genericity_certificate",
    "h0",
    "hopf_counterexample_pair",
    "hopf_jumping_family",
    "in_kuranishi",
    "in_moduli",
    "induced_linear_part",
    "leaf_of",
    "local_equivalence_probe",
    "local_iso_probe",
    "min_norm_conjugator",
    "model_summary",
    "normalize_covering",
    "omega1",
    "omega2",
    "phi",
    "pointwise_iso_sweep",
    "pullback_family",
    "same_hopf_surface",
    "sample_kuranishi_point",
    "search_witnesses",
    "solve_conjugacy",
    "stratum",
    "torus_counterexample_pair",
    "trace",
    "transpose_lift_check",
    "type2_verdict",
    "vanishing_order",
    "zero_sequence",
]
