"""Hopf-surface moduli chart for quotients of C^2 - {0} near 2*Id.

The chart K is the set of 2x2 matrices A with |tr A| > 3 and |disc A| < 1,
disc A = (tr A)^2 - 4 det A.  Two chart points give the same Hopf surface
exactly when the matrices are GL2(C)-conjugate; the invariant map
phi(A) = (tr A, disc A) separates conjugacy classes except that the
scalar matrix with a given phi-value is its own class.  The chart is
stratified by the dimension of the fiberwise deformation space: 4 on the
scalar locus, 2 off it, matching h^0 = 4 resp. 2 holomorphic fields.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._scalars import scalar_abs, to_complex
from .errors import MembershipError, ModelInconsistencyError
from .mat2 import DEFAULT_TOL, Mat2, _rref, _snap, discriminant, solve_conjugacy, trace


@dataclass(frozen=True)
class HopfPoint:
    """A chart member; construction validates membership."""

    matrix: Mat2

    def __post_init__(self):
        if not in_kuranishi(self.matrix):
            raise MembershipError(
                f"matrix is outside the Hopf chart (need |tr| > 3, |disc| < 1): {self.matrix!r}"
            )


def _as_mat(A) -> Mat2:
    return A.matrix if isinstance(A, HopfPoint) else A


def in_kuranishi(A) -> bool:
    """Strict membership test |tr A| > 3 and |disc A| < 1."""
    M = _as_mat(A)
    return scalar_abs(trace(M)) > 3.0 and scalar_abs(discriminant(M)) < 1.0


def _require_member(A) -> Mat2:
    M = _as_mat(A)
    if not in_kuranishi(M):
        raise MembershipError(f"matrix is outside the Hopf chart: {M!r}")
    return M


def phi(A):
    """Invariant map (tr A, disc A); constant exactly on the leaves."""
    M = _require_member(A)
    return (trace(M), discriminant(M))


def is_scalar(A, tol: float = DEFAULT_TOL) -> bool:
    """Scalar test, relative to the Frobenius norm of the matrix."""
    M = _as_mat(A)
    s = M.frobenius()
    return (
        scalar_abs(M.a12) <= tol * s
        and scalar_abs(M.a21) <= tol * s
        and scalar_abs(M.a11 - M.a22) <= tol * s
    )


def stratum(A, tol: float = DEFAULT_TOL) -> str:
    """Stratum label by fiberwise deformation dimension: K4 or K2."""
    M = _require_member(A)
    return "K4" if is_scalar(M, tol) else "K2"


def dim_kuranishi_at(A, tol: float = DEFAULT_TOL) -> int:
    return 4 if stratum(A, tol) == "K4" else 2


def h0(A, tol: float = DEFAULT_TOL) -> int:
    """Dimension of global holomorphic vector fields on the quotient."""
    M = _require_member(A)
    return 4 if is_scalar(M, tol) else 2


def same_hopf_surface(A, B, tol: float = DEFAULT_TOL) -> bool:
    """True iff the two chart points give biholomorphic quotients.

    Rule: phi values match (within tol, relative) and NOT exactly one of
    the two matrices is scalar.  Cross-checked against invertible-
    intertwiner existence in the test suite.
    """
    MA, MB = _require_member(A), _require_member(B)
    ta, da = trace(MA), discriminant(MA)
    tb, db = trace(MB), discriminant(MB)
    scale = 1.0 + max(scalar_abs(ta), scalar_abs(tb), scalar_abs(da), scalar_abs(db))
    phi_match = (
        scalar_abs(ta - tb) <= tol * scale and scalar_abs(da - db) <= tol * scale
    )
    if not phi_match:
        return False
    return is_scalar(MA, tol) == is_scalar(MB, tol)


def conjugate_by_solver(A, B, tol: float = DEFAULT_TOL) -> bool:
    """GL2-conjugacy via the intertwiner solver (det-1 slice nonempty)."""
    return not solve_conjugacy(_as_mat(A), _as_mat(B), tol).det1.empty


@dataclass(frozen=True)
class HopfLeaf:
    """Leaf data of the phi-fibration through a chart point."""

    phi_value: tuple
    contains_scalar_exception: bool
    leaf_dim: int
    tangent: tuple


def _phi_jacobian(M: Mat2, h: float = 1e-3) -> np.ndarray:
    """Numeric 2x4 Jacobian of phi by central differences.

    phi is polynomial of degree 2 in the entries, so real-step central
    differences are exact up to roundoff.
    """
    basis = [Mat2(1, 0, 0, 0), Mat2(0, 1, 0, 0), Mat2(0, 0, 1, 0), Mat2(0, 0, 0, 1)]
    Mf = Mat2(*(to_complex(e) for e in M.entries))
    J = np.zeros((2, 4), dtype=complex)
    for j, E in enumerate(basis):
        Ap = Mf + h * E
        Am = Mf + (-h) * E
        J[0, j] = (to_complex(trace(Ap)) - to_complex(trace(Am))) / (2 * h)
        J[1, j] = (to_complex(discriminant(Ap)) - to_complex(discriminant(Am))) / (2 * h)
    return J


def leaf_of(A, tol: float = DEFAULT_TOL) -> HopfLeaf:
    """Leaf of the isomorphism foliation through A.

    Scalar points are 0-dimensional leaves (the exceptional points of
    their phi-fiber); non-scalar points sit on 2-dimensional leaves and
    carry the tangent 2-plane ker d(phi), computed from the numeric
    Jacobian and verified to have rank 2.
    """
    M = _require_member(A)
    value = (trace(M), discriminant(M))
    scalar_here = is_scalar(M, tol)
    contains_scalar = scalar_abs(value[1]) <= tol * (1.0 + scalar_abs(value[0]))
    if scalar_here:
        return HopfLeaf(value, True, 0, ())
    J = _phi_jacobian(M)
    u, s, vh = np.linalg.svd(J)
    if s[1] <= 1e-8 * max(1.0, s[0]):
        raise ModelInconsistencyError(
            f"phi Jacobian rank < 2 at a non-scalar chart point: {M!r}"
        )
    # rows of vh span the row space of V^H; the right null space of J is
    # spanned by the conjugates of its trailing rows
    null_rows = [list(np.conj(vh[i])) for i in range(2, 4)]
    red, _ = _rref(null_rows, ztol=1e-10)
    red = [[_snap(complex(x)) for x in r] for r in red]
    tangent = tuple(Mat2.from_vec(v) for v in red)
    return HopfLeaf(value, contains_scalar, 2, tangent)


# ---------------------------------------------------------------------------
# seeded sampling helpers (used by experiments and the test suite)
# ---------------------------------------------------------------------------


def sample_kuranishi_point(rng: np.random.Generator, scalar_probability: float = 0.0) -> Mat2:
    """Random chart member: random (trace, disc) inside the chart,
    realized by a random matrix with those invariants."""
    if rng.random() < scalar_probability:
        lam = _sample_scalar_eigenvalue(rng)
        return Mat2.scalar(lam)
    sigma, delta = _sample_invariants(rng)
    return matrix_with_invariants(rng, sigma, delta)


def _sample_scalar_eigenvalue(rng) -> complex:
    # scalar lam*Id lies in the chart iff |lam| > 3/2
    r = 2.0 + rng.random()  # |lam| in (2, 3)
    th = 2 * np.pi * rng.random()
    return complex(r * np.cos(th), r * np.sin(th))


def _sample_invariants(rng):
    r = 3.2 + 1.6 * rng.random()  # |sigma| in (3.2, 4.8)
    th = 2 * np.pi * rng.random()
    sigma = complex(r * np.cos(th), r * np.sin(th))
    rd = 0.9 * rng.random()
    thd = 2 * np.pi * rng.random()
    delta = complex(rd * np.cos(thd), rd * np.sin(thd))
    return sigma, delta


def matrix_with_invariants(rng, sigma, delta) -> Mat2:
    """Random non-scalar matrix with tr = sigma, disc = delta.

    Entries: a free, b free nonzero, d = sigma - a, c chosen so that
    (sigma - 2a)^2 + 4 b c = delta.
    """
    a = complex(rng.normal(), rng.normal())
    b = 0.0
    while abs(b) < 0.3:
        b = complex(rng.normal(), rng.normal())
    c = (delta - (sigma - 2 * a) ** 2) / (4 * b)
    return Mat2(a, b, c, sigma - a)
