"""2x2 complex matrices and the conjugacy equation A P = P B.

The solver returns the full linear intertwiner space {P : A P = P B}
together with a parametric description of its det-1 slice.  Restricted
to the intertwiner space, det is a quadratic form; for 2x2 inputs its
rank is 0 (no invertible intertwiner), 1 (two parallel affine branches),
or 2 (one hyperbolic branch alpha*E+ + alpha^-1*E-).  Rank 3 or 4 occurs
only for A = B = scalar, reported as the full SL2 slice by a flag.

Matrices whose entries are all Gaussian rationals are solved exactly;
anything else runs in complex floating point (SVD nullspace).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ._scalars import (
    GaussianRational,
    abs2,
    conj,
    exactify,
    is_exact,
    rational_sqrt,
    scalar_abs,
    sqrt_scalar,
    to_complex,
)
from .errors import SingularMatrixError

DEFAULT_TOL = 1e-9

_ZERO_SNAP = 1e-12


class Mat2:
    """2x2 matrix with complex or exact Gaussian-rational entries."""

    __slots__ = ("a11", "a12", "a21", "a22")

    def __init__(self, a11, a12, a21, a22):
        object.__setattr__(self, "a11", exactify(a11))
        object.__setattr__(self, "a12", exactify(a12))
        object.__setattr__(self, "a21", exactify(a21))
        object.__setattr__(self, "a22", exactify(a22))

    def __setattr__(self, name, value):
        raise AttributeError("Mat2 is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_rows(cls, rows) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def zero(cls) -> "Mat2":
        return cls(0, 0, 0, 0)

    @classmethod
    def diag(cls, x, y) -> "Mat2":
        return cls(x, 0, 0, y)

    @classmethod
    def scalar(cls, lam) -> "Mat2":
        return cls(lam, 0, 0, lam)

    @classmethod
    def from_vec(cls, v) -> "Mat2":
        """Row-major vector (a11, a12, a21, a22) to matrix."""
        return cls(v[0], v[1], v[2], v[3])

    # -- views ------------------------------------------------------------

    @property
    def entries(self):
        return (self.a11, self.a12, self.a21, self.a22)

    def to_array(self) -> np.ndarray:
        return np.array(
            [[to_complex(self.a11), to_complex(self.a12)],
             [to_complex(self.a21), to_complex(self.a22)]],
            dtype=complex,
        )

    @property
    def is_exact(self) -> bool:
        return all(is_exact(e) for e in self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[2 * i + j]

    def __repr__(self) -> str:
        a, b, c, d = (to_complex(e) for e in self.entries)
        return f"Mat2([[{a}, {b}], [{c}, {d}]])"

    # -- algebra ----------------------------------------------------------

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(*(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2(*(x - y for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> "Mat2":
        return Mat2(*(-x for x in self.entries))

    def __mul__(self, s) -> "Mat2":
        return Mat2(*(x * s for x in self.entries))

    __rmul__ = __mul__

    def __matmul__(self, other: "Mat2") -> "Mat2":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat2):
            return NotImplemented
        return all(x == y for x, y in zip(self.entries, other.entries))

    def __hash__(self):
        return hash(tuple(to_complex(e) for e in self.entries))

    def transpose(self) -> "Mat2":
        return Mat2(self.a11, self.a21, self.a12, self.a22)

    def trace(self):
        return self.a11 + self.a22

    def det(self):
        return self.a11 * self.a22 - self.a12 * self.a21

    def inverse(self) -> "Mat2":
        d = self.det()
        if is_exact(d):
            if not d:
                raise SingularMatrixError("exact singular matrix")
        elif abs(to_complex(d)) == 0.0:
            raise SingularMatrixError("singular matrix")
        return Mat2(self.a22 / d, -self.a12 / d, -self.a21 / d, self.a11 / d)

    def frobenius(self) -> float:
        return math.sqrt(sum(float(abs2(e)) for e in self.entries))

    def allclose(self, other: "Mat2", tol: float = DEFAULT_TOL) -> bool:
        return (self - other).frobenius() <= tol

    def max_entry_abs(self) -> float:
        return max(scalar_abs(e) for e in self.entries)


def trace(A: Mat2):
    """Sum of diagonal entries."""
    return A.trace()


def discriminant(A: Mat2):
    """trace(A)^2 - 4 det(A); zero exactly when the eigenvalues collide."""
    t = A.trace()
    return t * t - 4 * A.det()


def mat_allclose(X: Mat2, Y: Mat2, tol: float = DEFAULT_TOL) -> bool:
    return X.allclose(Y, tol)


# ---------------------------------------------------------------------------
# generic reduced row echelon machinery (runs on exact and float scalars)
# ---------------------------------------------------------------------------


def _rref(rows, ztol: float):
    """Reduced row echelon form; returns (rows, pivot_columns).

    ztol is the zero threshold for float entries (exact entries use exact
    zero tests).  Pivot selection takes the largest magnitude in the
    leftmost usable column, ties to the lowest row index, so the output
    is deterministic.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        if r >= len(m):
            break
        best, best_mag = None, 0.0
        for i in range(r, len(m)):
            x = m[i][col]
            mag = 0.0 if _is_zero_scalar(x, ztol) else scalar_abs(x)
            if mag > best_mag:
                best, best_mag = i, mag
        if best is None:
            continue
        m[r], m[best] = m[best], m[r]
        piv = m[r][col]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and not _is_zero_scalar(m[i][col], ztol):
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    return m[: len(pivots)], pivots


def _is_zero_scalar(x, ztol: float) -> bool:
    if is_exact(x):
        return not x
    return abs(to_complex(x)) <= ztol


def _snap(x, snap_tol: float = _ZERO_SNAP):
    """Clean float noise: zero out tiny real/imag parts.  Exact passes through."""
    if is_exact(x):
        return x
    z = to_complex(x)
    re = 0.0 if abs(z.real) < snap_tol else z.real
    im = 0.0 if abs(z.imag) < snap_tol else z.imag
    return complex(re, im)


def _nullspace_vec4(A: Mat2, B: Mat2, tol: float):
    """Canonical echelon basis of {vec P : A P - P B = 0} (row-major vec).

    Exact inputs go through exact elimination; floats through an SVD with
    singular values cut at tol * (||A||_F + ||B||_F), then the basis is
    brought to the unique reduced echelon form of the nullspace.
    """
    exact = A.is_exact and B.is_exact
    a, b, c, d = A.entries
    e, f, g, h = B.entries
    # rows of M: coefficients of (p11, p12, p21, p22) in the four entries
    # of A P - P B
    rows = [
        [a - e, -g, b, 0],
        [-f, a - h, 0, b],
        [c, 0, d - e, -g],
        [0, c, -f, d - h],
    ]
    if exact:
        red, pivots = _rref(rows, 0.0)
        free = [j for j in range(4) if j not in pivots]
        basis = []
        for fcol in free:
            v = [GaussianRational(0)] * 4
            v[fcol] = GaussianRational(1)
            for prow, pcol in enumerate(pivots):
                v[pcol] = -red[prow][fcol]
            basis.append(v)
        return basis, True
    M = np.array([[to_complex(x) for x in r] for r in rows], dtype=complex)
    cut = tol * (A.frobenius() + B.frobenius())
    _, s, vh = np.linalg.svd(M)
    # right null space of M = conjugates of the trailing rows of V^H
    null_rows = [list(np.conj(vh[i])) for i in range(4) if s[i] <= cut]
    if not null_rows:
        return [], False
    red, _ = _rref(null_rows, ztol=1e-10)
    red = [[_snap(complex(x)) for x in row] for row in red]
    return red, False


# ---------------------------------------------------------------------------
# det-1 slice of the intertwiner space
# ---------------------------------------------------------------------------


def _det_polar(X: Mat2, Y: Mat2):
    """Polar form of det: B(X, Y) with B(X, X) = 2 det X."""
    return (
        X.a11 * Y.a22 + X.a22 * Y.a11 - X.a12 * Y.a21 - X.a21 * Y.a12
    )


@dataclass(frozen=True)
class Det1Branch:
    """One branch of the det-1 conjugator family.

    Points of the branch are

        alpha * lead + (1/alpha) * tail + sum_j coeffs[j] * free[j]

    Affine branches have ``tail = None`` and no alpha dependence.
    """

    lead: Mat2
    tail: Optional[Mat2]
    free: tuple

    def at(self, alpha=1, coeffs=()) -> Mat2:
        if self.tail is None:
            P = self.lead
        else:
            P = alpha * self.lead + (1 / alpha) * self.tail
        for w, F in zip(coeffs, self.free):
            P = P + w * F
        return P


@dataclass(frozen=True)
class Det1Family:
    """Parametric description of {P : A P = P B, det P = 1}.

    kind is one of:
      "empty"      - every intertwiner is singular (or there are none)
      "affine"     - two parallel affine branches (det form has rank 1)
      "hyperbolic" - one branch alpha*E+ + alpha^-1*E-  (rank 2)
      "full"       - A = B = scalar: the whole of SL2, flagged rather
                     than parametrized; branches holds the identity
                     representative.
    """

    kind: str
    branches: tuple
    free_parameters: int

    @property
    def empty(self) -> bool:
        return self.kind == "empty"


@dataclass(frozen=True)
class ConjugacySolution:
    """Output of solve_conjugacy: linear space and det-1 slice."""

    basis: tuple
    det1: Det1Family
    exact: bool

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def empty(self) -> bool:
        return not self.basis

    def min_norm_det1(self):
        """Minimal-Frobenius-norm det-1 conjugator.

        Returns (matrix, norm, branch_label) or None.  Ties across
        branches break to the canonical entry order (modulus, then
        phase), which selects Id over -Id and +i over -i.
        """
        fam = self.det1
        if fam.kind == "empty":
            return None
        if fam.kind == "full":
            return Mat2.identity(), math.sqrt(2.0), "full"
        candidates = []
        if fam.kind == "affine":
            for idx, br in enumerate(fam.branches):
                P = _project_out(br.lead, br.free)
                candidates.append((P, P.frobenius(), f"affine[{idx}]"))
        else:  # hyperbolic
            br = fam.branches[0]
            for P in _hyperbolic_min(br):
                candidates.append((P, P.frobenius(), "hyperbolic"))
        best_norm = min(c[1] for c in candidates)
        near = [c for c in candidates if c[1] <= best_norm * (1 + 1e-12)]
        near.sort(key=lambda c: _entry_sort_key(c[0]))
        return near[0]


def _entry_sort_key(M: Mat2):
    key = []
    for e in M.entries:
        z = to_complex(e)
        mag = abs(z)
        ph = cmath.phase(z) if mag > 0 else 0.0
        if ph < -1e-15:
            ph += 2 * math.pi
        key.append((round(mag, 12), round(ph, 12)))
    return key


def _project_out(lead: Mat2, free) -> Mat2:
    """Least-squares removal of the free-direction components from lead."""
    if not free:
        return lead
    if len(free) == 1 and lead.is_exact and free[0].is_exact:
        D = free[0]
        num = sum(x * conj(y) for x, y in zip(lead.entries, D.entries))
        den = sum(abs2(y) for y in D.entries)
        w = num / GaussianRational(den)
        return lead - w * D
    lv = lead.to_array().reshape(4)
    Dm = np.stack([F.to_array().reshape(4) for F in free], axis=1)
    w, *_ = np.linalg.lstsq(Dm, lv, rcond=None)
    res = lv - Dm @ w
    return Mat2.from_vec([complex(x) for x in res])


def _hyperbolic_min(br: Det1Branch):
    """Both minimizers +-P of the norm on a hyperbolic branch.

    On the branch alpha*E+ + (1/alpha)*E- (free directions already
    projected out) the squared norm is a r^2 + b r^-2 + 2 Re(e^{2 i
    theta} c) with alpha = r e^{i theta}; the minimum is at r =
    (b/a)^(1/4) and the phase aligning c with -|c|.
    """
    Ep, Em = br.lead, br.tail
    if br.free:
        Ep = _project_out(Ep, br.free)
        Em = _project_out(Em, br.free)
    a = sum(float(abs2(x)) for x in Ep.entries)
    b = sum(float(abs2(x)) for x in Em.entries)
    c = sum(
        to_complex(x) * to_complex(conj(y))
        for x, y in zip(Ep.entries, Em.entries)
    )
    r = (b / a) ** 0.25
    if abs(c) < 1e-15 * max(a, b):
        alphas = [r, -r]
    else:
        theta = (math.pi - cmath.phase(c)) / 2
        alphas = [r * cmath.exp(1j * theta), -r * cmath.exp(1j * theta)]
    out = []
    for al in alphas:
        if br.lead.is_exact and br.tail.is_exact and not br.free:
            al_exact = _try_exactify_unit(al)
            if al_exact is not None:
                out.append(br.at(alpha=al_exact))
                continue
        # Ep/Em already have the free components projected out
        out.append(al * Ep + (1 / al) * Em)
    return out


def _try_exactify_unit(al: complex):
    """Recover exact alpha for the clean cases (real rational alpha)."""
    if abs(al.imag) < 1e-15 and abs(al.real - round(al.real)) < 1e-15:
        v = round(al.real)
        if v != 0:
            return GaussianRational(v)
    return None


def solve_conjugacy(A: Mat2, B: Mat2, tol: float = DEFAULT_TOL) -> ConjugacySolution:
    """Solve A P = P B: full linear solution space plus its det-1 slice.

    The basis is the unique reduced echelon basis of the intertwiner
    space (deterministic).  Exact Gaussian-rational inputs are solved
    exactly, including the branch constants when their square roots stay
    in Q(i); otherwise branch data degrades to floats while the basis
    stays exact.
    """
    basis_vecs, exact = _nullspace_vec4(A, B, tol)
    basis = tuple(Mat2.from_vec(v) for v in basis_vecs)
    d = len(basis)
    if d == 0:
        return ConjugacySolution(basis, Det1Family("empty", (), 0), exact)
    if d == 4:
        rep = Det1Branch(Mat2.identity(), None, ())
        return ConjugacySolution(basis, Det1Family("full", (rep,), 3), exact)

    # det as a quadratic form on the basis coefficients
    Q = [
        [
            _det_polar(basis[i], basis[j]) / 2 if i != j else basis[i].det()
            for j in range(d)
        ]
        for i in range(d)
    ]
    scale_q = max((scalar_abs(Q[i][j]) for i in range(d) for j in range(d)), default=0.0)
    qz = 0.0 if exact else tol * (1.0 + scale_q)

    rank, kernel = _form_rank_kernel(Q, d, exact, qz)
    radical = tuple(_combo(basis, v) for v in kernel)

    if rank == 0:
        fam = Det1Family("empty", (), 0)
    elif rank == 1:
        fam = _affine_family(basis, Q, d, radical, qz)
    else:
        fam = _hyperbolic_family(basis, Q, radical, qz)
    return ConjugacySolution(basis, fam, exact)


def _form_rank_kernel(Q, d, exact, qz):
    if exact:
        red, pivots = _rref([list(r) for r in Q], 0.0)
        free = [j for j in range(d) if j not in pivots]
        kernel = []
        for fcol in free:
            v = [GaussianRational(0)] * d
            v[fcol] = GaussianRational(1)
            for prow, pcol in enumerate(pivots):
                v[pcol] = -red[prow][fcol]
            kernel.append(v)
        return len(pivots), kernel
    Qf = np.array([[to_complex(x) for x in r] for r in Q], dtype=complex)
    _, s, vh = np.linalg.svd(Qf)
    rank = int(np.sum(s > qz))
    # right null space of Qf = conjugates of the trailing rows of V^H
    null_rows = [list(np.conj(vh[i])) for i in range(d) if i >= rank]
    if null_rows:
        null_rows, _ = _rref(null_rows, ztol=1e-10)
        null_rows = [[_snap(complex(x)) for x in r] for r in null_rows]
    return rank, null_rows


def _combo(basis, coeffs) -> Mat2:
    M = Mat2.zero()
    for w, Bm in zip(coeffs, basis):
        M = M + w * Bm
    return M


def _affine_family(basis, Q, d, radical, qz) -> Det1Family:
    # rank 1: q(c) = Q_ii * (c_i + ...)^2 for some diagonal index with
    # Q_ii != 0 (always exists for a rank-1 symmetric form)
    diag_mags = [scalar_abs(Q[i][i]) for i in range(d)]
    i = max(range(d), key=lambda k: diag_mags[k])
    if diag_mags[i] <= qz:
        raise AssertionError("rank-1 det form with vanishing diagonal")
    root = sqrt_scalar(Q[i][i])
    lead = basis[i] * (1 / root)
    plus = Det1Branch(lead, None, radical)
    minus = Det1Branch(-lead, None, radical)
    branches = sorted([plus, minus], key=lambda br: _entry_sort_key(br.lead))
    return Det1Family("affine", tuple(branches), len(radical))


def _hyperbolic_family(basis, Q, radical, qz) -> Det1Family:
    # rank 2 (only reachable with d = 2 for 2x2 intertwiner spaces):
    # factor the binary form through its two isotropic directions
    q00, q01, q11 = Q[0][0], Q[0][1], Q[1][1]
    z00 = scalar_abs(q00) <= qz
    z11 = scalar_abs(q11) <= qz
    if z00 and z11:
        g1, g2 = (1, 0), (0, 1)
    elif not z00:
        disc = q01 * q01 - q00 * q11
        root = sqrt_scalar(disc)
        g1 = ((-q01 + root) / q00, 1)
        g2 = ((-q01 - root) / q00, 1)
    else:
        g1 = (1, 0)
        g2 = (1, -2 * q01 / q11)
    # normalize so that q(x g1 + y g2) = x y
    beta = (
        g1[0] * (q00 * g2[0] + q01 * g2[1])
        + g1[1] * (q01 * g2[0] + q11 * g2[1])
    )
    g2n = (g2[0] / (2 * beta), g2[1] / (2 * beta))
    Ep = _combo(basis, g1)
    Em = _combo(basis, g2n)
    return Det1Family("hyperbolic", (Det1Branch(Ep, Em, radical),), 1 + len(radical))


def min_norm_conjugator(A: Mat2, B: Mat2, tol: float = DEFAULT_TOL):
    """Det-1 conjugator of minimal Frobenius norm, or None.

    Returns (P, norm).  The minimum is closed-form per branch (least
    squares over the free directions; the alpha optimization on a
    hyperbolic branch), with ties broken canonically.
    """
    sol = solve_conjugacy(A, B, tol)
    got = sol.min_norm_det1()
    if got is None:
        return None
    P, norm, _ = got
    return P, norm
