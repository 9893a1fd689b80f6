"""Moduli of 2-dimensional complex tori and the right SL4(Z) action.

A period matrix is any A in M2(C) with det Im A > 0; the torus is
C^2 / (Z^2 + A Z^2).  An integer matrix gamma in SL4(Z), in 2x2 blocks
(g11, g12; g21, g22), acts on the right by

    A . gamma = (g11 + A g21)^{-1} (g12 + A g22),

and two period matrices give isomorphic tori exactly when they lie on
the same orbit.  Because Im A is invertible, fixing the blocks (g11,
g21) determines (g12, g22) uniquely from the linear relation
(g11 + A g21) B = g12 + A g22, so the bounded search enumerates the free
block pair, solves, rounds, and verifies; that enumeration is exhaustive
for every witness within the entry bound and tolerance.

The second half of the module builds the flat period families used by
the discontinuous-witness counterexamples: b and c vanish to infinite
order at t = 0 (variant 1) or at the whole sequence t_n = e^-n
(variant 2), so the family is smooth while its isomorphism class
oscillates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from ._scalars import GaussianRational, is_exact, scalar_abs, to_complex
from .errors import MembershipError, SingularMatrixError
from .mat2 import DEFAULT_TOL, Mat2

# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------


def _as_mat(A) -> Mat2:
    return A.matrix if isinstance(A, TorusPoint) else A


def imag_part(A: Mat2):
    """Entrywise imaginary part as a 2x2 tuple (exact when A is exact)."""
    M = _as_mat(A)

    def im(x):
        if is_exact(x):
            return x.im
        return to_complex(x).imag

    return ((im(M.a11), im(M.a12)), (im(M.a21), im(M.a22)))


def in_moduli(A) -> bool:
    """det Im A > 0 (strict)."""
    (p, q), (r, s) = imag_part(_as_mat(A))
    return p * s - q * r > 0


@dataclass(frozen=True)
class TorusPoint:
    """A period matrix; construction validates det Im A > 0."""

    matrix: Mat2

    def __post_init__(self):
        if not in_moduli(self.matrix):
            raise MembershipError(
                f"matrix is not a period matrix (need det Im A > 0): {self.matrix!r}"
            )


# ---------------------------------------------------------------------------
# SL4(Z)
# ---------------------------------------------------------------------------


def _int_det(rows) -> int:
    """Exact integer determinant by Laplace expansion (n <= 4)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        sign = -1 if j % 2 else 1
        total += sign * rows[0][j] * _int_det(minor)
    return total


class IntMat4:
    """Element of SL4(Z); entries validated integer with det = 1."""

    __slots__ = ("entries",)

    def __init__(self, rows):
        ints = []
        for row in rows:
            for x in row:
                xi = int(x)
                if xi != x:
                    raise ValueError(f"non-integer entry {x!r}")
                ints.append(xi)
        if len(ints) != 16:
            raise ValueError("IntMat4 needs 4x4 entries")
        object.__setattr__(self, "entries", tuple(ints))
        if self.det() != 1:
            raise ValueError(f"determinant {self.det()} != 1, not in SL4(Z)")

    def __setattr__(self, name, value):
        raise AttributeError("IntMat4 is immutable")

    # -- structure ------------------------------------------------------

    def rows(self):
        e = self.entries
        return [list(e[4 * i : 4 * i + 4]) for i in range(4)]

    def det(self) -> int:
        return _int_det(self.rows())

    @classmethod
    def identity(cls) -> "IntMat4":
        return cls([[1 if i == j else 0 for j in range(4)] for i in range(4)])

    @classmethod
    def from_blocks(cls, g11, g12, g21, g22) -> "IntMat4":
        top = [list(g11[0]) + list(g12[0]), list(g11[1]) + list(g12[1])]
        bot = [list(g21[0]) + list(g22[0]), list(g21[1]) + list(g22[1])]
        return cls(top + bot)

    def blocks(self):
        """(g11, g12, g21, g22) as 2x2 integer tuples."""
        r = self.rows()
        g11 = ((r[0][0], r[0][1]), (r[1][0], r[1][1]))
        g12 = ((r[0][2], r[0][3]), (r[1][2], r[1][3]))
        g21 = ((r[2][0], r[2][1]), (r[3][0], r[3][1]))
        g22 = ((r[2][2], r[2][3]), (r[3][2], r[3][3]))
        return g11, g12, g21, g22

    def __matmul__(self, other: "IntMat4") -> "IntMat4":
        a, b = self.rows(), other.rows()
        prod = [
            [sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4)]
            for i in range(4)
        ]
        return IntMat4(prod)

    def __neg__(self) -> "IntMat4":
        return IntMat4([[-x for x in row] for row in self.rows()])

    def inverse(self) -> "IntMat4":
        """Exact inverse (= adjugate, since det = 1)."""
        r = self.rows()
        inv = [[0] * 4 for _ in range(4)]
        for i in range(4):
            for j in range(4):
                minor = [
                    [r[p][q] for q in range(4) if q != j]
                    for p in range(4)
                    if p != i
                ]
                sign = -1 if (i + j) % 2 else 1
                inv[j][i] = sign * _int_det(minor)
        return IntMat4(inv)

    def __eq__(self, other):
        if not isinstance(other, IntMat4):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"IntMat4({self.rows()!r})"

    def lex_key(self):
        """Canonical order key: per entry (|e|, sign), so +1 sorts before -1."""
        return tuple((abs(e), 0 if e >= 0 else 1) for e in self.entries)

    def frobenius(self) -> float:
        return math.sqrt(sum(e * e for e in self.entries))

    def max_entry_abs(self) -> int:
        return max(abs(e) for e in self.entries)

    def sign_canonical(self) -> "IntMat4":
        """The lex-smaller of gamma and -gamma (they act identically)."""
        neg = -self
        return self if self.lex_key() <= neg.lex_key() else neg


GAMMA_SWAP = IntMat4(
    [
        [0, 1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 0],
    ]
)


def _block_mat2(block) -> Mat2:
    (a, b), (c, d) = block
    return Mat2(a, b, c, d)


def act(A, gamma: IntMat4) -> Mat2:
    """Right action A . gamma = (g11 + A g21)^{-1} (g12 + A g22)."""
    M = _as_mat(A)
    g11, g12, g21, g22 = gamma.blocks()
    T = _block_mat2(g11) + M @ _block_mat2(g21)
    d = T.det()
    if is_exact(d):
        if not d:
            raise SingularMatrixError("g11 + A g21 is singular")
    elif abs(to_complex(d)) <= 1e-14 * max(1.0, T.frobenius() ** 2):
        raise SingularMatrixError("g11 + A g21 is numerically singular")
    return T.inverse() @ (_block_mat2(g12) + M @ _block_mat2(g22))


def induced_linear_part(gamma: IntMat4, B: Mat2) -> Mat2:
    """Linear part C of the torus isomorphism X_A -> X_B a witness gives.

    If act(A, gamma) = B, the biholomorphism is induced by the linear
    map C = (gamma^-1)_11 + B (gamma^-1)_21 on C^2 (translations are
    quotiented out).  Two witness classes merge at a limit fiber exactly
    when their linear parts there agree up to sign.
    """
    inv = gamma.inverse()
    h11, _, h21, _ = inv.blocks()
    return _block_mat2(h11) + B @ _block_mat2(h21)


# ---------------------------------------------------------------------------
# bounded orbit search: solve-then-round over the free block pair
# ---------------------------------------------------------------------------

_CHUNK = 1 << 17


def _free_block_candidates(bound: int, n_free: int = 8):
    """Yield integer assignments of the free entries in chunks (base decode)."""
    m = 2 * bound + 1
    total = m**n_free
    for lo in range(0, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        idx = np.arange(lo, hi, dtype=np.int64)
        digits = np.empty((hi - lo, n_free), dtype=np.int64)
        tmp = idx.copy()
        for pos in range(n_free):
            digits[:, pos] = tmp % m - bound
            tmp //= m
        yield digits


def search_witnesses(A, B, bound: int = 1, tol: float = DEFAULT_TOL):
    """All gamma in SL4(Z) with max |entry| <= bound and act(A, gamma) ~ B.

    Enumerates (g11, g21), solves the linear relation for (g12, g22),
    rounds, and verifies.  Returns the verified witnesses sorted by the
    canonical lex key.  Absence means "no witness within this bound and
    tolerance", not a proof of inequivalence.
    """
    MA, MB = _as_mat(A), _as_mat(B)
    Af = MA.to_array()
    Bf = MB.to_array()
    S = Af.imag
    detS = S[0, 0] * S[1, 1] - S[0, 1] * S[1, 0]
    if detS <= 0:
        raise MembershipError("search requires det Im A > 0")
    Sinv = np.array([[S[1, 1], -S[0, 1]], [-S[1, 0], S[0, 0]]]) / detS
    R = Af.real
    normB = float(np.linalg.norm(Bf))
    found = []
    for digits in _free_block_candidates(bound):
        G1 = digits[:, :4].astype(float).reshape(-1, 2, 2)
        G2 = digits[:, 4:].astype(float).reshape(-1, 2, 2)
        T = G1 + np.einsum("ij,njk->nik", Af, G2)
        C = np.einsum("nij,jk->nik", T, Bf)
        G4 = np.einsum("ij,njk->nik", Sinv, C.imag)
        G3 = C.real - np.einsum("ij,njk->nik", R, G4)
        G4r = np.rint(G4)
        G3r = np.rint(G3)
        ok = (np.abs(G4r).max(axis=(1, 2)) <= bound) & (
            np.abs(G3r).max(axis=(1, 2)) <= bound
        )
        if not ok.any():
            continue
        resid = C - (G3r + np.einsum("ij,njk->nik", Af, G4r))
        rnorm = np.sqrt((np.abs(resid) ** 2).sum(axis=(1, 2)))
        tnorm = np.sqrt((np.abs(T) ** 2).sum(axis=(1, 2)))
        ok &= rnorm <= tol * (1.0 + normB) * (1.0 + tnorm)
        for i in np.nonzero(ok)[0]:
            rows = [
                [int(G1[i, 0, 0]), int(G1[i, 0, 1]), int(G3r[i, 0, 0]), int(G3r[i, 0, 1])],
                [int(G1[i, 1, 0]), int(G1[i, 1, 1]), int(G3r[i, 1, 0]), int(G3r[i, 1, 1])],
                [int(G2[i, 0, 0]), int(G2[i, 0, 1]), int(G4r[i, 0, 0]), int(G4r[i, 0, 1])],
                [int(G2[i, 1, 0]), int(G2[i, 1, 1]), int(G4r[i, 1, 0]), int(G4r[i, 1, 1])],
            ]
            if _int_det(rows) != 1:
                continue
            gamma = IntMat4(rows)
            try:
                image = act(MA, gamma)
            except SingularMatrixError:
                continue
            if (image - MB).frobenius() <= tol * (1.0 + normB):
                found.append(gamma)
    found.sort(key=IntMat4.lex_key)
    return found


def equivalent(A, B, bound: int = 1, tol: float = DEFAULT_TOL) -> Optional[IntMat4]:
    """Lex-smallest bounded witness of isomorphism, or None ("not found
    within bound", never a disproof)."""
    wit = search_witnesses(A, B, bound, tol)
    return wit[0] if wit else None


def automorphisms(A, bound: int = 1, tol: float = DEFAULT_TOL):
    """All bounded self-witnesses; always contains +-Id."""
    return search_witnesses(A, A, bound, tol)


def genericity_certificate(A, bound: int = 2, tol: float = DEFAULT_TOL) -> bool:
    """Operational genericity: the bounded search finds only +-Id."""
    auts = automorphisms(A, bound, tol)
    return len(auts) == 2 and all(
        g == IntMat4.identity() or g == -IntMat4.identity() for g in auts
    )


def random_unimodular(rng: np.random.Generator, factors: int = 5) -> IntMat4:
    """Random SL4(Z) element: product of elementary shears E_ij(+-1)."""
    out = IntMat4.identity()
    for _ in range(factors):
        i = int(rng.integers(0, 4))
        j = int(rng.integers(0, 4))
        if i == j:
            continue
        e = 1 if rng.random() < 0.5 else -1
        rows = [[1 if p == q else 0 for q in range(4)] for p in range(4)]
        rows[i][j] = e
        out = out @ IntMat4(rows)
    return out


# ---------------------------------------------------------------------------
# flat period families
# ---------------------------------------------------------------------------


def h_flat(t: float) -> float:
    """Smooth and flat at 0 from the left: 0 for t <= 0, else e^{-1/t}."""
    if t <= 0.0:
        return 0.0
    x = -1.0 / t
    if x < -745.0:  # exp underflows to 0 anyway; avoid spurious overflow paths
        return 0.0
    return math.exp(x)


def f_bump(t: float) -> float:
    """Periodic-ish flat bump: sum_p h(t+p) h(-t-p+1).

    Positive exactly off the integers, flat-zero at every integer.  At
    most two integer shifts contribute, so the sum is truncated to a
    4-term window around -floor(t).
    """
    base = math.floor(-t)
    total = 0.0
    for p in range(base - 1, base + 3):
        total += h_flat(t + p) * h_flat(-t - p + 1)
    return total


@dataclass(frozen=True)
class FlatFunctionParams:
    """Choice of the flat coefficient pair (b, c).

    variant 1: b = alpha h(t^2), c = beta h(t^2)  - flat at t = 0 only.
    variant 2: b = alpha h(|t|) f(log |t|), c likewise with beta - flat
               at 0 and at the whole zero sequence t_n = e^-n.
    Requires alpha > beta > 0 so that b > c > 0 off the flat zeros.

    The default ratio alpha/beta = pi/2 is transcendental: a rational
    ratio b/c = p/q would make x*Id + y*[[0, p], [q, 0]]-type integer
    blocks commute with the period matrix (a Pell-style family of extra
    lattice automorphisms), and rational relations among b^2, bc, c^2
    would do the same at one remove.  A transcendental ratio leaves
    +/-Id as the only small-entry automorphisms at generic t.
    """

    variant: int = 1
    alpha: float = math.pi / 2
    beta: float = 1.0

    def __post_init__(self):
        if self.variant not in (1, 2):
            raise ValueError(f"variant must be 1 or 2, got {self.variant}")
        if not (self.alpha > self.beta > 0):
            raise ValueError("need alpha > beta > 0")


def flat_b(t: float, params: FlatFunctionParams = FlatFunctionParams()) -> float:
    return params.alpha * _flat_profile(t, params)


def flat_c(t: float, params: FlatFunctionParams = FlatFunctionParams()) -> float:
    return params.beta * _flat_profile(t, params)


def _flat_profile(t: float, params: FlatFunctionParams) -> float:
    t = float(t)
    if params.variant == 1:
        return h_flat(t * t)
    a = abs(t)
    if a == 0.0:
        return 0.0
    return h_flat(a) * f_bump(math.log(a))


def zero_sequence(n: int) -> float:
    """t_n = e^-n, the flat zeros of the variant-2 coefficients."""
    return math.exp(-n)


def omega1(t: float, params: FlatFunctionParams = FlatFunctionParams()) -> Mat2:
    """Period matrix [[i+t, b(t)], [c(t), i+t]]; always a moduli member."""
    z = complex(float(t), 1.0)
    return Mat2(z, flat_b(t, params), flat_c(t, params), z)


def _transpose_interval(t: float) -> bool:
    """interval_alternating parity: transpose iff floor(-log|t|) is odd."""
    a = abs(float(t))
    if a == 0.0:
        return False
    return math.floor(-math.log(a)) % 2 == 1


def omega2(
    t: float,
    mode: str = "transpose_split",
    params: Optional[FlatFunctionParams] = None,
) -> Mat2:
    """The companion family: transpose of omega1 on alternating regions.

    transpose_split      - transpose for t >= 0 (variant-1 params).
    interval_alternating - transpose on the odd intervals [t_{k+1}, t_k]
                           of the variant-2 zero sequence.
    Both agree with omega1 at the gluing boundaries because b and c are
    flat-zero there.
    """
    if mode == "transpose_split":
        p = params or FlatFunctionParams(variant=1)
        W = omega1(t, p)
        return W.transpose() if float(t) >= 0.0 else W
    if mode == "interval_alternating":
        p = params or FlatFunctionParams(variant=2)
        if p.variant != 2:
            raise ValueError("interval_alternating needs the variant-2 zero sequence")
        W = omega1(t, p)
        return W.transpose() if _transpose_interval(t) else W
    raise ValueError(f"unknown omega2 mode {mode!r}")


# ---------------------------------------------------------------------------
# flatness measurement
# ---------------------------------------------------------------------------


def central_difference(func, t0: float, order: int, step: float) -> float:
    """Undivided central difference Delta^k f(t0) at the given step."""
    total = 0.0
    for j in range(order + 1):
        w = math.comb(order, j) * (-1 if j % 2 else 1)
        total += w * func(t0 + (order / 2 - j) * step)
    return total


def flatness_defect(func, t0: float, max_order: int = 8, step: float = 1e-3) -> float:
    """Largest Richardson-extrapolated undivided central difference.

    A function flat at t0 sends this to ~0; a generic smooth function
    shows ~|f'(t0)| * step at order 1.  Differences are deliberately
    left undivided: dividing by step^k would amplify roundoff by up to
    1e24 at order 8 and certify nothing.
    """
    worst = 0.0
    for k in range(1, max_order + 1):
        d1 = central_difference(func, t0, k, step)
        d2 = central_difference(func, t0, k, step / 2)
        extrap = (4.0 * d2 - d1) / 3.0
        worst = max(worst, abs(extrap))
    return worst
