"""Truncated power-series jets: composition, vanishing order, coverings.

A jet is a polynomial truncation of a germ at 0.  Coefficients may be
scalars or vectors (a curve germ into a moduli chart).  The two facts
the package needs from this module:

  * composing a germ with z -> z^n multiplies vanishing orders by n, and
  * a scalar germ of vanishing order n is z^n after a change of variable
    u with u(0) = 0, u'(0) != 0 (the covering normal form); two pull-back
    families of a jumping family are equivalent exactly when the
    covering degrees match.

Also hosts the circle-density gap of the point set
{exp(2 pi i l (m/n)^k)}, the quantitative engine behind covering
non-equivalence for n/m > 1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import gcd
from typing import Optional

import numpy as np

from .errors import ModelInconsistencyError

DEFAULT_ORDER = 12
COEFF_TOL = 1e-12


class Jet:
    """Truncated power series sum_k c_k z^k, k <= order.

    Coefficients are a numpy array of shape (order+1,) for scalar jets
    or (order+1, d) for vector-valued ones.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.asarray(coeffs, dtype=complex)
        if arr.ndim not in (1, 2) or arr.shape[0] < 1:
            raise ValueError("jet coefficients must be a 1-D or 2-D array")
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Jet is immutable")

    @property
    def order(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def is_scalar(self) -> bool:
        return self.coeffs.ndim == 1

    @classmethod
    def from_coeffs(cls, coeffs, order: int = DEFAULT_ORDER) -> "Jet":
        arr = np.asarray(coeffs, dtype=complex)
        shape = (order + 1,) + arr.shape[1:]
        out = np.zeros(shape, dtype=complex)
        n = min(order + 1, arr.shape[0])
        out[:n] = arr[:n]
        return cls(out)

    @classmethod
    def monomial(cls, n: int, order: int = DEFAULT_ORDER, coefficient=1.0) -> "Jet":
        if n < 0 or n > order:
            raise ValueError(f"monomial degree {n} outside truncation order {order}")
        out = np.zeros(order + 1, dtype=complex)
        out[n] = coefficient
        return cls(out)

    def truncate(self, order: int) -> "Jet":
        return Jet.from_coeffs(self.coeffs, order)

    def constant_term(self):
        return self.coeffs[0]

    def __add__(self, other: "Jet") -> "Jet":
        n = min(self.order, other.order)
        return Jet(self.coeffs[: n + 1] + other.coeffs[: n + 1])

    def __sub__(self, other: "Jet") -> "Jet":
        n = min(self.order, other.order)
        return Jet(self.coeffs[: n + 1] - other.coeffs[: n + 1])

    def __mul__(self, other) -> "Jet":
        if isinstance(other, Jet):
            return _mul_trunc(self, other)
        return Jet(self.coeffs * other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Jet":
        if not self.is_scalar:
            raise ValueError("powers are defined for scalar jets only")
        if n < 0:
            raise ValueError("negative powers are not defined for jets")
        out = Jet.monomial(0, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __repr__(self):
        return f"Jet(order={self.order}, coeffs={self.coeffs!r})"


def _mul_trunc(a: Jet, b: Jet) -> Jet:
    """Truncated product; at least one factor must be scalar."""
    if not a.is_scalar and not b.is_scalar:
        raise ValueError("cannot multiply two vector-valued jets")
    if not a.is_scalar:
        a, b = b, a
    n = min(a.order, b.order)
    shape = (n + 1,) + b.coeffs.shape[1:]
    out = np.zeros(shape, dtype=complex)
    for k in range(n + 1):
        for i in range(k + 1):
            out[k] += a.coeffs[i] * b.coeffs[k - i]
    return Jet(out)


def compose(F: Jet, g: Jet, tol: float = COEFF_TOL) -> Jet:
    """F(g(z)) truncated to the common order; needs g(0) = 0."""
    if not g.is_scalar:
        raise ValueError("inner jet must be scalar")
    if abs(g.constant_term()) > tol:
        raise ValueError(f"inner jet must vanish at 0, got g(0) = {g.constant_term()}")
    n = min(F.order, g.order)
    Ft = F.truncate(n)
    gt = g.truncate(n)
    # Horner from the top coefficient down
    shape = Ft.coeffs.shape[1:]
    acc = Jet(np.zeros((n + 1,) + shape, dtype=complex))
    for k in range(n, -1, -1):
        acc = _mul_trunc(gt, acc)
        const = np.zeros_like(acc.coeffs)
        const[0] = Ft.coeffs[k]
        acc = acc + Jet(const)
    return acc


def vanishing_order(F: Jet, tol: float = COEFF_TOL) -> Optional[int]:
    """Index of the first nonzero coefficient past the constant term.

    None means "beyond truncation": no coefficient 1..order exceeds tol
    in norm, so the order is not visible at this truncation.
    """
    for k in range(1, F.order + 1):
        c = F.coeffs[k]
        mag = abs(c) if F.is_scalar else float(np.linalg.norm(c))
        if mag > tol:
            return k
    return None


@dataclass(frozen=True)
class CoveringNormalForm:
    """f(u(z)) = z^degree with u(0) = 0, u'(0) != 0."""

    degree: int
    reparam: Jet


def normalize_covering(f: Jet, tol: float = COEFF_TOL) -> CoveringNormalForm:
    """Bring a scalar germ with f(0) = 0, f != 0 to the covering z^n.

    Writes f = z^n g with g(0) != 0 and solves v coefficient-by-
    coefficient in v^n g(z v) = 1 (principal n-th root for the leading
    term); then u = z v.  The round trip compose(f, u) = z^n is verified
    internally.
    """
    if not f.is_scalar:
        raise ValueError("covering normal form is defined for scalar jets")
    if abs(f.constant_term()) > tol:
        raise ValueError("germ must vanish at 0")
    n = vanishing_order(f, tol)
    if n is None:
        raise ValueError("zero jet within truncation: no covering degree")
    N = f.order
    m = N - n  # v is determined to this order
    g = Jet(f.coeffs[n:])  # order N - n, g(0) != 0
    g0 = g.constant_term()
    v = np.zeros(m + 1, dtype=complex)
    v[0] = cmath.exp(-cmath.log(g0) / n)  # principal branch of g0^(-1/n)
    lead = n * v[0] ** (n - 1) * g0
    z1 = Jet.monomial(1, m)
    for k in range(1, m + 1):
        vj = Jet(v)
        resid = vj**n * compose(g.truncate(m), z1 * vj) - Jet.monomial(0, m)
        v[k] = -resid.coeffs[k] / lead
    u = Jet(np.concatenate([[0.0], v]))  # u = z v(z), order m+1 <= N
    check = compose(f, u.truncate(N))
    target = Jet.monomial(n, check.order)
    # verify against the roundoff floor of the computation itself: the
    # composition of the absolute-value jets bounds, order by order, the
    # largest intermediate term whose cancellation the residual inherits
    mag = compose(Jet(np.abs(f.coeffs)), Jet(np.abs(u.truncate(N).coeffs)))
    floor = np.maximum(1.0, np.abs(mag.coeffs))
    if float(np.max(np.abs(check.coeffs - target.coeffs) / floor)) > 1e-10:
        raise ModelInconsistencyError("covering normalization failed to verify")
    return CoveringNormalForm(n, u)


def type2_verdict(n: int, m: int) -> str:
    """Equivalence of pull-backs of a jumping family by z^n vs z^m."""
    if n < 1 or m < 1:
        raise ValueError("covering degrees must be positive")
    return "Equivalent" if n == m else "NotEquivalent"


def density_gap(n: int, m: int, K: int, L: int) -> float:
    """Largest angular gap of {exp(2 pi i l (m/n)^k) : 1<=k<=K, 0<=l<=L}.

    Requires coprime n > m >= 1.  An empty point set (K = 0 or L < 0)
    has gap 2 pi by convention.  Nonincreasing in both K and L.
    """
    if m < 1 or n <= m:
        raise ValueError("need n > m >= 1")
    if gcd(n, m) != 1:
        raise ValueError("need gcd(n, m) = 1")
    if K < 0 or L < 0:
        raise ValueError("need K, L >= 0")
    if K == 0:
        return 2 * math.pi
    ratio = m / n
    ks = np.arange(1, K + 1)
    ls = np.arange(0, L + 1)
    vals = np.multiply.outer(ls, ratio**ks).ravel() % 1.0
    angles = np.sort(vals) * 2 * math.pi
    gaps = np.diff(angles)
    wrap = 2 * math.pi - angles[-1] + angles[0]
    return float(max(gaps.max(initial=0.0), wrap))
