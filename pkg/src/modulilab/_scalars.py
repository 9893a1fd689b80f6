"""Scalar layer: complex floats plus exact Gaussian rationals.

Every numeric entry in this package is either a python ``complex`` or a
:class:`GaussianRational` (element of Q(i) with ``fractions.Fraction``
parts).  Arithmetic between the two degrades to ``complex``; arithmetic
among exact scalars stays exact.  The solvers are written against the
small helper functions below so the same code runs on both paths.
"""

from __future__ import annotations

import cmath
import math
import numbers
from fractions import Fraction
from math import isqrt


class GaussianRational:
    """Exact element re + im*i of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- conversions ---------------------------------------------------

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __repr__(self) -> str:
        if not self.im:
            return f"GaussianRational({self.re})"
        return f"GaussianRational({self.re}, {self.im})"

    # -- algebra -------------------------------------------------------

    def _coerce(self, other):
        """Return other as GaussianRational, or None if it needs floats."""
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        if isinstance(other, numbers.Integral):
            return GaussianRational(int(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, numbers.Complex):
                return complex(self) + complex(other)
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, numbers.Complex):
                return complex(self) - complex(other)
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, numbers.Complex):
                return complex(self) * complex(other)
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, numbers.Complex):
                return complex(self) / complex(other)
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if not d:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, numbers.Complex):
                return complex(other) / complex(self)
            return NotImplemented
        return o.__truediv__(self)

    def __pow__(self, n):
        if not isinstance(n, numbers.Integral) or n < 0:
            return complex(self) ** n
        out = GaussianRational(1)
        base = self
        n = int(n)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, numbers.Complex):
                return complex(self) == complex(other)
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash(complex(self))


def exactify(x):
    """Normalize a scalar: exact kinds to GaussianRational, rest to complex."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    if isinstance(x, numbers.Integral):
        return GaussianRational(int(x))
    z = complex(x)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite scalar {z!r}")
    return z


def is_exact(x) -> bool:
    return isinstance(x, GaussianRational)


def to_complex(x) -> complex:
    return complex(x)


def conj(x):
    if isinstance(x, GaussianRational):
        return x.conjugate()
    return complex(x).conjugate()


def abs2(x):
    """|x|^2, exact (Fraction) on the exact path."""
    if isinstance(x, GaussianRational):
        return x.re * x.re + x.im * x.im
    z = complex(x)
    return z.real * z.real + z.imag * z.imag


def scalar_abs(x) -> float:
    return math.sqrt(float(abs2(x)))


def is_zero(x, tol: float = 0.0) -> bool:
    if isinstance(x, GaussianRational):
        return not x
    return abs(complex(x)) <= tol


def rational_sqrt(q: Fraction):
    """Exact nonnegative square root of q >= 0 in Q, or None."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def sqrt_exact(z: GaussianRational):
    """Principal square root of z inside Q(i), or None if it leaves Q(i)."""
    a, b = z.re, z.im
    if not b:
        if a >= 0:
            r = rational_sqrt(a)
            return GaussianRational(r) if r is not None else None
        r = rational_sqrt(-a)
        return GaussianRational(0, r) if r is not None else None
    m = rational_sqrt(a * a + b * b)
    if m is None:
        return None
    c = rational_sqrt((a + m) / 2)
    if c is None or c == 0:
        return None
    d = b / (2 * c)
    # principal branch: real part > 0 here since c > 0
    return GaussianRational(c, d)


def sqrt_scalar(x):
    """Square root, exact when the input is exact and the root stays in Q(i)."""
    if isinstance(x, GaussianRational):
        r = sqrt_exact(x)
        if r is not None:
            return r
        x = complex(x)
    return cmath.sqrt(x)
