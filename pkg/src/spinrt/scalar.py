"""Scalars at the root of unity q = exp(i*pi/r), r = 0 mod 4.

Everything here is plain double-precision complex arithmetic: quantum
numbers, the modified dimension, twist scalars, the quadratic Gauss sum
and the stabilization constants.  ``Mod2C`` implements the coefficient
group C/2Z used for spin colorings and module degrees.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import cached_property
from numbers import Integral

from .errors import InvalidColor


@dataclass(frozen=True)
class ScalarContext:
    """The level ``r`` together with comparison tolerances.

    >>> ctx = ScalarContext(4)
    >>> abs(ctx.q ** 8 - 1) < 1e-12
    True
    """

    r: int
    tol: float = 1e-9
    rtol: float = 1e-8

    def __post_init__(self):
        if not isinstance(self.r, Integral) or self.r < 4 or self.r % 4:
            raise ValueError(f"r must be a positive multiple of 4, got {self.r!r}")
        if self.tol <= 0:
            raise ValueError("tol must be positive")

    @cached_property
    def q(self) -> complex:
        return cmath.exp(1j * math.pi / self.r)

    def qpow(self, x: complex) -> complex:
        """q**x defined as exp(i*pi*x/r), for any complex exponent."""
        return cmath.exp(1j * math.pi * x / self.r)

    def close(self, a: complex, b: complex) -> bool:
        return abs(a - b) <= self.tol + self.rtol * max(abs(a), abs(b))


def _nearest_int(x: complex, tol: float):
    """Return n if x is within tol of the integer n, else None."""
    n = round(x.real)
    if abs(x.real - n) <= tol and abs(x.imag) <= tol:
        return int(n)
    return None


def in_ddot(ctx: ScalarContext, alpha: complex) -> bool:
    """Membership in the index set (C minus Z) union rZ of simple projectives."""
    n = _nearest_int(complex(alpha), ctx.tol)
    return n is None or n % ctx.r == 0


def qnum(ctx: ScalarContext, alpha: complex) -> complex:
    """{alpha} = 2i sin(pi alpha / r)."""
    return 2j * cmath.sin(math.pi * alpha / ctx.r)


def qint(ctx: ScalarContext, n: complex) -> complex:
    """[n] = {n}/{1}."""
    return qnum(ctx, n) / qnum(ctx, 1)


def mod_dim(ctx: ScalarContext, alpha: complex) -> complex:
    """Modified dimension d(alpha) = -r {alpha} / {r alpha}.

    On rZ the formula is 0/0; the value there is its limit, (-1)^(n+1)
    at alpha = n r.
    """
    alpha = complex(alpha)
    n = _nearest_int(alpha, ctx.tol)
    if n is not None:
        if n % ctx.r:
            raise InvalidColor(f"alpha={alpha} is an integer outside rZ")
        return complex((-1) ** (n // ctx.r + 1))
    return -ctx.r * qnum(ctx, alpha) / qnum(ctx, ctx.r * alpha)


def twist_scalar(ctx: ScalarContext, alpha: complex) -> complex:
    """theta_alpha = q^((alpha^2 - (r-1)^2)/2)."""
    return ctx.qpow((alpha * alpha - (ctx.r - 1) ** 2) / 2)


def gauss_sum(ctx: ScalarContext) -> complex:
    """The literal sum of q^(-2k^2) for k = -r/2+1 .. r/2."""
    h = ctx.r // 2
    re = math.fsum(ctx.qpow(-2 * k * k).real for k in range(-h + 1, h + 1))
    im = math.fsum(ctx.qpow(-2 * k * k).imag for k in range(-h + 1, h + 1))
    return complex(re, im)


def delta_spin(ctx: ScalarContext, sign: int) -> complex:
    """Value of a (sign)-framed Kirby-colored stabilizing meridian.

    ``sign=+1`` is the multiplier picked up by F' under a +1 stabilization
    (one more positive eigenvalue of the linking matrix), ``sign=-1`` the
    one for a -1 stabilization.  They are complex conjugates, with
    ``delta_spin(-1) = (1-i)/2 (rq)^(3/2)``.
    """
    r = ctx.r
    if sign == 1:
        return (1 + 1j) / 2 * r**1.5 * ctx.qpow(-1.5)
    if sign == -1:
        return (1 - 1j) / 2 * r**1.5 * ctx.qpow(1.5)
    raise ValueError("sign must be +1 or -1")


def delta_spin_oracle(ctx: ScalarContext, alpha: complex, sign: int) -> complex:
    """Evaluate the stabilization constant as an explicit sum over Kirby terms.

    Each term is the value of an open alpha-strand encircled by a
    (sign)-framed meridian colored alpha+2k-1, built from the Hopf value
    -r q^(+-alpha beta)/d(alpha) and the twists.  For ``sign=-1`` this is
    term-for-term the printed formula with 1/(theta theta).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    alpha = complex(alpha)
    th_a = twist_scalar(ctx, alpha)
    total = 0j
    for k in range(1, ctx.r // 2 + 1):
        beta = alpha + 2 * k - 1
        hopf = -ctx.r * ctx.qpow(-sign * beta * alpha)
        total += mod_dim(ctx, beta) * hopf * (th_a * twist_scalar(ctx, beta)) ** sign
    return total / mod_dim(ctx, alpha)


def _reduce(z: complex) -> complex:
    re = math.fmod(z.real, 2.0)
    if re < 0:
        re += 2.0
    if re >= 2.0:
        re -= 2.0
    return complex(re, z.imag)


class Mod2C:
    """An element of C/2Z, stored by its representative with real part in [0, 2).

    Equality is approximate (absolute tolerance on the wrapped difference),
    so instances are deliberately unhashable.
    """

    __slots__ = ("value",)
    tol = 1e-9

    def __init__(self, value: complex | float | int = 0):
        if isinstance(value, Mod2C):
            value = value.value
        object.__setattr__(self, "value", _reduce(complex(value)))

    def __setattr__(self, name, value):
        raise AttributeError("Mod2C is immutable")

    def __add__(self, other):
        return Mod2C(self.value + Mod2C(other).value)

    __radd__ = __add__

    def __sub__(self, other):
        return Mod2C(self.value - Mod2C(other).value)

    def __rsub__(self, other):
        return Mod2C(other) - self

    def __neg__(self):
        return Mod2C(-self.value)

    def __mul__(self, n):
        if not isinstance(n, Integral):
            raise TypeError("C/2Z only admits integer scaling")
        return Mod2C(int(n) * self.value)

    __rmul__ = __mul__

    def distance(self, other) -> float:
        d = _reduce(self.value - Mod2C(other).value)
        re = d.real - 2.0 if d.real > 1.0 else d.real
        return abs(complex(re, d.imag))

    def __eq__(self, other):
        if not isinstance(other, (Mod2C, int, float, complex)):
            return NotImplemented
        return self.distance(other) <= self.tol

    __hash__ = None

    def is_integral(self, tol: float | None = None) -> bool:
        """True when the class lies in Z/2Z."""
        tol = self.tol if tol is None else tol
        return abs(self.value.imag) <= tol and min(
            self.distance(0), self.distance(1)
        ) <= tol

    def __complex__(self):
        return self.value

    def __repr__(self):
        v = self.value
        if v.imag == 0:
            return f"Mod2C({v.real:g})"
        return f"Mod2C({v.real:g}{v.imag:+g}j)"


def is_integral(x, tol: float | None = None) -> bool:
    return Mod2C(x).is_integral(tol)
