"""Truncated power series in z with exact rational coefficients.

Used to expand the closed-form exponential generating functions at a fixed
rational ``t`` and compare their Taylor coefficients with ``P_n(t) / n!``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable

from .errors import DegenerateParameter
from .polynomials import Rational, eulerian_poly, evaluate
from .triangles import Family


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients of ``z**0 .. z**order``; higher terms are unknown, not zero."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Rational]):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def _align(self, other: "PowerSeries | Rational") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return PowerSeries([other] + [0] * self.order)
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        return other

    def __add__(self, other):
        other = self._align(other)
        return PowerSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-self._align(other))

    def __rsub__(self, other):
        return self._align(other) - self

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            c = Fraction(other)
            return PowerSeries(c * a for a in self.coeffs)
        other = self._align(other)
        a, b = self.coeffs, other.coeffs
        return PowerSeries(sum((a[i] * b[n - i] for i in range(n + 1)), Fraction(0)) for n in range(len(a)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, PowerSeries):
            return self * (1 / Fraction(other))
        other = self._align(other)
        b = other.coeffs
        if b[0] == 0:
            raise DegenerateParameter("series quotient by a divisor with zero constant term")
        q: list[Fraction] = []
        for n, a in enumerate(self.coeffs):
            acc = a - sum((b[i] * q[n - i] for i in range(1, n + 1)), Fraction(0))
            q.append(acc / b[0])
        return PowerSeries(q)

    def derivative(self) -> "PowerSeries":
        """d/dz; the result has one order less."""
        return PowerSeries(n * c for n, c in enumerate(self.coeffs) if n)

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self.coeffs[: order + 1])


def exp_linear(c: Rational, order: int) -> PowerSeries:
    """Taylor series of ``exp(c z)``: coefficient n is ``c**n / n!``."""
    c = Fraction(c)
    return PowerSeries(c**n / factorial(n) for n in range(order + 1))


def egf_series(family: "Family | str", t: Rational, order: int) -> PowerSeries:
    """Expand the family's closed-form exponential generating function at ``t``.

    A:      (t-1) / (t - e^{(t-1)z})
    B:      (1-t) e^{(1-t)z} / (1 - t e^{2(1-t)z})
    D:      ((2-t) e^{(1-t)z} - t e^{3(1-t)z}) / (2 - 2t e^{2(1-t)z})
    Dtilde: (t e^{3(1-t)z} - t e^{(1-t)z}) / (2 - 2t e^{2(1-t)z})

    All four are 0/0 at t = 1, which is refused rather than taken as a limit.
    """
    family = Family.parse(family)
    t = Fraction(t)
    if t == 1:
        raise DegenerateParameter("closed-form generating functions are 0/0 at t = 1")
    if order < 0:
        raise ValueError("order must be non-negative")
    s = 1 - t
    if family is Family.A:
        return PowerSeries([t - 1] + [0] * order) / (t - exp_linear(t - 1, order))
    e1 = exp_linear(s, order)
    e2 = exp_linear(2 * s, order)
    e3 = exp_linear(3 * s, order)
    if family is Family.B:
        return (s * e1) / (1 - t * e2)
    if family is Family.D:
        return ((2 - t) * e1 - t * e3) / (2 - 2 * t * e2)
    if family is Family.DTILDE:
        return (t * e3 - t * e1) / (2 - 2 * t * e2)
    raise ValueError(f"no generating function for {family.value}")


def egf_from_polynomials(family: "Family | str", t: Rational, order: int) -> PowerSeries:
    """The same series built from the triangle rows: coefficient n = P_n(t) / n!."""
    return PowerSeries(evaluate(eulerian_poly(family, n), t) / factorial(n) for n in range(order + 1))


def egf_pde_residual(family: "Family | str", t: Rational, order: int) -> PowerSeries:
    """Left minus right side of the D / Dtilde generating-function PDE, through ``order - 1``.

    (1+t) f + (2tz - 1) df/dz + 2t(1-t) df/dt  -  (+/-) t e^{(1-t)z}

    ``f`` and ``df/dz`` come from the closed-form series. Coefficient n of f is
    ``P_n(t)/n!``, a polynomial in t, so ``df/dt`` is obtained exactly by
    differentiating those polynomials.
    """
    family = Family.parse(family)
    if family not in (Family.D, Family.DTILDE):
        raise ValueError("the PDE is stated for D and Dtilde")
    if order < 2:
        raise ValueError("order must be at least 2")
    t = Fraction(t)
    f = egf_series(family, t, order)
    fz = f.derivative()  # order - 1
    f = f.truncate(order - 1)
    ft = PowerSeries(
        evaluate(eulerian_poly(family, n).derivative(), t) / factorial(n) for n in range(order)
    )
    z_fz = PowerSeries((0,) + fz.coeffs[:-1])
    lhs = (1 + t) * f + 2 * t * z_fz - fz + 2 * t * (1 - t) * ft
    sign = 1 if family is Family.D else -1
    rhs = sign * t * exp_linear(1 - t, order - 1)
    return lhs - rhs


def egf_pde_check(family: "Family | str", t: Rational, order: int) -> bool:
    return all(c == 0 for c in egf_pde_residual(family, t, order).coeffs)
