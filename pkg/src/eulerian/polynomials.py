"""Eulerian polynomials and the identities relating them.

Polynomials are dense coefficient vectors over :class:`fractions.Fraction`;
coefficient ``i`` multiplies ``t**i``. Everything is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Union

from . import triangles
from .triangles import Family

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Rational] = ()):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    @classmethod
    def monomial(cls, degree: int, c: Rational = 1) -> "Polynomial":
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree ignoring trailing zeros; the zero polynomial has degree -1."""
        d = len(self.coeffs) - 1
        while d >= 0 and self.coeffs[d] == 0:
            d -= 1
        return d

    def trimmed(self) -> tuple[Fraction, ...]:
        return self.coeffs[: self.degree + 1]

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.trimmed() == other.trimmed()
        return NotImplemented

    def __hash__(self):
        return hash(self.trimmed())

    def __call__(self, t: Rational) -> Fraction:
        return evaluate(self, t)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = Polynomial([1])
        for _ in range(e):
            result = result * self
        return result

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def compose_square(self) -> "Polynomial":
        """p(t**2)."""
        out = [Fraction(0)] * max(2 * len(self.coeffs) - 1, 0)
        for i, c in enumerate(self.coeffs):
            out[2 * i] = c
        return Polynomial(out)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"


T = Polynomial([0, 1])
ONE = Polynomial([1])


def evaluate(p: Polynomial, t: Rational) -> Fraction:
    """Horner evaluation."""
    t = Fraction(t)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def eulerian_poly(family: "Family | str", n: int) -> Polynomial:
    """Sum of ``T(n, k) t**k`` over the family's row n."""
    return Polynomial(triangles.row(family, n))


# -- identities -------------------------------------------------------------


def symmetry_identity_check(family: "Family | str", n: int) -> bool:
    """A: t^(n-1) P(1/t) = P(t) for n >= 1.  B: t^n P(1/t) = P(t)."""
    family = Family.parse(family)
    c = eulerian_poly(family, n).coeffs
    if family is Family.A:
        if n < 1:
            raise ValueError("type A symmetry needs n >= 1")
        body = c[:n]
        return body == body[::-1] and c[n] == 0
    if family is Family.B:
        return c == c[::-1]
    raise ValueError("symmetry identity is stated for A and B only")


def ab_relation_check(n: int) -> bool:
    """(1+t)^(n+1) P^A_n(t) - 2^n t P^A_n(t^2) == P^B_n(t^2) as polynomials."""
    pa = eulerian_poly(Family.A, n)
    lhs = (ONE + T) ** (n + 1) * pa - 2**n * T * pa.compose_square()
    return lhs == eulerian_poly(Family.B, n).compose_square()


def db_relation_check(n: int) -> bool:
    """P^D = (P^B + (1-t)^n)/2 and P^Dtilde = (P^B - (1-t)^n)/2."""
    pb = eulerian_poly(Family.B, n)
    alt = (ONE - T) ** n
    half = Fraction(1, 2)
    return (
        eulerian_poly(Family.D, n) == half * (pb + alt)
        and eulerian_poly(Family.DTILDE, n) == half * (pb - alt)
    )


def binomial_poly(x: Rational, n: int) -> Fraction:
    """Generalised C(x, n) = x (x-1) ... (x-n+1) / n! for rational x."""
    x = Fraction(x)
    num = Fraction(1)
    for i in range(n):
        num *= x - i
    return num / factorial(n)


def worpitzky(family: "Family | str", n: int, x: Rational) -> tuple[Fraction, Fraction]:
    """Both sides of the family's Worpitzky expansion at ``x``.

    A: sum C(x+k, n) A(n,k) = x^n
    B: sum C(x+k, n) B(n,k) = (1+2x)^n
    D, Dtilde: sum C(x+k, n) T(n,k) = ((2x+1)^n +/- (-1)^n) / 2
    """
    family = Family.parse(family)
    x = Fraction(x)
    r = triangles.row(family, n)
    s = sum((binomial_poly(x + k, n) * v for k, v in enumerate(r)), Fraction(0))
    if family is Family.A:
        return s, x**n
    if family is Family.B:
        return s, (1 + 2 * x) ** n
    if family is Family.D:
        return s, ((2 * x + 1) ** n + (-1) ** n) / 2
    if family is Family.DTILDE:
        return s, ((2 * x + 1) ** n - (-1) ** n) / 2
    raise ValueError(f"no Worpitzky identity for {family.value}")


def binomial_alternating_identity_check(n: int, x: Rational) -> bool:
    """sum_k C(x+k, n) C(n, k) (-1)^k == (-1)^n."""
    x = Fraction(x)
    s = sum(binomial_poly(x + k, n) * comb(n, k) * (-1) ** k for k in range(n + 1))
    return s == (-1) ** n


def poly_step_d(family: "Family | str", p_prev: Polynomial, n: int) -> Polynomial:
    """Next D (or Dtilde) polynomial from the previous one via the derivative recurrence."""
    family = Family.parse(family)
    if n < 1:
        raise ValueError("poly_step_d needs n >= 1")
    if family not in (Family.D, Family.DTILDE):
        raise ValueError("poly_step_d is for D and Dtilde")
    sign = -1 if family is Family.D else 1
    one_minus_t = ONE - T
    out = (
        Polynomial([1, 2 * n - 1]) * p_prev
        + 2 * T * one_minus_t * p_prev.derivative()
        + sign * T * one_minus_t ** (n - 1)
    )
    if out.degree > n:
        raise ArithmeticError(f"step produced degree {out.degree} > {n}")
    # pad to the uniform n+1 length used by the triangles
    coeffs = out.trimmed()
    return Polynomial(coeffs + (Fraction(0),) * (n + 1 - len(coeffs)))


def summation_partial(family: "Family | str", t: Rational, n: int, terms: int) -> Fraction:
    """Partial sum of Euler's series (A) or its odd analogue (B), ``terms`` terms.

    A: sum_{j=1}^{K} t^j j^n  ->  t P^A_n(t) / (1-t)^(n+1)
    B: sum_{k=0}^{K-1} (2k+1)^n t^k  ->  P^B_n(t) / (1-t)^(n+1)
    """
    family = Family.parse(family)
    t = Fraction(t)
    if not 0 < t < 1:
        raise ValueError("summation needs 0 < t < 1")
    if terms < 1:
        raise ValueError("need at least one term")
    if family is Family.A:
        return sum((t**j * j**n for j in range(1, terms + 1)), Fraction(0))
    if family is Family.B:
        return sum(((2 * k + 1) ** n * t**k for k in range(terms)), Fraction(0))
    raise ValueError("summation formulas exist for A and B")


def summation_limit(family: "Family | str", t: Rational, n: int) -> Fraction:
    family = Family.parse(family)
    t = Fraction(t)
    p = evaluate(eulerian_poly(family, n), t)
    if family is Family.A:
        return t * p / (1 - t) ** (n + 1)
    if family is Family.B:
        return p / (1 - t) ** (n + 1)
    raise ValueError("summation formulas exist for A and B")
