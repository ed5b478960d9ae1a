"""Probability measures whose moments are the Eulerian polynomials.

For ``t >= 0`` the sequences ``P^A_n(t)``, ``P^B_n(t)`` and ``P^D_n(t)`` are the
moments of explicit measures: a point mass at ``t = 0``, a gamma-type density
at ``t = 1`` and a dilated geometric family of atoms otherwise. ``NU`` is the
measure for the shifted complementary sequence ``P^Dtilde_{n+1}(t) / t``,
defined for ``t >= 1`` only.

Moments of infinite atom families are reported as an exact partial sum plus a
rational bound on the discarded tail. Consecutive tail terms of the n-th moment
have the form ``c * (a j + b)**m * r**j``; their ratio decreases in ``j``, so
once it drops below one at index J the tail is bounded by a geometric series
starting from term J.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterator, Sequence

from .errors import BudgetExceeded, SearchExhausted, UnsupportedCase
from .hankel import hankel_minors
from .polynomials import Rational, eulerian_poly, evaluate
from .triangles import Family

MAX_TERMS = 200_000


class MeasureFamily(str, enum.Enum):
    A = "A"
    B = "B"
    D = "D"
    NU = "NU"

    @classmethod
    def parse(cls, value) -> "MeasureFamily":
        if isinstance(value, cls):
            return value
        if isinstance(value, Family):
            value = value.value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise ValueError(f"no measure for family {value!r}") from None


@dataclass(frozen=True)
class AtomSeries:
    """Atoms ``j = start, start+1, ...`` at ``scale * (a j + b)``.

    The weight of atom j is ``coef * (a j + b)**power * ratio**j`` with
    ``0 < ratio < 1``.
    """

    start: int
    scale: Fraction
    a: int
    b: int
    coef: Fraction
    ratio: Fraction
    power: int = 0

    def location(self, j: int) -> Fraction:
        return self.scale * (self.a * j + self.b)

    def weight(self, j: int) -> Fraction:
        return self.coef * (self.a * j + self.b) ** self.power * self.ratio**j

    def term(self, j: int, n: int) -> Fraction:
        """Contribution of atom j to the n-th moment."""
        return self.weight(j) * self.location(j) ** n

    def tail_bound(self, j: int, n: int) -> Fraction | None:
        """Bound on the sum of |term(i, n)| over i >= j, or None if not yet geometric."""
        base = self.a * j + self.b
        if base <= 0:
            return None
        rho = Fraction(base + self.a, base) ** (n + self.power) * self.ratio
        if rho >= 1:
            return None
        return abs(self.term(j, n)) / (1 - rho)


@dataclass(frozen=True)
class Density:
    """``coef * x**power * exp(-x / scale)`` on ``[0, inf)``."""

    coef: Fraction
    scale: Fraction
    power: int = 0

    def moment(self, n: int) -> Fraction:
        # integral of x^(n+p) e^(-x/s) over [0, inf) is s^(n+p+1) (n+p)!
        m = n + self.power
        return self.coef * self.scale ** (m + 1) * factorial(m)


@dataclass(frozen=True)
class Measure:
    atoms: tuple[tuple[Fraction, Fraction], ...] = ()
    density: Density | None = None
    series: AtomSeries | None = None
    label: str = ""

    def iter_atoms(self) -> Iterator[tuple[Fraction, Fraction]]:
        """Finite atoms first, then the (infinite) series atoms in order."""
        yield from self.atoms
        if self.series is not None:
            j = self.series.start
            while True:
                yield self.series.location(j), self.series.weight(j)
                j += 1


@dataclass(frozen=True)
class CertifiedValue:
    """``value`` is within ``bound`` of the true quantity."""

    value: Fraction
    bound: Fraction

    @property
    def exact(self) -> bool:
        return self.bound == 0


def _f(x: Rational) -> Fraction:
    return Fraction(x)


def measure_for(family, t: Rational) -> Measure:
    """The measure whose n-th moment is ``P_n(t)`` (or ``P^Dtilde_{n+1}(t)/t`` for NU)."""
    fam = MeasureFamily.parse(family)
    t = _f(t)
    if t < 0:
        raise ValueError("t must be non-negative")
    if fam is MeasureFamily.NU:
        if t < 1:
            raise UnsupportedCase("the NU measure is only defined for t >= 1")
        if t == 1:
            return Measure(density=Density(Fraction(1, 4), Fraction(2), power=1), label="nu_1")
        return Measure(
            atoms=((1 - t, (t - 1) / (2 * t)),),
            series=AtomSeries(0, t - 1, 2, 1, (t - 1) ** 2 / (2 * t**2), 1 / t, power=1),
            label=f"nu_{t}",
        )
    label = f"mu{fam.value}_{t}"
    if t == 0:
        return Measure(atoms=((Fraction(1), Fraction(1)),), label=label)
    if t == 1:
        if fam is MeasureFamily.A:
            return Measure(density=Density(Fraction(1), Fraction(1)), label=label)
        if fam is MeasureFamily.B:
            return Measure(density=Density(Fraction(1, 2), Fraction(2)), label=label)
        return Measure(
            atoms=((Fraction(0), Fraction(1, 2)),),
            density=Density(Fraction(1, 4), Fraction(2)),
            label=label,
        )
    if fam is MeasureFamily.A:
        if t < 1:
            series = AtomSeries(1, 1 - t, 1, 0, (1 - t) / t, t)
        else:
            series = AtomSeries(0, t - 1, 1, 0, (t - 1) / t, 1 / t)
        return Measure(series=series, label=label)
    if fam is MeasureFamily.B:
        if t < 1:
            series = AtomSeries(0, 1 - t, 2, 1, 1 - t, t)
        else:
            series = AtomSeries(0, t - 1, 2, 1, (t - 1) / t, 1 / t)
        return Measure(series=series, label=label)
    # D
    if t < 1:
        return Measure(
            atoms=((1 - t, (2 - t) / 2),),
            series=AtomSeries(1, 1 - t, 2, 1, (1 - t) / 2, t),
            label=label,
        )
    return Measure(
        atoms=((1 - t, Fraction(1, 2)),),
        series=AtomSeries(0, t - 1, 2, 1, (t - 1) / (2 * t), 1 / t),
        label=label,
    )


def mixture(*parts: tuple[Rational, Measure | tuple[Fraction, Fraction]], max_atoms: int = 50) -> dict:
    """Merged ``{location: weight}`` of the first atoms of a weighted sum of measures.

    A bare ``(location, weight)`` tuple stands for a point mass. Used to compare
    atom lists of measures built in different ways.
    """
    out: dict[Fraction, Fraction] = {}
    for w, m in parts:
        w = _f(w)
        if isinstance(m, Measure):
            if m.density is not None:
                raise ValueError("mixture compares atoms only")
            it = m.iter_atoms()
            pairs = [next(it) for _ in range(max_atoms)]
        else:
            pairs = [m]
        for loc, weight in pairs:
            out[loc] = out.get(loc, Fraction(0)) + w * weight
    return out


def _as_fraction(tol) -> Fraction:
    tol = Fraction(str(tol)) if isinstance(tol, float) else Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    return tol


def moment(m: Measure, n: int, tol=Fraction(1, 10**12), max_terms: int = MAX_TERMS) -> CertifiedValue:
    """n-th moment of ``m`` with a certified error bound no larger than ``tol``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    tol = _as_fraction(tol)
    value = sum((w * x**n for x, w in m.atoms), Fraction(0))
    if m.density is not None:
        value += m.density.moment(n)
    bound = Fraction(0)
    s = m.series
    if s is not None:
        j = s.start
        while True:
            tail = s.tail_bound(j, n)
            if tail is not None and tail <= tol:
                bound = tail
                break
            if j - s.start >= max_terms:
                raise BudgetExceeded(f"{m.label}: moment {n} not within {tol} after {max_terms} atoms")
            value += s.term(j, n)
            j += 1
    return CertifiedValue(value, bound)


def _poly_family(family: MeasureFamily) -> Family:
    return {MeasureFamily.A: Family.A, MeasureFamily.B: Family.B, MeasureFamily.D: Family.D}[family]


@dataclass
class MomentReport:
    family: str
    t: Fraction
    tol: Fraction
    rows: list[tuple[int, CertifiedValue, Fraction]] = field(default_factory=list)

    def deviation(self, n: int) -> Fraction:
        _, got, want = self.rows[n]
        return abs(got.value - want)

    @property
    def max_deviation(self) -> Fraction:
        return max((abs(got.value - want) for _, got, want in self.rows), default=Fraction(0))

    @property
    def failures(self) -> list[int]:
        return [n for n, got, want in self.rows if abs(got.value - want) > self.tol + got.bound]

    @property
    def passed(self) -> bool:
        return not self.failures


def moment_theorem_check(family, t: Rational, n_max: int, tol=Fraction(1, 10**9)) -> MomentReport:
    """Compare moments of the family's measure with ``P_n(t)`` for n <= n_max."""
    fam = MeasureFamily.parse(family)
    if fam is MeasureFamily.NU:
        return nu_check(t, n_max, tol)
    t = _f(t)
    tol = _as_fraction(tol)
    mu = measure_for(fam, t)
    report = MomentReport(fam.value, t, tol)
    for n in range(n_max + 1):
        report.rows.append((n, moment(mu, n, tol), evaluate(eulerian_poly(_poly_family(fam), n), t)))
    return report


def nu_check(t: Rational, n_max: int, tol=Fraction(1, 10**9)) -> MomentReport:
    """Compare moments of NU_t with ``P^Dtilde_{n+1}(t) / t``."""
    t = _f(t)
    tol = _as_fraction(tol)
    nu = measure_for(MeasureFamily.NU, t)
    report = MomentReport("NU", t, tol)
    for n in range(n_max + 1):
        want = evaluate(eulerian_poly(Family.DTILDE, n + 1), t) / t
        report.rows.append((n, moment(nu, n, tol), want))
    return report


# -- Hankel positivity ------------------------------------------------------


def moment_sequence(family, t: Rational, length: int) -> list[Fraction]:
    """``P_n(t)`` for n < length; family ``NU`` gives ``P^Dtilde_{n+1}(t) / t``."""
    t = _f(t)
    if str(getattr(family, "value", family)).upper() == "NU":
        if t == 0:
            raise ValueError("the shifted sequence divides by t")
        return [evaluate(eulerian_poly(Family.DTILDE, n + 1), t) / t for n in range(length)]
    fam = Family.parse(family)
    return [evaluate(eulerian_poly(fam, n), t) for n in range(length)]


@dataclass(frozen=True)
class HankelVerdict:
    family: str
    t: Fraction
    minors: tuple[Fraction, ...]

    @property
    def nonnegative(self) -> bool:
        return all(d >= 0 for d in self.minors)

    @property
    def positive(self) -> bool:
        return all(d > 0 for d in self.minors)

    @property
    def zero_orders(self) -> list[int]:
        return [k + 1 for k, d in enumerate(self.minors) if d == 0]

    @property
    def negative_orders(self) -> list[int]:
        return [k + 1 for k, d in enumerate(self.minors) if d < 0]


def hankel_verdict(family, t: Rational, m: int) -> HankelVerdict:
    t = _f(t)
    minors = hankel_minors(moment_sequence(family, t, 2 * m - 1), m)
    return HankelVerdict(str(getattr(family, "value", family)), t, tuple(minors))


def positive_definite_check(family, t: Rational, m: int) -> bool:
    """True iff every leading principal minor of order <= m is non-negative.

    Use :func:`hankel_verdict` to see whether they are strictly positive.
    """
    return hankel_verdict(family, t, m).nonnegative


@dataclass(frozen=True)
class Witness:
    t: Fraction
    m: int
    minor: Fraction


DEFAULT_WITNESS_TS = (Fraction(1, 2), Fraction(2), Fraction(1, 3), Fraction(3), Fraction(1))


def dtilde_not_pd_witness(t: Rational | None = None, m_max: int = 8) -> Witness:
    """Find a negative leading Hankel minor of ``P^Dtilde_n(t)``.

    With ``t`` given, search only that parameter; otherwise try a fixed list.
    """
    ts: Sequence[Fraction] = (_f(t),) if t is not None else DEFAULT_WITNESS_TS
    for tt in ts:
        minors = hankel_minors(moment_sequence(Family.DTILDE, tt, 2 * m_max - 1), m_max)
        for k, d in enumerate(minors):
            if d < 0:
                return Witness(tt, k + 1, d)
    raise SearchExhausted(f"no negative minor up to order {m_max} for t in {[str(x) for x in ts]}")


@dataclass(frozen=True)
class ExploratoryScan:
    """Hankel minors of the shifted complementary sequence for 0 < t < 1.

    No claim is made either way about positive definiteness in this range;
    the minors are reported as computed and the verdict is always inconclusive.
    """

    t: Fraction
    minors: tuple[Fraction, ...]
    verdict: str = "inconclusive"


def nu_exploratory_scan(t: Rational, m: int) -> ExploratoryScan:
    t = _f(t)
    if not 0 < t < 1:
        raise ValueError("the exploratory scan is for 0 < t < 1")
    return ExploratoryScan(t, tuple(hankel_minors(moment_sequence("NU", t, 2 * m - 1), m)))
