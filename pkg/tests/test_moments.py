from fractions import Fraction
from math import factorial

import mpmath
import pytest

from eulerian.errors import BudgetExceeded, SearchExhausted, UnsupportedCase
from eulerian.moments import (
    dtilde_not_pd_witness,
    hankel_verdict,
    measure_for,
    mixture,
    moment,
    moment_theorem_check,
    nu_check,
    nu_exploratory_scan,
    positive_definite_check,
)
from eulerian.polynomials import eulerian_poly, evaluate

TS = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1), Fraction(2), Fraction(3)]


def test_measure_examples():
    assert measure_for("A", 0).atoms == ((1, 1),)
    m = measure_for("D", 1)
    assert m.atoms == ((0, Fraction(1, 2)),)
    assert (m.density.coef, m.density.scale, m.density.power) == (Fraction(1, 4), 2, 0)
    b = measure_for("B", 2)
    it = b.iter_atoms()
    assert [next(it) for _ in range(4)] == [(2 * k + 1, Fraction(1, 2 ** (k + 1))) for k in range(4)]


def test_nu_domain():
    with pytest.raises(UnsupportedCase):
        measure_for("NU", Fraction(1, 2))
    with pytest.raises(ValueError):
        measure_for("A", -1)


@pytest.mark.parametrize(
    "family, t",
    [(f, t) for f in "ABD" for t in (Fraction(1, 3), 1, 2, Fraction(7, 2))]
    + [("NU", t) for t in (1, 2, Fraction(7, 2))],
)
def test_total_mass(family, t):
    mass = moment(measure_for(family, t), 0, Fraction(1, 10**12))
    assert abs(mass.value - 1) <= mass.bound


@pytest.mark.parametrize("family", ["A", "B", "D", "NU"])
@pytest.mark.parametrize("t", [Fraction(1, 3), Fraction(5, 2)])
def test_atoms_positive_and_increasing(family, t):
    if family == "NU" and t < 1:
        t = 1 / t
    it = measure_for(family, t).iter_atoms()
    atoms = [next(it) for _ in range(30)]
    assert all(w > 0 for _, w in atoms)
    locs = [x for x, _ in atoms]
    assert locs == sorted(set(locs))


def test_mean_of_type_a():
    assert moment(measure_for("A", Fraction(1, 2)), 1).value == pytest.approx(1, abs=1e-12)


@pytest.mark.parametrize("n", range(11))
def test_gamma_density_exact(n):
    got = moment(measure_for("B", 1), n)
    assert got.exact and got.value == 2**n * factorial(n)
    assert moment(measure_for("A", 1), n).value == factorial(n)


def test_d_at_third():
    got = moment(measure_for("D", Fraction(1, 3)), 4, Fraction(1, 10**10))
    assert abs(got.value - evaluate(eulerian_poly("D", 4), Fraction(1, 3))) <= got.bound


def test_bound_is_certified():
    # true value of the A moment is known exactly; the reported bound must cover the gap
    for t in (Fraction(1, 4), Fraction(3, 4), Fraction(3)):
        for n in (0, 3, 7):
            got = moment(measure_for("A", t), n, Fraction(1, 10**6))
            gap = evaluate(eulerian_poly("A", n), t) - got.value
            assert 0 <= gap <= got.bound <= Fraction(1, 10**6)


def test_moment_against_polylog():
    mpmath.mp.dps = 30
    t, n = Fraction(1, 2), 5
    # (1 - t)^(n+1) / t * Li_{-n}(t)
    expected = (0.5**6 / 0.5) * mpmath.polylog(-n, 0.5)
    assert float(moment(measure_for("A", t), n).value) == pytest.approx(float(expected), rel=1e-10)


def test_iteration_cap():
    with pytest.raises(BudgetExceeded):
        moment(measure_for("B", Fraction(99, 100)), 10, Fraction(1, 10**9), max_terms=50)


@pytest.mark.parametrize("family", ["A", "B", "D"])
@pytest.mark.parametrize("t", TS + [Fraction(0)])
def test_moment_theorems(family, t):
    rep = moment_theorem_check(family, t, 10, Fraction(1, 10**9))
    assert rep.passed, rep.failures


def test_d_at_zero_exact():
    rep = moment_theorem_check("D", 0, 8, Fraction(1, 10**9))
    assert all(v.value == 1 and v.exact for _, v, _ in rep.rows)


@pytest.mark.parametrize("t", [1, 2, 3])
def test_nu(t):
    assert nu_check(t, 10).passed


def test_nu_examples():
    assert moment(measure_for("NU", 1), 0).value == 1
    # 1/4 integral of x^3 e^{-x/2} = 24 = 0 + 13 + 10 + 1
    assert moment(measure_for("NU", 1), 2).value == 24
    got = moment(measure_for("NU", 2), 1, Fraction(1, 10**12))
    assert abs(got.value - 4) <= got.bound


@pytest.mark.parametrize("t", [Fraction(1, 3), Fraction(1, 2), Fraction(2), Fraction(5)])
def test_d_is_mixture_of_b_and_point_mass(t):
    d = mixture((1, measure_for("D", t)), max_atoms=40)
    mix = mixture((Fraction(1, 2), measure_for("B", t)), (Fraction(1, 2), (1 - t, Fraction(1))), max_atoms=41)
    common = sorted(d)[:30]
    assert all(d[x] == mix[x] for x in common)
    if t > 1:
        # the extra point mass sits at a negative location, away from every B atom
        assert 1 - t < 0 and all(x > 0 for x in sorted(d)[1:])


def test_positive_definite():
    assert positive_definite_check("A", 1, 5)
    assert positive_definite_check("D", Fraction(1, 2), 5)
    v = hankel_verdict("A", 0, 3)
    assert v.nonnegative and not v.positive and v.zero_orders == [2, 3]


@pytest.mark.parametrize("family", ["A", "B", "D"])
@pytest.mark.parametrize("t", [Fraction(1, 2), Fraction(1), Fraction(2)])
def test_hankel_positive(family, t):
    assert hankel_verdict(family, t, 6).positive


def test_dtilde_witness():
    for t in (Fraction(1, 2), Fraction(2)):
        w = dtilde_not_pd_witness(t)
        assert w.m == 2 and w.minor < 0
        assert w.minor == -evaluate(eulerian_poly("Dtilde", 1), t) ** 2
    assert dtilde_not_pd_witness().minor < 0
    with pytest.raises(SearchExhausted):
        dtilde_not_pd_witness(0)


def test_exploratory_scan_is_labelled():
    scan = nu_exploratory_scan(Fraction(1, 2), 4)
    assert scan.verdict == "inconclusive"
    assert len(scan.minors) == 4
    with pytest.raises(ValueError):
        nu_exploratory_scan(2, 3)
