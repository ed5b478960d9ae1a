"""
Eulerian polynomials as moment sequences
========================================

For t >= 0 the numbers P_n(t) are moments of an explicit probability measure.
Atom series are summed exactly until a rational tail bound falls under the
tolerance, so every reported moment comes with a certificate.
"""

from fractions import Fraction

from eulerian import moments
from eulerian.polynomials import eulerian_poly, evaluate

###############################################################################
# Type B at t = 1/2: atoms (1-t) t^k at (2k+1)(1-t).

mu = moments.measure_for("B", Fraction(1, 2))
for n in range(6):
    m = moments.moment(mu, n, Fraction(1, 10**12))
    exact = evaluate(eulerian_poly("B", n), Fraction(1, 2))
    print(n, float(m.value), float(m.bound), exact)

###############################################################################
# At t = 1 the measures are gamma densities and the moments are exact.

for fam in ("A", "B", "D"):
    mu = moments.measure_for(fam, 1)
    print(fam, [str(moments.moment(mu, n).value) for n in range(6)])

###############################################################################
# The shifted complementary sequence P^Dtilde_{n+1}(t)/t has its own measure
# for t >= 1.

print(moments.nu_check(2, 8).passed)

###############################################################################
# Positive definiteness through exact Hankel minors.

for fam in ("A", "B", "D", "Dtilde"):
    v = moments.hankel_verdict(fam, Fraction(1, 2), 5)
    print(fam, [str(d) for d in v.minors])

###############################################################################
# The unshifted complementary sequence starts with 0, so its order-2 minor is
# -P_1(t)^2 < 0.

print(moments.dtilde_not_pd_witness(Fraction(2)))

###############################################################################
# For 0 < t < 1 nothing is claimed about the shifted sequence; this is just
# what the minors are.

print(moments.nu_exploratory_scan(Fraction(1, 2), 4))
