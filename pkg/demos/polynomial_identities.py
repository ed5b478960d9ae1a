"""
Polynomial identities and generating functions
==============================================

Worpitzky expansions, the relation between type A and type B polynomials,
and the exponential generating functions expanded exactly at rational t.
"""

from fractions import Fraction
from math import factorial

from eulerian import polynomials, series
from eulerian.polynomials import eulerian_poly, evaluate

###############################################################################
# Worpitzky: sum_k C(x+k, n) T(n,k) is a power of x (or of 2x+1). The binomial
# is the falling-factorial polynomial, so x can be any rational.

for fam in ("A", "B", "D", "Dtilde"):
    lhs, rhs = polynomials.worpitzky(fam, 5, Fraction(-3, 2))
    print(f"{fam:7s} lhs={lhs}  rhs={rhs}")

###############################################################################
# (1+t)^(n+1) P^A_n(t) - 2^n t P^A_n(t^2) = P^B_n(t^2), expanded as polynomials.

print([polynomials.ab_relation_check(n) for n in range(10)])

###############################################################################
# The D polynomials also obey a first order recurrence with a derivative term.

p = eulerian_poly("D", 0)
for n in range(1, 6):
    p = polynomials.poly_step_d("D", p, n)
    print(n, [int(c) for c in p.coeffs])

###############################################################################
# Closed-form generating function of type D at t = 1/2, expanded to order 8,
# against P^D_n(1/2) / n! from the triangle.

t = Fraction(1, 2)
f = series.egf_series("D", t, 8)
for n, c in enumerate(f.coeffs):
    print(n, c, c * factorial(n) == evaluate(eulerian_poly("D", n), t))

###############################################################################
# The PDE for f^D holds coefficient by coefficient.

print(all(c == 0 for c in series.egf_pde_residual("D", t, 8).coeffs))
