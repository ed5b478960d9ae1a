"""
Eulerian triangles, three ways
==============================

Each triangle can be produced by a recurrence, by a closed formula, and by
simply counting descents over every (signed) permutation. This script builds
the type B and type D triangles all three ways and checks they agree.
"""

from eulerian import triangles
from eulerian.signed_permutations import brute_triangle

###############################################################################
# The classical triangle keeps its trailing zero column, so row n always has
# n + 1 entries.

for n in range(6):
    print(n, triangles.row_a(n))

###############################################################################
# Type B: recurrence against the alternating binomial sum.

for n in range(6):
    rec = triangles.row_b(n)
    closed = tuple(triangles.closed_form_b(n, k) for k in range(n + 1))
    print(n, rec, rec == closed)

###############################################################################
# Type D splits B by parity of the number of negative entries. The two halves
# come out of a coupled recurrence together.

for n in range(6):
    d, dt = triangles.coupled_rows_d(n)
    print(f"{n}: D={d}  Dtilde={dt}")

###############################################################################
# They also follow from B alone: D = (B + (-1)^k C(n,k)) / 2.

n = 7
print(triangles.row("D", n), triangles.row("D", n, "derived"), triangles.independent_row_d(n, "D"))

###############################################################################
# Brute force: histogram the descents of (0, s(1), ..., s(n)) over all
# 2^n n! signed permutations. n = 7 is 645120 elements.

for kind in ("B", "D", "Dtilde"):
    print(kind, brute_triangle(kind, 7) == triangles.row(kind, 7))

###############################################################################
# The Brenti variant counts descents of (-s(2), s(1), ..., s(n)) over D_n and
# gives a different triangle.

for n in range(6):
    print(n, brute_triangle("BrentiD", n))
