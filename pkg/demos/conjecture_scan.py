"""
Unimodality and diagonal growth, checked empirically
====================================================

Rows of D and Dtilde look unimodal and their diagonals look increasing.
This scans a finite range; it is evidence, not proof.
"""

from eulerian import triangles

report = triangles.scan_conjectures(25)
print(report.summary())

###############################################################################
# A closer look at one diagonal, D(n+k, k) for k = 2.

print([triangles.coupled_rows_d(n + 2)[0][2] for n in range(10)])
