"""Exact Eulerian numbers of types A, B and D, their identities and moment measures."""

from .errors import BudgetExceeded, DegenerateParameter, SearchExhausted, UnsupportedCase
from .hankel import hankel_minors
from .moments import (
    Measure,
    dtilde_not_pd_witness,
    measure_for,
    moment,
    moment_theorem_check,
    nu_check,
    positive_definite_check,
)
from .polynomials import Polynomial, eulerian_poly, evaluate, worpitzky
from .series import PowerSeries, egf_pde_check, egf_series
from .signed_permutations import SignedPermutation, brute_triangle, descent_count, enumerate_group
from .triangles import (
    Family,
    Triangle,
    closed_form_a,
    closed_form_b,
    coupled_rows_d,
    d_from_b,
    independent_row_d,
    row_a,
    row_b,
    scan_conjectures,
)

__version__ = "0.1.0"
