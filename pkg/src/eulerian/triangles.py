"""Eulerian number triangles of types A, B, D and the complementary D-tilde.

Every entry is a Python ``int``; nothing in this module touches floating point.
Rows are built incrementally from the previous row and cached, so asking for
row 30 after row 29 costs one recurrence step.

Row ``n`` always has ``n + 1`` entries. For type A this means the trailing
``A(n, n) = 0`` column is kept, which lets the cross-family identities work on
uniformly shaped rows.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Callable, Sequence

Row = tuple[int, ...]


class Family(str, enum.Enum):
    A = "A"
    B = "B"
    D = "D"
    DTILDE = "Dtilde"
    BRENTI_D = "BrentiD"

    @classmethod
    def parse(cls, value: "str | Family") -> "Family":
        if isinstance(value, Family):
            return value
        for member in cls:
            if member.value.lower() == str(value).lower():
                return member
        raise ValueError(f"unknown family {value!r}")


# -- row caches -------------------------------------------------------------


class _RowCache:
    """Append-only list of rows; row n is derived from row n - 1 only."""

    def __init__(self, first, step: Callable[[int, object], object]):
        self._rows = [first]
        self._step = step
        self._lock = threading.Lock()

    def get(self, n: int):
        if n < 0:
            raise ValueError(f"row index must be non-negative, got {n}")
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    m = len(self._rows)
                    self._rows.append(self._step(m, self._rows[m - 1]))
        return self._rows[n]


def _step_a(n: int, prev: Row) -> Row:
    row = [0] * (n + 1)
    row[0] = 1
    for k in range(1, n):
        row[k] = (n - k) * prev[k - 1] + (k + 1) * prev[k]
    return tuple(row)


def _step_b(n: int, prev: Row) -> Row:
    row = [0] * (n + 1)
    row[0] = row[n] = 1
    for k in range(1, n):
        row[k] = (2 * n - 2 * k + 1) * prev[k - 1] + (2 * k + 1) * prev[k]
    return tuple(row)


def _step_coupled(n: int, prev: tuple[Row, Row]) -> tuple[Row, Row]:
    pd, pt = prev
    d = [0] * (n + 1)
    dt = [0] * (n + 1)
    d[0], dt[0] = 1, 0
    d[n], dt[n] = (1, 0) if n % 2 == 0 else (0, 1)
    for k in range(1, n):
        d[k] = (k + 1) * pd[k] + (n - k) * pd[k - 1] + k * pt[k] + (n - k + 1) * pt[k - 1]
        dt[k] = (k + 1) * pt[k] + (n - k) * pt[k - 1] + k * pd[k] + (n - k + 1) * pd[k - 1]
    return tuple(d), tuple(dt)


def _independent_step(sign: int) -> Callable[[int, Row], Row]:
    def step(n: int, prev: Row) -> Row:
        row = [0] * (n + 1)
        row[0] = 1 if sign > 0 else 0
        row[n] = (1 + sign * (-1) ** n) // 2
        for k in range(1, n):
            row[k] = (
                (2 * k + 1) * prev[k]
                + (2 * n - 2 * k + 1) * prev[k - 1]
                + sign * comb(n - 1, k - 1) * (-1) ** k
            )
        return tuple(row)

    return step


_A = _RowCache((1,), _step_a)
_B = _RowCache((1,), _step_b)
_DD = _RowCache(((1,), (0,)), _step_coupled)
_D_IND = _RowCache((1,), _independent_step(+1))
_DT_IND = _RowCache((0,), _independent_step(-1))


# -- public row constructors ------------------------------------------------


def row_a(n: int) -> Row:
    """Row ``[A(n,0), ..., A(n,n)]`` of the classical Eulerian triangle."""
    return _A.get(n)


def row_b(n: int) -> Row:
    """Row ``[B(n,0), ..., B(n,n)]`` of the type B triangle."""
    return _B.get(n)


def coupled_rows_d(n: int) -> tuple[Row, Row]:
    """Rows n of D and D-tilde, computed jointly by the four-term coupled recurrence."""
    return _DD.get(n)


def independent_row_d(n: int, family: "Family | str") -> Row:
    """Row n of D or D-tilde from its own three-term recurrence (binomial correction)."""
    family = Family.parse(family)
    if family is Family.D:
        return _D_IND.get(n)
    if family is Family.DTILDE:
        return _DT_IND.get(n)
    raise ValueError(f"independent recurrence exists only for D and Dtilde, not {family.value}")


def _check_k(n: int, k: int) -> None:
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")


def closed_form_a(n: int, k: int) -> int:
    _check_k(n, k)
    return sum((-1) ** (k - j) * comb(n + 1, k - j) * (j + 1) ** n for j in range(k + 1))


def closed_form_b(n: int, k: int) -> int:
    _check_k(n, k)
    return sum((-1) ** (k - j) * comb(n + 1, k - j) * (2 * j + 1) ** n for j in range(k + 1))


def d_from_b(n: int, k: int, family: "Family | str") -> int:
    """D(n,k) or D-tilde(n,k) as half of ``B(n,k) +/- (-1)^k C(n,k)``."""
    _check_k(n, k)
    family = Family.parse(family)
    if family not in (Family.D, Family.DTILDE):
        raise ValueError(f"d_from_b needs D or Dtilde, not {family.value}")
    sign = 1 if family is Family.D else -1
    total = row_b(n)[k] + sign * (-1) ** k * comb(n, k)
    if total % 2:
        raise ArithmeticError(f"B({n},{k}) and C({n},{k}) have different parity")
    return total // 2


def entry(family: "Family | str", n: int, k: int) -> int:
    """Single entry lookup; k outside 0..n is an error, never a silent zero."""
    _check_k(n, k)
    return row(family, n)[k]


def row(family: "Family | str", n: int, route: str = "recurrence") -> Row:
    """Row n of any triangle by the named route.

    Routes: ``recurrence`` (all families except BrentiD), ``closed`` (A, B),
    ``derived`` (D, Dtilde via B), ``independent`` (D, Dtilde).
    """
    family = Family.parse(family)
    if n < 0:
        raise ValueError(f"row index must be non-negative, got {n}")
    if route == "recurrence":
        if family is Family.A:
            return row_a(n)
        if family is Family.B:
            return row_b(n)
        if family is Family.D:
            return coupled_rows_d(n)[0]
        if family is Family.DTILDE:
            return coupled_rows_d(n)[1]
    elif route == "closed":
        if family is Family.A:
            return tuple(closed_form_a(n, k) for k in range(n + 1))
        if family is Family.B:
            return tuple(closed_form_b(n, k) for k in range(n + 1))
    elif route == "derived":
        if family in (Family.D, Family.DTILDE):
            return tuple(d_from_b(n, k, family) for k in range(n + 1))
    elif route == "independent":
        if family in (Family.D, Family.DTILDE):
            return independent_row_d(n, family)
    else:
        raise ValueError(f"unknown route {route!r}")
    raise ValueError(f"route {route!r} is not available for family {family.value}")


# -- Triangle value type ----------------------------------------------------


@dataclass(frozen=True)
class Triangle:
    family: Family
    rows: tuple[Row, ...] = field(default_factory=tuple)

    @classmethod
    def build(cls, family: "Family | str", n_max: int, route: str = "recurrence") -> "Triangle":
        family = Family.parse(family)
        return cls(family, tuple(row(family, n, route) for n in range(n_max + 1)))

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        if not 0 <= n < len(self.rows):
            raise IndexError(f"row {n} not in triangle (0..{self.n_max})")
        if not 0 <= k <= n:
            raise IndexError(f"column {k} outside 0..{n}")
        return self.rows[n][k]

    def invariant_violations(self) -> list[str]:
        """Shape, sign, boundary and row-sum checks; empty list when all hold."""
        out = []
        fam = self.family
        for n, r in enumerate(self.rows):
            if len(r) != n + 1:
                out.append(f"row {n}: length {len(r)}")
                continue
            if any(v < 0 for v in r):
                out.append(f"row {n}: negative entry")
            expected_sum = _expected_row_sum(fam, n)
            if expected_sum is not None and sum(r) != expected_sum:
                out.append(f"row {n}: sum {sum(r)} != {expected_sum}")
            for label, got, want in _boundaries(fam, n, r):
                if got != want:
                    out.append(f"row {n}: {label} = {got}, expected {want}")
        return out


def _expected_row_sum(family: Family, n: int) -> int | None:
    if family is Family.A:
        return factorial(n)
    if family is Family.B:
        return 2**n * factorial(n)
    if family in (Family.D, Family.DTILDE, Family.BRENTI_D):
        return 2 ** (n - 1) * factorial(n) if n >= 1 else None
    return None


def _boundaries(family: Family, n: int, r: Sequence[int]):
    if family is Family.A:
        yield "T(n,0)", r[0], 1
        if n >= 1:
            yield "T(n,n)", r[n], 0
    elif family is Family.B:
        yield "T(n,0)", r[0], 1
        yield "T(n,n)", r[n], 1
    elif family is Family.D:
        yield "T(n,0)", r[0], 1
        yield "T(n,n)", r[n], 1 if n % 2 == 0 else 0
    elif family is Family.DTILDE:
        yield "T(n,0)", r[0], 0
        if n >= 1:
            yield "T(n,n)", r[n], 0 if n % 2 == 0 else 1


# -- structural checks ------------------------------------------------------


def difference_check(n: int) -> bool:
    d, dt = coupled_rows_d(n)
    return all(d[k] - dt[k] == (-1) ** k * comb(n, k) for k in range(n + 1))


def symmetry_check_d(n: int) -> bool:
    d, dt = coupled_rows_d(n)
    if n % 2 == 0:
        return d == d[::-1] and dt == dt[::-1]
    return d == dt[::-1]


def is_unimodal(values: Sequence[int]) -> bool:
    """Non-decreasing up to some index, non-increasing after it (ties allowed)."""
    i = 1
    while i < len(values) and values[i] >= values[i - 1]:
        i += 1
    while i < len(values) and values[i] <= values[i - 1]:
        i += 1
    return i >= len(values)


@dataclass
class ConjectureReport:
    """Empirical scan of row unimodality and diagonal monotonicity.

    This is evidence over a finite range, not a proof of anything.
    """

    n_max: int
    unimodal: dict[tuple[str, int], bool]
    strict_violations: list[tuple[str, int, int]]  # (diagonal label, k, n where a[n+1] <= a[n])
    weak_violations: list[tuple[str, int, int]]  # (diagonal label, k, n where a[n+1] < a[n])

    @property
    def unimodal_violations(self) -> list[tuple[str, int]]:
        return sorted(key for key, ok in self.unimodal.items() if not ok)

    @property
    def clean(self) -> bool:
        return not (self.unimodal_violations or self.strict_violations or self.weak_violations)

    def summary(self) -> str:
        if self.clean:
            return f"no violations found for n <= {self.n_max} (empirical)"
        return (
            f"violations for n <= {self.n_max} (empirical): "
            f"{len(self.unimodal_violations)} non-unimodal rows, "
            f"{len(self.strict_violations)} strict and {len(self.weak_violations)} weak "
            "monotonicity failures"
        )


def scan_conjectures(n_max: int) -> ConjectureReport:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    rows = {"D": [], "Dtilde": []}
    for n in range(n_max + 1):
        d, dt = coupled_rows_d(n)
        rows["D"].append(d)
        rows["Dtilde"].append(dt)

    unimodal = {}
    for name, tri in rows.items():
        for n, r in enumerate(tri):
            unimodal[(name, n)] = is_unimodal(r)

    strict, weak = [], []
    for name, tri in rows.items():
        for k in range(1, n_max + 1):
            diagonals = {
                f"{name}(n+k,k)": [tri[n + k][k] for n in range(n_max - k + 1)],
                f"{name}(n+k,n)": [tri[n + k][n] for n in range(n_max - k + 1)],
            }
            for label, seq in diagonals.items():
                for n in range(len(seq) - 1):
                    if seq[n + 1] <= seq[n]:
                        strict.append((label, k, n))
                    if seq[n + 1] < seq[n]:
                        weak.append((label, k, n))
    return ConjectureReport(n_max, unimodal, strict, weak)
