"""Batch verification suites used by ``eulerian check`` and the acceptance tests.

Each check returns a :class:`CheckResult`; the first failing case (if any) is
kept as a small dict with whatever of ``n``, ``k``, ``t``, ``x`` applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from . import moments, polynomials, series, triangles
from .errors import SearchExhausted
from .signed_permutations import brute_triangle

# Rows as printed in the source tables.
DISPLAYED_ROWS: dict[str, list[tuple[int, ...]]] = {
    "A": [(1,), (1, 0), (1, 1, 0), (1, 4, 1, 0), (1, 11, 11, 1, 0), (1, 26, 66, 26, 1, 0)],
    "B": [(1,), (1, 1), (1, 6, 1), (1, 23, 23, 1), (1, 76, 230, 76, 1)],
    "D": [(1,), (1, 0), (1, 2, 1), (1, 10, 13, 0), (1, 36, 118, 36, 1)],
    "Dtilde": [(0,), (0, 1), (0, 4, 0), (0, 13, 10, 1), (0, 40, 112, 40, 0)],
    "BrentiD": [(1,), (1, 1), (1, 2, 1), (1, 11, 11, 1), (1, 44, 102, 44, 1)],
}

WORPITZKY_XS = [Fraction(x) for x in range(-6, 7)] + [Fraction(1, 2), Fraction(-3, 2)]
EGF_TS = [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2), Fraction(7, 2)]
MOMENT_TS = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1), Fraction(2), Fraction(3)]
HANKEL_TS = [Fraction(1, 2), Fraction(1), Fraction(2)]

SUITES = ("triangles", "identities", "moments", "conjectures")


@dataclass
class CheckResult:
    name: str
    scope: str
    checked: int = 0
    failure: dict | None = None
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.failure is None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.name} [{self.scope}] checked={self.checked}"
        if self.failure is not None:
            out += " failure=" + ",".join(f"{k}={v}" for k, v in self.failure.items())
        if self.note:
            out += f" ({self.note})"
        return out

    def as_dict(self) -> dict:
        return {
            "identity": self.name,
            "scope": self.scope,
            "passed": self.passed,
            "checked": self.checked,
            "failure": {k: str(v) for k, v in self.failure.items()} if self.failure else None,
            "note": self.note,
        }


def _run(name: str, scope: str, cases: Iterable[tuple[dict, bool]], note: str = "") -> CheckResult:
    res = CheckResult(name, scope, note=note)
    for where, ok in cases:
        res.checked += 1
        if not ok:
            res.failure = where
            break
    return res


def _entries(n_max: int, a: Callable[[int], tuple], b: Callable[[int], tuple]) -> Iterator[tuple[dict, bool]]:
    for n in range(n_max + 1):
        ra, rb = a(n), b(n)
        if len(ra) != len(rb):
            yield {"n": n}, False
            continue
        for k in range(n + 1):
            yield {"n": n, "k": k}, ra[k] == rb[k]


# -- triangles --------------------------------------------------------------


def triangle_suite(n_max: int = 30, brute_max: int = 8) -> list[CheckResult]:
    out = []
    for fam, rows in DISPLAYED_ROWS.items():
        scope = f"family={fam} n<={len(rows) - 1}"
        if fam != "BrentiD":
            out.append(_run("displayed-table/recurrence", scope,
                            _entries(len(rows) - 1, lambda n, f=fam: triangles.row(f, n), lambda n, r=rows: r[n])))
        out.append(_run("displayed-table/brute", scope,
                        _entries(len(rows) - 1, lambda n, f=fam: brute_triangle(f, n), lambda n, r=rows: r[n])))

    out.append(_run("route/A recurrence=closed", f"n<={n_max}",
                    _entries(n_max, triangles.row_a, lambda n: triangles.row("A", n, "closed"))))
    out.append(_run("route/B recurrence=closed", f"n<={n_max}",
                    _entries(n_max, triangles.row_b, lambda n: triangles.row("B", n, "closed"))))
    for fam in ("D", "Dtilde"):
        out.append(_run(f"route/{fam} coupled=independent", f"n<={n_max}",
                        _entries(n_max, lambda n, f=fam: triangles.row(f, n),
                                 lambda n, f=fam: triangles.independent_row_d(n, f))))
        out.append(_run(f"route/{fam} coupled=from-B", f"n<={n_max}",
                        _entries(n_max, lambda n, f=fam: triangles.row(f, n),
                                 lambda n, f=fam: triangles.row(f, n, "derived"))))
    out.append(_run("B=D+Dtilde", f"n<={n_max}",
                    _entries(n_max, triangles.row_b,
                             lambda n: tuple(map(sum, zip(*triangles.coupled_rows_d(n)))))))
    for fam in ("A", "B", "D", "Dtilde"):
        tri = triangles.Triangle.build(fam, n_max)
        bad = tri.invariant_violations()
        out.append(CheckResult("row-sums+boundaries", f"family={fam} n<={n_max}", n_max + 1,
                               {"detail": bad[0]} if bad else None))
    out.append(_run("D-Dtilde=(-1)^k C(n,k)", f"n<={n_max}",
                    (({"n": n}, triangles.difference_check(n)) for n in range(n_max + 1))))
    out.append(_run("D/Dtilde reflection symmetry", f"n<={n_max}",
                    (({"n": n}, triangles.symmetry_check_d(n)) for n in range(n_max + 1))))
    out.append(_run("A(n,k)=A(n,n-k-1)", f"1<=n<={n_max}",
                    (({"n": n, "k": k}, triangles.row_a(n)[k] == triangles.row_a(n)[n - k - 1])
                     for n in range(1, n_max + 1) for k in range(n))))
    for fam in ("S", "B", "D", "Dtilde"):
        analytic = (lambda n: triangles.row_a(n)) if fam == "S" else (lambda n, f=fam: triangles.row(f, n))
        out.append(_run(f"brute-oracle/{fam}", f"n<={brute_max}",
                        _entries(brute_max, lambda n, f=fam: brute_triangle(f, n), analytic)))
    return out


# -- identities -------------------------------------------------------------


def identity_suite(n_max: int = 20, worpitzky_max: int = 15, egf_max: int = 12, pde_order: int = 8) -> list[CheckResult]:
    out = []
    w_max = min(worpitzky_max, n_max)
    for fam in ("A", "B", "D", "Dtilde"):
        def cases(f=fam):
            for n in range(w_max + 1):
                for x in WORPITZKY_XS:
                    lhs, rhs = polynomials.worpitzky(f, n, x)
                    yield {"n": n, "x": x}, lhs == rhs
        out.append(_run(f"worpitzky/{fam}", f"n<={w_max} x in {{-6..6,1/2,-3/2}}", cases()))
    out.append(_run("binomial-alternating", f"n<={n_max} x in {{-6..6,1/2,-3/2}}",
                    (({"n": n, "x": x}, polynomials.binomial_alternating_identity_check(n, x))
                     for n in range(n_max + 1) for x in WORPITZKY_XS)))
    out.append(_run("A-B polynomial relation", f"n<={n_max}",
                    (({"n": n}, polynomials.ab_relation_check(n)) for n in range(n_max + 1))))
    out.append(_run("D,Dtilde = (P^B +/- (1-t)^n)/2", f"n<={n_max}",
                    (({"n": n}, polynomials.db_relation_check(n)) for n in range(n_max + 1))))
    out.append(_run("polynomial symmetry/A", f"1<=n<={n_max}",
                    (({"n": n}, polynomials.symmetry_identity_check("A", n)) for n in range(1, n_max + 1))))
    out.append(_run("polynomial symmetry/B", f"n<={n_max}",
                    (({"n": n}, polynomials.symmetry_identity_check("B", n)) for n in range(n_max + 1))))
    for fam in ("D", "Dtilde"):
        def steps(f=fam):
            p = polynomials.eulerian_poly(f, 0)
            for n in range(1, n_max + 1):
                p = polynomials.poly_step_d(f, p, n)
                yield {"n": n}, p.coeffs == tuple(Fraction(v) for v in triangles.row(f, n))
        out.append(_run(f"derivative recurrence/{fam}", f"1<=n<={n_max}", steps()))
    e_max = min(egf_max, n_max)
    for fam in ("A", "B", "D", "Dtilde"):
        def egf_cases(f=fam):
            for t in EGF_TS:
                got = series.egf_series(f, t, e_max).coeffs
                want = series.egf_from_polynomials(f, t, e_max).coeffs
                for n in range(e_max + 1):
                    yield {"n": n, "t": t}, got[n] == want[n]
        out.append(_run(f"egf/{fam}", f"n<={e_max} t in {{0,1/3,1/2,2,7/2}}", egf_cases()))
    for fam in ("D", "Dtilde"):
        out.append(_run(f"egf-pde/{fam}", f"order={pde_order} t in {{0,1/3,1/2,2,7/2}}",
                        (({"t": t}, series.egf_pde_check(fam, t, pde_order)) for t in EGF_TS)))
    return out


# -- moments ----------------------------------------------------------------


def moment_suite(ts: Iterable[Fraction] = MOMENT_TS, n_max: int = 10, tol=Fraction(1, 10**9),
                 hankel_ts: Iterable[Fraction] = HANKEL_TS, hankel_m: int = 6) -> list[CheckResult]:
    ts = [Fraction(t) for t in ts]
    out = []
    for fam in ("A", "B", "D"):
        for t in ts:
            rep = moments.moment_theorem_check(fam, t, n_max, tol)
            fail = {"n": rep.failures[0], "t": t} if rep.failures else None
            exact = all(v.exact for _, v, _ in rep.rows)
            out.append(CheckResult(f"moments/{fam}", f"t={t} n<={n_max} tol={tol}", len(rep.rows), fail,
                                   "closed form, exact" if exact else "certified tail"))
    for t in (t for t in ts if t >= 1):
        rep = moments.nu_check(t, n_max, tol)
        fail = {"n": rep.failures[0], "t": t} if rep.failures else None
        out.append(CheckResult("moments/NU", f"t={t} n<={n_max} tol={tol}", len(rep.rows), fail))
    for fam in ("A", "B", "D"):
        for t in hankel_ts:
            v = moments.hankel_verdict(fam, t, hankel_m)
            fail = None if v.positive else {"m": (v.negative_orders or v.zero_orders)[0], "t": t}
            out.append(CheckResult(f"hankel-positive/{fam}", f"t={t} m<={hankel_m}", hankel_m, fail))
    for t in (t for t in hankel_ts if t > 0):
        try:
            w = moments.dtilde_not_pd_witness(t)
            out.append(CheckResult("hankel-negative-witness/Dtilde", f"t={t}", 1,
                                   None, f"order {w.m} minor {w.minor}"))
        except SearchExhausted as exc:
            out.append(CheckResult("hankel-negative-witness/Dtilde", f"t={t}", 1, {"t": t, "error": exc}))
    return out


# -- conjectures ------------------------------------------------------------


def conjecture_suite(n_max: int = 25) -> list[CheckResult]:
    rep = triangles.scan_conjectures(n_max)
    res = CheckResult("conjectures (unimodal rows, increasing diagonals)", f"n<={n_max}",
                      len(rep.unimodal), note=rep.summary())
    if rep.unimodal_violations:
        fam, n = rep.unimodal_violations[0]
        res.failure = {"family": fam, "n": n}
    elif rep.strict_violations:
        label, k, n = rep.strict_violations[0]
        res.failure = {"diagonal": label, "k": k, "n": n}
    return [res]


def run_suite(suite: str = "all", n_max: int | None = None, ts: Iterable[Fraction] | None = None,
              tol=Fraction(1, 10**9), brute_max: int = 8) -> list[CheckResult]:
    if suite not in SUITES + ("all",):
        raise ValueError(f"unknown suite {suite!r}")
    chosen = SUITES if suite == "all" else (suite,)
    out: list[CheckResult] = []
    if "triangles" in chosen:
        out += triangle_suite(30 if n_max is None else n_max, brute_max)
    if "identities" in chosen:
        out += identity_suite(20 if n_max is None else n_max)
    if "moments" in chosen:
        mts = MOMENT_TS if ts is None else list(ts)
        hts = HANKEL_TS if ts is None else [t for t in mts if t > 0]
        out += moment_suite(mts, 10 if n_max is None else n_max, tol, hts)
    if "conjectures" in chosen:
        out += conjecture_suite(25 if n_max is None else n_max)
    return out
