"""Exhaustive enumeration of S_n, B_n, D_n and the coset B_n minus D_n.

Two paths produce descent histograms:

* :func:`enumerate_group` yields :class:`SignedPermutation` objects one by one.
  It is slow but obviously correct and is what the small-n tests compare
  against.
* :func:`brute_triangle` vectorises the same enumeration with numpy, chunked
  over ranges of the underlying permutation index. Chunks are independent, so
  they can be farmed out to worker processes and the histograms summed.

Enumeration order is fixed: permutations of ``1..n`` in lexicographic order,
and for each one the ``2**n`` sign masks in increasing binary order, bit ``i``
of the mask negating position ``i + 1``.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

import numpy as np

from .errors import BudgetExceeded, UnsupportedCase
from .triangles import Family, Row

DEFAULT_BUDGET = 10**8
BUDGET_ENV = "EULERIAN_ENUM_BUDGET"

# Rows 0 and 1 of the Brenti variant cannot be produced by the statistic
# (it reads sigma(2)); these are the values the published triangle shows.
BRENTI_SMALL_ROWS: dict[int, Row] = {0: (1,), 1: (1, 1)}

_KINDS = {"S": Family.A, "A": Family.A, "B": Family.B, "D": Family.D,
          "DTILDE": Family.DTILDE, "BRENTID": Family.BRENTI_D}


def parse_kind(kind: "str | Family") -> Family:
    if isinstance(kind, Family):
        return kind
    try:
        return _KINDS[str(kind).upper()]
    except KeyError:
        raise ValueError(f"unknown group kind {kind!r}") from None


@dataclass(frozen=True)
class SignedPermutation:
    """Values ``sigma(1..n)``; ``sigma(-k) = -sigma(k)`` and ``sigma(0) = 0`` are implied."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(abs(v) for v in self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"{self.image} is not a signed permutation")

    @property
    def n(self) -> int:
        return len(self.image)

    @property
    def parity(self) -> int:
        return sum(v < 0 for v in self.image) % 2

    @property
    def in_d(self) -> bool:
        return self.parity == 0

    def __neg__(self) -> "SignedPermutation":
        return SignedPermutation(tuple(-v for v in self.image))

    def remove_max_letter(self) -> "SignedPermutation":
        """Delete the entry equal to +n or -n, giving an element of B_{n-1}."""
        n = self.n
        return SignedPermutation(tuple(v for v in self.image if abs(v) != n))


def group_order(kind: "str | Family", n: int) -> int:
    fam = parse_kind(kind)
    if fam is Family.A:
        return factorial(n)
    if fam is Family.B:
        return 2**n * factorial(n)
    if n == 0:
        return 1 if fam in (Family.D, Family.BRENTI_D) else 0
    return 2 ** (n - 1) * factorial(n)


def enumerate_group(
    kind: "str | Family", n: int, start: int = 0, stop: int | None = None
) -> Iterator[SignedPermutation]:
    """Yield every element of the group once.

    ``start``/``stop`` restrict to a range of permutation indices (lexicographic
    rank of ``|sigma|``), which partitions the group for parallel work.
    """
    fam = parse_kind(kind)
    if fam is Family.BRENTI_D:
        fam = Family.D
    if n < 0:
        raise ValueError("n must be non-negative")
    perms = itertools.islice(itertools.permutations(range(1, n + 1)), start, stop)
    for p in perms:
        if fam is Family.A:
            yield SignedPermutation(p)
            continue
        for mask in range(2**n):
            parity = bin(mask).count("1") % 2
            if fam is Family.D and parity or fam is Family.DTILDE and not parity:
                continue
            yield SignedPermutation(
                tuple(-v if mask >> i & 1 else v for i, v in enumerate(p))
            )


def descent_count(seq: Sequence[float]) -> int:
    if len(seq) == 0:
        raise ValueError("descent count of an empty sequence")
    return sum(a > b for a, b in zip(seq, seq[1:]))


def statistic_type_b(sigma: SignedPermutation) -> int:
    return descent_count((0,) + sigma.image)


def statistic_brenti_d(sigma: SignedPermutation) -> int:
    if sigma.n < 2:
        raise UnsupportedCase("the Brenti statistic needs n >= 2")
    return descent_count((-sigma.image[1],) + sigma.image)


def statistic_type_a(sigma: SignedPermutation) -> int:
    return descent_count(sigma.image) if sigma.n else 0


def histogram_by_stream(kind: "str | Family", n: int) -> Row:
    """Reference histogram from the object stream; use only for small n."""
    fam = parse_kind(kind)
    if fam is Family.BRENTI_D and n < 2:
        return BRENTI_SMALL_ROWS[n]
    stat = {Family.A: statistic_type_a, Family.BRENTI_D: statistic_brenti_d}.get(fam, statistic_type_b)
    counts = [0] * (n + 1)
    for sigma in enumerate_group(fam, n):
        counts[stat(sigma)] += 1
    return tuple(counts)


# -- vectorised path --------------------------------------------------------


def enumeration_budget() -> int:
    value = os.environ.get(BUDGET_ENV)
    return int(value) if value else DEFAULT_BUDGET


def _sign_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    masks = np.arange(2**n, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(n)) & 1
    signs = (1 - 2 * bits).astype(np.int8)
    parity = (bits.sum(axis=1) % 2).astype(np.int64)
    return signs, parity


def histogram_partition(kind: "str | Family", n: int, start: int, stop: int) -> np.ndarray:
    """Counts indexed ``[parity, descents]`` over permutations ``start:stop``.

    For kind S the parity axis is always 0. For BrentiD the full B_n histogram
    of the Brenti statistic is returned; callers keep the parity-0 half.
    """
    fam = parse_kind(kind)
    out = np.zeros((2, n + 1), dtype=np.int64)
    perms = np.array(
        list(itertools.islice(itertools.permutations(range(1, n + 1)), start, stop)),
        dtype=np.int8,
    ).reshape(-1, n)
    if len(perms) == 0:
        return out
    if fam is Family.A:
        desc = (perms[:, :-1] > perms[:, 1:]).sum(axis=1)
        out[0] += np.bincount(desc, minlength=n + 1)
        return out

    signs, parity = _sign_table(n)
    seq = perms[:, None, :] * signs[None, :, :]  # (perms, masks, n)
    desc = (seq[..., :-1] > seq[..., 1:]).sum(axis=-1)
    if fam is Family.BRENTI_D:
        desc += -seq[..., 1] > seq[..., 0]
    else:
        desc += seq[..., 0] < 0
    key = parity[None, :] * (n + 1) + desc
    out += np.bincount(key.ravel(), minlength=2 * (n + 1)).reshape(2, n + 1)
    return out


def _chunks(total: int, size: int) -> list[tuple[int, int]]:
    return [(a, min(a + size, total)) for a in range(0, total, size)]


def brute_triangle(
    kind: "str | Family",
    n: int,
    budget: int | None = None,
    workers: int = 1,
    chunk: int = 2048,
) -> Row:
    """Histogram of the kind's descent statistic over its group.

    ``S`` counts descents of ``(sigma(1), ..., sigma(n))``; B, D and Dtilde count
    descents of ``(0, sigma(1), ..., sigma(n))``; BrentiD counts descents of
    ``(-sigma(2), sigma(1), ..., sigma(n))`` over D_n.
    """
    fam = parse_kind(kind)
    if n < 0:
        raise ValueError("n must be non-negative")
    if fam is Family.BRENTI_D and n < 2:
        return BRENTI_SMALL_ROWS[n]
    budget = enumeration_budget() if budget is None else budget
    size = factorial(n) if fam is Family.A else 2**n * factorial(n)
    if size > budget:
        raise BudgetExceeded(f"{fam.value} at n={n} enumerates {size} elements, budget is {budget}")
    if n == 0:
        return (0,) if fam is Family.DTILDE else (1,)

    parts = _chunks(factorial(n), chunk)
    if workers > 1 and len(parts) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hists = list(pool.map(histogram_partition, *zip(*((fam, n, a, b) for a, b in parts))))
    else:
        hists = [histogram_partition(fam, n, a, b) for a, b in parts]
    hist = sum(hists, np.zeros((2, n + 1), dtype=np.int64))

    if fam in (Family.A, Family.D, Family.BRENTI_D):
        counts = hist[0]
    elif fam is Family.DTILDE:
        counts = hist[1]
    else:
        counts = hist.sum(axis=0)
    return tuple(int(c) for c in counts)
