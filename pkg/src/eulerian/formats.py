"""Text encodings for triangles: CSV rows, OEIS b-files and JSON.

Values are always written as decimal strings so nothing is lost for entries
beyond 64 bits.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

Rows = Sequence[Sequence[int]]


@dataclass(frozen=True)
class OutputRecord:
    family: str
    n: int
    k: int
    value: str

    @property
    def as_int(self) -> int:
        return int(self.value)


def records(family: str, rows: Rows) -> Iterator[OutputRecord]:
    for n, r in enumerate(rows):
        for k, v in enumerate(r):
            yield OutputRecord(family, n, k, str(v))


def to_csv(rows: Rows) -> str:
    """One line per row: ``n,v0,...,vn``."""
    return "".join(",".join([str(n)] + [str(v) for v in r]) + "\n" for n, r in enumerate(rows))


def from_csv(text: str) -> list[tuple[int, ...]]:
    rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        n, *vals = line.split(",")
        if int(n) != len(rows):
            raise ValueError(f"expected row {len(rows)}, got {n}")
        rows.append(tuple(int(v) for v in vals))
    return rows


def to_bfile(rows: Rows, offset: int = 0) -> str:
    """OEIS b-file: the triangle read by rows, one ``index value`` pair per line."""
    lines = []
    i = offset
    for r in rows:
        for v in r:
            lines.append(f"{i} {v}\n")
            i += 1
    return "".join(lines)


def from_bfile(text: str, offset: int = 0) -> list[tuple[int, ...]]:
    """Inverse of :func:`to_bfile`, assuming row n holds n+1 entries."""
    values = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        idx, val = line.split()
        if int(idx) != offset + len(values):
            raise ValueError(f"non-consecutive b-file index {idx}")
        values.append(int(val))
    rows, pos, n = [], 0, 0
    while pos < len(values):
        if pos + n + 1 > len(values):
            raise ValueError("b-file ends inside a row")
        rows.append(tuple(values[pos : pos + n + 1]))
        pos += n + 1
        n += 1
    return rows


def to_json(rows: Rows) -> str:
    return json.dumps([[str(v) for v in r] for r in rows]) + "\n"


def from_json(text: str) -> list[tuple[int, ...]]:
    return [tuple(int(v) for v in r) for r in json.loads(text)]


ENCODERS = {"csv": to_csv, "bfile": to_bfile, "json": to_json}
DECODERS = {"csv": from_csv, "bfile": from_bfile, "json": from_json}
