"""Plain-text Cayley table and Rees matrix file formats.

Cayley table file::

    3
    0 0 0
    0 1 2
    0 2 1

Rees file (``-`` marks a zero sandwich entry, rows are indexed by Lambda)::

    group 2
    0 1
    1 0
    I 2
    L 2
    0 -
    - 0
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from .errors import SpecParseError
from .semigroup import FiniteSemigroup, ReesSpec, from_table, rees_matrix

ZERO_TOKEN = "-"


def _lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _ints(line: str, where: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise SpecParseError(f"{where}: expected integers, got {line!r}") from None


def _read_table_block(lines: list[str], start: int, n: int, where: str) -> list[list[int]]:
    if len(lines) < start + n:
        raise SpecParseError(f"{where}: expected {n} table rows")
    rows = [_ints(lines[start + k], f"{where} row {k}") for k in range(n)]
    for k, row in enumerate(rows):
        if len(row) != n:
            raise SpecParseError(f"{where} row {k}: expected {n} entries, got {len(row)}")
    return rows


def parse_table(text: str, labels: Optional[list[str]] = None) -> FiniteSemigroup:
    lines = _lines(text)
    if not lines:
        raise SpecParseError("table file is empty")
    header = _ints(lines[0], "table header")
    if len(header) != 1:
        raise SpecParseError("table header must be a single integer n")
    n = header[0]
    rows = _read_table_block(lines, 1, n, "table")
    if len(lines) != n + 1:
        raise SpecParseError(f"table: trailing content after {n} rows")
    return from_table(n, rows, labels)


def render_table(s: FiniteSemigroup) -> str:
    return "\n".join([str(s.n)] + [" ".join(map(str, row)) for row in s.table]) + "\n"


def parse_rees(text: str) -> ReesSpec:
    lines = _lines(text)
    if not lines or not lines[0].startswith("group"):
        raise SpecParseError("rees file must start with 'group <n>'")
    parts = lines[0].split()
    if len(parts) != 2:
        raise SpecParseError("rees header must be 'group <n>'")
    n = _ints(parts[1], "group order")[0]
    group = from_table(n, _read_table_block(lines, 1, n, "group table"))
    pos = 1 + n

    def keyed(key):
        nonlocal pos
        if pos >= len(lines):
            raise SpecParseError(f"rees file: missing '{key} <size>' line")
        toks = lines[pos].split()
        if len(toks) != 2 or toks[0] != key:
            raise SpecParseError(f"rees file: expected '{key} <size>', got {lines[pos]!r}")
        pos += 1
        return _ints(toks[1], key)[0]

    p = keyed("I")
    q = keyed("L")
    rows = lines[pos:]
    if len(rows) != q:
        raise SpecParseError(f"rees file: expected {q} sandwich rows, got {len(rows)}")
    matrix = []
    for lam, line in enumerate(rows):
        toks = line.split()
        if len(toks) != p:
            raise SpecParseError(f"sandwich row {lam}: expected {p} entries, got {len(toks)}")
        matrix.append([None if t == ZERO_TOKEN else _ints(t, f"sandwich row {lam}")[0] for t in toks])
    return ReesSpec(group, p, q, matrix)


def render_rees(spec: ReesSpec) -> str:
    lines = [f"group {spec.group.n}"]
    lines += [" ".join(map(str, row)) for row in spec.group.table]
    lines += [f"I {spec.p}", f"L {spec.q}"]
    lines += [" ".join(ZERO_TOKEN if v is None else str(v) for v in row) for row in spec.matrix]
    return "\n".join(lines) + "\n"


def read_table_file(path) -> FiniteSemigroup:
    return parse_table(Path(path).read_text())


def read_rees_file(path) -> FiniteSemigroup:
    return rees_matrix(parse_rees(Path(path).read_text()))
