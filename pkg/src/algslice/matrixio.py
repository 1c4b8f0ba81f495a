"""Plain-text matrix files.

Format: optional '#' comment lines (blank lines are ignored too), then a
header line "ROWS COLS", then ROWS lines of COLS whitespace-separated decimal
integers.  Vectors are 1 x n matrices.  :func:`format_matrix` writes the
canonical form (no comments, single spaces, trailing newline), and
``parse_matrix(format_matrix(M)) == M``.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import DimensionMismatch, ParseError
from .exactmat import IntMatrix

_INT = re.compile(r"[+-]?\d+\Z")


def _tokens(line: str):
    for m in re.finditer(r"\S+", line):
        yield m.group(), m.start() + 1


def _int(tok: str, line: int, col: int) -> int:
    if not _INT.match(tok):
        raise ParseError(f"expected an integer, got {tok!r}", line, col)
    return int(tok)


def parse_matrix(text: str) -> IntMatrix:
    lines = [(k + 1, ln) for k, ln in enumerate(text.splitlines())
             if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ParseError("missing 'ROWS COLS' header", 1, 1)
    lineno, header = lines[0]
    toks = list(_tokens(header))
    if len(toks) != 2:
        raise ParseError("header must be 'ROWS COLS'", lineno, 1)
    rows, cols = (_int(t, lineno, c) for t, c in toks)
    if rows < 0 or cols < 0:
        raise ParseError("dimensions must be non-negative", lineno, 1)
    body = lines[1:]
    expected_lines = rows if cols else 0
    if len(body) != expected_lines:
        raise DimensionMismatch(f"header declares {rows} rows, found {len(body)} row lines")
    out = []
    for lineno, ln in body:
        toks = list(_tokens(ln))
        if len(toks) != cols:
            raise DimensionMismatch(f"line {lineno}: expected {cols} entries, found {len(toks)}")
        out.append([_int(t, lineno, c) for t, c in toks])
    if not cols:
        return IntMatrix.zeros(rows, 0)
    return IntMatrix.from_rows(out, cols)


def format_matrix(M: IntMatrix, comments: tuple[str, ...] = ()) -> str:
    head = "".join(f"# {c}\n" for c in comments)
    lines = [f"{M.rows} {M.cols}"]
    if M.cols:
        lines += [" ".join(str(x) for x in M.row(i)) for i in range(M.rows)]
    return head + "\n".join(lines) + "\n"


def read_matrix(path: str | Path) -> IntMatrix:
    return parse_matrix(Path(path).read_text())


def write_matrix(path: str | Path, M: IntMatrix) -> None:
    Path(path).write_text(format_matrix(M))
