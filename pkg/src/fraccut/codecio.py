"""Reading and writing parity-check matrices, cut logs and simulation tables.

alist layout (MacKay's archive)::

    n m
    max_col_deg max_row_deg
    <n column degrees>
    <m row degrees>
    <n lines: 1-based check indices of each column, zero padded>
    <m lines: 1-based variable indices of each row, zero padded>

Dense text layout: a ``m n`` header line followed by ``m`` lines of ``0``/``1``
characters (whitespace between characters is allowed).
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .gf2 import BitMatrix, BitVector


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def _tokens(text: str) -> list[tuple[int, int]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        for tok in line.split():
            try:
                out.append((int(tok), lineno))
            except ValueError:
                raise ParseError(f"expected an integer, got {tok!r}", lineno) from None
    return out


def _lines(text: str) -> list[tuple[int, list[int]]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            out.append((lineno, [int(t) for t in line.split()]))
        except ValueError:
            raise ParseError(f"non-integer entry in {line.strip()!r}", lineno) from None
    return out


def parse_alist(text: str | bytes) -> BitMatrix:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = _lines(text)
    pos = 0

    def take(section: str) -> tuple[int, list[int]]:
        nonlocal pos
        if pos >= len(lines):
            last = lines[-1][0] if lines else 0
            raise ParseError(f"unexpected end of file: missing {section}", last + 1)
        item = lines[pos]
        pos += 1
        return item

    ln, hdr = take("header 'n m'")
    if len(hdr) != 2:
        raise ParseError("header must hold 'n m'", ln)
    n, m = hdr
    if n <= 0 or m <= 0:
        raise ParseError("n and m must be positive", ln)
    ln, maxdeg = take("maximum degrees")
    if len(maxdeg) != 2:
        raise ParseError("second line must hold 'max_col_deg max_row_deg'", ln)
    max_col, max_row = maxdeg

    ln, col_degs = take("column degrees")
    if len(col_degs) != n:
        raise ParseError(f"expected {n} column degrees, found {len(col_degs)}", ln)
    ln, row_degs = take("row degrees")
    if len(row_degs) != m:
        raise ParseError(f"expected {m} row degrees, found {len(row_degs)}", ln)
    if max(col_degs) > max_col or max(row_degs) > max_row:
        raise ParseError("a degree exceeds the declared maximum", ln)

    def block(count: int, degs: list[int], bound: int, what: str) -> list[list[int]]:
        out = []
        for k in range(count):
            ln, entries = take(f"{what} entry block ({what} {k + 1} of {count})")
            nz = [e for e in entries if e != 0]
            if any(e < 0 or e > bound for e in nz):
                raise ParseError(f"{what} {k + 1}: index out of range 1..{bound}", ln)
            if len(nz) != degs[k]:
                raise ParseError(f"{what} {k + 1}: declared degree {degs[k]}, found {len(nz)} entries", ln)
            if len(set(nz)) != len(nz):
                raise ParseError(f"{what} {k + 1}: repeated index", ln)
            out.append(nz)
        return out

    cols = block(n, col_degs, m, "column")
    rows = block(m, row_degs, n, "row")
    from_cols = {(i - 1, j) for j, c in enumerate(cols) for i in c}
    from_rows = {(i, j - 1) for i, r in enumerate(rows) for j in r}
    if from_cols != from_rows:
        i, j = min(from_cols ^ from_rows)
        raise ParseError(f"column and row lists disagree at entry (row {i + 1}, column {j + 1})")
    vecs = [BitVector.from_support(n, [j - 1 for j in r]) for r in rows]
    return BitMatrix(n, tuple(vecs))


def write_alist(H: BitMatrix) -> str:
    rows = [[j + 1 for j in r.support()] for r in H.rows]
    cols: list[list[int]] = [[] for _ in range(H.n)]
    for i, r in enumerate(rows):
        for j in r:
            cols[j - 1].append(i + 1)
    col_degs = [len(c) for c in cols]
    row_degs = [len(r) for r in rows]
    out = [f"{H.n} {H.m}", f"{max(col_degs)} {max(row_degs)}",
           " ".join(map(str, col_degs)), " ".join(map(str, row_degs))]
    # an all-zero column or row gets a lone padding zero so that its line survives
    out += [" ".join(map(str, c)) or "0" for c in cols]
    out += [" ".join(map(str, r)) or "0" for r in rows]
    return "\n".join(out) + "\n"


def parse_dense(text: str | bytes) -> BitMatrix:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [(k, ln.strip()) for k, ln in enumerate(text.splitlines(), 1) if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty matrix file", 1)
    k, hdr = lines[0]
    try:
        m, n = (int(t) for t in hdr.split())
    except ValueError:
        raise ParseError("header must hold 'm n'", k) from None
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"expected {m} rows, found {len(body)}", body[-1][0] if body else k)
    vecs = []
    for k, ln in body:
        bits = ln.replace(" ", "").replace("\t", "")
        if len(bits) != n or set(bits) - {"0", "1"}:
            raise ParseError(f"row must be {n} characters of 0/1", k)
        vecs.append(BitVector.from_string(bits))
    return BitMatrix(n, tuple(vecs))


def write_dense(H: BitMatrix) -> str:
    return f"{H.m} {H.n}\n" + "\n".join(str(r) for r in H.rows) + "\n"


def load_matrix(path: str | Path, fmt: str | None = None) -> BitMatrix:
    path = Path(path)
    text = path.read_text()
    fmt = fmt or ("alist" if path.suffix == ".alist" else "dense" if path.suffix == ".txt" else None)
    if fmt is None:
        # MacKay archive files carry no extension; a dense file's rows are bit strings
        first = next((ln for ln in text.splitlines()[1:] if ln.strip()), "")
        fmt = "dense" if len(first.split()) == 1 and len(first.strip()) > 1 and set(first.strip()) <= {"0", "1"} else "alist"
    if fmt == "alist":
        return parse_alist(text)
    if fmt == "dense":
        return parse_dense(text)
    raise ValueError(f"unknown matrix format {fmt!r}")


def save_matrix(H: BitMatrix, path: str | Path, fmt: str | None = None) -> None:
    path = Path(path)
    fmt = fmt or ("dense" if path.suffix == ".txt" else "alist")
    path.write_text(write_alist(H) if fmt == "alist" else write_dense(H))


def format_rational(q: Fraction, digits: int = 3) -> str:
    """``21/8 (2.625)``"""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator} ({float(q):.{digits}f})"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.split("(")[0].strip())


def write_cut_log(log: Iterable) -> str:
    """One JSON object per line for each cut record."""
    lines = []
    for rec in log:
        obj = {
            "iteration": rec.iteration,
            "d_frac_before": format_rational(rec.d_frac_before),
            "d_frac_after": None if rec.d_frac_after is None else format_rational(rec.d_frac_after),
            "gamma_size_before": rec.gamma_size_before,
            "search": rec.method,
            "redundant_row": str(rec.redundant_row),
            "target_vertex": [f"{Fraction(x).numerator}/{Fraction(x).denominator}" for x in rec.target_vertex],
        }
        lines.append(json.dumps(obj))
    return "".join(line + "\n" for line in lines)


def read_cut_log(text: str) -> list:
    from .cutplane import CutRecord

    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        o = json.loads(line)
        out.append(CutRecord(
            o["iteration"],
            tuple(Fraction(x) for x in o["target_vertex"]),
            BitVector.from_string(o["redundant_row"]),
            parse_rational(o["d_frac_before"]),
            None if o["d_frac_after"] is None else parse_rational(o["d_frac_after"]),
            o["gamma_size_before"],
            o.get("search", "echelon"),
        ))
    return out


CSV_HEADER = ("crossover", "trials", "block_errors", "bler", "seed")


def write_sim_csv(points: Sequence) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for p in points:
        w.writerow([repr(p.crossover), p.trials, p.block_errors, f"{p.bler:.6g}", p.seed])
    return buf.getvalue()


def read_sim_csv(text: str) -> list[dict]:
    rows = list(csv.DictReader(io.StringIO(text)))
    for r in rows:
        if tuple(r) != CSV_HEADER:
            raise ParseError(f"unexpected CSV columns {tuple(r)}")
    return [{"crossover": float(r["crossover"]), "trials": int(r["trials"]),
             "block_errors": int(r["block_errors"]), "bler": float(r["bler"]), "seed": int(r["seed"])}
            for r in rows]
