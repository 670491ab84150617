"""Text formats for functions and function lists.

Single function::

    n q
    v0 v1 ... v_{2^n - 1}        (verbose)
    v0v1...                      (compact digit string, q <= 10)

A list file has the same ``n q`` header followed by one body per line.
Digit strings are indexed with x1 as the most significant bit.
"""
from __future__ import annotations

from typing import Iterable

from .gbf import GBF


class FormatError(ValueError):
    pass


def _parse_header(line: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
        raise FormatError(f"malformed header {line!r}: expected 'n q'")
    n, q = int(parts[0]), int(parts[1])
    if n < 0 or q < 2 or q % 2:
        raise FormatError(f"malformed header {line!r}: need n >= 0 and even q >= 2")
    return n, q


def _parse_body(body: str, n: int, q: int) -> GBF:
    tokens = body.split()
    if len(tokens) == 1 and n > 0:
        if q > 10:
            raise FormatError("compact digit strings are only legal for q <= 10")
        if not tokens[0].isdigit():
            raise FormatError(f"non-digit character in {tokens[0]!r}")
        vals = [int(c) for c in tokens[0]]
    else:
        try:
            vals = [int(t) for t in tokens]
        except ValueError as exc:
            raise FormatError(f"non-integer value in {body!r}") from exc
    if len(vals) != 1 << n:
        raise FormatError(f"length mismatch: expected {1 << n} values, got {len(vals)}")
    for v in vals:
        if not 0 <= v < q:
            raise FormatError(f"value {v} out of range for q={q}")
    return GBF(n, q, tuple(vals))


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def parse_function(text: str) -> GBF:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty input")
    n, q = _parse_header(lines[0])
    if len(lines) < 2:
        raise FormatError("missing function body")
    return _parse_body(" ".join(lines[1:]), n, q)


def parse_function_list(text: str) -> tuple[int, int, list[GBF]]:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty input")
    n, q = _parse_header(lines[0])
    return n, q, [_parse_body(ln, n, q) for ln in lines[1:]]


def format_body(f: GBF, compact: bool | None = None) -> str:
    if compact is None:
        compact = f.q <= 10
    if compact:
        if f.q > 10:
            raise FormatError("compact digit strings are only legal for q <= 10")
        return f.digits()
    return " ".join(map(str, f.values))


def emit_function(f: GBF, compact: bool | None = None) -> str:
    return f"{f.n} {f.q}\n{format_body(f, compact)}\n"


def emit_function_list(funcs: Iterable[GBF], n: int, q: int, compact: bool | None = None) -> str:
    return f"{n} {q}\n" + "".join(format_body(f, compact) + "\n" for f in funcs)
