"""Text format for vertex colourings.

::

    c <number of distinct colours>
    <v> <colour>        one line per vertex, ascending v
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from .errors import GraphFormatError

__all__ = ["format_colouring", "parse_colouring", "read_colouring", "write_colouring"]


def format_colouring(col: Sequence[int]) -> str:
    lines = [f"c {len(set(col))}"]
    lines.extend(f"{v} {c}" for v, c in enumerate(col))
    return "\n".join(lines) + "\n"


def parse_colouring(text: str | bytes) -> list[int]:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    rows = [line.split() for line in text.split("\n") if line.strip() and not line.startswith("#")]
    if not rows or len(rows[0]) != 2 or rows[0][0] != "c":
        raise GraphFormatError("colouring must start with 'c <num_colours>'")
    try:
        declared = int(rows[0][1])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError:
        raise GraphFormatError("colouring lines must be 'v colour' integer pairs") from None
    col = []
    for expected, (v, c) in enumerate(pairs):
        if v != expected:
            raise GraphFormatError(f"expected vertex {expected}, found {v}")
        if c < 0:
            raise GraphFormatError(f"negative colour at vertex {v}")
        col.append(c)
    if declared != len(set(col)):
        raise GraphFormatError(f"header declares {declared} colours, found {len(set(col))}")
    return col


def read_colouring(path: str | Path) -> list[int]:
    return parse_colouring(Path(path).read_bytes())


def write_colouring(col: Sequence[int], path: str | Path) -> None:
    Path(path).write_bytes(format_colouring(col).encode("utf-8"))
