"""Closed-form colour bounds, evaluated with exact integer arithmetic."""

from __future__ import annotations

from functools import lru_cache

__all__ = [
    "floor_log2",
    "ceil_log2",
    "theorem1_bound",
    "h",
    "h_table",
    "lower_bound",
    "td_cycle",
    "td_path",
    "conjectured_f",
    "deletion_bound",
    "bound_row",
    "bound_table_csv",
    "CSV_HEADER",
]

CSV_HEADER = "k,theorem1,h,lower,td_cycle,td_path,conjectured_f"


def _need(value: int, least: int, name: str) -> None:
    if value < least:
        raise ValueError(f"{name} must be >= {least}, got {value}")


def floor_log2(x: int) -> int:
    _need(x, 1, "x")
    return x.bit_length() - 1


def ceil_log2(x: int) -> int:
    _need(x, 1, "x")
    return (x - 1).bit_length()


def theorem1_bound(k: int) -> int:
    """floor(3 log2 k): the largest t with 2**t <= k**3."""
    _need(k, 2, "k")
    return floor_log2(k**3)


@lru_cache(maxsize=None)
def h(k: int) -> int:
    """2 for k = 2, 5 for 3 <= k <= 9, else h(ceil((k - 7) / 2)) + 3."""
    _need(k, 2, "k")
    if k == 2:
        return 2
    if k <= 9:
        return 5
    return h((k - 6) // 2) + 3


def h_table(kmax: int) -> list[int]:
    """``[h(0), h(1), ..., h(kmax)]`` built bottom-up; entries 0 and 1 are unused."""
    table = [0, 0] + [0] * max(0, kmax - 1)
    for k in range(2, kmax + 1):
        table[k] = 2 if k == 2 else 5 if k <= 9 else table[(k - 6) // 2] + 3
    return table


def lower_bound(k: int) -> int:
    """floor(log2 k) + 1 colours are necessary even for bounded monochromatic degree."""
    _need(k, 2, "k")
    return floor_log2(k) + 1


def td_cycle(m: int) -> int:
    """Tree-depth of the cycle on ``m`` vertices: 1 + ceil(log2 m)."""
    _need(m, 3, "m")
    return 1 + ceil_log2(m)


def td_path(m: int) -> int:
    """Tree-depth of the path on ``m`` vertices: ceil(log2(m + 1))."""
    _need(m, 1, "m")
    return ceil_log2(m + 1)


def conjectured_f(k: int) -> int:
    _need(k, 2, "k")
    return ceil_log2(k + 1)


def deletion_bound(k: int) -> int:
    """max(2, ceil((k - 7) / 2)): circumference left after deleting a longest cycle."""
    _need(k, 2, "k")
    return max(2, (k - 6) // 2)


def bound_row(k: int) -> tuple[int, ...]:
    return (k, theorem1_bound(k), h(k), lower_bound(k), td_cycle(k + 1), td_path(k + 1),
            conjectured_f(k))


def bound_table_csv(kmax: int) -> str:
    _need(kmax, 2, "kmax")
    lines = [CSV_HEADER]
    lines.extend(",".join(map(str, bound_row(k))) for k in range(2, kmax + 1))
    return "\n".join(lines) + "\n"
