"""P-tableaux and standard Young tableaux, stored column by column.

Every column is a tuple read from bottom to top, so the top entry is the
last one.  A tableau is a tuple of such columns, left to right.  This is the
layout the insertion algorithms produce and the one the reading word uses.
"""
from __future__ import annotations

import itertools
from math import factorial
from typing import Iterator, Sequence

from .poset import UnitIntervalOrder, as_partition, conjugate, partitions_of
from .words import finv_count

Columns = tuple


def normalize(columns) -> tuple:
    return tuple(tuple(c) for c in columns if len(c))


def from_rows(rows: Sequence[Sequence]) -> tuple:
    """Rows listed top to bottom; None marks an empty cell (left padding)."""
    width = max((len(r) for r in rows), default=0)
    cols = []
    for j in range(width):
        col = [r[j] for r in rows if j < len(r) and r[j] is not None]
        cols.append(tuple(reversed(col)))
    return normalize(cols)


def to_rows(columns) -> list:
    """Rows top to bottom, top-aligned columns, None for holes."""
    height = max((len(c) for c in columns), default=0)
    rows = []
    for k in range(height):
        row = [c[-1 - k] if k < len(c) else None for c in columns]
        while row and row[-1] is None:
            row.pop()
        rows.append(row)
    return rows


def column_lengths(columns) -> tuple:
    return tuple(len(c) for c in columns)


def has_partition_shape(columns) -> bool:
    lens = column_lengths(columns)
    return all(lens[i] >= lens[i + 1] for i in range(len(lens) - 1))


def shape(columns) -> tuple:
    """The partition (row lengths) of a tableau with partition shape."""
    if not has_partition_shape(columns):
        raise ValueError("columns do not form a partition shape")
    return conjugate(column_lengths(columns))


def entries(columns) -> list:
    return [x for c in columns for x in c]


def reading_word(columns) -> tuple:
    return tuple(entries(columns))


def _is_filling_of(columns, n: int) -> bool:
    ent = entries(columns)
    return len(ent) == n and sorted(ent) == list(range(1, n + 1))


def is_p_chain(order: UnitIntervalOrder, col) -> bool:
    # col is bottom to top: each entry sits above a P-larger one
    return all(order.prec(col[k + 1], col[k]) for k in range(len(col) - 1))


def row_condition(order: UnitIntervalOrder, left, right) -> bool:
    """Adjacent columns: no entry is P-above its right neighbor."""
    for k in range(min(len(left), len(right))):
        if order.succ(left[-1 - k], right[-1 - k]):
            return False
    return True


def is_p_tableau(order: UnitIntervalOrder, columns) -> bool:
    columns = normalize(columns)
    if not has_partition_shape(columns) or not _is_filling_of(columns, order.n):
        return False
    if not all(is_p_chain(order, c) for c in columns):
        return False
    return all(row_condition(order, columns[j], columns[j + 1]) for j in range(len(columns) - 1))


def is_standard(columns, n: int | None = None) -> bool:
    columns = normalize(columns)
    ent = entries(columns)
    n = len(ent) if n is None else n
    if not has_partition_shape(columns) or not _is_filling_of(columns, n):
        return False
    if any(c[k] <= c[k + 1] for c in columns for k in range(len(c) - 1)):
        return False
    for j in range(len(columns) - 1):
        left, right = columns[j], columns[j + 1]
        for k in range(len(right)):
            if left[-1 - k] >= right[-1 - k]:
                return False
    return True


def des(columns) -> frozenset:
    """i such that i+1 lies in a strictly lower row than i."""
    row = {}
    for c in columns:
        for k, x in enumerate(reversed(c)):
            row[x] = k
    n = len(row)
    return frozenset(i for i in range(1, n) if row[i + 1] > row[i])


def superstandard(lam: Sequence[int]) -> tuple:
    """Columns filled with consecutive integers, left to right."""
    lam = as_partition(lam)
    cols, nxt = [], 1
    for length in conjugate(lam):
        cols.append(tuple(range(nxt + length - 1, nxt - 1, -1)))
        nxt += length
    return tuple(cols)


def evacuation(columns) -> tuple:
    """Schutzenberger's evacuation via repeated delta operators."""
    rows = [list(r) for r in to_rows(normalize(columns))]
    n = sum(len(r) for r in rows)
    result = [[None] * len(r) for r in rows]
    for k in range(n):
        # remove the minimum (always at the corner) and slide the hole out
        i = j = 0
        while True:
            right = rows[i][j + 1] if j + 1 < len(rows[i]) else None
            below = rows[i + 1][j] if i + 1 < len(rows) and j < len(rows[i + 1]) else None
            if right is None and below is None:
                break
            if below is None or (right is not None and right < below):
                rows[i][j] = right
                j += 1
            else:
                rows[i][j] = below
                i += 1
        rows[i].pop()
        if not rows[i]:
            rows.pop()
        result[i][j] = n - k
    return from_rows(result)


def hook_count(lam: Sequence[int]) -> int:
    lam = as_partition(lam)
    conj = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= row - j + conj[j] - i - 1
    return factorial(sum(lam)) // prod


def enumerate_syt(lam: Sequence[int]) -> Iterator[tuple]:
    """Standard Young tableaux of shape lam, by placing n, n-1, ... at corners."""
    lam = as_partition(lam)

    def rec(shape_now, filled):
        if sum(shape_now) == 0:
            yield filled
            return
        m = sum(shape_now)
        for i, r in enumerate(shape_now):
            if r and (i + 1 == len(shape_now) or shape_now[i + 1] < r):
                nxt = list(shape_now)
                nxt[i] -= 1
                yield from rec(nxt, filled + [(i, r - 1, m)])

    for cells in rec(list(lam), []):
        rows = [[None] * r for r in lam]
        for i, j, v in cells:
            rows[i][j] = v
        yield from_rows(rows)


def _chains(order: UnitIntervalOrder, pool: tuple, length: int) -> Iterator[tuple]:
    # pool sorted ascending; chains are increasing integer sequences
    def rec(start, acc):
        if len(acc) == length:
            yield tuple(reversed(acc))
            return
        for idx in range(start, len(pool)):
            x = pool[idx]
            if not acc or order.prec(acc[-1], x):
                yield from rec(idx + 1, acc + [x])
    yield from rec(0, [])


def enumerate_p_tableaux(order: UnitIntervalOrder, lam: Sequence[int] | None = None) -> Iterator[tuple]:
    """P-tableaux of shape lam (all shapes when lam is None), built column by
    column with the row condition checked against the previous column."""
    if lam is None:
        for mu in partitions_of(order.n):
            yield from enumerate_p_tableaux(order, mu)
        return
    lam = as_partition(lam)
    if sum(lam) != order.n:
        raise ValueError(f"shape {lam} does not have size {order.n}")
    lengths = conjugate(lam)

    def rec(j, pool, cols):
        if j == len(lengths):
            yield tuple(cols)
            return
        for col in _chains(order, pool, lengths[j]):
            if cols and not row_condition(order, cols[-1], col):
                continue
            rest = tuple(x for x in pool if x not in col)
            yield from rec(j + 1, rest, cols + [col])

    yield from rec(0, tuple(range(1, order.n + 1)), [])


def finv_p_tab(order: UnitIntervalOrder, columns) -> int:
    return finv_count(order, reading_word(columns))


def format_rows(columns, blank: str = "_") -> str:
    """'1,3,2/4' style, rows top to bottom."""
    return "/".join(",".join(blank if x is None else str(x) for x in r) for r in to_rows(columns))


def render(columns) -> str:
    rows = to_rows(columns)
    width = max((len(str(x)) for r in rows for x in r if x is not None), default=1)
    return "\n".join(" ".join((" " * width if x is None else str(x).rjust(width)) for x in r) for r in rows)
