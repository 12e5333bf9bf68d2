"""Words over [1, n] plus the infinite token, and their P-statistics.

A word is a tuple written left to right.  Positions in the statistics are
1-based, as usual for permutations.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .poset import INF, UnitIntervalOrder


def is_word(w: Sequence, n: int | None = None) -> bool:
    fin = [x for x in w if x != INF]
    if len(set(fin)) != len(fin):
        return False
    if n is not None and any(not (isinstance(x, int) and 1 <= x <= n) for x in fin):
        return False
    return True


def is_permutation(w: Sequence, n: int | None = None) -> bool:
    n = len(w) if n is None else n
    return len(w) == n and sorted(w) == list(range(1, n + 1))


def finite_part(w: Sequence) -> tuple:
    return tuple(x for x in w if x != INF)


def parse_word(text: str) -> tuple:
    """'9,5,1,inf' -> (9, 5, 1, INF).  A bare digit string such as '3241' is
    read one letter per digit."""
    text = text.strip()
    if not text:
        return ()
    if "," not in text and text.isdigit() and len(text) > 1:
        return tuple(int(c) for c in text)
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok.lower() in ("inf", "oo", "∞"):
            out.append(INF)
        else:
            out.append(int(tok))
    return tuple(out)


def format_word(w: Iterable, sep: str = ",") -> str:
    return sep.join("inf" if x == INF else str(x) for x in w)


def des_p(order: UnitIntervalOrder, w: Sequence[int]) -> frozenset:
    return frozenset(i for i in range(1, len(w)) if order.succ(w[i - 1], w[i]))


def finv_p(order: UnitIntervalOrder, w: Sequence[int]) -> frozenset:
    """Pairs (x, y), x before y, x > y and incomparable."""
    out = set()
    for i, x in enumerate(w):
        for y in w[i + 1:]:
            if x > y and not order.comparable(x, y):
                out.add((x, y))
    return frozenset(out)


def finv_count(order: UnitIntervalOrder, w: Sequence[int]) -> int:
    cnt = 0
    for i, x in enumerate(w):
        for y in w[i + 1:]:
            if x > y and not order.comparable(x, y):
                cnt += 1
    return cnt


def ginv_p(order: UnitIntervalOrder, w: Sequence[int]) -> frozenset:
    """Genuine P-inversions.

    A pair (x, y) with y below x and x before y fails to be genuine exactly
    when some subword x d_1 ... d_k y descends through incomparable steps,
    x > d_1 > ... > d_k > y with each consecutive pair incomparable.  The set
    of letters reachable that way is computed right to left.
    """
    m = len(w)
    reach = [0] * m  # bitmask over positions
    for i in range(m - 1, -1, -1):
        x = w[i]
        mask = 0
        for j in range(i + 1, m):
            y = w[j]
            if x > y and not order.comparable(x, y):
                mask |= (1 << j) | reach[j]
        reach[i] = mask
    out = set()
    for i in range(m):
        for j in range(i + 1, m):
            if order.succ(w[i], w[j]) and not (reach[i] >> j) & 1:
                out.add((w[i], w[j]))
    return frozenset(out)


def longest_chain(pairs: Iterable[tuple]) -> int:
    """Number of letters in a longest chain (a_1,a_2),(a_2,a_3),... of pairs;
    1 for an empty set."""
    succ: dict = {}
    for a, b in pairs:
        succ.setdefault(a, []).append(b)

    @lru_cache(maxsize=None)
    def depth(a):
        return 1 + max((depth(b) for b in succ.get(a, ())), default=0)

    return max((depth(a) for a in succ), default=1)


def ght_p(order: UnitIntervalOrder, w: Sequence[int]) -> int:
    return longest_chain(ginv_p(order, w))


def stats(order: UnitIntervalOrder, w: Sequence[int]) -> dict:
    ginv = ginv_p(order, w)
    finv = finv_p(order, w)
    return {
        "des": sorted(des_p(order, w)),
        "ginv": sorted(ginv, reverse=True),
        "ght": longest_chain(ginv),
        "finv": sorted(finv, reverse=True),
        "finv_count": len(finv),
    }
