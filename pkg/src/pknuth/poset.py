"""Natural unit interval orders on [1, n].

An order is stored through its partition lambda (contained in the staircase
(n-1, ..., 1)) together with a dense relation table.  The rule is

    a < b in P   iff   a <= lambda_{n+1-b}

so every order is naturally labeled.  The two infinite tokens used by the
insertion algorithms sit below and above everything.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

INF = math.inf
NEG_INF = -math.inf

Partition = tuple


class InvalidPartition(ValueError):
    pass


# ---------------------------------------------------------------------------
# partitions

def as_partition(parts: Iterable[int]) -> tuple:
    lam = tuple(int(x) for x in parts)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if any(x <= 0 for x in lam) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise InvalidPartition(f"not a partition: {list(parts)}")
    return lam


def conjugate(lam: Sequence[int]) -> tuple:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def stair(n: int) -> tuple:
    """The staircase (n-1, n-2, ..., 1)."""
    return tuple(range(n - 1, 0, -1))


def contained(lam: Sequence[int], mu: Sequence[int]) -> bool:
    if len(lam) > len(mu):
        return False
    return all(a <= b for a, b in zip(lam, mu))


def partitions_of(n: int) -> Iterator[tuple]:
    """Partitions of n, largest first part first."""
    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for k in range(min(rest, cap), 0, -1):
            for tail in rec(rest - k, k):
                yield (k,) + tail
    yield from rec(n, n)


# ---------------------------------------------------------------------------
# orders

class AbstractPoset:
    """A finite poset on [1, m] given by its strict relation table."""

    __slots__ = ("m", "_lt")

    def __init__(self, m: int, less: Iterable[tuple]):
        table = [[False] * (m + 1) for _ in range(m + 1)]
        for a, b in less:
            if not (1 <= a <= m and 1 <= b <= m) or a == b:
                raise ValueError(f"bad relation {a} < {b} on [1,{m}]")
            table[a][b] = True
        self.m = m
        self._lt = tuple(tuple(row) for row in table)

    def prec(self, a: int, b: int) -> bool:
        return self._lt[a][b]

    def relations(self) -> list:
        return [(a, b) for a in range(1, self.m + 1) for b in range(1, self.m + 1) if self._lt[a][b]]

    def is_valid(self) -> bool:
        """Irreflexive, antisymmetric and transitive."""
        r = range(1, self.m + 1)
        for a in r:
            for b in r:
                if self._lt[a][b] and self._lt[b][a]:
                    return False
                if self._lt[a][b]:
                    if any(self._lt[b][c] and not self._lt[a][c] for c in r):
                        return False
        return all(not self._lt[a][a] for a in r)

    def __eq__(self, other):
        return isinstance(other, AbstractPoset) and self.m == other.m and self._lt == other._lt

    def __hash__(self):
        return hash((self.m, self._lt))

    def __repr__(self):
        rel = ", ".join(f"{a}<{b}" for a, b in self.relations())
        return f"AbstractPoset({self.m}: {rel})"


class UnitIntervalOrder:
    """The natural unit interval order P_{lambda,n}."""

    __slots__ = ("n", "lam", "_lt")

    def __init__(self, lam: Sequence[int], n: int):
        lam = as_partition(lam)
        if n < 0 or not contained(lam, stair(n)):
            raise InvalidPartition(f"{list(lam)} is not contained in Stair({n})")
        self.n = n
        self.lam = lam
        padded = lam + (0,) * (n - len(lam))
        table = [[False] * (n + 1) for _ in range(n + 1)]
        for b in range(1, n + 1):
            bound = padded[n - b] if n - b < len(padded) else 0
            for a in range(1, bound + 1):
                table[a][b] = True
        self._lt = tuple(tuple(row) for row in table)

    # relations ------------------------------------------------------------
    def prec(self, a, b) -> bool:
        """a is below b.  Accepts the infinite tokens."""
        if a == NEG_INF:
            return b != NEG_INF
        if b == INF:
            return a != INF
        if a == INF or b == NEG_INF:
            return False
        return self._lt[a][b]

    def succ(self, a, b) -> bool:
        return self.prec(b, a)

    def comparable(self, a, b) -> bool:
        return self.prec(a, b) or self.prec(b, a)

    def incomparable(self, a, b) -> bool:
        return a != b and not self.comparable(a, b)

    def lessdot(self, a, b) -> bool:
        """a < b as integers but incomparable in P."""
        return a < b and not self.comparable(a, b)

    def relations(self) -> list:
        n = self.n
        return [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if self._lt[a][b]]

    def relation_table(self) -> tuple:
        return self._lt

    def as_abstract(self) -> AbstractPoset:
        return AbstractPoset(self.n, self.relations())

    # serialization ----------------------------------------------------------
    def to_json(self) -> dict:
        return {"n": self.n, "lambda": list(self.lam)}

    @classmethod
    def from_json(cls, obj: dict) -> "UnitIntervalOrder":
        return cls(obj.get("lambda", []), int(obj["n"]))

    def __eq__(self, other):
        return isinstance(other, UnitIntervalOrder) and self.n == other.n and self.lam == other.lam

    def __hash__(self):
        return hash((self.n, self.lam))

    def __repr__(self):
        return f"P_{{{self.lam},{self.n}}}" if self.lam else f"P_{{(),{self.n}}}"


def from_partition(lam: Sequence[int], n: int) -> UnitIntervalOrder:
    return UnitIntervalOrder(lam, n)


def usual_order(n: int) -> UnitIntervalOrder:
    return UnitIntervalOrder(stair(n), n)


def trivial_order(n: int) -> UnitIntervalOrder:
    return UnitIntervalOrder((), n)


def partition_of_table(n: int, prec) -> tuple:
    lam = [sum(1 for x in range(1, n + 1) if prec(x, n + 1 - i)) for i in range(1, n + 1)]
    return as_partition(lam)


def partition_of(order) -> tuple:
    """lambda_i = #{x : x < n+1-i}."""
    if isinstance(order, UnitIntervalOrder):
        return order.lam
    return partition_of_table(order.m, order.prec)


def from_intervals(y: Sequence) -> UnitIntervalOrder:
    """Order of unit intervals [y_i, y_i + 1] with sorted left endpoints."""
    y = list(y)
    if any(y[i] >= y[i + 1] for i in range(len(y) - 1)):
        raise ValueError("left endpoints must be strictly increasing")
    n = len(y)
    lam = partition_of_table(n, lambda a, b: y[a - 1] + 1 < y[b - 1])
    order = UnitIntervalOrder(lam, n)
    # the intervals must realize exactly this order
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            assert order.prec(a, b) == (y[a - 1] + 1 < y[b - 1])
    return order


def canonical_intervals(order: UnitIntervalOrder) -> list:
    """A deterministic interval realization with exact rational endpoints.

    y_1 = 0 and y_j is the midpoint of the window allowed by the earlier
    endpoints: strictly above y_{j-1} and above y_m + 1 for the last
    predecessor m of j, and at most y_{m+1} + 1 (or y_{j-1} + 2 when
    every earlier element is below j).
    """
    n = order.n
    y: list = []
    for j in range(1, n + 1):
        if j == 1:
            y.append(Fraction(0))
            continue
        preds = [a for a in range(1, j) if order.prec(a, j)]
        m = max(preds, default=0)
        low = y[-1]
        if m:
            low = max(low, y[m - 1] + 1)
        high = y[m] + 1 if m + 1 < j else low + 2
        y.append((low + high) / 2)
    return y


def enumerate_orders(n: int) -> Iterator[UnitIntervalOrder]:
    """All natural unit interval orders on [1, n], lexicographic in lambda."""
    bound = stair(n)
    found = []

    def rec(prefix, i):
        found.append(prefix)
        if i >= len(bound):
            return
        cap = min(bound[i], prefix[-1] if prefix else bound[i])
        for k in range(1, cap + 1):
            rec(prefix + (k,), i + 1)

    rec((), 0)
    for lam in sorted(found):
        yield UnitIntervalOrder(lam, n)


# ---------------------------------------------------------------------------
# suborders, ladders and patterns

def restrict(order, subset: Iterable[int]) -> AbstractPoset:
    ys = sorted(subset)
    n = order.n if isinstance(order, UnitIntervalOrder) else order.m
    if any(not 1 <= y <= n for y in ys) or len(set(ys)) != len(ys):
        raise ValueError(f"subset {ys} is not inside [1,{n}]")
    rel = [(i + 1, j + 1) for i, a in enumerate(ys) for j, b in enumerate(ys) if order.prec(a, b)]
    return AbstractPoset(len(ys), rel)


def _as_pattern(pattern) -> AbstractPoset:
    return pattern.as_abstract() if isinstance(pattern, UnitIntervalOrder) else pattern


def avoids(order, pattern) -> bool:
    """No |pattern|-subset restricts (order-preservingly) to pattern."""
    pat = _as_pattern(pattern)
    n = order.n if isinstance(order, UnitIntervalOrder) else order.m
    if pat.m > n:
        return True
    return all(restrict(order, s) != pat for s in itertools.combinations(range(1, n + 1), pat.m))


def is_ladder(order, subset: Iterable[int]) -> bool:
    """Sorted y_1 < ... < y_k with y_i < y_j in P exactly when j - i >= 2."""
    ys = sorted(subset)
    k = len(ys)
    for i in range(k):
        for j in range(i + 1, k):
            if order.prec(ys[i], ys[j]) != (j - i >= 2):
                return False
    return True


def _ladders_from(order: UnitIntervalOrder, start: int, banned: int) -> Iterator[tuple]:
    # depth first, lexicographic
    stack = [(start,)]
    while stack:
        lad = stack.pop()
        yield lad
        last = lad[-1]
        nxt = []
        for z in range(last + 1, order.n + 1):
            if z == banned or order.prec(last, z):
                continue
            if all(order.prec(y, z) for y in lad[:-1]):
                nxt.append(lad + (z,))
        stack.extend(reversed(nxt))


def find_climber(order: UnitIntervalOrder):
    """Return (x, ladder) with y_1 < x < y_k in P and x off the ladder, or None."""
    n = order.n
    for x in range(1, n + 1):
        for y1 in range(1, x):
            if not order.prec(y1, x):
                continue
            for lad in _ladders_from(order, y1, x):
                if order.prec(x, lad[-1]):
                    return x, lad
    return None


def is_ladder_climbing(order: UnitIntervalOrder) -> bool:
    return find_climber(order) is not None


CLIMB_PATTERNS = ((3, 1, 1), 5), ((4, 2, 1, 1), 6)


def climbing_patterns() -> tuple:
    return tuple(UnitIntervalOrder(lam, n) for lam, n in CLIMB_PATTERNS)


def avoids_climbing_patterns(order: UnitIntervalOrder) -> bool:
    return all(avoids(order, p) for p in climbing_patterns())


def satisfies_pitchfork(order: UnitIntervalOrder) -> bool:
    """If b < c in P and a is incomparable to both, then b < a < c."""
    n = order.n
    for b in range(1, n + 1):
        for c in range(b + 1, n + 1):
            if not order.prec(b, c):
                continue
            for a in range(1, n + 1):
                if a in (b, c):
                    continue
                if order.incomparable(a, b) and order.incomparable(a, c) and not b < a < c:
                    return False
    return True


def contains_suborder_shape(order, chain_sizes: tuple) -> bool:
    """Whether P contains an induced disjoint union of chains of the given sizes
    (e.g. (3, 1) or (2, 2)), in any labeling."""
    n = order.n
    total = sum(chain_sizes)
    for subset in itertools.combinations(range(1, n + 1), total):
        for perm in itertools.permutations(subset):
            blocks, pos = [], 0
            for s in chain_sizes:
                blocks.append(perm[pos:pos + s])
                pos += s
            ok = True
            for bi, blk in enumerate(blocks):
                if any(not order.prec(blk[i], blk[i + 1]) for i in range(len(blk) - 1)):
                    ok = False
                    break
                for other in blocks[bi + 1:]:
                    if any(order.comparable(u, v) for u in blk for v in other):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return True
    return False
