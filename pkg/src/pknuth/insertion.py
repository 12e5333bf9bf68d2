"""Column insertion Phi, its X-parameterized companion Psi, the P-Robinson-
Schensted map and its inverse.

Conventions.  A word alpha = (a_m, ..., a_1) is a tuple written left to right,
so a_1 is its last letter and insertion processes it first.  A chain
(c_l, ..., c_1) is a tuple listed bottom to top: c_1 is the P-smallest entry
at the top of the column and comes last.  Position sets such as X use the
same right-to-left indices 1..m.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .poset import INF, NEG_INF, UnitIntervalOrder, conjugate, is_ladder
from .tableaux import evacuation, is_p_tableau, is_standard, normalize, superstandard


class InsertionError(ValueError):
    pass


@dataclass
class Step:
    case: str                 # one of 1a 1b 2a 2b 3a 3b
    p: int                    # position being processed
    r: int | None = None
    hq: tuple | None = None
    chain: tuple = ()         # chain after the step, bottom to top

    def to_json(self) -> dict:
        out = {"case": self.case, "p": self.p, "chain": [_tok(x) for x in self.chain]}
        if self.r is not None:
            out["r"] = self.r
        if self.hq is not None:
            out["hq"] = list(self.hq)
        return out


@dataclass
class StepTrace:
    steps: list = field(default_factory=list)

    @property
    def cases(self) -> list:
        return [s.case for s in self.steps]

    def to_json(self) -> list:
        return [s.to_json() for s in self.steps]


def _tok(x):
    return "inf" if x == INF else x


def _validate(order: UnitIntervalOrder, alpha, c):
    fin = [x for x in alpha if x != INF]
    if len(set(fin)) != len(fin):
        raise InsertionError(f"repeated letters in {alpha}")
    for x in list(fin) + list(c):
        if not (isinstance(x, int) and 1 <= x <= order.n):
            raise InsertionError(f"letter {x} outside [1,{order.n}]")
    if set(fin) & set(c):
        raise InsertionError("word and chain share letters")
    for k in range(len(c) - 1):
        if not order.prec(c[k + 1], c[k]):
            raise InsertionError(f"{tuple(c)} is not a P-chain")


def _insert(order: UnitIntervalOrder, alpha, c, X=frozenset(), trace: StepTrace | None = None):
    alpha = tuple(alpha)
    c = tuple(c)
    _validate(order, alpha, c)
    m = len(alpha)
    a = [None] + list(reversed(alpha))      # a[1..m]
    b = [None] + [INF] * m
    d = [NEG_INF] + list(reversed(c))       # d[0] = -inf, d[1..l] increasing in P
    prec = order.prec
    p = 1

    def snap():
        return tuple(reversed(d[1:]))

    while p <= m:
        ap = a[p]
        if ap == INF:
            if p in X and len(d) > 1:
                b[p] = d.pop(1)
                if trace is not None:
                    trace.steps.append(Step("3b", p, chain=snap()))
            elif trace is not None:
                trace.steps.append(Step("3a", p, chain=snap()))
            p += 1
            continue
        l = len(d) - 1
        r = max(i for i in range(l + 1) if d[i] < ap)
        if prec(d[r], ap):
            if r == l:
                d.append(ap)
                case = "1a"
            else:
                b[p] = d[r + 1]
                d[r + 1] = ap
                case = "1b"
            if trace is not None:
                trace.steps.append(Step(case, p, r=r, chain=snap()))
            p += 1
            continue
        # case 2: lexicographically largest (i, j) making a ladder
        best = None
        for i in range(l - r + 1):
            for j in range(m - p + 1):
                run = a[p:p + j + 1]
                if INF in run or any(run[t] > run[t + 1] for t in range(j)):
                    break
                if is_ladder(order, d[r:r + i + 1] + run):
                    if best is None or (i, j) > best:
                        best = (i, j)
        h, q = best
        old = list(d)
        if a[p + q] < old[r + h]:
            for j in range(q + 1):
                b[p + j] = a[p + j]
            case = "2a"
        else:
            for i in range(h + 1):
                j = min(t for t in range(q + 1) if a[p + t] > old[r + i])
                if i == h:
                    k = q
                else:
                    k = max(t for t in range(q) if a[p + t] < old[r + i + 1])
                b[p + j] = old[r + i]
                for t in range(j, k):
                    b[p + t + 1] = a[p + t]
                d[r + i] = a[p + k]
            case = "2b"
        if trace is not None:
            trace.steps.append(Step(case, p, r=r, hq=(h, q), chain=snap()))
        p += q + 1
    return snap(), tuple(reversed(b[1:]))


def phi(order: UnitIntervalOrder, alpha: Sequence, c: Sequence = (), trace: bool = False):
    """Phi(alpha, c) = (d, beta); with trace=True also returns a StepTrace."""
    tr = StepTrace() if trace else None
    d, beta = _insert(order, alpha, c, frozenset(), tr)
    return (d, beta, tr) if trace else (d, beta)


def psi(order: UnitIntervalOrder, X: Iterable[int], alpha: Sequence, c: Sequence = (), trace: bool = False):
    """Psi_X(alpha, c): as Phi, but an infinite letter at a position in X drags
    the top of the chain into the output word."""
    tr = StepTrace() if trace else None
    d, beta = _insert(order, alpha, c, frozenset(X), tr)
    return (d, beta, tr) if trace else (d, beta)


# ---------------------------------------------------------------------------
# hats

def hat(order: UnitIntervalOrder) -> UnitIntervalOrder:
    return UnitIntervalOrder(conjugate(order.lam), order.n)


def _hat_letter(x, n):
    return x if x == INF else n + 1 - x


def hat_word(w: Sequence, n: int) -> tuple:
    return tuple(_hat_letter(x, n) for x in reversed(tuple(w)))


def hat_chain(c: Sequence, n: int) -> tuple:
    return hat_word(c, n)


def one_a_positions(alpha: Sequence, beta: Sequence) -> frozenset:
    """Right-to-left positions i with a_i finite and b_i infinite."""
    m = len(alpha)
    return frozenset(i for i in range(1, m + 1) if alpha[m - i] != INF and beta[m - i] == INF)


# ---------------------------------------------------------------------------
# P-Robinson-Schensted

@dataclass
class PrsResult:
    pt_columns: tuple
    qt_columns: tuple
    pt_valid: bool
    qt_valid: bool
    traces: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.pt_valid and self.qt_valid

    def to_json(self) -> dict:
        out = {
            "schema_version": 1,
            "pt": {"columns": [list(c) for c in self.pt_columns]},
            "qt": {"columns": [list(c) for c in self.qt_columns]},
            "pt_valid": self.pt_valid,
            "qt_valid": self.qt_valid,
        }
        if self.traces:
            out["trace"] = [t.to_json() for t in self.traces]
        return out


def prs(order: UnitIntervalOrder, w: Sequence, trace: bool = False) -> PrsResult:
    cur = tuple(w)
    m = len(cur)
    pts, qts, traces = [], [], []
    while any(x != INF for x in cur):
        tr = StepTrace() if trace else None
        col, nxt = _insert(order, cur, (), frozenset(), tr)
        pts.append(col)
        qts.append(tuple(sorted(one_a_positions(cur, nxt), reverse=True)))
        if tr is not None:
            traces.append(tr)
        cur = nxt
    pt = tuple(pts)
    qt = tuple(qts)
    fin = [x for x in w if x != INF]
    pt_valid = len(fin) == order.n and is_p_tableau(order, pt)
    qt_valid = is_standard(qt, m)
    return PrsResult(pt, qt, pt_valid, qt_valid, traces)


def inverse_prs(order: UnitIntervalOrder, pt_columns, qt_columns) -> tuple:
    """The word whose P-RS image is (PT, QT), by running Psi over the hatted
    order on the columns from right to left."""
    pt = normalize(pt_columns)
    qt = normalize(qt_columns)
    if tuple(map(len, pt)) != tuple(map(len, qt)):
        raise InsertionError("PT and QT have different shapes")
    n = order.n
    if sorted(x for c in qt for x in c) != list(range(1, n + 1)):
        raise InsertionError("QT is not a filling of [1,n]")
    ho = hat(order)
    alpha = (INF,) * n
    for col, qcol in zip(reversed(pt), reversed(qt)):
        X = {n + 1 - x for x in qcol}
        c_hat, alpha_hat = psi(ho, X, hat_word(alpha, n), hat_chain(col, n))
        if c_hat:
            raise InsertionError("chain not exhausted; (PT, QT) is not in the image")
        alpha = hat_word(alpha_hat, n)
    if INF in alpha:
        raise InsertionError("word not filled; (PT, QT) is not in the image")
    return alpha


def expected_qt_of_reading_word(columns) -> tuple:
    """omega(T_lambda) for the shape of a tableau."""
    from .tableaux import shape

    return evacuation(superstandard(shape(columns)))
