"""Quasisymmetric functions in the fundamental basis with coefficients in Z[t].

Everything is exact integer arithmetic.  Compositions and partitions are
plain tuples.
"""
from __future__ import annotations

import itertools
import re
from typing import Iterable, Mapping, Sequence

from .poset import UnitIntervalOrder, as_partition, partitions_of
from .tableaux import des as syt_des, enumerate_syt
from .words import des_p, finv_count


class TPoly:
    """Integer polynomial in t, coefficients of t^0, t^1, ... with trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = tuple(coeffs)
        k = len(c)
        while k and not c[k - 1]:
            k -= 1
        self.coeffs = c[:k]

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "TPoly":
        return cls([0] * power + [coeff])

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = TPoly([other])
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "TPoly") -> "TPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return TPoly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    def __neg__(self) -> "TPoly":
        return TPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: "TPoly") -> "TPoly":
        return self + (-other)

    def __mul__(self, other) -> "TPoly":
        if isinstance(other, int):
            return TPoly(tuple(x * other for x in self.coeffs))
        out = [0] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return TPoly(out)

    __rmul__ = __mul__

    def at(self, t: int) -> int:
        return sum(c * t ** k for k, c in enumerate(self.coeffs))

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.coeffs)

    def single_power(self):
        """k if the polynomial is c*t^k, else None."""
        nz = [k for k, x in enumerate(self.coeffs) if x]
        return nz[0] if len(nz) == 1 else None

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return f"TPoly({list(self.coeffs)})"


ONE = TPoly([1])


# ---------------------------------------------------------------------------
# compositions

def composition_of(n: int, des: Iterable[int]) -> tuple:
    cuts = sorted(set(des))
    if any(not 1 <= x < n for x in cuts):
        raise ValueError(f"descent set {cuts} not inside [1,{n - 1}]")
    pts = [0] + cuts + [n]
    return tuple(pts[i + 1] - pts[i] for i in range(len(pts) - 1))


def descents_of(comp: Sequence[int]) -> frozenset:
    return frozenset(itertools.accumulate(comp[:-1]))


def compositions(n: int):
    for k in range(n):
        for cuts in itertools.combinations(range(1, n), k):
            yield composition_of(n, cuts)


def is_partition_tuple(comp: Sequence[int]) -> bool:
    return all(comp[i] >= comp[i + 1] for i in range(len(comp) - 1))


# ---------------------------------------------------------------------------
# elements

class _Linear:
    """Shared dictionary-of-TPoly arithmetic."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping | None = None):
        if coeffs and any(not isinstance(v, TPoly) for v in coeffs.values()):
            raise TypeError("coefficients must be TPoly")
        self.n = n
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    def _new(self, coeffs):
        return type(self)(self.n, coeffs)

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, TPoly()) + v
        return self._new(out)

    def __sub__(self, other):
        return self + other.scale(TPoly([-1]))

    def scale(self, c: TPoly):
        return self._new({k: v * c for k, v in self.coeffs.items()})

    def _check(self, other):
        if type(other) is not type(self) or other.n != self.n:
            raise ValueError("degree or type mismatch")

    def __eq__(self, other):
        return type(other) is type(self) and self.n == other.n and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def at(self, t: int) -> dict:
        return {k: v.at(t) for k, v in self.coeffs.items() if v.at(t)}

    def common_power(self):
        powers = {v.single_power() for v in self.coeffs.values()}
        return powers.pop() if len(powers) == 1 and None not in powers else None


class QSymElement(_Linear):
    """sum over compositions alpha of c_alpha(t) F_alpha."""

    def __repr__(self):
        body = " + ".join(f"({v})*F{list(k)}" for k, v in sorted(self.coeffs.items(), reverse=True))
        return f"QSymElement({self.n}: {body or 0})"


class SchurExpansion(_Linear):
    """sum over partitions lambda of c_lambda(t) s_lambda.

    ``residual`` holds what the greedy peeling could not absorb; it is zero
    exactly when the input was Schur-expressible.
    """

    __slots__ = ("residual",)

    def __init__(self, n: int, coeffs: Mapping | None = None, residual: QSymElement | None = None):
        super().__init__(n, coeffs)
        self.residual = residual if residual is not None else QSymElement(n)

    @property
    def ok(self) -> bool:
        return not self.residual

    def terms(self) -> list:
        return sorted(self.coeffs.items(), key=lambda kv: kv[0])

    def to_fundamental(self) -> QSymElement:
        out = QSymElement(self.n)
        for lam, c in self.coeffs.items():
            out = out + schur_to_fundamental(lam).scale(c)
        return out

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        items = sorted(self.coeffs.items())
        k = self.common_power()
        if k is not None:
            parts = []
            for lam, c in items:
                coeff = c.coeffs[k]
                s = f"s[{','.join(map(str, lam))}]"
                parts.append(s if coeff == 1 else f"{coeff}*{s}")
            body = " + ".join(parts).replace("+ -", "- ")
            if k == 0:
                return body
            pre = "t" if k == 1 else f"t^{k}"
            return f"{pre}*({body})" if len(parts) > 1 else f"{pre}*{body}"
        parts = []
        for lam, c in items:
            s = f"s[{','.join(map(str, lam))}]"
            parts.append(f"({c})*{s}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "t_power_terms": {",".join(map(str, lam)): list(c.coeffs) for lam, c in sorted(self.coeffs.items())},
            "schur_expressible": self.ok,
        }

    def __repr__(self):
        return f"SchurExpansion({self.n}: {self.render()})"


def fundamental(n: int, des: Iterable[int], coeff: TPoly = ONE) -> QSymElement:
    return QSymElement(n, {composition_of(n, des): coeff})


def gamma(order: UnitIntervalOrder, vertices: Iterable[Sequence[int]]) -> QSymElement:
    """sum over w of t^{|finv(w)|} F_{des_P(w)}."""
    n = order.n
    acc: dict = {}
    for w in vertices:
        comp = composition_of(n, des_p(order, w))
        mono = TPoly.monomial(finv_count(order, w))
        acc[comp] = acc.get(comp, TPoly()) + mono
    return QSymElement(n, acc)


_S_CACHE: dict = {}


def schur_to_fundamental(lam: Sequence[int]) -> QSymElement:
    lam = as_partition(lam)
    if lam not in _S_CACHE:
        n = sum(lam)
        acc: dict = {}
        for T in enumerate_syt(lam):
            comp = composition_of(n, syt_des(T))
            acc[comp] = acc.get(comp, TPoly()) + ONE
        _S_CACHE[lam] = QSymElement(n, acc)
    return _S_CACHE[lam]


def expand_in_schur(q: QSymElement) -> SchurExpansion:
    """Greedy peeling off the lexicographically largest composition.

    Stops with a nonzero residual as soon as the leading composition is not
    a partition.  Success is double-checked by recomposing.
    """
    rest = q
    found: dict = {}
    while rest:
        lead = max(rest.coeffs)
        if not is_partition_tuple(lead):
            return SchurExpansion(q.n, found, residual=rest)
        c = rest.coeffs[lead]
        found[lead] = found.get(lead, TPoly()) + c
        rest = rest - schur_to_fundamental(lead).scale(c)
    out = SchurExpansion(q.n, found)
    if out.to_fundamental() != q:  # pragma: no cover - guarded by the triangularity test
        raise AssertionError("recomposition mismatch in Schur expansion")
    return out


def _refinements(alpha: tuple) -> list:
    if alpha not in _REF_CACHE:
        n = sum(alpha)
        d = descents_of(alpha)
        free = [x for x in range(1, n) if x not in d]
        _REF_CACHE[alpha] = [composition_of(n, d | set(extra))
                             for k in range(len(free) + 1)
                             for extra in itertools.combinations(free, k)]
    return _REF_CACHE[alpha]


_REF_CACHE: dict = {}


def to_monomial(q: QSymElement) -> dict:
    """Coefficients in the monomial quasisymmetric basis: F_alpha is the sum
    of M_beta over all refinements beta of alpha."""
    acc: dict = {}
    for alpha, c in q.coeffs.items():
        for beta in _refinements(alpha):
            row = acc.setdefault(beta, [0] * len(c.coeffs))
            if len(row) < len(c.coeffs):
                row.extend([0] * (len(c.coeffs) - len(row)))
            for k, x in enumerate(c.coeffs):
                row[k] += x
    out = {k: TPoly(v) for k, v in acc.items()}
    return {k: v for k, v in out.items() if v}


def is_symmetric(q: QSymElement) -> bool:
    mono = to_monomial(q)
    classes: dict = {}
    for beta, c in mono.items():
        classes.setdefault(tuple(sorted(beta)), set()).add(c)
    for key, vals in classes.items():
        if len(vals) > 1:
            return False
        # every rearrangement must be present
        if sum(1 for beta in mono if tuple(sorted(beta)) == key) != len(set(itertools.permutations(key))):
            return False
    return True


def is_schur_positive(expansion: SchurExpansion) -> bool:
    return expansion.ok and all(c.is_nonnegative() for c in expansion.coeffs.values())


def schur_sum(n: int, shapes: Iterable[Sequence[int]], coeff: TPoly = ONE) -> SchurExpansion:
    acc: dict = {}
    for lam in shapes:
        lam = as_partition(lam)
        acc[lam] = acc.get(lam, TPoly()) + coeff
    return SchurExpansion(n, acc)


def parse_schur(text: str, n: int) -> SchurExpansion:
    """Inverse of ``render`` for the factored form 't^k*(a*s[..] + s[..])'."""
    text = text.replace(" ", "")
    power = 0
    m = re.fullmatch(r"(t(?:\^(\d+))?)\*\((.*)\)", text) or re.fullmatch(r"(t(?:\^(\d+))?)\*(s\[.*\])", text)
    if m:
        power = int(m.group(2)) if m.group(2) else 1
        text = m.group(3)
    acc: dict = {}
    for term in text.split("+"):
        mm = re.fullmatch(r"(?:(\d+)\*)?s\[([\d,]*)\]", term)
        if not mm:
            raise ValueError(f"cannot parse Schur term {term!r}")
        c = int(mm.group(1) or 1)
        lam = as_partition(int(x) for x in mm.group(2).split(",") if x)
        acc[lam] = acc.get(lam, TPoly()) + TPoly.monomial(power, c)
    return SchurExpansion(n, acc)


def all_schur(n: int) -> list:
    return list(partitions_of(n))
