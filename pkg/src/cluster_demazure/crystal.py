"""Monomial realization of type A_r crystals and Demazure subsets.

The sign data ``p_{j,i}`` comes from the cyclic sequence (evens, then odds):
``p_{j,i} = 1`` iff ``j`` precedes ``i`` in it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .exactalg import LaurentMono, LaurentPoly, Var
from .exactalg import y as ymono
from .roots import Weight, cartan, cyclic_sequence

__all__ = [
    "NotHighestWeight",
    "CrystalMonomial",
    "position_set",
    "a_monomial",
    "kashiwara_f",
    "kashiwara_e",
    "DemazureSpec",
    "demazure_set",
    "demazure_sum",
    "crystal_graph_dot",
    "is_dominant",
]


class NotHighestWeight(ValueError):
    pass


def position_set(r: int) -> dict[tuple[int, int], int]:
    seq = cyclic_sequence(r)
    pos = {a: t for t, a in enumerate(seq)}
    return {(j, i): int(pos[j] < pos[i]) for j in seq for i in seq if j != i}


def a_monomial(s: int, i: int, r: int) -> LaurentMono:
    """``A_{s,i} = Y_{s,i} Y_{s+1,i} prod_{j != i} Y_{s+p_{j,i}, j}^{a_{j,i}}``."""
    if not 1 <= i <= r:
        # out-of-range roots are trivial (mirrors Y_{s,0} = Y_{s,r+1} = 1)
        return LaurentMono.unit()
    p = position_set(r)
    A = cartan(r)
    m = ymono(s, i) * ymono(s + 1, i)
    for j in (i - 1, i + 1):
        if 1 <= j <= r:
            m = m * ymono(s + p[(j, i)], j) ** A[j - 1][i - 1]
    return m


@dataclass(frozen=True)
class CrystalMonomial:
    """A Laurent monomial in the ``Y[s,j]`` viewed as a crystal element of rank ``r``."""

    mono: LaurentMono
    r: int

    def __post_init__(self):
        for v, _ in self.mono.items():
            if v.is_torus:
                raise ValueError("crystal monomials carry no torus variables")
            if v.j > self.r:
                raise ValueError("column %d outside [1, %d]" % (v.j, self.r))

    @classmethod
    def parse(cls, text: str, r: int) -> "CrystalMonomial":
        return cls(LaurentMono.from_text(text), r)

    @cached_property
    def _columns(self) -> dict[int, list[tuple[int, int]]]:
        cols: dict[int, list[tuple[int, int]]] = {}
        for v, e in self.mono.items():
            cols.setdefault(v.j, []).append((v.s, e))
        for c in cols.values():
            c.sort()
        return cols

    def zeta(self, s: int, i: int) -> int:
        return self.mono.degree(Var.y(s, i))

    @cached_property
    def wt(self) -> Weight:
        return Weight([sum(e for _, e in self._columns.get(i, ())) for i in range(1, self.r + 1)])

    def _segments(self, i: int):
        # prefix sums: before the first row, then after each row of column i
        rows = self._columns.get(i, [])
        sums = [0]
        for _, e in rows:
            sums.append(sums[-1] + e)
        return [s for s, _ in rows], sums

    def phi(self, i: int) -> int:
        _, sums = self._segments(i)
        return max(sums)

    def epsilon(self, i: int) -> int:
        return self.phi(i) - self.wt[i - 1]

    def n_f(self, i: int) -> int | None:
        rows, sums = self._segments(i)
        ph = max(sums)
        if ph <= 0:
            return None
        t = sums.index(ph)  # t >= 1 since sums[0] = 0 < ph
        return rows[t - 1]

    def n_e(self, i: int) -> int | None:
        rows, sums = self._segments(i)
        ph = max(sums)
        if ph == sums[-1]:
            return None  # epsilon = 0
        t = max(a for a, v in enumerate(sums) if v == ph)
        return rows[t] - 1

    def is_dominant(self) -> bool:
        return all(self.epsilon(i) == 0 for i in range(1, self.r + 1))

    def __mul__(self, other: LaurentMono) -> "CrystalMonomial":
        return CrystalMonomial(self.mono * other, self.r)

    def to_text(self) -> str:
        return self.mono.to_text()

    def __str__(self):
        return self.to_text()

    def __lt__(self, other):
        return self.mono < other.mono


def kashiwara_f(i: int, m: CrystalMonomial) -> CrystalMonomial | None:
    n = m.n_f(i)
    if n is None:
        return None
    return m * a_monomial(n, i, m.r).inverse()


def kashiwara_e(i: int, m: CrystalMonomial) -> CrystalMonomial | None:
    n = m.n_e(i)
    if n is None:
        return None
    return m * a_monomial(n, i, m.r)


def is_dominant(m: CrystalMonomial) -> bool:
    return m.is_dominant()


@dataclass(frozen=True)
class DemazureSpec:
    """Highest monomial plus a word (left to right; rightmost applied first)."""

    highest: CrystalMonomial
    word: tuple

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))

    @property
    def weight(self) -> Weight:
        return self.highest.wt

    def describe(self) -> str:
        w = "".join("s%d" % a for a in self.word) or "e"
        return "B(%s)_%s @ %s" % (_weight_text(self.weight), w, self.highest)


def _weight_text(w: Weight) -> str:
    parts = []
    for i, a in enumerate(w, 1):
        if a:
            parts.append(("L%d" % i) if a == 1 else ("%dL%d" % (a, i)))
    return "+".join(parts) or "0"


def demazure_set(spec: DemazureSpec) -> set[CrystalMonomial]:
    u = spec.highest
    bad = [i for i in range(1, u.r + 1) if u.epsilon(i)]
    if bad:
        raise NotHighestWeight("epsilon_%d(%s) != 0" % (bad[0], u))
    current = {u}
    for i in reversed(spec.word):
        grown = set(current)
        for m in current:
            x = kashiwara_f(i, m)
            while x is not None and x not in grown:
                grown.add(x)
                x = kashiwara_f(i, x)
        current = grown
    return current


def demazure_sum(spec: DemazureSpec) -> LaurentPoly:
    return LaurentPoly.sum_of(m.mono for m in demazure_set(spec))


def crystal_graph_dot(spec: DemazureSpec, name: str = "demazure") -> str:
    elems = sorted(demazure_set(spec), key=lambda m: m.mono._sort_key())
    ids = {m: "n%d" % t for t, m in enumerate(elems)}
    lines = ["digraph %s {" % name]
    for m in elems:
        lines.append('  %s [label="%s"];' % (ids[m], m.to_text()))
    for m in elems:
        for i in range(1, m.r + 1):
            x = kashiwara_f(i, m)
            if x is not None and x in ids:
                lines.append('  %s -> %s [label="%d"];' % (ids[m], ids[x], i))
    lines.append("}")
    return "\n".join(lines) + "\n"
