"""Seeds, exchange matrices, mutation and finite-type enumeration for C[G^{e,c^2}].

Labels follow the seed V: ``1..r`` mutable, ``r+1..2r`` and ``-r..-1`` frozen.
The matrix is first built in the labels of the double-word construction
(``-r..-1, 1..2r``) and relabeled once.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .exactalg import LaurentPoly, NotDivisible
from .group import generalized_minor, seed_weyl_element, xbar
from .roots import RankTooSmall, WeylElement, cartan, cxx_word, letter

__all__ = [
    "BudgetExceeded",
    "NotLaurent",
    "MatrixLawViolation",
    "ExchangeMatrix",
    "Seed",
    "Quiver",
    "bfz_arrows",
    "build_btilde",
    "build_initial_seed",
    "mutate",
    "mutate_path",
    "exchange_numerator",
    "initial_minor",
    "seed_labels",
    "check_matrix_laws",
    "Exploration",
    "enumerate_cluster_variables",
    "explore",
    "quiver_of",
    "quiver_mutate",
]


class BudgetExceeded(RuntimeError):
    pass


class NotLaurent(ArithmeticError):
    pass


class MatrixLawViolation(AssertionError):
    pass


def seed_labels(r: int) -> list[int]:
    return list(range(1, 2 * r + 1)) + list(range(-1, -r - 1, -1))


# -- exchange matrices -------------------------------------------------

@dataclass(frozen=True)
class ExchangeMatrix:
    """Extended exchange matrix: rows over ``labels``, columns over ``mutable``."""

    labels: tuple
    mutable: tuple
    entries: tuple  # entries[row index][column index]

    def __post_init__(self):
        object.__setattr__(self, "_row", {l: a for a, l in enumerate(self.labels)})
        object.__setattr__(self, "_col", {l: a for a, l in enumerate(self.mutable)})

    @classmethod
    def from_dict(cls, labels, mutable, b: dict) -> "ExchangeMatrix":
        rows = tuple(tuple(int(b.get((i, j), 0)) for j in mutable) for i in labels)
        return cls(tuple(labels), tuple(mutable), rows)

    def __call__(self, i: int, j: int) -> int:
        return self.entries[self._row[i]][self._col[j]]

    def column(self, k: int) -> list[tuple[int, int]]:
        c = self._col[k]
        return [(l, row[c]) for l, row in zip(self.labels, self.entries) if row[c]]

    def is_mutable(self, k: int) -> bool:
        return k in self._col

    def mutate(self, k: int) -> "ExchangeMatrix":
        if k not in self._col:
            raise ValueError("label %d is not mutable" % k)
        ck = self._col[k]
        rk = self._row[k]
        bk = self.entries[rk]
        out = []
        for i, row in enumerate(self.entries):
            bik = row[ck]
            new = []
            for j, bij in enumerate(row):
                if i == rk or j == ck:
                    new.append(-bij)
                else:
                    bkj = bk[j]
                    new.append(bij + (abs(bik) * bkj + bik * abs(bkj)) // 2)
            out.append(tuple(new))
        return ExchangeMatrix(self.labels, self.mutable, tuple(out))

    def negate(self) -> "ExchangeMatrix":
        return ExchangeMatrix(self.labels, self.mutable,
                              tuple(tuple(-x for x in row) for row in self.entries))

    def principal(self) -> list[list[int]]:
        return [[self(i, j) for j in self.mutable] for i in self.mutable]

    def skew_symmetrizer(self) -> list[Fraction] | None:
        """Positive ``d`` with ``d_i b_ij = -d_j b_ji`` on the principal part, or None."""
        B = self.principal()
        n = len(B)
        d: list[Fraction | None] = [None] * n
        for start in range(n):
            if d[start] is not None:
                continue
            d[start] = Fraction(1)
            todo = [start]
            while todo:
                i = todo.pop()
                for j in range(n):
                    if B[i][j] == 0 and B[j][i] == 0:
                        continue
                    if B[i][j] == 0 or B[j][i] == 0 or (B[i][j] > 0) == (B[j][i] > 0):
                        return None
                    dj = d[i] * B[i][j] / -B[j][i]
                    if d[j] is None:
                        d[j] = dj
                        todo.append(j)
                    elif d[j] != dj:
                        return None
        return d  # type: ignore[return-value]

    def max_abs(self) -> int:
        return max((abs(x) for row in self.entries for x in row), default=0)

    def to_json_obj(self) -> dict:
        return {"rows": list(self.labels), "cols": list(self.mutable),
                "entries": [list(row) for row in self.entries]}


def bfz_arrows(word) -> list[tuple[int, int]]:
    """Arrows of the quiver attached to ``word`` in double-word labels.

    Vertices are ``-r..-1`` and ``1..n``; ``j_{-t} = -t``.  Horizontal arrows
    go ``k -> k^-``; inclined arrows ``l -> k`` when ``l^- < k^- < l`` and the
    letters are adjacent, where an undefined ``l^-`` counts as 0.  Pairs with
    two frozen ends are skipped.
    """
    n = len(word)
    r = max(word)
    A = cartan(r)
    j = {k: letter(word, k) for k in range(1, n + 1)}
    for t in range(1, r + 1):
        j[-t] = -t

    def minus(k):
        if k > 0:
            prev = [q for q in range(1, k) if j[q] == j[k]]
        else:
            prev = [q for q in range(1, n + 1) if j[q] == -k]
        return max(prev) if prev else None

    km = {k: minus(k) for k in j}
    mutable = {k for k in range(1, n + 1) if km[k] is not None}
    arrows = []
    verts = sorted(j)
    for k in verts:
        for l in range(1, n + 1):
            if not (l < k or k < 0):
                continue
            if k not in mutable and l not in mutable:
                continue
            if km[k] == l:
                arrows.append((k, l))
                continue
            if km[k] is None:
                continue
            lm = km[l] if km[l] is not None else 0
            if lm < km[k] < l and A[abs(j[k]) - 1][abs(j[l]) - 1] < 0:
                arrows.append((l, k))
    return arrows


def _relabel_map(r: int) -> dict[int, int]:
    word = cxx_word(r)
    m = {}
    for k in range(1, r + 1):
        m[r + k] = k
        m[k] = -letter(word, k)
        m[-letter(word, k)] = r + k
    return m


def build_btilde(r: int, orientation: int = 1) -> ExchangeMatrix:
    """Extended exchange matrix of the initial seed, in seed-V labels.

    ``orientation=-1`` gives the globally negated matrix; both produce the
    same cluster variables.
    """
    if r < 3:
        raise RankTooSmall("need r >= 3, got %d" % r)
    if orientation not in (1, -1):
        raise ValueError("orientation must be +1 or -1")
    word = cxx_word(r)
    A = cartan(r)
    jj = {k: letter(word, k) for k in range(1, 2 * r + 1)}
    for t in range(1, r + 1):
        jj[-t] = -t
    rel = _relabel_map(r)
    b: dict = {}
    mutable = set(range(r + 1, 2 * r + 1))

    def weight(k, l):
        # arrow k -> l contributes +1 if same letter, else -a
        if abs(jj[k]) == abs(jj[l]):
            return 1
        return -A[abs(jj[k]) - 1][abs(jj[l]) - 1]

    for src, dst in bfz_arrows(word):
        w = weight(src, dst) * orientation
        if dst in mutable:
            b[(rel[src], rel[dst])] = b.get((rel[src], rel[dst]), 0) + w
        if src in mutable:
            b[(rel[dst], rel[src])] = b.get((rel[dst], rel[src]), 0) - w
    return ExchangeMatrix.from_dict(seed_labels(r), list(range(1, r + 1)), b)


# -- seeds -------------------------------------------------------------

@dataclass(frozen=True)
class Seed:
    r: int
    vars: dict = field(compare=False)
    matrix: ExchangeMatrix = field(compare=False)

    def var(self, k: int) -> LaurentPoly:
        return self.vars[k]

    def mutable_labels(self) -> tuple:
        return self.matrix.mutable

    def cluster(self) -> list[LaurentPoly]:
        return [self.vars[k] for k in self.matrix.mutable]

    def fingerprint(self) -> frozenset:
        return frozenset(self.cluster())

    def __eq__(self, other):
        return (isinstance(other, Seed) and self.vars == other.vars
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash(self.fingerprint())

    def to_json_obj(self) -> dict:
        return {
            "r": self.r,
            "labels": list(self.matrix.labels),
            "vars": {str(k): self.vars[k].to_text() for k in self.matrix.labels},
            "matrix": self.matrix.to_json_obj(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=1)


def initial_minor(r: int, k: int, X=None) -> LaurentPoly:
    """``(phi_V)_k`` as a generalized minor of ``xbar(r)``."""
    if X is None:
        X = xbar(r)
    if k > 0:
        word = cxx_word(r)
        return generalized_minor(X, letter(word, k), seed_weyl_element(r, k))
    return generalized_minor(X, -k, WeylElement.identity(r))


def build_initial_seed(r: int, orientation: int = 1) -> Seed:
    X = xbar(r)
    vars_ = {}
    for k in seed_labels(r):
        p = initial_minor(r, k, X)
        if not p:
            raise NotLaurent("initial minor %d vanished" % k)
        vars_[k] = p
    return Seed(r, vars_, build_btilde(r, orientation))


def exchange_numerator(seed: Seed, k: int) -> LaurentPoly:
    pos = LaurentPoly.const(1)
    neg = LaurentPoly.const(1)
    for i, bik in seed.matrix.column(k):
        if bik > 0:
            pos = pos * seed.vars[i] ** bik
        else:
            neg = neg * seed.vars[i] ** (-bik)
    return pos + neg


def mutate(seed: Seed, k: int, check: bool = True) -> Seed:
    """Mutation in direction ``k``; raises NotDivisible if the exchange fails."""
    if not seed.matrix.is_mutable(k):
        raise ValueError("label %d is not mutable" % k)
    num = exchange_numerator(seed, k)
    new = num.divide_exact(seed.vars[k])
    vars_ = dict(seed.vars)
    vars_[k] = new
    mat = seed.matrix.mutate(k)
    if check:
        check_matrix_laws(mat)
    return Seed(seed.r, vars_, mat)


def mutate_path(seed: Seed, path) -> Seed:
    """Apply mutations in the given order (first element first)."""
    for k in path:
        seed = mutate(seed, k)
    return seed


def check_matrix_laws(mat: ExchangeMatrix) -> None:
    if mat.max_abs() > 1:
        raise MatrixLawViolation("entry with |b| > 1:\n%s" % json.dumps(mat.to_json_obj()))
    if mat.skew_symmetrizer() is None:
        raise MatrixLawViolation("principal part lost skew-symmetrizability:\n%s"
                                 % json.dumps(mat.to_json_obj()))


# -- enumeration -------------------------------------------------------

@dataclass
class Exploration:
    seeds: list
    variables: set
    divisions: int
    collisions: int


def _aligned(a: Seed, b: Seed) -> bool:
    """Do two seeds with the same cluster carry the same matrix up to relabeling?"""
    where = {a.vars[k]: k for k in a.matrix.mutable}
    perm = {k: where[b.vars[k]] for k in b.matrix.mutable}
    frozen = [l for l in a.matrix.labels if not a.matrix.is_mutable(l)]
    for j in b.matrix.mutable:
        for i in b.matrix.mutable:
            if b.matrix(i, j) != a.matrix(perm[i], perm[j]):
                return False
        for i in frozen:
            if b.matrix(i, j) != a.matrix(i, perm[j]):
                return False
    return True


def explore(seed: Seed, budget: int = 100000, check: bool = True) -> Exploration:
    """Breadth-first search over all seeds reachable from ``seed``."""
    seen = {seed.fingerprint(): seed}
    order = [seed]
    todo = deque([seed])
    variables = set(seed.cluster())
    divisions = 0
    collisions = 0
    while todo:
        s = todo.popleft()
        for k in s.matrix.mutable:
            t = mutate(s, k, check=check)
            divisions += 1
            fp = t.fingerprint()
            old = seen.get(fp)
            if old is not None:
                collisions += 1
                if check and not _aligned(old, t):
                    raise MatrixLawViolation("two seeds share a cluster but not a matrix")
                continue
            if len(seen) >= budget:
                raise BudgetExceeded("more than %d seeds" % budget)
            seen[fp] = t
            order.append(t)
            todo.append(t)
            variables.update(t.cluster())
    return Exploration(order, variables, divisions, collisions)


def enumerate_cluster_variables(seed: Seed, budget: int = 100000) -> set:
    return explore(seed, budget).variables


# -- quivers -----------------------------------------------------------

@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    mutable: tuple
    arrows: frozenset  # of (src, dst); multiplicity-free

    def has(self, a, b) -> bool:
        return (a, b) in self.arrows

    def to_dot(self, names=None) -> str:
        names = names or {}
        lines = ["digraph quiver {"]
        for v in self.vertices:
            shape = "circle" if v in self.mutable else "box"
            lines.append('  "%s" [label="%s", shape=%s];' % (v, names.get(v, v), shape))
        for a, b in sorted(self.arrows):
            lines.append('  "%s" -> "%s";' % (a, b))
        lines.append("}")
        return "\n".join(lines) + "\n"


def quiver_of(seed_or_matrix) -> Quiver:
    mat = seed_or_matrix.matrix if isinstance(seed_or_matrix, Seed) else seed_or_matrix
    arrows = set()
    pos = {l: a for a, l in enumerate(mat.labels)}
    for j in mat.mutable:
        for i in mat.labels:
            b = mat(i, j)
            if not b:
                continue
            if mat.is_mutable(i) and pos[i] > pos[j]:
                continue  # seen from the other column
            if abs(b) > 1:
                raise MatrixLawViolation("multiple arrow %d-%d" % (i, j))
            arrows.add((i, j) if b > 0 else (j, i))
    return Quiver(mat.labels, mat.mutable, frozenset(arrows))


def quiver_mutate(q: Quiver, k: int) -> Quiver:
    """Quiver mutation for 0/1 matrices: reverse at k, close 2-paths, cancel 2-cycles."""
    arrows = set(q.arrows)
    ins = [a for a, b in q.arrows if b == k]
    outs = [b for a, b in q.arrows if a == k]
    for i in ins:
        for j in outs:
            if i not in q.mutable and j not in q.mutable:
                continue
            if (j, i) in arrows:
                arrows.discard((j, i))
            elif (i, j) in arrows:
                raise MatrixLawViolation("mutation would double arrow %s->%s" % (i, j))
            else:
                arrows.add((i, j))
    out = set()
    for a, b in arrows:
        if a == k or b == k:
            out.add((b, a))
        else:
            out.add((a, b))
    return Quiver(q.vertices, q.mutable, frozenset(out))
