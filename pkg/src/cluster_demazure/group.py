"""Symbolic SL_{r+1} matrices, the factorization maps and generalized minors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import LaurentMono, LaurentPoly, Var, substitute
from .exactalg import y as ymono, torus
from .roots import WeylElement, cxx_word, letter

__all__ = [
    "SymbolicMatrix",
    "elem_upper",
    "elem_lower",
    "coweight_diag",
    "torus_diag",
    "simple_reflection_rep",
    "lift",
    "xbar",
    "xg_product",
    "TwistMap",
    "twist_map",
    "closed_form_backward",
    "generalized_minor",
    "generalized_minor_lift",
]

_ZERO = LaurentPoly.zero()
_ONE = LaurentPoly.const(1)


class SymbolicMatrix:
    """Square matrix with LaurentPoly entries (0-based storage, 1-based accessors)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(LaurentPoly._coerce(x) for x in row) for row in rows)
        n = len(self.rows)
        if any(len(row) != n for row in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def identity(cls, n: int) -> "SymbolicMatrix":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.rows[i - 1][j - 1]

    def __mul__(self, other: "SymbolicMatrix") -> "SymbolicMatrix":
        n = self.dim
        if other.dim != n:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            nz = [(k, x) for k, x in enumerate(row) if x]
            new = []
            for col in cols:
                acc = _ZERO
                for k, x in nz:
                    if col[k]:
                        acc = acc + x * col[k]
                new.append(acc)
            out.append(new)
        return SymbolicMatrix(out)

    def __eq__(self, other):
        return isinstance(other, SymbolicMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def map(self, fn) -> "SymbolicMatrix":
        return SymbolicMatrix([[fn(x) for x in row] for row in self.rows])

    def substitute(self, sigma) -> "SymbolicMatrix":
        return self.map(lambda x: substitute(x, sigma))

    def is_unit_monomial_diag(self) -> bool:
        n = self.dim
        return all(
            (self.rows[i][j].is_monomial() if i == j else not self.rows[i][j])
            for i in range(n) for j in range(n)
        )

    def inverse_diag(self) -> "SymbolicMatrix":
        """Inverse of a diagonal matrix with monomial entries."""
        if not self.is_unit_monomial_diag():
            raise ValueError("only monomial diagonal matrices are inverted")
        n = self.dim
        return SymbolicMatrix(
            [[self.rows[i][i] ** -1 if i == j else _ZERO for j in range(n)] for i in range(n)]
        )

    def minor(self, rows, cols) -> LaurentPoly:
        return _minor(self, tuple(rows), tuple(cols))

    def to_json_obj(self) -> list:
        return [[x.to_text() for x in row] for row in self.rows]

    def __repr__(self):
        return "SymbolicMatrix(%r)" % (self.to_json_obj(),)


def _minor(m: SymbolicMatrix, rows: tuple, cols: tuple) -> LaurentPoly:
    # Laplace expansion along the last row, memoized on the column subset;
    # the row set is always the first len(cols) rows of ``rows``.
    memo: dict[tuple, LaurentPoly] = {}
    if len(rows) != len(cols):
        raise ValueError("minor needs as many rows as columns")

    def det(cs: tuple) -> LaurentPoly:
        if not cs:
            return _ONE
        hit = memo.get(cs)
        if hit is not None:
            return hit
        row = m.rows[rows[len(cs) - 1] - 1]
        acc = _ZERO
        last = len(cs) - 1
        for pos, c in enumerate(cs):
            x = row[c - 1]
            if not x:
                continue
            sub = det(cs[:pos] + cs[pos + 1:])
            if sub:
                term = x * sub
                acc = acc - term if (last - pos) % 2 else acc + term
        memo[cs] = acc
        return acc

    return det(tuple(cols))


# -- one-parameter subgroups ------------------------------------------

def elem_upper(i: int, t, n: int) -> SymbolicMatrix:
    """``x_i(t)`` in ``SL_n``: identity plus ``t`` at entry ``(i, i+1)``."""
    if not 1 <= i < n:
        raise ValueError("index %d outside [1, %d]" % (i, n - 1))
    rows = [[_ONE if a == b else _ZERO for b in range(n)] for a in range(n)]
    rows[i - 1][i] = LaurentPoly._coerce(t)
    return SymbolicMatrix(rows)


def elem_lower(i: int, t, n: int) -> SymbolicMatrix:
    """``y_i(t)``: identity plus ``t`` at entry ``(i+1, i)``."""
    if not 1 <= i < n:
        raise ValueError("index %d outside [1, %d]" % (i, n - 1))
    rows = [[_ONE if a == b else _ZERO for b in range(n)] for a in range(n)]
    rows[i][i - 1] = LaurentPoly._coerce(t)
    return SymbolicMatrix(rows)


def torus_diag(entries) -> SymbolicMatrix:
    n = len(entries)
    return SymbolicMatrix(
        [[LaurentPoly._coerce(entries[a]) if a == b else _ZERO for b in range(n)] for a in range(n)]
    )


def coweight_diag(i: int, t: LaurentMono, n: int) -> SymbolicMatrix:
    """``alpha_i^vee(t)``: ``t`` at slot ``i``, ``t^-1`` at slot ``i+1``."""
    if not 1 <= i < n:
        raise ValueError("index %d outside [1, %d]" % (i, n - 1))
    d: list = [LaurentMono.unit()] * n
    d[i - 1] = t
    d[i] = t.inverse()
    return torus_diag(d)


def simple_reflection_rep(i: int, n: int) -> SymbolicMatrix:
    """``s_i-bar = x_i(-1) y_i(1) x_i(-1)``."""
    return elem_upper(i, -1, n) * elem_lower(i, 1, n) * elem_upper(i, -1, n)


def lift(w: WeylElement, word=None) -> SymbolicMatrix:
    """``w-bar`` as a product of ``s_i-bar`` along ``word`` (any reduced word of w)."""
    n = w.rank + 1
    if word is None:
        word = reduced_word(w)
    out = SymbolicMatrix.identity(n)
    for a in word:
        out = out * simple_reflection_rep(a, n)
    return out


def reduced_word(w: WeylElement) -> list[int]:
    """Some reduced word of ``w`` (left to right)."""
    perm = list(w.perm)
    word: list[int] = []
    # peel right descents: w s_i is shorter iff w(i) > w(i+1)
    while True:
        for i in range(len(perm) - 1):
            if perm[i] > perm[i + 1]:
                perm[i], perm[i + 1] = perm[i + 1], perm[i]
                word.append(i + 1)
                break
        else:
            break
    return word[::-1]


# -- factorization maps -----------------------------------------------

def _torus_vars(r: int) -> list[LaurentMono]:
    return [torus(m) for m in range(1, r + 2)]


def _parameter_rows(r: int):
    """(letter, Y-row) pairs of the c^2 word, left to right."""
    word = cxx_word(r)
    n = len(word)
    return [(word[p], 1 if p < n // 2 else 2) for p in range(n)]


def xbar(r: int) -> SymbolicMatrix:
    """``a x_{j_2r}(Y) alpha^vee(Y) ... x_{j_1}(Y) alpha^vee(Y)`` over the c^2 word."""
    n = r + 1
    out = torus_diag(_torus_vars(r))
    for j, s in _parameter_rows(r):
        t = ymono(s, j)
        out = out * elem_upper(j, t, n) * coweight_diag(j, t, n)
    return out


def xg_product(r: int) -> SymbolicMatrix:
    """``x^G_i(a; Y) = a x_{j_2r}(Y_{1,j_r}) ... x_{j_1}(Y_{2,j_1})``."""
    n = r + 1
    out = torus_diag(_torus_vars(r))
    for j, s in _parameter_rows(r):
        out = out * elem_upper(j, ymono(s, j), n)
    return out


@dataclass(frozen=True)
class TwistMap:
    """The monomial change of variables and its inverse.

    ``forward`` and ``backward`` are total on the torus variables and the
    ``2r`` parameters ``Y[1, j]``, ``Y[2, j]``.
    """

    r: int
    forward: dict
    backward: dict

    def torus_factor(self, i: int) -> LaurentMono:
        return self.forward[Var.torus(i)] / torus(i)

    def apply(self, p: LaurentPoly) -> LaurentPoly:
        return substitute(p, self.forward)

    def unapply(self, p: LaurentPoly) -> LaurentPoly:
        return substitute(p, self.backward)


def _phi_1(l, r):
    Y = lambda s, j: ymono(s, j, r)  # noqa: E731
    if l % 2 == 0:
        return Y(1, l - 1) * Y(2, l - 1) * Y(1, l + 1) * Y(2, l + 1) / (Y(1, l) * Y(2, l) ** 2)
    return Y(2, l - 1) * Y(2, l + 1) / (Y(1, l) * Y(2, l) ** 2)


def _phi_2(l, r):
    Y = lambda s, j: ymono(s, j, r)  # noqa: E731
    if l % 2 == 0:
        return Y(2, l - 1) * Y(2, l + 1) / Y(2, l)
    return Y(2, l).inverse()


def _psi_1(l, r):
    Y = lambda s, j: ymono(s, j, r)  # noqa: E731
    if l % 2 == 0:
        m = (Y(1, l - 1) * Y(1, l) * Y(1, l + 1) * Y(2, l - 3) * Y(2, l - 2)
             * Y(2, l + 2) * Y(2, l + 3))
    else:
        m = Y(1, l) * Y(2, l - 2) * Y(2, l - 1) * Y(2, l + 1) * Y(2, l + 2)
    return m.inverse()


def _psi_2(l, r):
    Y = lambda s, j: ymono(s, j, r)  # noqa: E731
    if l % 2 == 0:
        return (Y(2, l - 1) * Y(2, l) * Y(2, l + 1)).inverse()
    return Y(2, l).inverse()


def _coweight_product(r, images):
    """Diagonal entries of ``prod_i alpha_i^vee(images[i])`` (1-based list of r+1)."""
    d = [LaurentMono.unit()] * (r + 2)
    for i in range(1, r + 1):
        d[i] = d[i] * images[i]
        d[i + 1] = d[i + 1] / images[i]
    return d


def _invert_parameters(r: int, fwd: dict) -> dict:
    """Exact inverse of the monomial map ``fwd`` on the ``2r`` parameters."""
    names = [Var.y(s, l) for s in (1, 2) for l in range(1, r + 1)]
    idx = {v: a for a, v in enumerate(names)}
    n = len(names)
    # column a holds the exponent vector of fwd[names[a]]; augment with I
    rows = [[Fraction(0)] * (2 * n) for _ in range(n)]
    for a, v in enumerate(names):
        for u, e in fwd[v].exponents().items():
            rows[idx[u]][a] = Fraction(e)
    for a in range(n):
        rows[a][n + a] = Fraction(1)
    for col in range(n):
        piv = next(p for p in range(col, n) if rows[p][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for p in range(n):
            if p != col and rows[p][col]:
                f = rows[p][col]
                rows[p] = [x - f * y for x, y in zip(rows[p], rows[col])]
    # rows now hold E^{-1}; image of names[a] has exponents (E^{-1})[:, a]
    out = {}
    for a, v in enumerate(names):
        exps = {}
        for b in range(n):
            e = rows[b][n + a]
            if e.denominator != 1:
                raise ArithmeticError("parameter change is not unimodular")
            if e:
                exps[names[b]] = int(e)
        out[v] = LaurentMono(exps)
    return out


def closed_form_backward(r: int) -> dict:
    """Closed-form inverse on the parameters; exact only on interior columns."""
    out = {}
    for l in range(1, r + 1):
        out[Var.y(1, l)] = _psi_1(l, r)
        out[Var.y(2, l)] = _psi_2(l, r)
    return out


def twist_map(r: int) -> TwistMap:
    fwd: dict = {}
    bwd: dict = {}
    for l in range(1, r + 1):
        fwd[Var.y(1, l)] = _phi_1(l, r)
        fwd[Var.y(2, l)] = _phi_2(l, r)
    bwd.update(_invert_parameters(r, fwd))
    ys = {i: ymono(1, i) * ymono(2, i) for i in range(1, r + 1)}
    dh = _coweight_product(r, ys)
    psi = {i: bwd[Var.y(1, i)] * bwd[Var.y(2, i)] for i in range(1, r + 1)}
    dpsi = _coweight_product(r, psi)
    for m in range(1, r + 2):
        fwd[Var.torus(m)] = torus(m) * dh[m]
        bwd[Var.torus(m)] = torus(m) / dpsi[m]
    return TwistMap(r, fwd, bwd)


# -- generalized minors -----------------------------------------------

def generalized_minor(M: SymbolicMatrix, i: int, w: WeylElement | None = None) -> LaurentPoly:
    """``Delta_{Lambda_i, w Lambda_i}(M)``: rows ``[1..i]``, columns ``w([1..i])``."""
    n = M.dim
    if not 1 <= i < n:
        raise ValueError("fundamental weight index %d outside [1, %d]" % (i, n - 1))
    if w is None:
        w = WeylElement.identity(n - 1)
    return M.minor(range(1, i + 1), w.image(range(1, i + 1)))


def generalized_minor_lift(M: SymbolicMatrix, i: int, w: WeylElement) -> LaurentPoly:
    """Same minor via the definition ``Delta(M w-bar)`` on the leading principal block."""
    return (M * lift(w)).minor(range(1, i + 1), range(1, i + 1))


def seed_weyl_element(r: int, k: int) -> WeylElement:
    """``c^2_{>2r-k} = s_{j_1} ... s_{j_k}`` for ``k`` in ``[1, 2r]``."""
    word = cxx_word(r)
    return WeylElement.from_word([letter(word, t) for t in range(1, k + 1)], r)

