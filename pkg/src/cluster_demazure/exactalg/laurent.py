"""Sparse Laurent polynomials with integer coefficients.

Variables are torus coordinates ``a[i]`` and crystal variables ``Y[s,j]``.
The global variable order (used for every printed or serialized form) puts
torus variables first by index, then ``Y`` variables by ``(s, j)``.
Terms are printed in descending graded-lexicographic order over it.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from ._backend import WIDTH, DivisionFailed, kernels

__all__ = [
    "Var",
    "LaurentMono",
    "LaurentPoly",
    "NotDivisible",
    "UnmappedVariable",
    "ZeroSubstitution",
    "ParseError",
    "y",
    "torus",
    "add",
    "mul",
    "divide_exact",
    "substitute",
    "eval_rational",
]


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


class UnmappedVariable(KeyError):
    pass


class ZeroSubstitution(ZeroDivisionError):
    pass


class ParseError(ValueError):
    pass


class Var(NamedTuple):
    """A variable id.  ``kind`` 0 is torus ``a[s]``; kind 1 is ``Y[s,j]``."""

    kind: int
    s: int
    j: int

    @classmethod
    def torus(cls, i: int) -> "Var":
        if i < 1:
            raise ValueError("torus index must be positive, got %d" % i)
        return cls(0, i, 0)

    @classmethod
    def y(cls, s: int, j: int) -> "Var":
        if j < 1:
            raise ValueError("Y column index must be positive, got %d" % j)
        return cls(1, s, j)

    @property
    def is_torus(self) -> bool:
        return self.kind == 0

    def __str__(self) -> str:
        if self.kind == 0:
            return "a[%d]" % self.s
        return "Y[%d,%d]" % (self.s, self.j)

    __repr__ = __str__


# slot registry: a variable's slot is its digit position inside packed keys
_slot: dict[Var, int] = {}
_slot_var: list[Var] = []


def _slot_of(v: Var) -> int:
    i = _slot.get(v)
    if i is None:
        i = len(_slot_var)
        _slot[v] = i
        _slot_var.append(v)
    return i


def _pack(exps: Mapping[Var, int]) -> int:
    key = 0
    lim = 1 << (WIDTH - 1)
    for v, e in exps.items():
        if e:
            if not -lim < e < lim:
                raise OverflowError("exponent %d out of range" % e)
            key += e << (WIDTH * _slot_of(v))
    return key


def _unpack(key: int) -> dict[Var, int]:
    return {_slot_var[i]: e for i, e in kernels.decode(key)}


class LaurentMono:
    """An invertible monomial; immutable and hashable."""

    __slots__ = ("key",)

    def __init__(self, exps: Mapping[Var, int] | None = None, *, key: int | None = None):
        self.key = key if key is not None else (_pack(exps) if exps else 0)

    @classmethod
    def unit(cls) -> "LaurentMono":
        return cls(key=0)

    def exponents(self) -> dict[Var, int]:
        return _unpack(self.key)

    def items(self) -> list[tuple[Var, int]]:
        return sorted(self.exponents().items())

    def degree(self, v: Var) -> int:
        return self.exponents().get(v, 0)

    def total_degree(self) -> int:
        return sum(e for _, e in kernels.decode(self.key))

    def is_unit(self) -> bool:
        return self.key == 0

    def __mul__(self, other):
        if isinstance(other, LaurentMono):
            return LaurentMono(key=self.key + other.key)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, LaurentMono):
            return LaurentMono(key=self.key - other.key)
        return NotImplemented

    def __pow__(self, n: int) -> "LaurentMono":
        return LaurentMono(key=self.key * n)

    def inverse(self) -> "LaurentMono":
        return LaurentMono(key=-self.key)

    def __eq__(self, other):
        return isinstance(other, LaurentMono) and other.key == self.key

    def __hash__(self):
        return hash(("mono", self.key))

    def _sort_key(self):
        return _grlex_key(self.exponents())

    def __lt__(self, other):
        return self._sort_key() < other._sort_key()

    def to_text(self) -> str:
        return _mono_text(self.exponents()) or "1"

    __str__ = to_text

    def __repr__(self):
        return "LaurentMono(%s)" % self.to_text()

    @classmethod
    def from_text(cls, text: str) -> "LaurentMono":
        p = LaurentPoly.from_text(text)
        if not p.is_monomial() or p.coefficients()[0] != 1:
            raise ParseError("not a monomial: %r" % text)
        return p.leading_monomial()


def y(s: int, j: int, r: int | None = None) -> LaurentMono:
    """``Y[s,j]``; columns outside ``[1, r]`` collapse to the unit monomial."""
    if j < 1 or (r is not None and j > r):
        return LaurentMono.unit()
    return LaurentMono({Var.y(s, j): 1})


def torus(i: int) -> LaurentMono:
    return LaurentMono({Var.torus(i): 1})


def _grlex_key(exps: Mapping[Var, int]):
    # descending grlex as an ascending sort key: larger total degree first,
    # then the larger exponent at the first differing variable
    items = sorted(exps.items())
    return (-sum(exps.values()), _LexDesc(items))


class _LexDesc:
    """Sort helper: orders exponent vectors lexicographically, descending."""

    __slots__ = ("items",)

    def __init__(self, items):
        self.items = items

    def __lt__(self, other):
        a = dict(self.items)
        b = dict(other.items)
        for v in sorted(set(a) | set(b)):
            ea, eb = a.get(v, 0), b.get(v, 0)
            if ea != eb:
                return ea > eb
        return False

    def __eq__(self, other):
        return self.items == other.items


def _mono_text(exps: Mapping[Var, int]) -> str:
    parts = []
    for v, e in sorted(exps.items()):
        parts.append(str(v) if e == 1 else "%s^%d" % (v, e))
    return "*".join(parts)


class LaurentPoly:
    """Immutable sparse Laurent polynomial over the integers."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: dict[int, int] | None = None):
        # internal: terms is {packed monomial: nonzero coefficient}
        self._t = terms if terms is not None else {}
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls({})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c} if c else {})

    @classmethod
    def monomial(cls, m: LaurentMono, c: int = 1) -> "LaurentPoly":
        return cls({m.key: c} if c else {})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, LaurentMono]]) -> "LaurentPoly":
        d: dict[int, int] = {}
        for c, m in terms:
            v = d.get(m.key, 0) + c
            if v:
                d[m.key] = v
            else:
                d.pop(m.key, None)
        return cls(d)

    @classmethod
    def sum_of(cls, monos: Iterable[LaurentMono]) -> "LaurentPoly":
        return cls.from_terms((1, m) for m in monos)

    @staticmethod
    def _coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, LaurentMono):
            return LaurentPoly.monomial(x)
        if isinstance(x, int):
            return LaurentPoly.const(x)
        raise TypeError("cannot coerce %r to LaurentPoly" % (x,))

    # -- inspection ---------------------------------------------------
    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def leading_monomial(self) -> LaurentMono:
        return self.terms()[0][1]

    def coefficients(self) -> list[int]:
        return [c for c, _ in self.terms()]

    def terms(self) -> list[tuple[int, LaurentMono]]:
        """Terms in canonical (descending grlex) order."""
        decoded = [(c, k, _unpack(k)) for k, c in self._t.items()]
        order = sorted(set().union(*(d for _, _, d in decoded)))
        decoded.sort(
            key=lambda t: (-sum(t[2].values()), tuple(-t[2].get(v, 0) for v in order))
        )
        return [(c, LaurentMono(key=k)) for c, k, _ in decoded]

    def monomials(self) -> list[LaurentMono]:
        return [m for _, m in self.terms()]

    def coefficient(self, m: LaurentMono) -> int:
        return self._t.get(m.key, 0)

    def variables(self) -> set[Var]:
        out: set[Var] = set()
        for k in self._t:
            out.update(_unpack(k))
        return out

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return LaurentPoly(kernels.add(self._t, o._t, 1))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return LaurentPoly(kernels.add(self._t, o._t, -1))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, LaurentMono):
            return LaurentPoly({k + other.key: c for k, c in self._t.items()})
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return LaurentPoly(kernels.mul(self._t, o._t))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            (k, c), = self._t.items()
            if abs(c) != 1:
                raise ValueError("negative power of a non-unit coefficient")
            return LaurentPoly({k * n: c ** (-n)})
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def divide_exact(self, other) -> "LaurentPoly":
        return divide_exact(self, self._coerce(other))

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._t == other._t
        if isinstance(other, (int, LaurentMono)):
            return self._t == self._coerce(other)._t
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # -- evaluation ---------------------------------------------------
    def substitute(self, sigma: Mapping[Var, LaurentMono]) -> "LaurentPoly":
        return substitute(self, sigma)

    def eval_rational(self, point: Mapping[Var, Fraction | int]) -> Fraction:
        return eval_rational(self, point)

    # -- text and JSON ------------------------------------------------
    def to_text(self) -> str:
        if not self._t:
            return "0"
        out = []
        for idx, (c, m) in enumerate(self.terms()):
            body = _mono_text(m.exponents())
            mag = abs(c)
            if not body:
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = "%d*%s" % (mag, body)
            if idx == 0:
                out.append(("-" if c < 0 else "") + piece)
            else:
                out.append((" - " if c < 0 else " + ") + piece)
        return "".join(out)

    __str__ = to_text

    def __repr__(self):
        return "LaurentPoly(%s)" % self.to_text()

    @classmethod
    def from_text(cls, text: str) -> "LaurentPoly":
        return _Parser(text).parse()

    def to_json_obj(self) -> list:
        return [
            {"coef": c, "exps": [[str(v), e] for v, e in m.items()]}
            for c, m in self.terms()
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: list) -> "LaurentPoly":
        terms = []
        for t in obj:
            exps = {}
            for name, e in t["exps"]:
                exps[_parse_var(name)] = int(e)
            terms.append((int(t["coef"]), LaurentMono(exps)))
        return cls.from_terms(terms)

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        return cls.from_json_obj(json.loads(text))


# -- module-level operations -----------------------------------------

def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def divide_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return ``h`` with ``h * q == p`` or raise :class:`NotDivisible`."""
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    try:
        return LaurentPoly(kernels.divexact(p._t, q._t))
    except DivisionFailed as exc:
        raise NotDivisible(
            "%d-term polynomial is not divisible by %d-term polynomial (%s)"
            % (len(p), len(q), exc)
        ) from None


def substitute(p: LaurentPoly, sigma: Mapping[Var, LaurentMono]) -> LaurentPoly:
    """Apply the monomial map ``sigma`` variable-wise."""
    images: dict[int, int] = {}
    out: dict[int, int] = {}
    for k, c in p._t.items():
        img = 0
        for slot, e in kernels.decode(k):
            im = images.get(slot)
            if im is None:
                v = _slot_var[slot]
                try:
                    im = sigma[v].key
                except KeyError:
                    raise UnmappedVariable(str(v)) from None
                images[slot] = im
            img += e * im
        v = out.get(img, 0) + c
        if v:
            out[img] = v
        else:
            out.pop(img, None)
    return LaurentPoly(out)


def eval_rational(p: LaurentPoly, point: Mapping[Var, Fraction | int]) -> Fraction:
    total = Fraction(0)
    for k, c in p._t.items():
        val = Fraction(c)
        for slot, e in kernels.decode(k):
            v = _slot_var[slot]
            try:
                x = point[v]
            except KeyError:
                raise UnmappedVariable(str(v)) from None
            if x == 0:
                raise ZeroSubstitution("variable %s assigned zero" % (v,))
            val *= Fraction(x) ** e
        total += val
    return total


# -- parsing -----------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<a>a\[\s*(?P<ai>\d+)\s*\])"
    r"|(?P<y>Y\[\s*(?P<ys>-?\d+)\s*,\s*(?P<yj>\d+)\s*\])|(?P<op>[-+*^()]))"
)


def _parse_var(name: str) -> Var:
    m = _TOKEN.fullmatch(name.strip())
    if not m or not (m.group("a") or m.group("y")):
        raise ParseError("bad variable %r" % name)
    if m.group("a"):
        return Var.torus(int(m.group("ai")))
    return Var.y(int(m.group("ys")), int(m.group("yj")))


class _Parser:
    """Grammar: ``poly := ['-'] term (('+'|'-') term)*``,
    ``term := factor ('*' factor)*``, ``factor := INT | var ['^' ['-'] INT]``.
    """

    def __init__(self, text: str):
        self.text = text
        self.toks = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError("unexpected input at %d in %r" % (pos, text))
            pos = m.end()
            if m.group("int") is not None:
                self.toks.append(("int", int(m.group("int"))))
            elif m.group("a"):
                self.toks.append(("var", Var.torus(int(m.group("ai")))))
            elif m.group("y"):
                self.toks.append(("var", Var.y(int(m.group("ys")), int(m.group("yj")))))
            else:
                self.toks.append(("op", m.group("op")))
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self) -> LaurentPoly:
        if not self.toks:
            raise ParseError("empty polynomial")
        terms = []
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        terms.append(self.term(sign))
        while self.i < len(self.toks):
            kind, op = self.take()
            if kind != "op" or op not in "+-":
                raise ParseError("expected + or - in %r" % self.text)
            terms.append(self.term(1 if op == "+" else -1))
        return LaurentPoly.from_terms(terms)

    def term(self, sign: int):
        coef = sign
        exps: dict[Var, int] = {}
        while True:
            kind, val = self.take()
            if kind == "int":
                coef *= val
            elif kind == "var":
                e = 1
                if self.peek() == ("op", "^"):
                    self.take()
                    neg = 1
                    if self.peek() == ("op", "-"):
                        self.take()
                        neg = -1
                    k2, n = self.take()
                    if k2 != "int":
                        raise ParseError("expected exponent in %r" % self.text)
                    e = neg * n
                exps[val] = exps.get(val, 0) + e
            else:
                raise ParseError("expected factor in %r" % self.text)
            if self.peek() == ("op", "*"):
                self.take()
                continue
            break
        return coef, LaurentMono(exps)
