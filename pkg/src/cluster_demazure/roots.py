"""Type A_r root data, Weyl group elements as permutations, and the c^2 word.

Words are stored left to right as written, ``(j_n, ..., j_1)``; ``letter(word, k)``
returns ``j_k`` (indexed from the right).  A word acts rightmost letter first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "RankTooSmall",
    "IndexOutOfRange",
    "InvalidCaseParams",
    "case_ranges",
    "check_case_params",
    "cartan",
    "Weight",
    "fundamental",
    "simple_root",
    "WeylElement",
    "cxx_word",
    "coxeter_inverse_word",
    "is_reduced",
    "cyclic_sequence",
    "letter",
    "suffix",
    "demazure_word",
    "AlmostPositiveRoot",
    "almost_positive_roots",
    "half",
    "half_up",
]


class RankTooSmall(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


class InvalidCaseParams(ValueError):
    pass


def half(r: int) -> int:
    """floor(r/2)"""
    return r // 2


def half_up(r: int) -> int:
    """floor((r+1)/2): the number of odd letters in [1, r]"""
    return (r + 1) // 2


def cartan(r: int) -> list[list[int]]:
    """Cartan matrix of A_r, 0-based lists."""
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(r)] for i in range(r)]


class Weight(tuple):
    """Integer vector in the fundamental-weight basis; ``w[i-1] = <w, h_i>``."""

    def __new__(cls, coords: Sequence[int]):
        return super().__new__(cls, tuple(int(c) for c in coords))

    @property
    def rank(self) -> int:
        return len(self)

    def pairing(self, i: int) -> int:
        return self[i - 1]

    def __add__(self, other):
        return Weight(a + b for a, b in zip(self, other, strict=True))

    def __sub__(self, other):
        return Weight(a - b for a, b in zip(self, other, strict=True))

    def __neg__(self):
        return Weight(-a for a in self)

    def __mul__(self, n: int):
        return Weight(a * n for a in self)

    __rmul__ = __mul__

    def is_dominant(self) -> bool:
        return all(a >= 0 for a in self)

    def __repr__(self):
        terms = []
        for i, a in enumerate(self, 1):
            if a:
                terms.append(("%dL%d" % (a, i)) if a != 1 else "L%d" % i)
        return "Weight(%s)" % (" + ".join(terms) or "0")


def fundamental(i: int, r: int) -> Weight:
    """Lambda_i; indices outside [1, r] give the zero weight."""
    v = [0] * r
    if 1 <= i <= r:
        v[i - 1] = 1
    return Weight(v)


def simple_root(i: int, r: int) -> Weight:
    """alpha_i = sum_j a_{j,i} Lambda_j; indices outside [1, r] give zero."""
    v = [0] * r
    if 1 <= i <= r:
        v[i - 1] = 2
        if i > 1:
            v[i - 2] = -1
        if i < r:
            v[i] = -1
    return Weight(v)


@dataclass(frozen=True)
class WeylElement:
    """A permutation of [1, r+1] in one-line notation: ``perm[x-1] = w(x)``."""

    perm: tuple[int, ...]

    @classmethod
    def identity(cls, r: int) -> "WeylElement":
        return cls(tuple(range(1, r + 2)))

    @classmethod
    def from_word(cls, word: Sequence[int], r: int) -> "WeylElement":
        img = list(range(1, r + 2))
        # w = s_{a_1} ... s_{a_n}: w(x) applies s_{a_n} first
        for x in range(r + 1):
            v = img[x]
            for a in reversed(word):
                if not 1 <= a <= r:
                    raise ValueError("letter %d out of range for rank %d" % (a, r))
                if v == a:
                    v = a + 1
                elif v == a + 1:
                    v = a
            img[x] = v
        return cls(tuple(img))

    @property
    def rank(self) -> int:
        return len(self.perm) - 1

    def __call__(self, x: int) -> int:
        return self.perm[x - 1]

    def image(self, xs) -> list[int]:
        return sorted(self(x) for x in xs)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(tuple(self(other(x)) for x in range(1, len(self.perm) + 1)))

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.perm)
        for x, wx in enumerate(self.perm, 1):
            inv[wx - 1] = x
        return WeylElement(tuple(inv))

    def length(self) -> int:
        p = self.perm
        return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])

    def one_line(self) -> str:
        return " ".join(map(str, self.perm))


def is_reduced(word: Sequence[int], r: int) -> bool:
    return WeylElement.from_word(word, r).length() == len(word)


def cyclic_sequence(r: int) -> tuple[int, ...]:
    """Evens ascending, then odds ascending."""
    return tuple(range(2, r + 1, 2)) + tuple(range(1, r + 1, 2))


def cxx_word(r: int) -> tuple[int, ...]:
    """Reduced word of c^2 as written left to right (length 2r)."""
    if r < 3:
        raise RankTooSmall("the c^2 construction needs r >= 3, got %d" % r)
    c = cyclic_sequence(r)
    return c + c


def letter(word: Sequence[int], k: int) -> int:
    """``j_k``: the k-th letter counted from the right (1-based)."""
    n = len(word)
    if not 1 <= k <= n:
        raise IndexOutOfRange("letter index %d outside [1, %d]" % (k, n))
    return word[n - k]


def suffix(word: Sequence[int], k: int, r: int) -> WeylElement:
    """``v_{>k} = s_{j_1} s_{j_2} ... s_{j_{n-k}}``."""
    n = len(word)
    if not 0 <= k <= n:
        raise IndexOutOfRange("suffix index %d outside [0, %d]" % (k, n))
    letters = [letter(word, t) for t in range(1, n - k + 1)]
    return WeylElement.from_word(letters, r)


def coxeter_inverse_word(r: int) -> tuple[int, ...]:
    """Word of c^{-1}: the reversed cyclic sequence."""
    return tuple(reversed(cyclic_sequence(r)))


# -- Demazure words of the closed forms --------------------------------

def _keep(letters, r):
    return tuple(a for a in letters if 1 <= a <= r)


def _covered(b: Sequence[int], c: Sequence[int]) -> set[int]:
    out: set[int] = set()
    for bi, ci in zip(b, c):
        out.update(range(bi, ci + 1))
    return out


def case_ranges(case: str, r: int) -> tuple[list[int], dict[int, list[int]]]:
    """Valid ``k`` values and, per ``k``, valid ``l`` values of a family case."""
    h, hu = half(r), half_up(r)
    if case in ("1a", "1b"):
        ks = list(range(hu + 1, r))
        return ks, {k: list(range(0, r - k)) for k in ks}
    if case in ("2a", "2b"):
        ks = list(range(1, hu - 1))
        return ks, {k: list(range(0, hu - k - 1)) for k in ks}
    if case in ("3a", "3b"):
        return [0], {0: list(range(0, h - 1))}
    if case == "3-odd-r":
        return ([0], {0: [0]}) if r % 2 else ([], {})
    raise InvalidCaseParams("unknown case %r" % case)


def check_case_params(case: str, r: int, k: int | None, l: int | None) -> None:
    """Raise InvalidCaseParams unless (k, l) lies in the declared range of ``case``.

    Cases 3a/3b/3-odd-r take no ``k``; ``None`` and 0 are both accepted.
    """
    if r < 3:
        raise RankTooSmall("rank must be >= 3")
    ks, ls = case_ranges(case, r)
    kk = 0 if (k is None and case.startswith("3")) else k
    ll = 0 if (l is None and case == "3-odd-r") else l
    if case.startswith("3") and k not in (None, 0):
        raise InvalidCaseParams("case %s takes no k" % case)
    if kk not in ls or ll not in ls[kk]:
        raise InvalidCaseParams("(k, l) = (%s, %s) outside the range of case %s at r=%d"
                                % (k, l, case, r))


def demazure_word(case: str, r: int, k: int | None = None, l: int | None = None,
                  b: Sequence[int] = (), c: Sequence[int] = ()) -> tuple[int, ...]:
    """Word (left to right) of the Weyl element indexing one Demazure summand.

    ``case`` is one of ``1a 1b 2a 2b 3a 3b 3-odd-r``.  Empty ``b``/``c`` gives
    the principal word (``w_1 .. w_6``); otherwise ``w_i(b, c)``.  Letters
    outside ``[1, r]`` are the identity and are dropped; Kronecker-conditioned
    letters are omitted when the condition fires.
    """
    check_case_params(case, r, k, l)
    word = cxx_word(r)
    cov = _covered(b, c)
    principal = not b
    if case in ("1a", "1b"):
        j = letter(word, k)
        tail = [j - 2 * q - 2 for q in range(l) if q not in cov]
        if case == "1a":
            return _keep(tail, r)
        omit = (not principal) and c[-1] == l
        head = [j - 2 * l - 3] + ([] if omit else [j - 2 * l - 2])
        return _keep(head + tail, r)
    if case in ("2a", "2b"):
        j = letter(word, k)
        tail = [j - 2 * q + 1 for q in range(1, l + 2) if q not in cov]
        omit_b = (not principal) and b[0] == 0
        head = [j + 2] + ([] if omit_b else [j + 1])
        if case == "2a":
            return _keep(head + tail, r)
        omit_c = (not principal) and c[-1] == l + 2
        mid = [j - 2 * l - 4] + ([] if omit_c else [j - 2 * l - 3])
        return _keep(head + mid + tail, r)
    if case in ("3a", "3b"):
        tail = [2 * q for q in range(1, l + 2) if q not in cov]
        if case == "3a":
            return _keep(tail, r)
        omit = (not principal) and c[-1] == l + 2
        head = [2 * l + 5] + ([] if omit else [2 * l + 4])
        return _keep(head + tail, r)
    if case == "3-odd-r":
        return _keep([2 * q for q in range(1, (r - 1) // 2 + 1) if q not in cov], r)
    raise InvalidCaseParams("unknown case %r" % case)


@dataclass(frozen=True, order=True)
class AlmostPositiveRoot:
    """``-alpha_a`` when ``negative`` (then ``a == b``), else alpha_a + ... + alpha_b."""

    negative: bool
    a: int
    b: int

    @classmethod
    def neg_simple(cls, i: int) -> "AlmostPositiveRoot":
        return cls(True, i, i)

    @classmethod
    def interval(cls, a: int, b: int) -> "AlmostPositiveRoot":
        if a > b:
            raise ValueError("empty interval")
        return cls(False, a, b)

    def weight(self, r: int) -> Weight:
        if self.negative:
            return -simple_root(self.a, r)
        total = Weight([0] * r)
        for i in range(self.a, self.b + 1):
            total = total + simple_root(i, r)
        return total

    def __str__(self):
        if self.negative:
            return "-a%d" % self.a
        return "+".join("a%d" % i for i in range(self.a, self.b + 1))


def almost_positive_roots(r: int) -> list[AlmostPositiveRoot]:
    if r < 1:
        raise ValueError("rank must be positive")
    neg = [AlmostPositiveRoot.neg_simple(i) for i in range(1, r + 1)]
    pos = [AlmostPositiveRoot.interval(a, b) for a in range(1, r + 1) for b in range(a, r + 1)]
    return neg + pos
