"""Closed forms of the non-initial cluster variables and their mutation sequences.

Every family is keyed by a case tag and ``(k, l)``.  Column indices outside
``[1, r]`` collapse: ``Y_{s,j}``, ``A_{1,j}``, ``Lambda_j`` and ``s_j`` become
trivial, and a factor ``1 + A_{1,j}^{-1}`` attached to a trivial letter is 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..crystal import CrystalMonomial, DemazureSpec, a_monomial, demazure_sum
from ..exactalg import LaurentMono, LaurentPoly, torus
from ..exactalg import y as ymono
from ..roots import (AlmostPositiveRoot, InvalidCaseParams, RankTooSmall, Weight,
                     case_ranges, check_case_params, cxx_word, demazure_word,
                     fundamental, half, half_up, letter, simple_root)

__all__ = [
    "CASES",
    "IndexPairFamily",
    "ClosedForm",
    "enumerate_Rpl",
    "a_bracket",
    "alpha_bracket",
    "h_monomial",
    "mutation_sequence",
    "target_index",
    "closed_form",
    "all_cases",
    "torus_power",
]

CASES = ("init-odd", "init-even", "mu-k", "remainexp",
         "1a", "1b", "2a", "2b", "3a", "3b", "3-odd-r")


@dataclass(frozen=True)
class IndexPairFamily:
    b: tuple
    c: tuple

    @property
    def p(self) -> int:
        return len(self.b)

    def covered(self) -> set[int]:
        out: set[int] = set()
        for bi, ci in zip(self.b, self.c):
            out.update(range(bi, ci + 1))
        return out


def enumerate_Rpl(p: int, l: int) -> list[IndexPairFamily]:
    """All ``0 <= b_1 < c_1 < b_2 < ... < c_p <= l``."""
    if p < 1 or l < 0:
        return []
    return [IndexPairFamily(tuple(t[0::2]), tuple(t[1::2]))
            for t in combinations(range(l + 1), 2 * p)]


def _all_families(l: int) -> list[IndexPairFamily]:
    out = []
    for p in range(1, (l + 1) // 2 + 1):
        out.extend(enumerate_Rpl(p, l))
    return out


def _A(i: int, r: int) -> LaurentMono:
    return a_monomial(1, i, r)


def a_bracket(b: int, c: int, x: int, r: int) -> LaurentMono:
    """``A[b,c;x] = (prod_{s=b}^{c-1} A_{1,x-2s-2} A_{1,x-2s-3})^{-1} A_{1,x-2c-2}^{-1}``."""
    if not b < c:
        raise ValueError("a_bracket needs b < c")
    m = _A(x - 2 * c - 2, r)
    for s in range(b, c):
        m = m * _A(x - 2 * s - 2, r) * _A(x - 2 * s - 3, r)
    return m.inverse()


def alpha_bracket(b, c, x: int, r: int) -> Weight:
    """``alpha[b,c;x]``: the weight lost to ``prod_i A[b_i,c_i;x]``."""
    total = Weight([0] * r)
    for bi, ci in zip(b, c):
        for t in range(x - 2 * ci - 2, x - 2 * bi - 1):
            total = total + simple_root(t, r)
    return total


def _brackets(fam: IndexPairFamily, x: int, r: int, mirror: bool = False) -> LaurentMono:
    m = LaurentMono.unit()
    for bi, ci in zip(fam.b, fam.c):
        m = m * (a_bracket(-ci, -bi, x, r) if mirror else a_bracket(bi, ci, x, r))
    return m


def _ys(cols, s: int, r: int) -> LaurentMono:
    m = LaurentMono.unit()
    for j in cols:
        m = m * ymono(s, j, r)
    return m


def torus_power(lam: Weight) -> LaurentMono:
    """``a^lam`` with ``a^{Lambda_i} = a_1 ... a_i``."""
    m = LaurentMono.unit()
    r = len(lam)
    for i in range(1, r + 1):
        tail = sum(lam[i - 1:])
        if tail:
            m = m * torus(i) ** tail
    return m


def _lam(indices, r: int) -> Weight:
    total = Weight([0] * r)
    for i in indices:
        total = total + fundamental(i, r)
    return total


def _f1(t: int, r: int) -> LaurentPoly:
    """``1 + A_{1,t}^{-1}``, or 1 when ``s_t`` is trivial."""
    if not 1 <= t <= r:
        return LaurentPoly.const(1)
    return LaurentPoly.const(1) + LaurentPoly.monomial(_A(t, r).inverse())


def _f2(t: int, u: int, r: int) -> LaurentPoly:
    """``1 + A_{1,t}^{-1} + A_{1,t}^{-1} A_{1,u}^{-1}`` with trivial letters dropped."""
    if not 1 <= t <= r:
        return LaurentPoly.const(1)
    return LaurentPoly.const(1) + LaurentPoly.monomial(_A(t, r).inverse()) * _f1(u, r)


def _delta_factor(fires: bool, t: int, u: int, r: int) -> LaurentPoly:
    # 1 - delta + A_t^{-1+delta}(1 + A_u^{-1}) split on the Kronecker condition
    return _f1(u, r) if fires else _f2(t, u, r)


def _prod(polys) -> LaurentPoly:
    out = LaurentPoly.const(1)
    for p in polys:
        out = out * p
    return out


def h_monomial(which: int, r: int, k: int | None = None, l: int = 0) -> LaurentMono:
    """``H_1 .. H_6``; ``k`` is needed for ``H_1 .. H_4``."""
    if which in (1, 2):
        check_case_params("1a", r, k, l)
        j = letter(cxx_word(r), k)
        if which == 1:
            return _ys([j - 2 * t - 2 for t in range(l)], 1, r) * _ys([j - 2 * t - 1 for t in range(l + 1)], 2, r)
        return _ys([j - 2 * t - 2 for t in range(l + 1)], 1, r) * _ys([j - 2 * t - 1 for t in range(l + 1)], 2, r)
    if which in (3, 4):
        check_case_params("2a", r, k, l)
        j = letter(cxx_word(r), k)
        if which == 3:
            return _ys([j - 2 * t + 1 for t in range(l + 2)], 1, r) * _ys([j - 2 * t for t in range(l + 2)], 2, r)
        return _ys([j - 2 * t + 1 for t in range(l + 3)], 1, r) * _ys([j - 2 * t for t in range(l + 2)], 2, r)
    if which in (5, 6):
        check_case_params("3a", r, None, l)
        if which == 5:
            return _ys([2 * t + 2 for t in range(l + 1)], 1, r) * _ys([2 * t + 1 for t in range(l + 2)], 2, r)
        return _ys([2 * t + 2 for t in range(l + 2)], 1, r) * _ys([2 * t + 1 for t in range(l + 2)], 2, r)
    raise InvalidCaseParams("H_%s does not exist" % which)


# --- mutation sequences -------------------------------------------------------

def _mu_family_1(r, k, l):
    seq = []
    for t in range(l + 1):
        seq += [k + t, k + t + 1, k - half(r) + t]
    return seq


def _mu_family_2(r, k, l):
    seq = [k]
    for t in range(l + 1):
        seq += [half(r) + k + t + 1, half(r) + k + t + 2, k + t + 1]
    return seq


def _mu_family_3(r, l):
    seq = [half_up(r)]
    for t in range(l + 1):
        seq += [r - t, r - t - 1, half_up(r) - t - 1]
    return seq


def _check_simple(case, r, k):
    if r < 3:
        raise RankTooSmall("rank must be >= 3")
    hu = half_up(r)
    if case in ("init-odd", "init-even", "mu-k"):
        lo, hi = {"init-odd": (1, hu), "init-even": (hu + 1, r), "mu-k": (1, r)}[case]
        if k is None or not lo <= k <= hi:
            raise InvalidCaseParams("k=%s outside [%d, %d] for %s" % (k, lo, hi, case))
    elif case == "remainexp":
        # k = 0 names mu_r mu_{floor((r+1)/2)}; k in [floor(r/2)+2, r] the second
        # family (for odd r this includes k = hu + 1, giving a^{Lambda_{r-2}} Y_{2,r})
        if not (k == 0 or (k is not None and half(r) + 2 <= k <= r)):
            raise InvalidCaseParams("k=%s invalid for remainexp" % k)


def mutation_sequence(case: str, r: int, k: int | None = None, l: int | None = None) -> list[int]:
    """Labels in application order (first element applied first)."""
    if case in ("init-odd", "init-even"):
        _check_simple(case, r, k)
        return []
    if case == "mu-k":
        _check_simple(case, r, k)
        return [k]
    if case == "remainexp":
        _check_simple(case, r, k)
        if k == 0:
            return [half_up(r), r]
        return [k, k - half(r) - 1]
    check_case_params(case, r, k, l)
    if case == "1a":
        return _mu_family_1(r, k, l)
    if case == "1b":
        return _mu_family_1(r, k, l) + [k + l + 1]
    if case == "2a":
        return _mu_family_2(r, k, l)
    if case == "2b":
        return _mu_family_2(r, k, l) + [half(r) + k + l + 2]
    if case == "3a":
        return _mu_family_3(r, l)
    if case == "3b":
        return _mu_family_3(r, l) + [r - l - 1]
    if case == "3-odd-r":
        m = (r - 5) // 2
        base = _mu_family_3(r, m) if m >= 0 else [half_up(r)]
        return base + [(r + 3) // 2, 1]
    raise InvalidCaseParams("unknown case %r" % case)


def target_index(case: str, r: int, k: int | None = None, l: int | None = None) -> int:
    """Seed label carrying the variable after ``mutation_sequence``."""
    if case in ("init-odd", "init-even", "mu-k"):
        _check_simple(case, r, k)
        return k
    if case == "remainexp":
        _check_simple(case, r, k)
        return r if k == 0 else k - half(r) - 1
    check_case_params(case, r, k, l)
    return {
        "1a": lambda: k - half(r) + l,
        "1b": lambda: k + l + 1,
        "2a": lambda: k + l + 1,
        "2b": lambda: half(r) + k + l + 2,
        "3a": lambda: half_up(r) - l - 1,
        "3b": lambda: r - l - 1,
        "3-odd-r": lambda: 1,
    }[case]()


# --- closed forms -------------------------------------------------------------

@dataclass
class ClosedForm:
    case: str
    r: int
    k: int | None
    l: int | None
    torus_weight: Weight
    groups: list  # [(highest LaurentMono, factor LaurentPoly, word)]
    lam: Weight  # weight of the principal Demazure crystal
    root: AlmostPositiveRoot | None = None
    shifted: list = field(default_factory=list)  # expected weights per group

    @property
    def value(self) -> LaurentPoly:
        total = LaurentPoly.zero()
        for hmono, factor, _ in self.groups:
            total = total + LaurentPoly.monomial(hmono) * factor
        return LaurentPoly.monomial(torus_power(self.torus_weight)) * total

    @property
    def demazure(self) -> list[DemazureSpec]:
        return [DemazureSpec(CrystalMonomial(h, self.r), w) for h, _, w in self.groups]

    def demazure_value(self) -> LaurentPoly:
        total = LaurentPoly.zero()
        for spec in self.demazure:
            total = total + demazure_sum(spec)
        return LaurentPoly.monomial(torus_power(self.torus_weight)) * total

    def key(self) -> tuple:
        return (CASES.index(self.case), self.k or 0, self.l or 0)

    def label(self) -> str:
        parts = [self.case]
        if self.k is not None:
            parts.append("k=%d" % self.k)
        if self.l is not None:
            parts.append("l=%d" % self.l)
        return " ".join(parts)


def _root_of(lam: Weight, r: int) -> AlmostPositiveRoot:
    support = [i + 1 for i, a in enumerate(lam) if a]
    return AlmostPositiveRoot.interval(support[0], support[-1])


def _cf(case, r, k, l, tw, groups, lam_idx, x=None, mirror=False):
    """``groups`` holds ``(H, factor, word, expect)``; ``expect`` is None for the
    principal crystal, an IndexPairFamily for a shifted one, or an explicit Weight."""
    lam = _lam(lam_idx, r)
    shifted = []
    for _, _, _, ex in groups:
        if ex is None:
            shifted.append(lam)
        elif isinstance(ex, IndexPairFamily):
            shifted.append(lam - (_mirror_alpha(ex, r) if mirror else alpha_bracket(ex.b, ex.c, x, r)))
        else:
            shifted.append(ex)
    return ClosedForm(case, r, k, l, _lam(tw, r), [g[:3] for g in groups], lam,
                      _root_of(lam, r), shifted)


def _mirror_alpha(fam, r):
    # weight of prod A[-c_i,-b_i;2]: columns 2b_i .. 2c_i
    total = Weight([0] * r)
    for bi, ci in zip(fam.b, fam.c):
        for t in range(2 * bi, 2 * ci + 1):
            total = total + simple_root(t, r)
    return total


def closed_form(case: str, r: int, k: int | None = None, l: int | None = None) -> ClosedForm:
    if r < 3:
        raise RankTooSmall("rank must be >= 3")
    word = cxx_word(r)
    one = LaurentPoly.const(1)
    Y1 = lambda j: ymono(1, j, r)
    Y2 = lambda j: ymono(2, j, r)
    Ainv = lambda j: LaurentPoly.monomial(_A(j, r).inverse()) if 1 <= j <= r else one

    if case in ("init-odd", "init-even"):
        _check_simple(case, r, k)
        j = letter(word, k)
        if case == "init-odd":
            groups = [(Y1(j), _f1(j, r), demazure_word_simple([j], r), None)]
        else:
            fac = one + Ainv(j) * _f1(j - 1, r) * _f1(j + 1, r)
            groups = [(Y1(j), fac, demazure_word_simple([j + 1, j - 1, j], r), None)]
        cf = _cf(case, r, k, None, [j], groups, [j])
        cf.root = AlmostPositiveRoot.neg_simple(j)
        return cf

    if case == "mu-k":
        _check_simple(case, r, k)
        j = letter(word, k)
        hu = half_up(r)
        if k < hu:
            groups = []
            if j + 1 <= r:
                groups.append((Y1(j - 2) * Y1(j) * Y1(j + 2), _f1(j - 2, r) * _f1(j + 2, r),
                               demazure_word_simple([j - 2, j + 2], r), _lam([j - 2, j, j + 2], r)))
            groups.append((Y1(j - 1) * Y2(j) * Y1(j + 1),
                           _f2(j - 1, j - 2, r) * _f2(j + 1, j + 2, r),
                           demazure_word_simple([j - 2, j - 1, j + 2, j + 1], r), None))
            return _cf(case, r, k, None, [j - 1, j + 1], groups, [j - 1, j, j + 1])
        if k == hu:
            groups = [(Y1(2) * Y2(1), _f2(2, 3, r), demazure_word_simple([3, 2], r), None)]
            return _cf(case, r, k, None, [2], groups, [1, 2])
        groups = [(Y2(j), one, (), None)]
        return _cf(case, r, k, None, [j - 1, j + 1], groups, [j])

    if case == "remainexp":
        if k == 0:
            groups = [(Y2(1), one, (), None)]
            return _cf(case, r, 0, None, [3], groups, [1])
        _check_simple(case, r, k)
        j = letter(word, k)
        groups = [(Y2(j + 1) * Y1(j + 2), _f2(j + 2, j + 3, r),
                   demazure_word_simple([j + 3, j + 2], r), None)]
        return _cf(case, r, k, None, [j - 1, j + 2], groups, [j + 1, j + 2])

    check_case_params(case, r, k, l)

    if case in ("1a", "1b"):
        j = letter(word, k)
        qs = list(range(l))
        base = [j - 2 * q - 2 for q in qs]
        rest = lambda fam: _prod(_f1(j - 2 * q - 2, r) for q in qs if q not in fam.covered())
        if case == "1a":
            H = h_monomial(1, r, k, l)
            groups = [(H, _prod(_f1(t, r) for t in base), demazure_word("1a", r, k, l), None)]
            for fam in _all_families(l - 1):
                groups.append((H * _brackets(fam, j, r), rest(fam),
                               demazure_word("1a", r, k, l, fam.b, fam.c), fam))
            tw = [j - 2 * s + 1 for s in range(l + 3)] + [j - 2 * s - 2 for s in range(l)]
            return _cf(case, r, k, l, tw, groups, range(j - 2 * l - 1, j), x=j)
        H = h_monomial(2, r, k, l)
        t0, t1 = j - 2 * l - 2, j - 2 * l - 3
        groups = [(H, _f2(t0, t1, r) * _prod(_f1(t, r) for t in base),
                   demazure_word("1b", r, k, l), None)]
        for fam in _all_families(l):
            fac = _delta_factor(fam.c[-1] == l, t0, t1, r) * rest(fam)
            groups.append((H * _brackets(fam, j, r), fac,
                           demazure_word("1b", r, k, l, fam.b, fam.c), fam))
        tw = []
        for s in range(l + 1):
            tw += [j - 2 * s + 1, j - 2 * s - 2]
        return _cf(case, r, k, l, tw, groups, range(j - 2 * l - 2, j), x=j)

    if case in ("2a", "2b"):
        j = letter(word, k)
        qs = list(range(1, l + 2))
        base = [j - 2 * q + 1 for q in qs]
        rest = lambda fam: _prod(_f1(j - 2 * q + 1, r) for q in qs if q not in fam.covered())
        edge = j == r
        if case == "2a":
            H = h_monomial(3, r, k, l)
            lead = one if edge else _f2(j + 1, j + 2, r)
            groups = [(H, lead * _prod(_f1(t, r) for t in base), demazure_word("2a", r, k, l), None)]
            for fam in _all_families(l + 1):
                if edge and fam.b[0] == 0:
                    continue
                fac = (one if edge else _delta_factor(fam.b[0] == 0, j + 1, j + 2, r)) * rest(fam)
                groups.append((H * _brackets(fam, j + 3, r), fac,
                               demazure_word("2a", r, k, l, fam.b, fam.c), fam))
            tw = []
            for s in range(l + 2):
                tw += [j - 2 * s - 2, j - 2 * s + 1]
            return _cf(case, r, k, l, tw, groups, range(j - 2 * l - 2, j + 2), x=j + 3)
        H = h_monomial(4, r, k, l)
        t0, t1 = j - 2 * l - 3, j - 2 * l - 4
        lead = one if edge else _f2(j + 1, j + 2, r)
        groups = [(H, lead * _f2(t0, t1, r) * _prod(_f1(t, r) for t in base),
                   demazure_word("2b", r, k, l), None)]
        for fam in _all_families(l + 2):
            if edge and fam.b[0] == 0:
                continue
            fac = (one if edge else _delta_factor(fam.b[0] == 0, j + 1, j + 2, r))
            fac = fac * _delta_factor(fam.c[-1] == l + 2, t0, t1, r) * rest(fam)
            groups.append((H * _brackets(fam, j + 3, r), fac,
                           demazure_word("2b", r, k, l, fam.b, fam.c), fam))
        tw = [j - 2 * s - 2 for s in range(l)] + [j - 2 * s + 1 for s in range(l + 3)]
        return _cf(case, r, k, l, tw, groups, range(j - 2 * l - 3, j + 2), x=j + 3)

    if case in ("3a", "3b", "3-odd-r"):
        if case == "3-odd-r":
            top = (r - 1) // 2
            H = _ys([2 * t + 2 for t in range((r - 1) // 2)], 1, r) * _ys([2 * t + 1 for t in range((r + 1) // 2)], 2, r)
            tw = [2 * s + 3 for s in range((r - 3) // 2)] + [2 * s + 2 for s in range((r - 1) // 2)]
            lam_idx = range(1, r + 1)
        elif case == "3a":
            top = l + 1
            H = h_monomial(5, r, None, l)
            tw = [2 * s + 3 for s in range(l + 2)] + [2 * s + 2 for s in range(l + 1)]
            lam_idx = range(1, 2 * l + 4)
        else:
            top = l + 1
            H = h_monomial(6, r, None, l)
            tw = [2 * s + 3 for s in range(l)] + [2 * s + 2 for s in range(l + 2)]
            lam_idx = range(1, 2 * l + 5)
        qs = list(range(1, top + 1))
        rest = lambda fam: _prod(_f1(2 * q, r) for q in qs if q not in fam.covered())
        fams = [f for f in _all_families(top if case != "3b" else l + 2) if f.b[0] > 0]
        kk = None
        ll = None if case == "3-odd-r" else l
        if case == "3b":
            t0, t1 = 2 * l + 4, 2 * l + 5
            groups = [(H, _f2(t0, t1, r) * _prod(_f1(2 * q, r) for q in qs),
                       demazure_word(case, r, kk, ll), None)]
            for fam in fams:
                fac = _delta_factor(fam.c[-1] == l + 2, t0, t1, r) * rest(fam)
                groups.append((H * _brackets(fam, 2, r, mirror=True), fac,
                               demazure_word(case, r, kk, ll, fam.b, fam.c), fam))
        else:
            groups = [(H, _prod(_f1(2 * q, r) for q in qs), demazure_word(case, r, kk, ll), None)]
            for fam in fams:
                groups.append((H * _brackets(fam, 2, r, mirror=True), rest(fam),
                               demazure_word(case, r, kk, ll, fam.b, fam.c), fam))
        return _cf(case, r, kk, ll, tw, groups, lam_idx, mirror=True)

    raise InvalidCaseParams("unknown case %r" % case)


def demazure_word_simple(letters, r: int) -> tuple:
    return tuple(a for a in letters if 1 <= a <= r)


def all_cases(r: int) -> list[tuple]:
    """Every ``(case, k, l)`` that applies at rank ``r``, in a fixed order."""
    hu = half_up(r)
    out = []
    out += [("init-odd", k, None) for k in range(1, hu + 1)]
    out += [("init-even", k, None) for k in range(hu + 1, r + 1)]
    out += [("mu-k", k, None) for k in range(1, r + 1)]
    out += [("remainexp", 0, None)]
    out += [("remainexp", k, None) for k in range(half(r) + 2, r + 1)]
    for case in ("1a", "1b", "2a", "2b", "3a", "3b"):
        ks, ls = case_ranges(case, r)
        for k in ks:
            for l in ls[k]:
                out.append((case, None if case.startswith("3") else k, l))
    if r % 2:
        out.append(("3-odd-r", None, None))
    return out
