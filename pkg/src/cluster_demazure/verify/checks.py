"""End-to-end checkers; each returns a Report whose rows are in a fixed key order."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from ..cluster import build_initial_seed, enumerate_cluster_variables, mutate_path
from ..crystal import CrystalMonomial, DemazureSpec, demazure_sum, kashiwara_e, kashiwara_f
from ..exactalg import LaurentMono, LaurentPoly, Var, substitute, torus
from ..exactalg import y as ymono
from ..group import (SymbolicMatrix, elem_upper, generalized_minor, torus_diag,
                     twist_map, xbar, xg_product)
from ..roots import (AlmostPositiveRoot, WeylElement, almost_positive_roots,
                     coxeter_inverse_word, cxx_word, fundamental, letter, simple_root)
from .closed_forms import (all_cases, closed_form, mutation_sequence,
                           target_index, torus_power)

__all__ = [
    "VerificationFailed",
    "CaseResult",
    "Report",
    "dominant_monomials",
    "initial_demazure_spec",
    "check_case",
    "verify_thm1",
    "verify_maincor",
    "verify_factorization",
    "verify_minor_identities",
    "verify_crystal_axioms",
]


class VerificationFailed(AssertionError):
    def __init__(self, message: str, term: str | None = None):
        super().__init__(message)
        self.term = term


@dataclass
class CaseResult:
    key: str
    passed: bool
    detail: str = ""

    def to_json_obj(self) -> dict:
        return {"key": self.key, "passed": self.passed, "detail": self.detail}


@dataclass
class Report:
    name: str
    results: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.results)

    @property
    def counts(self) -> tuple[int, int]:
        return sum(c.passed for c in self.results), len(self.results)

    def add(self, key: str, passed: bool, detail: str = "") -> None:
        self.results.append(CaseResult(key, bool(passed), detail))

    def first_failure(self) -> CaseResult | None:
        return next((c for c in self.results if not c.passed), None)

    def raise_if_failed(self) -> None:
        bad = self.first_failure()
        if bad is not None:
            raise VerificationFailed("%s: %s failed: %s" % (self.name, bad.key, bad.detail),
                                     bad.detail or None)

    def to_json_obj(self) -> dict:
        ok, total = self.counts
        return {"name": self.name, "passed": ok, "total": total,
                "results": [c.to_json_obj() for c in self.results]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True)

    def to_table(self) -> str:
        width = max([len(c.key) for c in self.results] + [4])
        lines = []
        for c in self.results:
            line = "%-*s  %s" % (width, c.key, "pass" if c.passed else "FAIL")
            if c.detail and not c.passed:
                line += "  " + c.detail
            lines.append(line)
        ok, total = self.counts
        lines.append("%s: %d/%d cases pass" % (self.name, ok, total))
        return "\n".join(lines) + "\n"


def _first_diff(p: LaurentPoly, q: LaurentPoly) -> str:
    d = p - q
    if not d:
        return ""
    c, m = d.terms()[0]
    return LaurentPoly.monomial(m, c).to_text()


def _strip_torus(m: LaurentMono) -> LaurentMono:
    return LaurentMono({v: e for v, e in m.items() if not v.is_torus})


def dominant_monomials(p: LaurentPoly, r: int) -> list[CrystalMonomial]:
    """Terms of ``p`` (torus factors ignored) whose monomial has every epsilon_i = 0."""
    out = []
    for m in p.monomials():
        cm = CrystalMonomial(_strip_torus(m), r)
        if cm.is_dominant():
            out.append(cm)
    return out


def initial_demazure_spec(r: int, k: int) -> DemazureSpec:
    """Initial variable ``k`` as ``B(Lambda_{j_k})`` on ``s_{j_1} ... s_{j_k}``."""
    word = cxx_word(r)
    j = letter(word, k)
    return DemazureSpec(CrystalMonomial(ymono(1, j), r), [letter(word, t) for t in range(1, k + 1)])


def check_case(r: int, case: str, k=None, l=None, seed=None) -> CaseResult:
    """Three-way comparison plus the highest-monomial invariants for one case."""
    cf = closed_form(case, r, k, l)
    key = "r=%d %s" % (r, cf.label())
    s0 = seed if seed is not None else build_initial_seed(r)
    got = mutate_path(s0, mutation_sequence(case, r, k, l)).var(target_index(case, r, k, l))
    value = cf.value
    if got != value:
        return CaseResult(key, False, "mutation != closed form at " + _first_diff(got, value))
    dem = cf.demazure_value()
    if dem != value:
        return CaseResult(key, False, "closed form != Demazure sum at " + _first_diff(value, dem))
    dom = dominant_monomials(value, r)
    if len(dom) != len(cf.groups):
        return CaseResult(key, False, "%d dominant monomials for %d crystals" % (len(dom), len(cf.groups)))
    for (h, _, _), w in zip(cf.groups, cf.shifted):
        if CrystalMonomial(h, r).wt != w:
            return CaseResult(key, False, "highest %s has weight %s, expected %s"
                              % (h.to_text(), CrystalMonomial(h, r).wt, w))
    return CaseResult(key, True)


def verify_thm1(r: int, case: str | None = None, k=None, l=None) -> Report:
    rep = Report("thm1 r=%d" % r)
    s0 = build_initial_seed(r)
    if case is not None:
        todo = [(case, k, l)]
    else:
        todo = all_cases(r)
    for c, kk, ll in todo:
        res = check_case(r, c, kk, ll, seed=s0)
        rep.results.append(res)
    return rep


def verify_maincor(r: int, budget: int = 100000) -> Report:
    """Almost positive roots -> cluster variables is a bijection onto the BFS set."""
    rep = Report("maincor r=%d" % r)
    s0 = build_initial_seed(r)
    found = enumerate_cluster_variables(s0, budget=budget)
    word = cxx_word(r)
    claimed: dict[AlmostPositiveRoot, LaurentPoly] = {}
    for k in range(1, r + 1):
        j = letter(word, k)
        root = AlmostPositiveRoot.neg_simple(j)
        spec = initial_demazure_spec(r, k)
        value = LaurentPoly.monomial(torus_power(fundamental(j, r))) * demazure_sum(spec)
        ok = value == s0.var(k)
        rep.add("%s -> initial %d" % (root, k), ok,
                "" if ok else "initial variable != Demazure sum at " + _first_diff(s0.var(k), value))
        claimed[root] = s0.var(k)
    for c, kk, ll in all_cases(r):
        if c in ("init-odd", "init-even"):
            continue
        cf = closed_form(c, r, kk, ll)
        if cf.root in claimed:
            rep.add(str(cf.root), False, "root claimed twice (%s)" % cf.label())
            continue
        claimed[cf.root] = cf.value
    roots = almost_positive_roots(r)
    missing = [a for a in roots if a not in claimed]
    rep.add("every root claimed", not missing, ", ".join(map(str, missing)))
    values = list(claimed.values())
    rep.add("injective", len(set(values)) == len(values))
    stray = [v for v in values if v not in found]
    rep.add("image inside the BFS set", not stray, stray[0].to_text() if stray else "")
    unclaimed = [v for v in found if v not in set(values)]
    rep.add("onto the BFS set (%d variables)" % len(found), not unclaimed,
            unclaimed[0].to_text() if unclaimed else "")
    return rep


def verify_factorization(r: int) -> Report:
    rep = Report("factorization r=%d" % r)
    tw = twist_map(r)
    lhs = xbar(r)
    rhs = xg_product(r).substitute(tw.forward)
    bad = [(i, j) for i in range(1, r + 2) for j in range(1, r + 2)
           if lhs.entry(i, j) != rhs.entry(i, j)]
    rep.add("xbar = x^G o Phi", not bad, "entry %s" % (bad[0],) if bad else "")
    variables = [Var.torus(m) for m in range(1, r + 2)]
    variables += [Var.y(s, l) for s in (1, 2) for l in range(1, r + 1)]
    for name, first, second in (("Psi o Phi = id", tw.forward, tw.backward),
                                ("Phi o Psi = id", tw.backward, tw.forward)):
        wrong = []
        for v in variables:
            img = substitute(LaurentPoly.monomial(first[v]), second)
            if img != LaurentPoly.monomial(LaurentMono({v: 1})):
                wrong.append(str(v))
        rep.add(name, not wrong, ", ".join(wrong))
    return rep


def _generic_matrix(n: int) -> SymbolicMatrix:
    # entries X_ij written as Y[10+i, j]; unrelated to the cluster parameters
    return SymbolicMatrix([[LaurentPoly.monomial(ymono(10 + i, j)) for j in range(1, n + 1)]
                           for i in range(1, n + 1)])


def verify_minor_identities(r: int) -> Report:
    """Torus equivariance and right unipotent invariance of principal minors."""
    rep = Report("minors r=%d" % r)
    n = r + 1
    X = _generic_matrix(n)
    a = torus_diag([torus(m) for m in range(1, n + 1)])
    aX = a * X
    t = ymono(0, 1)
    c_inv = WeylElement.from_word(coxeter_inverse_word(r), r)
    for i in range(1, n):
        aL = torus_power(fundamental(i, r))
        for wname, w in (("e", None), ("c^-1", c_inv)):
            ok = generalized_minor(aX, i, w) == LaurentPoly.monomial(aL) * generalized_minor(X, i, w)
            rep.add("Delta_%d,%s(a x) = a^L%d Delta" % (i, wname, i), ok)
        base = generalized_minor(X, i)
        for j in range(1, n):
            ok = generalized_minor(X * elem_upper(j, t, n), i) == base
            rep.add("Delta_%d(x x_%d(t)) = Delta_%d(x)" % (i, j, i), ok)
    return rep


def random_crystal_monomial(rng: random.Random, r: int, rows=(-2, 3), exps=(-3, 3),
                            max_vars: int = 6) -> CrystalMonomial:
    exps_map = {}
    for _ in range(rng.randint(0, max_vars)):
        v = Var.y(rng.randint(*rows), rng.randint(1, r))
        exps_map[v] = rng.randint(*exps)
    return CrystalMonomial(LaurentMono(exps_map), r)


def crystal_axioms_hold(m: CrystalMonomial) -> str:
    """Empty string when every axiom holds at ``m``, else the first violation."""
    r = m.r
    for i in range(1, r + 1):
        if m.phi(i) - m.epsilon(i) != m.wt[i - 1]:
            return "phi-eps at i=%d on %s" % (i, m)
        f = kashiwara_f(i, m)
        if f is not None:
            if f.wt != m.wt - simple_root(i, r):
                return "wt(f_%d m) on %s" % (i, m)
            if kashiwara_e(i, f) != m:
                return "e_%d f_%d != id on %s" % (i, i, m)
        elif m.phi(i) != 0:
            return "f_%d undefined with phi > 0 on %s" % (i, m)
        e = kashiwara_e(i, m)
        if e is not None:
            if e.wt != m.wt + simple_root(i, r):
                return "wt(e_%d m) on %s" % (i, m)
            if kashiwara_f(i, e) != m:
                return "f_%d e_%d != id on %s" % (i, i, m)
        elif m.epsilon(i) != 0:
            return "e_%d undefined with eps > 0 on %s" % (i, m)
    return ""


def verify_crystal_axioms(samples: int = 10000, seed: int = 0, ranks=range(3, 9)) -> Report:
    rep = Report("crystal-axioms")
    rng = random.Random(seed)
    ranks = list(ranks)
    failures = 0
    first = ""
    for t in range(samples):
        m = random_crystal_monomial(rng, ranks[t % len(ranks)])
        msg = crystal_axioms_hold(m)
        if msg:
            failures += 1
            first = first or msg
    rep.add("%d random monomials" % samples, failures == 0,
            "%d failures, first: %s" % (failures, first) if failures else "")
    return rep
