"""Command-line front end: ``cluster-demazure <subcommand> ...``.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from .cluster import (build_initial_seed, enumerate_cluster_variables, mutate_path,
                      quiver_of)
from .crystal import (CrystalMonomial, DemazureSpec, crystal_graph_dot, demazure_set,
                      demazure_sum)
from .exactalg import ParseError
from .group import generalized_minor, xbar
from .roots import InvalidCaseParams, RankTooSmall, WeylElement, coxeter_inverse_word
from .verify import (CASES, verify_crystal_axioms, verify_factorization, verify_maincor,
                     verify_thm1)


class UsageError(ValueError):
    pass


def _rank(text: str) -> int:
    try:
        r = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("rank must be an integer")
    if not 3 <= r <= 12:
        raise argparse.ArgumentTypeError("rank must lie in [3, 12]")
    return r


def parse_int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError("expected comma-separated integers, got %r" % text)


def parse_word(text: str, r: int) -> tuple[int, ...]:
    """Comma-separated letters (rightmost applied first), ``c^-1`` or ``e``."""
    t = text.strip()
    if t == "c^-1":
        return tuple(coxeter_inverse_word(r))
    if t in ("e", ""):
        return ()
    word = tuple(parse_int_list(t))
    bad = [a for a in word if not 1 <= a <= r]
    if bad:
        raise UsageError("letter %d outside [1, %d]" % (bad[0], r))
    return word


def seed_fingerprint(seed) -> str:
    texts = sorted(p.to_text() for p in seed.cluster())
    return hashlib.sha256("\n".join(texts).encode()).hexdigest()


def _seed_from(args):
    seed = build_initial_seed(args.r)
    path = parse_int_list(args.path or "")
    bad = [k for k in path if not 1 <= k <= args.r]
    if bad:
        raise UsageError("label %d is not mutable (use 1..%d)" % (bad[0], args.r))
    return mutate_path(seed, path)


def _seed_text(seed) -> str:
    lines = ["%d: %s" % (k, seed.var(k).to_text()) for k in seed.matrix.labels]
    return "\n".join(lines) + "\n"


def cmd_seed(args, out) -> int:
    seed = _seed_from(args)
    if args.seed_fingerprint:
        out.write(seed_fingerprint(seed) + "\n")
    elif args.json:
        out.write(seed.to_json() + "\n")
    elif args.dot:
        out.write(quiver_of(seed).to_dot())
    else:
        out.write(_seed_text(seed))
    return 0


def cmd_vars(args, out) -> int:
    if args.all:
        polys = sorted(enumerate_cluster_variables(build_initial_seed(args.r)),
                       key=lambda p: p.to_text())
    else:
        polys = _seed_from(args).cluster()
    if args.json:
        out.write(json.dumps([p.to_json_obj() for p in polys]) + "\n")
    else:
        for p in polys:
            out.write(p.to_text() + "\n")
    return 0


def cmd_minor(args, out) -> int:
    if not 1 <= args.i <= args.r:
        raise UsageError("--i must lie in [1, %d]" % args.r)
    w = WeylElement.from_word(parse_word(args.w, args.r), args.r)
    p = generalized_minor(xbar(args.r), args.i, w)
    out.write((p.to_json() if args.json else p.to_text()) + "\n")
    return 0


def cmd_demazure(args, out) -> int:
    try:
        highest = CrystalMonomial.parse(args.highest, args.r)
    except ValueError as exc:
        raise UsageError(str(exc))
    spec = DemazureSpec(highest, parse_word(args.word, args.r))
    if args.dot:
        out.write(crystal_graph_dot(spec))
    elif args.sum:
        out.write(demazure_sum(spec).to_text() + "\n")
    else:
        elems = sorted(demazure_set(spec), key=lambda m: m.mono._sort_key())
        if args.json:
            out.write(json.dumps([m.to_text() for m in elems]) + "\n")
        else:
            for m in elems:
                out.write(m.to_text() + "\n")
    return 0


def cmd_quiver(args, out) -> int:
    out.write(quiver_of(_seed_from(args)).to_dot())
    return 0


def cmd_verify(args, out) -> int:
    what = args.what
    if what == "crystal-axioms":
        reports = [verify_crystal_axioms(args.samples)]
    else:
        if args.r is None:
            raise UsageError("verify %s needs --r" % what)
        if what == "thm1":
            if args.case is None and (args.k is not None or args.l is not None):
                raise UsageError("--k/--l need --case")
            reports = [verify_thm1(args.r, args.case, args.k, args.l)]
        elif what == "maincor":
            reports = [verify_maincor(args.r)]
        else:
            reports = [verify_factorization(args.r)]
    if args.json:
        out.write(json.dumps([rep.to_json_obj() for rep in reports], indent=2, sort_keys=True) + "\n")
    else:
        for rep in reports:
            out.write(rep.to_table())
    return 0 if all(rep.passed for rep in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cluster-demazure", description=__doc__.splitlines()[0])
    parser.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_rank(p, required=True):
        p.add_argument("--r", type=_rank, required=required, help="rank of SL(r+1), 3..12")
        return p

    p = with_rank(sub.add_parser("seed", help="initial (or mutated) seed"))
    p.add_argument("--path", default="")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", action="store_true", help="quiver as DOT")
    p.add_argument("--seed-fingerprint", action="store_true")
    p.set_defaults(func=cmd_seed)

    p = with_rank(sub.add_parser("mutate", help="apply a mutation path (first label first)"))
    p.add_argument("--path", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--seed-fingerprint", action="store_true")
    p.set_defaults(func=cmd_seed)

    p = with_rank(sub.add_parser("vars", help="cluster variables"))
    p.add_argument("--all", action="store_true", help="every cluster variable (BFS)")
    p.add_argument("--path", default="")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_vars)

    p = with_rank(sub.add_parser("minor", help="generalized minor of xbar"))
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--w", default="e", help='word "3,1,2", "c^-1" or "e"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_minor)

    p = with_rank(sub.add_parser("demazure", help="Demazure crystal in the monomial realization"))
    p.add_argument("--highest", required=True)
    p.add_argument("--word", default="e")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--dot", action="store_true")
    g.add_argument("--sum", action="store_true")
    g.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_demazure)

    p = with_rank(sub.add_parser("quiver", help="quiver of a seed as DOT"))
    p.add_argument("--path", default="")
    p.set_defaults(func=cmd_quiver)

    p = with_rank(sub.add_parser("verify", help="verification suites"), required=False)
    p.add_argument("what", choices=["thm1", "maincor", "factorization", "crystal-axioms"])
    p.add_argument("--case", choices=CASES)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None, stdout=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on bad flags
    out = stdout or sys.stdout
    handle = None
    if args.out:
        handle = open(args.out, "w")
        out = handle
    try:
        return args.func(args, out)
    except (UsageError, InvalidCaseParams, RankTooSmall, ParseError, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    finally:
        if handle is not None:
            handle.close()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
