"""Compare the compiled and pure-Python Laurent kernels.

Two measurements per backend:
  * kernel: repeated mul + divexact on exchange relations of every seed of a BFS;
  * bfs: a full seed enumeration in a fresh interpreter with that backend forced.

    python3 benchmarks/bench_kernels.py --r 6 --repeat 3
"""

import argparse
import os
import subprocess
import sys
import timeit

from cluster_demazure.cluster import build_initial_seed, exchange_numerator, explore
from cluster_demazure.exactalg import _kernels_py

try:
    from cluster_demazure.exactalg import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

BFS_SNIPPET = (
    "import time; from cluster_demazure.cluster import build_initial_seed, explore;"
    "from cluster_demazure.exactalg import BACKEND;"
    "t = time.perf_counter(); e = explore(build_initial_seed(%d));"
    "print(BACKEND, len(e.seeds), time.perf_counter() - t)"
)


def workload(r):
    """(numerator, old variable) tuples in kernel form for every exchange of the BFS."""
    jobs = []
    for s in explore(build_initial_seed(r)).seeds:
        for k in s.matrix.mutable:
            jobs.append((exchange_numerator(s, k)._t, s.var(k)._t))
    return jobs


def kernel_time(mod, jobs, repeat):
    def once():
        for num, old in jobs:
            q = mod.divexact(num, old)
            mod.mul(q, old)
    return min(timeit.repeat(once, number=1, repeat=repeat))


def bfs_time(r, pure):
    env = dict(os.environ)
    env.pop("CLUSTER_DEMAZURE_PURE", None)
    if pure:
        env["CLUSTER_DEMAZURE_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", BFS_SNIPPET % r], env=env,
                         capture_output=True, text=True, check=True).stdout.split()
    return out[0], int(out[1]), float(out[2])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    jobs = workload(args.r)
    print("r=%d: %d exchange relations" % (args.r, len(jobs)))
    backends = [("python", _kernels_py)]
    if _kernels_c is not None:
        backends.append(("cython", _kernels_c))
    else:
        print("compiled kernels not built; only the fallback is timed")
    times = {}
    for name, mod in backends:
        times[name] = kernel_time(mod, jobs, args.repeat)
        print("kernel  %-7s %8.3f s" % (name, times[name]))
    if len(times) == 2:
        print("kernel speedup      %8.2fx" % (times["python"] / times["cython"]))
    for pure in (True, False):
        name, seeds, t = bfs_time(args.r, pure)
        print("bfs     %-7s %8.3f s  (%d seeds)" % (name, t, seeds))


if __name__ == "__main__":
    main()
