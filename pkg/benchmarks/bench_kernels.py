"""Compiled kernel against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--sweep-dmax 9]

Times ``apply_word`` on real hook-module operator tables, ``rref_mod_p`` on
random dense matrices, and an end-to-end sweep under each backend.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit
from array import array

from hookspecht import _pykernel
from hookspecht.combinatorics import QuiverParams
from hookspecht.hook import HookShape, hook_module, psi_tok, y_tok

try:
    from hookspecht import _kernel
except ImportError:
    _kernel = None


def word_case(d=11, k=5, e=3, length=40, seed=1):
    M = hook_module(HookShape(d, k), QuiverParams(e))
    T = M.tables
    rng = random.Random(seed)
    toks = [psi_tok(rng.randint(1, d - 1)) if rng.random() < 0.7 else y_tok(rng.randint(1, d)) for _ in range(length)]
    codes = array("q", M.encode(toks))
    starts = array("q", range(T.n_basis))
    return (T.target, T.sign, T.n_basis, codes, starts)


def rref_case(n=60, p=3, seed=2):
    rng = random.Random(seed)
    return array("q", (rng.randrange(p) for _ in range(n * n))), n, n, p


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def sweep_seconds(dmax, pure):
    env = {**os.environ, "HOOK_SPECHT_PURE": "1" if pure else "0"}
    code = (
        "import time; from hookspecht.sweep import sweep; t=time.perf_counter(); "
        f"sweep({dmax}, [3, 4, 5], [0, 2, 3, 5], 1); print(time.perf_counter() - t)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--sweep-dmax", type=int, default=9)
    args = ap.parse_args(argv)
    if _kernel is None:
        sys.exit("compiled kernel not built; run `pip install -e . --no-build-isolation` first")

    wargs = word_case()
    assert [list(x) for x in _kernel.apply_word(*wargs)] == [list(x) for x in _pykernel.apply_word(*wargs)]
    mat, n, m, p = rref_case()
    rows = [(f"apply_word ({len(wargs[4])} starts x {len(wargs[3])} tokens)", lambda: _pykernel.apply_word(*wargs), lambda: _kernel.apply_word(*wargs))]
    rows.append(
        (
            f"rref_mod_p ({n}x{m} over F_{p})",
            lambda: _pykernel.rref_mod_p(array("q", mat), n, m, p),
            lambda: _kernel.rref_mod_p(array("q", mat), n, m, p),
        )
    )
    print(f"{'kernel':40s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, slow, fast in rows:
        ts, tf = best(slow, args.repeat), best(fast, args.repeat)
        print(f"{name:40s} {ts:10.5f} {tf:10.5f} {ts / tf:8.1f}x")
    ts, tf = sweep_seconds(args.sweep_dmax, True), sweep_seconds(args.sweep_dmax, False)
    print(f"{'sweep d<=' + str(args.sweep_dmax) + ' (end to end)':40s} {ts:10.3f} {tf:10.3f} {ts / tf:8.1f}x")


if __name__ == "__main__":
    main()
