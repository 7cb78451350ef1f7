"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Reports the best of ``repeat`` runs for a batch of Wright series
evaluations, one L1 history sum and a full forward/inverse round trip.
"""

import argparse
import importlib
import os
import subprocess
import sys
import timeit

import numpy as np

from fracstefan import _pykernels

ROUND_TRIP = """
from fracstefan.inverse import ThermalData, forward_problem, solve_case
d = ThermalData(alpha=0.6, t0=3.0, tm=1.0, k=2.0, rho=0.5, c=1.5, ell=2.5)
q0 = forward_problem(d).q0
for case in ("c", "ell", "k", "rho"):
    solve_case(case, ThermalData(**{**d.as_dict(), case: None, "q0": q0}))
"""


def _best(stmt, repeat, number):
    return min(timeit.repeat(stmt, repeat=repeat, number=number)) / number


def _round_trip_time(pure, repeat):
    # the backend is fixed at import, so each variant runs in its own interpreter
    env = dict(os.environ)
    env.pop("FRACSTEFAN_PURE_PYTHON", None)
    if pure:
        env["FRACSTEFAN_PURE_PYTHON"] = "1"
    code = (
        "import timeit\n"
        f"setup = {ROUND_TRIP!r}\n"
        f"print(min(timeit.repeat(setup, repeat={repeat}, number=5)) / 5)\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, check=True,
                         capture_output=True, text=True)
    return float(out.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    try:
        ck = importlib.import_module("fracstefan._ckernels")
    except ImportError:
        sys.exit("compiled kernels not built; run pip install -e . --no-build-isolation")

    zs = -np.linspace(0.0, 10.0, 2000)
    f = np.linspace(0.0, 1.0, 20001) ** 1.5
    rows = []
    for name, mod in (("python", _pykernels), ("cython", ck)):
        wright = _best(lambda: mod.wright_many(zs, -0.3, 0.7, 1e-14, 1e-300, 400),
                       args.repeat, 3)
        l1 = _best(lambda: mod.l1_history_sum(f, 0.5), args.repeat, 3)
        rows.append((name, wright, l1, _round_trip_time(name == "python", args.repeat)))

    print(f"{'backend':8s} {'wright_many(2000)':>18s} {'l1_sum(20001)':>14s} {'round trip':>11s}")
    for name, w, l1, rt in rows:
        print(f"{name:8s} {w * 1e3:15.3f} ms {l1 * 1e3:11.3f} ms {rt * 1e3:8.3f} ms")
    py, cy = rows
    print(f"{'speedup':8s} {py[1] / cy[1]:17.1f}x {py[2] / cy[2]:13.1f}x {py[3] / cy[3]:10.1f}x")


if __name__ == "__main__":
    main()
