"""Time the tensor-space trace against the closed form as r and the alphabets grow.

The trace touches (m+n)^r basis words; the closed form only the weakly
increasing ones. Both are checked equal on every row.
"""

import argparse
import time

from superfrob.heckesim import gamma_word, prop51_trace, trace_d_pi


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-k", type=int, default=6)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    print(f"{'k':>2} {'m':>2} {'n':>2} {'words':>7} {'trace s':>8} {'closed s':>9} equal")
    for m, n in [(1, 1), (2, 1), (2, 2), (3, 3)]:
        for k in range(1, args.max_k + 1):
            if (m + n) ** k > 50000:
                continue
            t0 = time.perf_counter()
            tr = trace_d_pi(gamma_word((k,)), k, m, n, jobs=args.jobs)
            t1 = time.perf_counter()
            cf = prop51_trace(k, m, n)
            t2 = time.perf_counter()
            print(f"{k:2d} {m:2d} {n:2d} {(m + n) ** k:7d} {t1 - t0:8.3f} {t2 - t1:9.3f} {tr == cf}")


if __name__ == "__main__":
    main()
