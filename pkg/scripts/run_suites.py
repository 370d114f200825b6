"""Run every verification suite with its default grid and print a timing summary."""

import argparse
import time

from superfrob.verify import SUITES, SuiteConfig, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--verbose", action="store_true", help="list every check")
    args = ap.parse_args()
    cfg = SuiteConfig(jobs=args.jobs)
    ok = True
    for name in SUITES[:-1]:
        t0 = time.perf_counter()
        rep = run_suite(name, cfg)
        dt = time.perf_counter() - t0
        failed = [c for c in rep.checks if not c.passed]
        ok &= not failed
        print(f"{name:20s} {len(rep.checks):4d} checks  {len(failed):3d} failed  {dt:6.1f}s")
        if args.verbose or failed:
            for c in rep.checks:
                if args.verbose or not c.passed:
                    print("   ", "PASS" if c.passed else "FAIL", c.name, c.detail)
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
