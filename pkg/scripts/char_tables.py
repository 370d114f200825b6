"""Print Hecke character tables and optionally write JSON/CSV copies.

    python3 scripts/char_tables.py --max-r 6 --out results/tables
"""

import argparse
import json
import time
from pathlib import Path

from superfrob.frobenius import char_table, mn_table_matches


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-r", type=int, default=5)
    ap.add_argument("--out", type=Path, help="directory for table_r<r>.json / .csv")
    args = ap.parse_args()
    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
    for r in range(1, args.max_r + 1):
        t0 = time.perf_counter()
        table = char_table(r)
        dt = time.perf_counter() - t0
        print(f"r = {r}  ({dt:.2f}s, q=1 matches symmetric group: {mn_table_matches(table)})")
        print(table.to_text())
        if args.out:
            (args.out / f"table_r{r}.json").write_text(json.dumps(table.to_json(), separators=(",", ":")) + "\n")
            (args.out / f"table_r{r}.csv").write_text(table.to_csv())


if __name__ == "__main__":
    main()
