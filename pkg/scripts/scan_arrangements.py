"""Seeded scan of random central essential arrangements.

Every report is checked against the arrangement theorems; a violation stops
the scan and prints the arrangement.  Results are cached when --cache-dir is
given, so reruns only compute new corpus members.
"""

import argparse
import collections
import time
from pathlib import Path

from leflab.cli import RunConfig, scan
from leflab.gin import DEFAULT_SEED


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nvars", type=int, default=3)
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--max-d", type=int, default=7)
    ap.add_argument("--min-d", type=int, default=None)
    ap.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--cache-dir", type=Path, default=None)
    args = ap.parse_args()

    cfg = RunConfig(seed=args.seed, jobs=args.jobs, cache_dir=args.cache_dir)
    start = time.perf_counter()
    corpus, _, reports, hits = scan(cfg, args.count, args.nvars, args.max_d, args.min_d)
    elapsed = time.perf_counter() - start

    for A, rep in zip(corpus, reports):
        bad = [k for k, v in rep["checks"].items() if v is False]
        if bad:
            print(f"VIOLATION {A.name}: {bad}\n{A.to_text()}")
            raise SystemExit(4)

    by_d = collections.defaultdict(lambda: collections.Counter())
    for rep in reports:
        c = by_d[rep["d"]]
        c["n"] += 1
        for key in ("free", "plus_one", "wlp", "slp", "conjecture_holds"):
            c[key] += bool(rep[key])
    print(f"{'d':>2} {'n':>3} {'free':>4} {'+1':>3} {'WLP':>3} {'SLP':>3} {'conj':>4}")
    for d in sorted(by_d):
        c = by_d[d]
        print(f"{d:>2} {c['n']:>3} {c['free']:>4} {c['plus_one']:>3} {c['wlp']:>3} "
              f"{c['slp']:>3} {c['conjecture_holds']:>4}")
    fails = [(r["d"], r["wlp_failure_degree"]) for r in reports if not r["wlp"]]
    if fails:
        print("WLP failures (d, failure degree):", sorted(set(fails)))
    for A, rep in zip(corpus, reports):
        if rep["plus_one"]:
            print(f"plus-one: {A.name} POexp {rep['po_exp']} level {rep['level']} "
                  f"SLP {rep['slp']}")
    print(f"{len(reports)} arrangements, {hits} cached, {elapsed:.1f}s")


if __name__ == "__main__":
    main()
