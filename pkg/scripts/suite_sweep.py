"""Run the law suite and oracle comparison over several seeds and size budgets.

    python scripts/suite_sweep.py --seeds 0 1 2 --sizes 8 12 16 --cases 300
"""

import argparse

from dplump.cli import DEFAULT_SIGNATURE
from dplump.container import load_signature
from dplump.laws import GenConfig, oracle_compare, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sig")
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 12, 16])
    ap.add_argument("--cases", type=int, default=300)
    args = ap.parse_args()
    sig = load_signature(args.sig) if args.sig else DEFAULT_SIGNATURE

    print(f"{'seed':>5} {'size':>5} {'laws':>6} {'checks':>8} {'oracle':>8} {'secs':>7}")
    for size in args.sizes:
        for seed in args.seeds:
            cfg = GenConfig(sig, seed=seed, size_budget=size, cases=args.cases)
            report = run_suite(cfg)
            oracle = oracle_compare(cfg) if size <= 12 else None
            checks = sum(r.attempted for r in report.laws.values())
            status = "ok" if report.ok else "FAIL"
            ostatus = "-" if oracle is None else ("ok" if oracle.ok else "FAIL")
            print(f"{seed:>5} {size:>5} {status:>6} {checks:>8} {ostatus:>8} {report.elapsed:>7.2f}")
            if not report.ok:
                print(report.to_text())


if __name__ == "__main__":
    main()
