"""Run the randomized suite over several seeds and write one JSON report per seed.

    python scripts/run_suite.py --seeds 0 1 2 --cases 200 --out results/
"""

import argparse
import json
import pathlib
import time

from hecketrans.verify import SuiteConfig, run_suite


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seeds", type=int, nargs="+", default=[0])
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--m-max", type=int, default=5)
    p.add_argument("--out", default="results")
    args = p.parse_args()

    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    all_ok = True
    for seed in args.seeds:
        config = SuiteConfig(seed=seed, case_count=args.cases, m_max=args.m_max)
        t0 = time.perf_counter()
        report = run_suite(config)
        elapsed = time.perf_counter() - t0
        path = out / f"suite_seed{seed}.json"
        path.write_text(json.dumps(report.to_json(), indent=2))
        counts = {name: len(reps) for name, reps in report.sections.items()}
        print(f"seed {seed}: {'PASS' if report.passed else 'FAIL'} in {elapsed:.2f}s {counts} -> {path}")
        all_ok &= report.passed
    raise SystemExit(0 if all_ok else 1)


if __name__ == "__main__":
    main()
