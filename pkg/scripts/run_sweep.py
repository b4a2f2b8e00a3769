"""Run the exhaustive verification sweep and write a JSON report.

    python scripts/run_sweep.py --max-n 7 --jobs 4 --out runs/verify7.json
"""

import argparse
import json
from pathlib import Path

from kbdynamics.harness import exhaustive_verify


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path, default=None, help="report path (default: print summary only)")
    args = ap.parse_args()

    report = exhaustive_verify(args.max_n, jobs=args.jobs)
    data = report.to_dict()
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(json.dumps(data, indent=1) + "\n")
    for n in sorted(report.per_n):
        counts = dict(report.per_n[n])
        print(f"n={n}: " + " ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    print(f"scanned {report.scanned} graphs, {len(report.violations)} violations, "
          f"{report.seconds:.1f}s")
    for v in report.violations[:20]:
        print("  ", v)
    raise SystemExit(0 if report.ok else 1)


if __name__ == "__main__":
    main()
