"""Run ``extend`` on the worked examples and print text reports.

    python3 scripts/run_examples.py [input file] [--json]
"""

import argparse
import json
from pathlib import Path

from galcremona.pipeline import parse_job_text, report, run_extend, text_report

DEFAULT = Path(__file__).with_name("inputs") / "worked_examples.txt"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("path", nargs="?", default=str(DEFAULT))
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    jobs = parse_job_text(Path(args.path).read_text(encoding="utf-8"), "example")
    results = [run_extend(j) for j in jobs]
    if args.json:
        print(json.dumps([report(r) for r in results], indent=2, ensure_ascii=False))
    else:
        print("\n\n".join(text_report(r) for r in results))


if __name__ == "__main__":
    main()
