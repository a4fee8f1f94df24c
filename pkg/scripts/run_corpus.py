"""Run the bundled corpus and write the table (and optionally JSON rows) to disk.

Exits nonzero when a check fails, like ``galcremona corpus``.
"""

import argparse
import json
import sys
import time
from pathlib import Path

from galcremona.corpus import CORPUS, format_table, run_corpus


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=None, help="directory for corpus.txt / corpus.json")
    ap.add_argument("--entry", default=None)
    args = ap.parse_args()
    start = time.perf_counter()
    results = run_corpus(CORPUS, args.entry)
    table = format_table(results)
    print(table)
    print(f"({time.perf_counter() - start:.1f} s)")
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        (args.out / "corpus.txt").write_text(table + "\n", encoding="utf-8")
        rows = [r.__dict__ for r in results]
        (args.out / "corpus.json").write_text(json.dumps(rows, indent=2) + "\n", encoding="utf-8")
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
