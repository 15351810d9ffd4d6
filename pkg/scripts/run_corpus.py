#!/usr/bin/env python3
"""Run the theorem-check corpus and save the JSON-lines report.

Equivalent to ``vangraph corpus`` but keeps the report on disk next to a
summary file, which is handy for diffing runs.
"""

import argparse
import sys
from pathlib import Path

from vangraph.harness import corpus_run, load_corpus_config


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--config", help="JSON corpus config (default corpus "
                    "when omitted)")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default="corpus_report.jsonl")
    args = ap.parse_args()

    groups = c44 = checks = None
    if args.config:
        groups, c44, checks = load_corpus_config(args.config)
    result = corpus_run(groups, c44, checks, jobs=args.jobs)
    Path(args.out).write_text(result.json_lines())
    print(result.summary())
    print(f"report written to {args.out}")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
