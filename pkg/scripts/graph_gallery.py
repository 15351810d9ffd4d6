#!/usr/bin/env python3
"""Write DOT files for the prime graph of each listed group.

Each group gets NAME_class_graph.dot (all class sizes, vanishing edges
bold) and NAME_vanishing_graph.dot in the output directory.
"""

import argparse
import sys
from pathlib import Path

from vangraph.harness import analyze
from vangraph.vanishing import dot_text

DEFAULT_GROUPS = ("S3", "S4", "S5", "A5", "A6", "S6", "PSL(2,7)", "A7")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("groups", nargs="*", default=list(DEFAULT_GROUPS))
    ap.add_argument("--out", default="graphs")
    args = ap.parse_args()

    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for spec in args.groups:
        van = analyze(spec).vanishing
        stem = spec.replace(" ", "").replace("(", "").replace(")", "")
        stem = stem.replace(",", "_")
        (outdir / f"{stem}_class_graph.dot").write_text(
            dot_text(van.graph, bold_edges=van.vanishing_graph.edges))
        (outdir / f"{stem}_vanishing_graph.dot").write_text(
            dot_text(van.vanishing_graph))
        print(f"{spec}: edges {[list(e) for e in van.graph.edges]},"
              f" vanishing edges"
              f" {[list(e) for e in van.vanishing_graph.edges]}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
