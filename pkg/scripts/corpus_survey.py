#!/usr/bin/env python3
"""Classify every bundled corpus group and tabulate the verdicts.

Usage: python scripts/corpus_survey.py [--json]
"""

import argparse
import json
import math

from commgraph.classify import classify_group
from commgraph.corpus import list_corpus, load_corpus_group
from commgraph.graph import build_graph, diameter_and_components
from commgraph.errors import EmptyGraph


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    args = parser.parse_args()

    rows = []
    for name in list_corpus():
        group = load_corpus_group(name).materialize()
        verdict = classify_group(group)
        try:
            res = diameter_and_components(build_graph(group))
            comps = len(res["components"])
            diam = "inf" if res["diameter"] == math.inf else res["diameter"]
        except EmptyGraph:
            comps, diam = 0, "-"
        row = {"name": name, "order": group.order(), "kind": verdict.kind,
               "components": comps, "diameter": diam}
        if verdict.kernel is not None:
            row["kernel_order"] = verdict.kernel.order()
        if verdict.K is not None:
            row["K_order"] = verdict.K.order()
            row["L_order"] = verdict.L.order()
        rows.append(row)

    if args.json:
        print(json.dumps(rows, indent=2, sort_keys=True))
        return
    print(f"{'name':10s} {'order':>5s} {'verdict':18s} {'comps':>5s} {'diam':>4s}")
    for row in rows:
        print(
            f"{row['name']:10s} {row['order']:5d} {row['kind']:18s} "
            f"{row['components']:5d} {str(row['diameter']):>4s}"
        )


if __name__ == "__main__":
    main()
