#!/usr/bin/env python3
"""Reproduce the corpus-scale construction counts from a licensed corpus.

The reference grammar was learnt from the combined OntoNotes + English
Web Treebank PropBank annotations (154,391 utterances, 440,528 roleset
instances).  Those corpora are licensed and cannot ship with this
repository; given a local copy converted to the interchange JSONL
format (see README), this script learns a grammar and checks the three
construction-group counts against the reference within a tolerance
(default 2%, residual variance from parser version and skip policy).

Usage:
    python scripts/reproduce_scale.py --corpus /path/to/combined.jsonl
"""

import argparse
import sys

from framecxn import ConstructionNetwork, learn_corpus, read_corpus

REFERENCE = {
    "all": 40688,
    "frame-evoking": 9800,
    "argument structure": 22568,
    "roleset": 8320,
}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--corpus", required=True,
                        help="interchange JSONL of the licensed corpus")
    parser.add_argument("--tolerance", type=float, default=0.02,
                        help="relative tolerance per group (default 0.02)")
    args = parser.parse_args(argv)

    net = ConstructionNetwork()
    stats = learn_corpus(net, read_corpus(args.corpus))
    counts = {
        "all": len(net),
        "frame-evoking": len(net.fe_cxns),
        "argument structure": len(net.argst_cxns),
        "roleset": len(net.roleset_cxns),
    }
    print(f"utterances: {stats.utterances:,}   "
          f"instances learnt: {stats.instances_learnt:,}   "
          f"skipped: {stats.instances_skipped:,}")
    ok = True
    for group, reference in REFERENCE.items():
        got = counts[group]
        delta = (got - reference) / reference
        within = abs(delta) <= args.tolerance
        ok &= within
        print(f"{group:>20}: {got:>7,}  reference {reference:>7,}  "
              f"delta {delta:+.2%}  {'ok' if within else 'OUT OF TOLERANCE'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
