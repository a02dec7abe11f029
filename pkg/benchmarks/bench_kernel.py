#!/usr/bin/env python3
"""Benchmark the compiled matching kernel against the pure-Python one.

Two sections: a micro-benchmark of the binding-enumeration hot loop on
a combinatorially heavy tree (where the kernel dominates), and full
extraction over a synthetic corpus (where per-utterance plumbing
amortises the kernel).  Outputs are compared for equality in both, so
this doubles as a large differential test.

Usage:
    python benchmarks/bench_kernel.py [--utterances 3000] [--repeat 3]
"""

import argparse
import time

from framecxn import ConstructionNetwork, Extractor, ingest_utterance, learn_corpus
from framecxn.corpus import ConstituencyTree, ConstNode
from framecxn.grammar import (PathStep, PrecedenceConstraint, RoleSlot)
from framecxn.kernel import CompiledCxn, LabelTable, PreparedTree
from framecxn.kernel import pure
from framecxn.synth import make_corpus

try:
    from framecxn.kernel import _native as native
except ImportError:
    native = None


def _wide_inputs(n_subjects=4, n_objects=9):
    """A sentence with many indistinguishable nps: enumeration must
    explore every order-respecting assignment."""
    pos = 0

    def leaf(label, width=1):
        nonlocal pos
        node = ConstNode(label, pos, pos + width)
        pos += width
        return node

    subjects = [leaf("np") for _ in range(n_subjects)]
    verb = leaf("verb")
    objects = [leaf("np") for _ in range(n_objects)]
    vp = ConstNode("vp", verb.start, objects[-1].end, [verb] + objects)
    root = ConstNode("sentence", 0, vp.end, subjects + [vp])
    tree = ConstituencyTree(root, pos)

    slots = (
        RoleSlot("arg0", "np", (PathStep("up", "sentence"),
                                PathStep("down", "vp"))),
        RoleSlot("arg1", "np", (PathStep("up", "vp"),)),
        RoleSlot("arg2", "np", (PathStep("up", "vp"),)),
    )
    constraints = (PrecedenceConstraint("arg2", "arg1"),)
    cxn, _ = ConstructionNetwork().find_or_add_argstruct(slots, constraints,
                                                         "bench")
    table = LabelTable()
    compiled = CompiledCxn(cxn, table)
    return PreparedTree(tree, table), verb.index, compiled


def micro_benchmark(repeat):
    ptree, v_index, compiled = _wide_inputs()
    backends = [("pure", pure)] + ([("native", native)] if native else [])
    calls = 2000
    baseline = None
    timings = {}
    for name, backend in backends:
        best = None
        for _ in range(repeat):
            started = time.perf_counter()
            for _ in range(calls):
                result = backend.enumerate_bindings(ptree, v_index, compiled)
            elapsed = time.perf_counter() - started
            best = elapsed if best is None else min(best, elapsed)
        if baseline is None:
            baseline = result
        elif result != baseline:
            raise SystemExit(f"kernel {name} disagrees on the micro input")
        timings[name] = best
        print(f"{name:>7}: {best:8.3f} s for {calls} calls "
              f"({len(baseline)} bindings each)")
    if "native" in timings:
        print(f"speedup: {timings['pure'] / timings['native']:.2f}x "
              "(pure / native)")


def _patched_extract(backend, net, utterances):
    """Run extraction with an explicit kernel backend."""
    import framecxn.matching as matching

    original = matching.enumerate_bindings
    matching.enumerate_bindings = backend.enumerate_bindings
    try:
        extractor = Extractor(net)
        started = time.perf_counter()
        results = [extractor.extract(utt) for utt in utterances]
        elapsed = time.perf_counter() - started
    finally:
        matching.enumerate_bindings = original
    return results, elapsed


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--utterances", type=int, default=3000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print("== binding enumeration micro-benchmark ==")
    micro_benchmark(args.repeat)

    print()
    print("== end-to-end extraction ==")
    records = make_corpus(args.utterances, seed=42)
    utterances = [ingest_utterance(r) for r in records]
    net = ConstructionNetwork()
    stats = learn_corpus(net, utterances)
    net.freeze()
    print(f"corpus: {len(utterances)} utterances, "
          f"{stats.instances_learnt} instances, "
          f"{len(net)} constructions")

    backends = [("pure", pure)]
    if native is not None:
        backends.append(("native", native))
    else:
        print("compiled kernel not built; benchmarking pure only")

    timings = {}
    baseline = None
    for name, backend in backends:
        best = None
        for _ in range(args.repeat):
            results, elapsed = _patched_extract(backend, net, utterances)
            best = elapsed if best is None else min(best, elapsed)
            if baseline is None:
                baseline = results
            elif results != baseline:
                raise SystemExit(f"kernel {name} disagrees with baseline")
        timings[name] = best
        rate = len(utterances) / best
        print(f"{name:>7}: {best:8.3f} s   ({rate:,.0f} utterances/s)")

    if "native" in timings:
        print(f"speedup: {timings['pure'] / timings['native']:.2f}x "
              "(pure / native)")


if __name__ == "__main__":
    main()
