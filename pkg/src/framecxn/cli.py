"""Command line entry point.

    framecxn learn    --corpus c.jsonl --out g.json [--stats s.json]
    framecxn extract  --grammar g.json --in s.jsonl --out p.jsonl
    framecxn evaluate --pred p.jsonl --gold g.jsonl --level roleset|frame|both
    framecxn report   --grammar g.json [--name NAME]
    framecxn query    assoc|sim|nearest|zipf ... --grammar g.json

The extract command honours FRAMECXN_WORKERS (default 1) for a
process pool over utterances; output order always follows input order.
All file outputs are written atomically (temp file plus rename).
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
from pathlib import Path

from . import analytics
from .corpus import ingest_utterance, read_corpus
from .errors import FramecxnError, IngestError
from .grammar import ConstructionNetwork, GROUPS
from .learning import learn_corpus
from .matching import Extractor
from .scoring import LEVELS, score
from .storage import (atomic_writer, load_grammar, save_grammar,
                      write_text_atomic)

WORKERS_ENV = "FRAMECXN_WORKERS"


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FramecxnError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framecxn",
        description="Learn construction grammars from frame-annotated "
                    "treebanks and extract semantic frames with them.",
        epilog=_SCHEMA_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("learn", help="learn a grammar from a corpus")
    p.add_argument("--corpus", required=True, help="interchange JSONL input")
    p.add_argument("--out", required=True, help="grammar JSON output")
    p.add_argument("--stats", help="stats sidecar path "
                                   "(default: <out> with .stats.json)")
    p.set_defaults(func=_cmd_learn)

    p = sub.add_parser("extract", help="extract frames from parsed utterances")
    p.add_argument("--grammar", required=True)
    p.add_argument("--in", dest="infile", required=True,
                   help="interchange JSONL (frames ignored if present)")
    p.add_argument("--out", required=True, help="predictions JSONL")
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("evaluate", help="score predictions against gold")
    p.add_argument("--pred", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--level", choices=list(LEVELS) + ["both"], default="both")
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("report", help="print the grammar report")
    p.add_argument("--grammar", required=True)
    p.add_argument("--name", help="report title (default: grammar file stem)")
    p.set_defaults(func=_cmd_report)

    q = sub.add_parser("query", help="query a learnt grammar")
    qsub = q.add_subparsers(dest="query_command", required=True)

    p = qsub.add_parser("assoc",
                        help="rolesets associated with an argument structure")
    p.add_argument("mnemonic", help="argument structure mnemonic, e.g. "
                                    "'arg0(np)-v(v)-arg2(np)-arg1(np)-1'")
    p.add_argument("--grammar", required=True)
    p.set_defaults(func=_cmd_assoc)

    p = qsub.add_parser("sim", help="cosine similarity of two frame-evoking "
                                    "constructions")
    p.add_argument("fe_a", help="mnemonic, e.g. 'tell(verb)'")
    p.add_argument("fe_b")
    p.add_argument("--grammar", required=True)
    p.set_defaults(func=_cmd_sim)

    p = qsub.add_parser("nearest", help="nearest frame-evoking constructions")
    p.add_argument("fe", help="mnemonic, e.g. 'tell(verb)'")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--grammar", required=True)
    p.set_defaults(func=_cmd_nearest)

    p = qsub.add_parser("zipf", help="rank-frequency table as CSV")
    p.add_argument("--group", choices=GROUPS, default="all")
    p.add_argument("--csv", required=True, help="CSV output path")
    p.add_argument("--grammar", required=True)
    p.set_defaults(func=_cmd_zipf)
    return parser


def _require_file(path: str):
    if not os.path.isfile(path):
        raise FramecxnError(f"no such file: {path}")


# -- commands ---------------------------------------------------------------


def _cmd_learn(args) -> int:
    _require_file(args.corpus)
    net = ConstructionNetwork()
    stats = learn_corpus(net, read_corpus(args.corpus))
    net.freeze()
    save_grammar(net, args.out)
    stats_path = args.stats or str(Path(args.out).with_suffix(".stats.json"))
    write_text_atomic(stats_path,
                      json.dumps(stats.to_json(), indent=1) + "\n")
    print(f"learnt {len(net)} constructions "
          f"({stats.instances_learnt}/{stats.instances_seen} instances) "
          f"-> {args.out}")
    return 0


def _worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV, "1").strip()
    try:
        n = int(raw)
    except ValueError:
        raise FramecxnError(f"{WORKERS_ENV} must be an integer, got {raw!r}")
    return max(1, n)


_WORKER_EXTRACTOR = None
_WORKER_INPUT = None


def _init_worker(grammar_path: str, input_path: str):
    global _WORKER_EXTRACTOR, _WORKER_INPUT
    _WORKER_EXTRACTOR = Extractor(load_grammar(grammar_path))
    _WORKER_INPUT = input_path


def _extract_line(numbered: tuple[int, str]) -> str:
    line_no, line = numbered
    try:
        utt = ingest_utterance(json.loads(line))
    except (FramecxnError, ValueError) as exc:
        raise IngestError(_WORKER_INPUT, line_no, exc) from exc
    utt.frames = _WORKER_EXTRACTOR.extract(utt)
    return json.dumps(utt.to_record(), ensure_ascii=False)


def _cmd_extract(args) -> int:
    _require_file(args.grammar)
    _require_file(args.infile)
    with open(args.infile, encoding="utf-8") as fh:
        lines = [(no, line) for no, line in enumerate(fh, start=1)
                 if line.strip()]
    workers = _worker_count()
    with atomic_writer(args.out) as out:
        if workers == 1:
            _init_worker(args.grammar, args.infile)
            for numbered in lines:
                out.write(_extract_line(numbered) + "\n")
        else:
            with concurrent.futures.ProcessPoolExecutor(
                    max_workers=workers, initializer=_init_worker,
                    initargs=(args.grammar, args.infile)) as pool:
                chunk = max(1, len(lines) // (workers * 4))
                for result in pool.map(_extract_line, lines,
                                       chunksize=chunk):
                    out.write(result + "\n")
    print(f"extracted frames for {len(lines)} utterances -> {args.out}")
    return 0


def _cmd_evaluate(args) -> int:
    _require_file(args.pred)
    _require_file(args.gold)
    pred = list(read_corpus(args.pred))
    gold = list(read_corpus(args.gold))
    levels = list(LEVELS) if args.level == "both" else [args.level]
    reports = [score(pred, gold, level) for level in levels]
    payload = [r.to_json() for r in reports]
    print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=1))
    print()
    print(f"{'':<10}{'Precision':>11}{'Recall':>11}{'F1 score':>11}")
    for r in reports:
        print(f"{r.level.capitalize():<10}{r.precision:>11.2f}"
              f"{r.recall:>11.2f}{r.f1:>11.2f}")
    return 0


def _cmd_report(args) -> int:
    _require_file(args.grammar)
    net = load_grammar(args.grammar)
    name = args.name or Path(args.grammar).stem.upper()
    sys.stdout.write(analytics.grammar_report(net).render(name))
    return 0


def _cmd_assoc(args) -> int:
    net = _load(args)
    cxn = net.construction_for_mnemonic(args.mnemonic)
    pairs = analytics.associated_rolesets(net, cxn.cat.id)
    print(json.dumps([{"roleset": r, "weight": w} for r, w in pairs],
                     indent=1))
    return 0


def _cmd_sim(args) -> int:
    net = _load(args)
    a = net.construction_for_mnemonic(args.fe_a)
    b = net.construction_for_mnemonic(args.fe_b)
    value = analytics.cosine_similarity(net, a.cat.id, b.cat.id)
    print(json.dumps({"a": args.fe_a, "b": args.fe_b,
                      "cosine": round(value, 6)}))
    return 0


def _cmd_nearest(args) -> int:
    net = _load(args)
    fe = net.construction_for_mnemonic(args.fe)
    rows = analytics.nearest_frame_evoking(net, fe.cat.id, args.k)
    print(json.dumps([{"mnemonic": m, "cosine": round(s, 6)}
                      for _, m, s in rows], indent=1))
    return 0


def _cmd_zipf(args) -> int:
    net = _load(args)
    table = analytics.rank_frequency(net, args.group)
    write_text_atomic(args.csv, table.to_csv())
    print(f"wrote {len(table.rows)} rows -> {args.csv}")
    return 0


def _load(args) -> ConstructionNetwork:
    _require_file(args.grammar)
    return load_grammar(args.grammar)


_SCHEMA_HELP = """\
interchange format (JSON Lines, one utterance per line):
  {"id": str,
   "tokens": [{"form": str, "lemma": str, "pos": str}, ...],
   "tree": {"label": str, "children": [...]} | {"ptb": "(s (np ...) ...)"},
   "frames": [{"roleset": "tell.01", "v": [4, 5],
               "roles": {"arg0": [0, 3], "arg1": [6, 9]}}]}

Tree nodes without children are leaves, one token each, left to right;
PTB trees must list leaf words in token order.  Spans are half-open
token intervals.  Core roles are arg0..arg5 and arga; argm-*, c-* and
r-* annotations are dropped on ingestion.
"""


if __name__ == "__main__":
    sys.exit(main())
