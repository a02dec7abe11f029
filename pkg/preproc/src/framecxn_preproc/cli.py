"""framecxn-preprocess: raw text + annotations -> interchange JSONL."""

import argparse
import json
import logging
import sys

from .backends import get_backend
from .errors import ParserUnavailable
from .preprocess import preprocess_file


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="framecxn-preprocess",
        description="Tokenize, tag, lemmatize and parse raw records into "
                    "the framecxn corpus interchange format.")
    parser.add_argument("--in", dest="infile", required=True,
                        help="raw JSONL: {id, text, frames}")
    parser.add_argument("--out", required=True,
                        help="interchange JSONL output")
    parser.add_argument("--backend", default="chunk",
                        help="parser backend: chunk (built-in) or "
                             "spacy-benepar (optional extra)")
    args = parser.parse_args(argv)

    logging.basicConfig(level=logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        backend = get_backend(args.backend)
        stats = preprocess_file(args.infile, args.out, backend)
    except ParserUnavailable as exc:
        print(f"error: ParserUnavailable: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(stats.to_json()), file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
