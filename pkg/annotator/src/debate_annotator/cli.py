"""Command-line entry point for the sidecar generator."""

from __future__ import annotations

import argparse
import logging
import sys

from .annotate import AnnotatorConfig, annotate_corpus


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="debate-annotator",
        description="Generate the sidecar annotation file for a debate corpus",
    )
    parser.add_argument("--corpus", required=True, help="corpus JSON-Lines file")
    parser.add_argument("--embeddings", required=True, help="word-embedding table")
    parser.add_argument("--out", required=True, help="output sidecar path")
    parser.add_argument("--topics", type=int, default=30, help="LDA topic count")
    parser.add_argument("--seed", type=int, default=13)
    parser.add_argument("--discourse", default="heuristic",
                        choices=("heuristic",), help="discourse relation mode")
    parser.add_argument("-q", "--quiet", action="store_true")
    args = parser.parse_args(argv)

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.ERROR if args.quiet else logging.WARNING,
        format="%(levelname)s %(message)s",
    )
    try:
        config = AnnotatorConfig(
            corpus_path=args.corpus,
            embeddings_path=args.embeddings,
            output_path=args.out,
            topics=args.topics,
            seed=args.seed,
            discourse_mode=args.discourse,
        )
        out = annotate_corpus(config)
    except (FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"sidecar written to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
