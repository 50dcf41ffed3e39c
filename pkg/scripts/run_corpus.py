"""Run the full pipeline on every curve file of a directory and print a table.

    python3 scripts/run_corpus.py [DIRECTORY] [--jobs N] [--truncation T]
"""

import argparse
import sys
import time
from pathlib import Path

from oneplace.cli import _corpus_table, run_corpus
from oneplace.config import RunConfig

BUNDLED = Path(__file__).resolve().parents[1] / "src" / "oneplace" / "corpus"


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("directory", nargs="?", default=str(BUNDLED))
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--truncation", type=int, default=None)
    ns = parser.parse_args(argv)
    config = RunConfig(truncation=ns.truncation, format="text", jobs=ns.jobs)
    start = time.perf_counter()
    rows = run_corpus(ns.directory, config.truncation, config.jobs)
    print(_corpus_table(rows))
    print(f"elapsed {time.perf_counter() - start:.1f} s")
    return 0 if all(r["ok"] for r in rows) else 3


if __name__ == "__main__":
    sys.exit(main())
