"""Regenerate src/engelkit/data/baseline_table.csv with the brute-force oracles.

Only the corpus generators come from engelkit; every table value is computed
by tests/oracles.py.
"""
import csv
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

import oracles  # noqa: E402
from engelkit.corpus import CORPUS_LABELS, from_label  # noqa: E402
from engelkit.verify import TABLE_HEADER  # noqa: E402


def main():
    out = ROOT / "src" / "engelkit" / "data" / "baseline_table.csv"
    rows = []
    for label in CORPUS_LABELS:
        t = time.time()
        G = from_label(label)
        gens = [tuple(i - 1 for i in g.images) for g in G.generators]
        elements = oracles.fast_closure(gens, G.degree)
        rows.append(oracles.table_row(label, elements, G.degree))
        print(",".join(rows[-1]), f"({time.time() - t:.1f}s)", file=sys.stderr)
    with out.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(TABLE_HEADER)
        w.writerows(rows)


if __name__ == "__main__":
    main()
