#!/usr/bin/env python3
"""Generate a synthetic corpus directory for stats experiments.

Writes N small UTF-8 text files mixing canonical sentences with lines
that trip each rule, so `nota stats` has something to count:

    python scripts/make_synthetic_corpus.py --out corpus --files 200
    nota stats corpus --out report.json
"""

from __future__ import annotations

import argparse
import random
from pathlib import Path

LINES = [
    "بش نمشي في الدار",        # canonical
    "باش نمشي",                # future marker written long
    "اَلدار قدام الحومة",       # diacritic on the article
    "والدار والكتاب",           # fused conjunction
    "فالدار برشة ورقة",         # fused preposition
    "كول في الدار",             # irregular imperative
    "مشا ولد البلاد",           # final-letter spelling
    "ما كلموش البارح",          # ambiguous object pronoun
    "گاوري يخدم في السوق",      # regional /g/ letter
    "بقرة في البلاد",            # lexicalized /g/ word
    "كتابٌ قديم",               # stray tanwin
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", required=True, help="output directory")
    parser.add_argument("--files", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for i in range(args.files):
        body = "\n".join(rng.choice(LINES) for _ in range(rng.randint(1, 6)))
        (out / f"doc{i:05d}.txt").write_text(body + "\n", encoding="utf-8")
    print(f"wrote {args.files} files to {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
