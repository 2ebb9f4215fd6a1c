#!/usr/bin/env python3
"""Census of bounded balls: element counts by diameter and by weight.

Useful for sizing exhaustive sweeps before running them.

Run:  python3 scripts/ball_census.py [--letters x,y] [--max-diameter 3]
"""

import argparse
import os
import sys
from collections import Counter

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from munn import Alphabet, enumerate_elements


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--letters", default="x,y", help="comma-separated letter names")
    ap.add_argument("--max-diameter", type=int, default=3)
    args = ap.parse_args()

    ab = Alphabet(tuple(args.letters.split(",")))
    for flavor in ("FLA", "FA", "FI"):
        print(f"\n{flavor} over {{{args.letters}}}")
        for d in range(args.max_diameter + 1):
            try:
                ball = list(enumerate_elements(ab, flavor, max_diameter=d))
            except MemoryError:
                print(f"  d<={d}: out of memory, stopping")
                break
            weights = Counter(m.weight for m in ball)
            profile = " ".join(f"w{w}:{n}" for w, n in sorted(weights.items()))
            print(f"  d<={d}: {len(ball):>8} elements   ({profile})")


if __name__ == "__main__":
    main()
