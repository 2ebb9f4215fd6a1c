#!/usr/bin/env python3
"""End-to-end refutation pipeline for the two-letter counterexample family.

Collects the tau pairs up to a weight bound, treats them as a congruence
candidate generating set H, and checks whether H can connect the chain
element (U_k, e) to anything at all: if every left factorization through H
fixes (U_k, e) while tau relates it to (U_k+1, e), the candidate is refuted.
Exit status 0 means refuted, matching the `munn counterexample` CLI verb.

Run:  python3 scripts/run_refutation.py [--k 6] [--max-h-weight 4]
"""

import argparse
import json
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from munn import refute_finite_generation, tau_pairs_up_to_weight


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=6, help="ball weight bound for the check")
    ap.add_argument("--max-h-weight", type=int, default=4,
                    help="weight bound for the collected tau pairs")
    ap.add_argument("--json", action="store_true", help="emit a JSON report")
    args = ap.parse_args()

    t0 = time.time()
    pairs = tau_pairs_up_to_weight(args.max_h_weight)
    report = refute_finite_generation(pairs, args.k)
    dt = time.time() - t0

    if args.json:
        print(json.dumps(
            {
                "k": args.k,
                "max_h_weight": args.max_h_weight,
                "tau_pairs": len(pairs),
                "refuted": report.refuted,
                "class_is_singleton": report.class_is_singleton,
                "factorizations": report.factorizations,
                "tau_witness": list(report.tau_witness) if report.tau_witness else None,
                "seconds": round(dt, 2),
            },
            indent=2,
            sort_keys=True,
        ))
    else:
        print(f"tau pairs collected up to weight {args.max_h_weight}: {len(pairs)}")
        print(report.summary())
        print(f"elapsed: {dt:.1f}s")
    return 0 if report.refuted else 1


if __name__ == "__main__":
    sys.exit(main())
