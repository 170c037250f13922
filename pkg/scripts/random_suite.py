"""Run the seeded random family: decide vs brute force, then witnesses on the no-instances.

    python3 scripts/random_suite.py --seeds 500
"""

import argparse
import time
from collections import Counter

from eulertrails.brute import VACUOUS, all_labels_equal
from eulertrails.decide import VerdictKind, decide
from eulertrails.suite import suite_instance
from eulertrails.witness import find_witness, validate_witness


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=500)
    ap.add_argument("--first", type=int, default=0)
    ap.add_argument("--max-edges", type=int, default=10)
    args = ap.parse_args()

    kinds = Counter()
    bad, witnesses, invalid = [], 0, []
    start = time.perf_counter()
    for seed in range(args.first, args.first + args.seeds):
        inst = suite_instance(seed, max_edges=args.max_edges)
        g, a, b = inst.graph, inst.a, inst.b
        verdict = decide(g, inst.oracle(), a, b)
        expected = all_labels_equal(g, inst.oracle(), a, b)
        if expected == VACUOUS:
            ok = verdict.kind is VerdictKind.VACUOUS_YES
        else:
            ok = verdict.kind is not VerdictKind.VACUOUS_YES and verdict.same_label == expected
        if not ok:
            bad.append(seed)
        kinds[inst.backend, verdict.kind.value] += 1
        if verdict.kind is VerdictKind.NO:
            w = find_witness(g, inst.oracle(), a, b)
            witnesses += 1
            if not validate_witness(g, inst.oracle(), a, b, w):
                invalid.append(seed)
    elapsed = time.perf_counter() - start

    print(f"{args.seeds} instances in {elapsed:.1f} s")
    for (backend, kind), n in sorted(kinds.items()):
        print(f"  {backend:6} {kind:12} {n}")
    print(f"agreement with brute force: {args.seeds - len(bad)}/{args.seeds}", bad[:10] or "")
    print(f"valid witnesses: {witnesses - len(invalid)}/{witnesses}", invalid[:10] or "")


if __name__ == "__main__":
    main()
