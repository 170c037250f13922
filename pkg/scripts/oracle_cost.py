"""Oracle cost against instance size over the random family.

For each edge count m: decide's query count / m^2, find_witness's decide
calls / m^2, and the longest query relative to 12l (l = total label length).

    python3 scripts/oracle_cost.py --seeds 2000 --max-edges 14
"""

import argparse
from collections import defaultdict

from eulertrails.decide import VerdictKind, decide
from eulertrails.suite import suite_instance
from eulertrails.witness import find_witness


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=1000)
    ap.add_argument("--max-edges", type=int, default=10)
    args = ap.parse_args()

    rows = defaultdict(lambda: {"n": 0, "q": 0.0, "w": 0.0, "len": 0.0})
    for seed in range(args.seeds):
        inst = suite_instance(seed, max_edges=args.max_edges)
        g, a, b = inst.graph, inst.a, inst.b
        m, ell = len(g), g.total_word_length
        if m == 0:
            continue
        o = inst.oracle()
        verdict = decide(g, o, a, b)
        row = rows[m]
        row["n"] += 1
        row["q"] = max(row["q"], o.stats.query_count / m**2)
        longest = o.stats.max_query_length
        if verdict.kind is VerdictKind.NO:
            wo = inst.oracle()
            w = find_witness(g, wo, a, b)
            row["w"] = max(row["w"], w.decide_calls / m**2)
            longest = max(longest, wo.stats.max_query_length)
        if ell:
            row["len"] = max(row["len"], longest / (12 * ell))

    print(f"{'m':>3} {'runs':>5} {'queries/m^2':>12} {'witness calls/m^2':>18} {'len/12l':>8}")
    for m in sorted(rows):
        r = rows[m]
        print(f"{m:>3} {r['n']:>5} {r['q']:>12.2f} {r['w']:>18.2f} {r['len']:>8.2f}")


if __name__ == "__main__":
    main()
