#!/usr/bin/env python3
"""Writes the throughput benchmark problem: many ground p-facts of varied
shape, one non-recursive rule and an unreachable goal."""

import argparse
import random

FUNCTIONS = [("f", 2), ("g", 1), ("h", 3), ("k", 1)]
CONSTANTS = ["a", "b", "c", "d"]


def term(rng, budget):
    if budget <= 1 or rng.random() < 0.15:
        return rng.choice(CONSTANTS), 1
    name, arity = rng.choice(FUNCTIONS)
    args, used = [], 1
    for i in range(arity):
        share = max(1, (budget - used) // (arity - i))
        t, n = term(rng, share)
        args.append(t)
        used += n
    return f"{name}({','.join(args)})", used


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--facts", type=int, default=12000)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("-o", "--output", required=True)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    seen = set()
    lines = ["% Generated by tools/make_perf_problem.py; do not edit.",
             f"% {args.facts} ground facts, seed {args.seed}."]
    while len(seen) < args.facts:
        t, _ = term(rng, rng.randint(6, 16))
        if t not in seen:
            seen.add(t)
            lines.append(f"cnf(fact{len(seen)}, axiom, p({t})).")
    lines.append("cnf(lift, axiom, ~p(X) | r(X)).")
    lines.append("cnf(goal, negated_conjecture, ~s(h(f(g(a),k(b)),g(h(c,d,a)),f(k(d),g(g(b)))))).")
    with open(args.output, "w") as out:
        out.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
