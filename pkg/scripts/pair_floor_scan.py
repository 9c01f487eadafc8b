"""Scan complement pairs for misses of the fixed pair floor on DEE(G) + DEE(co-G).

Enumerates every connected labeled graph whose complement is also
connected, takes each unordered {graph, complement} pair once, and
compares DEE(G) + DEE(co-G) against the claimed floor
2*exp(1.5*(n-1)) + 2*exp(-1.5*(n-1)) + 2*n - 4.  Prints a per-order
summary (pair count, minimum slack, failures) and lists every failing
pair.  At the default order cap the only failures are the six labeled
five-cycles, each of which is isomorphic to its own complement.

Usage:
    python3 scripts/pair_floor_scan.py [--n-min N] [--n-max N]
"""

import argparse
from dataclasses import dataclass

from destrada.bounds import distance_estrada, thm4_ng_lower
from destrada.graphs import Graph, complement, connected_pair_masks, is_connected, to_graph6
from destrada.numeric import fmt15

SLACK_TOL = 1e-9


@dataclass(frozen=True)
class PairScanConfig:
    n_min: int = 4
    n_max: int = 6


@dataclass
class OrderStats:
    pairs: int = 0
    min_slack: float = float("inf")
    failures: tuple[tuple[str, float], ...] = ()


def scan_order(n: int) -> OrderStats:
    stats = OrderStats()
    floor = thm4_ng_lower(n)
    failures = []
    for mask in connected_pair_masks(n):
        g = Graph.from_pair_mask(n, mask)
        co = complement(g)
        if not is_connected(co) or co.pair_mask() < mask:
            continue
        observed = distance_estrada(g).value + distance_estrada(co).value
        slack = observed - floor
        stats.pairs += 1
        stats.min_slack = min(stats.min_slack, slack)
        if slack < -SLACK_TOL * max(1.0, abs(observed)):
            failures.append((to_graph6(g), slack))
    stats.failures = tuple(failures)
    return stats


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-min", type=int, default=4)
    parser.add_argument("--n-max", type=int, default=6)
    args = parser.parse_args()
    if args.n_min < 4 or args.n_max < args.n_min or args.n_max > 8:
        parser.error("need 4 <= n-min <= n-max <= 8")
    config = PairScanConfig(n_min=args.n_min, n_max=args.n_max)

    total_failures = 0
    for n in range(config.n_min, config.n_max + 1):
        stats = scan_order(n)
        print(f"n={n}: {stats.pairs} complement pairs, "
              f"min slack {fmt15(stats.min_slack)}, "
              f"{len(stats.failures)} failures")
        for gid, slack in stats.failures:
            print(f"  fail {gid}  slack {fmt15(slack)}")
        total_failures += len(stats.failures)
    print(f"total failures: {total_failures}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
