"""Measure how tight each distance Estrada bound is across graph families.

For every graph in a parametric family sweep this prints one CSV row with
the log-scale gap of each single-graph bound: log(observed) - log(bound)
for lower bounds and log(bound) - log(observed) for upper bounds, so a
gap of 0 means the bound is attained and growth rates stay readable even
when the raw values overflow floats.

Usage:
    python3 scripts/bound_tightness.py [--n-min N] [--n-max N] [--families a,b,c]
"""

import argparse
import math
import sys
from dataclasses import dataclass

from destrada.bounds import distance_estrada, thm1_bounds, thm2_lower, thm3_lower, thm5_upper
from destrada.graphs import GraphFamily, generate
from destrada.numeric import fmt15

FAMILY_BUILDERS = {
    "complete": GraphFamily.complete,
    "cycle": GraphFamily.cycle,
    "path": GraphFamily.path,
    "star": GraphFamily.star,
    "balanced_bipartite": lambda n: GraphFamily.multipartite((n // 2, n - n // 2)),
}


@dataclass(frozen=True)
class TightnessConfig:
    families: tuple[str, ...] = tuple(FAMILY_BUILDERS)
    n_min: int = 3
    n_max: int = 40


def log_gaps(config: TightnessConfig):
    for name in config.families:
        build = FAMILY_BUILDERS[name]
        for n in range(config.n_min, config.n_max + 1):
            g = generate(build(n))
            log_obs = distance_estrada(g).log_value
            t1_lo, t1_up = thm1_bounds(g)
            row = {
                "family": name,
                "n": n,
                "dee_log": log_obs,
                "gap_t1_lower": log_obs - math.log(t1_lo),
                "gap_t2_lower": log_obs - math.log(thm2_lower(g)),
                "gap_t3_lower": log_obs - math.log(thm3_lower(g)),
                "gap_t1_upper": t1_up.log_value - log_obs,
                "gap_t5_upper": thm5_upper(g).log_value - log_obs,
            }
            yield row


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-min", type=int, default=3)
    parser.add_argument("--n-max", type=int, default=40)
    parser.add_argument("--families", default=",".join(FAMILY_BUILDERS))
    args = parser.parse_args()
    families = tuple(args.families.split(","))
    for name in families:
        if name not in FAMILY_BUILDERS:
            parser.error(f"unknown family {name!r}")
    if args.n_min < 3 or args.n_max < args.n_min:
        parser.error("need 3 <= n-min <= n-max")
    config = TightnessConfig(families=families, n_min=args.n_min, n_max=args.n_max)

    cols = ["family", "n", "dee_log", "gap_t1_lower", "gap_t2_lower",
            "gap_t3_lower", "gap_t1_upper", "gap_t5_upper"]
    print(",".join(cols))
    negative = []
    for row in log_gaps(config):
        print(",".join(
            row["family"] if c == "family" else
            str(row["n"]) if c == "n" else fmt15(row[c])
            for c in cols
        ))
        for c in cols[3:]:
            if row[c] < -1e-9:
                negative.append((row["family"], row["n"], c, row[c]))
    if negative:
        print(f"# {len(negative)} negative gaps (bound misses):", file=sys.stderr)
        for family, n, col, gap in negative:
            print(f"#   {family} n={n} {col} gap={fmt15(gap)}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
