"""Exhaustive verification of the bound catalog over small labeled graphs.

Walks every connected labeled graph on 2..max_n vertices (by adjacency
bitmask), runs the full per-graph check battery, and aggregates violations,
descriptive findings, and equality hits in deterministic enumeration order.
Work can be sharded across processes; the merge re-sorts by (n, mask) so
the summary is identical for any shard count.
"""

from __future__ import annotations

import math
import multiprocessing
from dataclasses import dataclass

from .bounds import (
    L3_LAMBDA1_LOWER,
    L4_CLASS,
    SIGNATURE_ABS_TOL,
    STRICT_SLACK,
    T1_LOWER,
    T1_UPPER,
    T2_LOWER,
    T3_LOWER,
    T4_NG_LOWER,
    T5_UPPER,
    T6_IDENTITY,
    SpectralMismatchError,
    comparison_checks,
    evaluate,
    reports_from,
)
from .graphs import MAX_ENUM_N, Graph, connected_pair_masks, to_graph6
from .metric import sum_sq_distances
from .spectra import (
    EigenConvergenceError,
    adjacency_matrix,
    eig_sym,
    lemma1_check,
    lemma2_spectrum,
)

# check ids beyond the bound catalog
L1_IDENTITY = "L1_identity"
L2_TRANSFORM = "L2_transform"
L3_EQUALITY_IFF = "L3_equality_iff"
L4_CONTRADICTION = "L4_contradiction"
EIG_FAILURE = "EIG_convergence"
COMP_T3_VS_T1 = "COMP_t3_vs_t1"
COMP_T5_VS_T1 = "COMP_t5_vs_t1"
T3_ARGMAX = "T3_argmax_sanity"

# catalog rows asserted to hold with strict margin on the sweep population
_STRICT_ASSERTED = (T1_LOWER, T1_UPPER, T5_UPPER)
# rows asserted non-strictly (equality is a legitimate hit)
_NONSTRICT_ASSERTED = (T3_LOWER, L3_LAMBDA1_LOWER)
# rows reported per graph but never failed on: see docs/findings.md
_DESCRIPTIVE = (T2_LOWER, T4_NG_LOWER)

_EQUALITY_TRACKED = frozenset({
    T1_LOWER, T1_UPPER, T2_LOWER, T3_LOWER, T4_NG_LOWER,
    T5_UPPER, T6_IDENTITY, L3_LAMBDA1_LOWER,
})


@dataclass(frozen=True)
class VerificationSummary:
    """Deterministic aggregate of one exhaustive sweep."""

    population: str
    max_n: int
    graphs_checked: int
    counts_by_n: tuple[tuple[int, int], ...]
    violations: tuple[tuple[str, str, float], ...]
    findings: tuple[tuple[str, str, float], ...]
    equality_hits: tuple[tuple[str, str], ...]
    t3_argmax: tuple[tuple[int, str, float], ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def _check_graph(n: int, mask: int):
    """Full battery for one graph; returns (violations, findings, hits, t3_slack).

    Entry tuples are prefixed (n, mask, ...) so a sharded merge can restore
    enumeration order.  The graph6 id is only rendered when something gets
    recorded.  Each unordered {graph, complement} pair is costed once: the
    smaller adjacency mask evaluates the complement-pair bound for both.
    """
    g = Graph.from_pair_mask(n, mask)
    bad: list[tuple[str, float]] = []
    found: list[tuple[str, float]] = []
    hit_ids: list[str] = []

    try:
        ev = evaluate(g)
        own_t4 = not ev.comp_connected or ev.comp.pair_mask() > mask
        reports = reports_from(ev, include_t4=own_t4)
    except SpectralMismatchError:
        bad.append((L4_CONTRADICTION, math.nan))
        reports = None
    except EigenConvergenceError:
        bad.append((EIG_FAILURE, math.nan))
        reports = None

    t3_slack = math.nan
    if reports is not None:
        r1l, r1u, r2, r3, r4, r5, r6, rl3, _ = reports
        t3_slack = r3.slack

        for r in (r1l, r1u, r5):
            if not (r.holds and r.slack > STRICT_SLACK):
                bad.append((r.theorem_id, r.slack))
        for r in (r3, rl3):
            if not r.holds:
                bad.append((r.theorem_id, r.slack))
        for r in (r2, r4):
            if r.applicable and not (
                r.holds and (not r.strict_required or r.slack > STRICT_SLACK)
            ):
                found.append((r.theorem_id, r.slack))
        if r6.applicable and not r6.holds:
            bad.append((T6_IDENTITY, r6.slack))

        # the structural equality flag must match numeric equality both ways
        numeric_eq = abs(rl3.slack) <= SIGNATURE_ABS_TOL
        if bool(rl3.equality) != numeric_eq:
            bad.append((L3_EQUALITY_IFF, rl3.slack))

        # trace and second-moment identities of the distance spectrum
        res_sum, res_sq = lemma1_check(ev.spectrum, ev.dm)
        moment = 2 * sum_sq_distances(ev.dm)
        if res_sum > 1e-9 or res_sq > 1e-9 * moment:
            bad.append((L1_IDENTITY, max(res_sum, res_sq)))

        # regular diameter-<=2 graphs: distance spectrum via the adjacency transform
        if ev.r is not None and ev.rho <= 2:
            adj_s = eig_sym(adjacency_matrix(g))
            mapped = lemma2_spectrum(adj_s, n, ev.r)
            diff = max(abs(a - b) for a, b in zip(mapped.values, ev.spectrum.values))
            if diff > SIGNATURE_ABS_TOL:
                bad.append((L2_TRANSFORM, diff))

        t3_beats, t5_beats = comparison_checks(g, rho=ev.rho)
        if not t3_beats:
            bad.append((COMP_T3_VS_T1, r3.slack))
        if not t5_beats:
            bad.append((COMP_T5_VS_T1, r5.slack))

        for r in reports:
            if r.applicable and r.equality and r.theorem_id in _EQUALITY_TRACKED:
                hit_ids.append(r.theorem_id)

    if not (bad or found or hit_ids):
        return (), (), (), t3_slack
    gid = to_graph6(g)
    return (
        tuple((n, mask, gid, cid, s) for cid, s in bad),
        tuple((n, mask, gid, cid, s) for cid, s in found),
        tuple((n, mask, gid, cid) for cid in hit_ids),
        t3_slack,
    )


def _run_shard(args: tuple[int, int, int]):
    """One (n, residue, step) slice of the enumeration; picklable for Pool."""
    n, start, step = args
    violations = []
    findings = []
    hits = []
    count = 0
    best = (-math.inf, -1)  # (slack, mask); smaller mask wins ties
    for mask in connected_pair_masks(n, start=start, step=step):
        v, f, h, t3_slack = _check_graph(n, mask)
        violations.extend(v)
        findings.extend(f)
        hits.extend(h)
        count += 1
        if t3_slack == t3_slack:  # skip nan
            if t3_slack > best[0] or (t3_slack == best[0] and mask < best[1]):
                best = (t3_slack, mask)
    return n, count, violations, findings, hits, best


def complete_graph_id(n: int) -> str:
    return to_graph6(Graph.from_pair_mask(n, (1 << (n * (n - 1) // 2)) - 1))


def verify_population(max_n: int, threads: int = 1) -> VerificationSummary:
    """Sweep all connected labeled graphs with 2 <= n <= max_n."""
    if not 2 <= max_n <= MAX_ENUM_N:
        raise ValueError(f"max_n must be in [2, {MAX_ENUM_N}]")
    if threads < 1:
        raise ValueError("threads must be >= 1")

    shards = [(n, k, threads) for n in range(2, max_n + 1) for k in range(threads)]
    if threads == 1:
        results = [_run_shard(s) for s in shards]
    else:
        with multiprocessing.get_context("fork").Pool(threads) as pool:
            results = pool.map(_run_shard, shards, chunksize=1)

    counts: dict[int, int] = {n: 0 for n in range(2, max_n + 1)}
    violations = []
    findings = []
    hits = []
    best_by_n: dict[int, tuple[float, int]] = {}
    for n, count, v, f, h, best in results:
        counts[n] += count
        violations.extend(v)
        findings.extend(f)
        hits.extend(h)
        if best[1] >= 0:
            cur = best_by_n.get(n)
            if cur is None or best[0] > cur[0] or (best[0] == cur[0] and best[1] < cur[1]):
                best_by_n[n] = best

    violations.sort(key=lambda e: (e[0], e[1], e[3]))
    findings.sort(key=lambda e: (e[0], e[1], e[3]))
    hits.sort(key=lambda e: (e[0], e[1], e[3]))

    argmax_rows = []
    for n in sorted(best_by_n):
        slack, mask = best_by_n[n]
        gid = to_graph6(Graph.from_pair_mask(n, mask))
        argmax_rows.append((n, gid, slack))
        # the zero-slack complete graph can only top chart when it is alone
        if 3 <= n <= 6 and gid == complete_graph_id(n):
            violations.append((n, mask, gid, T3_ARGMAX, slack))

    violations.sort(key=lambda e: (e[0], e[1], e[3]))
    return VerificationSummary(
        population=f"connected labeled graphs with 2 <= n <= {max_n}",
        max_n=max_n,
        graphs_checked=sum(counts.values()),
        counts_by_n=tuple(sorted(counts.items())),
        violations=tuple((gid, cid, s) for _, _, gid, cid, s in violations),
        findings=tuple((gid, cid, s) for _, _, gid, cid, s in findings),
        equality_hits=tuple((gid, cid) for _, _, gid, cid in hits),
        t3_argmax=tuple(argmax_rows),
    )
