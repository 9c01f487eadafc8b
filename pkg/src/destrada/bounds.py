"""Estrada indices of spectra plus the tracked catalog of bounds and identities.

Nine catalog entries, each a lower bound, upper bound, or identity for the
distance Estrada index ``DEE = sum(e**lambda_i)`` over distance eigenvalues
(or, for the entries tagged L3/L4, for the extreme distance eigenvalues
themselves).  Every entry is evaluated into a ``BoundReport`` carrying the
bound, the observed value, signed slack, and equality classification; large
exponents switch the report into log domain instead of overflowing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .graphs import (
    Graph,
    complement,
    degree_profile,
    diameter,
    is_connected,
    regularity,
)
from .metric import DistanceMatrix, distance_matrix
from .numeric import EXP_OVERFLOW, dd_compare, log_sum_exp, safe_exp
from .spectra import Spectrum, adjacency_matrix, distance_sym, eig_sym

# catalog identifiers, fixed report order
T1_LOWER = "T1_lower"
T1_UPPER = "T1_upper"
T2_LOWER = "T2_lower"
T3_LOWER = "T3_lower"
T4_NG_LOWER = "T4_ng_lower"
T5_UPPER = "T5_upper"
T6_IDENTITY = "T6_identity"
L3_LAMBDA1_LOWER = "L3_lambda1_lower"
L4_CLASS = "L4_class"

CATALOG_IDS = (
    T1_LOWER, T1_UPPER, T2_LOWER, T3_LOWER, T4_NG_LOWER,
    T5_UPPER, T6_IDENTITY, L3_LAMBDA1_LOWER, L4_CLASS,
)

IDENTITY_REL_TOL = 1e-9       # identities and equality flags, relative
SIGNATURE_ABS_TOL = 1e-8      # extreme-eigenvalue signatures, absolute
STRICT_SLACK = 1e-6           # margin demanded before calling an inequality strict
LEAST_EIG_THRESHOLD = -2.383  # ceiling on lambda_n outside the two exact classes


class SpectralMismatchError(RuntimeError):
    """Structural class and spectral signature disagree (solver or classifier bug)."""


class DistSpectrumClass(Enum):
    COMPLETE = "CompleteCase"
    MULTIPARTITE = "MultipartiteCase"
    BELOW_2383 = "Below2383"


@dataclass(frozen=True)
class EstradaValue:
    """Sum of e**lambda over a spectrum, with a log-domain shadow."""

    value: float
    log_value: float
    overflowed: bool


@dataclass(frozen=True)
class ExpBound:
    """A bound of the form const + e**exponent, safe against overflow."""

    const: float
    exponent: float

    @property
    def log_domain(self) -> bool:
        return self.exponent > EXP_OVERFLOW

    @property
    def value(self) -> float:
        return self.const + safe_exp(self.exponent)

    @property
    def log_value(self) -> float:
        if self.exponent > 40.0:
            # const contributes below one ulp once exponent - log(const) > ~40
            return self.exponent + math.log1p(self.const * math.exp(-self.exponent))
        return math.log(self.value)

    def _exp_dominates(self) -> bool:
        """Exponential term at least 1000x the additive constant."""
        if self.const <= 0.0:
            return True
        return self.exponent >= math.log(1000.0 * self.const)

    def le(self, other: "ExpBound", rel_tol: float = IDENTITY_REL_TOL) -> bool:
        """self <= other up to relative tolerance, honoring log domain.

        When either side lives in log domain and the exponential term
        dominates its constant by 1000x on both sides, compare exponents
        (the logs of the dominant terms); otherwise fall back to
        extended-precision summation of the expanded terms.
        """
        if self.log_domain or other.log_domain:
            if self._exp_dominates() and other._exp_dominates():
                return self.exponent <= other.exponent + rel_tol * max(
                    1.0, abs(other.exponent)
                )
            return dd_compare(
                [self.const, safe_exp(self.exponent)],
                [other.const, safe_exp(other.exponent)],
            ) <= 0
        a, b = self.value, other.value
        if abs(a - b) <= 1e-12 * max(abs(a), abs(b)):
            # rounding-level tie: settle the summation in double-double
            return dd_compare(
                [self.const, math.exp(self.exponent)],
                [other.const, math.exp(other.exponent)],
            ) <= 0
        return a <= b + rel_tol * max(1.0, abs(b))


def estrada_index(s: Spectrum) -> EstradaValue:
    """Compensated sum of e**lambda_i; flips to log domain past exponent 700."""
    overflowed = any(v > EXP_OVERFLOW for v in s.values)
    log_value = log_sum_exp(s.values)
    if overflowed:
        return EstradaValue(value=math.inf, log_value=log_value, overflowed=True)
    value = math.fsum(math.exp(v) for v in s.values)
    return EstradaValue(value=value, log_value=log_value, overflowed=False)


def distance_estrada(g: Graph) -> EstradaValue:
    """DEE of a connected graph straight from its distance spectrum."""
    return estrada_index(eig_sym(distance_sym(distance_matrix(g))))


def thm1_bounds(g: Graph) -> tuple[float, ExpBound]:
    """sqrt(n^2 + 4m) <= DEE <= n - 1 + e**(rho * sqrt(n(n-1)))."""
    if not is_connected(g):
        raise ValueError("bound needs a connected graph")
    n, m = g.n, g.m
    rho = diameter(g)
    lower = math.sqrt(n * n + 4 * m)
    upper = ExpBound(const=float(n - 1), exponent=rho * math.sqrt(n * (n - 1)))
    return lower, upper


def _thm2_expbound(g: Graph) -> ExpBound:
    if g.n < 2:
        raise ValueError("bound needs n >= 2")
    a = 2.0 * (g.n - 1) - 2.0 * g.m / g.n
    return ExpBound(const=math.exp(-a) + g.n - 2, exponent=a)


def thm2_lower(g: Graph) -> float:
    """e**a + e**-a + n - 2 with a = 2(n-1) - 2m/n.

    Reported descriptively: direct evaluation shows the complete graph K_3
    already exceeds DEE, so this is not asserted as a universal lower bound
    (see docs/findings.md); only its K_2 equality case is exact.
    """
    return _thm2_expbound(g).value


def _thm3_exponents(g: Graph) -> tuple[float, float]:
    prof = degree_profile(g)
    n = g.n
    # (2 - D1/(n-1))(2 - D2/(n-1)) is the same product scaled by (n-1)^2
    s = math.sqrt((2 * n - 2 - prof.delta1) * (2 * n - 2 - prof.delta2))
    return s, -s / (n - 1)


def _thm3_expbound(g: Graph) -> ExpBound:
    if g.n < 2:
        raise ValueError("bound needs n >= 2")
    s, neg = _thm3_exponents(g)
    return ExpBound(const=(g.n - 1) * math.exp(neg), exponent=s)


def thm3_lower(g: Graph) -> float:
    """e**s + (n-1) * e**(-s/(n-1)) with s = sqrt((2n-2-D1)(2n-2-D2)).

    D1, D2 the largest and second-largest degrees; equality exactly at
    complete graphs.
    """
    return _thm3_expbound(g).value


def _thm4_expbound(n: int) -> ExpBound:
    if n < 2:
        raise ValueError("bound needs n >= 2")
    a = 1.5 * (n - 1)
    return ExpBound(const=2.0 * math.exp(-a) + 2 * n - 4, exponent=a + math.log(2.0))


def thm4_ng_lower(n: int) -> float:
    """Complement-pair lower bound 2e**(3(n-1)/2) + 2e**(-3(n-1)/2) + 2n - 4."""
    return _thm4_expbound(n).value


def thm5_upper(g: Graph) -> ExpBound:
    """Strict upper bound n - 1 + e**sqrt(n(n-1)rho^2 - 1)."""
    if g.n < 2:
        raise ValueError("bound needs n >= 2")
    rho = diameter(g)
    return ExpBound(const=float(g.n - 1), exponent=math.sqrt(g.n * (g.n - 1) * rho * rho - 1.0))


def thm6_identity(g: Graph) -> tuple[float, float]:
    """For r-regular diameter-<=2 graphs: DEE against its closed complement form.

    Returns (lhs, rhs) with lhs = DEE(g) and
    rhs = e**(2n-r-2) - e**(n-r-2) + e**-1 * EE(complement).
    """
    r = regularity(g)
    if r is None:
        raise ValueError("identity needs a regular graph")
    if diameter(g) > 2:
        raise ValueError("identity needs diameter <= 2")
    n = g.n
    lhs = distance_estrada(g).value
    ee_comp = estrada_index(eig_sym(adjacency_matrix(complement(g)))).value
    rhs = safe_exp(2 * n - r - 2) - safe_exp(n - r - 2) + math.exp(-1.0) * ee_comp
    return lhs, rhs


def lemma3_lambda1_lower(g: Graph) -> float:
    """sqrt((2n-2-D1)(2n-2-D2)), a floor under the largest distance eigenvalue."""
    if g.n < 2:
        raise ValueError("bound needs n >= 2")
    s, _ = _thm3_exponents(g)
    return s


def is_regular_diam_le2(g: Graph) -> bool:
    """Structural equality test for the largest-eigenvalue floor."""
    return regularity(g) is not None and diameter(g) <= 2


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_complete_multipartite(g: Graph) -> bool:
    """True when the complement splits into disjoint cliques (>= 2 parts)."""
    comp = complement(g)
    full = (1 << g.n) - 1
    seen = 0
    parts = 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        # flood the component of v in the complement
        compo = 1 << v
        frontier = compo
        while frontier:
            nxt = 0
            while frontier:
                u = (frontier & -frontier).bit_length() - 1
                nxt |= comp.adj[u]
                frontier &= frontier - 1
            frontier = nxt & ~compo
            compo |= frontier
        u = compo
        while u:
            w = (u & -u).bit_length() - 1
            if (comp.adj[w] | 1 << w) & compo != compo:
                return False
            u &= u - 1
        seen |= compo
        parts += 1
    return parts >= 2 and seen == full


def lemma4_classify(g: Graph, s: Spectrum) -> DistSpectrumClass:
    """Trichotomy of the least distance eigenvalue, cross-checked structurally.

    lambda_n = -1 exactly at complete graphs, -2 exactly at complete
    multipartite graphs (n >= 3), and below -2.383 everywhere else; the
    class is decided from the structure and the spectrum must agree.
    """
    if g.n < 2:
        raise ValueError("classification needs n >= 2")
    least = s.values[-1]
    if is_complete(g):
        cls = DistSpectrumClass.COMPLETE
        ok = abs(least + 1.0) <= SIGNATURE_ABS_TOL
    elif g.n >= 3 and is_complete_multipartite(g):
        cls = DistSpectrumClass.MULTIPARTITE
        ok = abs(least + 2.0) <= SIGNATURE_ABS_TOL
    else:
        cls = DistSpectrumClass.BELOW_2383
        ok = least < LEAST_EIG_THRESHOLD
    if not ok:
        raise SpectralMismatchError(
            f"least distance eigenvalue {least!r} contradicts class {cls.value}"
        )
    return cls


@dataclass(frozen=True)
class BoundReport:
    """One catalog entry evaluated on one graph.

    slack is observed - bound for lower bounds and identities, bound -
    observed for upper bounds; when log_domain is set, bound_value,
    observed, and slack all live on the log scale.  Inapplicable entries
    carry None numerics and a reason in note.
    """

    theorem_id: str
    applicable: bool
    bound_value: float | None
    observed: float | None
    slack: float | None
    holds: bool | None
    equality: bool | None
    strict_required: bool
    log_domain: bool = False
    note: str = ""


@dataclass(frozen=True)
class GraphEvaluation:
    """Shared per-graph work: distance spectrum, DEE, complement facts."""

    graph: Graph
    dm: DistanceMatrix
    rho: int
    spectrum: Spectrum
    dee: EstradaValue
    r: int | None
    comp: Graph
    comp_connected: bool


def evaluate(g: Graph) -> GraphEvaluation:
    dm = distance_matrix(g)
    s = eig_sym(distance_sym(dm))
    comp = complement(g)
    return GraphEvaluation(
        graph=g,
        dm=dm,
        rho=dm.diameter(),
        spectrum=s,
        dee=estrada_index(s),
        r=regularity(g),
        comp=comp,
        comp_connected=is_connected(comp),
    )


def _skip(tid: str, strict_required: bool, note: str) -> BoundReport:
    return BoundReport(
        theorem_id=tid, applicable=False, bound_value=None, observed=None,
        slack=None, holds=None, equality=None, strict_required=strict_required,
        note=note,
    )


def _ineq_report(
    tid: str,
    bound: ExpBound,
    obs: EstradaValue,
    upper: bool,
    strict_required: bool,
    note: str = "",
) -> BoundReport:
    log_domain = bound.log_domain or obs.overflowed
    if log_domain:
        b, o = bound.log_value, obs.log_value
    else:
        b, o = bound.value, obs.value
    slack = (b - o) if upper else (o - b)
    tol = IDENTITY_REL_TOL * max(1.0, abs(o))
    return BoundReport(
        theorem_id=tid, applicable=True, bound_value=b, observed=o,
        slack=slack, holds=slack >= -tol, equality=abs(slack) <= tol,
        strict_required=strict_required, log_domain=log_domain, note=note,
    )


def _pair_estrada(a: EstradaValue, b: EstradaValue, sa: Spectrum, sb: Spectrum) -> EstradaValue:
    return EstradaValue(
        value=a.value + b.value,
        log_value=log_sum_exp(sa.values + sb.values),
        overflowed=a.overflowed or b.overflowed,
    )


def reports_from(ev: GraphEvaluation, include_t4: bool = True) -> tuple[BoundReport, ...]:
    """The nine catalog rows for one evaluated graph, in CATALOG_IDS order.

    include_t4=False marks the complement-pair row as deferred instead of
    evaluating it; the exhaustive sweep uses this to cost each unordered
    {graph, complement} pair once.
    """
    g = ev.graph
    n = g.n
    out: list[BoundReport] = []

    t1_low = ExpBound(const=math.sqrt(n * n + 4 * g.m), exponent=-math.inf)
    t1_up = ExpBound(const=float(n - 1), exponent=ev.rho * math.sqrt(n * (n - 1)))
    strict1 = n >= 2
    out.append(_ineq_report(T1_LOWER, t1_low, ev.dee, upper=False, strict_required=strict1))
    out.append(_ineq_report(T1_UPPER, t1_up, ev.dee, upper=True, strict_required=strict1))

    if n < 2:
        out.append(_skip(T2_LOWER, False, "needs n >= 2"))
        out.append(_skip(T3_LOWER, False, "needs n >= 2"))
    else:
        out.append(_ineq_report(
            T2_LOWER, _thm2_expbound(g), ev.dee, upper=False, strict_required=False,
            note="descriptive only; asserted just at its two-vertex equality case",
        ))
        out.append(_ineq_report(
            T3_LOWER, _thm3_expbound(g), ev.dee, upper=False, strict_required=False,
        ))

    if n < 2:
        out.append(_skip(T4_NG_LOWER, True, "needs n >= 2"))
    elif not ev.comp_connected:
        out.append(_skip(T4_NG_LOWER, True, "complement disconnected"))
    elif not include_t4:
        out.append(_skip(T4_NG_LOWER, True, "checked at the complement's slot"))
    else:
        comp_s = eig_sym(distance_sym(distance_matrix(ev.comp)))
        pair = _pair_estrada(ev.dee, estrada_index(comp_s), ev.spectrum, comp_s)
        out.append(_ineq_report(
            T4_NG_LOWER, _thm4_expbound(n), pair, upper=False, strict_required=True,
            note="observed is this graph's index plus its complement's",
        ))

    if n < 2:
        out.append(_skip(T5_UPPER, True, "needs n >= 2"))
    else:
        out.append(_ineq_report(T5_UPPER, thm5_upper(g), ev.dee, upper=True, strict_required=True))

    if ev.r is None:
        out.append(_skip(T6_IDENTITY, False, "not regular"))
    elif ev.rho > 2:
        out.append(_skip(T6_IDENTITY, False, "diameter > 2"))
    else:
        lhs = ev.dee.value
        ee_comp = estrada_index(eig_sym(adjacency_matrix(ev.comp))).value
        rhs = safe_exp(2 * n - ev.r - 2) - safe_exp(n - ev.r - 2) + math.exp(-1.0) * ee_comp
        slack = lhs - rhs
        tol = IDENTITY_REL_TOL * max(1.0, abs(lhs))
        ok = abs(slack) <= tol
        out.append(BoundReport(
            theorem_id=T6_IDENTITY, applicable=True, bound_value=rhs, observed=lhs,
            slack=slack, holds=ok, equality=ok, strict_required=False,
        ))

    if n < 2:
        out.append(_skip(L3_LAMBDA1_LOWER, False, "needs n >= 2"))
        out.append(_skip(L4_CLASS, False, "needs n >= 2"))
        return tuple(out)

    radical = lemma3_lambda1_lower(g)
    lam1 = ev.spectrum.values[0]
    slack = lam1 - radical
    out.append(BoundReport(
        theorem_id=L3_LAMBDA1_LOWER, applicable=True, bound_value=radical,
        observed=lam1, slack=slack,
        holds=slack >= -IDENTITY_REL_TOL * max(1.0, abs(lam1)),
        equality=is_regular_diam_le2(g), strict_required=False,
        note="equality flag is structural: regular with diameter <= 2",
    ))

    cls = lemma4_classify(g, ev.spectrum)
    least = ev.spectrum.values[-1]
    if cls is DistSpectrumClass.BELOW_2383:
        slack = LEAST_EIG_THRESHOLD - least
        out.append(BoundReport(
            theorem_id=L4_CLASS, applicable=True, bound_value=LEAST_EIG_THRESHOLD,
            observed=least, slack=slack, holds=slack > 0.0, equality=False,
            strict_required=True, note=cls.value,
        ))
    else:
        target = -1.0 if cls is DistSpectrumClass.COMPLETE else -2.0
        slack = least - target
        out.append(BoundReport(
            theorem_id=L4_CLASS, applicable=True, bound_value=target,
            observed=least, slack=slack, holds=abs(slack) <= SIGNATURE_ABS_TOL,
            equality=True, strict_required=False, note=cls.value,
        ))
    return tuple(out)


def bound_report(g: Graph) -> tuple[BoundReport, ...]:
    """The full nine-entry catalog for one connected graph, fixed order."""
    return reports_from(evaluate(g))


def comparison_checks(g: Graph, rho: int | None = None) -> tuple[bool, bool]:
    """The two bound-dominance claims: new lower beats old, new upper beats old.

    First flag: the degree-profile lower bound is at least sqrt(n^2 + 4m).
    Second: the diameter upper bound is at most n - 1 + e**(rho sqrt(n(n-1))),
    compared on the log scale.  Pass rho to skip recomputing the diameter.
    """
    if g.n < 2:
        raise ValueError("comparison needs n >= 2")
    if rho is None:
        rho = diameter(g)
    n = g.n
    t1_lower = math.sqrt(n * n + 4 * g.m)
    t1_upper = ExpBound(const=float(n - 1), exponent=rho * math.sqrt(n * (n - 1)))
    t5 = ExpBound(const=float(n - 1), exponent=math.sqrt(n * (n - 1) * rho * rho - 1.0))
    t3 = _thm3_expbound(g)
    if t3.log_domain:
        t3_beats = True
    else:
        t3_beats = t3.value >= t1_lower - 1e-9
    t5_beats = t5.log_value <= t1_upper.log_value + 1e-9
    return t3_beats, t5_beats
