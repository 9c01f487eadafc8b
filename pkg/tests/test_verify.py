"""Exhaustive-sweep harness: shard merging, dedup, and summary contents."""

import pytest

from destrada.verify import (
    VerificationSummary,
    complete_graph_id,
    verify_population,
)


@pytest.fixture(scope="module")
def pop5():
    return verify_population(5)


def test_population_validation():
    with pytest.raises(ValueError):
        verify_population(1)
    with pytest.raises(ValueError):
        verify_population(9)
    with pytest.raises(ValueError):
        verify_population(3, threads=0)


def test_two_vertex_population():
    s = verify_population(2)
    assert s.graphs_checked == 1
    assert s.counts_by_n == ((2, 1),)
    assert s.passed
    assert s.findings == ()
    # the single edge attains four catalog equalities at once
    assert set(s.equality_hits) == {
        ("A_", "T2_lower"), ("A_", "T3_lower"),
        ("A_", "T6_identity"), ("A_", "L3_lambda1_lower"),
    }
    assert s.t3_argmax[0][:2] == (2, "A_")


def test_counts_and_argmax_to_five_vertices(pop5):
    assert pop5.counts_by_n == ((2, 1), (3, 4), (4, 38), (5, 728))
    assert pop5.graphs_checked == 771
    assert pop5.passed and pop5.violations == ()
    ids = [row[:2] for row in pop5.t3_argmax]
    assert ids == [(2, "A_"), (3, "Bg"), (4, "Ck"), (5, "DPo")]
    # the equality-only complete graph never tops the slack chart past n=2
    for n, gid, _ in pop5.t3_argmax:
        if n >= 3:
            assert gid != complete_graph_id(n)


def test_five_cycle_pair_findings_are_deduplicated(pop5):
    t4 = [f for f in pop5.findings if f[1] == "T4_ng_lower"]
    # twelve labeled five-cycles pair up into six unordered complement pairs
    assert len(t4) == 6
    assert {gid for gid, _, _ in t4} == {"DLo", "DRo", "DMg", "Dbg", "DUW", "DdW"}
    for _, _, slack in t4:
        assert slack == pytest.approx(-2.9830999618772, abs=1e-9)


def test_descriptive_failures_never_block_passing(pop5):
    assert pop5.findings
    assert pop5.passed
    t2 = [f for f in pop5.findings if f[1] == "T2_lower"]
    assert any(gid == "Bw" for gid, _, _ in t2)


def test_sharded_run_matches_serial(pop5):
    assert verify_population(5, threads=3) == pop5


def test_passed_property_reflects_violations():
    s = VerificationSummary(
        population="p", max_n=2, graphs_checked=1, counts_by_n=((2, 1),),
        violations=(("A_", "T1_lower", -1.0),), findings=(), equality_hits=(),
        t3_argmax=(),
    )
    assert not s.passed


def test_complete_graph_ids():
    assert [complete_graph_id(n) for n in range(2, 8)] == [
        "A_", "Bw", "C~", "D~{", "E~~w", "F~~~w",
    ]
