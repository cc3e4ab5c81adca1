"""End-to-end smoke tests for the evomine Python module."""

from fractions import Fraction

import pytest

import evomine as em


def bg(t, planted=False):
    """Background edge A-bg-A; optionally the planted P-pe-Q edge."""
    nodes = [(1, "A"), (2, "A")]
    edges = [(1, 2, "bg")]
    if planted:
        nodes += [(900, "P"), (901, "Q")]
        edges += [(900, 901, "pe")]
    return em.Snapshot(t, nodes, edges)


def window(wid, start, flags):
    return em.TimeWindow(wid, start, [bg(start + i, f) for i, f in enumerate(flags)])


def flagged(count, of):
    return [True] * count + [False] * (of - count)


PE = em.Pattern([(0, "P"), (1, "Q")], [(0, 1, "pe")])


def test_snapshot_and_pattern_basics():
    s = bg(0, planted=True)
    assert s.time_index == 0
    assert s.node_count == 4
    assert s.edge_count == 2
    assert (900, "P") in s.nodes()
    assert (900, 901, "pe") in s.edges()

    assert PE.code == "(0,1,P,pe,Q)"
    assert em.canonical_code(PE) == PE.code
    relabeled = em.Pattern([(7, "Q"), (3, "P")], [(7, 3, "pe")])
    assert relabeled == PE
    assert relabeled.code == PE.code

    assert em.is_subgraph(PE, bg(0, planted=True))
    assert not em.is_subgraph(PE, bg(0, planted=False))


def test_input_validation_maps_to_value_error():
    with pytest.raises(ValueError):
        em.Snapshot(0, [(1, "A")], [(1, 1, "x")])  # self-loop
    with pytest.raises(ValueError):
        em.Pattern([(1, "A"), (2, "B"), (3, "C")], [(1, 2, "x")])  # disconnected
    with pytest.raises(ValueError):
        em.mine_frequent(window(0, 0, [False]), alpha="abc")
    with pytest.raises(ValueError):
        em.load_stream("/nonexistent/evomine-stream.tsv")
    with pytest.raises(TypeError):
        em.mine_frequent(window(0, 0, [False]), alpha=True)


def test_partition_fixed_and_adaptive():
    stream = [bg(t) for t in range(7)]
    parts = em.partition(stream, window_size=3)
    assert [w.size for w, _ in parts] == [3, 3, 1]
    assert [reason for _, reason in parts] == ["fixed_size", "fixed_size", "end_of_stream"]
    assert parts[2][0].start_index == 6

    alternating = [
        em.Snapshot(t, [(1, "A" if t % 2 == 0 else "B")], []) for t in range(7)
    ]
    adaptive = em.partition(alternating, adaptive=True, tau=0.1, min_window=2)
    assert [w.size for w, _ in adaptive] == [2, 2, 2, 1]
    assert adaptive[0][1] == "divergence"


def test_distributions_and_divergence():
    a = em.snapshot_distribution(em.Snapshot(0, [(1, "A"), (2, "B")], [(1, 2, "x")]))
    assert a[("n", "A")] == pytest.approx(0.25)
    assert a[("e", "x")] == pytest.approx(0.5)
    b = em.snapshot_distribution(em.Snapshot(1, [(1, "Z")], []))
    assert em.js_divergence(a, a) == pytest.approx(0.0)
    assert em.js_divergence(a, b) == pytest.approx(1.0)


def test_mining_exact_frequencies():
    snaps = [
        em.Snapshot(0, [(1, "A"), (2, "B")], [(1, 2, "x")]),
        em.Snapshot(1, [(1, "A"), (2, "B"), (3, "C")], [(1, 2, "x"), (2, 3, "y")]),
        em.Snapshot(2, [(9, "D")], []),
    ]
    w = em.TimeWindow(0, 0, snaps)

    table = em.mine_frequent(w, alpha="0.3", max_edges=3)
    assert len(table) == 3
    assert "(0,1,A,x,B)" in table
    assert table.freq_of("(0,1,A,x,B)") == Fraction(2, 3)
    assert table.freq_of("(0,1,B,y,C)") == Fraction(1, 3)
    assert table.pattern("(0,1,A,x,B)").code == "(0,1,A,x,B)"
    assert {code for code, _, _ in table.items()} == set(table.codes())

    # strictly above alpha: 1/3 is not > 1/3
    assert len(em.mine_frequent(w, alpha="1/3")) == 1
    assert len(em.mine_frequent(w, alpha=Fraction(1, 3))) == 1

    ev = em.evaluate_patterns([PE], w)
    assert ev.freq_of(PE.code) == Fraction(0)


def test_growth_rate_and_theta():
    w0 = window(0, 0, flagged(1, 10))
    w1 = window(1, 10, flagged(9, 10))
    w2 = window(2, 20, flagged(0, 10))
    assert em.frequency(PE, w0) == Fraction(1, 10)
    assert em.growth_rate(PE, w1, w0) == "9"
    assert em.growth_rate(PE, w0, w1) == "1/9"
    assert em.growth_rate(PE, w0, w2) == "inf"
    assert em.growth_rate(PE, w2, w2) == "undefined"

    assert em.theta("0.3") == "shrinking"
    assert em.theta("1/2") == "shrinking"
    assert em.theta(Fraction(3, 5)) == "stable"
    assert em.theta(2) == "stable"
    assert em.theta("2.01") == "growing"
    assert em.theta("inf") == "growing"
    assert em.theta("4", theta_bins=[("1", "low"), ("inf", "high")]) == "high"


def test_detect_emerging():
    vocab = [PE]
    t0 = em.evaluate_patterns(vocab, window(0, 0, flagged(1, 10)))
    t1 = em.evaluate_patterns(vocab, window(1, 10, flagged(9, 10)))
    found = em.detect_emerging(t0, t1, beta="3")
    assert len(found) == 1
    assert found[0]["pattern_code"] == PE.code
    assert found[0]["growth_rate"] == "9"
    assert found[0]["growth_rate_float"] == pytest.approx(9.0)
    assert found[0]["from_window"] == 0
    assert found[0]["to_window"] == 1
    assert em.detect_emerging(t0, t1, beta="9") == []  # strict


def test_detect_trends():
    def tables(counts, size=10):
        return [
            em.evaluate_patterns([PE], window(i, i * size, flagged(c, size)))
            for i, c in enumerate(counts)
        ]

    strict = em.detect_trends(tables([2, 4, 6]))
    assert len(strict) == 1
    assert strict[0]["sign"] == "+"
    assert strict[0]["windows"] == [0, 1, 2]
    assert strict[0]["global"] is True
    assert strict[0]["lambda"] is None

    lam = em.detect_trends(tables([2, 4, 3, 5]), trend_mode="lambda")
    final = [r for r in lam if r["windows"][-1] == 3]
    assert len(final) == 1
    assert final[0]["sign"] == "+"
    assert final[0]["lambda"] == Fraction(3, 10)
    assert not [r for r in lam if r["windows"][-1] == 2]


def test_detect_periodic_and_chains():
    counts = [1, 3, 1, 3, 1, 3]
    tables = [
        em.evaluate_patterns([PE], window(i, i * 3, flagged(c, 3)))
        for i, c in enumerate(counts)
    ]
    found = em.detect_periodic(tables)
    assert len(found) == 1
    assert found[0]["period"] == 2
    assert found[0]["category"] == "growing"
    assert found[0]["occurrences"] == [1, 3, 5]
    assert found[0]["repetitions"] == 3
    assert found[0]["exact"] is True

    chains = em.find_periodic_chains(["a", "b", "a", "b", "a"], 2, 0, 2)
    assert {(c["period"], c["category"], tuple(c["occurrences"])) for c in chains} == {
        (2, "a", (0, 2, 4)),
        (2, "b", (1, 3)),
    }
    assert em.find_periodic_chains(["a", None, "b"], 2, 0, 2) == []


def test_stream_round_trip(tmp_path):
    path = tmp_path / "stream.tsv"
    stream = [bg(t, planted=(t == 2)) for t in range(4)]
    em.write_stream(stream, str(path))
    text = path.read_text()
    assert text.startswith("# evomine-stream v1\n")
    back = em.load_stream(str(path))
    assert len(back) == 4
    assert back[2].edge_count == 2
    em.write_stream(back, str(tmp_path / "again.tsv"))
    assert (tmp_path / "again.tsv").read_text() == text

    (tmp_path / "broken.tsv").write_text("# wrong\n")
    with pytest.raises(ValueError):
        em.load_stream(str(tmp_path / "broken.tsv"))


def test_run_pipeline(tmp_path):
    path = tmp_path / "stream.tsv"
    stream = [bg(t, planted=(t == 9 or 10 <= t <= 18)) for t in range(20)]
    em.write_stream(stream, str(path))

    out_a = tmp_path / "a"
    report = em.run_pipeline(
        str(path), str(out_a), window_size=10, alpha="1/2", beta="3", threads=2
    )
    assert report == {
        "windows": 2,
        "patterns": 2,
        "emerging": 1,
        "trends": 1,
        "periodic": 0,
        "periodic_stable_suppressed": 0,
    }
    for name in ("windows.csv", "patterns.csv", "changes.jsonl", "summary.txt"):
        assert (out_a / name).is_file()
    assert '"growth_rate":"9"' in (out_a / "changes.jsonl").read_text()

    out_b = tmp_path / "b"
    em.run_pipeline(str(path), str(out_b), window_size=10, alpha="1/2", beta="3")
    for name in ("windows.csv", "patterns.csv", "changes.jsonl", "summary.txt"):
        assert (out_a / name).read_bytes() == (out_b / name).read_bytes()

    with pytest.raises(ValueError):
        em.run_pipeline(str(path), str(tmp_path / "c"), beta="1")
    with pytest.raises(ValueError):
        em.run_pipeline(str(path), str(tmp_path / "d"), detectors=["nope"])
