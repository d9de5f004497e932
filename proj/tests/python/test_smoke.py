import berge_forge as bf
import pytest


def test_graph_and_detectors():
    g = bf.cycle_graph(5)
    assert g.n == 5
    assert g.edge_count() == 5
    assert bf.find_cycle(g, 5) is not None
    assert bf.find_cycle(g, 4) is None
    assert bf.is_free(g, "girth=4")
    assert bf.count_cycles(bf.blowup_c5(10), 5) == 32


def test_berge_detection():
    h = bf.TripleSystem(7, [(1, 2, 4), (2, 3, 5), (1, 3, 6)])
    w = bf.find_berge_cycle(h, 3)
    assert w is not None and w.valid_for(h)
    assert sorted(w.core) == [1, 2, 3]
    assert bf.is_free(bf.TripleSystem(3, [(0, 1, 2)]), "berge=3")
    assert bf.is_free(bf.double_one_side(bf.bipartite_cycle(3)), "berge=4")


def test_solve_matches_oracle():
    r = bf.solve("graph", 5, ["cycle=4"])
    assert r["value"] == 6 and r["optimal"]
    assert isinstance(r["witness"], bf.Graph)
    assert bf.solve("graph", 5, ["cycle=4"], oracle=True)["value"] == 6
    assert bf.solve("bipartite", 3, ["cycle=4"], m=3)["value"] == 6
    t = bf.solve("triples", 5, ["berge=5"], linear=True)
    assert t["value"] == 2 and isinstance(t["witness"], bf.TripleSystem)
    assert bf.solve("graph", 5, ["cycle=5"], objective="triangles")["value"] == 4


def test_bounds():
    assert bf.evaluate("pikhurko-1", 16, 2)["exact"] == "320"
    assert bf.evaluate("kst-3", 9)["exact"] == "45"
    row = bf.evaluate("thm11-odd-5", 7, 2, base="exact")
    assert row["exact"] == "54" and row["exact_bases"]
    assert "pikhurko-1" in bf.formula_names()
    with pytest.raises(ValueError):
        bf.evaluate("pikhurko-1", 16, 1)


def test_decompose_and_partition():
    d = bf.decompose(bf.TripleSystem(4, [(0, 1, 2), (0, 1, 3)]))
    assert len(d["h1"]) == 2 and d["h2"] == []
    assert d["g2"].edges() == [(0, 1)]
    t = bf.rainbow_tripartition(bf.complete_graph(6))
    assert t["triangles"] == 20 and 9 * t["rainbow_count"] >= 2 * 20
    assert bf.check_triangle_lemma(bf.complete_graph(4), 5)


def test_file_round_trip_and_errors():
    h = bf.triangle_hypergraph(bf.complete_graph(5))
    assert bf.parse_witness(bf.write_witness(h)) == h
    g = bf.complete_graph(4)
    assert bf.parse_witness(bf.write_witness(g)) == g
    with pytest.raises(ValueError):
        bf.parse_witness("n 3\n0 7\n")


def test_acceptance_subset():
    rows = bf.run_acceptance(seed=1, criteria=[8, 10])
    assert [r["id"] for r in rows] == [8, 10]
    assert all(r["passed"] for r in rows)
