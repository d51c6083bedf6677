"""End-to-end smoke tests for the compiled extension module."""

import math

import pytest

import signet


def test_version_and_exports():
    assert isinstance(signet.__version__, str) and signet.__version__
    for name in ("Graph", "load", "loads", "dumps", "generate", "rank", "predict"):
        assert hasattr(signet, name)


def test_generate_and_stats():
    g = signet.generate("erdos_signed", 40, seed=7, p=0.2, sign_bias=0.75)
    assert g.n == 40
    assert 0 < g.m <= 40 * 39
    assert g.m == g.m_pos + g.m_neg
    s = signet.stats(g)
    assert s["users"] == 40
    assert s["links"] == g.m


def test_loads_dumps_round_trip():
    g = signet.generate("erdos_signed", 12, seed=3, p=0.3, sign_bias=0.5)
    h = signet.loads(signet.dumps(g))
    assert h.n == g.n and h.m == g.m
    assert h.edges() == g.edges()


def test_clustering_balanced_graph():
    g = signet.generate("planted_balance", 30, seed=1, groups=2, p_in=0.5, p_out=0.5, noise=0.0)
    c = signet.clustering(g)
    assert c["s"] == pytest.approx(1.0)
    assert c["num_undirected"] == c["num_undirected_signed"]


def test_rank_measures():
    g = signet.generate("erdos_signed", 25, seed=5, p=0.3, sign_bias=1.0)
    pr = signet.rank(g, "pagerank")["scores"]
    assert len(pr) == 25
    assert all(x > 0 for x in pr)
    assert math.fsum(x * x for x in pr) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        signet.rank(g, "not_a_measure")


def test_predict_and_sweep():
    g = signet.generate("planted_balance", 60, seed=2, groups=2, p_in=0.4, p_out=0.4, noise=0.05)
    base = signet.predict(g, "always_positive", test_fraction=0.25, seed=4)
    assert -1.0 <= base["accuracy"] <= 1.0
    assert base["test_size"] == base["correct"] + base["wrong"]
    rows = signet.sweep_k(g, "sym", [2, 4], test_fraction=0.25, seed=4)
    assert [r["k"] for r in rows] == [2, 4]
    assert all(-1.0 <= r["accuracy"] <= 1.0 for r in rows)


def test_embed_shapes():
    g = signet.generate("erdos_signed", 20, seed=9, p=0.4, sign_bias=1.0)
    e = signet.embed(g, method="laplacian", dims=2)
    assert len(e["coords"]) == 20
    assert all(len(row) == 2 for row in e["coords"])
    assert e["labels"][0] == "0"


def test_signed_two_paths():
    g = signet.from_edges(["a", "b", "c"], [(0, 1, 1), (1, 2, -1)])
    assert signet.signed_two_paths(g, [(0, 2), (2, 0)]) == [-1.0, 0.0]


def test_convergence_error_is_exposed():
    assert issubclass(signet.ConvergenceError, RuntimeError)
