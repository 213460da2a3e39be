"""Catalog integrity, induced-subgraph detection, and the perfection test."""

import pytest
from hypothesis import given, settings, strategies as st

from chibind.errors import PreconditionError
from chibind.graphs import VertexSet, complement, cycle_graph, complete_graph, induced, path_graph
from chibind.patterns import (
    PATTERN_CATALOG,
    find_induced,
    find_odd_antihole,
    find_odd_hole,
    is_free,
    is_perfect,
    odd_antihole_not_two_cliques,
    parse_pattern_list,
    pattern,
)
from oracles import graph_from_pair_mask, induced_copy_exists, is_perfect_definitional

# name -> (vertices, edges, sorted degree sequence)
CATALOG_FACTS = {
    "P2": (2, 1, (1, 1)), "P3": (3, 2, (2, 1, 1)), "P4": (4, 3, (2, 2, 1, 1)),
    "P5": (5, 4, (2, 2, 2, 1, 1)), "P6": (6, 5, (2, 2, 2, 2, 1, 1)),
    "P7": (7, 6, (2, 2, 2, 2, 2, 1, 1)),
    "C4": (4, 4, (2, 2, 2, 2)), "C5": (5, 5, (2,) * 5), "C6": (6, 6, (2,) * 6),
    "C7": (7, 7, (2,) * 7), "C8": (8, 8, (2,) * 8), "C9": (9, 9, (2,) * 9),
    "K1": (1, 0, (0,)), "K2": (2, 1, (1, 1)), "K3": (3, 3, (2, 2, 2)),
    "K4": (4, 6, (3,) * 4), "K5": (5, 10, (4,) * 5), "K6": (6, 15, (5,) * 6),
    "K1,3": (4, 3, (3, 1, 1, 1)),
    "K2,3": (5, 6, (3, 3, 2, 2, 2)),
    "2K2": (4, 2, (1, 1, 1, 1)),
    "K1+2K2": (5, 6, (4, 2, 2, 2, 2)),
    "K1uK3": (4, 3, (2, 2, 2, 0)),
    "K1+(K1uK3)": (5, 7, (4, 3, 3, 3, 1)),
    "bull": (5, 5, (3, 3, 2, 1, 1)),
    "cricket": (5, 5, (4, 2, 2, 1, 1)),
    "diamond": (4, 5, (3, 3, 2, 2)),
    "cochair": (5, 6, (3, 3, 3, 2, 1)),
    "dart": (5, 6, (4, 3, 2, 2, 1)),
    "hammer": (5, 5, (3, 2, 2, 2, 1)),
    "house": (5, 6, (3, 3, 2, 2, 2)),
    "gem": (5, 7, (4, 3, 3, 2, 2)),
    "gem+": (6, 8, (5, 3, 3, 2, 2, 1)),
    "paraglider": (5, 7, (3, 3, 3, 3, 2)),
    "banner": (5, 5, (3, 2, 2, 2, 1)),
}


def test_catalog_contents():
    assert set(PATTERN_CATALOG) == set(CATALOG_FACTS)
    for name, (n, m, degs) in CATALOG_FACTS.items():
        g = pattern(name).graph
        assert g.n == n, name
        assert g.edge_count() == m, name
        assert g.degree_sequence() == degs, name


def test_pattern_lookup_normalisation():
    assert pattern("k2,3").name == "K2,3"
    assert pattern("K_{2,3}").name == "K2,3"
    assert pattern("BULL").name == "bull"
    with pytest.raises(KeyError):
        pattern("K99")


def test_parse_pattern_list_merges_numeric_tokens():
    names = [p.name for p in parse_pattern_list("P5,K2,3,K1+(K1uK3)")]
    assert names == ["P5", "K2,3", "K1+(K1uK3)"]


def test_catalog_structural_identities():
    assert pattern("house").graph == complement(path_graph(5))
    diamond = pattern("diamond").graph
    assert diamond.edge_count() == complete_graph(4).edge_count() - 1


def test_find_induced_examples():
    c5 = cycle_graph(5)
    emb = find_induced(c5, "P4")
    assert emb is not None and len(set(emb.map)) == 4
    assert find_induced(c5, "P5") is None
    emb = find_induced(pattern("K2,3").graph, "C4")
    assert emb is not None


def test_embedding_witnesses_are_induced():
    c7bar = complement(cycle_graph(7))
    for name in ("P4", "K3", "C5", "paraglider"):
        emb = find_induced(c7bar, name)
        pg = pattern(name).graph
        if emb is None:
            continue
        m = emb.map
        for i in range(pg.n):
            for j in range(i):
                assert (pg.adj[i] >> j & 1) == (c7bar.adj[m[i]] >> m[j] & 1)


def test_is_free_examples():
    c5 = cycle_graph(5)
    assert not is_free(c5, ["P5", "C5", "K2,3"])
    assert not is_free(cycle_graph(6), ["P5"])
    assert is_free(complete_graph(5), ["P5", "K2,3", "C5"])


def test_identity_embedding_for_every_catalog_pattern():
    for name, pat in PATTERN_CATALOG.items():
        assert find_induced(pat.graph, pat) is not None, name


def test_odd_hole_search():
    assert find_odd_hole(cycle_graph(5)) == VertexSet.full(5)
    assert find_odd_hole(cycle_graph(6)) is None
    assert find_odd_hole(cycle_graph(7)) == VertexSet.full(7)
    assert find_odd_antihole(complement(cycle_graph(7))) == VertexSet.full(7)
    assert find_odd_antihole(complement(cycle_graph(5))) == VertexSet.full(5)


def test_is_perfect_examples():
    assert not is_perfect(cycle_graph(5))
    assert is_perfect(path_graph(4))
    assert is_perfect(cycle_graph(6))
    assert not is_perfect(complement(cycle_graph(7)))


def test_odd_antihole_two_cliques_scan():
    for m in (5, 7, 9):
        assert odd_antihole_not_two_cliques(complement(cycle_graph(m)))
    with pytest.raises(PreconditionError):
        odd_antihole_not_two_cliques(path_graph(5))
    with pytest.raises(PreconditionError):
        odd_antihole_not_two_cliques(complement(cycle_graph(6)))


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    mask = draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
    return graph_from_pair_mask(n, mask)


@settings(max_examples=60, derandomize=True)
@given(small_graphs(), small_graphs(max_n=4))
def test_detection_matches_bruteforce(host, pat):
    assert (find_induced(host, pat) is not None) == induced_copy_exists(host, pat)


@settings(max_examples=60, derandomize=True)
@given(small_graphs(), small_graphs(max_n=4))
def test_complement_duality(host, pat):
    direct = find_induced(host, pat) is not None
    dual = find_induced(complement(host), complement(pat)) is not None
    assert direct == dual


@settings(max_examples=60, derandomize=True)
@given(small_graphs(max_n=6), st.integers(min_value=0, max_value=63))
def test_freeness_is_hereditary(g, mask):
    patterns = ["P4", "K3"]
    if is_free(g, patterns):
        sub = induced(g, VertexSet(mask & ((1 << g.n) - 1), g.n))
        assert is_free(sub, patterns)


@settings(max_examples=40, derandomize=True)
@given(small_graphs(max_n=6))
def test_perfection_routes_agree(g):
    assert is_perfect(g) == is_perfect_definitional(g)


@settings(max_examples=60, derandomize=True)
@given(small_graphs(max_n=8))
def test_odd_hole_certificate_is_an_induced_odd_cycle(g):
    found = find_odd_hole(g)
    if found is None:
        return
    sub = induced(g, found)
    assert sub.n >= 5 and sub.n % 2 == 1
    assert all(sub.degree(v) == 2 for v in range(sub.n))
    from chibind.graphs import is_connected

    assert is_connected(sub)


def test_detection_exhaustive_small_hosts():
    from chibind.enumeration import representatives

    small_patterns = [p for p in PATTERN_CATALOG.values() if p.graph.n <= 5]
    for host in representatives(5):
        for pat in small_patterns:
            assert (find_induced(host, pat) is not None) == \
                induced_copy_exists(host, pat.graph), (host.adj, pat.name)
