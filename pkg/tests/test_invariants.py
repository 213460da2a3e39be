"""Exact invariants, perfect divisions, and the divisibility colourer."""

from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from chibind.errors import PreconditionError
from chibind.graphs import (
    VertexSet,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edge_list,
    induced,
    path_graph,
)
from chibind.invariants import (
    chi_bound_divisible,
    chromatic_number,
    clique_number,
    find_perfect_division,
    independence_number,
    is_perfectly_divisible,
    is_proper_coloring,
    maximum_clique,
    perfection_table,
)
from chibind.patterns import is_free, is_perfect, pattern
from oracles import (
    chromatic_dp,
    graph_from_pair_mask,
    is_perfect_definitional,
    perfectly_divisible_definitional,
)


@st.composite
def small_graphs(draw, max_n=7, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    mask = draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
    return graph_from_pair_mask(n, mask)


def petersen():
    return from_edge_list(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                               (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                               (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)])


def test_clique_and_independence_examples():
    assert clique_number(cycle_graph(5)) == 2
    assert clique_number(pattern("K2,3").graph) == 2
    assert clique_number(pattern("K1+(K1uK3)").graph) == 4
    assert independence_number(cycle_graph(5)) == 2
    assert independence_number(pattern("K2,3").graph) == 3
    assert independence_number(pattern("2K2").graph) == 2


def test_maximum_clique_is_least():
    g = from_edge_list(5, [(1, 2), (2, 3), (1, 3), (0, 4)])
    assert maximum_clique(g).members() == (1, 2, 3)


def test_chromatic_examples():
    chi, col = chromatic_number(cycle_graph(5))
    assert chi == 3 and col.k == 3 and is_proper_coloring(cycle_graph(5), col)
    assert chromatic_number(pattern("K2,3").graph)[0] == 2
    # the Petersen graph: no 2-colouring exists (odd cycle), solver finds 3
    p = petersen()
    assert chromatic_dp(p) == 3
    chi, col = chromatic_number(p)
    assert chi == 3 and is_proper_coloring(p, col)


def test_chromatic_empty_graph():
    chi, col = chromatic_number(empty_graph(0))
    assert chi == 0 and col.colors == ()


@settings(max_examples=80, derandomize=True)
@given(small_graphs(max_n=6))
def test_chromatic_agrees_with_dp(g):
    assert chromatic_number(g)[0] == chromatic_dp(g)


@settings(max_examples=80, derandomize=True)
@given(small_graphs(max_n=7, min_n=1))
def test_sandwich_and_pigeonhole(g):
    chi, col = chromatic_number(g)
    w = clique_number(g)
    assert w <= chi <= g.n
    assert independence_number(g) * chi >= g.n
    if is_perfect(g):
        assert chi == w
    assert col.used() == chi == col.k


def test_find_perfect_division_examples():
    c5 = cycle_graph(5)
    d = find_perfect_division(c5)
    assert d is not None
    assert d.a.members() == (0, 1, 3) and d.omega_g == 2 and d.omega_b == 1
    # edgeless: only the whole-vertex-set split works
    d = find_perfect_division(empty_graph(5))
    assert d.a == VertexSet.full(5) and len(d.b) == 0
    assert find_perfect_division(empty_graph(0)) is None


@settings(max_examples=60, derandomize=True)
@given(small_graphs(max_n=6, min_n=1))
def test_perfect_division_invariants(g):
    d = find_perfect_division(g)
    if d is None:
        return
    assert (d.a.mask | d.b.mask) == (1 << g.n) - 1
    assert d.a.mask & d.b.mask == 0
    assert is_perfect_definitional(induced(g, d.a))
    assert d.omega_b == clique_number(induced(g, d.b)) < d.omega_g == clique_number(g)


def test_perfect_graphs_admit_divisions():
    for g in (path_graph(4), complete_graph(4), cycle_graph(6)):
        assert find_perfect_division(g) is not None


def test_divisibility_examples():
    assert is_perfectly_divisible(cycle_graph(5))
    assert is_perfectly_divisible(path_graph(4))
    assert is_perfectly_divisible(complement(cycle_graph(7)))


def test_division_of_big_antihole():
    c7bar = complement(cycle_graph(7))
    d = find_perfect_division(c7bar)
    assert d is not None
    assert is_perfect_definitional(induced(c7bar, d.a))
    assert clique_number(induced(c7bar, d.b)) < clique_number(c7bar)


@settings(max_examples=60, derandomize=True)
@given(small_graphs(max_n=6))
def test_divisibility_agrees_with_definitional(g):
    assert is_perfectly_divisible(g) == perfectly_divisible_definitional(g)


@settings(max_examples=40, derandomize=True)
@given(small_graphs(max_n=7, min_n=1), st.integers(min_value=0, max_value=127))
def test_divisibility_is_hereditary(g, mask):
    if is_perfectly_divisible(g):
        sub = induced(g, VertexSet(mask & ((1 << g.n) - 1), g.n))
        assert is_perfectly_divisible(sub)


def test_perfection_table_matches_definitional():
    for g in (cycle_graph(5), cycle_graph(7), complement(cycle_graph(7)), path_graph(6)):
        table = perfection_table(g.adj, complement(g).adj, g.n)
        for s in range(1 << g.n):
            assert table[s] == is_perfect_definitional(induced(g, VertexSet(s, g.n)))


def test_chi_bound_divisible_examples():
    c5 = cycle_graph(5)
    k, col = chi_bound_divisible(c5)
    assert k <= 3 and is_proper_coloring(c5, col)
    k, col = chi_bound_divisible(complete_graph(4))
    assert k == 4
    k, col = chi_bound_divisible(empty_graph(3))
    assert k == 1


def test_divisibility_size_guard():
    with pytest.raises(PreconditionError):
        is_perfectly_divisible(empty_graph(14))


@settings(max_examples=40, derandomize=True)
@given(small_graphs(max_n=7, min_n=1))
def test_chi_bound_divisible_on_class_members(g):
    if not is_free(g, ["P5", "C5", "K2,3"]):
        return
    k, col = chi_bound_divisible(g)
    assert is_proper_coloring(g, col)
    w = clique_number(g)
    assert chromatic_number(g)[0] <= k <= comb(w + 1, 2)
