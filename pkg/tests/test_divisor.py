import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from _gen import random_connected_multigraph
from graphjac.divisor import (apply_script, borrow, degree, dhar_burn, fire_set, format_divisor,
                              is_q_reduced, is_winnable, lend, linearly_equivalent,
                              parse_divisor, q_reduce)
from graphjac.errors import GuardError, InputError
from graphjac.jacobian import jacobian
from graphjac.multigraph import Multigraph, complete_graph, cycle_graph


@st.composite
def graph_and_divisor(draw, max_n=6, max_extra=5, lo=-4, hi=4):
    rng = random.Random(draw(st.integers(0, 10**6)))
    g = random_connected_multigraph(rng, draw(st.integers(1, max_n)), draw(st.integers(0, max_extra)))
    D = tuple(draw(st.lists(st.integers(lo, hi), min_size=g.vertex_count, max_size=g.vertex_count)))
    return g, D


def _is_q_reduced_brute(g, D, q):
    # every nonempty vertex set avoiding q must contain a vertex that would go negative
    n = g.vertex_count
    if any(D[v] < 0 for v in range(n) if v != q):
        return False
    others = [v for v in range(n) if v != q]
    for k in range(1, len(others) + 1):
        for A in itertools.combinations(others, k):
            E = fire_set(g, D, A)
            if all(E[v] >= 0 for v in others):
                return False
    return True


def test_lend_and_borrow():
    g = Multigraph(3, ((0, 1), (0, 1), (1, 2)))
    assert lend(g, (3, 0, 0), 0) == (1, 2, 0)
    assert borrow(g, (0, 0, 0), 1) == (-2, 3, -1)
    assert apply_script(g, (0, 0, 0), (1, 0, 0)) == (-2, 2, 0)


@given(graph_and_divisor(), st.data())
@settings(max_examples=100, deadline=None)
def test_moves_preserve_degree_and_class(gD, data):
    g, D = gD
    v = data.draw(st.integers(0, g.vertex_count - 1))
    for E in (lend(g, D, v), borrow(g, D, v)):
        assert degree(E) == degree(D)
        assert linearly_equivalent(g, D, E)


def test_not_equivalent():
    g = cycle_graph(3)
    assert not linearly_equivalent(g, (1, 0, 0), (0, 1, 0))
    assert not linearly_equivalent(g, (1, 0, 0), (0, 0, 0))
    assert linearly_equivalent(g, (2, 0, 0), (0, 1, 1))


@given(graph_and_divisor(), st.data())
@settings(max_examples=120, deadline=None)
def test_q_reduce_is_reduced_and_equivalent(gD, data):
    g, D = gD
    q = data.draw(st.integers(0, g.vertex_count - 1))
    R = q_reduce(g, D, q)
    assert is_q_reduced(g, R, q)
    assert _is_q_reduced_brute(g, R, q)
    assert linearly_equivalent(g, D, R)


@given(graph_and_divisor(max_n=5, lo=-2, hi=3), st.data())
@settings(max_examples=120, deadline=None)
def test_dhar_agrees_with_brute_force(gD, data):
    g, D = gD
    q = data.draw(st.integers(0, g.vertex_count - 1))
    assert is_q_reduced(g, D, q) == _is_q_reduced_brute(g, D, q)


@given(graph_and_divisor(), st.lists(st.integers(-2, 2), min_size=6, max_size=6), st.data())
@settings(max_examples=100, deadline=None)
def test_reduced_divisor_is_unique_per_class(gD, script, data):
    g, D = gD
    E = apply_script(g, D, script[:g.vertex_count])
    q = data.draw(st.integers(0, g.vertex_count - 1))
    assert q_reduce(g, D, q) == q_reduce(g, E, q)


@pytest.mark.parametrize("g", [cycle_graph(4), complete_graph(4),
                               Multigraph(3, ((0, 1), (0, 1), (1, 2), (2, 0)))])
def test_degree_zero_reduced_count_is_jacobian_order(g):
    degs = g.degrees()
    count = 0
    for vals in itertools.product(*[range(d) for d in degs[1:]]):
        D = (-sum(vals),) + vals
        count += is_q_reduced(g, D, 0)
    assert count == jacobian(g).order


def test_winnable_by_genus():
    g = complete_graph(4)  # genus 3
    for D in itertools.product(range(-2, 3), repeat=4):
        if degree(D) >= 3:
            assert is_winnable(g, D)
    assert not is_winnable(g, (-1, 0, 0, 0))
    assert not is_winnable(g, (2, -1, -1, 0))


def test_winnable_matches_search_on_cycle():
    # on a cycle, a degree-1 divisor is always winnable; degree 0 only if principal
    g = cycle_graph(5)
    assert is_winnable(g, (3, -1, -1, 0, 0))
    assert not is_winnable(g, (1, -1, 0, 0, 0))
    assert is_winnable(g, (2, -1, 0, 0, -1))


def test_dhar_unburnt_set():
    g = cycle_graph(4)
    # each neighbor of q holds a chip, so the fire never leaves q
    assert dhar_burn(g, (0, 1, 1, 1), 0) == {1, 2, 3}
    assert dhar_burn(g, (0, 0, 1, 1), 0) == {2, 3}
    assert dhar_burn(g, (0, 0, 0, 0), 0) == set()


def test_q_reduce_guards():
    with pytest.raises(InputError):
        q_reduce(cycle_graph(3), (1, 2))
    with pytest.raises(GuardError):
        q_reduce(Multigraph(2), (0, 0))


def test_divisor_round_trip():
    text = "1 -2 0 3\n"
    assert format_divisor(parse_divisor(text)) == text
    with pytest.raises(InputError):
        parse_divisor("1 a")
