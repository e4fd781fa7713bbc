import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lrm import core
from lrm.core import LrmParams
from lrm.errors import InconsistentOverlap, NotRealizable, TiedWindow
from lrm.scheme12 import to_base_word as bits_to_base
from lrm.scheme13 import SYMBOLS, from_base_word as base_to_symbols, to_base_word as symbols_to_base


def P(s, t, n):
    return LrmParams(s, t, n)


@pytest.mark.parametrize("s,t,n", [(0, 2, 4), (2, 1, 4), (1, 5, 4), (2, 2, 5)])
def test_params_rejects_bad_geometry(s, t, n):
    with pytest.raises(ValueError):
        LrmParams(s, t, n)


@pytest.mark.parametrize(
    "params,i,cells",
    [(P(1, 2, 4), 3, (3, 0)), (P(1, 3, 4), 2, (2, 3, 0)), (P(2, 4, 8), 3, (6, 7, 0, 1))],
)
def test_window_cells(params, i, cells):
    assert core.window_cells(params, i) == cells


def test_window_cells_out_of_range():
    with pytest.raises(IndexError):
        core.window_cells(P(2, 2, 4), 2)


@pytest.mark.parametrize(
    "params,j,expected",
    [(P(1, 2, 4), 1, {0, 2}), (P(1, 3, 6), 2, {0, 1, 3, 4}), (P(2, 2, 4), 1, {0})],
)
def test_comparable_cells(params, j, expected):
    assert core.comparable_cells(params, j) == expected


def test_comparable_cells_out_of_range():
    with pytest.raises(IndexError):
        core.comparable_cells(P(1, 2, 4), 4)


def test_demodulate_examples():
    assert core.demodulate(P(1, 2, 4), (1, 3, 2, 0)) == ((2, 1), (1, 2), (1, 2), (2, 1))
    word = core.demodulate(P(1, 3, 4), (3, 1, 2, 0))
    assert base_to_symbols(word) == (1, 2, 3, 4)
    assert core.demodulate(P(1, 2, 3), (0, 1, 2)) == ((2, 1), (2, 1), (1, 2))


def test_demodulate_tie_reports_window():
    with pytest.raises(TiedWindow) as info:
        core.demodulate(P(1, 2, 4), (1, 1, 2, 0))
    assert info.value.window == 0 and info.value.cells == (0, 1)


def test_demodulate_allows_ties_between_non_comparable_cells():
    # cells 0 and 2 never share a window when s = t = 2
    assert core.demodulate(P(2, 2, 4), (1, 0, 1, 0)) == ((1, 2), (1, 2))


def test_demodulate_wrong_length():
    with pytest.raises(ValueError):
        core.demodulate(P(1, 2, 4), (1, 2, 3))


def test_constraint_graph_examples():
    g = core.constraint_graph(P(1, 2, 4), bits_to_base((0, 1, 1, 0)))
    assert g.edges == {(0, 1), (2, 1), (3, 2), (3, 0)}
    for n in (3, 6, 9):
        zeros = core.constraint_graph(P(1, 2, n), bits_to_base((0,) * n))
        assert zeros.edges == {(i, (i + 1) % n) for i in range(n)}
        assert not zeros.is_acyclic()
    for n in (5, 6, 9):
        fives = core.constraint_graph(P(1, 3, n), symbols_to_base((5,) * n))
        assert fives.edges == {(i, (i + 1) % n) for i in range(n)}
        assert not fives.is_acyclic()
    # windows i and i+2 share cells when n < 5, and disagree on them
    for n in (3, 4):
        with pytest.raises(InconsistentOverlap):
            core.constraint_graph(P(1, 3, n), symbols_to_base((5,) * n))


def test_constraint_graph_edges_stay_inside_windows():
    params = P(2, 3, 6)
    word = core.demodulate(params, (5, 0, 3, 1, 4, 2))
    g = core.constraint_graph(params, word)
    assert all(v in core.comparable_cells(params, u) for u, v in g.edges)
    assert len(g.edges) <= params.num_windows * (params.t - 1)


def test_constraint_graph_inconsistent_overlap():
    # window 0 says cell 1 > cell 2, window 1 says the opposite
    with pytest.raises(InconsistentOverlap):
        core.constraint_graph(P(1, 3, 4), ((3, 2, 1), (2, 1, 3), (1, 2, 3), (1, 2, 3)))
    assert not core.is_realizable(P(1, 3, 4), ((3, 2, 1), (2, 1, 3), (1, 2, 3), (1, 2, 3)))


def test_malformed_base_word_rejected():
    with pytest.raises(ValueError):
        core.is_realizable(P(1, 2, 4), ((1, 2),) * 3)
    with pytest.raises(ValueError):
        core.is_realizable(P(1, 2, 4), ((1, 1),) * 4)


@pytest.mark.parametrize("n", range(3, 10))
def test_paper_non_realizable_words(n):
    assert not core.is_realizable(P(1, 3, n), symbols_to_base((0,) * n))
    assert not core.is_realizable(P(1, 3, n), symbols_to_base((5,) * n))
    if n % 2 == 0:
        assert not core.is_realizable(P(1, 3, n), symbols_to_base((1, 4) * (n // 2)))


def test_realize_examples():
    assert core.realize(P(1, 2, 4), bits_to_base((0, 1, 1, 0))) == (1, 2, 1, 0)
    with pytest.raises(NotRealizable):
        core.realize(P(1, 2, 5), bits_to_base((1,) * 5))
    word = symbols_to_base((1, 2, 3, 4))
    assert core.is_realizable(P(1, 3, 4), word)
    assert core.demodulate(P(1, 3, 4), core.realize(P(1, 3, 4), word)) == word


def test_realize_is_minimal_leveling():
    # longest-path leveling: some cell sits at 0 and every level is forced by a predecessor
    params = P(1, 3, 7)
    for seed in range(50):
        levels = random.Random(seed).sample(range(100), 7)
        word = core.demodulate(params, levels)
        real = core.realize(params, word)
        graph = core.constraint_graph(params, word)
        assert min(real) == 0
        for v in range(params.n):
            preds = [u for u, w in graph.edges if w == v]
            assert real[v] == max((real[u] + 1 for u in preds), default=0)


def test_push_to_top_examples():
    params = P(1, 2, 4)
    pushed = core.push_to_top(params, (1, 3, 2, 0), 3)
    assert pushed == (1, 3, 2, 3)
    assert core.demodulate(params, pushed) == bits_to_base((0, 1, 0, 1))
    assert core.push_to_top(params, (1, 3, 2, 0), 1) == (1, 3, 2, 0)
    big = P(1, 3, 6)
    out = core.push_to_top(big, (4, 5, 3, 9, 2, 1), 0)
    assert all(out[0] > out[k] for k in (4, 5, 1, 2))


def test_push_to_top_never_lowers_charge():
    assert core.push_to_top(P(1, 2, 4), (9, 3, 2, 0), 0) == (9, 3, 2, 0)


# exhaustive and randomized properties

def _orders_image(params):
    return {core.demodulate(params, order) for order in permutations(range(params.n))}


@pytest.mark.parametrize("t,n", [(2, n) for n in range(2, 8)] + [(3, n) for n in range(3, 8)])
def test_completeness_and_soundness(t, n):
    params = P(1, t, n)
    image = _orders_image(params)
    assert all(core.is_realizable(params, w) for w in image)
    realizable = {w for w in core.all_base_words(params) if core.is_realizable(params, w)}
    assert realizable == image


@pytest.mark.parametrize("s,t,n", [(2, 3, 6), (2, 4, 6), (3, 3, 6), (2, 4, 8)])
def test_completeness_other_geometries(s, t, n):
    params = P(s, t, n)
    realizable = {w for w in core.all_base_words(params) if core.is_realizable(params, w)}
    assert realizable == _orders_image(params)


@pytest.mark.parametrize("t,n", [(2, n) for n in range(3, 9)] + [(3, n) for n in range(3, 9)])
def test_roundtrip_exhaustive(t, n):
    params = P(1, t, n)
    for word in _orders_image(params):
        assert core.demodulate(params, core.realize(params, word)) == word


geometries = st.sampled_from([(1, 2), (1, 3), (2, 3), (2, 4), (1, 4), (3, 3)]).flatmap(
    lambda st_: st.integers(st_[1], 9)
    .filter(lambda n: n % st_[0] == 0)
    .map(lambda n: LrmParams(st_[0], st_[1], n))
)


@st.composite
def configs(draw):
    params = draw(geometries)
    levels = draw(st.permutations(range(params.n)))
    return params, tuple(levels)


@settings(max_examples=300, deadline=None)
@given(configs())
def test_soundness_random(case):
    params, levels = case
    word = core.demodulate(params, levels)
    assert core.is_realizable(params, word)
    assert core.demodulate(params, core.realize(params, word)) == word


@settings(max_examples=300, deadline=None)
@given(configs(), st.data())
def test_push_determinism_and_no_ties(case, data):
    params, levels = case
    word = core.demodulate(params, levels)
    other = core.realize(params, word)
    j = data.draw(st.integers(0, params.n - 1))
    a = core.push_to_top(params, levels, j)
    b = core.push_to_top(params, other, j)
    # both results must demodulate without ties and agree
    assert core.demodulate(params, a) == core.demodulate(params, b)


def test_symbol_table_is_all_permutations():
    assert sorted(SYMBOLS) == sorted(permutations((1, 2, 3)))
