from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hyperqueens import (
    BoardSpec,
    InvalidArgumentError,
    Placement,
    count_independent,
    exists_independent,
    is_independent,
)


def test_is_independent_examples():
    b = BoardSpec(2, 4)
    assert is_independent(b, Placement.of(b, [(0, 0), (1, 2)]))
    assert not is_independent(b, Placement.of(b, [(0, 0), (2, 2)]))
    b = BoardSpec(3, 4)
    assert is_independent(b, Placement.of(b, [(0, 0, 0), (1, 2, 3)]))


def test_exists_examples():
    w = exists_independent(BoardSpec(2, 4), 4)
    assert w is not None and len(w) == 4
    assert exists_independent(BoardSpec(2, 3), 3) is None
    w = exists_independent(BoardSpec(3, 4), 4)
    assert w is not None and is_independent(w.board, w)


def test_exists_returns_lexicographically_least():
    # the first 4-queens solution in cell-index order
    b = BoardSpec(2, 4)
    w = exists_independent(b, 4)
    assert w.indices() == [1, 7, 8, 14]
    assert w.queens == ((1, 0), (3, 1), (0, 2), (2, 3))


def test_count_examples():
    assert count_independent(BoardSpec(2, 4), 4) == 2
    assert count_independent(BoardSpec(2, 8), 8) == 92
    assert count_independent(BoardSpec(1, 1), 1) == 1
    assert count_independent(BoardSpec(2, 5), 0) == 1
    assert oracles.brute_count_independent(4, 2, 4) == 2
    assert oracles.row_queens_count(8) == 92


def test_query_validation():
    with pytest.raises(InvalidArgumentError):
        count_independent(BoardSpec(2, 2), 5)
    with pytest.raises(InvalidArgumentError):
        exists_independent(BoardSpec(2, 2), -1)


@pytest.mark.parametrize("n", range(1, 9))
def test_count_matches_row_backtracking(n):
    assert count_independent(BoardSpec(2, n), n) == oracles.row_queens_count(n)


def _boards(max_cells):
    return [(n, d) for d in range(1, 9) for n in range(1, 17) if n ** d <= max_cells]


@pytest.mark.parametrize("n,d", _boards(27))
@pytest.mark.parametrize("m", range(0, 5))
def test_count_matches_subset_scan(n, d, m):
    b = BoardSpec(d, n)
    if m > b.cell_count:
        return
    count = count_independent(b, m)
    assert count == oracles.brute_count_independent(n, d, m)
    w = exists_independent(b, m)
    assert (count > 0) == (w is not None)
    if w is not None:
        assert len(w) == m and is_independent(b, w)


@pytest.mark.parametrize("n,d", _boards(256))
def test_count_matches_clique_oracle_small_m(n, d):
    b = BoardSpec(d, n)
    for m in range(0, min(3, b.cell_count) + 1):
        assert count_independent(b, m) == oracles.clique_count_independent(n, d, m)


@pytest.mark.parametrize("n,d", [nd for nd in _boards(125) if nd[0] >= 3])
@pytest.mark.parametrize("m", [4, 5])
def test_count_matches_clique_oracle(n, d, m):
    b = BoardSpec(d, n)
    if m > b.cell_count:
        return
    assert count_independent(b, m) == oracles.clique_count_independent(n, d, m)


@pytest.mark.parametrize("n", range(4, 9))
def test_two_dimensional_witness_uses_each_row_and_column(n):
    w = exists_independent(BoardSpec(2, n), n)
    assert sorted(q[0] for q in w.queens) == list(range(n))
    assert sorted(q[1] for q in w.queens) == list(range(n))


def test_three_dimensional_witness_may_share_coordinates():
    # row/column uniqueness does not carry over to d >= 3
    w = exists_independent(BoardSpec(3, 4), 4)
    assert len({q[2] for q in w.queens}) < 4


@pytest.mark.parametrize("n,d,m", [(4, 2, 4), (6, 2, 6), (4, 3, 4), (5, 3, 5)])
def test_witness_subsets_stay_independent(n, d, m):
    b = BoardSpec(d, n)
    w = exists_independent(b, m)
    for i in range(m):
        rest = w.queens[:i] + w.queens[i + 1:]
        assert is_independent(b, Placement.of(b, rest))


def _transform(n, perm, flips):
    return lambda c: tuple(n - 1 - c[perm[k]] if flips[k] else c[perm[k]] for k in range(len(c)))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(4, 2), (5, 2), (3, 3), (2, 4)]), st.integers(1, 3), st.data())
def test_independent_family_invariant_under_symmetry(board, m, data):
    n, d = board
    b = BoardSpec(d, n)
    perm = data.draw(st.permutations(range(d)))
    flips = data.draw(st.lists(st.booleans(), min_size=d, max_size=d))
    g = _transform(n, perm, flips)
    family = {
        frozenset(c) for c in combinations(b.positions(), m)
        if is_independent(b, Placement.of(b, c))
    }
    assert len(family) == count_independent(b, m)
    # g permutes cells; mapping the family onto itself keeps the count fixed
    assert {frozenset(g(q) for q in s) for s in family} == family


# frozen from oracles.clique_count_independent; the package takes minutes here
LARGE_COUNTS = {
    (4, 4): (36721704, 628500352),
    (6, 3): (23330568, 393981312),
    (16, 2): (45704724, 899046952),
    (3, 5): (13333760, 127434752),
    (12, 2): (2739386, 20609544),
    (2, 8): (0, 0),
}


@pytest.mark.slow
@pytest.mark.parametrize("n,d", sorted(LARGE_COUNTS))
def test_large_board_counts(n, d):
    b = BoardSpec(d, n)
    assert (count_independent(b, 4), count_independent(b, 5)) == LARGE_COUNTS[n, d]
