import pytest

from scottkit.errors import InvalidArgument
from scottkit.jia import (
    INF, JiaElem, diagonal_pairs, finite_directed_blocks, jia_leq, jia_noncoherence_witness,
    jia_truncation,
)


def test_order_reference():
    assert jia_leq(JiaElem(1, 2, 1), JiaElem(2, 3, INF))
    assert jia_leq(JiaElem(1, 2, 1), JiaElem(1, 2, 5))
    assert not jia_leq(JiaElem(1, 2, 1), JiaElem(3, 1, INF))
    assert not jia_leq(JiaElem(1, 2, 4), JiaElem(2, 3, INF))


def test_invalid_elements():
    with pytest.raises(InvalidArgument):
        JiaElem(0, 1, 1)
    with pytest.raises(InvalidArgument):
        JiaElem(1, 1, 0)


def test_truncation_size_and_blocks():
    t = jia_truncation(6)
    assert len(t) == 252
    blocks = finite_directed_blocks(t)
    assert len(blocks) == 36
    assert all(len({(x.i, x.j) for x in b}) == 1 for b in blocks)


def test_diagonal_order():
    it = diagonal_pairs()
    assert [next(it) for _ in range(4)] == [(1, 1), (1, 2), (2, 1), (1, 3)]


def test_noncoherence_witness():
    rep = jia_noncoherence_witness(5)
    assert rep.intersection == tuple(JiaElem(2, j, INF) for j in range(1, 6))
    assert rep.ok
    assert rep.survivors == (5, 4, 3, 2, 1)
    over = jia_noncoherence_witness(7, depth=5)
    assert over.survivors[-1] == 0 and over.ok
