import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from scottkit.errors import InvalidArgument
from scottkit.poset import (
    FinitePoset, all_posets, antichain, chain, closed_sets, diamond, down_closure, dumps,
    irreducible_closed_sets, is_coherent, is_directed, is_scott_open, is_sober,
    is_well_filtered, least_upper_bound, loads, open_sets, up_closure, vee,
)


def test_rejects_non_antisymmetric():
    with pytest.raises(InvalidArgument):
        FinitePoset(["a", "b"], [[1, 1], [1, 1]])


def test_rejects_non_transitive():
    t = np.eye(3, dtype=bool)
    t[0, 1] = t[1, 2] = True
    with pytest.raises(InvalidArgument):
        FinitePoset([0, 1, 2], t)


def test_rejects_duplicate_labels():
    with pytest.raises(InvalidArgument):
        FinitePoset(["a", "a"], np.eye(2))


def test_closures_on_diamond():
    p = diamond()
    assert down_closure(p, ["a"]).labels() == {"bot", "a"}
    assert up_closure(p, ["a", "b"]).labels() == {"a", "b", "top"}


def test_least_upper_bound():
    p = diamond()
    assert p.labels[least_upper_bound(p, p.indices(["a", "b"]))] == "top"
    v = vee()
    tops = [v.labels[i] for i in v.maximal(range(len(v)))]
    assert least_upper_bound(v, v.indices(tops)) is None


def test_directed():
    p = diamond()
    assert is_directed(p, p.indices(["a", "top"]))
    assert not is_directed(p, p.indices(["a", "b"]))
    assert not is_directed(p, [])


def test_scott_open_is_upper_set_on_finite():
    p = diamond()
    assert is_scott_open(p, ["a", "top"])
    assert not is_scott_open(p, ["a"])


def test_open_closed_are_complements():
    p = diamond()
    opens = {u.carrier for u in open_sets(p)}
    closed = {c.carrier for c in closed_sets(p)}
    full = frozenset(range(len(p)))
    assert {full - c for c in closed} == opens
    assert len(opens) == 6


def test_irreducible_closed_sets_are_principal():
    p = diamond()
    irr = {c.carrier for c in irreducible_closed_sets(p)}
    assert irr == {p.below(i) for i in range(len(p))}


def test_small_posets_sober():
    for p in (chain(3), diamond(), vee(), antichain(["x", "y"])):
        assert is_sober(p) and is_coherent(p) and is_well_filtered(p)


def test_all_posets_counts():
    assert [len(all_posets(n)) for n in range(6)] == [1, 1, 2, 5, 16, 63]


def test_serialization_round_trip():
    p = diamond()
    assert loads(dumps(p)) == p


@pytest.mark.parametrize("text", ["", "poset x\n", "poset 2\n0 a : 1\n", "poset 1\n0 a 1\n",
                                  "poset 1\nz a :\n"])
def test_loads_rejects_malformed(text):
    with pytest.raises(InvalidArgument):
        loads(text)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 4), st.data())
def test_dump_load_preserves_order(n, data):
    ps = all_posets(n)
    p = ps[data.draw(st.integers(0, len(ps) - 1))]
    assert np.array_equal(loads(dumps(p), parse=int).table, p.table)
