import pytest
from hypothesis import given, strategies as st

from scottkit import gadget as G
from scottkit.errors import InvalidArgument, OutOfRange

seqs = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(tuple)


def test_order_on_L():
    assert G.leq_L(G.Nat(3), G.Nat(5))
    assert G.leq_L(G.Seq((2,)), G.Seq((2, 7)))
    assert not G.leq_L(G.Nat(3), G.Seq((3,)))
    assert G.leq_L(G.Seq((9,)), G.TOP) and G.leq_L(G.Nat(9), G.TOP)
    assert not G.leq_L(G.TOP, G.Nat(1))


def test_invalid_elements():
    for bad in (lambda: G.Nat(0), lambda: G.Seq(()), lambda: G.Seq((0,))):
        with pytest.raises(InvalidArgument):
            bad()


def test_mono_inj_reference_values():
    assert G.mono_inj((1,)) == 1
    assert G.mono_inj((2,)) < G.mono_inj((2, 1))


def test_mono_inj_round_trip_exhaustive():
    all_seqs = G.sequences_up_to_weight(8)
    assert len(all_seqs) == sum(G.count_sequences(w) for w in range(2, 9))
    for s in all_seqs:
        assert G.mono_inj_decode(G.mono_inj(s)) == s


@given(seqs, st.integers(1, 5))
def test_mono_inj_prefix_monotone(s, k):
    assert G.mono_inj(s) < G.mono_inj(s + (k,))


def test_pair_code_bijection():
    seen = set()
    for n in range(2, 30):
        for m in range(1, n):
            c = G.PairCode(m, n).code
            assert G.PairCode.from_code(c) == G.PairCode(m, n)
            seen.add(c)
    assert seen == set(range(1, len(seen) + 1))


def test_i_sets_disjoint_and_above_n():
    pcs = [G.PairCode.from_code(c) for c in range(1, 16)]
    members = {pc: set(G.i_set_members(pc, below=20_000)) for pc in pcs}
    for pc, ms in members.items():
        assert all(x > pc.n for x in ms)
        assert all(G.i_set(pc)(x) for x in ms)
    for a in pcs:
        for b in pcs:
            if a != b:
                assert not members[a] & members[b]


def test_i_sets_large():
    for c in range(1, 8):
        pc = G.PairCode.from_code(c)
        assert len(list(G.i_set_members(pc, count=100))) == 100


def test_f_reference_values():
    assert G.f_mn((1, 2), (1,)) == 4
    assert G.f_mn((1, 3), (1,)) == 8
    assert G.f_mn((1, 2), (3,)) == 28
    assert G.f_mn((1, 2), (1, 1)) == 20


@given(st.integers(1, 20), seqs)
def test_f_round_trip(code, s):
    pc = G.PairCode.from_code(code)
    assert G.f_mn_decode(G.f_mn(pc, s)) == (pc, s)
    assert G.i_set(pc)(G.f_mn(pc, s))


def test_f_out_of_range():
    with pytest.raises(OutOfRange):
        G.f_mn(G.PairCode.from_code(G.MAX_CODE + 5), (1,))


@pytest.mark.parametrize("x", [G.Nat(4), G.Seq((1, 12, 3)), G.TOP])
def test_render_parse(x):
    assert G.parse_L(G.render_L(x)) == x


@pytest.mark.parametrize("text", ["n:0", "s:", "s:1..2", "q:1", "top2"])
def test_parse_rejects(text):
    with pytest.raises(InvalidArgument):
        G.parse_L(text)
