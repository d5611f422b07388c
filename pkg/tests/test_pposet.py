import random

import pytest

from scottkit import gadget as G
from scottkit.errors import InvalidArgument, PreconditionViolation
from scottkit.pposet import (
    PElem, ScottOpenP, UpSetP, everything, irreducibility_trace, leq_P, parse_P,
    strictly_below, truncation, window,
)
from scottkit.sampling import random_open_pair, random_p


def P(c, v):
    return PElem(c, v)


def test_same_column_clause():
    w = strictly_below(P(3, G.Seq((2,))), P(3, G.TOP))
    assert w.clause == "R1"


def test_sequence_clause():
    col = G.f_mn((1, 2), (1,))
    w = strictly_below(P(1, G.Seq((1,))), P(col, G.TOP))
    assert w.clause == "R2"
    assert w.replay(P(1, G.Seq((1,))), P(col, G.TOP))


def test_nat_clause():
    col = G.f_mn((1, 2), (3,))
    w = strictly_below(P(2, G.Nat(3)), P(col, G.TOP))
    assert w.clause == "R3"


def test_no_relation_between_unrelated_columns():
    assert strictly_below(P(1, G.TOP), P(2, G.TOP)) is None
    assert strictly_below(P(1, G.Nat(1)), P(1, G.Seq((1,)))) is None


def test_irreflexive_on_samples():
    rng = random.Random(1)
    for _ in range(300):
        x = random_p(rng)
        assert strictly_below(x, x) is None and leq_P(x, x)


def test_truncation_small_is_L_window():
    t = truncation(1, 2)
    assert {x.col for x in t.labels} == {1}
    for x in t.labels:
        for y in t.labels:
            assert t.leq(x, y) == G.leq_L(x.val, y.val)


def test_truncation_is_order_and_tops_dominate():
    t = truncation(8, 4)
    for x in t.labels:
        assert t.leq(x, P(x.col, G.TOP))


def test_window_accepts_extra_seqs():
    w = window([1, 2], 2, 2, extra_seqs=[(1, 1, 1)])
    assert P(1, G.Seq((1, 1, 1))) in w.index


def test_parse_round_trip():
    for text in ["(1|n:3)", "(4|s:2.7)", "(9|top)"]:
        assert str(parse_P(text)) == text
    with pytest.raises(InvalidArgument):
        parse_P("(0|top)")


def test_irreducibility_same_column():
    a = P(1, G.Nat(1))
    u = ScottOpenP((a,))
    tr = irreducibility_trace(a, a, u, u)
    assert tr.point == P(1, G.TOP) and tr.same_column


def test_irreducibility_reference_example():
    a, b = P(1, G.Seq((1,))), P(2, G.Nat(1))
    tr = irreducibility_trace(a, b, ScottOpenP((a,)), ScottOpenP((b,)))
    assert tr.point == P(G.f_mn((1, 2), (1,)), G.TOP)
    assert strictly_below(a, tr.point).clause == "R2"
    assert strictly_below(b, tr.point).clause == "R3"


def test_irreducibility_everything():
    tr = irreducibility_trace(P(1, G.Nat(1)), P(2, G.Nat(1)), everything, everything)
    assert len(tr.chain) == 1


def test_irreducibility_precondition():
    a = P(1, G.Nat(1))
    with pytest.raises(PreconditionViolation):
        irreducibility_trace(P(2, G.TOP), a, UpSetP((a,)), UpSetP((a,)))


def test_irreducibility_random_pairs():
    rng = random.Random(5)
    for _ in range(100):
        a, b, u, v = random_open_pair(rng)
        z = irreducibility_trace(a, b, u, v).point
        assert u(z) and v(z)
