import random

import pytest
from hypothesis import given, settings, strategies as st

from scottkit import gadget as G
from scottkit.errors import InvalidArgument
from scottkit.lattice import (
    EMPTY, F_BOTTOM, REFERENCE_TABLE, TOP_R, FElem, TypeI, TypeI_II_1, TypeI_II_2, TypeII, TypeIII,
    TypeIV, TypeV, adjunction_holds, canonical_elements, classify_principal, compare_tables,
    directed_sup, distributivity_check, f_join, f_leq, f_map_R, f_meet, from_region, g_map_F,
    intersect, intersection_table, join_R, leq_R, member, no_upper_bound_witness, parse_M,
    parse_R, render_M, render_R, subset,
)
from scottkit.pposet import PElem, truncation
from scottkit.sampling import random_f_triple, random_m, random_r


def P(c, v):
    return PElem(c, v)


def test_membership_reference():
    assert member(TypeII(5, 3), P(5, G.Nat(2)))
    assert member(TypeI(4, (2, 7)), P(4, G.Seq((2,))))
    assert not member(TypeIII(3), P(4, G.TOP))


def test_classify_reference():
    assert classify_principal(P(4, G.Seq((2, 7)))) == TypeI(4, (2, 7))
    assert classify_principal(P(5, G.Nat(3))) == TypeII(5, 3)
    assert classify_principal(P(G.f_mn((1, 2), (3,)), G.TOP)) == TypeIV(1, 2, (3,))
    assert classify_principal(P(G.f_mn((1, 2), (1, 2)), G.TOP)) == TypeV(1, 2, (1, 2))
    assert classify_principal(P(1, G.TOP)) == TypeIII(1)


def test_principal_denotation_matches_brute_force():
    t = truncation(24, 5)
    for i, x in enumerate(t.labels):
        r = classify_principal(x).region()
        below = t.below(i)
        for j, y in enumerate(t.labels):
            assert r.contains(y) == (j in below), (x, y)


def test_intersections_reference():
    assert intersect(TypeI(1, (1,)), TypeII(1, 1)) is EMPTY
    iv = TypeIV(1, 2, (3,))
    assert intersect(iv, iv) == iv


def test_subset():
    assert subset(EMPTY, TypeIII(1))
    assert subset(TypeI_II_1(1, G.f_mn((1, 2), (2, 1)), (2,), 2),
                  TypeIV(1, G.f_mn((1, 2), (2, 1)), (2,)))
    assert not subset(TypeIII(2), TypeI(2, (5,)))


def test_invalid_one_shape_rejected():
    with pytest.raises(InvalidArgument):
        TypeI_II_1(1, 2, (1,), 1)          # column 2 is not a coded column
    with pytest.raises(InvalidArgument):
        TypeI_II_1(1, G.f_mn((1, 2), (2, 1)), (2,), 3)   # k0 > s0


def test_from_region_rejects_two_columns():
    r = TypeIII(1).region()
    r2 = TypeIII(2).region()
    from scottkit.lattice import Region
    with pytest.raises(InvalidArgument):
        from_region(Region(r.cols | r2.cols, frozenset(), frozenset()))


def test_directed_sups():
    m = TypeII(5, 2)
    assert directed_sup([m, m, m]) == m
    assert directed_sup([TypeII(5, k) for k in range(1, 6)]) == TypeII(5, 5)
    chain = [TypeI_II_2(1, 2, (3,), k) for k in range(1, 5)]
    assert directed_sup(chain, limit=True) == TypeIV(1, 2, (3,))
    with pytest.raises(InvalidArgument):
        directed_sup([TypeII(5, 3), TypeII(5, 1)])


def test_no_upper_bound_for_two_tops():
    rec = no_upper_bound_witness(8)
    assert rec.ok and rec.checked > 0
    assert join_R(classify_principal(P(1, G.TOP)), classify_principal(P(2, G.TOP))) is TOP_R


@pytest.mark.parametrize("m", [EMPTY, TypeI(3, (1, 2)), TypeII(2, 4), TypeIII(7),
                               TypeIV(1, 2, (3,)), TypeV(1, 3, (2, 2)),
                               TypeI_II_2(1, 2, (1, 1), 2)])
def test_render_parse_M(m):
    assert parse_M(render_M(m)) == m


def test_render_parse_R():
    assert parse_R(render_R(TOP_R)) is TOP_R


def test_canonical_elements_all_tags():
    tags = {m.tag for m in canonical_elements(3)}
    assert tags == {"empty", "I", "II", "III", "IV", "V", "I+II1", "I+II2"}


def test_F_bottom_and_join():
    a = FElem.of(TypeI(1, (1,)))
    assert f_join(F_BOTTOM, a) == a and f_meet(F_BOTTOM, a) == F_BOTTOM
    assert f_leq(F_BOTTOM, a)


def test_adjunction_orientation():
    a, b = TypeI(1, (1,)), TypeII(1, 1)
    A, x = FElem.of(a, b), join_R(a, b)
    assert adjunction_holds(x, A)
    assert f_leq(f_map_R(x), A) != leq_R(x, g_map_F(A))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_g_after_f_identity(seed):
    x = random_r(random.Random(seed))
    assert g_map_F(f_map_R(x)) == x


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_distributive(seed):
    a, b, c = random_f_triple(random.Random(seed))
    assert distributivity_check(a, b, c)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_intersection_commutes_and_is_below(seed):
    rng = random.Random(seed)
    a, b = random_m(rng), random_m(rng)
    m = intersect(a, b)
    assert m == intersect(b, a)
    assert subset(m, a) and subset(m, b)


def test_table_reference_cells():
    cmp = compare_tables(intersection_table(reference=REFERENCE_TABLE))
    assert cmp[("I", "II")][0] == "exact"
    assert set(cmp[("IV", "IV")][1]) == {"I", "II", "IV", "I+II1", "empty"}
    # the reference lists II for V x V, which no intersection produces
    assert cmp[("V", "V")][0] == "over"
    assert cmp[("IV", "I+II2")][0] == "missing"
