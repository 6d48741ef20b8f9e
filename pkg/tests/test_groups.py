import pytest
from hypothesis import given, settings, strategies as st

from eqloc.errors import GroupTooLarge, NotAPermutation, NotASubgroup
from eqloc.groups import (Subgroup, all_subgroups, conjugate_subgroup,
                          double_coset_decomposition, double_cosets,
                          format_cycles, group_from_generators, intersect,
                          normalizer, parse_cycles, subgroup_classes)
from eqloc.presets import preset

from conftest import ALL_PRESETS, UP_TO_12
from oracles import brute_subgroups, perm_closure


def test_order_two():
    assert group_from_generators(2, ["(1 2)"]).order == 2


def test_s3_closure_matches_brute_force():
    G = group_from_generators(3, ["(1 2 3)", "(1 2)"])
    gens = [parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)]
    assert G.order == 6
    assert set(G.elements) == perm_closure(gens, 3)


def test_trivial_group():
    G = group_from_generators(1, [])
    assert G.order == 1
    assert G.identity_index == 0


def test_image_list_generators():
    G = group_from_generators(3, [[2, 3, 1], [2, 1, 3]])
    assert G.order == 6


def test_not_a_permutation():
    with pytest.raises(NotAPermutation):
        group_from_generators(3, [[1, 1, 2]])
    with pytest.raises(NotAPermutation):
        group_from_generators(3, ["(1 2 1)"])
    with pytest.raises(NotAPermutation):
        group_from_generators(3, ["(1 4)"])


def test_group_too_large():
    with pytest.raises(GroupTooLarge):
        group_from_generators(6, ["(1 2 3 4 5 6)", "(1 2)"])
    with pytest.raises(GroupTooLarge):
        group_from_generators(5, ["(1 2 3 4 5)", "(1 2)"], order_bound=100)
    assert group_from_generators(5, ["(1 2 3 4 5)", "(1 2)"], order_bound=120).order == 120


def test_cycle_round_trip():
    p = parse_cycles("(1 3 2)(4 5)", 6)
    assert format_cycles(p) == "(1 3 2)(4 5)"
    assert parse_cycles("(1,3,2)(4,5)", 6) == p
    assert format_cycles(parse_cycles("", 3)) == "()"


@pytest.mark.parametrize("name", ALL_PRESETS)
def test_cayley_table_axioms(name):
    G = preset(name)
    n = G.order
    e = G.identity_index
    T = G.mul_table
    assert len(set(G.elements)) == n
    for a in range(n):
        assert T[a][e] == a == T[e][a]
        assert T[a][G.inverse[a]] == e
        assert n % G.element_order(a) == 0
        for b in range(n):
            for c in range(n):
                assert T[T[a][b]][c] == T[a][T[b][c]]


def test_class_counts():
    assert len(subgroup_classes(preset("C2"))) == 2
    assert len(subgroup_classes(preset("C1"))) == 1
    t = subgroup_classes(preset("S3"))
    assert [c.order for c in t] == [1, 2, 3, 6]
    assert [c.size for c in t] == [1, 3, 1, 1]


@pytest.mark.parametrize("name,count", [
    ("C4", 3), ("C6", 4), ("C2xC2", 5), ("C2xC4", 8), ("D4", 8),
    ("Q8", 6), ("A4", 5), ("S4", 11)])
def test_known_class_counts(name, count):
    assert len(preset(name).subgroup_classes) == count


@pytest.mark.parametrize("name", UP_TO_12)
def test_subgroups_match_brute_force(name):
    G = preset(name)
    assert sorted(S.members for S in all_subgroups(G)) == sorted(brute_subgroups(G))


@pytest.mark.parametrize("name", ALL_PRESETS)
def test_class_table_invariants(name):
    G = preset(name)
    t = G.subgroup_classes
    assert t[0].order == 1
    assert t[len(t) - 1].order == G.order
    keys = [(c.order, c.representative.members) for c in t]
    assert keys == sorted(keys)
    seen = set()
    for i, c in enumerate(t):
        assert c.representative.members == min(S.members for S in c.members)
        for S in c.members:
            assert S.members not in seen
            seen.add(S.members)
            assert t.class_of(S) == i
            assert G.order % S.order == 0
            G.check_subgroup(S)
        for g in range(G.order):
            assert t.class_of(conjugate_subgroup(G, c.representative, g)) == i
    assert len(seen) == t.subgroup_count()
    # orbit-stabilizer on the conjugation action
    assert sum(G.order // c.normalizer_order for c in t) == t.subgroup_count()


def test_presentation_independence():
    a = group_from_generators(3, ["(1 2 3)", "(1 2)"])
    b = group_from_generators(3, ["(1 2)", "(2 3)"])
    assert a.elements == b.elements
    ta, tb = a.subgroup_classes, b.subgroup_classes
    assert [[S.members for S in c.members] for c in ta] == \
           [[S.members for S in c.members] for c in tb]


def test_double_cosets_examples():
    C2 = preset("C2")
    e = C2.trivial_subgroup()
    assert len(double_cosets(C2, e, e)) == 2
    assert len(double_cosets(C2, e, C2.whole())) == 1
    S3 = preset("S3")
    H = S3.closure([S3.index[parse_cycles("(1 2)", 3)]])
    dec = double_coset_decomposition(S3, H, H)
    assert sorted(len(c) for _, c in dec) == [2, 4]


@pytest.mark.parametrize("name", ALL_PRESETS)
def test_double_coset_sizes(name):
    G = preset(name)
    reps = G.subgroup_classes.representatives
    for H in reps:
        for K in reps:
            dec = double_coset_decomposition(G, H, K)
            assert sum(len(c) for _, c in dec) == G.order
            union = set()
            for g, c in dec:
                assert g == min(c)
                assert not (union & c)
                union |= c
                gKg = conjugate_subgroup(G, K, g)
                assert len(c) == H.order * K.order // intersect(H, gKg).order


def test_conjugate_normalizer_intersect():
    S3 = preset("S3")
    e = S3.trivial_subgroup()
    for g in range(S3.order):
        assert conjugate_subgroup(S3, e, g) == e
    t12 = S3.closure([S3.index[parse_cycles("(1 2)", 3)]])
    c3 = S3.closure([S3.index[parse_cycles("(1 2 3)", 3)]])
    assert normalizer(S3, t12) == t12
    assert normalizer(S3, c3) == S3.whole()
    assert intersect(t12, c3) == e


def test_not_a_subgroup():
    S3 = preset("S3")
    bad = Subgroup((0, S3.index[parse_cycles("(1 2 3)", 3)]))
    with pytest.raises(NotASubgroup):
        normalizer(S3, bad)
    with pytest.raises(NotASubgroup):
        double_cosets(S3, bad, S3.whole())
    with pytest.raises(NotASubgroup):
        S3.subgroup([1, 2])


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(ALL_PRESETS), st.data())
def test_conjugation_preserves_subgroups(name, data):
    G = preset(name)
    subs = [S for c in G.subgroup_classes for S in c.members]
    H = data.draw(st.sampled_from(subs))
    g = data.draw(st.integers(0, G.order - 1))
    C = conjugate_subgroup(G, H, g)
    assert C.order == H.order
    G.check_subgroup(C)
