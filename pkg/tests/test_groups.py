import pytest

from oracles import brute_centralizer, naive_closure

from commgraph.errors import BackendMismatch, CapExceeded, NotMember, NotNormal
from commgraph.groups import (
    GroupHandle,
    PermutationElement,
    center,
    centralizer,
    conjugate,
    element_order,
    find_frobenius_complement,
    fitting_subgroup,
    generate_elements,
    is_metacyclic,
    is_nilpotent,
    is_normal,
    is_soluble,
    minimal_normal_subgroups,
    normal_closure,
    p_core,
    quotient_group,
    subgroup_closure,
    sylow_profile_cyclic_or_quaternion,
    sylow_subgroup,
)


def P(*images):
    return PermutationElement(images)


@pytest.fixture(scope="module")
def sym3():
    return GroupHandle([P(1, 0, 2), P(1, 2, 0)], name="sym3").materialize()


@pytest.fixture(scope="module")
def sym4():
    return GroupHandle([P(1, 0, 2, 3), P(1, 2, 3, 0)], name="sym4").materialize()


@pytest.fixture(scope="module")
def c6():
    return GroupHandle([P(1, 2, 3, 4, 5, 0)], name="c6").materialize()


def test_generate_three_cycle():
    elems = generate_elements([P(1, 2, 0)], cap=10)
    assert len(elems) == 3
    assert elems[0].is_identity()


def test_generate_sym4_matches_naive_closure(sym4):
    oracle = naive_closure([P(1, 0, 2, 3), P(1, 2, 3, 0)])
    assert len(oracle) == 24
    assert set(sym4.elements) == oracle
    # idempotent under re-closure
    assert set(generate_elements(sym4.elements, cap=100)) == oracle


def test_generate_cap_exceeded():
    with pytest.raises(CapExceeded):
        generate_elements([P(1, 0, 2, 3), P(1, 2, 3, 0)], cap=10)


def test_generate_backend_mismatch():
    with pytest.raises(BackendMismatch):
        generate_elements([P(1, 0), P(1, 2, 0)], cap=10)


def test_generation_deterministic(sym4):
    again = GroupHandle(sym4.generators).materialize()
    assert again.elements == sym4.elements


def test_centralizer_of_identity(sym4):
    assert centralizer(sym4, sym4.identity).member_set == set(sym4.elements)


def test_centralizer_sym3_rotation(sym3):
    rot = P(1, 2, 0)
    got = centralizer(sym3, rot)
    assert got.member_set == {P(0, 1, 2), P(1, 2, 0), P(2, 0, 1)}


def test_centralizer_double_transposition(sym4):
    x = P(1, 0, 3, 2)
    got = centralizer(sym4, x)
    assert got.member_set == brute_centralizer(sym4, x)
    assert got.order() == 8


def test_centralizer_requires_membership(sym4):
    with pytest.raises(NotMember):
        centralizer(sym4, P(0, 1, 2, 3, 4))


def test_center(sym4, c6):
    assert center(c6).order() == 6  # abelian
    assert center(sym4).is_trivial()
    d8 = GroupHandle([P(1, 2, 3, 0), P(3, 2, 1, 0)]).materialize()
    assert center(d8).order() == 2


def test_is_soluble(sym4, c6):
    assert is_soluble(c6)
    assert is_soluble(sym4)  # S4 > A4 > V4 > 1
    a5 = GroupHandle([P(1, 2, 3, 4, 0), P(1, 2, 0, 3, 4)]).materialize()
    assert not is_soluble(a5)


def test_is_nilpotent(sym3, c6):
    assert is_nilpotent(c6)
    d8 = GroupHandle([P(1, 2, 3, 0), P(3, 2, 1, 0)]).materialize()
    assert is_nilpotent(d8)  # a 2-group
    assert not is_nilpotent(sym3)


def test_sylow_subgroups(sym4):
    d8 = GroupHandle([P(1, 2, 3, 0), P(3, 2, 1, 0)]).materialize()
    assert sylow_subgroup(d8, 2).order() == 8  # whole p-group
    assert sylow_subgroup(sym4, 2).order() == 8  # 2-part of 24
    assert sylow_subgroup(sym4, 3).order() == 3
    assert sylow_subgroup(sym4, 5).is_trivial()  # 5 does not divide 24


def test_sylow_is_deterministic_subgroup(sym4):
    s1 = sylow_subgroup(sym4, 2)
    s2 = sylow_subgroup(sym4, 2)
    assert s1.member_set == s2.member_set
    closed = subgroup_closure(sym4, s1.members)
    assert closed.member_set == s1.member_set


V4 = {P(0, 1, 2, 3), P(1, 0, 3, 2), P(2, 3, 0, 1), P(3, 2, 1, 0)}


def test_p_core(sym4):
    assert p_core(sym4, 2).member_set == V4
    assert p_core(sym4, 3).is_trivial()
    c4 = GroupHandle([P(1, 2, 3, 0)]).materialize()
    assert p_core(c4, 2).order() == 4  # abelian p-group


def test_fitting(sym3, sym4):
    d8 = GroupHandle([P(1, 2, 3, 0), P(3, 2, 1, 0)]).materialize()
    assert fitting_subgroup(d8).order() == 8  # nilpotent group is its own Fitting
    assert fitting_subgroup(sym4).member_set == V4
    f3 = fitting_subgroup(sym3)
    assert f3.order() == 3 and all(element_order(g) in (1, 3) for g in f3)


def test_fitting_is_nilpotent_normal(sym3, sym4):
    for G in (sym3, sym4):
        F = fitting_subgroup(G)
        assert is_nilpotent(F)
        assert is_normal(G, F)


def test_minimal_normal_subgroups(sym4, c6):
    a5 = GroupHandle([P(1, 2, 3, 4, 0), P(1, 2, 0, 3, 4)]).materialize()
    assert [m.order() for m in minimal_normal_subgroups(a5)] == [60]  # simple
    mins = minimal_normal_subgroups(sym4)
    assert len(mins) == 1 and mins[0].member_set == V4
    assert sorted(m.order() for m in minimal_normal_subgroups(c6)) == [2, 3]


def test_minimal_normal_is_minimal(sym4, c6):
    # no nontrivial proper subgroup of N is normal in G
    for G in (sym4, c6):
        for N in minimal_normal_subgroups(G):
            for x in N:
                if not x.is_identity():
                    assert normal_closure(G, x).member_set == N.member_set


def test_quotient_group(sym4):
    whole = sym4.whole()
    assert quotient_group(sym4, whole).order() == 1
    assert quotient_group(sym4, sym4.trivial_subgroup()).order() == 24
    q = quotient_group(sym4, sym4.subgroup(V4))
    assert q.order() == 6
    assert any(a * b != b * a for a in q.elements for b in q.elements)  # non-abelian
    assert q.order() * 4 == sym4.order()


def test_quotient_requires_normal(sym4):
    H = subgroup_closure(sym4, [P(1, 0, 2, 3)])
    with pytest.raises(NotNormal):
        quotient_group(sym4, H)


def test_sylow_profile(sym4, corpus):
    q8 = corpus["q8"]
    assert sylow_profile_cyclic_or_quaternion(q8.whole())
    assert not sylow_profile_cyclic_or_quaternion(sym4.subgroup(V4))
    f20 = corpus["c5c4"]
    complement = subgroup_closure(f20, [PermutationElement([0, 2, 4, 1, 3])])
    assert complement.order() == 4
    assert sylow_profile_cyclic_or_quaternion(complement)


def test_is_metacyclic(sym3, sym4):
    assert is_metacyclic(sym3)
    assert not is_metacyclic(GroupHandle([P(1, 2, 0, 3), P(0, 2, 3, 1)]).materialize())  # A4


def test_find_frobenius_complement(sym3):
    K = fitting_subgroup(sym3)
    H = find_frobenius_complement(sym3, K)
    assert H is not None and H.order() == 2
    assert len(H.member_set & K.member_set) == 1


def test_matrix_backend_q8(corpus):
    q8 = corpus["q8"]
    assert q8.order() == 8
    i, j = q8.generators
    minus_one = i * i
    assert minus_one == j * j
    assert not minus_one.is_identity() and (minus_one * minus_one).is_identity()
    assert j.inverse() * i * j == i.inverse()
    assert center(q8).member_set == {q8.identity, minus_one}


def test_group_json_roundtrip(sym4, corpus, tmp_path):
    import json

    from commgraph.corpus import load_group_file

    for handle in (sym4, corpus["q8"]):
        path = tmp_path / "g.json"
        path.write_text(json.dumps(handle.to_json()))
        again = load_group_file(path)
        assert again.materialize().order() == handle.order()
        assert set(again.elements) == set(handle.elements)


def test_normal_closure_and_conjugate(sym4):
    nc = normal_closure(sym4, P(1, 0, 3, 2))
    assert nc.member_set == V4
    g = P(1, 2, 3, 0)
    assert conjugate(P(1, 0, 3, 2), g) in nc
