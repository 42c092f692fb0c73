import random

import pytest

from blockforge.errors import DomainError
from blockforge.perms import conj, identity, mult, order
from blockforge.permgroup import (
    PermutationGroup,
    are_conjugate_subgroups,
    centralizer,
    group_from_elements,
    intersection,
    is_normal_in,
    is_p_solvable,
    normal_closure,
    normal_subgroups,
    normalizer,
    p_core,
    p_prime_core,
    quotient_action,
    quotient_with_cosets,
    subgroups_of_order,
    sylow_subgroup,
    trivial_group,
)

import oracles
from conftest import alternating, cyclic, symmetric


def random_subgroup(rng, degree, n_gens):
    gens = []
    for _ in range(n_gens):
        img = list(range(degree))
        rng.shuffle(img)
        gens.append(tuple(img))
    return PermutationGroup(degree, gens)


def test_order_and_membership_match_closure_oracle():
    rng = random.Random(17)
    for _ in range(25):
        G = random_subgroup(rng, 6, 2)
        elems = oracles.mulclose(G.generators)
        assert G.order() == len(elems)
        assert set(G.elements()) == set(elems)
        for _ in range(5):
            img = list(range(6))
            rng.shuffle(img)
            assert G.contains(tuple(img)) == (tuple(img) in elems)


def test_s4_classes_frozen():
    G = symmetric(4)
    assert G.order() == 24
    data = [(c.element_order, c.size) for c in G.conjugacy_classes()]
    assert data == [(1, 1), (2, 3), (2, 6), (3, 8), (4, 6)]


def test_a5_classes_frozen():
    G = alternating(5)
    assert G.order() == 60
    data = [(c.element_order, c.size) for c in G.conjugacy_classes()]
    assert data == [(1, 1), (2, 15), (3, 20), (5, 12), (5, 12)]


def test_classes_match_brute_force():
    rng = random.Random(23)
    for _ in range(10):
        G = random_subgroup(rng, 6, 2)
        got = {frozenset(G.class_elements(i)) for i in range(len(G.conjugacy_classes()))}
        want = set(oracles.brute_classes(G.element_set()))
        assert got == want


def test_class_reps_are_lex_minimal_and_identity_first():
    G = symmetric(4)
    classes = G.conjugacy_classes()
    assert classes[0].representative == identity(4)
    for c in classes:
        assert c.representative == min(G.class_elements(c.index))
        assert order(c.representative) == c.element_order


def test_class_index_roundtrip(s4):
    for c in s4.conjugacy_classes():
        for x in s4.class_elements(c.index):
            assert s4.class_index(x) == c.index
    with pytest.raises(DomainError):
        s4.class_index((1, 0, 2, 3, 4))


def test_centralizer_sizes(s3, s4):
    three_cycle = (1, 2, 0)
    assert centralizer(s3, three_cycle).order() == 3
    transposition = (1, 0, 2, 3)
    assert centralizer(s4, transposition).order() == 4
    for c in s4.conjugacy_classes():
        assert centralizer(s4, c.representative).order() * c.size == 24


def test_normalizer_of_v4_in_a5(a5):
    v4 = PermutationGroup(5, [(1, 0, 3, 2, 4), (2, 3, 0, 1, 4)])
    assert v4.order() == 4
    assert normalizer(a5, v4).order() == 12


def test_normal_closure_and_normality(s4):
    assert normal_closure(s4, ((1, 0, 2, 3),)).order() == 24
    v4 = normal_closure(s4, ((1, 0, 3, 2),))
    assert v4.order() == 4
    assert is_normal_in(v4, s4)
    transposition_group = PermutationGroup(4, [(1, 0, 2, 3)])
    assert not is_normal_in(transposition_group, s4)


def test_sylow_subgroups(s4, a5):
    assert sylow_subgroup(s4, 2).order() == 8
    assert sylow_subgroup(s4, 3).order() == 3
    assert sylow_subgroup(a5, 2).order() == 4
    assert sylow_subgroup(a5, 3).order() == 3
    assert sylow_subgroup(a5, 5).order() == 5
    assert sylow_subgroup(a5, 7).order() == 1


def test_sylow_is_actual_subgroup(a5):
    P = sylow_subgroup(a5, 2)
    assert P.is_subgroup_of(a5)
    for x in P.elements():
        assert order(x) in (1, 2, 4)


def test_cores(s4, a4, a5):
    assert p_core(s4, 2).order() == 4
    assert p_core(s4, 3).order() == 1
    assert p_prime_core(s4, 3).order() == 4
    assert p_core(a4, 2).order() == 4
    assert p_core(a5, 2).order() == 1
    assert p_prime_core(a5, 2).order() == 1


def test_quotient_s4_mod_v4(s4):
    v4 = p_core(s4, 2)
    act = quotient_with_cosets(s4, v4)
    Q = act.quotient
    assert Q.order() == 6
    assert not Q.is_abelian()
    assert quotient_action(s4, v4) == Q
    rng = random.Random(7)
    elems = s4.elements()
    for _ in range(50):
        g, h = rng.choice(elems), rng.choice(elems)
        assert act.image_of(mult(g, h)) == mult(act.image_of(g), act.image_of(h))


def test_quotient_subgroup_preimage(s4):
    v4 = p_core(s4, 2)
    act = quotient_with_cosets(s4, v4)
    Q = act.quotient
    sub3 = sylow_subgroup(Q, 3)
    back = act.preimage(sub3)
    assert back.order() == 12
    assert is_normal_in(back, s4)
    assert act.preimage(Q).order() == 24
    assert act.preimage(trivial_group(Q.degree)).order() == 4


def test_quotient_rejects_non_normal(s4):
    H = PermutationGroup(4, [(1, 0, 2, 3)])
    with pytest.raises(DomainError):
        quotient_with_cosets(s4, H)


def test_p_solvability(s4, a4, a5):
    for p in (2, 3):
        assert is_p_solvable(s4, p)
        assert is_p_solvable(a4, p)
    assert not is_p_solvable(a5, 2)
    assert not is_p_solvable(a5, 3)
    assert not is_p_solvable(a5, 5)
    assert is_p_solvable(a5, 7)


def test_p_solvability_matches_composition_factors():
    rng = random.Random(41)
    for _ in range(8):
        G = random_subgroup(rng, 4, 2)
        for p in (2, 3):
            assert is_p_solvable(G, p) == oracles.is_p_solvable_by_factors(
                G.element_set(), p
            )


def test_subgroup_classes_of_prime_power_order(s4, a5):
    classes = subgroups_of_order(s4, 4)
    assert len(classes) == 3
    orders = sorted(sorted(order(x) for x in H.elements()) for H in classes)
    assert orders == [[1, 2, 2, 2], [1, 2, 2, 2], [1, 2, 4, 4]]
    assert len(subgroups_of_order(a5, 4)) == 1
    assert len(subgroups_of_order(s4, 8)) == 1


def test_subgroup_class_members_are_conjugate(s4):
    for H in subgroups_of_order(s4, 2):
        K = H
        for g in s4.elements()[:5]:
            K2 = PermutationGroup(4, [conj(g, x) for x in K.generators])
            assert are_conjugate_subgroups(s4, H, K2)


def test_intersection(s4):
    P = sylow_subgroup(s4, 2)
    A = group_from_elements(4, tuple(x for x in s4.elements() if _sign(x) == 1))
    assert intersection(P, A).order() == 4
    assert intersection(P, P).order() == 8


def _sign(p):
    seen = [False] * len(p)
    sgn = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sgn = -sgn
    return sgn


def test_normal_subgroups_of_s4(s4):
    ns = normal_subgroups(s4)
    assert [N.order() for N in ns] == [1, 4, 12, 24]
    for N in ns:
        assert is_normal_in(N, s4)


def test_normal_subgroups_of_a5(a5):
    assert [N.order() for N in normal_subgroups(a5)] == [1, 60]


def test_exponent(s4, a5):
    assert s4.exponent() == 12
    assert a5.exponent() == 30
    assert cyclic(6).exponent() == 6


def test_group_equality_and_hash(s4):
    P1 = sylow_subgroup(s4, 2)
    P2 = group_from_elements(4, P1.elements())
    assert P1 == P2
    assert hash(P1) == hash(P2)
    assert P1 != sylow_subgroup(s4, 3)


def test_trivial_group():
    T = trivial_group(5)
    assert T.order() == 1
    assert T.is_trivial()
    assert T.contains(identity(5))


def test_degree_mismatch_raises():
    with pytest.raises(DomainError):
        PermutationGroup(4, [(1, 0, 2)])


def test_bad_generator_raises():
    with pytest.raises(DomainError):
        PermutationGroup(3, [(0, 0, 1)])
