import pytest

from blockforge.blocks import (
    block_data,
    block_idempotent,
    brauer_correspondent,
    brauer_image_is_nonzero,
    central_character,
    covered_blocks,
    defect_group_via_defect_classes,
    induced_block,
    p_regular_classes,
    _class_algebra_product,
)
from blockforge.chartab import character_table
from blockforge.errors import DomainError
from blockforge.permgroup import (
    PermutationGroup,
    are_conjugate_subgroups,
    normal_subgroups,
    normalizer,
    sylow_subgroup,
)

from conftest import alternating, cyclic, symmetric


def degree_multisets(bs):
    return sorted(sorted(b.degrees()) for b in bs.blocks)


def test_s4_p2_single_block_of_full_defect(s4):
    bs = block_data(s4, 2)
    assert len(bs.blocks) == 1
    b = bs.blocks[0]
    assert sorted(b.degrees()) == [1, 1, 2, 3, 3]
    assert b.defect == 3
    assert b.dim == 24
    assert b.is_principal()


def test_s4_p2_idempotent_is_the_identity(s4):
    bs = block_data(s4, 2)
    coeffs = block_idempotent(bs.blocks[0])
    field = bs.rmap.field
    assert coeffs[0] == field.one
    assert all(c.is_zero() for c in coeffs[1:])


def test_a5_p2_partition(a5):
    bs = block_data(a5, 2)
    assert degree_multisets(bs) == [[1, 3, 3, 5], [4]]
    principal = bs.blocks[0]
    assert principal.is_principal()
    assert sorted(principal.degrees()) == [1, 3, 3, 5]
    assert principal.defect == 2
    other = bs.blocks[1]
    assert other.defect == 0
    assert other.dim == 16
    assert principal.dim == 44


def test_a5_p2_defect_groups(a5):
    bs = block_data(a5, 2)
    D = bs.blocks[0].defect_group()
    assert D.order() == 4
    assert sorted(c.element_order for c in D.conjugacy_classes()) == [1, 2, 2, 2]
    assert bs.blocks[1].defect_group().order() == 1


def test_a5_p2_heights(a5):
    bs = block_data(a5, 2)
    principal = bs.blocks[0]
    assert principal.heights == (0, 0, 0, 0)
    assert sorted(principal.height_zero_degrees()) == [1, 3, 3, 5]
    other = bs.blocks[1]
    assert other.heights == (0,)
    assert other.height_zero_degrees() == (4,)


def test_sl23_p3_defects(sl23):
    bs = block_data(sl23, 3)
    assert sorted(b.defect for b in bs.blocks) == [0, 1, 1]
    dims = sorted(b.dim for b in bs.blocks)
    assert sum(dims) == 24
    defect_zero = [b for b in bs.blocks if b.defect == 0]
    assert len(defect_zero) == 1
    assert defect_zero[0].degrees() == (3,)


def test_sl23_p3_defect_groups(sl23):
    bs = block_data(sl23, 3)
    for b in bs.blocks:
        D = b.defect_group()
        assert D.order() == 3**b.defect


def test_a4_p2_single_block(a4):
    bs = block_data(a4, 2)
    assert len(bs.blocks) == 1
    b = bs.blocks[0]
    assert sorted(b.degrees()) == [1, 1, 1, 3]
    assert b.defect == 2
    assert b.dim == 12
    assert sorted(b.height_zero_degrees()) == [1, 1, 1, 3]


def test_coprime_prime_gives_singleton_blocks(s4):
    bs = block_data(s4, 5)
    assert len(bs.blocks) == 5
    for b in bs.blocks:
        assert b.defect == 0
        assert len(b.char_indices) == 1


def test_blocks_ordered_principal_first(a5, sl23):
    for G, p in ((a5, 2), (sl23, 3)):
        bs = block_data(G, p)
        assert bs.blocks[0].is_principal()
        firsts = [min(b.char_indices) for b in bs.blocks]
        assert firsts == sorted(firsts)


def test_block_dims_sum_to_group_order():
    for G, p in (
        (symmetric(4), 2),
        (symmetric(4), 3),
        (alternating(5), 2),
        (alternating(5), 3),
        (alternating(5), 5),
        (cyclic(6), 2),
        (cyclic(6), 3),
    ):
        bs = block_data(G, p)
        assert sum(b.dim for b in bs.blocks) == G.order()


def test_central_character_values_are_class_sums(s4):
    table = character_table(s4)
    chi = table.irreducibles[0]
    omega = central_character(chi)
    sizes = [c.size for c in s4.conjugacy_classes()]
    assert [v.integer_value() for v in omega] == sizes


def test_p_regular_classes_s4(s4):
    assert p_regular_classes(s4, 2) == (0, 3)
    assert p_regular_classes(s4, 3) == (0, 1, 2, 4)


def test_defect_class_method_agrees(s4, a5, sl23, a4):
    for G, p in (
        (s4, 2),
        (s4, 3),
        (a5, 2),
        (a5, 3),
        (a5, 5),
        (sl23, 2),
        (sl23, 3),
        (a4, 2),
        (a4, 3),
    ):
        bs = block_data(G, p)
        for b in bs.blocks:
            via_classes = defect_group_via_defect_classes(b)
            assert are_conjugate_subgroups(G, b.defect_group(), via_classes)


def test_idempotents_are_orthogonal(a5):
    bs = block_data(a5, 2)
    e0 = block_idempotent(bs.blocks[0])
    e1 = block_idempotent(bs.blocks[1])
    product = _class_algebra_product(a5, e0, e1, bs.rmap.field)
    assert all(c.is_zero() for c in product)


def test_brauer_image_vanishes_above_defect_group(a5):
    bs = block_data(a5, 2)
    defect_zero = bs.blocks[1]
    V = bs.blocks[0].defect_group()
    assert not brauer_image_is_nonzero(defect_zero, V)
    assert brauer_image_is_nonzero(bs.blocks[0], V)


def test_induction_from_sylow_normalizer_s4(s4):
    P = sylow_subgroup(s4, 2)
    assert normalizer(s4, P) == P
    local = block_data(P, 2, conductor=s4.exponent())
    assert len(local.blocks) == 1
    induced = induced_block(local.blocks[0], s4)
    assert induced is not None
    assert induced == block_data(s4, 2).blocks[0]


def test_induction_a4_to_a5(a5):
    V = block_data(a5, 2).blocks[0].defect_group()
    A4 = normalizer(a5, V)
    assert A4.order() == 12
    local = block_data(A4, 2, conductor=a5.exponent())
    induced = induced_block(local.blocks[0], a5)
    assert induced == block_data(a5, 2).blocks[0]


def test_brauer_correspondent_a5_principal(a5):
    bs = block_data(a5, 2)
    principal = bs.blocks[0]
    b = brauer_correspondent(principal)
    assert b.blockset.group.order() == 12
    assert sorted(b.degrees()) == [1, 1, 1, 3]
    assert b.defect == 2
    assert induced_block(b, a5) == principal


def test_brauer_correspondent_defect_zero_is_itself(a5):
    bs = block_data(a5, 2)
    defect_zero = bs.blocks[1]
    assert brauer_correspondent(defect_zero) == defect_zero


def test_brauer_correspondent_s4(s4):
    bs = block_data(s4, 2)
    b = brauer_correspondent(bs.blocks[0])
    assert b.blockset.group.order() == 8
    assert b.defect == 3
    assert sorted(b.height_zero_degrees()) == [1, 1, 1, 1]


def test_brauer_correspondent_sl23_p3(sl23):
    bs = block_data(sl23, 3)
    principal = bs.blocks[0]
    b = brauer_correspondent(principal)
    H = b.blockset.group
    assert H.order() % 3 == 0
    assert b.defect == 1
    assert induced_block(b, sl23) == principal


def test_covered_blocks_s4_over_a4(s4):
    bs = block_data(s4, 2)
    A4 = [N for N in normal_subgroups(s4) if N.order() == 12][0]
    covered = covered_blocks(bs.blocks[0], A4)
    assert len(covered) == 1
    assert sorted(covered[0].degrees()) == [1, 1, 1, 3]


def test_covered_blocks_requires_normal(s4):
    bs = block_data(s4, 2)
    C = cyclic_subgroup_of_s4()
    with pytest.raises(DomainError):
        covered_blocks(bs.blocks[0], C)


def cyclic_subgroup_of_s4():
    return PermutationGroup(4, [(1, 0, 2, 3)])


def test_partition_stable_under_larger_conductor(a4, a5):
    small = block_data(a4, 2)
    big = block_data(a4, 2, conductor=a5.exponent())
    assert [b.char_indices for b in small.blocks] == [
        b.char_indices for b in big.blocks
    ]
    assert small.rmap.e == 6
    assert big.rmap.e == 30


def test_covered_blocks_sl23_over_q8(sl23, q8):
    bs = block_data(sl23, 3)
    principal = bs.blocks[0]
    covered = covered_blocks(principal, q8)
    assert len(covered) >= 1
    local = block_data(q8, 3, conductor=sl23.exponent())
    assert all(b in local.blocks for b in covered)
