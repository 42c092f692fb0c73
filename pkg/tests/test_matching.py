import random

from blockforge.matching import divisibility_matching


def test_a5_ordinary_height_zero_shape_matches():
    left = (1, 3, 3, 5)
    right = (1, 1, 1, 3)
    out = divisibility_matching(left, right)
    assert out.ok
    assert all(left[i] % right[j] == 0 for i, j in out.pairs)


def test_s4_height_zero_shape():
    out = divisibility_matching((1, 1, 3, 3), (1, 1, 1, 1))
    assert out.ok
    pairs = [(1, 1), (1, 1), (3, 1), (3, 1)]
    left = (1, 1, 3, 3)
    right = (1, 1, 1, 1)
    assert sorted((left[i], right[j]) for i, j in out.pairs) == sorted(pairs)


def test_identity_matching():
    out = divisibility_matching((1, 2, 4), (1, 2, 4))
    assert out.ok
    assert out.pairs == ((0, 0), (1, 1), (2, 2))


def test_size_mismatch_reports_larger_side():
    out = divisibility_matching((1, 3), (1,))
    assert not out.ok
    assert out.reason == "size mismatch"
    assert out.violator_side == "left"
    assert out.violator == (1, 3)
    out = divisibility_matching((4,), (1, 2))
    assert out.violator_side == "right"
    assert out.violator == (1, 2)


def test_right_singleton_violator():
    out = divisibility_matching((1,), (2,))
    assert not out.ok
    assert out.reason == "hall violator"
    assert out.violator_side == "right"
    assert out.violator == (2,)


def test_smaller_left_violator_beats_larger_right_one():
    # Left 3 is isolated; the right pair {2, 4} is only deficient at
    # size two, so the singleton wins.
    out = divisibility_matching((4, 3), (2, 4))
    assert not out.ok
    assert out.violator_side == "left"
    assert out.violator == (3,)


def test_isolated_right_vertex_found_first():
    out = divisibility_matching((3, 9), (2, 9))
    assert not out.ok
    assert out.violator_side == "right"
    assert out.violator == (2,)


def test_left_violator_when_every_right_vertex_has_neighbors():
    out = divisibility_matching((1, 6), (2, 3))
    assert not out.ok
    assert out.violator_side == "left"
    assert out.violator == (1,)


def test_nontrivial_divisor_matching():
    out = divisibility_matching((6, 10, 15), (2, 5, 5))
    assert out.ok
    left = (6, 10, 15)
    right = (2, 5, 5)
    assert all(left[i] % right[j] == 0 for i, j in out.pairs)


def test_deterministic_across_runs():
    left = (2, 4, 8, 8, 6)
    right = (2, 2, 4, 1, 3)
    first = divisibility_matching(left, right)
    second = divisibility_matching(left, right)
    assert first.ok and second.ok
    assert first.pairs == second.pairs


def test_random_instances_agree_with_brute_force():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randrange(1, 6)
        left = tuple(rng.choice((1, 2, 3, 4, 6, 8, 12)) for _ in range(n))
        right = tuple(rng.choice((1, 2, 3, 4, 6, 8, 12)) for _ in range(n))
        out = divisibility_matching(left, right)
        assert out.ok == _has_perfect(left, right)
        if out.ok:
            assert all(left[i] % right[j] == 0 for i, j in out.pairs)
        else:
            assert _is_deficient(left, right, out.violator_side, out.violator)


def _has_perfect(left, right):
    n = len(left)

    def extend(i, used):
        if i == n:
            return True
        for j in range(n):
            if j not in used and left[i] % right[j] == 0:
                if extend(i + 1, used | {j}):
                    return True
        return False

    return extend(0, frozenset())


def _is_deficient(left, right, side, witness):
    neighbors = set()
    if side == "right":
        for w in witness:
            neighbors.update(i for i, d in enumerate(left) if d % w == 0)
    else:
        for w in witness:
            neighbors.update(j for j, d in enumerate(right) if w % d == 0)
    return len(neighbors) < len(witness)
