"""Derive the irreducible Brauer characters of A5 at p = 2 and write
them to src/blockforge/data/fixtures/a5_p2_ibr.json.

A5 is the image of SL(2,4) acting on the projective line over GF(4),
and that action is faithful because the center of SL(2,4) is trivial in
characteristic 2.  The simple modules in defining characteristic are
the trivial module, the natural 2-dimensional module, its Frobenius
twist, and their tensor product.  Each Brauer character value is the
sum of the lifts of the eigenvalues of the acting matrix: eigenvalues
live in GF(16), and the lift sends the chosen generator w of GF(16)^*
to a primitive 15th root of unity.

Run from the repository root:

    python3 scripts/derive_a5_mod2_ibr.py
"""

import json
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from blockforge.blocks import p_regular_classes
from blockforge.chartab import character_table
from blockforge.cyclotomic import ONE, Cyclotomic, rational, zeta
from blockforge.finitefield import FiniteField
from blockforge.permgroup import PermutationGroup

OUT = (
    Path(__file__).resolve().parent.parent
    / "src"
    / "blockforge"
    / "data"
    / "fixtures"
    / "a5_p2_ibr.json"
)


def alternating5():
    return PermutationGroup(5, [(1, 2, 0, 3, 4), (1, 2, 3, 4, 0)], name="A5")


def special_linear_2_4():
    field = FiniteField(2, 2)
    elements = field.elements()
    matrices = []
    for a in elements:
        for b in elements:
            for c in elements:
                for d in elements:
                    if a * d - b * c == field.one:
                        matrices.append((a, b, c, d))
    assert len(matrices) == 60
    return field, matrices


def projective_points(field):
    points = [(field.one, y) for y in field.elements()]
    points.append((field.zero, field.one))
    return points


def normalize(x, y, field):
    if x != field.zero:
        return (field.one, y * x.inverse())
    return (field.zero, field.one)


def permutation_of(matrix, points, field):
    a, b, c, d = matrix
    images = []
    for x, y in points:
        images.append(normalize(a * x + b * y, c * x + d * y, field))
    return tuple(points.index(q) for q in images)


def eigenvalue_lifts(matrix, field, big, embed, log):
    """Lift of each eigenvalue of the matrix to a root of unity."""
    a, b, c, d = matrix
    trace = embed[a + d]
    if trace == big.zero:
        return [ONE, ONE]
    roots = [
        lam
        for lam in big.elements()
        if lam * lam + trace * lam + big.one == big.zero
    ]
    assert len(roots) == 2
    return [zeta(15, log[lam]) for lam in roots]


def main():
    group = alternating5()
    field, matrices = special_linear_2_4()
    points = projective_points(field)

    perm_to_matrix = {}
    for m in matrices:
        perm_to_matrix[permutation_of(m, points, field)] = m
    assert len(perm_to_matrix) == 60
    assert set(perm_to_matrix) == group.element_set()

    big = FiniteField(2, 4)
    w = big.element_of_order(15)
    log = {}
    power = big.one
    for j in range(15):
        log[power] = j
        power = power * w
    g3 = w**5
    u = field.element_of_order(3)
    embed = {
        field.zero: big.zero,
        field.one: big.one,
        u: g3,
        u * u: g3 * g3,
    }
    for x in field.elements():
        for y in field.elements():
            assert embed[x + y] == embed[x] + embed[y]
            assert embed[x * y] == embed[x] * embed[y]

    def frobenius(matrix):
        return tuple(entry * entry for entry in matrix)

    regular = p_regular_classes(group, 2)
    reps = [group.conjugacy_classes()[k].representative for k in regular]

    by_class = []
    for rep in reps:
        m = perm_to_matrix[rep]
        natural = eigenvalue_lifts(m, field, big, embed, log)
        twisted = eigenvalue_lifts(frobenius(m), field, big, embed, log)
        beta_nat = natural[0] + natural[1]
        beta_twist = twisted[0] + twisted[1]
        row = [rational(1), beta_nat, beta_twist, beta_nat * beta_twist]
        by_class.append(
            [
                [v.conductor, [[f.numerator, f.denominator] for f in v.coords]]
                for v in row
            ]
        )

    identity_row = [rebuild(entry) for entry in by_class[0]]
    assert [v.integer_value() for v in identity_row] == [1, 2, 2, 4]
    assert sorted(character_table(group).degrees()) == [1, 3, 3, 4, 5]

    payload = {
        "group_degree": 5,
        "group_order": 60,
        "prime": 2,
        "class_representatives": [list(r) for r in reps],
        "characters_by_class": by_class,
        "derivation": "scripts/derive_a5_mod2_ibr.py",
    }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(payload, indent=1) + "\n")
    print(f"wrote {OUT}")
    for rep, entry in zip(reps, by_class):
        print(rep, [str(rebuild(v)) for v in entry])

    from blockforge.modular import modular_data

    data = modular_data(group, 2)
    print("degrees:", [phi.degree() for phi in data.brauer_characters])
    print("decomposition rows:", data.decomposition)


def rebuild(serialized):
    conductor, coords = serialized
    return Cyclotomic(
        conductor, tuple(Fraction(n, d) for n, d in coords)
    )


if __name__ == "__main__":
    main()
