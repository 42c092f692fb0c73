"""Irreducible Brauer characters, decomposition matrices and the
modular side of block data.

For p-solvable groups the irreducible Brauer characters are exactly the
restrictions of ordinary irreducibles to p-regular classes, so they are
found by a greedy scan: walk candidate restrictions in ascending degree
order and keep the ones that are not nonnegative integer combinations
of characters kept so far.  Groups that are not p-solvable fall outside
that theorem; for them a stored table is consulted instead, keyed by
the group's canonical class representatives.
"""

import json
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .arith import vp
from .blocks import block_data, p_regular_classes
from .chartab import character_table
from .cyclotomic import Cyclotomic
from .errors import DomainError, InternalCheckError
from .permgroup import is_p_solvable

_FIXTURE_DIR = Path(__file__).parent / "data" / "fixtures"


class BrauerCharacter:
    """A class function on the p-regular classes, in class-index order."""

    __slots__ = ("group", "prime", "values")

    def __init__(self, group, prime, values):
        self.group = group
        self.prime = prime
        self.values = tuple(values)

    def degree(self):
        return self.values[0].integer_value()

    def sort_key(self):
        return (self.degree(),) + tuple(v.sort_key() for v in self.values)

    def __eq__(self, other):
        return (
            isinstance(other, BrauerCharacter)
            and self.group == other.group
            and self.prime == other.prime
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.group, self.prime, self.values))

    def __repr__(self):
        return f"BrauerCharacter(p={self.prime}, degree={self.degree()})"


def restriction_to_p_regular(chi, p):
    """The values of an ordinary character on the p-regular classes."""
    G = chi.group
    return BrauerCharacter(
        G, p, tuple(chi.values[k] for k in p_regular_classes(G, p))
    )


def _is_nonneg_combination(target, basis):
    """Whether target equals a nonnegative integer combination of the
    basis characters, by depth-first search with degree pruning."""

    def search(rest, i):
        deg = rest[0].integer_value()
        if deg == 0:
            return all(v.is_zero() for v in rest)
        if i == len(basis):
            return False
        b = basis[i].values
        top = deg // basis[i].degree()
        for mult in range(top + 1):
            if mult:
                rest = tuple(v - b[j] for j, v in enumerate(rest))
            if search(rest, i + 1):
                return True
        return False

    return search(target.values, 0)


def _greedy_brauer_characters(G, p):
    table = character_table(G)
    seen = set()
    candidates = []
    for chi in table.irreducibles:
        c = restriction_to_p_regular(chi, p)
        if c not in seen:
            seen.add(c)
            candidates.append(c)
    candidates.sort(key=lambda c: c.sort_key())
    accepted = []
    for c in candidates:
        if not _is_nonneg_combination(c, accepted):
            accepted.append(c)
    expected = len(p_regular_classes(G, p))
    if len(accepted) != expected:
        raise InternalCheckError(
            f"found {len(accepted)} Brauer characters,"
            f" expected {expected}"
        )
    return tuple(accepted)


def _fixture_brauer_characters(G, p):
    for path in sorted(_FIXTURE_DIR.glob("*.json")):
        data = json.loads(path.read_text())
        if data["prime"] != p or data["group_degree"] != G.degree:
            continue
        if data["group_order"] != G.order():
            continue
        reps = [tuple(r) for r in data["class_representatives"]]
        if not all(G.contains(r) for r in reps):
            continue
        regular = p_regular_classes(G, p)
        positions = {}
        for rep, values in zip(reps, data["characters_by_class"]):
            positions[G.class_index(rep)] = values
        if sorted(positions) != sorted(regular):
            continue
        characters = []
        for row in range(len(data["characters_by_class"][0])):
            values = []
            for k in regular:
                conductor, coords = positions[k][row]
                values.append(
                    Cyclotomic(
                        conductor,
                        tuple(Fraction(n, d) for n, d in coords),
                    )
                )
            characters.append(BrauerCharacter(G, p, tuple(values)))
        characters.sort(key=lambda c: c.sort_key())
        return tuple(characters)
    return None


def brauer_characters(G, p):
    """The irreducible Brauer characters at p, ascending by degree."""
    if G.order() % p == 0 and not is_p_solvable(G, p):
        stored = _fixture_brauer_characters(G, p)
        if stored is None:
            raise DomainError(
                "no stored Brauer character table for this group;"
                " the lifting method needs a p-solvable group"
            )
        return stored
    return _greedy_brauer_characters(G, p)


def _flatten(values, e):
    out = []
    for v in values:
        out.extend(v.lift_coords(e))
    return out


def _solve_nonneg_integer(columns, target):
    """Solve the exact linear system with the given columns, requiring
    a nonnegative integer solution; None if the system is inconsistent."""
    rows = len(target)
    ncols = len(columns)
    aug = [
        [columns[j][i] for j in range(ncols)] + [target[i]]
        for i in range(rows)
    ]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, rows) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = Fraction(1) / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c]:
                factor = aug[i][c]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] for row in aug[r:]):
        return None
    solution = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        solution[c] = aug[i][-1]
    return solution


class ModularData:
    """Ordinary blocks together with the Brauer characters, the
    decomposition matrix and height data on the modular side."""

    def __init__(self, blockset):
        self.blockset = blockset
        G = blockset.group
        p = blockset.prime
        self.group = G
        self.prime = p
        self.brauer_characters = brauer_characters(G, p)
        self.decomposition = self._decomposition_matrix()
        self.block_of_brauer = self._assign_blocks()
        self._verify_brauer_graph()
        a = vp(G.order(), p)
        self.brauer_heights = tuple(
            vp(phi.degree(), p)
            - (a - blockset.blocks[b].defect)
            for phi, b in zip(self.brauer_characters, self.block_of_brauer)
        )
        if any(h < 0 for h in self.brauer_heights):
            raise InternalCheckError("negative Brauer character height")

    def _decomposition_matrix(self):
        G = self.group
        table = self.blockset.table
        e = G.exponent()
        columns = [
            _flatten(phi.values, e) for phi in self.brauer_characters
        ]
        matrix = []
        for chi in table.irreducibles:
            target = _flatten(
                restriction_to_p_regular(chi, self.prime).values, e
            )
            solution = _solve_nonneg_integer(columns, target)
            if solution is None:
                raise InternalCheckError(
                    "ordinary character does not decompose over the"
                    " Brauer characters"
                )
            row = []
            for d in solution:
                if d.denominator != 1 or d < 0:
                    raise InternalCheckError(
                        "decomposition number is not a nonnegative integer"
                    )
                row.append(int(d))
            matrix.append(tuple(row))
        return tuple(matrix)

    def _assign_blocks(self):
        assignments = []
        for j in range(len(self.brauer_characters)):
            owners = {
                self.blockset.block_of(i).index
                for i, row in enumerate(self.decomposition)
                if row[j]
            }
            if len(owners) != 1:
                raise InternalCheckError(
                    "Brauer character is spread over several blocks"
                )
            assignments.append(owners.pop())
        for b in self.blockset.blocks:
            count = assignments.count(b.index)
            if count < 1:
                raise InternalCheckError("block without a Brauer character")
            if count > len(b.char_indices):
                raise InternalCheckError(
                    "block has more Brauer characters than ordinary ones"
                )
        return tuple(assignments)

    def _verify_brauer_graph(self):
        """Linking ordinary characters through shared Brauer
        constituents must reproduce the block partition exactly."""
        n = len(self.decomposition)
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for j in range(len(self.brauer_characters)):
            linked = [i for i in range(n) if self.decomposition[i][j]]
            for i in linked[1:]:
                parent[find(i)] = find(linked[0])
        components = {}
        for i in range(n):
            components.setdefault(find(i), set()).add(i)
        blocks = {frozenset(b.char_indices) for b in self.blockset.blocks}
        if {frozenset(c) for c in components.values()} != blocks:
            raise InternalCheckError(
                "decomposition linkage disagrees with the block partition"
            )

    def brauer_indices_of_block(self, block):
        return tuple(
            j
            for j, b in enumerate(self.block_of_brauer)
            if b == block.index
        )

    def height_zero_brauer(self, block):
        return tuple(
            j
            for j in self.brauer_indices_of_block(block)
            if self.brauer_heights[j] == 0
        )

    def height_zero_brauer_degrees(self, block):
        return tuple(
            self.brauer_characters[j].degree()
            for j in self.height_zero_brauer(block)
        )


@lru_cache(maxsize=None)
def _modular_data_cached(G, p, conductor):
    return ModularData(block_data(G, p, conductor))


def modular_data(G, p, conductor=None):
    """Modular character data for G at p under the session conductor."""
    e = G.exponent()
    if conductor is None:
        conductor = e
    if conductor % e:
        raise DomainError("conductor must be a multiple of the group exponent")
    return _modular_data_cached(G, p, conductor)
