"""p-blocks over a fixed maximal ideal: partition, defects, defect
groups, idempotents, Brauer homomorphism, block induction, Brauer
correspondents, dimensions and covering.

All block data for one verification session is computed under a single
reduction map whose conductor is the exponent of the top-level group,
so the blocks of every subgroup live over the same maximal ideal and
block induction between them is meaningful.
"""

from functools import lru_cache

from .arith import p_part, vp
from .chartab import (
    ClassFunction,
    character_table,
    constituents,
    restrict,
    structure_constants,
)
from .cyclotomic import rational
from .errors import DomainError, InternalCheckError
from .finitefield import build_reduction
from .permgroup import (
    centralizer,
    centralizer_of_group,
    is_normal_in,
    normalizer,
    subgroups_of_order,
    sylow_subgroup,
    trivial_group,
)
from .perms import inverse as perm_inverse


@lru_cache(maxsize=None)
def shared_reduction(e, p):
    """The session-wide reduction map for conductor e above p."""
    return build_reduction(e, p)


def central_character(chi):
    """The central character of an irreducible: class sum values
    omega(C) = |C| chi(x) / chi(1), all algebraic integers."""
    G = chi.group
    d = chi.degree()
    values = []
    for c, v in zip(G.conjugacy_classes(), chi.values):
        omega = v * rational(c.size) / d
        if not omega.is_algebraic_integer():
            raise InternalCheckError(
                "central character value is not an algebraic integer"
            )
        values.append(omega)
    return tuple(values)


def p_regular_classes(G, p):
    """Indices of the classes of elements of order coprime to p."""
    return tuple(
        c.index for c in G.conjugacy_classes() if c.element_order % p != 0
    )


class Block:
    """One p-block: its characters, defect, invariants and field data."""

    __slots__ = (
        "blockset",
        "index",
        "char_indices",
        "defect",
        "dim",
        "reduced_central",
        "idempotent",
        "heights",
        "height_zero",
        "_defect_group",
    )

    def __init__(self, blockset, index, char_indices, reduced_central):
        self.blockset = blockset
        self.index = index
        self.char_indices = tuple(char_indices)
        self.reduced_central = reduced_central
        G = blockset.group
        p = blockset.prime
        degrees = [blockset.table.irreducibles[i].degree() for i in char_indices]
        a = vp(G.order(), p)
        self.defect = a - min(vp(d, p) for d in degrees)
        self.dim = sum(d * d for d in degrees)
        self.heights = tuple(vp(d, p) - (a - self.defect) for d in degrees)
        if any(h < 0 for h in self.heights):
            raise InternalCheckError("negative character height")
        self.height_zero = tuple(
            i for i, h in zip(self.char_indices, self.heights) if h == 0
        )
        if not self.height_zero:
            raise InternalCheckError("block has no height-zero character")
        self.idempotent = None
        self._defect_group = None

    def characters(self):
        table = self.blockset.table
        return tuple(table.irreducibles[i] for i in self.char_indices)

    def degrees(self):
        table = self.blockset.table
        return tuple(table.irreducibles[i].degree() for i in self.char_indices)

    def height_zero_degrees(self):
        table = self.blockset.table
        return tuple(table.irreducibles[i].degree() for i in self.height_zero)

    def is_principal(self):
        return 0 in self.char_indices

    def defect_group(self):
        if self._defect_group is None:
            self._defect_group = _defect_group_brauer(self)
        return self._defect_group

    def __eq__(self, other):
        return (
            isinstance(other, Block)
            and self.blockset.group == other.blockset.group
            and self.blockset.prime == other.blockset.prime
            and self.char_indices == other.char_indices
        )

    def __hash__(self):
        return hash(
            (self.blockset.group, self.blockset.prime, self.char_indices)
        )

    def __repr__(self):
        return (
            f"Block(p={self.blockset.prime}, degrees={list(self.degrees())},"
            f" defect={self.defect})"
        )


class BlockSet:
    """All p-blocks of one group under one reduction map."""

    def __init__(self, group, prime, rmap):
        self.group = group
        self.prime = prime
        self.rmap = rmap
        self.table = character_table(group)
        self.blocks = self._partition()
        self._verify_idempotents()
        if sum(b.dim for b in self.blocks) != group.order():
            raise InternalCheckError("block dimensions do not sum to the order")

    def _partition(self):
        buckets = {}
        for i, chi in enumerate(self.table.irreducibles):
            omega = central_character(chi)
            lam = tuple(self.rmap.reduce(v) for v in omega)
            buckets.setdefault(lam, []).append(i)
        ordered = sorted(buckets.items(), key=lambda kv: min(kv[1]))
        return tuple(
            Block(self, idx, members, lam)
            for idx, (lam, members) in enumerate(ordered)
        )

    def block_of(self, char_index):
        for b in self.blocks:
            if char_index in b.char_indices:
                return b
        raise DomainError("character index outside the table")

    def block_with_central(self, lam):
        for b in self.blocks:
            if b.reduced_central == lam:
                return b
        return None

    def _verify_idempotents(self):
        field = self.rmap.field
        r = len(self.group.conjugacy_classes())
        total = [field.zero] * r
        for b in self.blocks:
            coeffs = block_idempotent(b)
            for k in range(r):
                total[k] = total[k] + coeffs[k]
            square = _class_algebra_product(self.group, coeffs, coeffs, field)
            if square != tuple(coeffs):
                raise InternalCheckError("block idempotent is not idempotent")
        identity_coeffs = tuple(
            field.one if k == 0 else field.zero for k in range(r)
        )
        if tuple(total) != identity_coeffs:
            raise InternalCheckError("block idempotents do not sum to one")

    def __repr__(self):
        return (
            f"BlockSet({self.group!r}, p={self.prime},"
            f" blocks={len(self.blocks)})"
        )


@lru_cache(maxsize=None)
def _block_data_cached(G, p, conductor):
    return BlockSet(G, p, shared_reduction(conductor, p))


def block_data(G, p, conductor=None):
    """Blocks of G at p; pass the top-level group's exponent as the
    conductor so subgroup data shares the session's reduction map."""
    e = G.exponent()
    if conductor is None:
        conductor = e
    if conductor % e:
        raise DomainError("conductor must be a multiple of the group exponent")
    return _block_data_cached(G, p, conductor)


def block_partition(G, p, rmap):
    """The list of p-blocks of G under the given reduction map."""
    return block_data(G, p, rmap.e).blocks


def block_idempotent(block):
    """Idempotent coefficients of the block on the class-sum basis, as
    residue field elements; the exact coefficients are p-local."""
    if block.idempotent is not None:
        return block.idempotent
    bs = block.blockset
    G = bs.group
    p = bs.prime
    rmap = bs.rmap
    table = bs.table
    classes = G.conjugacy_classes()
    n = G.order()
    a = vp(n, p)
    m_part = n // p_part(n, p)
    inv_m = rmap.field.from_integer(m_part).inverse()
    inverse_class = [
        G.class_index(perm_inverse(c.representative)) for c in classes
    ]
    coeffs = []
    for k in range(len(classes)):
        total = rational(0)
        for i in block.char_indices:
            chi = table.irreducibles[i]
            total = total + chi.degree() * chi.values[inverse_class[k]]
        local = total / p_part(n, p) if a else total
        if not local.is_algebraic_integer():
            raise InternalCheckError("idempotent coefficient is not p-local")
        coeffs.append(rmap.reduce(local) * inv_m)
    block.idempotent = tuple(coeffs)
    return block.idempotent


def _class_algebra_product(G, u, v, field):
    a = structure_constants(G)
    r = len(u)
    out = [field.zero] * r
    for i in range(r):
        if u[i].is_zero():
            continue
        for j in range(r):
            if v[j].is_zero():
                continue
            uv = u[i] * v[j]
            row = a[i][j]
            for k in range(r):
                if row[k]:
                    out[k] = out[k] + uv * row[k]
    return tuple(out)


def brauer_image_is_nonzero(block, Q):
    """Whether the Brauer homomorphism at Q keeps the block idempotent
    alive: some class with a nonzero coefficient must meet C_G(Q)."""
    G = block.blockset.group
    coeffs = block_idempotent(block)
    cset = centralizer_of_group(G, Q).element_set()
    for k in range(len(G.conjugacy_classes())):
        if coeffs[k].is_zero():
            continue
        if any(x in cset for x in G.class_elements(k)):
            return True
    return False


def _defect_group_brauer(block):
    """Defect group via the Brauer homomorphism: the unique conjugacy
    class of subgroups of order p^d whose Brauer image is nonzero."""
    bs = block.blockset
    G = bs.group
    p = bs.prime
    if block.defect == 0:
        return trivial_group(G.degree)
    candidates = subgroups_of_order(G, p**block.defect)
    hits = [Q for Q in candidates if brauer_image_is_nonzero(block, Q)]
    if len(hits) != 1:
        raise InternalCheckError(
            f"expected one defect group class, found {len(hits)}"
        )
    return hits[0]


def defect_group_via_defect_classes(block):
    """Independent defect-group computation: a Sylow p-subgroup of the
    centralizer of a p-regular defect-class representative."""
    bs = block.blockset
    G = bs.group
    p = bs.prime
    lam = block.reduced_central
    for k in p_regular_classes(G, p):
        if lam[k].is_zero():
            continue
        c = G.conjugacy_classes()[k]
        cent = centralizer(G, c.representative)
        if vp(cent.order(), p) == block.defect:
            return sylow_subgroup(cent, p)
    raise InternalCheckError("no p-regular defect class found")


def induced_central(b, G):
    """The induced central function lambda^G on the classes of G, or
    None when the induced function is not multiplicative."""
    H = b.blockset.group
    field = b.blockset.rmap.field
    hclasses = H.conjugacy_classes()
    hset = H.element_set()
    values = []
    for c in G.conjugacy_classes():
        total = field.zero
        seen_h_classes = set()
        for x in G.class_elements(c.index):
            if x in hset:
                hidx = H.class_index(x)
                if hidx not in seen_h_classes:
                    seen_h_classes.add(hidx)
                    total = total + b.reduced_central[hidx]
        values.append(total)
    values = tuple(values)
    a = structure_constants(G)
    r = len(values)
    for i in range(r):
        for j in range(r):
            rhs = field.zero
            for k in range(r):
                if a[i][j][k]:
                    rhs = rhs + values[k] * a[i][j][k]
            if values[i] * values[j] != rhs:
                return None
    return values


def induced_block(b, G):
    """Brauer induction b^G: the block of G whose central character is
    the induced one, or None when induction is undefined."""
    H = b.blockset.group
    if H == G:
        return b
    values = induced_central(b, G)
    if values is None:
        return None
    target = block_data(G, b.blockset.prime, b.blockset.rmap.e)
    found = target.block_with_central(values)
    if found is None:
        raise InternalCheckError(
            "induced central character matches no block of the big group"
        )
    return found


def brauer_correspondent(block):
    """The unique block b of N_G(D) with defect group D and b^G = B."""
    bs = block.blockset
    G = bs.group
    D = block.defect_group()
    H = normalizer(G, D)
    local = block_data(H, bs.prime, bs.rmap.e)
    hits = []
    for b in local.blocks:
        if b.defect != block.defect:
            continue
        if b.defect and b.defect_group() != D:
            continue
        if induced_block(b, G) == block:
            hits.append(b)
    if len(hits) != 1:
        raise InternalCheckError(
            f"Brauer correspondent not unique: {len(hits)} candidates"
        )
    return hits[0]


def covered_blocks(block, N):
    """Blocks of the normal subgroup N covered by the given block; the
    result is checked to be a single orbit under conjugation."""
    bs = block.blockset
    G = bs.group
    if not is_normal_in(N, G):
        raise DomainError("covering is only defined over a normal subgroup")
    local = block_data(N, bs.prime, bs.rmap.e)
    covered = []
    for chi in block.characters():
        for theta, _ in constituents(restrict(chi, N)):
            b = local.block_of(local.table.index_of(theta))
            if b not in covered:
                covered.append(b)
    orbit = {covered[0]}
    frontier = [covered[0]]
    while frontier:
        b = frontier.pop()
        theta = b.characters()[0]
        for g in G.generators:
            image = theta.conjugate_by(g)
            target = local.block_of(local.table.index_of(image))
            if target not in orbit:
                orbit.add(target)
                frontier.append(target)
    if orbit != set(covered):
        raise InternalCheckError("covered blocks do not form a single orbit")
    return tuple(covered)
