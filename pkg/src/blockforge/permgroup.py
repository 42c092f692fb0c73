"""Finite permutation groups with a Schreier-Sims stabilizer chain.

A PermutationGroup is immutable after construction.  The constructor
builds a base-and-strong-generating-set chain, so order and membership
are exact from the start.  Everything here is written for desk scale
(orders up to about 10^5): several operations enumerate elements
outright, and each such function says so in its docstring.

Determinism: no randomness is used anywhere in this module, and every
derived object (conjugacy classes, Sylow subgroups, cores, quotients,
subgroup representatives) is ordered by explicit lexicographic rules,
so repeated runs produce identical results.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from .arith import is_prime, p_part, prime_factors, vp
from .errors import DomainError, InternalCheckError
from .perms import conj, identity, inverse, is_perm, moved_points, mult, order


class _Level:
    """One level of the stabilizer chain: a base point, generators of the
    stabilizer of all earlier base points, and a transversal of the orbit."""

    __slots__ = ("base", "gens", "transversal")

    def __init__(self, base):
        self.base = base
        self.gens = []
        self.transversal = {}

    def rebuild(self, degree):
        ident = identity(degree)
        self.transversal = {self.base: ident}
        queue = [self.base]
        for pt in queue:
            u = self.transversal[pt]
            for s in self.gens:
                np = s[pt]
                if np not in self.transversal:
                    self.transversal[np] = mult(s, u)
                    queue.append(np)


class PermutationGroup:
    """A subgroup of the symmetric group on {0, ..., degree-1}."""

    def __init__(self, degree, generators=(), name=None):
        if degree < 1:
            raise DomainError(f"degree must be positive, got {degree}")
        gens = []
        seen = set()
        for g in generators:
            g = tuple(g)
            if not is_perm(g, degree):
                raise DomainError(f"not a permutation of degree {degree}: {g}")
            if g in seen or g == tuple(range(degree)):
                continue
            seen.add(g)
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        self._levels = _schreier_sims(degree, gens)
        self._order = 1
        for lvl in self._levels:
            self._order *= len(lvl.transversal)
        self._elements = None
        self._element_set = None
        self._classes = None
        self._class_index = None
        self._class_elements = None
        self._hash = None

    def order(self):
        return self._order

    def is_trivial(self):
        return self._order == 1

    def identity(self):
        return identity(self.degree)

    def contains(self, p):
        if len(p) != self.degree:
            return False
        g = tuple(p)
        if not is_perm(g, self.degree):
            return False
        for lvl in self._levels:
            pt = g[lvl.base]
            if pt == lvl.base:
                continue
            u = lvl.transversal.get(pt)
            if u is None:
                return False
            g = mult(inverse(u), g)
        return g == identity(self.degree)

    def elements(self):
        """All elements, sorted lexicographically.  Enumerates the group."""
        if self._elements is None:
            elems = [identity(self.degree)]
            for lvl in reversed(self._levels):
                elems = [mult(u, h) for u in lvl.transversal.values() for h in elems]
            if len(elems) != self._order:
                raise InternalCheckError("transversal product does not match group order")
            self._elements = tuple(sorted(elems))
            self._element_set = frozenset(self._elements)
        return self._elements

    def element_set(self):
        if self._element_set is None:
            self.elements()
        return self._element_set

    def random_element(self, rng):
        return rng.choice(self.elements())

    def is_subgroup_of(self, other):
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def is_abelian(self):
        gens = self.generators
        return all(mult(a, b) == mult(b, a) for i, a in enumerate(gens) for b in gens[i + 1 :])

    def conjugacy_classes(self):
        """Conjugacy classes sorted by (element order, size, representative).

        The representative of each class is its lexicographically smallest
        element.  The identity class always comes first.  Enumerates the group.
        """
        if self._classes is None:
            self._compute_classes()
        return self._classes

    def class_index(self, x):
        """Index of the class containing x.  Enumerates the group."""
        if self._class_index is None:
            self._compute_classes()
        x = tuple(x)
        idx = self._class_index.get(x)
        if idx is None:
            raise DomainError("element does not belong to the group")
        return idx

    def class_elements(self, i):
        if self._class_elements is None:
            self._compute_classes()
        return self._class_elements[i]

    def exponent(self):
        e = 1
        for c in self.conjugacy_classes():
            e = lcm(e, c.element_order)
        return e

    def _compute_classes(self):
        gens = self.generators
        assigned = {}
        raw = []
        for x in self.elements():
            if x in assigned:
                continue
            orbit = [x]
            assigned[x] = len(raw)
            for y in orbit:
                for g in gens:
                    z = conj(g, y)
                    if z not in assigned:
                        assigned[z] = len(raw)
                        orbit.append(z)
            raw.append((x, tuple(sorted(orbit))))
        keyed = sorted(raw, key=lambda pair: (order(pair[0]), len(pair[1]), pair[0]))
        classes = []
        index = {}
        elem_lists = []
        for new_idx, (rep, members) in enumerate(keyed):
            classes.append(
                ConjugacyClass(
                    index=new_idx,
                    representative=rep,
                    size=len(members),
                    element_order=order(rep),
                )
            )
            elem_lists.append(members)
            for m in members:
                index[m] = new_idx
        self._classes = tuple(classes)
        self._class_index = index
        self._class_elements = tuple(elem_lists)

    def __eq__(self, other):
        if not isinstance(other, PermutationGroup):
            return NotImplemented
        return (
            self.degree == other.degree
            and self._order == other._order
            and all(self.contains(g) for g in other.generators)
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, self._order, self.element_set()))
        return self._hash

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"PermutationGroup{label}(degree={self.degree}, order={self._order})"


@dataclass(frozen=True)
class ConjugacyClass:
    index: int
    representative: tuple
    size: int
    element_order: int


def _schreier_sims(degree, gens):
    """Deterministic stabilizer chain construction.

    Base points are chosen as the smallest point moved at each level, and
    Schreier generators are processed in a fixed order, so the chain is a
    pure function of (degree, generator list).
    """
    ident = identity(degree)
    levels = []

    def sift(g, start):
        i = start
        while i < len(levels):
            lvl = levels[i]
            pt = g[lvl.base]
            if pt != lvl.base:
                u = lvl.transversal.get(pt)
                if u is None:
                    return g, i
                g = mult(inverse(u), g)
            i += 1
        return g, len(levels)

    def insert(g, first_level):
        residue, stop = sift(g, first_level)
        if residue == ident:
            return False
        if stop == len(levels):
            levels.append(_Level(min(moved_points(residue))))
            stop = len(levels) - 1
        for j in range(first_level, stop + 1):
            levels[j].gens.append(residue)
            levels[j].rebuild(degree)
        return True

    for g in gens:
        insert(g, 0)

    changed = True
    while changed:
        changed = False
        for j, lvl in enumerate(levels):
            for pt in sorted(lvl.transversal):
                u = lvl.transversal[pt]
                for s in lvl.gens:
                    target = lvl.transversal[s[pt]]
                    schreier = mult(inverse(target), mult(s, u))
                    if insert(schreier, j + 1):
                        changed = True
            if changed:
                break
    return levels


def trivial_group(degree):
    return PermutationGroup(degree, ())


@lru_cache(maxsize=None)
def group_from_elements(degree, elements, name=None):
    """Group generated by the given elements, with a reduced generator list.

    Elements are scanned in sorted order and kept only when they enlarge
    the group built so far, which keeps generator lists short.
    """
    current = trivial_group(degree)
    kept = []
    for x in sorted(set(elements)):
        if not current.contains(x):
            kept.append(x)
            current = PermutationGroup(degree, kept)
    if name is not None:
        current = PermutationGroup(degree, kept, name=name)
    return current


@lru_cache(maxsize=None)
def centralizer(G, x):
    """C_G(x).  Enumerates the group."""
    x = tuple(x)
    if not G.contains(x):
        raise DomainError("element does not belong to the group")
    hits = tuple(g for g in G.elements() if mult(g, x) == mult(x, g))
    return group_from_elements(G.degree, hits)


@lru_cache(maxsize=None)
def centralizer_of_group(G, H):
    """Elements of G commuting with everything in H.

    H does not have to be contained in G; for an external action this
    is the fixed-point subgroup of H acting on G by conjugation.
    Enumerates the group.
    """
    if H.degree != G.degree:
        raise DomainError("degree mismatch between group and subgroup")
    hits = tuple(
        g for g in G.elements() if all(mult(g, h) == mult(h, g) for h in H.generators)
    )
    return group_from_elements(G.degree, hits)


@lru_cache(maxsize=None)
def normalizer(G, H):
    """N_G(H) for a subgroup H <= G.  Enumerates the group."""
    _require_subgroup(G, H)
    hset = H.element_set()
    hits = tuple(
        g for g in G.elements() if all(conj(g, h) in hset for h in H.generators)
    )
    return group_from_elements(G.degree, hits)


def _require_subgroup(G, H):
    if H.degree != G.degree:
        raise DomainError("degree mismatch between group and subgroup")
    if not H.is_subgroup_of(G):
        raise DomainError("not a subgroup")


@lru_cache(maxsize=None)
def normal_closure(G, seeds):
    """Smallest normal subgroup of G containing the seed elements."""
    seeds = tuple(tuple(s) for s in seeds)
    for s in seeds:
        if not G.contains(s):
            raise DomainError("seed element does not belong to the group")
    gens = list(seeds)
    closure = PermutationGroup(G.degree, gens)
    queue = list(seeds)
    for x in queue:
        for g in G.generators:
            y = conj(g, x)
            if not closure.contains(y):
                gens.append(y)
                closure = PermutationGroup(G.degree, gens)
                queue.append(y)
    return closure


def is_normal_in(N, G):
    """Whether N is a normal subgroup of G."""
    _require_subgroup(G, N)
    nset = N.element_set()
    return all(conj(g, n) in nset for g in G.generators for n in N.generators)


@lru_cache(maxsize=None)
def sylow_subgroup(G, p):
    """A Sylow p-subgroup, grown by adjoining p-elements of N_G(P) \\ P.

    While |P| is below the full p-part of |G|, the normalizer N_G(P)
    contains a p-element outside P; adjoining the first such element in
    lexicographic order keeps the construction deterministic.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    target = p_part(G.order(), p)
    P = trivial_group(G.degree)
    while P.order() < target:
        N = normalizer(G, P) if P.order() > 1 else G
        grown = False
        for x in N.elements():
            o = order(x)
            if o == 1 or o % p != 0:
                continue
            y = _p_element_part(x, o, p)
            if not P.contains(y):
                P = PermutationGroup(G.degree, P.generators + (y,))
                grown = True
                break
        if not grown:
            raise InternalCheckError("Sylow growth stalled below the p-part")
    return P


def _p_element_part(x, o, p):
    from .perms import power

    return power(x, o // p_part(o, p))


@lru_cache(maxsize=None)
def p_core(G, p):
    """O_p(G): join of normal closures of classes whose closure is a p-group."""
    return _core(G, p, lambda n: n == p_part(n, p))


@lru_cache(maxsize=None)
def p_prime_core(G, p):
    """O_{p'}(G): join of normal closures of classes whose closure is a p'-group."""
    return _core(G, p, lambda n: n % p != 0)


def _core(G, p, accept):
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    gens = []
    for c in G.conjugacy_classes():
        closure = normal_closure(G, (c.representative,))
        if accept(closure.order()):
            gens.extend(closure.generators)
    result = group_from_elements(G.degree, tuple(gens)) if gens else trivial_group(G.degree)
    if not accept(result.order()):
        raise InternalCheckError("core join left the target class of orders")
    return result


class QuotientAction:
    """G acting by left translation on the left cosets of a normal subgroup."""

    def __init__(self, quotient, cosets, point_of):
        self.quotient = quotient
        self.cosets = cosets
        self.point_of = point_of

    def image_of(self, g):
        """The permutation of cosets induced by g."""
        return tuple(self.point_of[mult(g, rep[0])] for rep in self.cosets)

    def preimage(self, S):
        """Pull a subgroup of the quotient back to a subgroup of G."""
        elems = []
        for i, coset in enumerate(self.cosets):
            if S.contains(self.image_of(coset[0])):
                elems.extend(coset)
        return group_from_elements(len(self.cosets[0][0]), tuple(elems))


@lru_cache(maxsize=None)
def quotient_with_cosets(G, N):
    """Quotient G/N as a permutation group on left cosets, with the coset data.

    Cosets are sorted by their smallest member, so the coset of the
    identity is always point 0.  Enumerates the group.
    """
    if not is_normal_in(N, G):
        raise DomainError("subgroup is not normal")
    nset = N.element_set()
    point_of = {}
    cosets = []
    for x in G.elements():
        if x in point_of:
            continue
        coset = tuple(sorted(mult(x, n) for n in nset))
        idx = len(cosets)
        cosets.append(coset)
        for y in coset:
            point_of[y] = idx
    gen_images = []
    for g in G.generators:
        gen_images.append(tuple(point_of[mult(g, coset[0])] for coset in cosets))
    Q = PermutationGroup(max(len(cosets), 1), gen_images)
    if Q.order() * N.order() != G.order():
        raise InternalCheckError("coset action order mismatch")
    return QuotientAction(Q, tuple(cosets), point_of)


def quotient_action(G, N):
    """The quotient group G/N acting faithfully on cosets of N."""
    return quotient_with_cosets(G, N).quotient


@lru_cache(maxsize=None)
def is_p_solvable(G, p):
    """Whether every composition factor is a p-group or a p'-group,
    decided by peeling O_{p'} and O_p alternately."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if G.order() == 1:
        return True
    K = p_prime_core(G, p)
    if K.order() > 1:
        return is_p_solvable(quotient_action(G, K), p)
    M = p_core(G, p)
    if M.order() > 1:
        return is_p_solvable(quotient_action(G, M), p)
    return False


@lru_cache(maxsize=None)
def subgroups_of_order(G, m):
    """Representatives of G-conjugacy classes of subgroups of order m.

    m must be a prime power; the subgroups are enumerated inside one
    fixed Sylow subgroup (every p-subgroup is conjugate into it) and
    then fused under G-conjugation.  Representatives are the subgroups
    with lexicographically smallest element tuple, sorted likewise.
    Enumerates the group.
    """
    if m == 1:
        return (trivial_group(G.degree),)
    if G.order() % m != 0:
        raise DomainError(f"{m} does not divide the group order {G.order()}")
    ps = prime_factors(m)
    if len(ps) != 1:
        raise DomainError(f"subgroup search requires a prime power, got {m}")
    p = ps[0]
    P = sylow_subgroup(G, p)
    if P.order() % m != 0:
        raise DomainError(f"{m} exceeds the p-part of the group order")
    found = set()
    layer = {frozenset({identity(G.degree)})}
    seen = set(layer)
    while layer:
        nxt = set()
        for hset in layer:
            H = group_from_elements(G.degree, tuple(hset))
            for x in P.elements():
                if x in hset:
                    continue
                K = PermutationGroup(G.degree, H.generators + (x,))
                if K.order() > m:
                    continue
                kset = frozenset(K.element_set())
                if kset in seen:
                    continue
                seen.add(kset)
                if len(kset) == m:
                    found.add(kset)
                else:
                    nxt.add(kset)
        layer = nxt
    reps = []
    remaining = set(found)
    for hset in sorted(found, key=lambda s: tuple(sorted(s))):
        if hset not in remaining:
            continue
        orbit = {frozenset(conj(g, x) for x in hset) for g in G.elements()}
        remaining -= orbit
        reps.append(group_from_elements(G.degree, tuple(sorted(hset))))
    return tuple(reps)


def conjugate_subgroup(H, g):
    return PermutationGroup(H.degree, tuple(conj(g, h) for h in H.generators))


def are_conjugate_subgroups(G, H, K):
    """Whether H^g = K for some g in G.  Enumerates the group."""
    if H.order() != K.order():
        return False
    kset = K.element_set()
    for g in G.elements():
        if all(conj(g, h) in kset for h in H.generators):
            return True
    return False


@lru_cache(maxsize=None)
def intersection(A, B):
    """A n B for groups of equal degree.  Enumerates the smaller group."""
    if A.degree != B.degree:
        raise DomainError("degree mismatch")
    small, big = (A, B) if A.order() <= B.order() else (B, A)
    bigset = big.element_set()
    return group_from_elements(A.degree, tuple(x for x in small.elements() if x in bigset))


@lru_cache(maxsize=None)
def normal_subgroups(G):
    """All normal subgroups, as joins of normal closures of classes.

    Every normal subgroup is a union of conjugacy classes and hence the
    join of the normal closures of the classes it contains, so closing
    the class-closure set under joins finds them all.  Sorted by
    (order, element tuple).  Enumerates the group.
    """
    seeds = []
    seen = set()
    for c in G.conjugacy_classes():
        n = normal_closure(G, (c.representative,))
        key = n.element_set()
        if key not in seen:
            seen.add(key)
            seeds.append(n)
    all_normals = {n.element_set(): n for n in seeds}
    changed = True
    while changed:
        changed = False
        current = list(all_normals.values())
        for i, a in enumerate(current):
            for b in current[i + 1 :]:
                join = group_from_elements(G.degree, a.generators + b.generators)
                key = join.element_set()
                if key not in all_normals:
                    all_normals[key] = join
                    changed = True
    result = sorted(all_normals.values(), key=lambda n: (n.order(), n.elements()))
    return tuple(result)
