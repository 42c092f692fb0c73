"""Ordinary character tables via the Dixon-Schneider method, and the
class-function algebra built on them.

The table is computed exactly: eigenvector data for the class-sum
matrices is found over a prime field GF(q) with q = 1 (mod exponent)
and q squared exceeding 4|G|, degrees are recovered from the second
orthogonality relation, and the actual cyclotomic character values are
lifted through the discrete Fourier sum over power maps.  The finished
table must pass both orthogonality relations exactly or an internal
error is raised.

The construction is fully deterministic: instead of random splitting
vectors, a separating integer combination of the class matrices is
diagonalised by scanning every eigenvalue candidate in GF(q).  The seed
argument is accepted for interface stability but never consulted.
"""

from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .arith import is_prime, multiplicative_order
from .cyclotomic import ONE, ZERO, from_root_combination, rational
from .errors import DomainError, InternalCheckError
from .perms import conj, inverse, mult, power
from .permgroup import group_from_elements, is_normal_in


@lru_cache(maxsize=None)
def structure_constants(G):
    """All class-algebra structure constants a[i][j][k] with
    a_ijk = #{(x, y) in C_i x C_j : xy = z_k} for the fixed class reps."""
    classes = G.conjugacy_classes()
    r = len(classes)
    reps = [c.representative for c in classes]
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for i in range(r):
        for x in G.class_elements(i):
            xinv = inverse(x)
            row = a[i]
            for k in range(r):
                j = G.class_index(mult(xinv, reps[k]))
                row[j][k] += 1
    return tuple(tuple(tuple(row) for row in plane) for plane in a)


def class_multiplication_coefficient(G, i, j, k):
    return structure_constants(G)[i][j][k]


class ClassFunction:
    """An exact class function: one cyclotomic value per conjugacy class."""

    __slots__ = ("group", "values")

    def __init__(self, group, values):
        values = tuple(values)
        if len(values) != len(group.conjugacy_classes()):
            raise DomainError("one value per conjugacy class required")
        self.group = group
        self.values = values

    def degree(self):
        return self.values[0].integer_value()

    def value(self, class_index):
        return self.values[class_index]

    def value_at(self, element):
        return self.values[self.group.class_index(element)]

    def __add__(self, other):
        self._same_group(other)
        return ClassFunction(
            self.group, tuple(a + b for a, b in zip(self.values, other.values))
        )

    def __sub__(self, other):
        self._same_group(other)
        return ClassFunction(
            self.group, tuple(a - b for a, b in zip(self.values, other.values))
        )

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._same_group(other)
            return ClassFunction(
                self.group,
                tuple(a * b for a, b in zip(self.values, other.values)),
            )
        return ClassFunction(self.group, tuple(v * other for v in self.values))

    __rmul__ = __mul__

    def conj(self):
        return ClassFunction(self.group, tuple(v.conj() for v in self.values))

    def galois(self, k):
        return ClassFunction(self.group, tuple(v.galois(k) for v in self.values))

    def conjugate_by(self, g):
        """The class function x -> value(g x g^{-1})."""
        G = self.group
        return ClassFunction(
            G,
            tuple(
                self.values[G.class_index(conj(g, c.representative))]
                for c in G.conjugacy_classes()
            ),
        )

    def _same_group(self, other):
        if other.group != self.group:
            raise DomainError("class functions live on different groups")

    def __eq__(self, other):
        return (
            isinstance(other, ClassFunction)
            and self.group == other.group
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.group, self.values))

    def sort_key(self):
        return (self.degree(), tuple(v.sort_key() for v in self.values))

    def __repr__(self):
        return f"ClassFunction({', '.join(str(v) for v in self.values)})"


def trivial_character(G):
    return ClassFunction(G, (ONE,) * len(G.conjugacy_classes()))


def regular_character(G):
    values = [rational(G.order())]
    values.extend(ZERO for _ in G.conjugacy_classes()[1:])
    return ClassFunction(G, values)


def inner_product(alpha, beta):
    """<alpha, beta> = (1/|G|) sum over classes |C| alpha(x) conj(beta(x))."""
    alpha._same_group(beta)
    G = alpha.group
    total = ZERO
    for c, a, b in zip(G.conjugacy_classes(), alpha.values, beta.values):
        if a.is_zero() or b.is_zero():
            continue
        total = total + c.size * (a * b.conj())
    return total / G.order()


def restrict(chi, H):
    """Restriction of a class function to a subgroup."""
    G = chi.group
    if H == G:
        return chi
    if not H.is_subgroup_of(G):
        raise DomainError("restriction target is not a subgroup")
    return ClassFunction(
        H,
        tuple(
            chi.values[G.class_index(c.representative)]
            for c in H.conjugacy_classes()
        ),
    )


def induce(psi, G):
    """Induction of a class function from a subgroup H to G:
    psi^G(x) = (|C_G(x)| / |H|) * sum of |c| psi(c) over H-classes c
    inside the G-class of x."""
    H = psi.group
    if H == G:
        return psi
    if not H.is_subgroup_of(G):
        raise DomainError("induction source is not a subgroup")
    n = G.order()
    accum = [ZERO] * len(G.conjugacy_classes())
    for c, v in zip(H.conjugacy_classes(), psi.values):
        j = G.class_index(c.representative)
        accum[j] = accum[j] + c.size * v
    out = []
    for c, s in zip(G.conjugacy_classes(), accum):
        out.append(s * Fraction(n // c.size, H.order()))
    return ClassFunction(G, out)


def constituents(alpha):
    """Decomposition of a character into irreducibles: list of
    (irreducible, multiplicity) with nonzero integer multiplicities."""
    table = character_table(alpha.group)
    out = []
    remaining = alpha
    for chi in table.irreducibles:
        m = inner_product(alpha, chi)
        if m.is_zero():
            continue
        if not m.is_rational() or m.rational_value().denominator != 1:
            raise DomainError("class function is not a virtual character")
        k = m.integer_value()
        out.append((chi, k))
        remaining = remaining - k * chi
    if any(not v.is_zero() for v in remaining.values):
        raise InternalCheckError("constituent decomposition does not reconstruct")
    return out


def irr_over(G, N, theta):
    """The irreducible characters of G lying over theta in Irr(N)."""
    table = character_table(G)
    out = []
    for chi in table.irreducibles:
        if not inner_product(restrict(chi, N), theta).is_zero():
            out.append(chi)
    return tuple(out)


def inertia_group(G, N, theta):
    """The stabilizer of theta in G under conjugation; contains N."""
    if theta.group != N:
        raise DomainError("character does not live on the named subgroup")
    if not is_normal_in(N, G):
        raise DomainError("inertia groups are defined over normal subgroups")
    members = [g for g in G.elements() if theta.conjugate_by(g) == theta]
    T = group_from_elements(G.degree, tuple(members))
    if not N.is_subgroup_of(T):
        raise InternalCheckError("inertia group does not contain the subgroup")
    return T


class CharacterTable:
    """The full ordinary character table of a finite permutation group."""

    def __init__(self, group, exponent, power_maps, irreducibles):
        self.group = group
        self.classes = group.conjugacy_classes()
        self.exponent = exponent
        self.power_maps = power_maps
        self.irreducibles = tuple(irreducibles)

    def degrees(self):
        return tuple(chi.degree() for chi in self.irreducibles)

    def index_of(self, chi):
        for i, row in enumerate(self.irreducibles):
            if row == chi:
                return i
        raise DomainError("character is not a row of this table")

    def __repr__(self):
        return (
            f"CharacterTable({self.group!r}, degrees={list(self.degrees())})"
        )


@lru_cache(maxsize=None)
def character_table(G, seed=0):
    """Compute the ordinary character table; deterministic, exact."""
    classes = G.conjugacy_classes()
    r = len(classes)
    n = G.order()
    e = G.exponent()
    a = structure_constants(G)
    sizes = [c.size for c in classes]
    reps = [c.representative for c in classes]
    inverse_class = [G.class_index(inverse(z)) for z in reps]

    rows_mod_q = None
    for q in _dixon_primes(e, n):
        found = _common_eigenvectors(a, r, q)
        if found is not None:
            rows_mod_q = (q, found)
            break
    if rows_mod_q is None:
        raise InternalCheckError("eigenspace splitting failed for all tried primes")
    q, vectors = rows_mod_q

    z = _primitive_root_of_unity(e, q)
    power_class = [
        [G.class_index(power(reps[j], k)) for k in range(e)] for j in range(r)
    ]

    irreducibles = []
    for w in vectors:
        if w[0] % q == 0:
            raise InternalCheckError("central character vanishes on the identity")
        scale = pow(w[0], q - 2, q)
        w = [x * scale % q for x in w]
        s = 0
        for k in range(r):
            s = (s + w[k] * w[inverse_class[k]] * pow(sizes[k], q - 2, q)) % q
        d = _degree_from_norm(n, s, q)
        cbar = [d * w[j] * pow(sizes[j], q - 2, q) % q for j in range(r)]
        values = []
        e_inv = pow(e, q - 2, q)
        zpow = [pow(z, i, q) for i in range(e)]
        for j in range(r):
            coeffs = []
            for t in range(e):
                m = 0
                for k in range(e):
                    m = (m + cbar[power_class[j][k]] * zpow[(-t * k) % e]) % q
                m = m * e_inv % q
                if 2 * m >= q:
                    raise InternalCheckError("lifted multiplicity out of range")
                coeffs.append(m)
            values.append(from_root_combination(e, coeffs))
        irreducibles.append(ClassFunction(G, values))

    irreducibles.sort(key=lambda chi: chi.sort_key())
    table = CharacterTable(G, e, _power_maps(G, e, reps), irreducibles)
    _verify_orthogonality(table, sizes)
    return table


def _dixon_primes(e, n, limit=5):
    out = []
    q = e + 1
    while len(out) < limit:
        if q * q > 4 * n and is_prime(q):
            out.append(q)
        q += max(e, 1)
    return out


def _primitive_root_of_unity(e, q):
    if e == 1:
        return 1
    for z in range(2, q):
        if multiplicative_order(z, q) == e:
            return z
    raise InternalCheckError("no primitive root of unity in the chosen field")


def _degree_from_norm(n, s, q):
    d_squared = n * pow(s, q - 2, q) % q
    for d in range(1, isqrt(n) + 1):
        if d * d % q == d_squared:
            return d
    raise InternalCheckError("no admissible degree for an eigenvector")


def _power_maps(G, e, reps):
    maps = {}
    p = 2
    while p <= e:
        if is_prime(p):
            maps[p] = tuple(G.class_index(power(x, p)) for x in reps)
        p += 1
    return maps


def _common_eigenvectors(a, r, q):
    """Eigenvectors of a separating combination of the class matrices,
    or None if no combination splits completely over GF(q)."""
    matrices = []
    for i in range(r):
        matrices.append([[a[i][j][k] % q for k in range(r)] for j in range(r)])
    for t in range(1, q):
        m = [[0] * r for _ in range(r)]
        weight = 1
        for i in range(r):
            plane = matrices[i]
            for j in range(r):
                row = plane[j]
                mj = m[j]
                for k in range(r):
                    mj[k] = (mj[k] + weight * row[k]) % q
            weight = weight * t % q
        vectors = _eigenvector_scan(m, r, q)
        if vectors is not None:
            return vectors
    return None


def _eigenvector_scan(m, r, q):
    vectors = []
    for lam in range(q):
        shifted = [
            [(m[j][k] - (lam if j == k else 0)) % q for k in range(r)]
            for j in range(r)
        ]
        null = _nullspace(shifted, q)
        if len(null) > 1:
            return None
        vectors.extend(null)
        if len(vectors) > r:
            return None
    return vectors if len(vectors) == r else None


def _nullspace(rows, q):
    r = len(rows)
    m = [row[:] for row in rows]
    pivots = []
    rank = 0
    for col in range(r):
        pivot = next((i for i in range(rank, r) if m[i][col] % q), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], q - 2, q)
        m[rank] = [x * inv % q for x in m[rank]]
        for i in range(r):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(m[i][k] - f * m[rank][k]) % q for k in range(r)]
        pivots.append(col)
        rank += 1
    basis = []
    for fc in range(r):
        if fc in pivots:
            continue
        v = [0] * r
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-m[i][fc]) % q
        basis.append(v)
    return basis


def _verify_orthogonality(table, sizes):
    G = table.group
    n = G.order()
    rows = table.irreducibles
    r = len(rows)
    if r != len(sizes):
        raise InternalCheckError("row count differs from class count")
    for s in range(r):
        for u in range(s, r):
            got = inner_product(rows[s], rows[u])
            want = ONE if s == u else ZERO
            if got != want:
                raise InternalCheckError(
                    f"row orthogonality fails for rows {s}, {u}"
                )
    for j in range(r):
        for k in range(j, r):
            total = ZERO
            for chi in rows:
                total = total + chi.values[j] * chi.values[k].conj()
            want = rational(n // sizes[j]) if j == k else ZERO
            if total != want:
                raise InternalCheckError(
                    f"column orthogonality fails for classes {j}, {k}"
                )
    if rows[0] != trivial_character(G):
        raise InternalCheckError("first table row is not the trivial character")
