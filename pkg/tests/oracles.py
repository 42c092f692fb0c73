"""Independent brute-force oracles used by the test suite.

Nothing here calls into the package's stabilizer-chain, character-table
or block machinery: groups are plain frozensets of image tuples closed
by multiplication, classes come from direct conjugation orbits, and
character degrees come from a separately written common-eigenvector
computation modulo a prime chosen independently of the package's own.
"""

from itertools import combinations
from math import gcd, isqrt


def omult(p, q):
    return tuple(p[i] for i in q)


def oinv(p):
    r = [0] * len(p)
    for i, ip in enumerate(p):
        r[ip] = i
    return tuple(r)


def mulclose(gens):
    """All products of the generators: breadth-first closure."""
    gens = [tuple(g) for g in gens]
    if not gens:
        return frozenset()
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = omult(x, g)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return frozenset(seen)


def brute_classes(elements):
    """Conjugacy classes of a closed element set, as a list of frozensets."""
    elements = set(elements)
    out = []
    remaining = set(elements)
    while remaining:
        x = min(remaining)
        cls = frozenset(omult(omult(g, x), oinv(g)) for g in elements)
        remaining -= cls
        out.append(cls)
    return out


def perm_order(p):
    k, q = 1, p
    ident = tuple(range(len(p)))
    while q != ident:
        q = omult(q, p)
        k += 1
    return k


def all_subgroups(elements):
    """Every subgroup of a closed element set, by closure growth."""
    degree = len(next(iter(elements)))
    ident = tuple(range(degree))
    seen = {frozenset({ident})}
    frontier = [frozenset({ident})]
    while frontier:
        new = []
        for h in frontier:
            for x in elements:
                if x in h:
                    continue
                k = mulclose(list(h) + [x])
                if k not in seen:
                    seen.add(k)
                    new.append(k)
        frontier = new
    return seen


def composition_factor_orders(elements):
    """Orders of the composition factors along one composition series."""
    n = len(elements)
    if n == 1:
        return []
    subs = all_subgroups(elements)
    normals = []
    for h in subs:
        if len(h) in (n,):
            continue
        if all(omult(omult(g, x), oinv(g)) in h for g in elements for x in h):
            normals.append(h)
    top = max(normals, key=len)
    return [n // len(top)] + composition_factor_orders(top)


def is_p_solvable_by_factors(elements, p):
    for f in composition_factor_orders(elements):
        if f % p == 0:
            # a p-solvable factor divisible by p must be a p-group
            m = f
            while m % p == 0:
                m //= p
            if m != 1:
                return False
    return True


def _next_prime_with(e, lower):
    q = lower + 1
    while True:
        if q % e == 1 and all(q % d for d in range(2, isqrt(q) + 1)):
            return q
        q += 1


def character_degrees_common_eigenvector(elements):
    """Irreducible character degrees via common eigenvectors of the class
    matrices, computed modulo an independently chosen prime.

    The class-sum matrices commute and share one-dimensional joint
    eigenspaces whose eigenvalue vectors are the central characters.  A
    separating integer combination of the matrices is diagonalised over
    GF(q) for a prime q = 1 (mod exponent) exceeding 4*sqrt(|G|); each
    degree is then the unique square root below sqrt(|G|) of
    |G| / sum_i w_i w_{i*} / n_i.  All arithmetic is exact.
    """
    elements = set(elements)
    n = len(elements)
    classes = brute_classes(elements)
    classes.sort(key=lambda c: (perm_order(min(c)), len(c), min(c)))
    r = len(classes)
    where = {}
    for i, c in enumerate(classes):
        for x in c:
            where[x] = i
    exponent = 1
    for c in classes:
        o = perm_order(min(c))
        exponent = exponent * o // gcd(exponent, o)
    q = _next_prime_with(exponent, max(4 * isqrt(n) + 1, exponent))

    # structure constants by direct pair counting
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    reps = [min(c) for c in classes]
    for i, ci in enumerate(classes):
        for x in ci:
            xinv = oinv(x)
            for k, zk in enumerate(reps):
                a[i][where[omult(xinv, zk)]][k] += 1

    def separating_matrix(t):
        m = [[0] * r for _ in range(r)]
        for i in range(r):
            w = pow(t, i, q)
            for j in range(r):
                for k in range(r):
                    m[j][k] = (m[j][k] + w * a[i][j][k]) % q
        return m

    def eigenvectors(m):
        vecs = []
        for lam in range(q):
            rows = [[(m[j][k] - (lam if j == k else 0)) % q for k in range(r)] for j in range(r)]
            null = _nullspace_mod(rows, q)
            if len(null) > 1:
                return None
            vecs.extend(null)
        return vecs if len(vecs) == r else None

    t = 1
    while True:
        vecs = eigenvectors(separating_matrix(t))
        if vecs is not None:
            break
        t += 1

    inv_class = [where[oinv(reps[i])] for i in range(r)]
    sizes = [len(c) for c in classes]
    degrees = []
    for w in vecs:
        scale = pow(w[0], q - 2, q)
        w = [x * scale % q for x in w]
        s = sum(w[i] * w[inv_class[i]] * pow(sizes[i], q - 2, q) for i in range(r)) % q
        d2 = n * pow(s, q - 2, q) % q
        root = None
        for d in range(1, isqrt(n) + 1):
            if d * d % q == d2:
                root = d
                break
        assert root is not None, "no admissible degree root"
        degrees.append(root)
    assert sum(d * d for d in degrees) == n
    return sorted(degrees)


def _nullspace_mod(rows, q):
    r = len(rows)
    cols = len(rows[0])
    m = [row[:] for row in rows]
    pivots = []
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, r) if m[i][col] % q), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], q - 2, q)
        m[rank] = [x * inv % q for x in m[rank]]
        for i in range(r):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(m[i][k] - f * m[rank][k]) % q for k in range(cols)]
        pivots.append(col)
        rank += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-m[i][fc]) % q
        basis.append(v)
    return basis


def exhaustive_ibr(candidates, count):
    """The unique size-`count` subset of the candidate Brauer-character
    vectors through which every candidate decomposes with nonnegative
    integer coefficients.  Candidates are (degree, value-tuple) pairs
    whose values support exact equality and arithmetic."""
    hits = []
    for subset in combinations(range(len(candidates)), count):
        basis = [candidates[i] for i in subset]
        if all(_is_nn_combo(c, basis) for c in candidates):
            hits.append(subset)
    assert len(hits) == 1, f"expected a unique spanning subset, found {len(hits)}"
    return hits[0]


def _is_nn_combo(target, basis):
    tdeg, tvals = target
    if tdeg == 0:
        return not any(tvals)
    if not basis:
        return False
    (bdeg, bvals), rest = basis[0], basis[1:]
    for m in range(tdeg // bdeg, -1, -1):
        newdeg = tdeg - m * bdeg
        newvals = tuple(tv - m * bv for tv, bv in zip(tvals, bvals))
        if newdeg == 0:
            if all(v == 0 for v in newvals):
                return True
            continue
        if _is_nn_combo((newdeg, newvals), rest):
            return True
    return False
