"""Finite field extensions GF(p^f) and reduction of cyclotomic integers.

The field GF(p^f) is presented as polynomials over GF(p) modulo the
lexicographically smallest monic irreducible of degree f, where
polynomials are compared by their coefficient tuples read from the
highest non-leading power down to the constant (equivalently, by the
integer whose base-p digits are the coefficients).  Elements are
coefficient tuples, constant term first.

A ReductionMap fixes, once per (conductor, prime) pair, the maximal
ideal above p used to reduce algebraic integers of Q(zeta_e): the
p-power part of a root of unity collapses to 1, and zeta of the p'-part
e' goes to a fixed element u of exact multiplicative order e'.
"""

import random

from .arith import is_prime, multiplicative_order, p_part, prime_factors, vp
from .cyclotomic import Cyclotomic, rational, zeta
from .errors import DomainError, InternalCheckError


class FiniteField:
    """GF(p^f) with a deterministic modulus polynomial."""

    def __init__(self, p, f):
        if not is_prime(p):
            raise DomainError("characteristic must be prime")
        if f < 1:
            raise DomainError("extension degree must be positive")
        self.p = p
        self.f = f
        self.size = p**f
        self.modulus = _smallest_irreducible(p, f)
        self.zero = FFElement(self, (0,) * f)
        self.one = FFElement(self, (1,) + (0,) * (f - 1))

    def element(self, coeffs):
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.f:
            raise DomainError("coefficient count does not match the degree")
        return FFElement(self, coeffs)

    def from_integer(self, n):
        return FFElement(self, (n % self.p,) + (0,) * (self.f - 1))

    def elements(self):
        out = []
        for code in range(self.size):
            coeffs = []
            m = code
            for _ in range(self.f):
                coeffs.append(m % self.p)
                m //= self.p
            out.append(FFElement(self, tuple(coeffs)))
        return out

    def element_of_order(self, n):
        """The encoding-smallest element of exact multiplicative order n."""
        if (self.size - 1) % n:
            raise DomainError("order does not divide the group order")
        for x in self.elements():
            if x == self.zero:
                continue
            if x.multiplicative_order() == n:
                return x
        raise InternalCheckError(f"no element of order {n} found")

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.f == other.f
        )

    def __hash__(self):
        return hash((self.p, self.f))

    def __repr__(self):
        return f"GF({self.p}^{self.f})" if self.f > 1 else f"GF({self.p})"


class FFElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _check(self, other):
        if not isinstance(other, FFElement) or other.field != self.field:
            raise DomainError("elements belong to different fields")

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        return FFElement(
            self.field,
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        return FFElement(
            self.field,
            tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            p = self.field.p
            return FFElement(
                self.field, tuple(a * other % p for a in self.coeffs)
            )
        self._check(other)
        p = self.field.p
        f = self.field.f
        raw = [0] * (2 * f - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                raw[i + j] += a * b
        modulus = self.field.modulus
        for k in range(2 * f - 2, f - 1, -1):
            c = raw[k] % p
            if c:
                for i in range(f):
                    raw[k - f + i] -= c * modulus[i]
            raw[k] = 0
        return FFElement(self.field, tuple(raw[i] % p for i in range(f)))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        if self == self.field.zero:
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.field.size - 2)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def multiplicative_order(self):
        if self.is_zero():
            raise DomainError("zero has no multiplicative order")
        n = self.field.size - 1
        for q in prime_factors(n):
            while n % q == 0 and self ** (n // q) == self.field.one:
                n //= q
        return n

    def __eq__(self, other):
        return (
            isinstance(other, FFElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.field.f, self.coeffs))

    def __str__(self):
        if self.field.f == 1:
            return str(self.coeffs[0])
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{k}" if c != 1 else f"t^{k}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"FFElement({self.field!r}, {self})"


def _smallest_irreducible(p, f):
    """Monic irreducible of degree f over GF(p) with the smallest
    coefficient encoding; constant term first, leading 1 omitted."""
    if f == 1:
        return (0,)
    for code in range(p**f):
        coeffs = []
        m = code
        for _ in range(f):
            coeffs.append(m % p)
            m //= p
        if _is_irreducible(tuple(coeffs), p, f):
            return tuple(coeffs)
    raise InternalCheckError("no irreducible polynomial found")


def _is_irreducible(coeffs, p, f):
    if coeffs[0] == 0:
        return False
    full = list(coeffs) + [1]
    for deg in range(1, f // 2 + 1):
        for code in range(p**deg):
            div = []
            m = code
            for _ in range(deg):
                div.append(m % p)
                m //= p
            div.append(1)
            if _poly_divides(div, full, p):
                return False
    return True


def _poly_divides(div, poly, p):
    rem = list(poly)
    dd = len(div) - 1
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k] % p
        if c:
            for i in range(dd + 1):
                rem[k - dd + i] = (rem[k - dd + i] - c * div[i]) % p
    return not any(c % p for c in rem)


class ReductionMap:
    """Reduction of algebraic integers in Q(zeta_e) modulo a fixed
    maximal ideal above p, landing in GF(p^f).

    f is the multiplicative order of p modulo the p'-part e' of e; the
    chosen root image u is the encoding-smallest element of exact order
    e'.  Roots of unity of p-power order collapse to 1.
    """

    def __init__(self, e, p):
        if e < 1:
            raise DomainError("conductor must be positive")
        if not is_prime(p):
            raise DomainError("reduction prime must be prime")
        self.e = e
        self.p = p
        self.e_prime = e // p_part(e, p)
        self.f = multiplicative_order(p, self.e_prime) if self.e_prime > 1 else 1
        self.field = FiniteField(p, self.f)
        self.u = self.field.element_of_order(self.e_prime)
        a = vp(e, p)
        self.alpha = pow(p**a, -1, self.e_prime) if self.e_prime > 1 else 0
        self._u_powers = [self.field.one]
        for _ in range(self.e_prime - 1):
            self._u_powers.append(self._u_powers[-1] * self.u)

    def reduce(self, x):
        """Image of an algebraic integer in the residue field."""
        if isinstance(x, int):
            return self.field.from_integer(x)
        if not isinstance(x, Cyclotomic):
            raise DomainError("can only reduce cyclotomic integers")
        if not x.is_algebraic_integer():
            raise DomainError("cannot reduce a non-integral value")
        if self.e % x.conductor:
            raise DomainError("value lies outside the source field")
        step = self.e // x.conductor
        out = self.field.zero
        for j, c in enumerate(x.coords):
            if not c:
                continue
            k = (self.alpha * j * step) % self.e_prime
            out = out + self._u_powers[k] * c.numerator
        return out

    def __repr__(self):
        return f"ReductionMap(e={self.e}, p={self.p}, field={self.field!r})"


def build_reduction(e, p, seed=0):
    """Construct the reduction map for conductor e above p, and verify
    the ring homomorphism property on seeded samples."""
    rmap = ReductionMap(e, p)
    rng = random.Random(seed)
    root = zeta(e)
    if not rmap.reduce(root ** _exact_power(e, p)) == rmap.field.one:
        raise InternalCheckError("p-power part of the root does not map to 1")
    for _ in range(32):
        x = _random_integer_value(rng, e)
        y = _random_integer_value(rng, e)
        if rmap.reduce(x + y) != rmap.reduce(x) + rmap.reduce(y):
            raise InternalCheckError("reduction is not additive")
        if rmap.reduce(x * y) != rmap.reduce(x) * rmap.reduce(y):
            raise InternalCheckError("reduction is not multiplicative")
    if rmap.e_prime > 1 and rmap.u.multiplicative_order() != rmap.e_prime:
        raise InternalCheckError("root image has the wrong order")
    return rmap


def _exact_power(e, p):
    out = 1
    while e % p == 0:
        e //= p
    return e


def _random_integer_value(rng, e):
    x = rational(0)
    for _ in range(3):
        x = x + rng.randrange(-4, 5) * zeta(e, rng.randrange(e))
    return x
