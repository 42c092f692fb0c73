"""Exact arithmetic in cyclotomic fields Q(zeta_e).

Values are stored on the power basis 1, z, ..., z^(phi(e)-1) of the
field with the smallest possible conductor e, with Fraction
coordinates.  Keeping every value at its true conductor makes equality
structural: two equal values always have the same conductor and the
same coordinate tuple, so values can be hashed and sorted
deterministically.

The minimal conductor is found by descending through the divisors of
the working conductor in increasing order; the first divisor d whose
field contains the value is its conductor, because the set of such
divisors is closed under gcd (Q(zeta_a) with Q(zeta_b) intersect in
Q(zeta_gcd(a,b))).
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DomainError


@lru_cache(maxsize=None)
def euler_phi(n):
    out = n
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            out -= out // d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out -= out // m
    return out


@lru_cache(maxsize=None)
def divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e):
    """Integer coefficients of the e-th cyclotomic polynomial, low degree
    first, computed by exact division of x^e - 1 by the proper-divisor
    factors."""
    poly = [-1] + [0] * (e - 1) + [1]
    for d in divisors(e):
        if d == e:
            continue
        poly = _polydiv_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _polydiv_exact(num, den):
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(out) - 1, -1, -1):
        coefficient, remainder = divmod(num[shift + len(den) - 1], den[-1])
        if remainder:
            raise ArithmeticError("inexact polynomial division")
        out[shift] = coefficient
        for i, c in enumerate(den):
            num[shift + i] -= coefficient * c
    if any(num):
        raise ArithmeticError("nonzero polynomial remainder")
    return out


@lru_cache(maxsize=None)
def _power_basis(e):
    """Coordinates of z^k for k = 0..e-1 on the power basis mod the
    cyclotomic polynomial, as tuples of Fractions."""
    d = euler_phi(e)
    phi = cyclotomic_polynomial(e)
    # x^d = -(phi[0] + phi[1] x + ... + phi[d-1] x^(d-1))
    top = [Fraction(-c) for c in phi[:d]]
    rows = []
    current = [Fraction(0)] * d
    current[0] = Fraction(1)
    for _ in range(e):
        rows.append(tuple(current))
        nxt = [Fraction(0)] * d
        carry = current[d - 1]
        for i in range(d - 1):
            nxt[i + 1] = current[i]
        if carry:
            for i in range(d):
                nxt[i] += carry * top[i]
        current = nxt
    return tuple(rows)


def _solve_exact(columns, target):
    """Solve sum_j a_j * columns[j] = target over Q; None if inconsistent."""
    rows = len(target)
    cols = len(columns)
    m = [[columns[j][i] for j in range(cols)] + [target[i]] for i in range(rows)]
    pivots = []
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, rows) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(rows):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
    for i in range(rank, rows):
        if m[i][cols]:
            return None
    solution = [Fraction(0)] * cols
    for i, col in enumerate(pivots):
        solution[col] = m[i][cols]
    return solution


class Cyclotomic:
    """An exact element of a cyclotomic field, at its minimal conductor."""

    __slots__ = ("conductor", "coords")

    def __init__(self, conductor, coords, normalized=False):
        if normalized:
            self.conductor = conductor
            self.coords = coords
            return
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != euler_phi(conductor):
            raise DomainError("coordinate count does not match the conductor")
        conductor, coords = _canonical(conductor, coords)
        self.conductor = conductor
        self.coords = coords

    def is_rational(self):
        return self.conductor == 1

    def rational_value(self):
        if self.conductor != 1:
            raise DomainError("value is irrational")
        return self.coords[0]

    def integer_value(self):
        q = self.rational_value()
        if q.denominator != 1:
            raise DomainError("value is not an integer")
        return q.numerator

    def is_zero(self):
        return self.conductor == 1 and self.coords[0] == 0

    def is_algebraic_integer(self):
        return all(c.denominator == 1 for c in self.coords)

    def lift_coords(self, e):
        """Coordinates of this value on the power basis of conductor e."""
        if e % self.conductor:
            raise DomainError("conductor does not divide the requested one")
        if e == self.conductor:
            return self.coords
        basis = _power_basis(e)
        step = e // self.conductor
        out = [Fraction(0)] * euler_phi(e)
        for j, c in enumerate(self.coords):
            if c:
                row = basis[(j * step) % e]
                for i in range(len(out)):
                    out[i] += c * row[i]
        return tuple(out)

    def galois(self, k):
        """Image under the field automorphism sending z to z^k."""
        e = self.conductor
        if gcd(k, e) != 1:
            raise DomainError("automorphism exponent not coprime to conductor")
        basis = _power_basis(e)
        out = [Fraction(0)] * euler_phi(e)
        for j, c in enumerate(self.coords):
            if c:
                row = basis[(j * k) % e]
                for i in range(len(out)):
                    out[i] += c * row[i]
        return Cyclotomic(e, tuple(out))

    def conj(self):
        """Complex conjugate (z maps to its inverse)."""
        return self.galois(self.conductor - 1) if self.conductor > 1 else self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        e = _lcm(self.conductor, other.conductor)
        a = self.lift_coords(e)
        b = other.lift_coords(e)
        return Cyclotomic(e, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(
            self.conductor, tuple(-c for c in self.coords), normalized=True
        )

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.conductor == 1:
            q = self.coords[0]
            return Cyclotomic(
                other.conductor, tuple(q * c for c in other.coords)
            )
        if other.conductor == 1:
            q = other.coords[0]
            return Cyclotomic(self.conductor, tuple(q * c for c in self.coords))
        e = _lcm(self.conductor, other.conductor)
        a = self.lift_coords(e)
        b = other.lift_coords(e)
        basis = _power_basis(e)
        d = euler_phi(e)
        out = [Fraction(0)] * d
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                row = basis[(i + j) % e] if i + j >= d else None
                if row is None:
                    out[i + j] += ai * bj
                else:
                    f = ai * bj
                    for t in range(d):
                        out[t] += f * row[t]
        return Cyclotomic(e, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.conductor == 1:
            return Cyclotomic(1, (1 / self.coords[0],), normalized=True)
        e = self.conductor
        d = euler_phi(e)
        basis = _power_basis(e)
        columns = []
        for j in range(d):
            col = [Fraction(0)] * d
            for i, c in enumerate(self.coords):
                if not c:
                    continue
                if i + j < d:
                    col[i + j] += c
                else:
                    row = basis[(i + j) % e]
                    for t in range(d):
                        col[t] += c * row[t]
            columns.append(col)
        one = [Fraction(0)] * d
        one[0] = Fraction(1)
        solution = _solve_exact(columns, one)
        if solution is None:
            raise ZeroDivisionError("value is not invertible")
        return Cyclotomic(e, tuple(solution))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.conductor == 1:
            q = other.coords[0]
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic(
                self.conductor,
                tuple(c / q for c in self.coords),
                normalized=True,
            )
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.conductor == other.conductor and self.coords == other.coords

    def __hash__(self):
        return hash((self.conductor, self.coords))

    def sort_key(self):
        """Total order key for deterministic row sorting; 1 sorts first."""
        if self.conductor == 1 and self.coords[0] == 1:
            return (0,)
        return (1, self.conductor) + self.coords

    def __str__(self):
        if self.conductor == 1:
            return str(self.coords[0])
        parts = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            if k == 0:
                parts.append((c < 0, str(abs(c))))
            else:
                parts.append((c < 0, f"{abs(c)}*z({self.conductor})^{k}"))
        pieces = []
        for negative, text in parts:
            if not pieces:
                pieces.append(("-" if negative else "") + text)
            else:
                pieces.append(("- " if negative else "+ ") + text)
        return " ".join(pieces)

    def __repr__(self):
        return f"Cyclotomic({self})"


def _lcm(a, b):
    return a * b // gcd(a, b)


def _coerce(value):
    if isinstance(value, Cyclotomic):
        return value
    if isinstance(value, (int, Fraction)):
        return Cyclotomic(1, (Fraction(value),), normalized=True)
    return NotImplemented


def _canonical(e, coords):
    """Rewrite the value at its minimal conductor."""
    if all(c == 0 for c in coords[1:]):
        return 1, (coords[0],)
    basis = _power_basis(e)
    for d in divisors(e):
        if d == e:
            break
        step = e // d
        columns = [basis[(j * step) % e] for j in range(euler_phi(d))]
        solution = _solve_exact(columns, coords)
        if solution is not None:
            return d, tuple(solution)
    return e, coords


def rational(q):
    """The rational number q as a cyclotomic value."""
    return Cyclotomic(1, (Fraction(q),), normalized=True)


ZERO = rational(0)
ONE = rational(1)


def zeta(e, k=1):
    """The root of unity z_e^k."""
    if e < 1:
        raise DomainError("conductor must be positive")
    k %= e
    coords = [Fraction(0)] * euler_phi(e)
    if k < len(coords):
        coords[k] = Fraction(1)
        return Cyclotomic(e, tuple(coords))
    return Cyclotomic(e, _power_basis(e)[k])


def cyc_sum(values):
    total = ZERO
    for v in values:
        total = total + v
    return total


def from_root_combination(e, coefficients):
    """The value sum_t coefficients[t] * zeta_e^t, built in one pass so
    only a single canonicalization runs."""
    basis = _power_basis(e)
    out = [Fraction(0)] * euler_phi(e)
    for t, c in enumerate(coefficients):
        if c:
            row = basis[t % e]
            for i in range(len(out)):
                out[i] += c * row[i]
    return Cyclotomic(e, tuple(out))
