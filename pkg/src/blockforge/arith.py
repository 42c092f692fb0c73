"""Small integer helpers used throughout: primality, p-parts, valuations."""


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def vp(n, p):
    """The exponent of p in n (n a nonzero integer)."""
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def p_part(n, p):
    return p ** vp(n, p)


def p_prime_part(n, p):
    return abs(n) // p_part(n, p)


def prime_factors(n):
    """Sorted distinct prime factors of n > 1 (empty for n == 1)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(a, n):
    """Order of a modulo n; requires gcd(a, n) == 1."""
    from math import gcd

    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not invertible modulo {n}")
    a %= n
    k, x = 1, a
    while x != 1:
        x = x * a % n
        k += 1
    return k
