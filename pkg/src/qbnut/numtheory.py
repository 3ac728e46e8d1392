"""Small integer helpers: divisors, Euler's totient, p-adic valuation."""

from __future__ import annotations

from functools import lru_cache, reduce
from math import gcd


def gcd_all(*values: int) -> int:
    return reduce(gcd, values, 0)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of ``n`` in increasing order."""
    if n < 1:
        raise ValueError(f"divisors() needs a positive integer, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``|n|`` in increasing order."""
    n = abs(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result = n
    for p in prime_factors(n):
        result -= result // p
    return result


def vp(p: int, x: int) -> int:
    """Exponent of the prime ``p`` in ``|x|``.

    >>> vp(2, 12), vp(3, 12), vp(5, 7)
    (2, 1, 0)
    """
    if x == 0:
        raise ValueError("vp is undefined for 0")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    x = abs(x)
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def v2(x: int) -> int:
    return vp(2, x)
