from math import gcd

import pytest
import sympy
from hypothesis import given, strategies as st

from qbnut.numtheory import divisors, euler_phi, gcd_all, is_prime, prime_factors, v2, vp


@pytest.mark.parametrize("p,x,want", [(2, 12, 2), (3, 12, 1), (5, 7, 0), (2, -8, 3), (7, 49 * 3, 2)])
def test_vp_values(p, x, want):
    assert vp(p, x) == want


def test_vp_rejects_zero_and_composite_base():
    with pytest.raises(ValueError):
        vp(2, 0)
    with pytest.raises(ValueError):
        vp(4, 8)


def test_gcd_all():
    assert gcd_all(12, 18, 30) == 6
    assert gcd_all(6, 2, 2, 2) == 2
    assert gcd_all(6, 1, 2, 3) == 1


@given(st.integers(1, 3000))
def test_against_sympy(n):
    assert list(divisors(n)) == sympy.divisors(n)
    assert euler_phi(n) == sympy.totient(n)
    assert sorted(set(prime_factors(n))) == sorted(sympy.primefactors(n))
    assert is_prime(n) == sympy.isprime(n)


@given(st.integers(-10**6, 10**6).filter(bool))
def test_v2_matches_multiplicity(x):
    assert v2(x) == sympy.multiplicity(2, abs(x))
    assert x % 2 ** v2(x) == 0 and (x // 2 ** v2(x)) % 2 != 0


@given(st.integers(1, 500), st.integers(1, 500))
def test_gcd_all_pairwise(a, b):
    assert gcd_all(a, b) == gcd(a, b)
