"""Zero eigenvalues of quartic bicirculants through cyclotomic divisibility.

For a root of unity z of order f dividing m, the bicirculant has a zero
eigenvalue at z iff ``|lambda_R(z)|^2 == lambda_S(z) * lambda_T(z)``.  For
each class this equation, cleared of negative powers, becomes one of the
integer polynomials below, and "holds at a primitive f-th root" becomes
"Phi_f divides it".
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from math import gcd
from typing import Optional

from .graphs import BicirculantSpec
from .numtheory import divisors, euler_phi, v2
from .poly import IntPolynomial, cyclotomic, divides_cyclotomic

B1_ODD_SET = (3, 5, 7, 15, 21)
B1_EVEN_SET = (6, 10, 14, 30, 42)
B2_DIVISOR_SET = (2, 3, 4, 5, 6, 7, 8, 10, 12, 14, 15, 20, 24, 28, 30, 40, 56, 60, 120)


def _terms(*pairs: tuple[int, int]) -> IntPolynomial:
    return IntPolynomial.from_terms(pairs)


def poly_R(a: int, b: int) -> IntPolynomial:
    return _terms(
        (2 * a + 2 * b, 1), (2 * a, 1), (2 * b, 1), (0, 1),
        (2 * a + b, 1), (a + 2 * b, 1), (a, 1), (b, 1),
    )


def poly_Q(a: int, b: int) -> IntPolynomial:
    return _terms(
        (2 * a + 2 * b, 1), (2 * a, 1), (2 * b, 1), (0, 1),
        (2 * a + b, -1), (a + 2 * b, -1), (a, -1), (b, -1),
    )


def poly_P(a: int, b: int, c: int) -> IntPolynomial:
    return _terms(
        (2 * a + 2 * b + c, 1), (2 * a + c, 1), (2 * b + c, 1), (c, 1),
        (a + b + 2 * c, -1), (a + b, -1), (a + b + c, -2),
    )


def poly_B3(a: int, b: int) -> IntPolynomial:
    one = IntPolynomial([1])
    return (IntPolynomial.monomial(b - a) + one) * (IntPolynomial.monomial(a) + one) * (
        IntPolynomial.monomial(b) + one
    )


def _require(spec: BicirculantSpec, tags: tuple[str, ...], what: str) -> None:
    if spec.class_tag not in tags:
        raise ValueError(f"{what} does not apply to class {spec.class_tag}")


def b1_polynomial(spec: BicirculantSpec, f: int) -> IntPolynomial:
    """R or Q, depending on whether ``z**(m/2)`` is +1 or -1 at order f."""
    return poly_R(spec.a, spec.b) if (spec.m // 2) % f == 0 else poly_Q(spec.a, spec.b)


def class_polynomial(spec: BicirculantSpec, f: int) -> IntPolynomial:
    """Integer polynomial whose vanishing at primitive f-th roots means a zero eigenvalue."""
    _require(spec, ("B1", "B2", "B3"), "class_polynomial")
    if spec.class_tag == "B1":
        return b1_polynomial(spec, f)
    if spec.class_tag == "B2":
        return poly_P(spec.a, spec.b, spec.c)
    return poly_B3(spec.a, spec.b)


def divisor_witness(spec: BicirculantSpec) -> Optional[int]:
    """Smallest nontrivial f | m whose primitive roots kill the class polynomial, or None.

    Only the cyclotomic part of each criterion is checked here; the parity
    requirements for B1 and B3 are handled by :func:`nut_via_divisors`.
    """
    _require(spec, ("B1", "B2", "B3"), "divisor_witness")
    m, a, b = spec.m, spec.a, spec.b
    for f in divisors(m):
        if spec.class_tag == "B1":
            if f >= 3 and f % 2 and divides_cyclotomic(f, poly_R(a, b)):
                return f
            if f >= 4 and f % 2 == 0 and divides_cyclotomic(f, poly_Q(a, b)):
                return f
        elif spec.class_tag == "B2":
            if f >= 2 and divides_cyclotomic(f, poly_P(a, b, spec.c)):
                return f
        elif f >= 3 and divides_cyclotomic(f, poly_B3(a, b)):
            return f
    return None


def nut_via_divisors(spec: BicirculantSpec) -> bool:
    _require(spec, ("B1", "B2", "B3"), "nut_via_divisors")
    m, a, b = spec.m, spec.a, spec.b
    if spec.class_tag == "B1" and not (m % 4 == 2 and a % 2 == 0 and b % 2 == 0):
        return False
    if spec.class_tag == "B3" and not (a % 2 and b % 2):
        return False
    return divisor_witness(spec) is None


class FiniteSetAnswer(Enum):
    NUT = "nut"
    NOT_NUT = "not-nut"
    NOT_APPLICABLE = "not-applicable"


def _b1_conditions_hold(m: int, a: int, b: int) -> bool:
    return (
        m % 4 == 2
        and a % 2 == 0
        and b % 2 == 0
        and gcd(m // 2, gcd(a, b)) == 1
        and (m % 5 or any(x % 5 == 0 for x in (a, b, a - b, a + b)))
    )


def b2_coprimality_holds(m: int, a: int, b: int, c: int) -> bool:
    """Condition (i) of the B2 classification."""
    pairs = ((a - b, a + b + c), (a - b, a + b - c), (a + b, a - b + c), (a + b, a - b - c))
    return all(gcd(m, gcd(x, y)) == 1 for x, y in pairs)


def b2_valuation_holds(m: int, a: int, b: int, c: int) -> bool:
    """Condition (ii) of the B2 classification."""
    if v2(m) > v2(c):
        return v2(a) != v2(c) - 1 and v2(b) != v2(c) - 1
    return True


def nut_via_finite_sets(spec: BicirculantSpec) -> FiniteSetAnswer:
    """Scan only the finite divisor sets left over once the easy conditions hold."""
    _require(spec, ("B1", "B2"), "nut_via_finite_sets")
    m, a, b = spec.m, spec.a, spec.b
    if spec.class_tag == "B1":
        if not _b1_conditions_hold(m, a, b):
            return FiniteSetAnswer.NOT_APPLICABLE
        hit = any(m % f == 0 and divides_cyclotomic(f, poly_R(a, b)) for f in B1_ODD_SET) or any(
            m % f == 0 and divides_cyclotomic(f, poly_Q(a, b)) for f in B1_EVEN_SET
        )
    else:
        c = spec.c
        if not (b2_coprimality_holds(m, a, b, c) and b2_valuation_holds(m, a, b, c)):
            return FiniteSetAnswer.NOT_APPLICABLE
        P = poly_P(a, b, c)
        hit = any(m % f == 0 and divides_cyclotomic(f, P) for f in B2_DIVISOR_SET)
    return FiniteSetAnswer.NOT_NUT if hit else FiniteSetAnswer.NUT


@dataclass(frozen=True)
class ZeroSpectrumReport:
    """Where the zero eigenvalue lives in the cyclic decomposition.

    ``satisfied_divisors`` are the orders f of m-th roots of unity at which the
    2x2 block has a zero eigenvalue; ``double_divisors`` is the subset where
    the whole block vanishes, so each such root contributes two zeros.
    """

    spec: BicirculantSpec
    satisfied_divisors: frozenset
    double_divisors: frozenset
    multiplicity: int


def _b2_block_vanishes(spec: BicirculantSpec, f: int) -> bool:
    # lambda_S = lambda_T = lambda_R = 0, i.e. z^{2a} = z^{2b} = z^c = -1.
    one = IntPolynomial([1])
    return all(
        divides_cyclotomic(f, IntPolynomial.monomial(e) + one)
        for e in (2 * spec.a, 2 * spec.b, spec.c)
    )


def zero_multiplicity(spec: BicirculantSpec) -> ZeroSpectrumReport:
    _require(spec, ("B1", "B2", "B3"), "zero_multiplicity")
    satisfied, double = set(), set()
    for f in divisors(spec.m):
        poly = class_polynomial(spec, f).reduce_exponents(f)
        if divides_cyclotomic(f, poly):
            satisfied.add(f)
            if spec.class_tag == "B2" and _b2_block_vanishes(spec, f):
                double.add(f)
    mult = sum(euler_phi(f) for f in satisfied) + sum(euler_phi(f) for f in double)
    return ZeroSpectrumReport(spec, frozenset(satisfied), frozenset(double), mult)


def _residue_poly(f: int, a: int, b: int, c: int) -> IntPolynomial:
    """Zero-eigenvalue equation for B2 with exponents taken mod f."""
    return _terms(
        ((a + b) % f, 1), ((a - b) % f, 1), ((b - a) % f, 1), ((-a - b) % f, 1),
        (0, -2), (c % f, -1), (-c % f, -1),
    )


def _power_residues(f: int) -> list[tuple[int, ...]]:
    """Coefficient vectors of ``x**e mod Phi_f`` for ``e`` in ``[0, f)``."""
    cyc = cyclotomic(f)
    width = cyc.degree
    out = []
    for e in range(f):
        r = IntPolynomial.monomial(e) % cyc
        out.append(r.coeffs + (0,) * (width - len(r.coeffs)))
    return out


def _add(*vecs: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(map(sum, zip(*vecs)))


def residue_search(f: int, raw: bool = False) -> list[tuple[int, int, int]]:
    """All residues mod f of B2 parameters passing (i)-(ii) yet killed by Phi_f.

    With ``m`` replaced by ``f`` in conditions (i) and (ii), iterate
    ``a, b, c`` over ``1..f``.  Returns sorted distinct
    ``((a+b) % f, (a-b) % f, c % f)``; with ``raw=True`` the hitting
    ``(a, b, c)`` themselves, in loop order.

    The exponent-reduced polynomial splits as ``base(a+b, a-b) - (x^c + x^-c)``,
    so reducing both halves mod Phi_f once turns the divisibility test into a
    table lookup on ``c``.
    """
    if f not in B2_DIVISOR_SET:
        raise ValueError(f"{f} is not in the B2 divisor set {B2_DIVISOR_SET}")
    X = _power_residues(f)
    by_c_part: dict[tuple[int, ...], list[int]] = {}
    for c in range(1, f + 1):
        by_c_part.setdefault(_add(X[c % f], X[-c % f]), []).append(c)
    minus_two = tuple(-2 * k for k in X[0])
    hits = []
    for a in range(1, f + 1):
        for b in range(1, f + 1):
            s, d = (a + b) % f, (a - b) % f
            base = _add(X[s], X[d], X[-d % f], X[-s % f], minus_two)
            for c in by_c_part.get(base, ()):
                if b2_coprimality_holds(f, a, b, c) and b2_valuation_holds(f, a, b, c):
                    hits.append((a, b, c))
    if raw:
        return hits
    return sorted({((a + b) % f, (a - b) % f, c % f) for a, b, c in hits})


def residue_search_direct(f: int) -> list[tuple[int, int, int]]:
    """Unoptimised loop: one exact polynomial division per triple."""
    cyc = cyclotomic(f)
    found = set()
    for a, b, c in product(range(1, f + 1), repeat=3):
        if not (b2_coprimality_holds(f, a, b, c) and b2_valuation_holds(f, a, b, c)):
            continue
        if (_residue_poly(f, a, b, c) % cyc).is_zero():
            found.add(((a + b) % f, (a - b) % f, c % f))
    return sorted(found)
