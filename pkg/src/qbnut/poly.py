"""Dense integer polynomials and cyclotomic polynomials."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .numtheory import divisors


class IntPolynomial:
    """Polynomial with integer coefficients; ``coeffs[i]`` multiplies ``x**i``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def from_terms(cls, terms: Mapping[int, int] | Iterable[tuple[int, int]]) -> "IntPolynomial":
        """Build from ``(exponent, coefficient)`` pairs; repeated exponents add up."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, k in items:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            acc[e] = acc.get(e, 0) + k
        if not acc:
            return cls()
        out = [0] * (max(acc) + 1)
        for e, k in acc.items():
            out[e] = k
        return cls(out)

    @classmethod
    def monomial(cls, e: int, k: int = 1) -> "IntPolynomial":
        return cls.from_terms({e: k})

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> dict[int, int]:
        return {e: k for e, k in enumerate(self.coeffs) if k}

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-x for x in self.coeffs])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial([other * x for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division by a divisor whose leading coefficient is +-1."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return IntPolynomial(), IntPolynomial(rem)
        quot = [0] * (len(rem) - dd)
        dc = divisor.coeffs
        for shift in range(len(rem) - 1 - dd, -1, -1):
            q = rem[shift + dd] * lead
            if q:
                quot[shift] = q
                for j, y in enumerate(dc):
                    rem[shift + j] -= q * y
        return IntPolynomial(quot), IntPolynomial(rem[:dd])

    def __floordiv__(self, divisor: "IntPolynomial") -> "IntPolynomial":
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: "IntPolynomial") -> "IntPolynomial":
        return divmod(self, divisor)[1]

    def __call__(self, x):
        acc = 0
        for k in reversed(self.coeffs):
            acc = acc * x + k
        return acc

    def compose_power(self, p: int) -> "IntPolynomial":
        """``P(x**p)``."""
        return IntPolynomial.from_terms((e * p, k) for e, k in self.terms().items())

    def reduce_exponents(self, f: int) -> "IntPolynomial":
        """Fold every exponent into ``[0, f)``; agrees with P at any f-th root of unity."""
        return IntPolynomial.from_terms((e % f, k) for e, k in self.terms().items())

    def __repr__(self) -> str:
        return f"IntPolynomial({str(self)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(self.degree, -1, -1):
            k = self.coeffs[e]
            if not k:
                continue
            sign = "-" if k < 0 else "+"
            mag = abs(k)
            if e == 0:
                body = str(mag)
            else:
                var = "x" if e == 1 else f"x^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


X = IntPolynomial([0, 1])


@lru_cache(maxsize=None)
def cyclotomic(f: int) -> IntPolynomial:
    """The f-th cyclotomic polynomial, as ``(x^f - 1) / prod_{d | f, d < f} Phi_d``."""
    if f < 1:
        raise ValueError(f"cyclotomic index must be positive, got {f}")
    p = IntPolynomial.from_terms({f: 1, 0: -1})
    for d in divisors(f)[:-1]:
        p, rem = divmod(p, cyclotomic(d))
        assert rem.is_zero()
    return p


def divides_cyclotomic(f: int, p: IntPolynomial) -> bool:
    """Whether Phi_f divides p exactly, i.e. p vanishes at primitive f-th roots of unity."""
    return (p % cyclotomic(f)).is_zero()
