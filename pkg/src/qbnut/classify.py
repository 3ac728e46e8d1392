"""Closed-form nut test for quartic bicirculants.

Conditions are checked in their stated order and the first failure is
reported.  Where a failure has an explicit root-of-unity witness (the order
f of a root giving a second kernel direction) it is attached to the verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Optional

from .cyclo import b2_coprimality_holds, b2_valuation_holds
from .graphs import BicirculantSpec, make_spec
from .numtheory import prime_factors, v2

CONDITIONS_SATISFIED = "conditions-satisfied"
BIPARTITE_CLASS = "bipartite-class"


@dataclass(frozen=True)
class Verdict:
    spec: BicirculantSpec
    is_nut: bool
    reason: str
    condition: Optional[str] = None
    witness_f: Optional[int] = None

    def __post_init__(self):
        assert self.is_nut == (self.reason == CONDITIONS_SATISFIED)

    @property
    def reason_code(self) -> str:
        if self.condition is not None:
            return f"violated-({self.condition})"
        return self.reason

    def to_record(self) -> dict:
        """Flat record with the fixed JSON keys; ``witness_f`` only when known."""
        s = self.spec
        rec = {
            "class": s.class_tag,
            "m": s.m,
            "a": s.a,
            "b": s.b,
            "c": s.c,
            "is_nut": self.is_nut,
            "reason": self.reason_code,
        }
        if self.witness_f is not None:
            rec["witness_f"] = self.witness_f
        return rec


def _violated(spec, cond, witness=None) -> Verdict:
    return Verdict(spec, False, "violated-condition", cond, witness)


def _nut(spec) -> Verdict:
    return Verdict(spec, True, CONDITIONS_SATISFIED)


def _forbidden(signed_triples, f: int) -> frozenset:
    out = set()
    for x, y, z in signed_triples:
        for sx, sy, sz in product((1, -1), repeat=3):
            out.add((sx * x % f, sy * y % f, sz * z % f))
    return frozenset(out)


FORBIDDEN_MOD_12 = _forbidden([(2, 2, 3)], 12)
# the unordered pair {a+b, a-b} may match either way round
FORBIDDEN_MOD_30 = _forbidden(
    [(3, 5, 6), (5, 3, 6), (3, 9, 10), (9, 3, 10), (5, 9, 12), (9, 5, 12)], 30
)


def classify_b1(m: int, a: int, b: int) -> Verdict:
    spec = make_spec("B1", m, a, b)
    if m % 4 != 2:
        return _violated(spec, "i")
    if a % 2 or b % 2:
        return _violated(spec, "ii")
    g = gcd(m // 2, gcd(a, b))
    if g != 1:
        # an odd prime p divides m/2, a and b; Q vanishes at primitive 2p-th roots
        return _violated(spec, "iii", 2 * prime_factors(g)[0])
    if m % 5 == 0 and not any(x % 5 == 0 for x in (a, b, a - b, a + b)):
        return _violated(spec, "iv", 10)
    return _nut(spec)


def _b2_coprimality_witness(m, a, b, c) -> int:
    for x, y in ((a - b, a + b + c), (a - b, a + b - c), (a + b, a - b + c), (a + b, a - b - c)):
        g = gcd(m, gcd(x, y))
        if g != 1:
            return prime_factors(g)[0]
    raise AssertionError("condition (i) holds")


def classify_b2(m: int, a: int, b: int, c: int) -> Verdict:
    spec = make_spec("B2", m, a, b, c)
    if not b2_coprimality_holds(m, a, b, c):
        return _violated(spec, "i", _b2_coprimality_witness(m, a, b, c))
    if not b2_valuation_holds(m, a, b, c):
        return _violated(spec, "ii", 2 ** (v2(c) + 1))
    if m % 12 == 0 and ((a + b) % 12, (a - b) % 12, c % 12) in FORBIDDEN_MOD_12:
        return _violated(spec, "iii", 12)
    if m % 30 == 0 and ((a + b) % 30, (a - b) % 30, c % 30) in FORBIDDEN_MOD_30:
        return _violated(spec, "iv", 30)
    return _nut(spec)


def classify_b3(m: int, a: int, b: int) -> Verdict:
    """Condition ids: (i) a, b odd; (ii) both coprime to m; (iii) v2(b-a) >= v2(m)."""
    spec = make_spec("B3", m, a, b)
    if a % 2 == 0 or b % 2 == 0:
        return _violated(spec, "i")
    if gcd(m, a) != 1 or gcd(m, b) != 1:
        return _violated(spec, "ii")
    if v2(b - a) < v2(m):
        return _violated(spec, "iii")
    return _nut(spec)


def classify(spec: BicirculantSpec) -> Verdict:
    tag = spec.class_tag
    if tag == "B1":
        return classify_b1(spec.m, spec.a, spec.b)
    if tag == "B2":
        return classify_b2(spec.m, spec.a, spec.b, spec.c)
    if tag == "B3":
        return classify_b3(spec.m, spec.a, spec.b)
    make_spec(tag, spec.m, spec.a, spec.b, spec.c)
    return Verdict(spec, False, BIPARTITE_CLASS)
