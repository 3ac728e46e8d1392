"""Enumeration of connected quartic bicirculants up to isomorphism.

Counts per order n:

* C: connected graphs
* B: non-bipartite ones among them
* N: nut graphs (decided by the exact kernel, checked against the classifier)
* V: vertex-transitive nut graphs
* Z: nut graphs isomorphic to a quartic circulant
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .canon import _orbits, canonical_form
from .classify import classify
from .cyclo import FiniteSetAnswer, nut_via_divisors, nut_via_finite_sets, zero_multiplicity
from .graphs import (
    CLASS_TAGS,
    BicirculantSpec,
    SpecError,
    build_graph,
    circulant,
    is_bipartite,
    is_connected_params,
    make_spec,
)
from .kernel import adjacency_matrix, kernel_basis

log = logging.getLogger(__name__)

TABLE_MIN, TABLE_MAX = 8, 50
PER_CLASS_TAGS = ("B1", "B2", "B3")


def gen_specs(class_tag: str, n: int) -> list[BicirculantSpec]:
    """Connected specs of the class on n vertices, in lexicographic parameter order."""
    if n % 2:
        raise SpecError(f"bicirculants have even order, got {n}")
    m = n // 2
    if class_tag in ("B1", "B3") and m % 2:
        raise SpecError(f"{class_tag} needs m = n/2 even, got n = {n}")
    if class_tag not in CLASS_TAGS:
        raise SpecError(f"unknown class {class_tag!r}")
    out = []
    if class_tag == "B1":
        cands = ((a, b, None) for a in range(1, m) for b in range(a, m) if 2 * b < m)
    elif class_tag == "B2":
        cands = (
            (a, b, c)
            for a in range(1, m)
            for b in range(a, m)
            if 2 * b < m
            for c in range(1, m // 2 + 1)
        )
    elif class_tag == "B3":
        cands = ((a, b, None) for a in range(1, m) for b in range(a + 2, m, 2))
    else:
        cands = ((a, b, c) for a in range(1, m) for b in range(a + 1, m) for c in range(b + 1, m))
    for a, b, c in cands:
        try:
            spec = make_spec(class_tag, m, a, b, c)
        except SpecError:
            continue
        if is_connected_params(spec):
            out.append(spec)
    return out


def _affine_key(spec: BicirculantSpec) -> tuple:
    """Invariant of the spec under ``i -> u*i (+ t on the y side)`` and the x/y swap.

    These maps are graph isomorphisms, so equal keys imply isomorphic graphs;
    the key only serves to avoid recomputing certificates.
    """
    m = spec.m
    S, T, R = spec.connection_sets()
    best = None
    for u in _units(m):
        uS = tuple(sorted(u * s % m for s in S))
        uT = tuple(sorted(u * t % m for t in T))
        uR = [u * r % m for r in R]
        for s_part, t_part, r_part in ((uS, uT, uR), (uT, uS, [-r % m for r in uR])):
            for r0 in r_part:
                key = (s_part, t_part, tuple(sorted((r - r0) % m for r in r_part)))
                if best is None or key < best:
                    best = key
    return best


@lru_cache(maxsize=None)
def _units(m: int) -> tuple[int, ...]:
    return tuple(u for u in range(1, m) if gcd(u, m) == 1)


@lru_cache(maxsize=None)
def circulant_certificates(n: int) -> frozenset:
    """Certificates of all connected quartic circulants ``Circ(n, {s, t})``."""
    certs = set()
    for s in range(1, n):
        for t in range(s + 1, n):
            if 2 * t >= n or gcd(n, gcd(s, t)) != 1:
                continue
            certs.add(canonical_form(circulant(n, (s, -s, t, -t))).certificate)
    return frozenset(certs)


def canonical_certificate(g) -> bytes:
    return canonical_form(g).certificate


def is_circulant(g) -> bool:
    return canonical_certificate(g) in circulant_certificates(g.n)


@dataclass
class ClassCounts:
    C: int = 0
    B: int = 0
    N: int = 0
    V: int = 0
    Z: int = 0

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.C, self.B, self.N, self.V, self.Z)


@dataclass
class TableRow:
    n: int
    C: int
    B: int
    N: int
    V: int
    Z: int
    per_class: dict[str, ClassCounts] = field(default_factory=dict)

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.C, self.B, self.N, self.V, self.Z)


@dataclass
class _IsoClass:
    bipartite: bool
    nut: bool | None = None
    vt: bool | None = None
    circ: bool | None = None


class ClassifierMismatch(AssertionError):
    pass


def _nut_from_kernel(g) -> bool:
    basis = kernel_basis(adjacency_matrix(g))
    return basis.dim == 1 and all(basis.vectors[0])


def table_row(n: int) -> TableRow:
    if n % 2 or not TABLE_MIN <= n <= TABLE_MAX:
        raise SpecError(f"table orders are even n in [{TABLE_MIN}, {TABLE_MAX}], got {n}")
    m = n // 2
    tags = [t for t in CLASS_TAGS if not (t in ("B1", "B3") and m % 2)]

    cert_of_key: dict[tuple, bytes] = {}
    classes: dict[bytes, _IsoClass] = {}
    members: dict[str, set[bytes]] = {t: set() for t in tags}

    for tag in tags:
        for spec in gen_specs(tag, n):
            key = _affine_key(spec)
            cert = cert_of_key.get(key)
            g = None
            if cert is None:
                g = build_graph(spec)
                form = canonical_form(g)
                cert = cert_of_key[key] = form.certificate
                if cert not in classes:
                    iso = _IsoClass(bipartite=is_bipartite(g))
                    if not iso.bipartite:
                        iso.nut = _nut_from_kernel(g)
                        if iso.nut:
                            uf = _orbits(g.n, form.generators)
                            iso.vt = all(uf.find(v) == 0 for v in range(g.n))
                            iso.circ = cert in circulant_certificates(n)
                    classes[cert] = iso
            iso = classes[cert]
            if bool(iso.nut) != classify(spec).is_nut:
                raise ClassifierMismatch(f"{spec}: kernel says nut={bool(iso.nut)}, classifier disagrees")
            members[tag].add(cert)

    def count(certs) -> ClassCounts:
        out = ClassCounts()
        for cert in certs:
            iso = classes[cert]
            out.C += 1
            if iso.bipartite:
                continue
            out.B += 1
            if iso.nut:
                out.N += 1
                out.V += bool(iso.vt)
                out.Z += bool(iso.circ)
        return out

    total = count(classes.keys())
    per = {t: count(members[t]) for t in tags if t in PER_CLASS_TAGS}
    log.info("n=%d: %d affine keys, %d isomorphism classes", n, len(cert_of_key), len(classes))
    return TableRow(n, *total.as_tuple(), per_class=per)


def _worker_count(workers: int | None) -> int:
    env = os.environ.get("QBNUT_WORKERS")
    if env:
        return max(1, int(env))
    return max(1, workers or 1)


def table_rows(n_max: int, n_min: int = TABLE_MIN, workers: int | None = None) -> list[TableRow]:
    """Rows for every even order in ``[n_min, n_max]``, ordered by n."""
    orders = list(range(n_min + n_min % 2, n_max + 1, 2))
    nw = _worker_count(workers)
    if nw == 1:
        return [table_row(n) for n in orders]
    with ProcessPoolExecutor(nw) as pool:
        return list(pool.map(table_row, orders))


@dataclass
class Disagreement:
    spec: BicirculantSpec
    detail: str


@dataclass
class CrosscheckReport:
    n_max: int
    specs_checked: int = 0
    per_order: dict[int, int] = field(default_factory=dict)
    pair_counts: dict[str, int] = field(default_factory=dict)
    disagreements: list[Disagreement] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def bump(self, pair: str) -> None:
        self.pair_counts[pair] = self.pair_counts.get(pair, 0) + 1


def check_spec(spec: BicirculantSpec) -> tuple[list[str], list[str]]:
    """Compare all methods on one spec; returns (pairs compared, disagreements)."""
    g = build_graph(spec)
    basis = kernel_basis(adjacency_matrix(g))
    oracle = basis.dim == 1 and all(basis.vectors[0])
    verdict = classify(spec).is_nut
    pairs = ["classify~oracle"]
    problems = []
    if verdict != oracle:
        problems.append(f"classify={verdict} oracle={oracle}")
    if spec.class_tag != "B4":
        divisors_says = nut_via_divisors(spec)
        pairs += ["divisors~oracle", "divisors~classify"]
        if divisors_says != oracle:
            problems.append(f"divisors={divisors_says} oracle={oracle}")
        if divisors_says != verdict:
            problems.append(f"divisors={divisors_says} classify={verdict}")
        mult = zero_multiplicity(spec).multiplicity
        pairs.append("multiplicity~kernel_dim")
        if mult != basis.dim:
            problems.append(f"zero_multiplicity={mult} kernel_dim={basis.dim}")
    if spec.class_tag in ("B1", "B2"):
        finite = nut_via_finite_sets(spec)
        if finite is not FiniteSetAnswer.NOT_APPLICABLE:
            pairs.append("finite_sets~oracle")
            if (finite is FiniteSetAnswer.NUT) != oracle:
                problems.append(f"finite_sets={finite.value} oracle={oracle}")
    return pairs, problems


def connected_specs_up_to(n_max: int, n_min: int = 6) -> list[BicirculantSpec]:
    specs = []
    for n in range(n_min, n_max + 1, 2):
        for tag in CLASS_TAGS:
            if tag in ("B1", "B3") and (n // 2) % 2:
                continue
            if tag == "B4" and n < 8:
                continue
            specs.extend(gen_specs(tag, n))
    return specs


def crosscheck(n_max: int, workers: int | None = None) -> CrosscheckReport:
    if n_max > TABLE_MAX:
        raise SpecError(f"crosscheck is capped at order {TABLE_MAX}")
    specs = connected_specs_up_to(n_max)
    report = CrosscheckReport(n_max)
    nw = _worker_count(workers)
    if nw == 1:
        results = map(check_spec, specs)
    else:
        pool = ProcessPoolExecutor(nw)
        results = pool.map(check_spec, specs, chunksize=64)
    for spec, (pairs, problems) in zip(specs, results):
        report.specs_checked += 1
        report.per_order[spec.n] = report.per_order.get(spec.n, 0) + 1
        for pair in pairs:
            report.bump(pair)
        for p in problems:
            report.disagreements.append(Disagreement(spec, p))
    if nw != 1:
        pool.shutdown()
    return report
