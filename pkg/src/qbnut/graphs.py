"""Quartic bicirculant parameter specs and the graphs they describe.

A bicirculant ``Bicirc(m; S, T, R)`` lives on vertices ``x_0..x_{m-1}``
(indices ``0..m-1``) and ``y_0..y_{m-1}`` (indices ``m..2m-1``), with edges
``x_i x_{i+s}`` for ``s in S``, ``y_i y_{i+t}`` for ``t in T`` and
``x_i y_{i+r}`` for ``r in R``.  The four quartic classes fix the shape of
``S, T, R``:

====  =====================  =====================  ================
tag   S                      T                      R
====  =====================  =====================  ================
B1    {a, -a, m/2}           {b, -b, m/2}           {0}
B2    {a, -a}                {b, -b}                {0, c}
B3    {m/2}                  {m/2}                  {0, a, b}
B4    {}                     {}                     {0, a, b, c}
====  =====================  =====================  ================
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .numtheory import gcd_all

CLASS_TAGS = ("B1", "B2", "B3", "B4")
HAS_C = {"B1": False, "B2": True, "B3": False, "B4": True}


class SpecError(ValueError):
    """Invalid bicirculant parameters."""


class RangeViolation(SpecError):
    pass


class ParityViolation(SpecError):
    pass


@dataclass(frozen=True, order=True)
class BicirculantSpec:
    class_tag: str
    m: int
    a: int
    b: int
    c: Optional[int] = None

    def __str__(self) -> str:
        params = [self.a, self.b] + ([self.c] if self.c is not None else [])
        return f"{self.class_tag}({self.m};{','.join(map(str, params))})"

    @property
    def n(self) -> int:
        return 2 * self.m

    def connection_sets(self) -> tuple[frozenset, frozenset, frozenset]:
        """``(S, T, R)`` as sets of residues mod m."""
        m, a, b, c = self.m, self.a, self.b, self.c
        tag = self.class_tag
        if tag == "B1":
            S = {a % m, -a % m, m // 2}
            T = {b % m, -b % m, m // 2}
            R = {0}
        elif tag == "B2":
            S = {a % m, -a % m}
            T = {b % m, -b % m}
            R = {0, c % m}
        elif tag == "B3":
            S = T = {m // 2}
            R = {0, a % m, b % m}
        else:
            S = T = set()
            R = {0, a % m, b % m, c % m}
        return frozenset(S), frozenset(T), frozenset(R)


@dataclass(frozen=True)
class QuartGraph:
    """Simple graph given by sorted adjacency tuples.

    Despite the name the type does not insist on degree 4; helper graphs in
    tests (paths, cycles) use it too.  Bicirculants built by
    :func:`build_graph` follow the ``x_i -> i``, ``y_i -> m + i`` labelling.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> "QuartGraph":
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].append(v)
            nbrs[v].append(u)
        for u, row in enumerate(nbrs):
            if len(set(row)) != len(row):
                raise ValueError(f"parallel edges at vertex {u}")
        return cls(n, tuple(tuple(sorted(row)) for row in nbrs))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def permuted(self, perm) -> "QuartGraph":
        """Relabel vertex ``v`` as ``perm[v]``."""
        return QuartGraph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))


def _check_c(class_tag: str, c) -> None:
    if HAS_C[class_tag] and c is None:
        raise SpecError(f"{class_tag} needs a third parameter c")
    if not HAS_C[class_tag] and c is not None:
        raise SpecError(f"{class_tag} takes no parameter c")


def make_spec(class_tag: str, m: int, a: int, b: int, c: Optional[int] = None) -> BicirculantSpec:
    """Validate parameters against the canonical ranges of their class.

    Raises :class:`RangeViolation` or :class:`ParityViolation` naming the
    broken requirement.  Nothing is normalized.
    """
    if class_tag not in CLASS_TAGS:
        raise SpecError(f"unknown class {class_tag!r}")
    _check_c(class_tag, c)

    def need(ok: bool, text: str, exc=RangeViolation):
        if not ok:
            raise exc(f"{class_tag}: requires {text}")

    if class_tag in ("B1", "B3"):
        need(m >= 4, "m >= 4")
        need(m % 2 == 0, "m even", ParityViolation)
    elif class_tag == "B2":
        need(m >= 3, "m >= 3")
    else:
        need(m >= 4, "m >= 4")

    if class_tag == "B1":
        need(1 <= a <= b < m / 2, "1 <= a <= b < m/2")
    elif class_tag == "B2":
        need(1 <= a <= b < m / 2, "1 <= a <= b < m/2")
        need(1 <= c <= m / 2, "1 <= c <= m/2")
    elif class_tag == "B3":
        need(1 <= a < b < m, "1 <= a < b < m")
        need((a - b) % 2 == 0, "a = b (mod 2)", ParityViolation)
    else:
        need(1 <= a < b < c < m, "1 <= a < b < c < m")
    return BicirculantSpec(class_tag, m, a, b, c)


def _check_structure(spec: BicirculantSpec) -> None:
    """Raw parameters must still give a simple quartic graph of the class."""
    tag, m = spec.class_tag, spec.m
    if tag not in CLASS_TAGS:
        raise SpecError(f"unknown class {tag!r}")
    _check_c(tag, spec.c)
    if tag in ("B1", "B3") and (m < 4 or m % 2):
        raise ParityViolation(f"{tag}: requires even m >= 4")
    if m < 3:
        raise RangeViolation(f"{tag}: requires m >= 3")
    S, T, R = spec.connection_sets()
    sizes = {"B1": (3, 3, 1), "B2": (2, 2, 2), "B3": (1, 1, 3), "B4": (0, 0, 4)}[tag]
    if (len(S), len(T), len(R)) != sizes or 0 in S or 0 in T:
        raise RangeViolation(f"{spec}: parameters collide mod m")


def _b3_orbit(m: int, a: int, b: int) -> set[tuple[int, int]]:
    seen: set[tuple[int, int]] = set()
    todo = [(a % m, b % m)]
    while todo:
        x, y = todo.pop()
        key = (min(x, y), max(x, y))
        if key in seen:
            continue
        seen.add(key)
        todo.append((-x % m, (y - x) % m))
        todo.append((-y % m, (x - y) % m))
        todo.append((-x % m, -y % m))
    return seen


def normalize_spec(spec: BicirculantSpec) -> BicirculantSpec:
    """Map raw parameters to an isomorphic spec inside the canonical range."""
    _check_structure(spec)
    tag, m = spec.class_tag, spec.m

    def fold(x: int) -> int:
        x %= m
        return min(x, m - x)

    if tag == "B1":
        a, b = sorted((fold(spec.a), fold(spec.b)))
        return make_spec(tag, m, a, b)
    if tag == "B2":
        a, b = sorted((fold(spec.a), fold(spec.b)))
        return make_spec(tag, m, a, b, fold(spec.c))
    if tag == "B3":
        pairs = [p for p in _b3_orbit(m, spec.a, spec.b) if (p[0] - p[1]) % 2 == 0]
        a, b = min(pairs)
        return make_spec(tag, m, a, b)
    a, b, c = sorted((spec.a % m, spec.b % m, spec.c % m))
    return make_spec(tag, m, a, b, c)


def is_connected_params(spec: BicirculantSpec) -> bool:
    S, T, R = spec.connection_sets()
    return gcd_all(spec.m, *S, *T, *R) == 1


def bicirculant(m: int, S, T, R) -> QuartGraph:
    """``Bicirc(m; S, T, R)`` for symmetric ``S``, ``T``."""
    edges = set()
    for i in range(m):
        for s in S:
            j = (i + s) % m
            edges.add((min(i, j), max(i, j)))
        for t in T:
            j = (i + t) % m
            edges.add((m + min(i, j), m + max(i, j)))
        for r in R:
            edges.add((i, m + (i + r) % m))
    return QuartGraph.from_edges(2 * m, sorted(edges))


def build_graph(spec: BicirculantSpec) -> QuartGraph:
    _check_structure(spec)
    g = bicirculant(spec.m, *spec.connection_sets())
    assert all(len(row) == 4 for row in g.adjacency), f"{spec} is not 4-regular"
    return g


def circulant(n: int, jumps) -> QuartGraph:
    """``Circ(n, {+-j})``."""
    edges = set()
    for i in range(n):
        for j in jumps:
            k = (i + j) % n
            if k != i:
                edges.add((min(i, k), max(i, k)))
    return QuartGraph.from_edges(n, sorted(edges))


def _bfs_colors(g: QuartGraph, start: int, color: list) -> bool:
    color[start] = 0
    queue = deque([start])
    ok = True
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if color[v] is None:
                color[v] = color[u] ^ 1
                queue.append(v)
            elif color[v] == color[u]:
                ok = False
    return ok


def is_connected(g: QuartGraph) -> bool:
    if g.n == 0:
        return True
    color: list = [None] * g.n
    _bfs_colors(g, 0, color)
    return all(c is not None for c in color)


def is_bipartite(g: QuartGraph) -> bool:
    color: list = [None] * g.n
    for v in range(g.n):
        if color[v] is None and not _bfs_colors(g, v, color):
            return False
    return True


_SPEC_RE = re.compile(r"^\s*(B[1-4])\s*\(\s*(-?\d+)\s*;\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)\s*$", re.I)


def parse_spec(text: str) -> BicirculantSpec:
    """Parse ``B2(24;4,6,3)`` (whitespace tolerated) and validate it."""
    match = _SPEC_RE.match(text)
    if not match:
        raise SpecError(f"cannot parse spec {text!r}")
    tag = match.group(1).upper()
    m = int(match.group(2))
    params = [int(p) for p in match.group(3).split(",")]
    expected = 3 if HAS_C[tag] else 2
    if len(params) != expected:
        raise SpecError(f"{tag} takes {expected} parameters after ';', got {len(params)}")
    return make_spec(tag, m, *params)
