"""Canonical labelling by colour refinement and individualisation.

The search tree is the usual one: refine to an equitable colouring, pick the
first largest non-singleton cell, branch on each of its vertices.  Leaves are
discrete colourings; a leaf's certificate is the relabelled sorted edge list,
and the canonical form is the smallest certificate over all leaves.

Two leaves with equal certificates differ by an automorphism.  Those
automorphisms prune siblings lying in a common orbit of the pointwise
stabiliser of the current path, and let the search jump back to the point
where it left the first (or best) path.  Since every child of every
first-path node is either explored or pruned by known automorphisms, the
automorphisms found generate the whole group, which is what
:func:`vertex_orbits` relies on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import QuartGraph

MAX_ORDER = 128


class SizeCapExceeded(ValueError):
    pass


def _refine(adj, colors: list[int]) -> list[int]:
    """Coarsest equitable refinement, colours renumbered ``0..k-1`` canonically."""
    n = len(colors)
    index = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [index[c] for c in colors]
    k = len(index)
    while k < n:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in adj[v]]))) for v in range(n)]
        uniq = sorted(set(sigs))
        if len(uniq) == k:
            break
        index = {s: i for i, s in enumerate(uniq)}
        colors = [index[s] for s in sigs]
        k = len(uniq)
    return colors


def _target_cell(colors: list[int]) -> list[int]:
    sizes: dict[int, int] = {}
    for c in colors:
        sizes[c] = sizes.get(c, 0) + 1
    best = max(sizes.values())
    color = min(c for c, s in sizes.items() if s == best)
    return [v for v, c in enumerate(colors) if c == color]


def _individualize(colors: list[int], v: int) -> list[int]:
    c = colors[v]
    return [2 * x + (1 if x == c and w != v else 0) for w, x in enumerate(colors)]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def _orbits(n: int, gens) -> _UnionFind:
    uf = _UnionFind(n)
    for g in gens:
        for v in range(n):
            uf.union(v, g[v])
    return uf


class _Search:
    def __init__(self, g: QuartGraph):
        self.n = g.n
        self.adj = g.adjacency
        self.edges = g.edges()
        self.first = None  # (cert, perm, path)
        self.best = None
        self.generators: list[tuple[int, ...]] = []

    def certificate(self, perm: list[int]) -> bytes:
        rel = sorted((perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u]) for u, v in self.edges)
        out = bytearray([self.n])
        for u, v in rel:
            out.append(u)
            out.append(v)
        return bytes(out)

    def _automorphism(self, ref_perm, perm) -> tuple[int, ...]:
        inv = [0] * self.n
        for v, label in enumerate(perm):
            inv[label] = v
        return tuple(inv[ref_perm[u]] for u in range(self.n))

    @staticmethod
    def _common(p, q) -> int:
        k = 0
        for x, y in zip(p, q):
            if x != y:
                break
            k += 1
        return k

    def leaf(self, perm: list[int], path: list[int]):
        cert = self.certificate(perm)
        if self.first is None:
            self.first = self.best = (cert, perm, path)
            return None
        for ref in (self.first, self.best):
            if cert == ref[0]:
                aut = self._automorphism(ref[1], perm)
                if any(aut[v] != v for v in range(self.n)):
                    self.generators.append(aut)
                return self._common(path, ref[2])
        if cert < self.best[0]:
            self.best = (cert, perm, path)
        return None

    def run(self, colors: list[int], path: list[int]):
        colors = _refine(self.adj, colors)
        if len(set(colors)) == self.n:
            return self.leaf(colors, path)
        depth = len(path)
        explored: list[int] = []
        uf, ngens = None, -1
        for v in _target_cell(colors):
            if explored:
                if ngens != len(self.generators):
                    ngens = len(self.generators)
                    fixing = [g for g in self.generators if all(g[p] == p for p in path)]
                    uf = _orbits(self.n, fixing)
                rv = uf.find(v)
                if any(uf.find(u) == rv for u in explored):
                    continue
            explored.append(v)
            jump = self.run(_individualize(colors, v), path + [v])
            if jump is not None and jump < depth:
                return jump
        return None


@dataclass(frozen=True)
class CanonicalForm:
    certificate: bytes
    labeling: tuple[int, ...]  # vertex -> canonical label
    generators: tuple[tuple[int, ...], ...]


def canonical_form(g: QuartGraph, colors=None) -> CanonicalForm:
    if g.n > MAX_ORDER:
        raise SizeCapExceeded(f"graphs above {MAX_ORDER} vertices are not supported")
    if g.n == 0:
        return CanonicalForm(bytes([0]), (), ())
    if colors is None:
        colors = [len(nbrs) for nbrs in g.adjacency]
    else:
        colors = list(colors)
    search = _Search(g)
    search.run(colors, [])
    cert, perm, _ = search.best
    return CanonicalForm(cert, tuple(perm), tuple(search.generators))


def canonical_certificate(g: QuartGraph) -> bytes:
    """Isomorphism-class certificate, independent of vertex order."""
    return canonical_form(g).certificate


def vertex_orbits(g: QuartGraph) -> list[int]:
    """Orbit representative (smallest vertex) for each vertex under Aut(g)."""
    form = canonical_form(g)
    uf = _orbits(g.n, form.generators)
    return [uf.find(v) for v in range(g.n)]


def is_vertex_transitive(g: QuartGraph) -> bool:
    return all(r == 0 for r in vertex_orbits(g))
