"""Uniform hypergraphs, k-subset blow-ups, and feasibility checks.

Conventions: vertices are dense integer ids 0..n-1, every edge is a
strictly increasing tuple of t distinct ids, and the edge list is sorted
lexicographically with duplicates rejected.  The canonical form makes
equality structural and keeps every downstream artifact reproducible.

All types are immutable after construction and all operations are pure
functions, so values can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import ParameterError
from .setcover import SetSystem

__all__ = [
    "Hypergraph",
    "BlowUp",
    "blow_up",
    "is_simple",
    "is_vertex_cover",
    "is_matching",
    "dual",
]


@dataclass(frozen=True)
class Hypergraph:
    """A t-uniform hypergraph in canonical form.

    ``n`` may exceed the ids actually used (isolated vertices are fine).
    An edgeless hypergraph with n = 0 is allowed so that blow-ups of
    edgeless inputs stay representable.
    """

    t: int
    n: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.t < 2:
            raise ParameterError(f"uniformity must be at least 2, got {self.t}")
        if self.n < 0 or (self.n < self.t and not (self.n == 0 and not self.edges)):
            raise ParameterError(f"vertex count {self.n} below uniformity {self.t}")
        norm = []
        for e in self.edges:
            te = tuple(sorted(e))
            if len(te) != self.t or len(set(te)) != self.t:
                raise ParameterError(f"edge {e} is not a {self.t}-subset")
            if te[0] < 0 or te[-1] >= self.n:
                raise ParameterError(f"edge {e} has out-of-range vertex ids")
            norm.append(te)
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise ParameterError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class BlowUp:
    """A blown-up hypergraph together with its vertex labels.

    Vertex i of ``hyper`` stands for the k-subset ``labels[i]`` of the
    base vertex set 0..base_n-1.  Labels are strictly increasing tuples,
    listed in lexicographic order, one per blow-up vertex.
    """

    hyper: Hypergraph
    labels: tuple[tuple[int, ...], ...]
    base_t: int
    base_n: int
    k: int

    def __post_init__(self):
        if not 1 <= self.k < self.base_t:
            raise ParameterError(f"subset size {self.k} not in [1, {self.base_t})")
        if len(self.labels) != self.hyper.n:
            raise ParameterError("one label per blow-up vertex required")
        if self.hyper.edges and self.hyper.t != comb(self.base_t, self.k):
            raise ParameterError("blow-up uniformity does not match C(base_t, k)")
        norm = []
        for lab in self.labels:
            tl = tuple(sorted(lab))
            if len(tl) != self.k or len(set(tl)) != self.k:
                raise ParameterError(f"label {lab} is not a {self.k}-subset")
            if tl and (tl[0] < 0 or tl[-1] >= self.base_n):
                raise ParameterError(f"label {lab} has out-of-range base ids")
            norm.append(tl)
        if sorted(norm) != norm or len(set(norm)) != len(norm):
            raise ParameterError("labels must be distinct and lexicographically sorted")
        object.__setattr__(self, "labels", tuple(norm))


def blow_up(base: Hypergraph, k: int) -> BlowUp:
    """Build the k-subset blow-up of ``base``.

    Vertices are the k-subsets of the base vertex set contained in at
    least one base edge, numbered in lexicographic subset order.  Each
    base edge contributes the edge collecting all C(t, k) of its
    k-subsets.  For k = t - 1 the result is simple: two blow-up edges
    meet in at most one vertex because two distinct base edges share at
    most t - 1 base vertices, hence at most one (t-1)-subset.
    """
    if not 1 <= k < base.t:
        raise ParameterError(f"subset size {k} not in [1, {base.t})")
    labels = sorted({sub for e in base.edges for sub in combinations(e, k)})
    index = {lab: i for i, lab in enumerate(labels)}
    seen = set()
    edges = []
    for e in base.edges:
        be = tuple(sorted(index[sub] for sub in combinations(e, k)))
        if be not in seen:  # distinct base edges cannot collide; kept as a safety net
            seen.add(be)
            edges.append(be)
    hyper = Hypergraph(comb(base.t, k), len(labels), tuple(edges))
    return BlowUp(hyper, tuple(labels), base.t, base.n, k)


def is_simple(H: Hypergraph) -> bool:
    """True when every pair of distinct edges shares at most one vertex."""
    sets = [set(e) for e in H.edges]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if len(sets[i] & sets[j]) > 1:
                return False
    return True


def is_vertex_cover(H: Hypergraph, cover) -> bool:
    """True when every edge of H contains a vertex of ``cover``."""
    cov = set(cover)
    for v in cov:
        if not isinstance(v, int) or not 0 <= v < H.n:
            raise ParameterError(f"vertex id {v} out of range")
    return all(not cov.isdisjoint(e) for e in H.edges)


def is_matching(H: Hypergraph, edge_ids) -> bool:
    """True when the selected edges are pairwise disjoint.

    ``edge_ids`` must be distinct valid indices into H.edges.
    """
    ids = list(edge_ids)
    if len(set(ids)) != len(ids):
        raise ParameterError("edge ids must be distinct")
    used: set[int] = set()
    for ei in ids:
        if not isinstance(ei, int) or not 0 <= ei < H.m:
            raise ParameterError(f"edge id {ei} out of range")
        e = set(H.edges[ei])
        if used & e:
            return False
        used |= e
    return True


def dual(H: Hypergraph) -> SetSystem:
    """Edge/vertex incidence transpose as a set system.

    The universe is the edge ids of H; each vertex with nonempty
    incidence contributes the set of edges through it.  A vertex cover of
    H is exactly a set cover of the dual, and when H is simple the dual
    is a simple system.
    """
    incidence = [[] for _ in range(H.n)]
    for ei, e in enumerate(H.edges):
        for v in e:
            incidence[v].append(ei)
    return SetSystem(H.m, tuple(tuple(inc) for inc in incidence if inc))
