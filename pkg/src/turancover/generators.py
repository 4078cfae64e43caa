"""Instance constructions: complete and random hypergraphs, pattern-free
random instances, the combinatorial-lines hypergraph, a set system that
forces the greedy cover algorithm to overshoot, and the cloud expansion
that turns any hypergraph into a simple one.

Everything randomized takes an explicit seed and is reproducible: the
same arguments always yield the same instance, byte for byte after
serialization.
"""

from __future__ import annotations

import math
import random
from itertools import combinations, product

from .errors import ParameterError, ResourceLimitError
from .guards import resolve_limit
from .hypergraph import Hypergraph
from .oracles import contains_subhypergraph, rho
from .setcover import SetSystem

__all__ = [
    "complete",
    "random_hypergraph",
    "f_free_random",
    "combinatorial_lines",
    "greedy_hard_setsystem",
    "simplify_reduction",
    "three_tent",
]

LINES_GUARD = 50_000


def complete(n: int, t: int) -> Hypergraph:
    """All t-subsets of n vertices, in lexicographic order."""
    if n < t:
        raise ParameterError(f"need at least {t} vertices, got {n}")
    return Hypergraph(t, n, list(combinations(range(n), t)))


def random_hypergraph(n: int, t: int, p: float, seed: int) -> Hypergraph:
    """Keep each of the C(n,t) possible edges independently with probability p.

    Candidate edges are scanned in lexicographic order with one RNG draw
    each, so the output is a pure function of (n, t, p, seed).
    """
    if not 0 <= p <= 1:
        raise ParameterError(f"probability must lie in [0,1], got {p}")
    if n < t:
        raise ParameterError(f"need at least {t} vertices, got {n}")
    rng = random.Random(seed)
    edges = [e for e in combinations(range(n), t) if rng.random() < p]
    return Hypergraph(t, n, edges)


def f_free_random(n: int, t: int, family, p=None, seed: int = 0) -> Hypergraph:
    """Random hypergraph purged of every copy of the given patterns.

    Samples edges with probability p (default n to the power -1/rho,
    with rho minimized over the family), then repeatedly locates the
    first remaining copy of a family member in deterministic search
    order and deletes that copy's edges.  The survivor contains no copy
    of any member: one would have been found and deleted.
    """
    family = list(family)
    if not family:
        raise ParameterError("need at least one pattern to exclude")
    if p is None:
        density = min(rho(F) for F in family)
        p = float(n) ** (-1 / float(density))
    H = random_hypergraph(n, t, p, seed)
    while True:
        hit = None
        for F in family:
            found = contains_subhypergraph(H, F)
            if found is not None:
                hit = found
                break
        if hit is None:
            return H
        doomed = set(hit.edge_map.values())
        H = Hypergraph(H.t, H.n, [e for i, e in enumerate(H.edges) if i not in doomed])


def combinatorial_lines(n: int, limit=None) -> Hypergraph:
    """The 3-uniform hypergraph of combinatorial lines of the n-cube over
    three symbols.

    Points of {1,2,3}^n get ids by base-3 place value (first coordinate
    most significant, symbol s contributing s-1).  Each template over
    {1,2,3,wildcard} with at least one wildcard yields the line of the
    three points obtained by setting every wildcard to a common symbol,
    so there are 4^n - 3^n edges.
    """
    if n < 1:
        raise ParameterError(f"cube dimension must be positive, got {n}")
    cap = resolve_limit(limit, LINES_GUARD)
    if 4 ** n > cap:
        raise ResourceLimitError(f"4^{n} templates exceed limit {cap}")
    weights = [3 ** (n - 1 - i) for i in range(n)]

    def point_id(symbols) -> int:
        return sum((s - 1) * w for s, w in zip(symbols, weights))

    edges = []
    for template in product((1, 2, 3, None), repeat=n):
        if None not in template:
            continue
        line = tuple(point_id(s if s is not None else fill for s in template)
                     for fill in (1, 2, 3))
        edges.append(line)
    return Hypergraph(3, 3 ** n, edges)


def greedy_hard_setsystem(k: int) -> SetSystem:
    """Set system on k*k elements where greedy ignores the k-block optimum.

    The universe splits into k blocks of k consecutive elements.  On top
    of them, ceil((k-1) ln k) pairwise disjoint decoy sets are built: each
    round ranks blocks by how many elements they still hold (ties to the
    lower block index), takes the maximum remaining element from each of
    the top p blocks where p is the largest remaining count, and retires
    those elements.  Decoys come first in the listing so that greedy,
    which breaks coverage ties toward lower set ids, prefers them;
    following them all costs about (k-1) ln k picks against the optimum k.
    """
    if k < 2:
        raise ParameterError(f"block count must be at least 2, got {k}")
    blocks = [list(range(j * k, (j + 1) * k)) for j in range(k)]
    decoys = []
    for _ in range(math.ceil((k - 1) * math.log(k))):
        order = sorted(range(k), key=lambda j: (-len(blocks[j]), j))
        p = len(blocks[order[0]])
        chosen = []
        for j in order[:p]:
            chosen.append(blocks[j].pop())
        decoys.append(tuple(sorted(chosen)))
    full_blocks = [tuple(range(j * k, (j + 1) * k)) for j in range(k)]
    return SetSystem(k * k, decoys + full_blocks)


def simplify_reduction(G: Hypergraph, B: int, P: int, seed: int) -> Hypergraph:
    """Cloud expansion producing a simple hypergraph from any input.

    Each base vertex v becomes a cloud of B copies (ids v*B .. v*B+B-1).
    Every base edge spawns P candidate edges picking one cloud copy per
    endpoint (endpoints consume RNG draws in sorted order).  Candidates
    are then scanned in generation order and one is kept only when it
    meets every previously kept edge in at most one vertex, so the later
    member of any conflicting pair is the one dropped.  Exact duplicates
    conflict in t places and are dropped the same way.
    """
    if B < 1 or P < 1:
        raise ParameterError("cloud size and per-edge count must be positive")
    rng = random.Random(seed)
    candidates = []
    for edge in G.edges:
        for _ in range(P):
            candidates.append(tuple(v * B + rng.randrange(B) for v in edge))
    kept: list[frozenset] = []
    edges = []
    for cand in candidates:
        cset = frozenset(cand)
        if all(len(cset & old) <= 1 for old in kept):
            kept.append(cset)
            edges.append(cand)
    return Hypergraph(G.t, G.n * B, edges)


def three_tent() -> Hypergraph:
    """The canonical 7-vertex tent: three edges through a common apex and
    one crossing edge meeting each in a single distinct vertex."""
    return Hypergraph(3, 7, [(0, 1, 4), (0, 2, 5), (0, 3, 6), (4, 5, 6)])
