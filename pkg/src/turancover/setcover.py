"""Set cover on simple set systems.

A set system is *simple* (linear) when any two member sets share at most
one element.  On simple systems the greedy algorithm is much better than
its general ln(n) guarantee: it uses at most opt * (1 + ln(n)/2) sets.
``greedy_ratio_check`` asserts that bound against a known optimum, and
``brute_set_cover`` computes the optimum exactly on small instances so
the two can be cross-checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError, ResourceLimitError, VerificationError
from .guards import resolve_limit

__all__ = [
    "SetSystem",
    "GreedyTrace",
    "is_simple_system",
    "dual_system",
    "greedy_set_cover",
    "greedy_ratio_check",
    "brute_set_cover",
]

BRUTE_SET_LIMIT = 30


@dataclass(frozen=True)
class SetSystem:
    """Universe 0..n-1 plus an ordered family of subsets.

    Sets are stored as strictly increasing tuples.  Coverability of the
    universe is not assumed; it is checked when a cover is requested.
    """

    n: int
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError("universe size must be nonnegative")
        norm = []
        for idx, s in enumerate(self.sets):
            ts = tuple(sorted(s))
            if len(set(ts)) != len(ts):
                raise ParameterError(f"set {idx} has repeated elements")
            if ts and (ts[0] < 0 or ts[-1] >= self.n):
                raise ParameterError(f"set {idx} has out-of-range elements")
            norm.append(ts)
        object.__setattr__(self, "sets", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.sets)


@dataclass(frozen=True)
class GreedyTrace:
    """Pick-by-pick record of a greedy run.

    ``picked[i]`` is the chosen set id, ``newly_covered[i]`` how many new
    elements it covered, ``uncovered_after[i]`` how many remained.
    """

    picked: tuple[int, ...]
    newly_covered: tuple[int, ...]
    uncovered_after: tuple[int, ...]


def is_simple_system(system: SetSystem) -> bool:
    """True when every pair of member sets intersects in at most one element."""
    sets = [set(s) for s in system.sets]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if len(sets[i] & sets[j]) > 1:
                return False
    return True


def dual_system(system: SetSystem) -> SetSystem:
    """Swap the roles of elements and sets.

    The dual's universe is the set ids of ``system``; element x of the
    original contributes the set of ids containing x.  Elements covered
    by nothing contribute nothing (empty sets are omitted), so applying
    this twice returns the original system restricted to its nonempty
    incidences, with elements renumbered by rank.
    """
    incidence = [[] for _ in range(system.n)]
    for sid, s in enumerate(system.sets):
        for x in s:
            incidence[x].append(sid)
    return SetSystem(len(system.sets), tuple(tuple(inc) for inc in incidence if inc))


def greedy_set_cover(system: SetSystem) -> GreedyTrace:
    """Repeatedly pick the set covering the most uncovered elements.

    Ties break toward the lowest set id.  Raises ParameterError naming an
    uncoverable element when the family does not cover the universe.
    """
    uncovered = set(range(system.n))
    member_sets = [set(s) for s in system.sets]
    picked, newly, after = [], [], []
    while uncovered:
        best_id = None
        best_gain = 0
        for sid, s in enumerate(member_sets):
            gain = len(s & uncovered)
            if gain > best_gain:
                best_gain, best_id = gain, sid
        if best_id is None:
            raise ParameterError(
                f"universe not coverable: element {min(uncovered)} lies in no set"
            )
        uncovered -= member_sets[best_id]
        picked.append(best_id)
        newly.append(best_gain)
        after.append(len(uncovered))
    return GreedyTrace(tuple(picked), tuple(newly), tuple(after))


def greedy_ratio_check(system: SetSystem, opt: int) -> Fraction:
    """Run greedy and assert picks/opt <= ln(n)/2 + 1.

    Requires a simple system and the exact optimum ``opt`` (e.g. from
    ``brute_set_cover``).  Returns the achieved ratio as a Fraction.
    """
    if opt < 1:
        raise ParameterError("opt must be a positive integer")
    if not is_simple_system(system):
        raise ParameterError("ratio bound only applies to simple systems")
    trace = greedy_set_cover(system)
    ratio = Fraction(len(trace.picked), opt)
    bound = math.log(system.n) / 2 + 1
    if float(ratio) > bound + 1e-12:
        raise VerificationError(
            f"greedy used {len(trace.picked)} sets, opt {opt}: "
            f"ratio {float(ratio):.4f} exceeds ln(n)/2 + 1 = {bound:.4f}"
        )
    return ratio


def brute_set_cover(system: SetSystem, limit: int | None = None) -> int:
    """Exact minimum cover size by branch and bound.

    Branches on the sets containing the lowest uncovered element; prunes
    with a count/max-set-size bound.  Guarded to at most ``limit``
    (default 30) sets.
    """
    max_sets = resolve_limit(limit, BRUTE_SET_LIMIT)
    if system.m > max_sets:
        raise ResourceLimitError(f"{system.m} sets exceeds brute-force limit {max_sets}")
    if system.n == 0:
        return 0
    member_sets = [set(s) for s in system.sets]
    containing = [[] for _ in range(system.n)]
    for sid, s in enumerate(system.sets):
        for x in s:
            containing[x].append(sid)
    for x in range(system.n):
        if not containing[x]:
            raise ParameterError(f"universe not coverable: element {x} lies in no set")
    best = len(greedy_set_cover(system).picked)
    max_size = max(len(s) for s in member_sets)

    def descend(uncovered, count):
        nonlocal best
        if not uncovered:
            best = min(best, count)
            return
        if count + -(-len(uncovered) // max_size) >= best:
            return
        x = min(uncovered)
        for sid in containing[x]:
            descend(uncovered - member_sets[sid], count + 1)

    descend(frozenset(range(system.n)), 0)
    return best
