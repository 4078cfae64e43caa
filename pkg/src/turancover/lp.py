"""Exact and floating-point solvers for the covering/matching LP pair.

For a t-uniform hypergraph H the two programs are

    cover:    minimize sum_v x_v   subject to  sum_{v in e} x_v >= 1  for every edge e,  x >= 0
    matching: maximize sum_e y_e   subject to  sum_{e through v} y_e <= 1  for every vertex v,  y >= 0

They share one optimal value, and any optimal pair is complementary:
a positively weighted vertex sits on a tight matching constraint and a
positively weighted edge on a tight covering constraint.  That tightness
also bounds the primal support: every supported vertex v has
sum_{e through v} y_e = 1, so |support| = sum_{v in S} sum_{e through v} y_e
<= t * sum_e y_e = t * objective.

Exact mode runs a dense tableau simplex over arbitrary-precision
rationals with Bland's anticycling pivot rule, so termination is
guaranteed and optima are exact.  The tableau is oriented so the row
count is min(n, m): with few vertices the matching program is solved
from its slack basis, with few edges the covering program is solved in
two phases, and in either orientation the other program's optimum is
read off the final reduced costs of the slack or surplus columns.
Variables enter in id order, which pins down the returned basic
solution.

Float mode delegates to scipy's HiGHS dual simplex for instances past
the exact-mode size guard.  Support membership then uses a 1e-9
tolerance and no exactness assertions are made.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError, ResourceLimitError, VerificationError
from .guards import resolve_limit
from .hypergraph import Hypergraph

try:  # gmpy2 rationals are several times faster inside the pivot loop
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _Q

__all__ = [
    "LPSolution",
    "SlacknessReport",
    "solve_vc_lp",
    "solve_matching_lp",
    "check_complementary_slackness",
    "EXACT_SIZE_GUARD",
    "FLOAT_SUPPORT_TOL",
]

EXACT_SIZE_GUARD = 50_000
FLOAT_SUPPORT_TOL = 1e-9

_ZERO = _Q(0)
_ONE = _Q(1)


@dataclass(frozen=True)
class LPSolution:
    """One side of the covering/matching pair.

    ``kind`` is "primal" for vertex weights of the covering program and
    "dual" for edge weights of the matching program.  ``values`` maps ids
    to nonzero weights (Fractions in exact mode, floats otherwise) and
    must not be mutated.
    """

    kind: str
    values: dict
    objective: object
    mode: str

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.values))

    def value(self, i: int):
        return self.values.get(i, 0)


@dataclass(frozen=True)
class SlacknessReport:
    """Outcome of a successful complementary-slackness verification."""

    objective: Fraction
    support_size: int
    support_bound: Fraction
    tight_vertices: int
    tight_edges: int


class _Tableau:
    """Dense simplex tableau over exact rationals, Bland pivoting."""

    def __init__(self, rows, rhs, basis, ncols):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.ncols = ncols

    def reduced_costs(self, costs):
        red = [_Q(c) for c in costs]
        for r, row in enumerate(self.rows):
            cb = costs[self.basis[r]]
            if cb:
                for j in range(self.ncols):
                    if row[j]:
                        red[j] -= cb * row[j]
        return red

    def objective(self, costs):
        total = _ZERO
        for r in range(len(self.rows)):
            cb = costs[self.basis[r]]
            if cb:
                total += cb * self.rhs[r]
        return total

    def pivot(self, r, c, red):
        row = self.rows[r]
        piv = row[c]
        if piv != _ONE:
            inv = _ONE / piv
            row = [v * inv for v in row]
            self.rows[r] = row
            self.rhs[r] = self.rhs[r] * inv
        for i, other in enumerate(self.rows):
            if i != r:
                f = other[c]
                if f:
                    self.rows[i] = [a - f * b for a, b in zip(other, row)]
                    self.rhs[i] = self.rhs[i] - f * self.rhs[r]
        f = red[c]
        if f:
            for j in range(self.ncols):
                if row[j]:
                    red[j] -= f * row[j]
        self.basis[r] = c

    def minimize(self, red, allowed):
        """Pivot to optimality: lowest-index entering column with negative
        reduced cost, min-ratio row with ties broken by lowest basic id."""
        while True:
            enter = -1
            for j in range(self.ncols):
                if allowed[j] and red[j] < _ZERO:
                    enter = j
                    break
            if enter < 0:
                return
            leave = -1
            best_ratio = None
            best_var = -1
            for r, row in enumerate(self.rows):
                a = row[enter]
                if a > _ZERO:
                    ratio = self.rhs[r] / a
                    if (
                        best_ratio is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and self.basis[r] < best_var)
                    ):
                        best_ratio, best_var, leave = ratio, self.basis[r], r
            if leave < 0:
                raise VerificationError("internal: unbounded tableau in a bounded program")
            self.pivot(leave, enter, red)


def _pair_matching_oriented(H: Hypergraph):
    """Solve the pair with one row per vertex (good when n <= m).

    Columns are the edge weights then one slack per vertex; the slack
    basis is immediately feasible.  At optimality the covering weights
    are the reduced costs of the slack columns.
    """
    n, m = H.n, H.m
    ncols = m + n
    incident = [[] for _ in range(n)]
    for ei, e in enumerate(H.edges):
        for v in e:
            incident[v].append(ei)
    rows = []
    for v in range(n):
        row = [_ZERO] * ncols
        for ei in incident[v]:
            row[ei] = _ONE
        row[m + v] = _ONE
        rows.append(row)
    tab = _Tableau(rows, [_ONE] * n, list(range(m, m + n)), ncols)
    costs = [-_ONE] * m + [_ZERO] * n
    red = tab.reduced_costs(costs)
    tab.minimize(red, [True] * ncols)
    y = {}
    for r in range(n):
        if tab.basis[r] < m and tab.rhs[r] != _ZERO:
            y[tab.basis[r]] = tab.rhs[r]
    x = {v: red[m + v] for v in range(n) if red[m + v] != _ZERO}
    return -tab.objective(costs), x, y


def _pair_covering_oriented(H: Hypergraph):
    """Solve the pair with one row per edge (good when m < n).

    Columns are vertex weights, surplus, then one artificial per row.
    Phase one drives the artificials to zero, phase two minimizes the
    true cost; the matching weights are the reduced costs of the surplus
    columns at optimality.
    """
    n, m = H.n, H.m
    art = n + m
    ncols = n + 2 * m
    rows = []
    for ei, e in enumerate(H.edges):
        row = [_ZERO] * ncols
        for v in e:
            row[v] = _ONE
        row[n + ei] = -_ONE
        row[art + ei] = _ONE
        rows.append(row)
    tab = _Tableau(rows, [_ONE] * m, list(range(art, art + m)), ncols)
    allowed = [True] * art + [False] * m  # artificials may never re-enter

    phase1 = [_ZERO] * art + [_ONE] * m
    red = tab.reduced_costs(phase1)
    tab.minimize(red, allowed)
    if tab.objective(phase1) != _ZERO:
        raise VerificationError("internal: covering program reported infeasible")
    for r in range(m):
        if tab.basis[r] >= art:
            row = tab.rows[r]
            piv = next((j for j in range(art) if row[j]), -1)
            if piv >= 0:
                tab.pivot(r, piv, red)
            # else the row is redundant; its artificial stays basic at zero

    phase2 = [_ONE] * n + [_ZERO] * (ncols - n)
    red = tab.reduced_costs(phase2)
    tab.minimize(red, allowed)
    x = {}
    for r in range(m):
        if tab.basis[r] < n and tab.rhs[r] != _ZERO:
            x[tab.basis[r]] = tab.rhs[r]
    y = {ei: red[n + ei] for ei in range(m) if red[n + ei] != _ZERO}
    return tab.objective(phase2), x, y


def _to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def _solve_pair_exact(H: Hypergraph, size_guard=None):
    guard = resolve_limit(size_guard, EXACT_SIZE_GUARD)
    if H.m == 0:
        return Fraction(0), {}, {}
    if H.n * H.m > guard:
        raise ResourceLimitError(
            f"exact mode needs n*m <= {guard}, got {H.n}*{H.m} = {H.n * H.m}"
        )
    if H.n <= H.m:
        obj, x, y = _pair_matching_oriented(H)
    else:
        obj, x, y = _pair_covering_oriented(H)
    return (
        _to_fraction(obj),
        {v: _to_fraction(q) for v, q in x.items()},
        {e: _to_fraction(q) for e, q in y.items()},
    )


def _solve_vc_float(H: Hypergraph):
    import numpy as np
    from scipy import sparse
    from scipy.optimize import linprog

    rows, cols = [], []
    for ei, e in enumerate(H.edges):
        rows.extend([ei] * len(e))
        cols.extend(e)
    A = sparse.csr_matrix((np.full(len(rows), -1.0), (rows, cols)), shape=(H.m, H.n))
    res = linprog(
        np.ones(H.n),
        A_ub=A,
        b_ub=-np.ones(H.m),
        bounds=(0, None),
        method="highs-ds",
    )
    if not res.success:  # pragma: no cover - the program is feasible and bounded
        raise VerificationError(f"float covering solve failed: {res.message}")
    values = {int(i): float(v) for i, v in enumerate(res.x) if v > FLOAT_SUPPORT_TOL}
    return float(res.fun), values


def _solve_matching_float(H: Hypergraph):
    import numpy as np
    from scipy import sparse
    from scipy.optimize import linprog

    rows, cols = [], []
    for ei, e in enumerate(H.edges):
        rows.extend(e)
        cols.extend([ei] * len(e))
    A = sparse.csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(H.n, H.m))
    res = linprog(
        -np.ones(H.m),
        A_ub=A,
        b_ub=np.ones(H.n),
        bounds=(0, None),
        method="highs-ds",
    )
    if not res.success:  # pragma: no cover
        raise VerificationError(f"float matching solve failed: {res.message}")
    values = {int(i): float(v) for i, v in enumerate(res.x) if v > FLOAT_SUPPORT_TOL}
    return -float(res.fun), values


def solve_vc_lp(H: Hypergraph, mode: str = "exact", size_guard=None) -> LPSolution:
    """Optimal fractional vertex cover of H.

    Exact mode returns the basic optimal solution the simplex terminates
    at (a vertex of the covering polytope) with a Fraction objective.
    An edgeless instance yields the empty solution with objective 0.
    """
    if mode == "exact":
        obj, x, _ = _solve_pair_exact(H, size_guard)
        return LPSolution("primal", x, obj, "exact")
    if mode == "float":
        if H.m == 0:
            return LPSolution("primal", {}, 0.0, "float")
        obj, x = _solve_vc_float(H)
        return LPSolution("primal", x, obj, "float")
    raise ParameterError(f"unknown mode {mode!r}")


def solve_matching_lp(H: Hypergraph, mode: str = "exact", size_guard=None) -> LPSolution:
    """Optimal fractional matching of H; same conventions as solve_vc_lp."""
    if mode == "exact":
        obj, _, y = _solve_pair_exact(H, size_guard)
        return LPSolution("dual", y, obj, "exact")
    if mode == "float":
        if H.m == 0:
            return LPSolution("dual", {}, 0.0, "float")
        obj, y = _solve_matching_float(H)
        return LPSolution("dual", y, obj, "float")
    raise ParameterError(f"unknown mode {mode!r}")


def check_complementary_slackness(
    primal: LPSolution, dual: LPSolution, H: Hypergraph
) -> SlacknessReport:
    """Verify an exact optimal pair certificate.

    Checks feasibility of both solutions, equality of objectives, the
    complementary tightness conditions, and the support bound
    |support(x)| <= t * objective.  Raises VerificationError naming the
    offending vertex or edge on the first violation.
    """
    if primal.mode != "exact" or dual.mode != "exact":
        raise ParameterError("slackness verification requires exact-mode solutions")
    if primal.kind != "primal" or dual.kind != "dual":
        raise ParameterError("expected a (primal, dual) pair in that order")
    for v, xv in primal.values.items():
        if not 0 <= v < H.n:
            raise ParameterError(f"primal id {v} out of range")
        if xv < 0:
            raise VerificationError(f"vertex {v} has negative weight {xv}")
    for e, ye in dual.values.items():
        if not 0 <= e < H.m:
            raise ParameterError(f"dual id {e} out of range")
        if ye < 0:
            raise VerificationError(f"edge {e} has negative weight {ye}")

    edge_load = []
    for ei, e in enumerate(H.edges):
        load = sum(primal.value(v) for v in e)
        if load < 1:
            raise VerificationError(f"edge {ei} is undercovered: total weight {load}")
        edge_load.append(load)
    vertex_load = {}
    for ei, e in enumerate(H.edges):
        ye = dual.value(ei)
        if ye:
            for v in e:
                vertex_load[v] = vertex_load.get(v, Fraction(0)) + ye
    for v, load in vertex_load.items():
        if load > 1:
            raise VerificationError(f"vertex {v} is overloaded: matching weight {load}")

    tight_v = 0
    for v in primal.support:
        if vertex_load.get(v, Fraction(0)) != 1:
            raise VerificationError(
                f"vertex {v} has positive weight but its matching constraint is slack"
            )
        tight_v += 1
    tight_e = 0
    for ei in dual.support:
        if edge_load[ei] != 1:
            raise VerificationError(
                f"edge {ei} has positive weight but its covering constraint is slack"
            )
        tight_e += 1

    # tightness plus feasibility already forces equal objectives; kept as a net
    if primal.objective != dual.objective:
        raise VerificationError(
            f"objectives differ: cover {primal.objective} vs matching {dual.objective}"
        )

    bound = Fraction(H.t) * Fraction(primal.objective)
    size = len(primal.support)
    if size > bound:
        raise VerificationError(f"support size {size} exceeds t * objective = {bound}")
    return SlacknessReport(Fraction(primal.objective), size, bound, tight_v, tight_e)
