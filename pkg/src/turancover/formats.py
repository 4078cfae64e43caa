"""Line-oriented text formats for every object that crosses a pipe.

All formats are ASCII with LF newlines; lines starting with '#' and
blank lines are skipped on input and never emitted on output, so equal
objects serialize to identical bytes.  Parse failures raise ParseError
carrying the 1-based line number of the offending input line.

Hypergraphs: header ``HG <t> <n> <m>`` then m lines of t vertex ids.
A blow-up appends a ``LABELS`` line plus one line per vertex giving its
base subset; the base shape is reconstructed from the label size and
the edge uniformity, with the base vertex count taken as one past the
largest labeled id.

Set systems: ``SS <n> <m>`` then m lines ``<size> e1 ... e_size``.
LP solutions: one ``<id> <value>`` line per supported variable plus a
final ``OBJ <value>``, values as num/den rationals in exact mode and
17-significant-digit floats otherwise.  Covers: ``COVER <size>``, the
sorted ids one per line, then BREAKDOWN / LP / SEED summary lines.
Matchings: ``MATCHING <k>`` plus k edge-id lines.  Greedy traces: one
``<set_id> <newly_covered> <uncovered_after>`` line per pick.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import ParameterError, ParseError
from .hypergraph import BlowUp, Hypergraph
from .lp import LPSolution
from .rounding import CoverResult
from .setcover import GreedyTrace, SetSystem

__all__ = [
    "serialize_hypergraph",
    "serialize_blowup",
    "serialize_instance",
    "parse_instance",
    "serialize_setsystem",
    "parse_setsystem",
    "serialize_lp_solution",
    "parse_lp_solution",
    "serialize_cover",
    "parse_cover",
    "serialize_matching",
    "parse_matching",
    "serialize_greedy_trace",
    "parse_document",
]


class _Cursor:
    """Iterator over meaningful input lines that remembers line numbers."""

    def __init__(self, text: str):
        self.rows = [
            (i + 1, stripped)
            for i, line in enumerate(text.splitlines())
            if (stripped := line.strip()) and not stripped.startswith("#")
        ]
        self.pos = 0

    def done(self) -> bool:
        return self.pos >= len(self.rows)

    def peek(self):
        return self.rows[self.pos] if not self.done() else (None, None)

    def take(self, expected: str | None = None):
        if self.done():
            raise ParseError(f"unexpected end of input, expected {expected or 'more data'}")
        lineno, text = self.rows[self.pos]
        self.pos += 1
        return lineno, text

    def fail(self, lineno, message):
        raise ParseError(message, line=lineno)


def _ints(cursor: _Cursor, lineno: int, tokens, what: str) -> list[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        cursor.fail(lineno, f"malformed {what}: non-integer token")


# ---------------------------------------------------------------- hypergraphs

def serialize_hypergraph(H: Hypergraph) -> str:
    lines = [f"HG {H.t} {H.n} {H.m}"]
    lines.extend(" ".join(map(str, edge)) for edge in H.edges)
    return "\n".join(lines) + "\n"


def serialize_blowup(B: BlowUp) -> str:
    lines = [serialize_hypergraph(B.hyper).rstrip("\n"), "LABELS"]
    lines.extend(" ".join(map(str, label)) for label in B.labels)
    return "\n".join(lines) + "\n"


def serialize_instance(instance) -> str:
    if isinstance(instance, BlowUp):
        return serialize_blowup(instance)
    return serialize_hypergraph(instance)


def _parse_header(cursor: _Cursor, tag: str, arity: int):
    lineno, text = cursor.take(f"{tag} header")
    tokens = text.split()
    if tokens[0] != tag or len(tokens) != arity + 1:
        cursor.fail(lineno, f"expected '{tag}' header with {arity} fields, got '{text}'")
    return lineno, _ints(cursor, lineno, tokens[1:], f"{tag} header")


def _solve_base_uniformity(k: int, uniformity: int):
    """Smallest b > k with C(b, k) equal to the given uniformity, if any."""
    b = k + 1
    while comb(b, k) < uniformity:
        b += 1
    return b if comb(b, k) == uniformity else None


def _parse_hypergraph(cursor: _Cursor, dedup: bool):
    header_line, (t, n, m) = _parse_header(cursor, "HG", 3)
    if t < 2 or n < 0 or m < 0:
        cursor.fail(header_line, f"implausible hypergraph shape t={t} n={n} m={m}")
    edges = []
    seen = set()
    for _ in range(m):
        lineno, text = cursor.take("edge line")
        ids = _ints(cursor, lineno, text.split(), "edge")
        if len(ids) != t:
            cursor.fail(lineno, f"edge has {len(ids)} vertices, expected {t}")
        if any(not 0 <= v < n for v in ids):
            cursor.fail(lineno, "vertex id out of range")
        key = tuple(sorted(ids))
        if len(set(key)) != t:
            cursor.fail(lineno, "repeated vertex within edge")
        if key in seen:
            if dedup:
                continue
            cursor.fail(lineno, f"duplicate edge {' '.join(map(str, key))}")
        seen.add(key)
        edges.append(key)
    return Hypergraph(t, n, edges), header_line


def parse_instance(text: str, dedup: bool = False):
    """Parse a hypergraph, upgrading to a BlowUp when LABELS follow.

    The whole input must be consumed; use parse_document for inputs that
    carry trailing cover or matching blocks.
    """
    cursor = _Cursor(text)
    instance = _parse_instance(cursor, dedup)
    if not cursor.done():
        lineno, text_line = cursor.peek()
        cursor.fail(lineno, f"unexpected trailing content '{text_line}'")
    return instance


def _parse_instance(cursor: _Cursor, dedup: bool):
    H, header_line = _parse_hypergraph(cursor, dedup)
    peek_line, peek_text = cursor.peek()
    if peek_text is None or peek_text.split()[0] != "LABELS":
        return H
    cursor.take("LABELS")
    if H.n == 0:
        cursor.fail(peek_line, "labels block on an instance with no vertices")
    labels = []
    k = None
    for _ in range(H.n):
        lineno, text = cursor.take("label line")
        ids = _ints(cursor, lineno, text.split(), "label")
        if k is None:
            k = len(ids)
            if k < 1:
                cursor.fail(lineno, "empty label")
        elif len(ids) != k:
            cursor.fail(lineno, f"label has {len(ids)} ids, expected {k}")
        if list(ids) != sorted(set(ids)):
            cursor.fail(lineno, "label ids must be strictly increasing")
        labels.append(tuple(ids))
    base_t = _solve_base_uniformity(k, H.t)
    if base_t is None:
        cursor.fail(peek_line,
                    f"no base uniformity gives {H.t}-subsets of size {k}")
    base_n = max(max(label) for label in labels) + 1
    try:
        return BlowUp(hyper=H, labels=tuple(labels), base_t=base_t,
                      base_n=base_n, k=k)
    except ParameterError as exc:
        cursor.fail(peek_line, f"inconsistent labels block: {exc}")


# ---------------------------------------------------------------- set systems

def serialize_setsystem(system: SetSystem) -> str:
    lines = [f"SS {system.n} {system.m}"]
    lines.extend(f"{len(s)} " + " ".join(map(str, s)) if s else "0"
                 for s in system.sets)
    return "\n".join(lines) + "\n"


def parse_setsystem(text: str) -> SetSystem:
    cursor = _Cursor(text)
    _, (n, m) = _parse_header(cursor, "SS", 2)
    sets = []
    for _ in range(m):
        lineno, line = cursor.take("set line")
        ids = _ints(cursor, lineno, line.split(), "set")
        if not ids or ids[0] != len(ids) - 1:
            cursor.fail(lineno, "set line must start with its element count")
        members = ids[1:]
        if len(set(members)) != len(members):
            cursor.fail(lineno, "repeated element within set")
        if any(not 0 <= e < n for e in members):
            cursor.fail(lineno, "element out of range")
        sets.append(tuple(members))
    if not cursor.done():
        lineno, line = cursor.peek()
        cursor.fail(lineno, f"unexpected trailing content '{line}'")
    return SetSystem(n, sets)


# ----------------------------------------------------------------- LP values

def _render_value(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return "%.17g" % value
    frac = Fraction(value)
    return f"{frac.numerator}/{frac.denominator}"


def _parse_value(cursor: _Cursor, lineno: int, token: str):
    if token == "-":
        return None
    if "/" in token:
        num, _, den = token.partition("/")
        try:
            return Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError):
            cursor.fail(lineno, f"malformed rational '{token}'")
    try:
        return float(token)
    except ValueError:
        cursor.fail(lineno, f"malformed value '{token}'")


def serialize_lp_solution(solution: LPSolution) -> str:
    lines = [f"{i} {_render_value(solution.values[i])}" for i in solution.support]
    lines.append(f"OBJ {_render_value(solution.objective)}")
    return "\n".join(lines) + "\n"


def parse_lp_solution(text: str, kind: str = "primal") -> LPSolution:
    cursor = _Cursor(text)
    values = {}
    objective = None
    while not cursor.done():
        lineno, line = cursor.take("value line")
        tokens = line.split()
        if tokens[0] == "OBJ":
            if len(tokens) != 2:
                cursor.fail(lineno, "OBJ line takes exactly one value")
            objective = _parse_value(cursor, lineno, tokens[1])
            if not cursor.done():
                nxt_line, nxt = cursor.peek()
                cursor.fail(nxt_line, f"unexpected trailing content '{nxt}'")
            break
        if len(tokens) != 2:
            cursor.fail(lineno, "expected '<id> <value>'")
        key = _ints(cursor, lineno, tokens[:1], "variable id")[0]
        values[key] = _parse_value(cursor, lineno, tokens[1])
    if objective is None:
        raise ParseError("missing OBJ line")
    mode = "float" if isinstance(objective, float) else "exact"
    return LPSolution(kind=kind, values=values, objective=objective, mode=mode)


# -------------------------------------------------------------------- covers

def _render_csv(ids) -> str:
    return ",".join(map(str, ids))


def _parse_csv(cursor: _Cursor, lineno: int, text: str):
    if not text:
        return ()
    return tuple(_ints(cursor, lineno, text.split(","), "id list"))


def serialize_cover(result: CoverResult) -> str:
    lines = [f"COVER {result.size}"]
    lines.extend(str(v) for v in result.cover)
    lines.append("BREAKDOWN"
                 f" U={_render_csv(result.forced)}"
                 f" SPRIME={_render_csv(result.high_discrepancy)}"
                 f" PARITY={_render_csv(result.parity_class)}")
    lines.append(f"LP OPT={_render_value(result.lp_opt)}"
                 f" RESIDUAL={_render_value(result.lp_opt_residual)}")
    seed = "-" if result.seed is None else str(result.seed)
    trial = "-" if result.trial_index is None else str(result.trial_index)
    lines.append(f"SEED {seed} TRIAL {trial}")
    return "\n".join(lines) + "\n"


def _expect_prefixed(cursor: _Cursor, lineno: int, token: str, prefix: str) -> str:
    if not token.startswith(prefix):
        cursor.fail(lineno, f"expected '{prefix}...', got '{token}'")
    return token[len(prefix):]


def _parse_cover_block(cursor: _Cursor) -> CoverResult:
    header_line, (size,) = _parse_header(cursor, "COVER", 1)
    if size < 0:
        cursor.fail(header_line, "negative cover size")
    ids = []
    for _ in range(size):
        lineno, line = cursor.take("cover vertex line")
        ids.append(_ints(cursor, lineno, [line], "cover vertex")[0])
    lineno, line = cursor.take("BREAKDOWN line")
    tokens = line.split()
    if len(tokens) != 4 or tokens[0] != "BREAKDOWN":
        cursor.fail(lineno, "expected 'BREAKDOWN U=... SPRIME=... PARITY=...'")
    forced = _parse_csv(cursor, lineno, _expect_prefixed(cursor, lineno, tokens[1], "U="))
    lopsided = _parse_csv(cursor, lineno, _expect_prefixed(cursor, lineno, tokens[2], "SPRIME="))
    parity = _parse_csv(cursor, lineno, _expect_prefixed(cursor, lineno, tokens[3], "PARITY="))
    lineno, line = cursor.take("LP line")
    tokens = line.split()
    if len(tokens) != 3 or tokens[0] != "LP":
        cursor.fail(lineno, "expected 'LP OPT=... RESIDUAL=...'")
    lp_opt = _parse_value(cursor, lineno, _expect_prefixed(cursor, lineno, tokens[1], "OPT="))
    lp_res = _parse_value(cursor, lineno, _expect_prefixed(cursor, lineno, tokens[2], "RESIDUAL="))
    lineno, line = cursor.take("SEED line")
    tokens = line.split()
    if len(tokens) != 4 or tokens[0] != "SEED" or tokens[2] != "TRIAL":
        cursor.fail(lineno, "expected 'SEED <s> TRIAL <i>'")
    seed = None if tokens[1] == "-" else _ints(cursor, lineno, tokens[1:2], "seed")[0]
    trial = None if tokens[3] == "-" else _ints(cursor, lineno, tokens[3:4], "trial")[0]
    return CoverResult(cover=tuple(ids), forced=forced, high_discrepancy=lopsided,
                       parity_class=parity, lp_opt=lp_opt, lp_opt_residual=lp_res,
                       seed=seed, trial_index=trial)


def parse_cover(text: str) -> CoverResult:
    cursor = _Cursor(text)
    result = _parse_cover_block(cursor)
    if not cursor.done():
        lineno, line = cursor.peek()
        cursor.fail(lineno, f"unexpected trailing content '{line}'")
    return result


# ------------------------------------------------------------------ matchings

def serialize_matching(edge_ids) -> str:
    ids = list(edge_ids)
    return "\n".join([f"MATCHING {len(ids)}"] + [str(i) for i in ids]) + "\n"


def _parse_matching_block(cursor: _Cursor):
    _, (count,) = _parse_header(cursor, "MATCHING", 1)
    ids = []
    for _ in range(count):
        lineno, line = cursor.take("matching edge line")
        ids.append(_ints(cursor, lineno, [line], "edge id")[0])
    return tuple(ids)


def parse_matching(text: str):
    cursor = _Cursor(text)
    ids = _parse_matching_block(cursor)
    if not cursor.done():
        lineno, line = cursor.peek()
        cursor.fail(lineno, f"unexpected trailing content '{line}'")
    return ids


# -------------------------------------------------------------- greedy traces

def serialize_greedy_trace(trace: GreedyTrace) -> str:
    rows = zip(trace.picked, trace.newly_covered, trace.uncovered_after)
    return "".join(f"{s} {new} {left}\n" for s, new, left in rows)


# ------------------------------------------------------------------ documents

def parse_document(text: str, dedup: bool = False):
    """Parse an instance plus any trailing COVER / MATCHING blocks.

    Returns (instance, cover_result_or_None, matching_ids_or_None); this
    is the input shape the verification commands consume.
    """
    cursor = _Cursor(text)
    instance = _parse_instance(cursor, dedup)
    cover = None
    matching = None
    while not cursor.done():
        lineno, line = cursor.peek()
        tag = line.split()[0]
        if tag == "COVER" and cover is None:
            cover = _parse_cover_block(cursor)
        elif tag == "MATCHING" and matching is None:
            matching = _parse_matching_block(cursor)
        else:
            cursor.fail(lineno, f"unexpected block '{tag}'")
    return instance, cover, matching
