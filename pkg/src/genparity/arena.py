"""Game structures for parity and generalized parity games.

An arena is a finite directed graph without deadlocks whose vertices are
partitioned between player 0 and player 1.  Priorities live in a separate
profile so the same arena can carry one or several priority functions.
Solvers never copy the graph: they work on ``Subgame`` views, an arena
plus the set of vertices still alive.
"""

from __future__ import annotations

import re


class ParseError(ValueError):
    """Malformed game file; carries the 1-based line (and column if known)."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line})" if column is None else f" (line {line}, column {column})"
        super().__init__(message + where)


class ValidationError(ValueError):
    """An arena or profile violates a structural invariant."""


class BudgetExceeded(RuntimeError):
    """A computation would exceed its configured size budget."""


class GameArena:
    """Deadlock-free directed graph with an owner per vertex.

    ``successors`` are ordered and duplicate-free; ``predecessors`` is the
    cached transpose.  Instances are immutable after construction and safe
    to share across threads.
    """

    __slots__ = ("vertex_count", "owner", "successors", "predecessors", "names")

    def __init__(self, owner, successors, names=None):
        n = len(owner)
        if len(successors) != n:
            raise ValidationError("owner and successor lists disagree on vertex count")
        if names is not None and len(names) != n:
            raise ValidationError("names list disagrees on vertex count")
        self.vertex_count = n
        self.owner = list(owner)
        self.names = list(names) if names is not None else [None] * n
        succ = []
        pred = [[] for _ in range(n)]
        for v in range(n):
            if self.owner[v] not in (0, 1):
                raise ValidationError(f"vertex {v}: owner must be 0 or 1")
            row = list(dict.fromkeys(successors[v]))  # dedupe, keep order
            if not row:
                raise ValidationError(f"deadlocked vertex {v}")
            for w in row:
                if not 0 <= w < n:
                    raise ValidationError(f"vertex {v}: successor {w} out of range")
                pred[w].append(v)
            succ.append(row)
        self.successors = succ
        self.predecessors = pred

    @property
    def edge_count(self):
        return sum(len(row) for row in self.successors)

    def __repr__(self):
        return f"GameArena(|V|={self.vertex_count}, |E|={self.edge_count})"


class PriorityProfile:
    """k priority functions over an arena, stored dimension-major.

    ``levels[l][v]`` is the dimension-l priority of vertex v.  ``d[l]`` is
    the maximum priority actually present in dimension l; it is always
    inferred from the data, never taken from a file header.
    """

    __slots__ = ("k", "levels", "d")

    def __init__(self, levels):
        if not levels:
            raise ValidationError("profile needs at least one dimension")
        n = len(levels[0])
        self.k = len(levels)
        self.levels = []
        for col in levels:
            if len(col) != n:
                raise ValidationError("priority dimensions disagree on vertex count")
            col = list(col)
            for p in col:
                if not isinstance(p, int) or p < 0:
                    raise ValidationError(f"priority {p!r} is not a natural number")
            self.levels.append(col)
        self.d = tuple(max(col, default=0) for col in self.levels)

    @classmethod
    def parity(cls, priorities):
        """Single priority function (k = 1)."""
        return cls([list(priorities)])

    def vector(self, v):
        """Per-vertex priority vector ``(alpha_1(v), ..., alpha_k(v))``."""
        return tuple(col[v] for col in self.levels)

    def single(self, dim):
        """k = 1 view of one dimension (shares the underlying list)."""
        prof = PriorityProfile.__new__(PriorityProfile)
        prof.k = 1
        prof.levels = [self.levels[dim]]
        prof.d = (self.d[dim],)
        return prof

    def __repr__(self):
        return f"PriorityProfile(k={self.k}, d={self.d})"


class Subgame:
    """Restriction view of an arena: base graph plus an alive-vertex set.

    Views are cheap values; building one never copies the graph.  The
    alive set must induce a deadlock-free subgraph, which every solver
    code path preserves by only removing attractor-closed regions.
    """

    __slots__ = ("base", "alive")

    def __init__(self, base, alive):
        self.base = base
        self.alive = frozenset(alive)

    @classmethod
    def full(cls, base):
        return cls(base, range(base.vertex_count))

    def without(self, removed):
        return Subgame(self.base, self.alive - removed)

    def alive_successors(self, v):
        alive = self.alive
        return [w for w in self.base.successors[v] if w in alive]

    def is_empty(self):
        return not self.alive

    def __len__(self):
        return len(self.alive)

    def __repr__(self):
        return f"Subgame({len(self.alive)} of {self.base.vertex_count} alive)"


def subgame(g, remove):
    """Restrict ``g`` by deleting ``remove``.

    The caller guarantees the remainder is deadlock-free (it always is
    when ``remove`` is attractor-closed); this is asserted in debug runs.
    """
    sub = g.without(remove)
    assert validate_subgame(sub), "subgame restriction introduced a deadlock"
    return sub


def validate_subgame(sub):
    """True iff every alive vertex keeps at least one alive successor."""
    alive = sub.alive
    succ = sub.base.successors
    return all(any(w in alive for w in succ[v]) for v in alive)


def is_trap(g, u, player):
    """Is ``u`` a trap for ``player`` inside the view ``g``?

    Player ``player`` must be unable to leave ``u`` while the opponent can
    always stay inside it.
    """
    alive = g.alive
    succ = g.base.successors
    owner = g.base.owner
    for v in u:
        alive_succs = [w for w in succ[v] if w in alive]
        if owner[v] == player:
            if any(w not in u for w in alive_succs):
                return False
        else:
            if not any(w in u for w in alive_succs):
                return False
    return True


# ---------------------------------------------------------------------------
# File formats.
#
# Parity games use the PGSolver-compatible grammar
#     parity <max-id> ;
#     <id> <priority> <owner> <succ>(,<succ>)* [ "name" ] ;
# and generalized games declare the dimension count in the header
#     generalized-parity <max-id> <k> ;
#     <id> <p1>(,<pl>)* <owner> <succ>(,<succ>)* [ "name" ] ;
# Lines starting with '#' are comments; ';' terminators are mandatory.
# ---------------------------------------------------------------------------

_PARITY_HEADER = re.compile(r"parity\s+(\d+)")
_GENERALIZED_HEADER = re.compile(r"generalized-parity\s+(\d+)\s+(\d+)")
_NAME = re.compile(r'"([^"]*)"')


def _statements(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not line.endswith(";"):
            raise ParseError("missing ';' terminator", lineno)
        yield lineno, line[:-1].strip()


def _parse_int(token, what, lineno):
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"{what}: expected an integer, got {token!r}", lineno) from None
    if value < 0:
        raise ParseError(f"{what}: negative value {value}", lineno)
    return value


def _parse_vertex_line(stmt, lineno, max_id, k):
    fields = stmt.split(None, 3)
    if not fields:
        raise ParseError("empty statement", lineno)
    vid = _parse_int(fields[0], "vertex id", lineno)
    if vid > max_id:
        raise ParseError(f"vertex id {vid} exceeds declared maximum {max_id}", lineno)
    if len(fields) < 4:
        raise ParseError(f"deadlocked vertex {vid}: no successors", lineno)
    prio_field, owner_field, rest = fields[1], fields[2], fields[3]

    prios = prio_field.split(",")
    if k is not None and len(prios) != k:
        raise ParseError(
            f"vertex {vid}: dimension mismatch, expected {k} priorities, got {len(prios)}",
            lineno,
        )
    priorities = [_parse_int(p, f"vertex {vid}: priority", lineno) for p in prios]

    owner = _parse_int(owner_field, f"vertex {vid}: owner", lineno)
    if owner not in (0, 1):
        raise ParseError(f"vertex {vid}: owner must be 0 or 1, got {owner}", lineno)

    parts = rest.split(None, 1)
    succ_field = parts[0]
    name = None
    if len(parts) == 2:
        m = _NAME.fullmatch(parts[1].strip())
        if not m:
            raise ParseError(f"vertex {vid}: trailing garbage {parts[1]!r}", lineno)
        name = m.group(1)
    succs = []
    for tok in succ_field.split(","):
        w = _parse_int(tok, f"vertex {vid}: successor", lineno)
        if w > max_id:
            raise ParseError(f"vertex {vid}: successor {w} out of range", lineno)
        if w not in succs:
            succs.append(w)
    return vid, priorities, owner, succs, name


def _parse(text, generalized):
    stmts = _statements(text)
    try:
        lineno, header = next(stmts)
    except StopIteration:
        raise ParseError("empty input", 1) from None
    if generalized:
        m = _GENERALIZED_HEADER.fullmatch(header)
        if not m:
            raise ParseError("expected 'generalized-parity <max-id> <k> ;' header", lineno)
        max_id, k = int(m.group(1)), int(m.group(2))
        if k < 1:
            raise ParseError("dimension count must be at least 1", lineno)
    else:
        m = _PARITY_HEADER.fullmatch(header)
        if not m:
            raise ParseError("expected 'parity <max-id> ;' header", lineno)
        max_id, k = int(m.group(1)), 1

    rows = {}
    for lineno, stmt in stmts:
        vid, priorities, owner, succs, name = _parse_vertex_line(stmt, lineno, max_id, k)
        if vid in rows:
            raise ParseError(f"duplicate vertex id {vid}", lineno)
        rows[vid] = (priorities, owner, succs, name, lineno)

    n = max_id + 1
    for v in range(n):
        if v not in rows:
            raise ParseError(f"deadlocked vertex {v}: never declared")
        if not rows[v][2]:
            raise ParseError(f"deadlocked vertex {v}: no successors", rows[v][4])

    owner = [rows[v][1] for v in range(n)]
    succ = [rows[v][2] for v in range(n)]
    names = [rows[v][3] for v in range(n)]
    levels = [[rows[v][0][dim] for v in range(n)] for dim in range(k)]
    try:
        arena = GameArena(owner, succ, names)
    except ValidationError as exc:
        raise ParseError(str(exc)) from None
    return arena, PriorityProfile(levels)


def parse_parity(text):
    """Parse a parity game file; returns ``(GameArena, PriorityProfile)`` with k = 1."""
    return _parse(text, generalized=False)


def parse_generalized(text):
    """Parse a generalized parity game file; returns ``(GameArena, PriorityProfile)``."""
    return _parse(text, generalized=True)


def detect_format(text):
    """'generalized' or 'parity', judged from the header keyword."""
    for _, stmt in _statements(text):
        return "generalized" if stmt.startswith("generalized-parity") else "parity"
    raise ParseError("empty input", 1)


def parse_game(text):
    """Parse either format, dispatching on the header."""
    if detect_format(text) == "generalized":
        return parse_generalized(text)
    return parse_parity(text)


def _vertex_line(arena, profile, v):
    prios = ",".join(str(col[v]) for col in profile.levels)
    succs = ",".join(str(w) for w in arena.successors[v])
    name = f' "{arena.names[v]}"' if arena.names[v] is not None else ""
    return f"{v} {prios} {arena.owner[v]} {succs}{name};"


def serialize_parity(arena, profile):
    """Render a k = 1 game back into the parity grammar."""
    if profile.k != 1:
        raise ValidationError("parity format requires k = 1")
    lines = [f"parity {arena.vertex_count - 1};"]
    lines.extend(_vertex_line(arena, profile, v) for v in range(arena.vertex_count))
    return "\n".join(lines) + "\n"


def serialize_generalized(arena, profile):
    """Render a game into the generalized grammar (any k)."""
    lines = [f"generalized-parity {arena.vertex_count - 1} {profile.k};"]
    lines.extend(_vertex_line(arena, profile, v) for v in range(arena.vertex_count))
    return "\n".join(lines) + "\n"
