"""Antichains over the priority-memory order.

Memory vectors record the maximum priority visited per dimension.  For
player 0 a memory is better when it is harder to spoil: high even entries
beat low even ones, low odd entries beat high odd ones, and every even
entry beats every odd entry.  Per vertex this order is a lower
semilattice, so downward-closed state sets are represented by their
maximal elements and the controllable-predecessor step can be computed
symbolically through the inverse ``down`` of the memory update.
"""

from __future__ import annotations

from .arena import Subgame


def dim_leq(a, b):
    """One dimension of the memory order: is a at most as good as b?

    Among evens higher is lower (harder to beat), among odds lower is
    lower, and every even sits below every odd.
    """
    if a % 2 == 0:
        return a >= b if b % 2 == 0 else True
    return b % 2 == 1 and a <= b


def mem_leq(x, y):
    """Componentwise memory order on equal-length vectors."""
    return all(dim_leq(a, b) for a, b in zip(x, y))


def leq(x, y):
    """Order on extended vertices (v, m); distinct vertices never compare."""
    return x[0] == y[0] and mem_leq(x[1], y[1])


def _dim_meet(a, b):
    if a % 2 == 0:
        if b % 2 == 0:
            return max(a, b)
        return a
    if b % 2 == 1:
        return min(a, b)
    return b


def mem_meet(x, y):
    """Greatest lower bound of two memory vectors, componentwise."""
    return tuple(_dim_meet(a, b) for a, b in zip(x, y))


def meet(x, y):
    """Greatest lower bound of two extended vertices at the same vertex."""
    if x[0] != y[0]:
        raise ValueError("meet is only defined at a single vertex")
    return (x[0], mem_meet(x[1], y[1]))


def up(mem, priority):
    """Memory update along an edge: componentwise maximum with the
    source vertex's priority vector."""
    return tuple(max(m, p) for m, p in zip(mem, priority))


def _dim_down(m_prime, p, d):
    if p % 2 == 0:
        if p < m_prime:
            return m_prime
        return max(p - 1, 0)
    if p <= m_prime:
        return m_prime
    if p == d:
        return None
    return p + 1


def down(mem_prime, priority, d):
    """Largest memory whose update by ``priority`` stays below ``mem_prime``.

    Returns None when no memory qualifies, which happens exactly when some
    dimension's priority is the odd top of its range and exceeds the
    target memory.
    """
    out = []
    for m_prime, p, dim_max in zip(mem_prime, priority, d):
        m = _dim_down(m_prime, p, dim_max)
        if m is None:
            return None
        out.append(m)
    return tuple(out)


def _add_max(items, mem):
    """Insert ``mem`` into a list of pairwise incomparable memories."""
    keep = []
    for other in items:
        if mem_leq(mem, other):
            return
        if not mem_leq(other, mem):
            keep.append(other)
    keep.append(mem)
    items[:] = keep


class Antichain:
    """Per-vertex sets of pairwise incomparable memory vectors.

    Represents the downward closure of its elements.  Values are
    immutable snapshots: operations return new antichains.
    """

    __slots__ = ("_by_vertex",)

    def __init__(self, by_vertex=None):
        self._by_vertex = {}
        if by_vertex:
            for v, mems in by_vertex.items():
                if mems:
                    self._by_vertex[v] = list(mems)

    @classmethod
    def of(cls, pairs):
        a = cls()
        for v, mem in pairs:
            a._insert_in_place(v, mem)
        return a

    def _insert_in_place(self, v, mem):
        items = self._by_vertex.setdefault(v, [])
        _add_max(items, tuple(mem))
        if not items:
            del self._by_vertex[v]

    def elements(self):
        for v, mems in self._by_vertex.items():
            for mem in mems:
                yield (v, mem)

    def at(self, v):
        return tuple(self._by_vertex.get(v, ()))

    def insert(self, x):
        """New antichain with ``x = (v, mem)`` merged in (dominated
        elements on either side are dropped)."""
        out = Antichain(self._by_vertex)
        out._insert_in_place(x[0], x[1])
        return out

    def member(self, x):
        """Does the represented closed set contain ``x = (v, mem)``?"""
        v, mem = x
        return any(mem_leq(mem, other) for other in self._by_vertex.get(v, ()))

    def union(self, other):
        out = Antichain(self._by_vertex)
        for v, mem in other.elements():
            out._insert_in_place(v, mem)
        return out

    def meet(self, other):
        """Antichain of the intersection of the represented closed sets."""
        out = Antichain()
        for v, mems in self._by_vertex.items():
            others = other._by_vertex.get(v)
            if not others:
                continue
            for a in mems:
                for b in others:
                    out._insert_in_place(v, mem_meet(a, b))
        return out

    def is_empty(self):
        return not self._by_vertex

    def _normalized(self):
        return {v: tuple(sorted(mems)) for v, mems in self._by_vertex.items()}

    def __eq__(self, other):
        if not isinstance(other, Antichain):
            return NotImplemented
        return self._normalized() == other._normalized()

    def __hash__(self):
        return hash(tuple(sorted(self._normalized().items())))

    def __repr__(self):
        parts = [f"{v}:{sorted(mems)}" for v, mems in sorted(self._by_vertex.items())]
        return "Antichain(" + ", ".join(parts) + ")"


def antichain_meet(a, b):
    """Module-level alias for ``a.meet(b)``."""
    return a.meet(b)


def antichain_cpre0(g, profile, a):
    """Player-0 controllable predecessors of a closed set, on antichains.

    For a player-0 vertex each successor element pulls back through
    ``down``; for a player-1 vertex the per-successor pullbacks are
    combined with the meet-product, and an empty factor (no admissible
    memory for some successor) eliminates the vertex entirely.
    """
    levels = profile.levels
    d = profile.d
    alive = g.alive
    out = Antichain()
    by_vertex = a._by_vertex
    for v in alive:
        priority = tuple(col[v] for col in levels)
        if g.base.owner[v] == 0:
            for w in g.base.successors[v]:
                if w not in alive:
                    continue
                for mem_prime in by_vertex.get(w, ()):
                    mem = down(mem_prime, priority, d)
                    if mem is not None:
                        out._insert_in_place(v, mem)
        else:
            factors = []
            dead_end = False
            for w in g.base.successors[v]:
                if w not in alive:
                    continue
                factor = []
                for mem_prime in by_vertex.get(w, ()):
                    mem = down(mem_prime, priority, d)
                    if mem is not None:
                        _add_max(factor, mem)
                if not factor:
                    dead_end = True
                    break
                factors.append(factor)
            if dead_end or not factors:
                continue
            acc = factors[0]
            for factor in factors[1:]:
                merged = []
                for x in acc:
                    for y in factor:
                        _add_max(merged, mem_meet(x, y))
                acc = merged
                if not acc:
                    break
            for mem in acc:
                out._insert_in_place(v, mem)
    return out


def antichain_positive_attractor0(g, profile, targets):
    """Positive player-0 attractor of a closed target set, on antichains."""
    current = antichain_cpre0(g, profile, targets)
    while True:
        step = antichain_cpre0(g, profile, current.union(targets))
        grown = current.union(step)
        if grown == current:
            return current
        current = grown


def antichain_good_ep0(g, profile):
    """Player-0 good-episode set computed entirely on antichains.

    Matches the explicit product computation: the target set "vertex in F
    with all-even memory" is exactly the closure of the zero-memory
    elements, and membership of a vertex is tested at its own priority
    vector.
    """
    zero = (0,) * profile.k
    levels = profile.levels
    current = set(g.alive)
    while current:
        targets = Antichain.of((v, zero) for v in current)
        reached = antichain_positive_attractor0(g, profile, targets)
        refined = {
            v
            for v in current
            if reached.member((v, tuple(col[v] for col in levels)))
        }
        if refined == current:
            break
        current = refined
    return current
