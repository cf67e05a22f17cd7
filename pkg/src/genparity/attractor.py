"""Controllable predecessors and the three attractor variants.

These are the universal subroutines of every solver.  All functions are
pure: they read a subgame view and return a fresh vertex set.  The
attractors use the classic backward counting scheme -- every candidate
opponent vertex holds a countdown of alive successors not yet known good,
so each edge is touched a bounded number of times and the whole
computation is linear in the edges visited.
"""

from __future__ import annotations

_EMPTY = frozenset()


def cpre(g, player, target):
    """One-step controllable predecessors of ``target`` for ``player``.

    A player's own vertex qualifies when some alive successor lies in the
    target; an opponent vertex qualifies when all of them do.
    """
    alive = g.alive
    owner = g.base.owner
    succ = g.base.successors
    out = set()
    for v in alive:
        alive_succs = [w for w in succ[v] if w in alive]
        if owner[v] == player:
            if any(w in target for w in alive_succs):
                out.add(v)
        elif alive_succs and all(w in target for w in alive_succs):
            out.add(v)
    return out


def attractor(g, player, target, stats=None):
    """Vertices from which ``player`` forces a visit to ``target``.

    Zero steps count, so the result always contains the target.
    """
    alive = g.alive
    owner = g.base.owner
    succ = g.base.successors
    pred = g.base.predecessors
    result = set(target)
    stack = list(result)
    count = {}
    touched = len(stack)
    while stack:
        w = stack.pop()
        for v in pred[w]:
            touched += 1
            if v in result or v not in alive:
                continue
            if owner[v] == player:
                result.add(v)
                stack.append(v)
            else:
                c = count.get(v)
                if c is None:
                    c = 0
                    for x in succ[v]:
                        if x in alive:
                            c += 1
                    touched += len(succ[v])
                c -= 1
                if c == 0:
                    result.add(v)
                    stack.append(v)
                else:
                    count[v] = c
    if stats is not None:
        stats["edges_touched"] = touched
    return result


def positive_attractor(g, player, target, stats=None):
    """Vertices from which ``player`` forces a target visit in >= 1 step."""
    return _positive(g, player, target, _EMPTY, stats)


def positive_safe_attractor(g, player, target, avoid, stats=None):
    """Positive attractor computed on the view with ``avoid`` deleted.

    A vertex in ``avoid`` is never a member: the starting vertex already
    counts as visited, so plays may not even begin inside the forbidden
    set.  Target vertices inside ``avoid`` are dropped (unreachable by
    definition under the safe semantics).  Opponent vertices keep their
    full alive out-degree, so an escape into ``avoid`` permanently blocks
    membership.
    """
    return _positive(g, player, target, avoid, stats)


def _positive(g, player, target, avoid, stats):
    alive = g.alive
    owner = g.base.owner
    succ = g.base.successors
    pred = g.base.predecessors
    # good = result | target: vertices whose visit completes the objective.
    good = {v for v in target if v not in avoid}
    result = set()
    stack = list(good)
    count = {}
    touched = len(stack)
    while stack:
        w = stack.pop()
        for v in pred[w]:
            touched += 1
            if v in result or v not in alive or v in avoid:
                continue
            if owner[v] == player:
                result.add(v)
            else:
                c = count.get(v)
                if c is None:
                    c = 0
                    for x in succ[v]:
                        if x in alive:
                            c += 1
                    touched += len(succ[v])
                c -= 1
                if c != 0:
                    count[v] = c
                    continue
                result.add(v)
            if v not in good:
                good.add(v)
                stack.append(v)
    if stats is not None:
        stats["edges_touched"] = touched
    return result
