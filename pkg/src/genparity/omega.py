"""Complete solvers for the auxiliary omega-regular objectives.

Reachability and safety reduce to one attractor; Buchi games use the
classic peeling loop (quadratic); generalized Buchi goes through an
explicit counter product, linear in the number of target sets.  These
exact solvers are the basic actions of the partial solvers.
"""

from __future__ import annotations

from .arena import GameArena, Subgame
from .attractor import attractor


def win_reach(g, player, target):
    """Winning set for visiting ``target`` at least once; equals the attractor."""
    return attractor(g, player, target)


def win_safe(g, player, bad):
    """Winning set for never visiting ``bad``.

    By determinacy of reachability this is the complement of the
    opponent's attractor to the bad set.
    """
    return g.alive - attractor(g, 1 - player, bad)


def win_buchi(g, player, target):
    """Exact winning set for visiting ``target`` infinitely often.

    Peeling loop: discard the opponent attractor of the region that
    cannot even reach the target once; survivors win.
    """
    alive = set(g.alive)
    tgt = set(target) & alive
    view = Subgame(g.base, alive)
    while alive:
        reach = attractor(view, player, tgt)
        dead = alive - reach
        if not dead:
            break
        removed = attractor(view, 1 - player, dead)
        alive -= removed
        tgt -= removed
        view = Subgame(g.base, alive)
    return alive


def win_buchi_safe(g, player, target, bad):
    """Exact winning set for Buchi(target) while never visiting ``bad``.

    Restricting to the complement of the opponent's attractor to ``bad``
    is exact: that region is a trap the winner may never leave.
    """
    safe = g.alive - attractor(g, 1 - player, bad)
    view = Subgame(g.base, safe)
    return win_buchi(view, player, set(target) & safe)


def _counter_product(g, targets):
    """Arena of pairs (vertex, goal index); the goal advances on a visit.

    Returns the product subgame and the encoder ``sid(v, goal)``.  State
    (v, l) means the play still owes a visit to ``targets[l]``; leaving a
    vertex of the current goal set advances the counter cyclically.
    """
    k = len(targets)
    verts = sorted(g.alive)
    pos = {v: i for i, v in enumerate(verts)}
    owner = []
    succ = []
    for v in verts:
        alive_succs = g.alive_successors(v)
        for goal in range(k):
            nxt = (goal + 1) % k if v in targets[goal] else goal
            owner.append(g.base.owner[v])
            succ.append([pos[w] * k + nxt for w in alive_succs])
    product = GameArena(owner, succ)
    return Subgame.full(product), lambda v, goal: pos[v] * k + goal


def win_genbuchi_safe(g, targets, bad):
    """Exact player-0 winning set for a conjunction of Buchi objectives
    under a safety constraint.

    Solves plain Buchi on the counter product: resetting the counter from
    the last goal set back to the first happens infinitely often iff every
    target set is visited infinitely often.
    """
    if not targets:
        raise ValueError("need at least one target set")
    safe = g.alive - attractor(g, 1, bad)
    if not safe:
        return set()
    view = Subgame(g.base, safe)
    targets = [set(t) & safe for t in targets]
    k = len(targets)
    product, sid = _counter_product(view, targets)
    reset = {sid(v, k - 1) for v in targets[k - 1]}
    won = win_buchi(product, 0, reset)
    return {v for v in safe if sid(v, 0) in won}
