"""Brute-force ground truth for tiny games plus the random-game generator.

The oracle enumerates memoryless strategies for the player that needs no
memory (player 0 for parity, player 1 for the generalized conjunction)
and checks cycles directly on bitmasks.  It shares nothing with the
attractor machinery it is used to judge.
"""

from __future__ import annotations

import random

from .arena import BudgetExceeded, GameArena, PriorityProfile
from .recursive import SolveResult


def _local_view(sub):
    """Alive subgraph reindexed to 0..n-1: (original ids, owners, successor lists)."""
    verts = sorted(sub.alive)
    pos = {v: i for i, v in enumerate(verts)}
    owner = [sub.base.owner[v] for v in verts]
    succ = [[pos[w] for w in sub.alive_successors(v)] for v in verts]
    return verts, owner, succ


def _strategies(slots):
    """Odometer over one successor choice per slot (lists of local ids)."""
    choice = [0] * len(slots)
    while True:
        yield [slots[i][choice[i]] for i in range(len(slots))]
        for i in range(len(slots)):
            choice[i] += 1
            if choice[i] < len(slots[i]):
                break
            choice[i] = 0
        else:
            return


def _closure(adj_masks):
    """Reflexive reachability masks for a bitmask adjacency list."""
    n = len(adj_masks)
    reach = [1 << i | adj_masks[i] for i in range(n)]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            r = reach[i]
            grow = r
            m = r
            while m:
                j = (m & -m).bit_length() - 1
                grow |= reach[j]
                m &= m - 1
            if grow != r:
                reach[i] = grow
                changed = True
    return reach


def _bfs_mask(adj_masks, start, allowed):
    """Vertices reachable from ``start`` in >= 1 step inside ``allowed``."""
    frontier = adj_masks[start] & allowed
    seen = frontier
    while frontier:
        nxt = 0
        m = frontier
        while m:
            j = (m & -m).bit_length() - 1
            nxt |= adj_masks[j] & allowed
            m &= m - 1
        frontier = nxt & ~seen
        seen |= nxt
    return seen


def recurrent_sets(adj_masks, n):
    """Subsets strongly connected with at least one internal edge.

    These are exactly the possible infinity sets of infinite walks in the
    graph: a closed walk visiting exactly S forever exists iff S is
    strongly connected in the induced subgraph and carries an edge.
    """
    radj = [0] * n
    for i in range(n):
        m = adj_masks[i]
        while m:
            j = (m & -m).bit_length() - 1
            radj[j] |= 1 << i
            m &= m - 1
    out = []
    for mask in range(1, 1 << n):
        i = (mask & -mask).bit_length() - 1
        # positive-step reachability must cover the whole subset both ways;
        # this also forces the internal edge (a singleton needs a self-loop)
        if _bfs_mask(adj_masks, i, mask) & mask != mask:
            continue
        if _bfs_mask(radj, i, mask) & mask != mask:
            continue
        out.append(mask)
    return out


def brute_parity(sub, profile, max_strategies=10**6):
    """Exact parity regions by enumerating player-0 memoryless strategies.

    Player 0 wins from v under a fixed strategy iff every cycle reachable
    from v in the strategy-restricted graph has an even maximum priority.
    """
    if profile.k != 1:
        raise ValueError("brute_parity needs a k = 1 profile")
    verts, owner, succ = _local_view(sub)
    n = len(verts)
    if n > 10:
        raise BudgetExceeded(f"brute_parity: {n} vertices exceed the 10-vertex budget")
    if n == 0:
        return SolveResult(frozenset(), frozenset(), frozenset())
    prio = [profile.levels[0][v] for v in verts]
    zero_verts = [i for i in range(n) if owner[i] == 0]
    total = 1
    for i in zero_verts:
        total *= len(succ[i])
        if total > max_strategies:
            raise BudgetExceeded("brute_parity: strategy space exceeds budget")

    below = [0] * n  # vertices with priority <= prio[u]
    for u in range(n):
        for w in range(n):
            if prio[w] <= prio[u]:
                below[u] |= 1 << w

    win0_mask = 0
    full = (1 << n) - 1
    for picks in _strategies([succ[i] for i in zero_verts]):
        adj_masks = [0] * n
        for i in range(n):
            for j in succ[i]:
                adj_masks[i] |= 1 << j
        for slot, i in enumerate(zero_verts):
            adj_masks[i] = 1 << picks[slot]
        bad = 0
        for u in range(n):
            if prio[u] % 2 == 1 and _bfs_mask(adj_masks, u, below[u]) >> u & 1:
                bad |= 1 << u
        reach = _closure(adj_masks)
        for v in range(n):
            if not reach[v] & bad:
                win0_mask |= 1 << v
        if win0_mask == full:
            break

    win0 = frozenset(verts[i] for i in range(n) if win0_mask >> i & 1)
    win1 = frozenset(sub.alive) - win0
    return SolveResult(win0, win1, frozenset())


def brute_generalized(sub, profile, max_strategies=10**6):
    """Exact generalized regions by enumerating player-1 strategies.

    Player 1 wins from v under a fixed strategy iff no reachable recurrent
    subset has even maxima in every dimension; player 0's region follows
    by determinacy.
    """
    verts, owner, succ = _local_view(sub)
    n = len(verts)
    if n > 8 or profile.k > 3:
        raise BudgetExceeded("brute_generalized: budget is 8 vertices, k <= 3")
    if n == 0:
        return SolveResult(frozenset(), frozenset(), frozenset())
    levels = [[col[v] for v in verts] for col in profile.levels]
    one_verts = [i for i in range(n) if owner[i] == 1]
    total = 1
    for i in one_verts:
        total *= len(succ[i])
        if total > max_strategies:
            raise BudgetExceeded("brute_generalized: strategy space exceeds budget")

    win1_mask = 0
    full = (1 << n) - 1
    for picks in _strategies([succ[i] for i in one_verts]):
        adj_masks = [0] * n
        for i in range(n):
            for j in succ[i]:
                adj_masks[i] |= 1 << j
        for slot, i in enumerate(one_verts):
            adj_masks[i] = 1 << picks[slot]
        good = 0
        for mask in recurrent_sets(adj_masks, n):
            if all(
                max(col[i] for i in range(n) if mask >> i & 1) % 2 == 0
                for col in levels
            ):
                good |= mask
        reach = _closure(adj_masks)
        for v in range(n):
            # reaching any vertex of a good recurrent set lets player 0
            # realize the whole set (it is strongly connected)
            if not reach[v] & good:
                win1_mask |= 1 << v
        if win1_mask == full:
            break

    win1 = frozenset(verts[i] for i in range(n) if win1_mask >> i & 1)
    win0 = frozenset(sub.alive) - win1
    return SolveResult(win0, win1, frozenset())


def random_game(vertices, max_outdeg, k, d, seed):
    """Seeded random arena + profile; deadlock-free by construction.

    ``d`` may be an int (same bound for every dimension) or a sequence of
    per-dimension bounds.  Priorities are uniform in [0, d_l]; each vertex
    gets 1 to ``max_outdeg`` distinct uniform successors.
    """
    if vertices < 1 or max_outdeg < 1:
        raise ValueError("need at least one vertex and out-degree 1")
    bounds = [d] * k if isinstance(d, int) else list(d)
    if len(bounds) != k:
        raise ValueError("d must give one bound per dimension")
    rng = random.Random(seed)
    owner = [rng.randint(0, 1) for _ in range(vertices)]
    succ = [
        rng.sample(range(vertices), rng.randint(1, min(max_outdeg, vertices)))
        for _ in range(vertices)
    ]
    levels = [[rng.randint(0, bound) for _ in range(vertices)] for bound in bounds]
    return GameArena(owner, succ), PriorityProfile(levels)
