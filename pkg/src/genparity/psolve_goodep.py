"""Good-episode partial solvers.

A good episode for player i is a nonempty history whose maximum visited
priority has i's parity (per dimension in the generalized case).  The
fixpoint below keeps exactly the vertices from which the player can chain
good episodes forever, which wins the parity objective.  Episodes are
detected with positive attractors over an explicit product of the arena
with "maximum priority seen so far" memory; the memory update uses the
source vertex, so the episode's endpoint priority is excluded.
"""

from __future__ import annotations

from itertools import product
from math import prod

from .arena import BudgetExceeded, GameArena, Subgame
from .attractor import attractor, positive_attractor
from .recursive import SolveResult

PRODUCT_STATE_BUDGET = 2_000_000


class MemoryProduct:
    """Arena of (vertex, memory vector) pairs over the alive subgraph.

    Memory holds the componentwise maximum priority visited so far; the
    vector is encoded mixed-radix so states are dense integers.
    """

    def __init__(self, sub, levels, caps, budget=PRODUCT_STATE_BUDGET):
        verts = sorted(sub.alive)
        radix = [c + 1 for c in caps]
        m_count = prod(radix)
        if m_count * max(len(verts), 1) > budget:
            raise BudgetExceeded(
                f"memory product needs {m_count * len(verts)} states, budget {budget}"
            )
        pos = {v: i for i, v in enumerate(verts)}
        k = len(levels)

        def encode(mem):
            code = 0
            for size, value in zip(radix, mem):
                code = code * size + value
            return code

        def decode(code):
            mem = [0] * k
            for dim in range(k - 1, -1, -1):
                mem[dim] = code % radix[dim]
                code //= radix[dim]
            return tuple(mem)

        self.verts = verts
        self.m_count = m_count
        self.encode = encode
        self.decode = decode
        self.vertex_code = [encode(tuple(col[v] for col in levels)) for v in verts]

        memories = [decode(code) for code in range(m_count)]
        owner = []
        succ = []
        for i, v in enumerate(verts):
            alpha = tuple(col[v] for col in levels)
            bump = [
                encode(tuple(max(m, a) for m, a in zip(mem, alpha)))
                for mem in memories
            ]
            targets = [pos[w] * m_count for w in sub.alive_successors(v)]
            who = sub.base.owner[v]
            for code in range(m_count):
                owner.append(who)
                up = bump[code]
                succ.append([t + up for t in targets])
        self._pos = pos
        self.game = Subgame.full(GameArena(owner, succ))

    def state(self, v, code):
        return self._pos[v] * self.m_count + code

    def entry_state(self, v):
        """State (v, alpha(v)): where membership of v itself is tested."""
        return self._pos[v] * self.m_count + self.vertex_code[self._pos[v]]


def _episode_fixpoint(sub, product_game, member_codes, player):
    """Greatest set F with: from every (v, alpha(v)), player forces a
    positive-step visit to some (u, m) with u in F and m of their parity."""
    current = set(sub.alive)
    while current:
        targets = {
            product_game.state(v, code) for v in current for code in member_codes
        }
        reached = positive_attractor(product_game.game, player, targets)
        refined = {v for v in current if product_game.entry_state(v) in reached}
        if refined == current:
            break
        current = refined
    return current


def good_ep(g, profile, player):
    """Vertices from which ``player`` can chain good episodes forever (k = 1)."""
    if profile.k != 1:
        raise ValueError("good_ep needs a k = 1 profile; see the generalized variants")
    if not g.alive:
        return set()
    cap = profile.d[0]
    prod_game = MemoryProduct(g, profile.levels, [cap])
    member_codes = [m for m in range(cap + 1) if m % 2 == player]
    return _episode_fixpoint(g, prod_game, member_codes, player)


def gen_good_ep0_explicit(g, profile, budget=PRODUCT_STATE_BUDGET):
    """Player-0 good-episode set over the full multi-dimension product.

    Every dimension's maximum visited priority must be even at the end of
    each episode.  Raises ``BudgetExceeded`` when the explicit product
    does not fit; callers then fall back to the antichain computation.
    """
    if not g.alive:
        return set()
    prod_game = MemoryProduct(g, profile.levels, list(profile.d), budget)
    even_ranges = [range(0, d + 1, 2) for d in profile.d]
    member_codes = [prod_game.encode(mem) for mem in product(*even_ranges)]
    return _episode_fixpoint(g, prod_game, member_codes, 0)


def good_ep_solver(g, profile, mode="explicit"):
    """Partial parity solver removing good-episode attractors (player 0 first)."""
    if profile.k != 1:
        raise ValueError("good_ep_solver needs a k = 1 profile")
    if mode not in ("explicit", "antichain"):
        raise ValueError(f"unknown mode {mode!r}")
    from .antichain import antichain_good_ep0

    regions = [set(), set()]
    view = g
    while True:
        removed = False
        for player in (0, 1):
            if not view.alive:
                break
            if player == 0 and mode == "antichain":
                core = antichain_good_ep0(view, profile)
            else:
                core = good_ep(view, profile, player)
            if not core:
                continue
            won = attractor(view, player, core)
            regions[player] |= won
            view = view.without(won)
            removed = True
            break
        if not removed:
            break
    return SolveResult(
        frozenset(regions[0]), frozenset(regions[1]), frozenset(view.alive)
    )


def gen_good_ep_solver(g, profile, mode="explicit", budget=PRODUCT_STATE_BUDGET):
    """Partial generalized solver: player 1 per dimension, then player 0.

    The player-1 sets always use the explicit single-dimension product;
    the player-0 step dispatches on ``mode`` between the explicit
    multi-dimension product and the antichain computation.
    """
    if mode not in ("explicit", "antichain"):
        raise ValueError(f"unknown mode {mode!r}")
    from .antichain import antichain_good_ep0

    regions = [set(), set()]
    view = g
    while True:
        removed = False
        for dim in range(profile.k):
            if not view.alive:
                break
            core = good_ep(view, profile.single(dim), 1)
            if not core:
                continue
            won = attractor(view, 1, core)
            regions[1] |= won
            view = view.without(won)
            removed = True
            break
        if removed:
            continue
        if view.alive:
            if mode == "antichain":
                core = antichain_good_ep0(view, profile)
            else:
                core = gen_good_ep0_explicit(view, profile, budget)
            if core:
                won = attractor(view, 0, core)
                regions[0] |= won
                view = view.without(won)
                continue
        break
    return SolveResult(
        frozenset(regions[0]), frozenset(regions[1]), frozenset(view.alive)
    )
