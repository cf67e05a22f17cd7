"""Buchi-based partial solvers.

The parity variant scans priorities from the top.  For each priority p it
asks whether the owning player can revisit p forever while staying clear
of all higher opposite priorities; the attractor of that winning core is
surely won, gets removed, and the scan restarts on the remainder.  The
generalized variant runs the same loop over a list of elements: one odd
priority in one dimension for player 1, or a full vector of even
priorities for player 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .arena import Subgame
from .attractor import attractor
from .omega import win_buchi_safe, win_genbuchi_safe
from .recursive import SolveResult


@dataclass(frozen=True)
class OddAt:
    """One odd priority in one dimension; a player-1 element."""

    priority: int
    dim: int


@dataclass(frozen=True)
class EvenVector:
    """One even priority per dimension; a player-0 element."""

    priorities: tuple


def iter_list_elements(profile):
    """Lazy element stream: odd singles first, then even vectors.

    Odd elements come priority-descending with dimensions ascending at
    equal priority; even vectors descend lexicographically.  Laziness
    matters because the vector block is exponential in k and early hits
    make the scan restart anyway.
    """
    top_odd = max((d - 1 if d % 2 == 0 else d for d in profile.d), default=0)
    for p in range(top_odd if top_odd % 2 == 1 else top_odd - 1, 0, -2):
        for dim in range(profile.k):
            if p <= profile.d[dim]:
                yield OddAt(p, dim)
    evens = [
        tuple(range(d if d % 2 == 0 else d - 1, -1, -2))
        for d in profile.d
    ]
    for combo in product(*evens):
        yield EvenVector(combo)


def build_list_L(profile):
    """The full, ordered element list for the generalized scan."""
    return list(iter_list_elements(profile))


def buchi_solver(g, profile):
    """Partial parity solver scanning priorities from d down to 0.

    For priority p with owner i the basic action computes the exact
    winning core of "revisit p forever, never touching an opposite
    priority above p"; its attractor is sound for the full parity
    objective because that objective ignores finite prefixes.
    """
    if profile.k != 1:
        raise ValueError("buchi_solver needs a k = 1 profile")
    prio = profile.levels[0]
    d = profile.d[0]
    regions = [set(), set()]
    view = g
    while True:
        removed = False
        for p in range(d, -1, -1):
            i = p & 1
            u = {v for v in view.alive if prio[v] == p}
            if not u:
                continue
            bad = {
                v
                for v in view.alive
                if prio[v] > p and prio[v] % 2 != i
            }
            core = win_buchi_safe(view, i, u, bad)
            if not core:
                continue
            won = attractor(view, i, core)
            regions[i] |= won
            view = view.without(won)
            removed = True
            break
        if not removed:
            break
    return SolveResult(
        frozenset(regions[0]), frozenset(regions[1]), frozenset(view.alive)
    )


def gen_buchi_solver(g, profile, elements=None):
    """Partial generalized solver driven by the element list.

    Player-1 elements reuse the single-dimension machinery; player-0
    elements need a generalized Buchi query over all dimensions at once.
    """
    levels = profile.levels
    regions = [set(), set()]
    view = g
    while True:
        removed = False
        for elem in elements if elements is not None else iter_list_elements(profile):
            if isinstance(elem, OddAt):
                col = levels[elem.dim]
                u = {v for v in view.alive if col[v] == elem.priority}
                if not u:
                    continue
                bad = {
                    v
                    for v in view.alive
                    if col[v] % 2 == 0 and col[v] > elem.priority
                }
                core = win_buchi_safe(view, 1, u, bad)
                player = 1
            else:
                targets = []
                empty = False
                for dim, p in enumerate(elem.priorities):
                    t = {v for v in view.alive if levels[dim][v] == p}
                    if not t:
                        empty = True
                        break
                    targets.append(t)
                if empty:
                    continue
                bad = {
                    v
                    for v in view.alive
                    if any(
                        levels[dim][v] % 2 == 1 and levels[dim][v] > p
                        for dim, p in enumerate(elem.priorities)
                    )
                }
                core = win_genbuchi_safe(view, targets, bad)
                player = 0
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
