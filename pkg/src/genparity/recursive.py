"""Complete recursive solvers and their combination with partial solvers.

The parity solver is the classic attractor decomposition; the generalized
solver extends it by letting player 1 attack each priority dimension in
turn, peeling the top even layer of that dimension before recursing.  In
both cases an optional partial solver runs first at every recursion level
and the recursion continues on whatever it left unsolved; that is sound
as long as every edge escaping the unsolved region lands in the escaping
player's losing region, which holds for all shipped partial solvers since
their regions are unions of attractors.

Recursion is realized with an explicit stack of frames so that deep games
cannot overflow the interpreter stack.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arena import Subgame
from .attractor import attractor

_EMPTY = frozenset()


@dataclass(frozen=True)
class SolveResult:
    """Disjoint (possibly partial) winning regions plus the remainder.

    Complete solvers always return ``unsolved == frozenset()``.
    """

    win0: frozenset
    win1: frozenset
    unsolved: frozenset = _EMPTY

    def region(self, player):
        return self.win0 if player == 0 else self.win1

    def solved(self):
        return self.win0 | self.win1


def check_partial_contract(g, profile, result):
    """Audit a partial solver's output against its combination contract.

    Checks that the regions partition the view, that the unsolved
    remainder induces a deadlock-free subgame, and that every edge from an
    unsolved vertex of player i leaving the remainder lands in the
    opponent's partial region.  Returns a list of violation strings.
    """
    problems = []
    alive = g.alive
    z0, z1, unsolved = result.win0, result.win1, result.unsolved
    if z0 & z1 or z0 & unsolved or z1 & unsolved:
        problems.append("regions overlap")
    if z0 | z1 | unsolved != alive:
        problems.append("regions do not partition the view")
    succ = g.base.successors
    owner = g.base.owner
    for v in unsolved:
        has_alive = False
        for w in succ[v]:
            if w not in alive:
                continue
            has_alive = True
            if w in unsolved:
                continue
            target = z1 if owner[v] == 0 else z0
            if w not in target:
                problems.append(f"escape {v}->{w} lands outside the opponent region")
        if not has_alive:
            problems.append(f"unsolved vertex {v} is deadlocked")
    return problems


class _Frame:
    __slots__ = ("alive", "stage", "z0", "z1", "bar", "player", "x", "d_attr")

    def __init__(self, alive):
        self.alive = alive
        self.stage = 0


def _run_psolver(base, alive, profile, psolver, check_contract):
    if psolver is None or not alive:
        return frozenset(), frozenset()
    view = Subgame(base, alive)
    res = psolver(view, profile)
    if check_contract:
        problems = check_partial_contract(view, profile, res)
        if problems:
            raise AssertionError("partial solver broke its contract: " + "; ".join(problems))
    return res.win0, res.win1


def ziel_with_psolver(g, profile, psolver=None, check_contract=False):
    """Exact parity regions; a partial solver may run at every level.

    With ``psolver=None`` this is the plain recursive algorithm: take the
    top priority p, attract for player p mod 2, solve the rest, and either
    close out or re-solve after handing the opponent their attractor.
    """
    if profile.k != 1:
        raise ValueError("parity solver needs a k = 1 profile")
    prio = profile.levels[0]
    base = g.base
    depth_limit = len(g.alive) + profile.d[0] + 2
    stack = [_Frame(g.alive)]
    ret = None
    while stack:
        if len(stack) > depth_limit:
            raise RuntimeError("recursion depth exceeded |V| + d: corrupted arena?")
        fr = stack[-1]
        if fr.stage == 0:
            if not fr.alive:
                ret = (set(), set())
                stack.pop()
                continue
            z0, z1 = _run_psolver(base, fr.alive, profile, psolver, check_contract)
            fr.z0, fr.z1 = z0, z1
            bar = fr.alive - z0 - z1
            fr.bar = bar
            if not bar:
                ret = (set(z0), set(z1))
                stack.pop()
                continue
            p = max(prio[v] for v in bar)
            i = p & 1
            u = {v for v in bar if prio[v] == p}
            x = attractor(Subgame(base, bar), i, u)
            fr.player = i
            fr.x = x
            fr.stage = 1
            stack.append(_Frame(bar - x))
            continue
        if fr.stage == 1:
            w0, w1 = ret
            i = fr.player
            opponent_win = w1 if i == 0 else w0
            if not opponent_win:
                if i == 0:
                    ret = (fr.z0 | w0 | fr.x, set(fr.z1))
                else:
                    ret = (set(fr.z0), fr.z1 | w1 | fr.x)
                stack.pop()
                continue
            d = attractor(Subgame(base, fr.bar), 1 - i, opponent_win)
            fr.d_attr = d
            fr.stage = 2
            stack.append(_Frame(fr.bar - d))
            continue
        w0, w1 = ret
        if fr.player == 0:
            ret = (fr.z0 | w0, fr.z1 | w1 | fr.d_attr)
        else:
            ret = (fr.z0 | w0 | fr.d_attr, fr.z1 | w1)
        stack.pop()
    return SolveResult(frozenset(ret[0]), frozenset(ret[1]))


def zielonka(g, profile):
    """Exact parity winning regions by recursive attractor decomposition."""
    return ziel_with_psolver(g, profile)


class _GenFrame:
    __slots__ = ("alive", "stage", "z0", "z1", "bar", "dim", "h", "d_attr")

    def __init__(self, alive):
        self.alive = alive
        self.stage = 0


_STAGE_TRY = 1
_STAGE_INNER = 2
_STAGE_OUTER = 3


def gen_ziel_with_psolver(g, profile, psolver=None, check_contract=False):
    """Exact regions of a generalized parity game, partial solver optional.

    Player 1 wins a play if some dimension's maximal recurring priority is
    odd.  For each dimension in turn the solver peels away player 0's
    attractors to the top even layer, then attacks the top odd layer with
    a player-1 attractor and recurses on the remainder with that dimension
    thinned by one odd/even pair.  If the recursive call concedes nothing
    to player 0, player 1 wins everything left of the attempt; otherwise
    player 0's confirmed region is peeled and the attempt resumes.  When
    every dimension's attempt comes up empty, player 0 wins the rest.
    """
    levels = profile.levels
    k = profile.k
    base = g.base
    depth_limit = len(g.alive) + sum(profile.d) + 2
    stack = [_GenFrame(g.alive)]
    ret = None
    while stack:
        if len(stack) > depth_limit:
            raise RuntimeError("recursion depth exceeded |V| + D: corrupted arena?")
        fr = stack[-1]
        if fr.stage == 0:
            if not fr.alive:
                ret = (set(), set())
                stack.pop()
                continue
            z0, z1 = _run_psolver(base, fr.alive, profile, psolver, check_contract)
            fr.z0, fr.z1 = z0, z1
            fr.bar = fr.alive - z0 - z1
            if not fr.bar:
                ret = (set(z0), set(z1))
                stack.pop()
                continue
            fr.dim = 0
            fr.h = set(fr.bar)
            fr.stage = _STAGE_TRY

        if fr.stage == _STAGE_TRY:
            while True:
                if not fr.h:
                    fr.dim += 1
                    if fr.dim >= k:
                        # no dimension offers player 1 anything: player 0 wins the rest
                        ret = (fr.z0 | fr.bar, set(fr.z1))
                        stack.pop()
                        break
                    fr.h = set(fr.bar)
                    continue
                col = levels[fr.dim]
                view = Subgame(base, fr.h)
                top = max(col[v] for v in fr.h)
                layer = {v for v in fr.h if col[v] == top}
                if top % 2 == 0:
                    # strip player 0's grip on the top even layer and retry
                    fr.h -= attractor(view, 0, layer)
                    continue
                x = attractor(view, 1, layer)
                fr.stage = _STAGE_INNER
                stack.append(_GenFrame(frozenset(fr.h - x)))
                break
            continue
        if fr.stage == _STAGE_INNER:
            w0, w1 = ret
            if not w0:
                # player 1 wins all of the attempt region
                d = attractor(Subgame(base, fr.bar), 1, fr.h)
                fr.d_attr = d
                fr.stage = _STAGE_OUTER
                stack.append(_GenFrame(frozenset(fr.bar - d)))
                continue
            fr.h -= attractor(Subgame(base, fr.h), 0, w0)
            fr.stage = _STAGE_TRY
            continue
        # _STAGE_OUTER
        w0, w1 = ret
        ret = (fr.z0 | w0, fr.z1 | fr.d_attr | w1)
        stack.pop()
    return SolveResult(frozenset(ret[0]), frozenset(ret[1]))


def gen_zielonka(g, profile):
    """Exact winning regions of a generalized parity game."""
    return gen_ziel_with_psolver(g, profile)
