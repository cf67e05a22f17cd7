import random

from genparity.arena import GameArena, PriorityProfile, Subgame
from genparity.attractor import attractor
from genparity.omega import (
    win_buchi,
    win_buchi_safe,
    win_genbuchi_safe,
    win_reach,
    win_safe,
)
from genparity.oracle import brute_generalized, brute_parity, random_game


def _absorb_bad(arena, bad):
    """Copy of the arena where bad vertices become self-loop sinks."""
    succ = [list(row) for row in arena.successors]
    for b in bad:
        succ[b] = [b]
    return GameArena(arena.owner, succ)


def buchi_oracle(sub, player, target, bad=frozenset()):
    """Buchi-with-safety winner via the parity oracle on an encoded game.

    Visits to the target carry the player's parity on top; bad vertices
    are made absorbing and losing, which is exactly the safety semantics.
    """
    arena = _absorb_bad(sub.base, bad) if bad else sub.base
    n = arena.vertex_count
    if player == 0:
        prio = [2 if v in target and v not in bad else 1 for v in range(n)]
    else:
        prio = [1 if v in target and v not in bad else 0 for v in range(n)]
    for b in bad:
        prio[b] = 1 if player == 0 else 0
    res = brute_parity(Subgame(arena, sub.alive), PriorityProfile.parity(prio))
    return set(res.win0 if player == 0 else res.win1)


def genbuchi_oracle(sub, targets, bad=frozenset()):
    """Generalized-Buchi-with-safety winner via the generalized oracle."""
    arena = _absorb_bad(sub.base, bad) if bad else sub.base
    n = arena.vertex_count
    levels = [
        [2 if v in t and v not in bad else 1 for v in range(n)] for t in targets
    ]
    for b in bad:
        for col in levels:
            col[b] = 1
    res = brute_generalized(Subgame(arena, sub.alive), PriorityProfile(levels))
    return set(res.win0)


def test_win_reach_examples(g1):
    sub, _ = g1
    assert win_reach(sub, 1, {0}) == {0, 1}
    assert win_reach(sub, 0, set()) == set()
    assert win_reach(sub, 1, sub.alive) == sub.alive


def test_win_safe_examples(g1):
    sub, _ = g1
    assert win_safe(sub, 0, {1}) == {2}
    assert win_safe(sub, 0, set()) == sub.alive
    assert win_safe(sub, 1, sub.alive) == set()


def test_win_buchi_examples(g1):
    sub, _ = g1
    assert win_buchi(sub, 0, {2}) == {2}
    assert win_buchi(sub, 0, {0}) == set()
    assert win_buchi(sub, 1, set()) == set()


def test_win_buchi_safe_examples(g1):
    sub, _ = g1
    assert win_buchi_safe(sub, 0, {2}, {1}) == {2}
    assert win_buchi_safe(sub, 1, {1}, {0}) == set()
    assert win_buchi_safe(sub, 0, {2}, set()) == win_buchi(sub, 0, {2})


def test_win_genbuchi_safe_examples(gg1):
    sub, _ = gg1
    assert win_genbuchi_safe(sub, [{1}, {0, 1}], set()) == {0, 1}
    assert win_genbuchi_safe(sub, [{1}, set()], set()) == set()


def test_buchi_against_oracle():
    rng = random.Random(17)
    for seed in range(250):
        arena, _ = random_game(rng.randint(1, 8), 3, 1, 2, seed)
        sub = Subgame.full(arena)
        player = rng.randint(0, 1)
        target = {v for v in sub.alive if rng.random() < 0.4}
        assert win_buchi(sub, player, target) == buchi_oracle(sub, player, target)


def test_buchi_safe_against_oracle():
    rng = random.Random(23)
    for seed in range(250):
        arena, _ = random_game(rng.randint(1, 8), 3, 1, 2, seed)
        sub = Subgame.full(arena)
        player = rng.randint(0, 1)
        target = {v for v in sub.alive if rng.random() < 0.4}
        bad = {v for v in sub.alive if rng.random() < 0.25} - target
        assert win_buchi_safe(sub, player, target, bad) == buchi_oracle(
            sub, player, target, bad
        )


def test_genbuchi_safe_against_oracle():
    rng = random.Random(31)
    for seed in range(150):
        n = rng.randint(1, 7)
        arena, _ = random_game(n, 3, 1, 2, seed)
        sub = Subgame.full(arena)
        k = rng.randint(1, 3)
        targets = [{v for v in sub.alive if rng.random() < 0.45} for _ in range(k)]
        bad = {v for v in sub.alive if rng.random() < 0.2}
        targets = [t - bad for t in targets]
        assert win_genbuchi_safe(sub, targets, bad) == genbuchi_oracle(
            sub, targets, bad
        )


def test_genbuchi_k1_collapses_to_buchi():
    rng = random.Random(41)
    for seed in range(120):
        arena, _ = random_game(rng.randint(1, 8), 3, 1, 2, seed)
        sub = Subgame.full(arena)
        target = {v for v in sub.alive if rng.random() < 0.4}
        bad = {v for v in sub.alive if rng.random() < 0.2}
        assert win_genbuchi_safe(sub, [target], bad) == win_buchi_safe(
            sub, 0, target, bad
        )


def test_buchi_discard_is_opponent_cobuchi_win():
    # the peeling loop's discarded region is the opponent's co-Buchi win
    rng = random.Random(53)
    for seed in range(150):
        arena, _ = random_game(rng.randint(1, 8), 3, 1, 2, seed)
        sub = Subgame.full(arena)
        player = rng.randint(0, 1)
        target = {v for v in sub.alive if rng.random() < 0.4}
        won = win_buchi(sub, player, target)
        discarded = sub.alive - won
        # opponent wins co-Buchi(target) exactly on the complement
        assert discarded == sub.alive - buchi_oracle(sub, player, target)


def test_buchi_subsets_of_reach_and_safe():
    rng = random.Random(61)
    for seed in range(150):
        arena, _ = random_game(rng.randint(1, 8), 3, 1, 2, seed)
        sub = Subgame.full(arena)
        player = rng.randint(0, 1)
        target = {v for v in sub.alive if rng.random() < 0.4}
        bad = {v for v in sub.alive if rng.random() < 0.2} - target
        assert win_buchi(sub, player, target) <= win_reach(sub, player, target)
        assert win_buchi_safe(sub, player, target, bad) <= win_buchi(
            sub, player, target
        ) & win_safe(sub, player, bad)


def test_empty_target_set_in_conjunction():
    arena, _ = random_game(5, 2, 1, 2, seed=3)
    sub = Subgame.full(arena)
    assert win_genbuchi_safe(sub, [set(), sub.alive], set()) == set()
