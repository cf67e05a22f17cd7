import random

from genparity.arena import Subgame
from genparity.oracle import brute_generalized, brute_parity, random_game
from genparity.recursive import (
    SolveResult,
    check_partial_contract,
    gen_ziel_with_psolver,
    gen_zielonka,
    ziel_with_psolver,
    zielonka,
)


def trivial_psolver(sub, profile):
    return SolveResult(frozenset(), frozenset(), frozenset(sub.alive))


def test_zielonka_examples(g1, g2):
    sub, profile = g1
    res = zielonka(sub, profile)
    assert res.win0 == {0, 1, 2}
    assert res.win1 == frozenset()
    assert res.unsolved == frozenset()

    sub2, profile2 = g2
    res2 = zielonka(sub2, profile2)
    assert res2.win0 == frozenset()
    assert res2.win1 == {0}


def test_zielonka_empty_subgame(g1):
    sub, profile = g1
    empty = Subgame(sub.base, set())
    res = zielonka(empty, profile)
    assert res.win0 == res.win1 == frozenset()


def test_gen_zielonka_examples(gg1, gg2):
    sub, profile = gg1
    assert gen_zielonka(sub, profile).win0 == {0, 1}
    sub2, profile2 = gg2
    assert gen_zielonka(sub2, profile2).win1 == {0}


def test_zielonka_against_oracle():
    rng = random.Random(2)
    for seed in range(400):
        arena, profile = random_game(rng.randint(1, 8), 3, 1, 4, seed)
        sub = Subgame.full(arena)
        got = zielonka(sub, profile)
        want = brute_parity(sub, profile)
        assert got.win0 == want.win0, f"seed {seed}"
        assert got.win1 == want.win1, f"seed {seed}"


def test_gen_zielonka_against_oracle():
    rng = random.Random(8)
    for seed in range(250):
        k = rng.randint(1, 3)
        arena, profile = random_game(rng.randint(1, 6), 3, k, 3, seed)
        sub = Subgame.full(arena)
        got = gen_zielonka(sub, profile)
        want = brute_generalized(sub, profile)
        assert got.win0 == want.win0, f"seed {seed} k {k}"
        assert got.win1 == want.win1, f"seed {seed} k {k}"


def test_gen_zielonka_k1_matches_zielonka():
    for seed in range(200):
        arena, profile = random_game(1 + seed % 8, 3, 1, 4, seed)
        sub = Subgame.full(arena)
        a = zielonka(sub, profile)
        b = gen_zielonka(sub, profile)
        assert a.win0 == b.win0 and a.win1 == b.win1


def test_trivial_psolver_degenerates_to_plain_recursion():
    for seed in range(120):
        arena, profile = random_game(1 + seed % 8, 3, 1, 4, seed)
        sub = Subgame.full(arena)
        plain = zielonka(sub, profile)
        combo = ziel_with_psolver(sub, profile, trivial_psolver)
        assert plain.win0 == combo.win0 and plain.win1 == combo.win1

    for seed in range(80):
        arena, profile = random_game(1 + seed % 6, 3, 2, 3, seed)
        sub = Subgame.full(arena)
        plain = gen_zielonka(sub, profile)
        combo = gen_ziel_with_psolver(sub, profile, trivial_psolver)
        assert plain.win0 == combo.win0 and plain.win1 == combo.win1


def test_fully_solving_psolver_is_returned_verbatim(g1):
    sub, profile = g1
    calls = []

    def oracle_psolver(view, prof):
        calls.append(len(view.alive))
        res = brute_parity(view, prof)
        return SolveResult(res.win0, res.win1, frozenset())

    res = ziel_with_psolver(sub, profile, oracle_psolver)
    assert res.win0 == {0, 1, 2}
    assert calls == [3]  # solved at the root, no recursion


def test_determinacy_partition():
    for seed in range(150):
        arena, profile = random_game(1 + seed % 8, 3, 1, 4, seed)
        sub = Subgame.full(arena)
        res = zielonka(sub, profile)
        assert res.win0 | res.win1 == sub.alive
        assert not res.win0 & res.win1


def test_deep_game_needs_no_interpreter_recursion():
    # a chain forcing one recursion level per vertex
    n = 3000
    owner = [v % 2 for v in range(n)]
    succ = [[v + 1] if v + 1 < n else [v] for v in range(n)]
    prio = [v % 5 for v in range(n)]
    from genparity.arena import GameArena, PriorityProfile

    arena = GameArena(owner, succ)
    profile = PriorityProfile.parity(prio)
    res = zielonka(Subgame.full(arena), profile)
    assert res.win0 | res.win1 == frozenset(range(n))


def test_contract_checker_flags_bogus_regions(g1):
    sub, profile = g1

    def bogus(view, prof):
        # claims vertex 0 for player 1; the unsolved player-1 vertex 1 then
        # escapes into its own region via 1 -> 0, which the contract forbids
        return SolveResult(frozenset(), frozenset({0}), frozenset(view.alive - {0}))

    problems = check_partial_contract(sub, profile, bogus(sub, profile))
    assert problems
