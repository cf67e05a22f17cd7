"""Solvers and polynomial-time partial solvers for parity and
generalized parity games."""

from .arena import (
    BudgetExceeded,
    GameArena,
    ParseError,
    PriorityProfile,
    Subgame,
    ValidationError,
    is_trap,
    parse_game,
    parse_generalized,
    parse_parity,
    serialize_generalized,
    serialize_parity,
    subgame,
)
from .attractor import attractor, cpre, positive_attractor, positive_safe_attractor
from .omega import win_buchi, win_buchi_safe, win_genbuchi_safe, win_reach, win_safe
from .oracle import brute_generalized, brute_parity, random_game
from .recursive import (
    SolveResult,
    check_partial_contract,
    gen_ziel_with_psolver,
    gen_zielonka,
    ziel_with_psolver,
    zielonka,
)

__all__ = [
    "BudgetExceeded",
    "GameArena",
    "ParseError",
    "PriorityProfile",
    "SolveResult",
    "Subgame",
    "ValidationError",
    "attractor",
    "brute_generalized",
    "brute_parity",
    "check_partial_contract",
    "cpre",
    "gen_ziel_with_psolver",
    "gen_zielonka",
    "is_trap",
    "parse_game",
    "parse_generalized",
    "parse_parity",
    "positive_attractor",
    "positive_safe_attractor",
    "random_game",
    "serialize_generalized",
    "serialize_parity",
    "subgame",
    "win_buchi",
    "win_buchi_safe",
    "win_genbuchi_safe",
    "win_reach",
    "win_safe",
    "zielonka",
    "ziel_with_psolver",
]

__version__ = "0.1.0"
