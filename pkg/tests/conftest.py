import pytest

from genparity.arena import Subgame, parse_generalized, parse_parity

# Four tiny anchor games used throughout the suite.
G1_TEXT = "parity 2;\n0 2 0 1;\n1 1 1 0,2;\n2 0 0 2;"
G2_TEXT = "parity 0;\n0 1 0 0;"
GG1_TEXT = "generalized-parity 1 2;\n0 0,1 0 1;\n1 2,2 1 0;"
GG2_TEXT = "generalized-parity 0 2;\n0 1,0 0 0;"


@pytest.fixture
def g1():
    arena, profile = parse_parity(G1_TEXT)
    return Subgame.full(arena), profile


@pytest.fixture
def g2():
    arena, profile = parse_parity(G2_TEXT)
    return Subgame.full(arena), profile


@pytest.fixture
def gg1():
    arena, profile = parse_generalized(GG1_TEXT)
    return Subgame.full(arena), profile


@pytest.fixture
def gg2():
    arena, profile = parse_generalized(GG2_TEXT)
    return Subgame.full(arena), profile
