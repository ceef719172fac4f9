import random

import pytest

from zariskivol import build_lattice, divisor


@pytest.fixture
def rng():
    return random.Random(20260817)


@pytest.fixture
def chain22():
    return build_lattice(("C1", "C2"), ((-2, 1), (1, -2)))


@pytest.fixture
def disjoint_chain():
    # ample-ish H away from a length-two chain
    return build_lattice(("H", "G1", "G2"), ((1, 0, 0), (0, -2, 1), (0, 1, -2)))


@pytest.fixture
def golden():
    """H meeting the first curve of a [2,2] chain, plus the split divisors."""
    lattice = build_lattice(
        ("H", "G1", "G2"), ((1, 1, 0), (1, -2, 1), (0, 1, -2))
    )
    divisors = {
        "D": divisor(lattice, (2, 1, 1)),
        "M": divisor(lattice, (2, 0, 0)),
        "Z": divisor(lattice, (0, 1, 1)),
    }
    return lattice, divisors
