"""
WHQ Engine - Shared Test Fixtures

Bundled examples are built once per session; every structure is immutable.
"""
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.examples import build_example
from src.structure import magma_algebra, set_entry


@pytest.fixture(scope="session")
def trivial():
    return build_example("trivial")


@pytest.fixture(scope="session")
def z2():
    return build_example("group-z2")


@pytest.fixture(scope="session")
def z3():
    return build_example("group-z3")


@pytest.fixture(scope="session")
def s3():
    return build_example("group-s3")


@pytest.fixture(scope="session")
def p2():
    """Pair groupoid on two objects; basis e11, e12, e21, e22."""
    return build_example("groupoid-pair")


@pytest.fixture(scope="session")
def s10():
    """Steiner loop of AG(2,3): e plus nine points, x·x = e, non-associative."""
    return build_example("steiner-ag3")


@pytest.fixture(scope="session")
def idempotent_monoid(z2):
    """k[{1, z}] with z·z = z: a bialgebra whose fusion map is singular."""
    S = set_entry(z2, "mult", (0, 3), 0)
    return set_entry(S, "mult", (1, 3), 1).with_antipode(None)


# Unital magmas with group-like coalgebra. All of them pass the quasigroup
# premises; each breaks exactly one later step of synthesis.

RIGHT_CANCELLATIVE_MAGMA = [
    [0, 1, 2],
    [1, 2, 1],
    [2, 0, 0],
]

# x·x = e and every right translation is an involution, so (xy)y = x;
# 2·(2·1) = 4 breaks the left inverse property.
RIGHT_IP_LOOP = [
    [0, 1, 2, 3, 4, 5],
    [1, 0, 4, 5, 3, 2],
    [2, 3, 0, 4, 5, 1],
    [3, 2, 5, 0, 1, 4],
    [4, 5, 1, 2, 0, 3],
    [5, 4, 3, 1, 2, 0],
]

# 1·2 = e but 3·1 = e: left and right inverses differ
SKEW_INVERSE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 2, 0, 4, 3],
    [2, 4, 3, 1, 0],
    [3, 0, 4, 2, 1],
    [4, 3, 1, 0, 2],
]


@pytest.fixture(scope="session")
def right_magma():
    """Right translations bijective, left ones not: f inverts, g does not."""
    return magma_algebra(RIGHT_CANCELLATIVE_MAGMA, name="right-magma")


@pytest.fixture(scope="session")
def right_ip_loop():
    """Right but not left inverse property: f⁻¹ almost linear, g⁻¹ not."""
    return magma_algebra(RIGHT_IP_LOOP, name="right-ip-loop")


@pytest.fixture(scope="session")
def left_ip_loop():
    """Opposite of right_ip_loop: f⁻¹ is not almost left linear."""
    opposite = [list(col) for col in zip(*RIGHT_IP_LOOP)]
    return magma_algebra(opposite, name="left-ip-loop")


@pytest.fixture(scope="session")
def skew_inverse_loop():
    return magma_algebra(SKEW_INVERSE_LOOP, name="skew-inverse-loop")
