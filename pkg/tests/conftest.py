import pytest

from taumap.algebra import MonomialAlgebra
from taumap.corpus import star_quiver, two_cycle as _two_cycle
from taumap.quiver import Quiver


@pytest.fixture
def two_cycle():
    return _two_cycle()


@pytest.fixture
def a2():
    return MonomialAlgebra(Quiver([1, 2], [("a", 1, 2)]), name="A2")


@pytest.fixture
def star():
    return star_quiver()


@pytest.fixture
def cycle_plus_source():
    """2-cycle with relations ab, ba and an extra arrow c: 3 -> 2."""
    q = Quiver([1, 2, 3], [("a", 1, 2), ("b", 2, 1), ("c", 3, 2)])
    return MonomialAlgebra(q, [("a", "b"), ("b", "a")])


@pytest.fixture
def semisimple():
    return MonomialAlgebra(Quiver([1]))
