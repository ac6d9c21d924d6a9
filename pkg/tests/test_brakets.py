import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qmsets import (
    BraKetContext,
    DomainError,
    EmptyEventError,
    NumericalAttribute,
    Universe,
    born,
    braket,
    measure_attribute,
    norm_squared,
    resolution_check,
    transform,
)
from qmsets.catalog import ABC, PRIMED, primed_basis

U = BraKetContext.computational(ABC)
UP = BraKetContext(primed_basis())


def subsets(u):
    return [u.vector(b) for b in range(1 << u.n)]


def test_overlap_is_intersection_size():
    assert braket(U, ABC.subset("ab"), ABC.subset("bc")) == 1
    assert norm_squared(U, ABC.full()) == 3
    assert braket(U, ABC.subset("a"), ABC.subset("c")) == 0


def test_mixed_bases_are_rejected():
    with pytest.raises(DomainError):
        braket(U, ABC.subset("a"), PRIMED.subset(["a'"]))


def test_relabeling_preserves_brakets():
    for s, t in itertools.product(subsets(ABC), repeat=2):
        s2, t2 = transform(U, UP, s), transform(U, UP, t)
        assert s2.labels() == tuple(x + "'" for x in s.labels())
        assert braket(U, s, t) == braket(UP, s2, t2)


def test_change_of_basis_does_not_preserve_brakets():
    # the same vectors written in U' coordinates generally overlap differently
    b = primed_basis()
    s, t = ABC.subset("ab"), ABC.subset("bc")
    assert braket(U, s, t) == 1
    assert braket(UP, b.from_space(s), b.from_space(t)) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_resolution_of_unity(n):
    u = Universe.standard(n)
    ctx = BraKetContext.computational(u)
    for s, t in itertools.product(subsets(u), repeat=2):
        assert resolution_check(ctx, s, t)


def test_born_rule():
    s = ABC.subset("ac")
    assert born(U, s, "a") == F(1, 2)
    assert born(U, s, 1) == 0
    assert sum(born(U, ABC.full(), i) for i in range(3)) == 1
    with pytest.raises(EmptyEventError):
        born(U, ABC.empty(), 0)


def test_measure_attribute():
    f = NumericalAttribute.characteristic(ABC.subset("b"))
    branches = measure_attribute(U, ABC.full(), f)
    assert [(b.value, b.probability, b.state) for b in branches] == [
        (0, F(2, 3), ABC.subset("ac")),
        (1, F(1, 3), ABC.subset("b")),
    ]


@given(
    vals=st.lists(st.integers(0, 3), min_size=4, max_size=4),
    bits=st.integers(1, 15),
    scale=st.integers(1, 7),
)
def test_measurement_depends_only_on_preimages(vals, bits, scale):
    u = Universe.standard(4)
    ctx = BraKetContext.computational(u)
    s = u.vector(bits)
    f = NumericalAttribute(u, tuple(vals))
    g = NumericalAttribute(u, tuple(F(-scale * v + 1, 3) for v in vals))
    bf, bg = measure_attribute(ctx, s, f), measure_attribute(ctx, s, g)
    assert sum(b.probability for b in bf) == 1
    assert sorted((b.probability, b.state.bits) for b in bf) == sorted((b.probability, b.state.bits) for b in bg)
    for b in bf:
        assert b.state <= s and b.state
        assert b.probability == F(len(f.preimage(b.value) & s), len(s))
