from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmsets import (
    DegenerateError,
    DensityMatrix,
    DomainError,
    EmptyEventError,
    Universe,
    born_profile,
    density_from_relation,
    is_pure,
    mixture,
    pure_density,
    rel_diagonal,
    rel_square,
    support_matrix,
)
from qmsets.catalog import ABC
from qmsets.errors import NormalizationError
from qmsets.partitions import enumerate_partitions
from qmsets.superposition import partition_density, support_vector

h = F(1, 2)


def test_worked_example():
    s = ABC.subset("ac")
    assert rel_diagonal(s).entries == ((1, 0, 0), (0, 0, 0), (0, 0, 1))
    assert rel_square(s).entries == ((1, 0, 1), (0, 0, 0), (1, 0, 1))
    rd = density_from_relation(rel_diagonal(s))
    rs = density_from_relation(rel_square(s))
    assert rd.entries == ((h, 0, 0), (0, 0, 0), (0, 0, h))
    assert rs.entries == ((h, 0, h), (0, 0, 0), (h, 0, h))
    assert rs.squared() == rs.entries
    assert is_pure(rs) and not is_pure(rd)
    assert born_profile(s).squared_amplitudes == (h, 0, h)


def test_singleton_event():
    s = ABC.subset("b")
    assert rel_diagonal(s) == rel_square(s)
    assert density_from_relation(rel_square(s)).entries[1][1] == 1
    assert is_pure(density_from_relation(rel_diagonal(s)))


def test_empty_event():
    with pytest.raises(EmptyEventError):
        rel_diagonal(ABC.empty())
    with pytest.raises(EmptyEventError):
        born_profile(ABC.empty())


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_every_superposition_event_is_pure(n):
    u = Universe.standard(n)
    for bits in range(1, 1 << n):
        s = u.vector(bits)
        assert is_pure(density_from_relation(rel_square(s)))
        assert is_pure(density_from_relation(rel_diagonal(s))) == (len(s) == 1)


def test_uniform_profile():
    assert born_profile(ABC.full()).squared_amplitudes == (F(1, 3),) * 3


def test_density_validation():
    with pytest.raises(NormalizationError):
        DensityMatrix(ABC, ((1, 0, 0), (0, 1, 0), (0, 0, 0)))
    with pytest.raises(DomainError):
        DensityMatrix(ABC, ((h, 1, 0), (0, h, 0), (0, 0, 0)))
    with pytest.raises(DomainError):
        DensityMatrix(ABC, ((2, 0, 0), (0, -1, 0), (0, 0, 0)))
    with pytest.raises(DegenerateError):
        pure_density(ABC, [0, 0, 0])


nonzero = st.fractions(min_value=-5, max_value=5, max_denominator=12).filter(lambda x: x != 0)
amplitude = st.one_of(st.just(F(0)), nonzero)


@settings(max_examples=150)
@given(amps=st.integers(1, 5).flatmap(lambda n: st.lists(amplitude, min_size=n, max_size=n)))
def test_support_pattern_of_pure_states(amps):
    u = Universe.standard(len(amps))
    s = support_vector(u, amps)
    if not s:
        return
    rho = pure_density(u, amps)
    assert is_pure(rho)
    assert support_matrix(rho) == rel_square(s)


def test_mixture_weights():
    a = density_from_relation(rel_square(ABC.subset("a")))
    b = density_from_relation(rel_square(ABC.subset("bc")))
    m = mixture([F(1, 3), F(2, 3)], [a, b])
    assert m.diagonal() == (F(1, 3), F(1, 3), F(1, 3))
    assert m.entries[1][2] == F(1, 3)
    assert mixture([1], [a]) == a
    with pytest.raises(NormalizationError):
        mixture([h, h, h], [a, b, a])


def test_partition_density_is_pure_only_at_bottom():
    for p in enumerate_partitions(Universe.standard(4)):
        rho = partition_density(p.block_vectors())
        assert rho.trace == 1
        assert is_pure(rho) == (len(p) == 1)
