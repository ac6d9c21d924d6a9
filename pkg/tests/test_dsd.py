import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmsets import (
    Basis,
    DomainError,
    Dsd,
    DsdKind,
    Gf2Matrix,
    NotABasisError,
    NumericalAttribute,
    Subspace,
    Universe,
    circumflex,
    circumflex_basis,
    classify,
    dsd_from_attribute,
    failing_part,
    is_nonsingular,
    maximal_dsd,
    proto_join,
    se_span,
    span,
    validate_dsd,
)
from qmsets.catalog import ABC, PRIMED, primed_basis
from qmsets.partitions import enumerate_partitions


def unique_decomposition(d):
    """Every vector is exactly one sum of one member from each part."""
    counts = {}
    for choice in itertools.product(*[[m.bits for m in p.members()] for p in d.parts]):
        v = 0
        for x in choice:
            v ^= x
        counts[v] = counts.get(v, 0) + 1
    return len(counts) == 1 << d.universe.n and set(counts.values()) == {1}


def enumerated_intersections(d1, d2):
    """Nonzero common vectors of every pair of parts, by listing members."""
    out = set()
    for v in d1.parts:
        mv = {m.bits for m in v.members()}
        for w in d2.parts:
            out |= (mv & {m.bits for m in w.members()}) - {0}
    return out


def f_dsd():
    return dsd_from_attribute(NumericalAttribute.injective(ABC), Basis.computational(ABC))


def g_dsd():
    g = NumericalAttribute.from_mapping(PRIMED, {"a'": 1, "b'": 1, "c'": 2})
    return dsd_from_attribute(g, primed_basis())


def test_f_dsd_parts():
    assert [str(p) for p in f_dsd().parts] == ["{{}, {a}}", "{{}, {b}}", "{{}, {c}}"]
    assert validate_dsd(f_dsd())


def test_g_dsd_parts():
    d = g_dsd()
    members = [{str(m) for m in p.members()} for p in d.parts]
    assert members == [{"{}", "{a,b}", "{a,b,c}", "{c}"}, {"{}", "{b,c}"}]
    assert validate_dsd(d)


def test_f_vs_g_is_non_commuting():
    c = classify(f_dsd(), g_dsd())
    assert c.kind is DsdKind.NON_COMMUTING
    assert c.se == span([ABC.subset("c")])
    assert c.se.dim == 1
    assert proto_join(f_dsd(), g_dsd()) == [span([ABC.subset("c")])]
    assert c.join is None


def test_constant_attribute_gives_trivial_dsd():
    d = dsd_from_attribute(NumericalAttribute(ABC, (7, 7, 7)), Basis.computational(ABC))
    assert d.parts == (Subspace.full(ABC),)


def test_attribute_must_live_on_basis_labels():
    with pytest.raises(DomainError):
        dsd_from_attribute(NumericalAttribute.injective(ABC), primed_basis())


def test_dependent_parts_fail():
    d = Dsd(ABC, (span([ABC.subset("ab")]), span([ABC.subset("ab"), ABC.subset("c")])))
    assert not validate_dsd(d)
    assert failing_part(d) == 1
    short = Dsd(ABC, (span([ABC.subset("a")]), span([ABC.subset("b")])))
    assert failing_part(short) == 2


def test_zero_part_rejected():
    with pytest.raises(DomainError):
        Dsd(ABC, (Subspace.zero(ABC), Subspace.full(ABC)))


@pytest.mark.parametrize("n", [2, 3])
def test_validate_matches_decomposition_oracle_exhaustive(n):
    u = Universe.standard(n)
    nonzero = [span([u.vector(x) for x in xs], u) for k in range(1, n + 1) for xs in itertools.combinations(range(1, 1 << n), k)]
    spaces = sorted(set(nonzero), key=lambda s: s.basis)
    for k in (1, 2, 3):
        for parts in itertools.combinations(spaces, k):
            d = Dsd(u, parts)
            assert validate_dsd(d) == unique_decomposition(d)


@settings(max_examples=150, deadline=None)
@given(parts=st.lists(st.lists(st.integers(1, 15), min_size=1, max_size=2), min_size=1, max_size=4))
def test_validate_matches_decomposition_oracle_n4(parts):
    u = Universe.standard(4)
    d = Dsd(u, tuple(span([u.vector(x) for x in p]) for p in parts))
    assert validate_dsd(d) == unique_decomposition(d)


def random_basis(u, cols):
    m = Gf2Matrix.from_columns(cols, u.n)
    return Basis(Universe(tuple(x + "'" for x in u.labels)), u, m) if is_nonsingular(m) else None


@pytest.mark.parametrize("n", [2, 3, 4])
def test_same_basis_attributes_commute(n):
    u = Universe.standard(n)
    parts = enumerate_partitions(u)
    cols = [(1 << (i + 1)) - 1 for i in range(n)]  # {a}, {a,b}, {a,b,c}, ...
    for basis in (Basis.computational(u), random_basis(u, cols)):
        for p, q in itertools.product(parts, repeat=2):
            f = NumericalAttribute(basis.labels, NumericalAttribute.labeling(p).values)
            g = NumericalAttribute(basis.labels, NumericalAttribute.labeling(q).values)
            c = classify(dsd_from_attribute(f, basis), dsd_from_attribute(g, basis))
            assert c.kind is DsdKind.COMMUTING
            assert validate_dsd(c.join)
            assert c.se == Subspace.full(u)


def test_self_proto_join():
    d = g_dsd()
    assert proto_join(d, d) == list(d.parts)


@pytest.mark.parametrize("n", [4, 6])
def test_circumflex_is_conjugate(n):
    u = Universe.standard(n)
    c = classify(maximal_dsd(Basis.computational(u)), maximal_dsd(circumflex(u)))
    assert c.kind is DsdKind.CONJUGATE
    assert c.se.dim == 0
    assert c.proto_join == ()


def test_conjugate_by_enumeration():
    u = Universe.standard(4)
    d1, d2 = maximal_dsd(Basis.computational(u)), maximal_dsd(circumflex(u))
    assert enumerated_intersections(d1, d2) == set()
    assert se_span(d1, d2) == Subspace.zero(u)


def test_circumflex_columns():
    u = Universe.standard(4)
    m = circumflex_basis(u)
    assert [u.vector(c).labels() for c in m.columns] == [
        ("b", "c", "d"),
        ("a", "c", "d"),
        ("a", "b", "d"),
        ("a", "b", "c"),
    ]
    b = circumflex(u)
    total = b.vector("b^") + b.vector("c^") + b.vector("d^")
    assert total == u.subset("a")


@pytest.mark.parametrize("n", [1, 3, 5])
def test_circumflex_odd_fails(n):
    with pytest.raises(NotABasisError):
        circumflex_basis(Universe.standard(n))


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_double_circumflex(n):
    m = circumflex_basis(Universe.standard(n))
    assert m @ m == Gf2Matrix.identity(n)


def test_circumflex_n2_swaps():
    u = Universe.standard(2)
    assert circumflex_basis(u).columns == (0b10, 0b01)
    c = classify(maximal_dsd(Basis.computational(u)), maximal_dsd(circumflex(u)))
    assert c.kind is DsdKind.COMMUTING


def test_mismatched_spaces():
    u4 = Universe.standard(4)
    with pytest.raises(DomainError):
        classify(f_dsd(), maximal_dsd(Basis.computational(u4)))
