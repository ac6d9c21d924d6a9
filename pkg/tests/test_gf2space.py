import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmsets import (
    Basis,
    DomainError,
    Gf2Matrix,
    InvalidBasisError,
    Subspace,
    Universe,
    add,
    change_of_basis,
    intersect,
    is_nonsingular,
    span,
)
from qmsets.catalog import ABC, DOUBLE_PRIMED, PRIMED, double_primed_basis, primed_basis


def brute_span(bits_list):
    out = {0}
    for b in bits_list:
        out |= {x ^ b for x in out}
    return out


def brute_nonsingular(columns, n):
    """Injective on all 2**n inputs."""
    images = set()
    for x in range(1 << n):
        y = 0
        for j in range(n):
            if x >> j & 1:
                y ^= columns[j]
        images.add(y)
    return len(images) == 1 << n


def vectors(n):
    return st.integers(0, (1 << n) - 1)


def test_universe_labels():
    u = Universe.of("a,b,c")
    assert u == Universe.of("abc") == ABC
    assert u.subset(["a", "c"]).to_bitstring() == "101"
    with pytest.raises(DomainError):
        u.index("z")
    with pytest.raises(DomainError):
        Universe(("a", "a"))


def test_addition_is_symmetric_difference():
    u = ABC
    assert add(u.subset("ab"), u.subset("bc")) == u.subset("ac")
    assert str(u.subset("ab") + u.subset("ab")) == "{}"


def test_addition_rejects_mixed_universes():
    with pytest.raises(DomainError):
        add(ABC.subset("a"), PRIMED.subset(["a'"]))


@settings(max_examples=100)
@given(a=vectors(4), b=vectors(4), c=vectors(4))
def test_group_laws(a, b, c):
    u = Universe.standard(4)
    x, y, z = u.vector(a), u.vector(b), u.vector(c)
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x + u.empty() == x
    assert x + x == u.empty()


def test_invertible_3x3_count():
    # |GL(3,2)| = 168, checked against injectivity on all inputs
    count = 0
    for cols in itertools.product(range(8), repeat=3):
        m = Gf2Matrix.from_columns(cols, 3)
        ok = is_nonsingular(m)
        assert ok == brute_nonsingular(cols, 3)
        count += ok
    assert count == 168


def test_inverse_roundtrip():
    for cols in itertools.product(range(8), repeat=3):
        m = Gf2Matrix.from_columns(cols, 3)
        if not is_nonsingular(m):
            with pytest.raises(InvalidBasisError):
                m.inverse()
            continue
        assert m @ m.inverse() == Gf2Matrix.identity(3)
        assert m.inverse() @ m == Gf2Matrix.identity(3)


def test_nonsquare_is_rejected():
    with pytest.raises(DomainError):
        is_nonsingular(Gf2Matrix.from_rows([[1, 0, 1], [0, 1, 1]]))


def test_ket_table():
    # each row: a subset of U, its coordinates in the primed and double-primed bases
    b1, b2 = primed_basis(), double_primed_basis()
    table = [
        ("abc", ["b'"], ['a"', 'b"', 'c"']),
        ("ab", ["a'"], ['b"']),
        ("bc", ["c'"], ['b"', 'c"']),
        ("ac", ["a'", "c'"], ['c"']),
        ("a", ["b'", "c'"], ['a"']),
        ("b", ["a'", "b'", "c'"], ['a"', 'b"']),
        ("c", ["a'", "b'"], ['a"', 'c"']),
        ("", [], []),
    ]
    for old, p1, p2 in table:
        assert b1.from_space(ABC.subset(old)) == PRIMED.subset(p1)
        assert b1.to_space(PRIMED.subset(p1)) == ABC.subset(old)
        assert change_of_basis(ABC.subset(old), b1.matrix, PRIMED) == PRIMED.subset(p1)
        assert b2.from_space(ABC.subset(old)) == DOUBLE_PRIMED.subset(p2)


@settings(max_examples=100)
@given(cols=st.lists(vectors(4), min_size=4, max_size=4), v=vectors(4))
def test_change_of_basis_roundtrip(cols, v):
    u = Universe.standard(4)
    m = Gf2Matrix.from_columns(cols, 4)
    if not brute_nonsingular(cols, 4):
        with pytest.raises(InvalidBasisError):
            change_of_basis(u.vector(v), m)
        return
    coords = change_of_basis(u.vector(v), m)
    assert m.apply(coords.bits) == v


def test_singular_basis_rejected():
    with pytest.raises(InvalidBasisError):
        Basis(PRIMED, ABC, Gf2Matrix.from_columns([0b011, 0b110, 0b101], 3))


@settings(max_examples=150)
@given(xs=st.lists(vectors(5), max_size=6))
def test_span_matches_brute_force(xs):
    u = Universe.standard(5)
    s = span([u.vector(x) for x in xs], u)
    assert {m.bits for m in s.members()} == brute_span(xs)
    assert span(s.basis_vectors(), u) == s


@settings(max_examples=150)
@given(xs=st.lists(vectors(4), max_size=5), ys=st.lists(vectors(4), max_size=5))
def test_canonical_equality(xs, ys):
    u = Universe.standard(4)
    a, b = span([u.vector(x) for x in xs], u), span([u.vector(y) for y in ys], u)
    assert (a == b) == (brute_span(xs) == brute_span(ys))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_intersect_against_enumeration(n):
    u = Universe.standard(n)
    # every subspace of Z2^n, listed by its canonical basis
    spaces = {span([u.vector(x) for x in xs], u) for k in range(n + 1) for xs in itertools.combinations(range(1, 1 << n), k)}
    members = {s: {m.bits for m in s.members()} for s in spaces}
    for p in spaces:
        for q in spaces:
            x = intersect(p, q)
            assert {m.bits for m in x.members()} == members[p] & members[q]
            assert x == intersect(q, p)


def test_subspace_membership():
    s = span([ABC.subset("ab"), ABC.subset("bc")])
    assert ABC.subset("ac") in s
    assert ABC.subset("a") not in s
    assert Subspace.zero(ABC).dim == 0
    assert Subspace.full(ABC).dim == 3


def test_span_needs_universe_when_empty():
    with pytest.raises(DomainError):
        span([])
    assert span([], ABC) == Subspace.zero(ABC)
