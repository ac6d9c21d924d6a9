"""Relation matrices and exact density matrices for events on a finite sample space.

A classical event ``S`` is the diagonal relation ``Rel(diag S)``; a
superposition event is the full block ``Rel(S x S)``. Dividing either by its
trace gives a density matrix. Amplitudes ``1/sqrt|S|`` are irrational, so only
their squares are ever stored.

``|S| == 1`` is allowed (both representations coincide there) even though a
singleton is not a superposition in any interesting sense.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateError, DomainError, EmptyEventError, NormalizationError
from .gf2space import SubsetVector, Universe, _check_same

Matrix = tuple[tuple[Fraction, ...], ...]


def _square(rows, n, cast):
    out = tuple(tuple(cast(x) for x in row) for row in rows)
    if len(out) != n or any(len(row) != n for row in out):
        raise DomainError(f"expected a {n}x{n} matrix")
    return out


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n))
        for i in range(n)
    )


@dataclass(frozen=True)
class RelationMatrix:
    universe: Universe
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = _square(self.entries, self.universe.n, int)
        if any(x not in (0, 1) for row in entries for x in row):
            raise DomainError("relation matrix entries must be 0 or 1")
        object.__setattr__(self, "entries", entries)

    @property
    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.universe.n))

    def pairs(self) -> frozenset[tuple[int, int]]:
        n = self.universe.n
        return frozenset((i, j) for i in range(n) for j in range(n) if self.entries[i][j])


@dataclass(frozen=True)
class DensityMatrix:
    universe: Universe
    entries: Matrix

    def __post_init__(self):
        entries = _square(self.entries, self.universe.n, Fraction)
        object.__setattr__(self, "entries", entries)
        n = self.universe.n
        if sum(entries[i][i] for i in range(n)) != 1:
            raise NormalizationError("density matrix trace is not 1")
        if any(entries[i][j] != entries[j][i] for i in range(n) for j in range(i)):
            raise DomainError("density matrix is not symmetric")
        if any(entries[i][i] < 0 for i in range(n)):
            raise DomainError("density matrix has a negative diagonal entry")

    @property
    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(self.universe.n)), Fraction(0))

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self.entries[i][i] for i in range(self.universe.n))

    def squared(self) -> Matrix:
        return matmul(self.entries, self.entries)


@dataclass(frozen=True)
class AmplitudeProfile:
    """Squared amplitudes ``|<u_i|s>|^2`` per element."""

    universe: Universe
    squared_amplitudes: tuple[Fraction, ...]

    def __post_init__(self):
        p = tuple(Fraction(x) for x in self.squared_amplitudes)
        object.__setattr__(self, "squared_amplitudes", p)
        if len(p) != self.universe.n or sum(p) != 1 or min(p) < 0:
            raise NormalizationError("profile must be a probability vector over the universe")


def _nonempty(s: SubsetVector) -> None:
    if not s:
        raise EmptyEventError("event support is empty")


def rel_diagonal(s: SubsetVector) -> RelationMatrix:
    _nonempty(s)
    n = s.universe.n
    return RelationMatrix(
        s.universe, tuple(tuple(int(i == j and i in s) for j in range(n)) for i in range(n))
    )


def rel_square(s: SubsetVector) -> RelationMatrix:
    """``Rel(S x S)``, the outer product of the 0/1 support column with itself."""
    _nonempty(s)
    col = s.to_list()
    return RelationMatrix(s.universe, tuple(tuple(x * y for y in col) for x in col))


def density_from_relation(r: RelationMatrix) -> DensityMatrix:
    t = r.trace
    if t == 0:
        raise DegenerateError("relation matrix has zero trace")
    return DensityMatrix(r.universe, tuple(tuple(Fraction(x, t) for x in row) for row in r.entries))


def is_pure(rho: DensityMatrix) -> bool:
    """Idempotence, checked exactly."""
    return rho.squared() == rho.entries


def born_profile(s: SubsetVector) -> AmplitudeProfile:
    _nonempty(s)
    k = len(s)
    return AmplitudeProfile(
        s.universe, tuple(Fraction(1, k) if i in s else Fraction(0) for i in range(s.universe.n))
    )


def support_matrix(rho: DensityMatrix) -> RelationMatrix:
    return RelationMatrix(rho.universe, tuple(tuple(int(x != 0) for x in row) for row in rho.entries))


def support_vector(universe: Universe, amplitudes: Sequence) -> SubsetVector:
    bits = 0
    for i, a in enumerate(amplitudes):
        if a != 0:
            bits |= 1 << i
    return SubsetVector(universe, bits)


def pure_density(universe: Universe, amplitudes: Sequence) -> DensityMatrix:
    """``|s><s| / <s|s>`` for a real rational amplitude vector ``s``."""
    s = [Fraction(a) for a in amplitudes]
    if len(s) != universe.n:
        raise DomainError("amplitude vector has the wrong length")
    norm2 = sum(a * a for a in s)
    if norm2 == 0:
        raise DegenerateError("zero amplitude vector")
    return DensityMatrix(universe, tuple(tuple(x * y / norm2 for y in s) for x in s))


def mixture(weights: Sequence, states: Sequence[DensityMatrix]) -> DensityMatrix:
    """Convex combination ``sum_k w_k rho_k``."""
    w = [Fraction(x) for x in weights]
    if len(w) != len(states) or not states:
        raise DomainError("need one weight per state and at least one state")
    if any(x < 0 for x in w) or sum(w) != 1:
        raise NormalizationError("mixture weights must be nonnegative and sum to 1")
    u = states[0].universe
    for st in states:
        _check_same(u, st.universe)
    n = u.n
    return DensityMatrix(
        u,
        tuple(
            tuple(sum((wk * st.entries[i][j] for wk, st in zip(w, states)), Fraction(0)) for j in range(n))
            for i in range(n)
        ),
    )


def partition_density(blocks: Sequence[SubsetVector]) -> DensityMatrix:
    """``rho(pi) = sum_j Pr(B_j) rho(Sigma B_j)`` with ``Pr(B_j) = |B_j| / n``."""
    n = sum(len(b) for b in blocks)
    return mixture([Fraction(len(b), n) for b in blocks], [density_from_relation(rel_square(b)) for b in blocks])
