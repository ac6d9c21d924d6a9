"""Vector spaces over Z2 whose vectors are subsets of a finite universe.

A subset ``S`` of ``U = {u_0, ..., u_{n-1}}`` is stored as an ``n``-bit mask,
bit ``i`` set iff ``u_i`` is in ``S``. Addition is symmetric difference (XOR),
so every vector is its own negative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import DomainError, InvalidBasisError

MAX_ELEMENTS = 16


@dataclass(frozen=True)
class Universe:
    """Ordered set of distinct element labels; index ``i`` is label ``labels[i]``."""

    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if not 1 <= len(labels) <= MAX_ELEMENTS:
            raise DomainError(f"universe needs 1..{MAX_ELEMENTS} elements, got {len(labels)}")
        if len(set(labels)) != len(labels):
            raise DomainError(f"duplicate labels in universe {labels}")

    @classmethod
    def of(cls, labels: str | Iterable[str]) -> Universe:
        """``Universe.of("abc")``, ``Universe.of("a,b,c")`` or from any iterable of labels."""
        if isinstance(labels, str):
            labels = labels.split(",") if "," in labels else list(labels)
        return cls(tuple(x.strip() for x in labels))

    @classmethod
    def standard(cls, n: int) -> Universe:
        """``a, b, c, ...`` for small ``n``, ``u0, u1, ...`` beyond 26."""
        if n <= 26:
            return cls(tuple("abcdefghijklmnopqrstuvwxyz"[:n]))
        return cls(tuple(f"u{i}" for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise DomainError(f"{label!r} is not an element of {self}") from None

    def subset(self, labels: Iterable[str] = ()) -> SubsetVector:
        bits = 0
        for lab in labels:
            bits |= 1 << self.index(lab)
        return SubsetVector(self, bits)

    def vector(self, bits: int) -> SubsetVector:
        return SubsetVector(self, bits)

    def singleton(self, i: int) -> SubsetVector:
        return SubsetVector(self, 1 << i)

    def full(self) -> SubsetVector:
        return SubsetVector(self, self.full_mask)

    def empty(self) -> SubsetVector:
        return SubsetVector(self, 0)

    def all_vectors(self) -> Iterator[SubsetVector]:
        for bits in range(1 << self.n):
            yield SubsetVector(self, bits)

    def __str__(self):
        return "{" + ",".join(self.labels) + "}"


@dataclass(frozen=True)
class SubsetVector:
    universe: Universe
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.universe.n:
            raise DomainError(f"mask {self.bits:#x} exceeds universe of size {self.universe.n}")

    def __add__(self, other: SubsetVector) -> SubsetVector:
        return add(self, other)

    def __and__(self, other: SubsetVector) -> SubsetVector:
        _check_same(self.universe, other.universe)
        return SubsetVector(self.universe, self.bits & other.bits)

    def __or__(self, other: SubsetVector) -> SubsetVector:
        _check_same(self.universe, other.universe)
        return SubsetVector(self.universe, self.bits | other.bits)

    def __le__(self, other: SubsetVector) -> bool:
        _check_same(self.universe, other.universe)
        return self.bits & other.bits == self.bits

    def __len__(self):
        return self.bits.bit_count()

    def __bool__(self):
        return self.bits != 0

    def __iter__(self) -> Iterator[int]:
        b = self.bits
        while b:
            low = b & -b
            yield low.bit_length() - 1
            b ^= low

    def __contains__(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def labels(self) -> tuple[str, ...]:
        return tuple(self.universe.labels[i] for i in self)

    def to_list(self) -> list[int]:
        """0/1 coordinates, element 0 first (the column-vector reading)."""
        return [self.bits >> i & 1 for i in range(self.universe.n)]

    def to_bitstring(self) -> str:
        return "".join(str(x) for x in self.to_list())

    def __str__(self):
        return "{" + ",".join(self.labels()) + "}"


def _check_same(u: Universe, v: Universe) -> None:
    if u != v:
        raise DomainError(f"universe mismatch: {u} vs {v}")


def add(a: SubsetVector, b: SubsetVector) -> SubsetVector:
    """Symmetric difference ``(a - b) | (b - a)``."""
    _check_same(a.universe, b.universe)
    return SubsetVector(a.universe, a.bits ^ b.bits)


def bits_from_string(s: str) -> int:
    """``"110"`` -> mask with elements 0 and 1 set (leftmost char is element 0)."""
    bits = 0
    for i, ch in enumerate(s):
        if ch == "1":
            bits |= 1 << i
        elif ch != "0":
            raise DomainError(f"bad bitstring {s!r}")
    return bits


def bits_to_string(bits: int, n: int) -> str:
    return "".join("1" if bits >> i & 1 else "0" for i in range(n))


@dataclass(frozen=True)
class Gf2Matrix:
    """Matrix over Z2 stored column-wise: ``columns[j]`` is a row-index mask."""

    rows: int
    cols: int
    columns: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(self.columns))
        if len(self.columns) != self.cols:
            raise DomainError("column count does not match cols")
        if any(c < 0 or c >> self.rows for c in self.columns):
            raise DomainError("column mask exceeds row count")

    @classmethod
    def from_columns(cls, columns: Sequence[int], rows: int) -> Gf2Matrix:
        return cls(rows, len(columns), tuple(columns))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> Gf2Matrix:
        """Build from a list of 0/1 rows, ``rows[i][j]`` = entry at row i, column j."""
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols = [0] * ncols
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise DomainError("ragged matrix rows")
            for j, x in enumerate(row):
                if x not in (0, 1):
                    raise DomainError(f"entry {x!r} is not 0 or 1")
                if x:
                    cols[j] |= 1 << i
        return cls(nrows, ncols, tuple(cols))

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    def entry(self, i: int, j: int) -> int:
        return self.columns[j] >> i & 1

    def to_rows(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def apply(self, bits: int) -> int:
        """Matrix-vector product: XOR of the columns selected by ``bits``."""
        if bits >> self.cols:
            raise DomainError("vector longer than matrix width")
        out = 0
        j = 0
        while bits:
            if bits & 1:
                out ^= self.columns[j]
            bits >>= 1
            j += 1
        return out

    def __matmul__(self, other: Gf2Matrix) -> Gf2Matrix:
        if self.cols != other.rows:
            raise DomainError("incompatible shapes for product")
        return Gf2Matrix(self.rows, other.cols, tuple(self.apply(c) for c in other.columns))

    def rank(self) -> int:
        return kernels.rank(self.columns, self.rows)

    def solve(self, bits: int) -> int:
        """Coordinates ``x`` with ``self.apply(x) == bits``; requires a non-singular matrix."""
        n = self.cols
        # rows are column | tag; the appended target carries its own tag bit
        rows = [c | (1 << (self.rows + j)) for j, c in enumerate(self.columns)]
        rows.append(bits | (1 << (self.rows + n)))
        for dep in kernels.dependencies(rows, self.rows):
            if dep >> n & 1:
                return dep & ((1 << n) - 1)
        raise InvalidBasisError("vector is not in the column space")

    def inverse(self) -> Gf2Matrix:
        if not is_nonsingular(self):
            raise InvalidBasisError("matrix is singular")
        return Gf2Matrix(self.rows, self.cols, tuple(self.solve(1 << i) for i in range(self.rows)))


def is_nonsingular(m: Gf2Matrix) -> bool:
    if not m.is_square:
        raise DomainError(f"matrix is {m.rows}x{m.cols}, not square")
    return m.rank() == m.rows


def change_of_basis(
    v_in_old: SubsetVector, basis_map: Gf2Matrix, target: Universe | None = None
) -> SubsetVector:
    """Coordinates of ``v_in_old`` relative to the basis given by ``basis_map``.

    ``basis_map`` has one column per new basis vector, written in the old
    coordinates, so the result is ``basis_map^-1 v``. Pass ``target`` to label
    the result with the new basis names.
    """
    n = v_in_old.universe.n
    if basis_map.rows != n or not is_nonsingular(basis_map):
        raise InvalidBasisError("basis map must be a non-singular n x n matrix")
    target = target or v_in_old.universe
    if target.n != n:
        raise DomainError("target universe has the wrong size")
    return SubsetVector(target, basis_map.solve(v_in_old.bits))


@dataclass(frozen=True)
class Basis:
    """A named basis: ``labels[i]`` is the vector ``matrix.columns[i]`` of ``space``."""

    labels: Universe
    space: Universe
    matrix: Gf2Matrix

    def __post_init__(self):
        n = self.space.n
        if self.labels.n != n or self.matrix.rows != n or self.matrix.cols != n:
            raise InvalidBasisError("basis shape does not match the space")
        if not is_nonsingular(self.matrix):
            raise InvalidBasisError(f"vectors of basis {self.labels} are linearly dependent")

    @classmethod
    def computational(cls, space: Universe) -> Basis:
        return cls(space, space, Gf2Matrix.identity(space.n))

    @classmethod
    def from_vectors(cls, labels: Universe, vectors: Sequence[SubsetVector]) -> Basis:
        space = vectors[0].universe
        return cls(labels, space, Gf2Matrix.from_columns([v.bits for v in vectors], space.n))

    def vector(self, label: str) -> SubsetVector:
        return SubsetVector(self.space, self.matrix.columns[self.labels.index(label)])

    def to_space(self, v: SubsetVector) -> SubsetVector:
        """A ket written in this basis, re-expressed in computational coordinates."""
        _check_same(v.universe, self.labels)
        return SubsetVector(self.space, self.matrix.apply(v.bits))

    def from_space(self, v: SubsetVector) -> SubsetVector:
        _check_same(v.universe, self.space)
        return change_of_basis(v, self.matrix, self.labels)


@dataclass(frozen=True)
class Subspace:
    """Subspace of Z2^n held by its canonical reduced echelon basis.

    Two subspaces compare equal iff they contain the same vectors.
    """

    universe: Universe
    basis: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(kernels.rref(self.basis, self.universe.n)))

    @classmethod
    def zero(cls, universe: Universe) -> Subspace:
        return cls(universe, ())

    @classmethod
    def full(cls, universe: Universe) -> Subspace:
        return cls(universe, tuple(1 << i for i in range(universe.n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_vectors(self) -> list[SubsetVector]:
        return [SubsetVector(self.universe, b) for b in self.basis]

    def members(self) -> Iterator[SubsetVector]:
        """All ``2**dim`` vectors."""
        for coeffs in range(1 << self.dim):
            bits = 0
            for k, b in enumerate(self.basis):
                if coeffs >> k & 1:
                    bits ^= b
            yield SubsetVector(self.universe, bits)

    def __contains__(self, v: SubsetVector) -> bool:
        _check_same(self.universe, v.universe)
        return kernels.rank(self.basis + (v.bits,), self.universe.n) == self.dim

    def __str__(self):
        return "{" + ", ".join(str(m) if m else "{}" for m in self.members()) + "}"


def span(vectors: Iterable[SubsetVector], universe: Universe | None = None) -> Subspace:
    vectors = list(vectors)
    if universe is None:
        if not vectors:
            raise DomainError("span of an empty list needs an explicit universe")
        universe = vectors[0].universe
    for v in vectors:
        _check_same(universe, v.universe)
    return Subspace(universe, tuple(v.bits for v in vectors))


def sum_of(spaces: Iterable[Subspace], universe: Universe) -> Subspace:
    """Smallest subspace containing every one of ``spaces``."""
    rows: list[int] = []
    for s in spaces:
        _check_same(universe, s.universe)
        rows.extend(s.basis)
    return Subspace(universe, tuple(rows))


def intersect(p: Subspace, q: Subspace) -> Subspace:
    """Intersection via linear relations between the two bases.

    A relation ``sum c_i p_i + sum d_j q_j = 0`` gives the common vector
    ``sum c_i p_i``; the relation space maps onto the intersection.
    """
    _check_same(p.universe, q.universe)
    n = p.universe.n
    dp = p.dim
    rows = [b | (1 << (n + i)) for i, b in enumerate(p.basis)]
    rows += [b | (1 << (n + dp + j)) for j, b in enumerate(q.basis)]
    common = []
    for tag in kernels.dependencies(rows, n):
        v = 0
        for i in range(dp):
            if tag >> i & 1:
                v ^= p.basis[i]
        common.append(v)
    return Subspace(p.universe, tuple(common))
