"""Set partitions of a universe and the refinement lattice.

Refinement runs "upward" toward more distinctions: the indiscrete partition
(one block) is the bottom and the discrete partition (all singletons) the top.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from . import kernels
from .errors import CapacityError, DomainError
from .gf2space import SubsetVector, Universe, _check_same

MAX_ENUMERATION = 10  # Bell(10) = 115975

Pair = tuple[int, int]


def _lowbit(b: int) -> int:
    return b & -b


@dataclass(frozen=True)
class Partition:
    """Blocks are bit masks, ordered by their least element."""

    universe: Universe
    blocks: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(sorted(self.blocks, key=_lowbit))
        object.__setattr__(self, "blocks", blocks)
        seen = 0
        for b in blocks:
            if b <= 0:
                raise DomainError("partition blocks must be nonempty")
            if b & seen:
                raise DomainError("partition blocks overlap")
            seen |= b
        if seen != self.universe.full_mask:
            raise DomainError("partition blocks do not cover the universe")

    @classmethod
    def from_labels(cls, universe: Universe, blocks: Iterable[Iterable[str]]) -> Partition:
        return cls(universe, tuple(universe.subset(b).bits for b in blocks))

    @classmethod
    def indiscrete(cls, universe: Universe) -> Partition:
        """The bottom ``0_U = {U}``."""
        return cls(universe, (universe.full_mask,))

    @classmethod
    def discrete(cls, universe: Universe) -> Partition:
        """The top ``1_U``: every element alone."""
        return cls(universe, tuple(1 << i for i in range(universe.n)))

    def block_vectors(self) -> list[SubsetVector]:
        return [SubsetVector(self.universe, b) for b in self.blocks]

    def block_of(self, i: int) -> int:
        for b in self.blocks:
            if b >> i & 1:
                return b
        raise DomainError(f"index {i} outside universe")

    def __len__(self):
        return len(self.blocks)

    def __str__(self):
        return "{" + ", ".join(str(v) for v in self.block_vectors()) + "}"


def dit_set(p: Partition) -> frozenset[Pair]:
    """Ordered pairs ``(i, j)`` whose elements sit in different blocks."""
    pairs = []
    for x in p.blocks:
        xs = list(SubsetVector(p.universe, x))
        for y in p.blocks:
            if x != y:
                pairs.extend((i, j) for i in xs for j in SubsetVector(p.universe, y))
    return frozenset(pairs)


def indit_set(p: Partition) -> frozenset[Pair]:
    """The equivalence relation of ``p`` (diagonal included)."""
    pairs = []
    for x in p.blocks:
        xs = list(SubsetVector(p.universe, x))
        pairs.extend((i, j) for i in xs for j in xs)
    return frozenset(pairs)


def dit_count(p: Partition) -> int:
    n = p.universe.n
    return n * n - sum(b.bit_count() ** 2 for b in p.blocks)


def refines(coarse: Partition, fine: Partition) -> bool:
    """True iff every block of ``fine`` is contained in a block of ``coarse``."""
    _check_same(coarse.universe, fine.universe)
    return kernels.refines_blocks(coarse.blocks, fine.blocks)


def refines_by_dits(coarse: Partition, fine: Partition) -> bool:
    """Same order, read off distinctions: ``dit(coarse) <= dit(fine)``."""
    _check_same(coarse.universe, fine.universe)
    return dit_set(coarse) <= dit_set(fine)


def join(p: Partition, q: Partition) -> Partition:
    """Least upper bound: all nonempty block intersections."""
    _check_same(p.universe, q.universe)
    return Partition(p.universe, kernels.join_blocks(p.blocks, q.blocks))


def meet(p: Partition, q: Partition) -> Partition:
    """Greatest lower bound: transitive closure of the union of indistinctions."""
    _check_same(p.universe, q.universe)
    return Partition(p.universe, kernels.meet_blocks(p.blocks, q.blocks, p.universe.n))


def enumerate_partitions(u: Universe) -> list[Partition]:
    """Every partition of ``u``, bottom first, top last."""
    if u.n > MAX_ENUMERATION:
        raise CapacityError(f"partition enumeration is capped at n={MAX_ENUMERATION}, got n={u.n}")
    return [Partition(u, blocks) for blocks in kernels.set_partitions(u.n)]


def covering_pairs(parts: Sequence[Partition]) -> list[tuple[int, int]]:
    """Hasse edges ``(i, j)`` where ``parts[j]`` covers ``parts[i]``.

    ``parts`` must be closed under the covers being looked for (a full
    enumeration is). A cover splits exactly one block into two.
    """
    index = {p.blocks: k for k, p in enumerate(parts)}
    edges = []
    for i, p in enumerate(parts):
        for bi, blk in enumerate(p.blocks):
            low = _lowbit(blk)
            rest = blk ^ low
            # subsets of rest joined with low; proper nonempty complement required
            sub = rest
            while True:
                part = low | sub
                other = blk ^ part
                if other:
                    blocks = p.blocks[:bi] + (part, other) + p.blocks[bi + 1 :]
                    j = index.get(tuple(sorted(blocks, key=_lowbit)))
                    if j is not None:
                        edges.append((i, j))
                if sub == 0:
                    break
                sub = (sub - 1) & rest
    edges.sort()
    return edges


def logical_entropy(p: Partition) -> Fraction:
    """Share of ordered pairs that are distinctions: ``|dit(p)| / n**2``."""
    n = p.universe.n
    return Fraction(dit_count(p), n * n)


@dataclass(frozen=True)
class NumericalAttribute:
    """Total function from universe elements to exact rationals."""

    universe: Universe
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != self.universe.n:
            raise DomainError("attribute must assign a value to every element")

    @classmethod
    def from_mapping(cls, universe: Universe, mapping: Mapping[str, object]) -> NumericalAttribute:
        missing = [lab for lab in universe.labels if lab not in mapping]
        if missing:
            raise DomainError(f"attribute has no value for {missing}")
        extra = set(mapping) - set(universe.labels)
        if extra:
            raise DomainError(f"attribute mentions unknown elements {sorted(extra)}")
        return cls(universe, tuple(Fraction(mapping[lab]) for lab in universe.labels))

    @classmethod
    def from_function(cls, universe: Universe, fn: Callable[[str], object]) -> NumericalAttribute:
        return cls(universe, tuple(Fraction(fn(lab)) for lab in universe.labels))

    @classmethod
    def characteristic(cls, s: SubsetVector) -> NumericalAttribute:
        """``chi_S``: 1 on ``S``, 0 elsewhere."""
        return cls(s.universe, tuple(Fraction(s.bits >> i & 1) for i in range(s.universe.n)))

    @classmethod
    def injective(cls, universe: Universe) -> NumericalAttribute:
        """Element ``i`` gets value ``i + 1``."""
        return cls(universe, tuple(Fraction(i + 1) for i in range(universe.n)))

    @classmethod
    def labeling(cls, p: Partition) -> NumericalAttribute:
        """Block ``k`` of ``p`` (canonical order) gets value ``k + 1``."""
        vals = [Fraction(0)] * p.universe.n
        for k, blk in enumerate(p.blocks):
            for i in SubsetVector(p.universe, blk):
                vals[i] = Fraction(k + 1)
        return cls(p.universe, tuple(vals))

    def __call__(self, label: str) -> Fraction:
        return self.values[self.universe.index(label)]

    def image(self) -> list[Fraction]:
        return sorted(set(self.values))

    def preimage(self, r) -> SubsetVector:
        r = Fraction(r)
        bits = 0
        for i, v in enumerate(self.values):
            if v == r:
                bits |= 1 << i
        return SubsetVector(self.universe, bits)


def inverse_image(f: NumericalAttribute) -> Partition:
    """The partition ``{f^-1(r)}`` of elements by equal value."""
    groups: dict[Fraction, int] = {}
    for i, v in enumerate(f.values):
        groups[v] = groups.get(v, 0) | (1 << i)
    return Partition(f.universe, tuple(groups.values()))


def luders_join(state: Partition, f: NumericalAttribute) -> Partition:
    """Support-level projective measurement: each block splits by ``f``-value."""
    _check_same(state.universe, f.universe)
    return join(inverse_image(f), state)
