"""Brackets, norms and Born-rule probabilities on support sets.

The overlap of two support sets is the size of their intersection. Brackets
depend on the basis: both sets must be written in the same one, which is what
a :class:`BraKetContext` pins down.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import DomainError, EmptyEventError
from .gf2space import Basis, SubsetVector, Universe
from .partitions import NumericalAttribute


@dataclass(frozen=True)
class BraKetContext:
    basis: Basis

    @classmethod
    def computational(cls, universe: Universe) -> BraKetContext:
        return cls(Basis.computational(universe))

    @property
    def universe(self) -> Universe:
        """Labels of the basis vectors; kets in this context are subsets of it."""
        return self.basis.labels

    def check(self, *vs: SubsetVector) -> None:
        for v in vs:
            if v.universe != self.universe:
                raise DomainError(f"ket {v} is not written in basis {self.universe}")


def braket(ctx: BraKetContext, s: SubsetVector, t: SubsetVector) -> int:
    """``<S|T> = |S & T|``."""
    ctx.check(s, t)
    return (s.bits & t.bits).bit_count()


def norm_squared(ctx: BraKetContext, s: SubsetVector) -> int:
    return braket(ctx, s, s)


def resolution_check(ctx: BraKetContext, s: SubsetVector, t: SubsetVector) -> bool:
    """Resolve ``<S|T>`` through the ket-bra sum over the basis singletons."""
    u = ctx.universe
    total = 0
    for i in range(u.n):
        e = u.singleton(i)
        total += braket(ctx, s, e) * braket(ctx, e, t)
    return total == braket(ctx, s, t)


def born(ctx: BraKetContext, s: SubsetVector, u_index: int | str) -> Fraction:
    """``Pr(u_i | S) = |{u_i} & S| / |S|``."""
    ctx.check(s)
    if not s:
        raise EmptyEventError("cannot measure the empty state")
    i = ctx.universe.index(u_index) if isinstance(u_index, str) else u_index
    return Fraction(braket(ctx, ctx.universe.singleton(i), s), norm_squared(ctx, s))


class Branch(NamedTuple):
    value: Fraction
    probability: Fraction
    state: SubsetVector


def measure_attribute(ctx: BraKetContext, s: SubsetVector, f: NumericalAttribute) -> list[Branch]:
    """Outcomes ``r`` in ``f(S)`` with ``Pr(r|S) = |f^-1(r) & S| / |S|``, reduced to ``f^-1(r) & S``.

    Branches come in increasing order of value.
    """
    ctx.check(s)
    if f.universe != ctx.universe:
        raise DomainError("attribute is not defined on the context basis")
    if not s:
        raise EmptyEventError("cannot measure the empty state")
    size = len(s)
    out = []
    for r in sorted({f.values[i] for i in s}):
        reduced = f.preimage(r) & s
        out.append(Branch(r, Fraction(len(reduced), size), reduced))
    return out


def transform(src: BraKetContext, dst: BraKetContext, s: SubsetVector) -> SubsetVector:
    """Push a ket through the non-singular map taking ``src`` basis vector i to ``dst`` basis vector i.

    The image is returned in ``dst`` coordinates. The map is built as a matrix
    on computational coordinates and applied there.
    """
    src.check(s)
    if src.basis.space != dst.basis.space:
        raise DomainError("contexts live on different spaces")
    m = dst.basis.matrix @ src.basis.matrix.inverse()
    image = m.apply(src.basis.to_space(s).bits)
    return dst.basis.from_space(SubsetVector(dst.basis.space, image))
