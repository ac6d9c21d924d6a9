"""Direct sum decompositions (DSDs) of Z2^n and how pairs of them relate.

A DSD is the vector-space version of a partition: nonzero subspaces such that
every vector is uniquely a sum of one vector from each. Two DSDs are compared
through their *proto-join* (the nonzero pairwise intersections of their parts)
and the subspace that proto-join spans:

* spans everything: commuting (the proto-join is then itself a DSD, the join);
* spans only zero: conjugate;
* anything in between: non-commuting.

Eigenvalue labels play no role here; a DSD only remembers the subspaces.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import kernels
from .errors import DomainError, NotABasisError
from .gf2space import Basis, Gf2Matrix, Subspace, Universe, intersect, span, sum_of
from .partitions import NumericalAttribute, Partition


@dataclass(frozen=True)
class Dsd:
    """Parts are *not* checked for independence here; see :func:`validate_dsd`."""

    universe: Universe
    parts: tuple[Subspace, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        for k, p in enumerate(self.parts):
            if p.universe != self.universe:
                raise DomainError(f"part {k} lives on another space")
            if p.dim == 0:
                raise DomainError(f"part {k} is the zero subspace")

    @property
    def space_dim(self) -> int:
        return self.universe.n

    @classmethod
    def from_partition(cls, p: Partition) -> Dsd:
        """Spans of the blocks, taking the universe itself as basis."""
        return cls(p.universe, tuple(span(_singletons(b)) for b in p.block_vectors()))

    def __len__(self):
        return len(self.parts)


def _singletons(v):
    return [v.universe.singleton(i) for i in v]


def dsd_from_attribute(f: NumericalAttribute, basis: Basis) -> Dsd:
    """One part per value ``r`` of ``f``: the span of basis vectors with ``f = r``.

    ``f`` is defined on the basis labels; parts are returned in computational
    coordinates, ordered by value.
    """
    if f.universe != basis.labels:
        raise DomainError("attribute must be defined on the basis labels")
    parts = []
    for r in f.image():
        vecs = [basis.to_space(basis.labels.singleton(i)) for i in f.preimage(r)]
        parts.append(span(vecs))
    return Dsd(basis.space, tuple(parts))


def maximal_dsd(basis: Basis) -> Dsd:
    """One ray per basis vector."""
    return dsd_from_attribute(NumericalAttribute.injective(basis.labels), basis)


def validate_dsd(d: Dsd) -> bool:
    """Dimensions add up to ``n`` and the stacked bases have full rank."""
    return failing_part(d) is None


def failing_part(d: Dsd) -> int | None:
    """Index of the first part that breaks independence, ``len(parts)`` if the
    parts are independent but do not fill the space, ``None`` if ``d`` is valid."""
    n = d.universe.n
    rows: list[int] = []
    for k, p in enumerate(d.parts):
        rows.extend(p.basis)
        if kernels.rank(rows, n) != len(rows):
            return k
    if len(rows) != n:
        return len(d.parts)
    return None


def _check_dims(d1: Dsd, d2: Dsd) -> None:
    if d1.universe != d2.universe:
        raise DomainError(f"DSDs act on different spaces ({d1.universe.n} vs {d2.universe.n})")


def proto_join(d1: Dsd, d2: Dsd) -> list[Subspace]:
    """Distinct nonzero intersections ``V_j & W_k``, in ``(j, k)`` order."""
    _check_dims(d1, d2)
    out: list[Subspace] = []
    for v in d1.parts:
        for w in d2.parts:
            x = intersect(v, w)
            if x.dim and x not in out:
                out.append(x)
    return out


def se_span(d1: Dsd, d2: Dsd) -> Subspace:
    """The subspace spanned by the proto-join."""
    return sum_of(proto_join(d1, d2), d1.universe)


class DsdKind(str, enum.Enum):
    COMMUTING = "commuting"
    NON_COMMUTING = "non-commuting"
    CONJUGATE = "conjugate"


@dataclass(frozen=True)
class DsdClassification:
    kind: DsdKind
    se: Subspace
    proto_join: tuple[Subspace, ...]

    @property
    def join(self) -> Dsd | None:
        """The proto-join as a DSD, when the pair commutes."""
        if self.kind is not DsdKind.COMMUTING:
            return None
        return Dsd(self.se.universe, self.proto_join)


def classify(d1: Dsd, d2: Dsd) -> DsdClassification:
    parts = proto_join(d1, d2)
    se = sum_of(parts, d1.universe)
    if se.dim == d1.space_dim:
        kind = DsdKind.COMMUTING
    elif se.dim == 0:
        kind = DsdKind.CONJUGATE
    else:
        kind = DsdKind.NON_COMMUTING
    result = DsdClassification(kind, se, tuple(parts))
    if kind is DsdKind.COMMUTING and not validate_dsd(result.join):
        raise AssertionError("commuting proto-join is not a direct sum decomposition")
    return result


def circumflex_basis(u: Universe) -> Gf2Matrix:
    """Column ``i`` is ``U - {u_i}``. A basis only when ``n`` is even."""
    if u.n % 2:
        raise NotABasisError(f"complements of singletons do not form a basis for odd n={u.n}")
    full = u.full_mask
    return Gf2Matrix.from_columns([full ^ (1 << i) for i in range(u.n)], u.n)


def circumflex(u: Universe) -> Basis:
    """The circumflex basis with labels ``a^``, ``b^``, ..."""
    return Basis(Universe(tuple(lab + "^" for lab in u.labels)), u, circumflex_basis(u))
