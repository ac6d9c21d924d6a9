"""Scenario engine: chains of non-singular evolutions and state reductions.

A scenario starts from one support state and applies its steps in order.
``Evolve`` maps every live state through a non-singular Z2 matrix with
probability 1. ``Reduce`` measures every live state by a numerical attribute
and branches on the outcomes. Branches whose value is listed as terminal stop
there (the particle is absorbed) and do not see later steps.

Probabilities multiply along each root-to-leaf path; leaves ending in the same
state are added.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .brakets import BraKetContext, measure_attribute
from .errors import DomainError, EmptyEventError, InvalidDynamicsError
from .gf2space import Gf2Matrix, SubsetVector, Universe, is_nonsingular
from .partitions import NumericalAttribute


@dataclass(frozen=True)
class Evolve:
    matrix: Gf2Matrix
    label: str = "evolve"

    def __post_init__(self):
        if not self.matrix.is_square or not is_nonsingular(self.matrix):
            raise InvalidDynamicsError(f"step {self.label!r}: evolution matrix is singular")


@dataclass(frozen=True)
class Reduce:
    attribute: NumericalAttribute
    label: str = "reduce"
    terminal: frozenset[Fraction] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "terminal", frozenset(Fraction(v) for v in self.terminal))


Step = Union[Evolve, Reduce]


@dataclass(frozen=True)
class Scenario:
    universe: Universe
    initial: SubsetVector
    steps: tuple[Step, ...] = ()
    name: str = "scenario"

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        if self.initial.universe != self.universe:
            raise DomainError("initial state is not a subset of the scenario universe")
        if not self.initial:
            raise EmptyEventError("initial state is empty")
        for st in self.steps:
            if isinstance(st, Evolve):
                if st.matrix.rows != self.universe.n:
                    raise DomainError(f"step {st.label!r}: matrix size does not match universe")
            elif isinstance(st, Reduce):
                if st.attribute.universe != self.universe:
                    raise DomainError(f"step {st.label!r}: attribute is on another universe")
            else:
                raise DomainError(f"unknown step {st!r}")

    @property
    def final_label(self) -> str:
        return self.steps[-1].label if self.steps else "initial"


class EdgeKind(str, enum.Enum):
    EVOLVE = "evolve"
    REDUCE = "reduce"


class ArrowKind(str, enum.Enum):
    UPWARD_REDUCTION = "upward-reduction"
    NONUPWARD_EVOLUTION = "nonupward-evolution"


@dataclass(frozen=True)
class Node:
    id: int
    parent: int | None
    depth: int  # number of steps applied
    state: SubsetVector
    probability: Fraction  # product of branch probabilities from the root
    edge: EdgeKind | None = None
    step_label: str = ""
    branch_probability: Fraction = Fraction(1)
    value: Fraction | None = None
    absorbed: bool = False


@dataclass(frozen=True)
class OutcomeTree:
    scenario: Scenario
    nodes: tuple[Node, ...]

    def children(self, node_id: int) -> list[Node]:
        return [nd for nd in self.nodes if nd.parent == node_id]

    def leaves(self) -> list[Node]:
        parents = {nd.parent for nd in self.nodes}
        return [nd for nd in self.nodes if nd.id not in parents]

    def path(self, node_id: int) -> list[Node]:
        out = []
        cur: int | None = node_id
        while cur is not None:
            nd = self.nodes[cur]
            out.append(nd)
            cur = nd.parent
        return out[::-1]

    def final_distribution(self) -> dict[SubsetVector, Fraction]:
        """Probability of ending in each state among leaves that survived every step.

        All singletons appear (possibly with 0), in element order, then any
        larger final states in order of first appearance.
        """
        u = self.scenario.universe
        out = {u.singleton(i): Fraction(0) for i in range(u.n)}
        for leaf in self.leaves():
            if not leaf.absorbed:
                out[leaf.state] = out.get(leaf.state, Fraction(0)) + leaf.probability
        return out

    def absorbed_distribution(self) -> dict[tuple[str, SubsetVector], Fraction]:
        """Probability absorbed at each (step label, state)."""
        out: dict[tuple[str, SubsetVector], Fraction] = {}
        for leaf in self.leaves():
            if leaf.absorbed:
                key = (leaf.step_label, leaf.state)
                out[key] = out.get(key, Fraction(0)) + leaf.probability
        return out

    def conditional_final_distribution(self) -> dict[SubsetVector, Fraction]:
        """``final_distribution`` renormalized to the mass that reached the end."""
        final = self.final_distribution()
        total = sum(final.values(), Fraction(0))
        if total == 0:
            return {k: Fraction(0) for k in final}
        return {k: v / total for k, v in final.items()}


def evolve(s: SubsetVector, matrix: Gf2Matrix) -> SubsetVector:
    """Image of ``s`` under a non-singular map (columns are images of the singletons)."""
    if not matrix.is_square or matrix.rows != s.universe.n:
        raise InvalidDynamicsError("evolution matrix has the wrong shape")
    if not is_nonsingular(matrix):
        raise InvalidDynamicsError("evolution matrix is singular")
    return SubsetVector(s.universe, matrix.apply(s.bits))


def run_scenario(sc: Scenario) -> OutcomeTree:
    ctx = BraKetContext.computational(sc.universe)
    nodes: list[Node] = [Node(0, None, 0, sc.initial, Fraction(1))]

    def expand(node: Node) -> None:
        if node.absorbed or node.depth == len(sc.steps):
            return
        step = sc.steps[node.depth]
        if isinstance(step, Evolve):
            kids = [(evolve(node.state, step.matrix), Fraction(1), None, False)]
            kind = EdgeKind.EVOLVE
        else:
            kids = [
                (b.state, b.probability, b.value, b.value in step.terminal)
                for b in measure_attribute(ctx, node.state, step.attribute)
            ]
            kind = EdgeKind.REDUCE
        for state, p, value, absorbed in kids:
            child = Node(
                len(nodes), node.id, node.depth + 1, state, node.probability * p,
                kind, step.label, p, value, absorbed,
            )
            nodes.append(child)
            expand(child)

    expand(nodes[0])
    return OutcomeTree(sc, tuple(nodes))


@dataclass(frozen=True)
class Move:
    arrow: ArrowKind
    state: SubsetVector
    label: str
    probability: Fraction  # branch probability of this move


@dataclass(frozen=True)
class LatticeTrajectory:
    start: SubsetVector
    moves: tuple[Move, ...]
    leaf: int  # node id of the path end

    def states(self) -> list[SubsetVector]:
        return [self.start] + [m.state for m in self.moves]

    def arrows(self) -> list[ArrowKind]:
        return [m.arrow for m in self.moves]

    @property
    def probability(self) -> Fraction:
        p = Fraction(1)
        for m in self.moves:
            p *= m.probability
        return p


def lattice_trajectory(tree: OutcomeTree) -> list[LatticeTrajectory]:
    """One trajectory per root-to-leaf path.

    Reductions only ever shrink support, so they point upward in the partition
    lattice; evolutions carry no such guarantee.
    """
    out = []
    for leaf in tree.leaves():
        path = tree.path(leaf.id)
        moves = []
        for prev, nd in zip(path, path[1:]):
            if nd.edge is EdgeKind.REDUCE:
                if not nd.state <= prev.state or not nd.state:
                    raise AssertionError(f"reduction {prev.state} -> {nd.state} enlarged the support")
                arrow = ArrowKind.UPWARD_REDUCTION
            else:
                arrow = ArrowKind.NONUPWARD_EVOLUTION
            moves.append(Move(arrow, nd.state, nd.step_label, nd.branch_probability))
        out.append(LatticeTrajectory(path[0].state, tuple(moves), leaf.id))
    return out
