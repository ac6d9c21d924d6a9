"""Worked objects on ``U = {a, b, c}``: the primed bases and the two-slit setup."""

from __future__ import annotations

from .errors import DomainError
from .gf2space import Basis, Gf2Matrix, Universe
from .partitions import NumericalAttribute
from .scenario import Evolve, Reduce, Scenario

ABC = Universe(("a", "b", "c"))
PRIMED = Universe(("a'", "b'", "c'"))
DOUBLE_PRIMED = Universe(('a"', 'b"', 'c"'))


def primed_basis() -> Basis:
    """``a' = {a,b}``, ``b' = {a,b,c}``, ``c' = {b,c}``."""
    return Basis(PRIMED, ABC, Gf2Matrix.from_columns([0b011, 0b111, 0b110], 3))


def double_primed_basis() -> Basis:
    """``a" = {a}``, ``b" = {a,b}``, ``c" = {a,c}``."""
    return Basis(DOUBLE_PRIMED, ABC, Gf2Matrix.from_columns([0b001, 0b011, 0b101], 3))


def two_slit_dynamics() -> Gf2Matrix:
    """One time step turns the U-basis into the U'-basis."""
    return primed_basis().matrix


def builtin_two_slit(case: int) -> Scenario:
    """Emitter at ``b``, slits at ``a`` and ``c``.

    Case 1 places detectors at the slits; case 2 does not. Particles that hit
    the screen at ``b`` are absorbed there.
    """
    if case not in (1, 2):
        raise DomainError(f"two-slit case must be 1 or 2, got {case!r}")
    dyn = two_slit_dynamics()
    position = NumericalAttribute.injective(ABC)
    steps = [
        Evolve(dyn, "emitter-to-screen"),
        Reduce(NumericalAttribute.characteristic(ABC.subset("b")), "screen", terminal={1}),
    ]
    if case == 1:
        steps.append(Reduce(position, "slits"))
    steps += [Evolve(dyn, "screen-to-wall"), Reduce(position, "wall")]
    return Scenario(ABC, ABC.subset("b"), tuple(steps), name=f"two-slit case {case}")
