"""JSON/CSV encodings for scenarios, DSD specs, matrices and outcome tables.

Rationals are written as lowest-terms ``"p/q"`` strings, integers plainly
(``"0"``, ``"1"``, ``"-2"``). Bit vectors are strings of ``0``/``1`` with the
first character for the first universe element.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any

import jsonschema

from .dsd import Dsd, DsdClassification, circumflex, dsd_from_attribute
from .errors import DomainError, QMSetsError, ValidationError
from .gf2space import Basis, Gf2Matrix, Subspace, SubsetVector, Universe, bits_from_string, bits_to_string
from .partitions import NumericalAttribute
from .scenario import Evolve, OutcomeTree, Reduce, Scenario, lattice_trajectory

RATIONAL_PATTERN = r"^-?[0-9]+(/[0-9]*[1-9][0-9]*)?$"
_RATIONAL = {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": RATIONAL_PATTERN}]}
_LABELS = {"type": "array", "items": {"type": "string", "minLength": 1}, "minItems": 1, "maxItems": 16, "uniqueItems": True}
_ATTRIBUTE = {"type": "object", "additionalProperties": _RATIONAL, "minProperties": 1}
_BITS = {"type": "string", "pattern": "^[01]+$"}

SCENARIO_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["universe", "initial", "steps"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string"},
        "universe": _LABELS,
        "initial": {"type": "array", "items": {"type": "string"}, "minItems": 1, "uniqueItems": True},
        "steps": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind"],
                "properties": {"kind": {"enum": ["evolve", "reduce"]}},
                "oneOf": [
                    {
                        "properties": {
                            "kind": {"const": "evolve"},
                            "label": {"type": "string"},
                            "matrix": {
                                "type": "array",
                                "minItems": 1,
                                "items": {"type": "array", "items": {"enum": [0, 1]}},
                            },
                        },
                        "required": ["kind", "matrix"],
                        "additionalProperties": False,
                    },
                    {
                        "properties": {
                            "kind": {"const": "reduce"},
                            "label": {"type": "string"},
                            "attribute": _ATTRIBUTE,
                            "terminal": {"type": "array", "items": _RATIONAL},
                        },
                        "required": ["kind", "attribute"],
                        "additionalProperties": False,
                    },
                ],
            },
        },
    },
}

_BASIS = {
    "oneOf": [
        {"enum": ["computational", "circumflex"]},
        {
            "type": "object",
            "required": ["labels", "columns"],
            "additionalProperties": False,
            "properties": {"labels": _LABELS, "columns": {"type": "array", "items": _BITS}},
        },
    ]
}
_DSD_SPEC = {
    "oneOf": [
        {
            "type": "object",
            "required": ["parts"],
            "additionalProperties": False,
            "properties": {
                "parts": {"type": "array", "minItems": 1, "items": {"type": "array", "minItems": 1, "items": _BITS}}
            },
        },
        {
            "type": "object",
            "required": ["attribute", "basis"],
            "additionalProperties": False,
            "properties": {"attribute": _ATTRIBUTE, "basis": _BASIS},
        },
    ]
}
DSD_PAIR_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["universe", "first", "second"],
    "additionalProperties": False,
    "properties": {"name": {"type": "string"}, "universe": _LABELS, "first": _DSD_SPEC, "second": _DSD_SPEC},
}


def fmt_rational(x) -> str:
    return str(Fraction(x))


def parse_rational(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise DomainError(f"not a rational: {x!r}")
    if isinstance(x, str) and not re.match(RATIONAL_PATTERN, x):
        raise DomainError(f"not a rational: {x!r}")
    return Fraction(x)


def state_key(s: SubsetVector) -> str:
    """Singletons by bare label, anything else as ``{a,c}``."""
    return s.labels()[0] if len(s) == 1 else str(s)


def _pointer(path) -> str:
    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in path)


def _validate(doc, schema) -> None:
    validator = jsonschema.Draft202012Validator(schema)
    err = jsonschema.exceptions.best_match(validator.iter_errors(doc))
    if err is not None:
        ptr = _pointer(err.absolute_path)
        raise ValidationError(f"{ptr or '/'}: {err.message}", ptr)


def _at(ptr: str, fn, *args):
    """Run ``fn`` and tag domain failures (other than dynamics/basis ones) with ``ptr``."""
    try:
        return fn(*args)
    except ValidationError:
        raise
    except QMSetsError as exc:
        if exc.code in ("domain-error",):
            raise ValidationError(f"{ptr}: {exc}", ptr) from exc
        raise


# -- scenarios ---------------------------------------------------------------


def scenario_from_json(doc: dict) -> Scenario:
    _validate(doc, SCENARIO_SCHEMA)
    u = _at("/universe", Universe, tuple(doc["universe"]))
    initial = _at("/initial", u.subset, doc["initial"])
    steps = []
    for i, st in enumerate(doc["steps"]):
        ptr = f"/steps/{i}"
        label = st.get("label", f"step{i}")
        if st["kind"] == "evolve":
            rows = st["matrix"]
            if len(rows) != u.n or any(len(r) != u.n for r in rows):
                raise ValidationError(f"{ptr}/matrix: expected a {u.n}x{u.n} matrix", f"{ptr}/matrix")
            steps.append(Evolve(Gf2Matrix.from_rows(rows), label))
        else:
            attr = _at(
                f"{ptr}/attribute",
                NumericalAttribute.from_mapping,
                u,
                {k: parse_rational(v) for k, v in st["attribute"].items()},
            )
            terminal = frozenset(parse_rational(v) for v in st.get("terminal", []))
            steps.append(Reduce(attr, label, terminal))
    return Scenario(u, initial, tuple(steps), doc.get("name", "scenario"))


def scenario_to_json(sc: Scenario) -> dict:
    steps = []
    for st in sc.steps:
        if isinstance(st, Evolve):
            steps.append({"kind": "evolve", "label": st.label, "matrix": st.matrix.to_rows()})
        else:
            d = {
                "kind": "reduce",
                "label": st.label,
                "attribute": {lab: fmt_rational(v) for lab, v in zip(sc.universe.labels, st.attribute.values)},
            }
            if st.terminal:
                d["terminal"] = [fmt_rational(v) for v in sorted(st.terminal)]
            steps.append(d)
    return {
        "name": sc.name,
        "universe": list(sc.universe.labels),
        "initial": list(sc.initial.labels()),
        "steps": steps,
    }


def outcome_rows(tree: OutcomeTree) -> list[tuple[str, Fraction]]:
    """Flat ``(outcome, probability)`` table.

    Final states by key, then absorbed outcomes as ``label:state``, then the
    final distribution conditioned on reaching the end as ``state|label``.
    """
    final_label = tree.scenario.final_label
    rows = [(state_key(s), p) for s, p in tree.final_distribution().items()]
    rows += [(f"{lab}:{state_key(s)}", p) for (lab, s), p in tree.absorbed_distribution().items()]
    rows += [(f"{state_key(s)}|{final_label}", p) for s, p in tree.conditional_final_distribution().items()]
    return rows


def tree_to_json(tree: OutcomeTree) -> dict:
    final = tree.final_distribution()
    absorbed = tree.absorbed_distribution()
    total = sum(final.values(), Fraction(0)) + sum(absorbed.values(), Fraction(0))
    return {
        "scenario": tree.scenario.name,
        "final_stage": tree.scenario.final_label,
        "absolute": {state_key(s): fmt_rational(p) for s, p in final.items()},
        "conditional": {state_key(s): fmt_rational(p) for s, p in tree.conditional_final_distribution().items()},
        "absorbed": {f"{lab}:{state_key(s)}": fmt_rational(p) for (lab, s), p in absorbed.items()},
        "total": fmt_rational(total),
        "paths": [
            {
                "states": [str(s) for s in tr.states()],
                "arrows": [a.value for a in tr.arrows()],
                "steps": [m.label for m in tr.moves],
                "probability": fmt_rational(tr.probability),
            }
            for tr in lattice_trajectory(tree)
        ],
        "nodes": [
            {
                "id": nd.id,
                "parent": nd.parent,
                "state": str(nd.state),
                "probability": fmt_rational(nd.probability),
                "edge": nd.edge.value if nd.edge else None,
                "step": nd.step_label or None,
                "value": fmt_rational(nd.value) if nd.value is not None else None,
                "absorbed": nd.absorbed,
            }
            for nd in tree.nodes
        ],
    }


# -- DSDs --------------------------------------------------------------------


def subspace_to_json(s: Subspace) -> list[str]:
    return [bits_to_string(b, s.universe.n) for b in s.basis]


def dsd_to_json(d: Dsd) -> list[list[str]]:
    return [subspace_to_json(p) for p in d.parts]


def classification_to_json(c: DsdClassification) -> dict:
    return {
        "kind": c.kind.value,
        "se_dim": c.se.dim,
        "se_basis": subspace_to_json(c.se),
        "proto_join": [subspace_to_json(p) for p in c.proto_join],
    }


def _basis_from_json(u: Universe, spec, ptr: str) -> Basis:
    if spec == "computational":
        return Basis.computational(u)
    if spec == "circumflex":
        return circumflex(u)
    labels = _at(f"{ptr}/labels", Universe, tuple(spec["labels"]))
    cols = []
    for k, s in enumerate(spec["columns"]):
        if len(s) != u.n:
            raise ValidationError(f"{ptr}/columns/{k}: expected {u.n} bits", f"{ptr}/columns/{k}")
        cols.append(bits_from_string(s))
    if len(cols) != u.n or labels.n != u.n:
        raise ValidationError(f"{ptr}: basis needs exactly {u.n} labels and columns", ptr)
    return Basis(labels, u, Gf2Matrix.from_columns(cols, u.n))


def dsd_from_json(u: Universe, spec: dict, ptr: str) -> Dsd:
    if "parts" in spec:
        parts = []
        for k, part in enumerate(spec["parts"]):
            rows = []
            for m, s in enumerate(part):
                if len(s) != u.n:
                    raise ValidationError(f"{ptr}/parts/{k}/{m}: expected {u.n} bits", f"{ptr}/parts/{k}/{m}")
                rows.append(bits_from_string(s))
            sub = Subspace(u, tuple(rows))
            if sub.dim == 0:
                raise ValidationError(f"{ptr}/parts/{k}: part is the zero subspace", f"{ptr}/parts/{k}")
            parts.append(sub)
        return Dsd(u, tuple(parts))
    basis = _basis_from_json(u, spec["basis"], f"{ptr}/basis")
    attr = _at(
        f"{ptr}/attribute",
        NumericalAttribute.from_mapping,
        basis.labels,
        {k: parse_rational(v) for k, v in spec["attribute"].items()},
    )
    return dsd_from_attribute(attr, basis)


def dsd_pair_from_json(doc: dict) -> tuple[Dsd, Dsd]:
    _validate(doc, DSD_PAIR_SCHEMA)
    u = _at("/universe", Universe, tuple(doc["universe"]))
    return dsd_from_json(u, doc["first"], "/first"), dsd_from_json(u, doc["second"], "/second")
