"""Graphviz DOT text for the refinement lattice and for scenario trajectories.

Trajectory edges follow one convention throughout: solid for reductions
(upward in the lattice), dotted for evolutions.
"""

from __future__ import annotations

from typing import Sequence

from .partitions import Partition
from .scenario import EdgeKind, OutcomeTree


def _quote(s: str) -> str:
    # backslash escapes such as \n are left for graphviz to interpret
    return '"' + s.replace('"', '\\"') + '"'


def partition_label(p: Partition) -> str:
    return "{" + ", ".join("{" + ",".join(v.labels()) + "}" for v in p.block_vectors()) + "}"


def lattice_dot(parts: Sequence[Partition], covers: Sequence[tuple[int, int]], name: str = "partitions") -> str:
    """Hasse diagram, coarsest partition at the bottom."""
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=box, fontname=Helvetica];", "  edge [arrowhead=none];"]
    by_rank: dict[int, list[int]] = {}
    for i, p in enumerate(parts):
        lines.append(f"  p{i} [label={_quote(partition_label(p))}];")
        by_rank.setdefault(len(p), []).append(i)
    for rank in sorted(by_rank):
        lines.append("  { rank=same; " + " ".join(f"p{i};" for i in by_rank[rank]) + " }")
    for i, j in covers:
        lines.append(f"  p{i} -> p{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def trajectory_dot(tree: OutcomeTree) -> str:
    """The outcome tree, one node per support state along each path."""
    sc = tree.scenario
    lines = [
        f"digraph {_quote(sc.name)} {{",
        "  rankdir=LR;",
        "  node [shape=ellipse, fontname=Helvetica];",
    ]
    for nd in tree.nodes:
        text = f"{nd.state}\\n{nd.probability}"
        attrs = [f"label={_quote(text)}"]
        if nd.absorbed:
            attrs.append("shape=box")
        lines.append(f"  n{nd.id} [{', '.join(attrs)}];")
    for nd in tree.nodes:
        if nd.parent is None:
            continue
        style = "solid" if nd.edge is EdgeKind.REDUCE else "dotted"
        label = nd.step_label if nd.edge is EdgeKind.EVOLVE else f"{nd.step_label} {nd.branch_probability}"
        lines.append(f"  n{nd.parent} -> n{nd.id} [style={style}, label={_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
