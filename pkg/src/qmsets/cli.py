"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 validation or domain error.
Artifacts go to stdout (or ``--out``), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .catalog import builtin_two_slit
from .dot import lattice_dot, partition_label, trajectory_dot
from .dsd import classify, failing_part
from .errors import EmptyEventError, QMSetsError, ValidationError
from .gf2space import Universe
from .partitions import covering_pairs, enumerate_partitions, logical_entropy
from .scenario import run_scenario
from .serialize import (
    classification_to_json,
    dsd_pair_from_json,
    dsd_to_json,
    fmt_rational,
    outcome_rows,
    scenario_from_json,
    tree_to_json,
)
from .superposition import (
    born_profile,
    density_from_relation,
    is_pure,
    rel_diagonal,
    rel_square,
)

EXIT_USAGE = 2
EXIT_INVALID = 3

LATTICE_MAX = {"json": 10, "csv": 10, "dot": 6}


class UsageError(Exception):
    pass


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_lattice(n: int, fmt: str) -> str:
    limit = LATTICE_MAX[fmt]
    if not 1 <= n <= limit:
        raise UsageError(f"lattice: n must be in 1..{limit} for --format {fmt}")
    u = Universe.standard(n)
    parts = enumerate_partitions(u)
    covers = covering_pairs(parts)
    if fmt == "dot":
        return lattice_dot(parts, covers, name=f"partitions of {u}")
    if fmt == "csv":
        return _csv(
            [(i, partition_label(p), len(p), fmt_rational(logical_entropy(p))) for i, p in enumerate(parts)],
            ["id", "partition", "blocks", "logical_entropy"],
        )
    return _json(
        {
            "n": n,
            "universe": list(u.labels),
            "count": len(parts),
            "partitions": [
                {
                    "id": i,
                    "blocks": [list(b.labels()) for b in p.block_vectors()],
                    "logical_entropy": fmt_rational(logical_entropy(p)),
                }
                for i, p in enumerate(parts)
            ],
            "covers": [list(e) for e in covers],
        }
    )


def _render_tree(tree, fmt: str) -> str:
    if fmt == "dot":
        return trajectory_dot(tree)
    if fmt == "csv":
        return _csv([(k, fmt_rational(p)) for k, p in outcome_rows(tree)], ["outcome", "probability"])
    return _json(tree_to_json(tree))


def cmd_twoslit(case: int, fmt: str) -> str:
    if case not in (1, 2):
        raise UsageError("twoslit: --case must be 1 or 2")
    return _render_tree(run_scenario(builtin_two_slit(case)), fmt)


def cmd_scenario(path: str, fmt: str) -> str:
    doc = _load_json(path)
    return _render_tree(run_scenario(scenario_from_json(doc)), fmt)


def cmd_density(universe_labels: str, support_labels: str, fmt: str) -> str:
    if fmt == "dot":
        raise UsageError("density: dot output is not available")
    u = Universe.of(universe_labels)
    support = [s.strip() for s in support_labels.split(",") if s.strip()]
    if not support:
        raise UsageError("density: support must name at least one element")
    s = u.subset(support)
    rd, rs = rel_diagonal(s), rel_square(s)
    pd, ps = density_from_relation(rd), density_from_relation(rs)
    profile = born_profile(s)
    matrices = {
        "rel_diagonal": [list(r) for r in rd.entries],
        "rel_square": [list(r) for r in rs.entries],
        "rho_diagonal": [[fmt_rational(x) for x in r] for r in pd.entries],
        "rho_square": [[fmt_rational(x) for x in r] for r in ps.entries],
    }
    pure = {"rho_diagonal": is_pure(pd), "rho_square": is_pure(ps)}
    born = {lab: fmt_rational(p) for lab, p in zip(u.labels, profile.squared_amplitudes)}
    if fmt == "csv":
        rows = []
        for name, m in matrices.items():
            for i, row in enumerate(m):
                for j, x in enumerate(row):
                    rows.append((name, u.labels[i], u.labels[j], x))
        rows += [("pure", name, "", str(v).lower()) for name, v in pure.items()]
        rows += [("born", lab, "", p) for lab, p in born.items()]
        return _csv(rows, ["quantity", "row", "col", "value"])
    return _json(
        {"universe": list(u.labels), "support": list(s.labels()), **matrices, "pure": pure, "born_profile": born}
    )


def cmd_dsd(spec_path: str, fmt: str) -> str:
    if fmt == "dot":
        raise UsageError("dsd: dot output is not available")
    d1, d2 = dsd_pair_from_json(_load_json(spec_path))
    for name, d in (("first", d1), ("second", d2)):
        k = failing_part(d)
        if k is not None:
            where = f"/{name}/parts/{k}" if k < len(d.parts) else f"/{name}"
            what = "is not independent of the earlier parts" if k < len(d.parts) else "parts do not span the space"
            raise ValidationError(f"{where}: invalid DSD, {what}", where)
    c = classify(d1, d2)
    out = classification_to_json(c)
    if fmt == "csv":
        rows = [("kind", out["kind"]), ("se_dim", out["se_dim"]), ("se_basis", " ".join(out["se_basis"]))]
        rows += [(f"proto_join_{k}", " ".join(p)) for k, p in enumerate(out["proto_join"])]
        return _csv(rows, ["field", "value"])
    out["first"] = dsd_to_json(d1)
    out["second"] = dsd_to_json(d2)
    return _json(out)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "dot"], default="json")
    common.add_argument("--out", metavar="PATH", help="write the artifact here instead of stdout")

    parser = argparse.ArgumentParser(prog="qmsets", description="Exact support-set quantum toy model.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice", parents=[common], help="partition lattice and its Hasse diagram")
    p.add_argument("-n", type=int, required=True, help="universe size")

    p = sub.add_parser("twoslit", parents=[common], help="built-in two-slit experiment")
    p.add_argument("--case", type=int, required=True, help="1: detectors at the slits, 2: none")

    p = sub.add_parser("density", parents=[common], help="relation and density matrices of an event")
    p.add_argument("--universe", required=True, help="comma-separated labels, e.g. a,b,c")
    p.add_argument("--support", required=True, help="comma-separated subset, e.g. a,c")

    p = sub.add_parser("dsd", parents=[common], help="classify a pair of direct sum decompositions")
    p.add_argument("spec", help="JSON file with two DSDs")

    p = sub.add_parser("scenario", parents=[common], help="run a scenario file")
    p.add_argument("path", help="scenario JSON file")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "lattice":
            text = cmd_lattice(args.n, args.format)
        elif args.command == "twoslit":
            text = cmd_twoslit(args.case, args.format)
        elif args.command == "density":
            text = cmd_density(args.universe, args.support, args.format)
        elif args.command == "dsd":
            text = cmd_dsd(args.spec, args.format)
        else:
            text = cmd_scenario(args.path, args.format)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qmsets: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EmptyEventError as exc:
        if args.command == "density":
            print(f"qmsets: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        print(f"qmsets: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except QMSetsError as exc:
        print(f"qmsets: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_INVALID

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
