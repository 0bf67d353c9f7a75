"""Command-line front end.

Machine-readable JSON on stdout by default, indented with --pretty.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import oracle, realizability
from .catalog import catalog_group, catalog_names, group_from_json
from .covers import (cover_from_json, cover_to_json, dual_graph_dot,
                     glue_same_component, glue_two_components,
                     sheet_graph_dot)
from .curves import (CurveConfiguration, PointRef, affine_delta, delta,
                     rank_report, validate)
from .errors import DomainError
from .groups import eulerian, min_generators
from .perms import Perm


def _emit(payload, pretty):
    if pretty:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(json.dumps(payload, sort_keys=True))


def _load_json(path):
    try:
        with open(path) as handle:
            return json.load(handle)
    except OSError as exc:
        raise DomainError("BAD_CONFIG_FILE", str(exc))
    except json.JSONDecodeError as exc:
        raise DomainError("BAD_CONFIG_FILE", f"{path}: {exc}")


def _resolve_group(spec):
    """A --group argument is a catalog name or a path to a group JSON file."""
    if Path(spec).is_file():
        return group_from_json(_load_json(spec))
    return catalog_group(spec)


def cmd_validate(args):
    config = CurveConfiguration.from_json(_load_json(args.config))
    violations = validate(config)
    payload = {"valid": not violations,
               "violations": [{"code": code, "detail": detail}
                              for code, detail in violations]}
    _emit(payload, args.pretty)
    return 0 if not violations else 1


def cmd_invariants(args):
    config = CurveConfiguration.from_json(_load_json(args.config))
    _emit(rank_report(config).to_json(), args.pretty)
    return 0


def cmd_realizable(args):
    config = CurveConfiguration.from_json(_load_json(args.config))
    group = _resolve_group(args.group)
    p = args.char if args.char is not None else config.characteristic
    if args.mode == "projective":
        verdict = realizability.projective_realizable(group, p, config)
    else:
        if len(config.components) != 1:
            raise DomainError("NOT_AFFINE",
                              f"--mode {args.mode} needs a single component")
        g = config.components[0].genus
        r = len(config.removed_points)
        d = affine_delta(config)
        if args.mode == "affine":
            verdict = realizability.affine_realizable(group, p, g, r, d)
        else:
            verdict = realizability.tame_realizable(group, p, g, r, d)
    payload = verdict.to_json()
    payload["randomized"] = False  # every d(G) here is confirmed exhaustively
    _emit(payload, args.pretty)
    return 0


def cmd_enumerate(args):
    config = CurveConfiguration.from_json(_load_json(args.config))
    if args.group is not None:
        group = _resolve_group(args.group)
        count, witnesses = oracle.enumerate_connected_covers(group, config)
        payload = {"group": args.group, "delta": delta(config),
                   "count": count, "eulerian": eulerian(group, delta(config)),
                   "witnesses": [[c.to_one_indexed() for c in w]
                                 for w in witnesses]}
        _emit(payload, args.pretty)
        return 0
    entries = oracle.quotient_census(config, args.max_order)
    if args.text:
        sys.stdout.write(oracle.census_report(entries))
    else:
        _emit([e.to_json() for e in entries], args.pretty)
    return 0


def cmd_export_dot(args):
    data = _load_json(args.file)
    if "group" in data:
        cover = cover_from_json(data)
        sys.stdout.write(sheet_graph_dot(cover))
    else:
        config = CurveConfiguration.from_json(data)
        sys.stdout.write(dual_graph_dot(config))
    return 0


def _point(data):
    return PointRef.from_json(data)


def cmd_glue(args):
    """Run a gluing script: named covers plus a list of gluing steps."""
    script = _load_json(args.script)
    try:
        covers = {name: cover_from_json(data)
                  for name, data in script.get("covers", {}).items()}
        steps = script["steps"]
        output = script.get("output")
    except (KeyError, TypeError, AttributeError) as exc:
        raise DomainError("BAD_COVER_FILE", f"malformed script: {exc!r}")
    for step in steps:
        try:
            op = step["op"]
            result = step["result"]
            if op == "same_component":
                ambient = _resolve_group(step["ambient"])
                cover = covers[step["cover"]]
                gamma = Perm.from_one_indexed(step["gamma"])
                covers[result] = glue_same_component(
                    ambient, cover.group, gamma, cover,
                    _point(step["y1"]), _point(step["y2"]))
            elif op == "two_components":
                group = _resolve_group(step["group"])
                c1, c2 = covers[step["cover1"]], covers[step["cover2"]]
                covers[result] = glue_two_components(
                    group, c1.group, c2.group, c1, c2,
                    _point(step["y1"]), _point(step["y2"]))
            else:
                raise DomainError("BAD_COVER_FILE", f"unknown op {op!r}")
        except KeyError as exc:
            raise DomainError("BAD_COVER_FILE", f"malformed step: {exc!r}")
    if output is None:
        output = steps[-1]["result"] if steps else None
    if output not in covers:
        raise DomainError("BAD_COVER_FILE", f"no cover named {output!r}")
    _emit(cover_to_json(covers[output]), args.pretty)
    return 0


def cmd_selftest(args):
    """Deterministic oracle suites; output depends only on --seed."""
    lines = []
    nodal = oracle.nodal_curve(5)
    theta = oracle.two_node_curve(5)
    for name in catalog_names():
        group = catalog_group(name)
        if group.order() > args.max_order:
            continue
        for config, d in ((nodal, 1), (theta, 2)):
            count, _ = oracle.enumerate_connected_covers(group, config)
            expected = eulerian(group, d)
            status = "ok" if count == expected else "MISMATCH"
            lines.append(f"covers {name} delta={d} count={count} "
                         f"eulerian={expected} {status}")
        d_g = min_generators(group, seed=args.seed)
        lines.append(f"dmin {name} d={d_g}")
    for name in ("C2", "C3", "S3"):
        report = oracle.cross_check_descent(catalog_group(name), nodal)
        status = "ok" if report.ok and report.negative_controls_rejected \
            else "MISMATCH"
        lines.append(f"descent {name} checked={report.checked} "
                     f"mismatches={len(report.mismatches)} {status}")
    failures = sum("MISMATCH" in line for line in lines)
    lines.append(f"selftest seed={args.seed} failures={failures}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if failures == 0 else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pi1curves",
        description="Fundamental-group invariants and Galois covers of "
                    "seminormal curves in positive characteristic")
    parser.add_argument("--pretty", action="store_true",
                        help="indent JSON output")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized search budgets")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker count (results are independent of it)")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a configuration file")
    s.add_argument("config")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("invariants", help="delta and rank report")
    s.add_argument("config")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("realizable", help="realizability verdict")
    s.add_argument("config")
    s.add_argument("--group", required=True)
    s.add_argument("--char", type=int)
    s.add_argument("--mode", choices=["affine", "projective", "tame"],
                   default="projective")
    s.set_defaults(func=cmd_realizable)

    s = sub.add_parser("glue", help="apply gluing steps from a script file")
    s.add_argument("script")
    s.set_defaults(func=cmd_glue)

    s = sub.add_parser("enumerate", help="count connected covers / census")
    s.add_argument("config")
    s.add_argument("--group")
    s.add_argument("--max-order", type=int, default=12)
    s.add_argument("--text", action="store_true",
                   help="plain-text census table")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("export-dot", help="DOT graph of a config or cover")
    s.add_argument("file")
    s.set_defaults(func=cmd_export_dot)

    s = sub.add_parser("selftest", help="run the oracle suites")
    s.add_argument("--max-order", type=int, default=12)
    s.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be positive")
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
