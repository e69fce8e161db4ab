"""Command-line front door.

Subcommands: check, classify, families, map, group, search, verify-paper.
Every command prints a human-readable block followed by stable ``key=value``
machine lines (or only the machine lines with ``--format machine``) and
output is byte-identical across runs for the same inputs and seeds.

Exit codes: 0 success, 1 usage, 2 space-file parse error, 3 validation
failure (invalid topology, unknown name, failed group law, failed corpus
item), 4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field

from .classes import ALL_CLASSES, classify, enumerate_class
from .core import CapExceededError, ContextMismatchError, SoftTopError
from .corpus import DEFAULT_VERIFY_SEED, verify_paper
from .groups import HOMEO_KINDS, GroupLawError, build_collection, build_group
from .maps import CONTINUITY_CLASSES, SoftMapping, classify_map
from .search import SearchSpec, Witness, search_separation
from .spacefile import (
    SpaceFile,
    SpaceParseError,
    parse_space_file,
    serialize_space_file,
    space_file_for,
)
from .topology import InvalidTopologyError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_CAP = 4

DEFAULT_SEED_ENV = "SOFTTOP_SEED"

_KIND_ALIASES = {
    "soft": "soft-homeo",
    "beta": "beta-homeo",
    "beta-irresolute": "beta-irresolute-homeo",
}
_KIND_CHOICES = tuple(_KIND_ALIASES) + HOMEO_KINDS

_CLASSIFY_ORDER = (
    "open",
    "alpha-open",
    "semi-open",
    "pre-open",
    "beta-open",
    "closed",
    "alpha-closed",
    "semi-closed",
    "pre-closed",
    "beta-closed",
)


class CommandError(SoftTopError):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class Report:
    command: str
    human: list[str] = field(default_factory=list)
    machine: list[tuple[str, str]] = field(default_factory=list)

    def say(self, line: str) -> None:
        self.human.append(line)

    def put(self, key: str, value) -> None:
        if isinstance(value, bool):
            value = "true" if value else "false"
        self.machine.append((key, str(value)))

    def render(self, fmt: str) -> str:
        machine_lines = [f"{k}={v}" for k, v in self.machine]
        if fmt == "machine":
            return "\n".join(machine_lines) + "\n"
        return "\n".join(self.human + [""] + machine_lines) + "\n"


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    raw = os.environ.get(DEFAULT_SEED_ENV)
    if raw is None:
        return DEFAULT_VERIFY_SEED
    try:
        return int(raw, 0)
    except ValueError:
        raise CommandError(
            f"{DEFAULT_SEED_ENV} must be an integer, got {raw!r}", EXIT_USAGE
        ) from None


def _load_space(path: str) -> SpaceFile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        raise CommandError(f"cannot read {path}: {err}", EXIT_USAGE) from None
    return parse_space_file(text)


def _parse_map_literal(literal: str) -> dict[str, str]:
    assignment: dict[str, str] = {}
    for piece in literal.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if "->" not in piece:
            raise CommandError(
                f"bad map entry {piece!r}; expected 'element->element'", EXIT_USAGE
            )
        src, dst = piece.split("->", 1)
        src, dst = src.strip(), dst.strip()
        if not src or not dst:
            raise CommandError(f"bad map entry {piece!r}", EXIT_USAGE)
        if src in assignment:
            raise CommandError(f"element {src!r} mapped twice", EXIT_USAGE)
        assignment[src] = dst
    if not assignment:
        raise CommandError("empty map literal", EXIT_USAGE)
    return assignment


def _format_perm(ctx, perm) -> str:
    return ",".join(f"{ctx.universe[x]}->{ctx.universe[y]}" for x, y in enumerate(perm))


# --- command implementations ---


def cmd_check(args) -> tuple[Report, int]:
    report = Report("check")
    sf = _load_space(args.file)
    try:
        top = sf.build_topology()
    except InvalidTopologyError as err:
        v = err.violation
        report.say(f"not a soft topology: {v.describe()}")
        report.put("command", "check")
        report.put("valid", False)
        report.put("violation-op", v.operation)
        report.put("violation-left", v.left.notation())
        report.put("violation-right", v.right.notation())
        report.put("violation-missing", v.missing.notation())
        return report, EXIT_VALIDATION
    report.say(f"valid soft topology with {len(top.members)} members")
    for notice in top.notices:
        report.say(f"notice: {notice}")
    report.put("command", "check")
    report.put("valid", True)
    report.put("members", len(top.members))
    for i, notice in enumerate(top.notices):
        report.put(f"notice-{i}", notice)
    return report, EXIT_OK


def cmd_classify(args) -> tuple[Report, int]:
    sf = _load_space(args.file)
    if args.set not in sf.sets:
        raise CommandError(f"set {args.set!r} is not defined in the file", EXIT_VALIDATION)
    top = sf.build_topology()
    subject = sf.sets[args.set]
    tags = classify(top, subject)
    report = Report("classify")
    report.say(f"{args.set} = {subject.notation()}")
    report.say("classes: " + (" ".join(t for t in _CLASSIFY_ORDER if t in tags) or "(none)"))
    report.put("command", "classify")
    report.put("set", args.set)
    for tag in _CLASSIFY_ORDER:
        report.put(tag, tag in tags)
    return report, EXIT_OK


def cmd_families(args) -> tuple[Report, int]:
    sf = _load_space(args.file)
    top = sf.build_topology()
    family = enumerate_class(top, args.set_class)
    report = Report("families")
    report.say(f"{args.set_class} family has {len(family)} members")
    report.put("command", "families")
    report.put("class", args.set_class)
    report.put("count", len(family))
    for i, member in enumerate(family):
        report.put(f"member-{i}", member.notation())
    return report, EXIT_OK


def cmd_map(args) -> tuple[Report, int]:
    sf_x = _load_space(args.file_x)
    sf_y = _load_space(args.file_y)
    tau_x = sf_x.build_topology()
    tau_y = sf_y.build_topology()
    assignment = _parse_map_literal(args.map)
    try:
        mapping = SoftMapping.from_labels(sf_x.context, sf_y.context, assignment)
    except (KeyError, ValueError) as err:
        raise CommandError(str(err), EXIT_VALIDATION) from None
    tags = classify_map(mapping, tau_x, tau_y)
    report = Report("map")
    report.say(f"map: {args.map}")
    report.say("classes: " + (" ".join(t for t in CONTINUITY_CLASSES if t in tags) or "(none)"))
    report.put("command", "map")
    for tag in CONTINUITY_CLASSES:
        report.put(tag, tag in tags)
    return report, EXIT_OK


def cmd_group(args) -> tuple[Report, int]:
    sf = _load_space(args.file)
    top = sf.build_topology()
    kind = _KIND_ALIASES.get(args.kind, args.kind)
    collection = build_collection(top, kind)
    report = Report("group")
    report.put("command", "group")
    report.put("kind", kind)
    report.put("collection-size", len(collection))
    try:
        group = build_group(collection)
    except GroupLawError as err:
        report.say(f"{kind} collection is not a group: {err}")
        report.put("group-axioms", "fail")
        report.put("failure", err.law)
        if err.witness is not None:
            report.put("witness", str(err.witness))
        return report, EXIT_VALIDATION
    report.say(f"{kind} group of order {group.order}; all group axioms verified")
    report.put("order", group.order)
    report.put("group-axioms", "pass")
    report.put("identity-index", group.identity_index)
    for i, perm in enumerate(group.elements):
        report.put(f"element-{i}", _format_perm(top.context, perm))
    return report, EXIT_OK


def cmd_search(args) -> tuple[Report, int]:
    if len(args.set_classes) != 2:
        raise CommandError(
            "search needs exactly two --class flags (have, have-not)", EXIT_USAGE
        )
    class_a, class_b = args.set_classes
    seed = args.seed if args.seed is not None else _default_seed()
    try:
        spec = SearchSpec(
            universe_size=args.universe,
            param_count=args.params,
            seed=seed,
            max_trials=args.max_trials,
            density=args.density,
        )
    except ValueError as err:
        raise CommandError(str(err), EXIT_USAGE) from None
    outcome = search_separation(spec, class_a, class_b)
    report = Report("search")
    report.put("command", "search")
    report.put("class-a", class_a)
    report.put("class-b", class_b)
    report.put("seed", seed)
    report.put("max-trials", spec.max_trials)
    report.put("density", spec.density)
    if isinstance(outcome, Witness):
        sf = space_file_for(outcome.topology, extra_sets={"W": outcome.subject})
        report.say(f"witness found on trial {outcome.trial_index}:")
        report.say(f"  {outcome.subject.notation()} is {class_a} but not {class_b}")
        report.say("space file:")
        for line in serialize_space_file(sf).splitlines():
            report.say("  " + line)
        report.put("found", True)
        report.put("trial", outcome.trial_index)
        report.put("witness-set", outcome.subject.notation())
        report.put(
            "witness-topology",
            " ".join(m.notation() for m in outcome.topology.members),
        )
    else:
        report.say(f"no witness in {outcome.trials} trials")
        report.put("found", False)
        report.put("trials", outcome.trials)
    return report, EXIT_OK


def cmd_verify_paper(args) -> tuple[Report, int]:
    seed = args.seed if args.seed is not None else DEFAULT_VERIFY_SEED
    result = verify_paper(seed=seed)
    report = Report("verify-paper")
    for item in result.items:
        status = "PASS" if item.passed else "FAIL"
        report.say(f"{status} {item.name} ({item.detail})")
    report.put("command", "verify-paper")
    for item in result.items:
        report.put(f"item-{item.name}", "pass" if item.passed else "fail")
    report.put("items", len(result.items))
    report.put("failures", result.failures)
    return report, EXIT_OK if result.passed else EXIT_VALIDATION


def build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="softtop",
        description="Workbench for finite soft topological spaces.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("text", "machine"),
            default="text",
            help="text prints a human block plus machine lines; machine prints only key=value lines",
        )

    p = sub.add_parser("check", help="validate the topology of a space file")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("classify", help="class tags of a named set")
    p.add_argument("file")
    p.add_argument("--set", required=True, help="set name defined in the file")
    add_format(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("families", help="enumerate one class family")
    p.add_argument("file")
    p.add_argument(
        "--class", dest="set_class", required=True, choices=ALL_CLASSES
    )
    add_format(p)
    p.set_defaults(handler=cmd_families)

    p = sub.add_parser("map", help="continuity classes of a point map")
    p.add_argument("file_x")
    p.add_argument("file_y")
    p.add_argument("--map", required=True, help="comma-separated x->y pairs")
    add_format(p)
    p.set_defaults(handler=cmd_map)

    p = sub.add_parser("group", help="homeomorphism group of a space")
    p.add_argument("file")
    p.add_argument("--kind", required=True, choices=_KIND_CHOICES)
    add_format(p)
    p.set_defaults(handler=cmd_group)

    p = sub.add_parser("search", help="randomized search for a separating set")
    p.add_argument("--universe", type=int, required=True, help="universe size")
    p.add_argument("--params", type=int, required=True, help="parameter count")
    p.add_argument("--seed", type=lambda s: int(s, 0), default=None)
    p.add_argument("--max-trials", type=int, default=100)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument(
        "--class",
        dest="set_classes",
        action="append",
        default=[],
        choices=ALL_CLASSES,
        help="give twice: the class to have, then the class to lack",
    )
    add_format(p)
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("verify-paper", help="run the embedded golden corpus")
    p.add_argument("--seed", type=lambda s: int(s, 0), default=None)
    add_format(p)
    p.set_defaults(handler=cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = args.handler(args)
    except CommandError as err:
        print(f"error: {err}", file=sys.stderr)
        return err.code
    except SpaceParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceededError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CAP
    except (InvalidTopologyError, ContextMismatchError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_VALIDATION
    sys.stdout.write(report.render(args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
