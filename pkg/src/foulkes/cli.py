"""Command-line interface.

Subcommands: min-constituents, max-constituents, expand, verify, agaoka,
theta, families, certificate.  Output is deterministic: identical inputs
produce byte-identical text or JSON (schema version 1, labels in descending
lexicographic order).

Exit codes: 0 ok, 1 usage error, 2 degree guard exceeded, 3 verify mismatch,
4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .constituents import (
    CharacterFlavor,
    CharacterSpec,
    certificate_from_closed_tuple,
    maximal_constituents_phi,
    maximal_constituents_psi,
    minimal_constituents_phi,
    minimal_constituents_psi,
)
from .errors import GuardExceededError, InternalConsistencyError
from .families import (
    BlockKind,
    FamilyTuple,
    enumerate_closed_families,
    family_type,
    is_minimal_tuple,
    tuple_from_json,
    tuple_to_json,
)
from .oracle import (
    DEFAULT_GUARD,
    CharacterTable,
    PlethysmFlavor,
    plethysm_expansion,
)
from .partitions import (
    Partition,
    dominance_maximal_elements,
    dominance_minimal_elements,
    parse_partition,
    partitions_of,
)
from .special import agaoka_lex_least, theta_decomposition

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_MISMATCH = 3
EXIT_INTERNAL = 4

SCHEMA = 1
CACHE_ENV_VAR = "FOULKES_CACHE_DIR"


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage failures exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _label_list(labels) -> list[list[int]]:
    return [list(lab.parts) for lab in labels]


def _render_tuple(t: FamilyTuple) -> str:
    return " | ".join(
        ",".join("{" + ",".join(map(str, b)) + "}" for b in f.blocks) for f in t.families
    )


def _cache_dir(args) -> str | None:
    cache = getattr(args, "cache", None)
    if cache:
        return cache
    return os.environ.get(CACHE_ENV_VAR) or None


def _load_table(degree: int, cache: str | None) -> CharacterTable | None:
    if cache is None:
        return None
    return CharacterTable.load_or_create(degree, cache)


def _save_table(table: CharacterTable | None, cache: str | None) -> None:
    if table is not None and cache is not None:
        table.save_to(cache)


def _cmd_constituents(args, extremum: str) -> int:
    nu = parse_partition(args.nu)
    flavor = CharacterFlavor(args.character)
    engine = {
        ("minimal", CharacterFlavor.PHI): minimal_constituents_phi,
        ("maximal", CharacterFlavor.PHI): maximal_constituents_phi,
        ("minimal", CharacterFlavor.PSI): minimal_constituents_psi,
        ("maximal", CharacterFlavor.PSI): maximal_constituents_psi,
    }[(extremum, flavor)]
    report = engine(args.m, nu)
    command = f"{extremum[:3]}-constituents"
    payload = {
        "schema": SCHEMA,
        "command": command,
        "character": flavor.value,
        "m": args.m,
        "nu": list(nu.parts),
        "degree": report.spec.degree,
        "labels": _label_list(report.labels),
    }
    lines = [
        f"{command} character={flavor.value} m={args.m} nu={nu} degree={report.spec.degree}"
    ]
    if args.no_witness:
        lines.extend(f"  {lab}" for lab in report.labels)
    else:
        payload["witnesses"] = {
            str(lab): tuple_to_json(report.witnesses[lab]) for lab in report.labels
        }
        lines.extend(
            f"  {lab}  witness: {_render_tuple(report.witnesses[lab])}"
            for lab in report.labels
        )
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_expand(args) -> int:
    nu = parse_partition(args.nu)
    flavor = PlethysmFlavor(args.flavor)
    cache = _cache_dir(args)
    table = _load_table(args.m * nu.weight, cache)
    expansion = plethysm_expansion(nu, args.m, flavor, guard=args.guard, table=table)
    _save_table(table, cache)
    payload = {
        "schema": SCHEMA,
        "command": "expand",
        "m": args.m,
        "nu": list(nu.parts),
        "flavor": flavor.value,
        **expansion.to_json_dict(),
    }
    lines = [f"expand flavor={flavor.value} m={args.m} nu={nu} degree={expansion.degree}"]
    lines.extend(f"  {lab}: {mult}" for lab, mult in expansion.items())
    _emit(args, payload, lines)
    return EXIT_OK


def _verify_one(m: int, nu: Partition, guard: int, table) -> dict:
    row = plethysm_expansion(nu, m, PlethysmFlavor.ROW, guard=guard, table=table)
    degree = row.degree
    col = plethysm_expansion(nu, m, PlethysmFlavor.COLUMN, guard=guard, table=table)
    checks = []
    for name, theorem_labels, oracle_labels in (
        (
            "min-phi",
            set(minimal_constituents_phi(m, nu).labels),
            dominance_minimal_elements(row.support()),
        ),
        (
            "max-phi",
            set(maximal_constituents_phi(m, nu).labels),
            dominance_maximal_elements(row.support()),
        ),
        (
            "min-psi",
            set(minimal_constituents_psi(m, nu).labels),
            dominance_minimal_elements(col.support()),
        ),
    ):
        checks.append(
            {
                "name": name,
                "theorem": _label_list(sorted(theorem_labels, reverse=True)),
                "oracle": _label_list(sorted(oracle_labels, reverse=True)),
                "agree": theorem_labels == oracle_labels,
            }
        )
    return {
        "nu": list(nu.parts),
        "degree": degree,
        "checks": checks,
        "agree": all(c["agree"] for c in checks),
    }


def _cmd_verify(args) -> int:
    if args.seed_sweep:
        if args.n is None:
            raise ValueError("--seed-sweep requires --n")
        nus = list(partitions_of(args.n))
    else:
        if args.nu is None:
            raise ValueError("verify needs --nu (or --seed-sweep with --n)")
        nus = [parse_partition(args.nu)]
    cache = _cache_dir(args)
    cases = []
    table = None
    for nu in nus:
        degree = args.m * nu.weight
        if table is None or table.degree != degree:
            _save_table(table, cache)
            table = _load_table(degree, cache)
        cases.append(_verify_one(args.m, nu, args.guard, table))
    _save_table(table, cache)
    agree = all(case["agree"] for case in cases)
    payload = {
        "schema": SCHEMA,
        "command": "verify",
        "m": args.m,
        "cases": cases,
        "agree": agree,
    }
    lines = []
    for case in cases:
        nu_text = ",".join(map(str, case["nu"]))
        for check in case["checks"]:
            verdict = "AGREE" if check["agree"] else "MISMATCH"
            shown = " ; ".join(",".join(map(str, lab)) for lab in check["theorem"])
            line = f"nu={nu_text} {check['name']}: {verdict} [{shown}]"
            if not check["agree"]:
                oracle_shown = " ; ".join(",".join(map(str, lab)) for lab in check["oracle"])
                line += f" oracle=[{oracle_shown}]"
            lines.append(line)
    lines.append(f"verdict: {'AGREE' if agree else 'MISMATCH'}")
    _emit(args, payload, lines)
    return EXIT_OK if agree else EXIT_MISMATCH


def _cmd_agaoka(args) -> int:
    data = agaoka_lex_least(args.m, args.n, BlockKind(args.kind))
    payload = {
        "schema": SCHEMA,
        "command": "agaoka",
        "m": args.m,
        "n": args.n,
        "kind": data.kind.value,
        "indices": list(data.indices),
        "residuals": list(data.residuals),
        "widths": list(data.widths),
        "assembled": list(data.assembled.parts),
    }
    lines = [
        f"agaoka kind={data.kind.value} m={args.m} n={args.n}",
        f"  indices={list(data.indices)} residuals={list(data.residuals)} widths={list(data.widths)}",
        f"  lex-least type: {data.assembled}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_theta(args) -> int:
    expansion = theta_decomposition(args.n)
    payload = {"schema": SCHEMA, "command": "theta", "n": args.n, **expansion.to_json_dict()}
    lines = [f"theta n={args.n} degree={expansion.degree}"]
    lines.extend(f"  {lab}: {mult}" for lab, mult in expansion.items())
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_families(args) -> int:
    kind = BlockKind(args.kind)
    rows = []
    for fam in enumerate_closed_families(args.m, args.n, kind):
        ty = family_type(fam)
        minimal = is_minimal_tuple(FamilyTuple([fam])) if fam.size else False
        rows.append((fam, ty, minimal))
    payload = {
        "schema": SCHEMA,
        "command": "families",
        "m": args.m,
        "n": args.n,
        "kind": kind.value,
        "families": [
            {
                "blocks": [list(b) for b in fam.blocks],
                "type": list(ty.parts) if ty is not None else None,
                "minimal": minimal,
            }
            for fam, ty, minimal in rows
        ],
    }
    lines = [f"closed families of shape ({args.m}^{args.n}) kind={kind.value}: {len(rows)}"]
    for fam, ty, minimal in rows:
        blocks = ",".join("{" + ",".join(map(str, b)) + "}" for b in fam.blocks)
        mark = "  [minimal]" if minimal else ""
        lines.append(f"  {blocks}  type={ty}{mark}")
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_certificate(args) -> int:
    if args.tuple_file:
        with open(args.tuple_file, encoding="utf-8") as fh:
            data = json.load(fh)
    elif args.tuple:
        data = json.loads(args.tuple)
    else:
        raise ValueError("certificate needs --tuple JSON or --tuple-file PATH")
    t = tuple_from_json(data)
    nu = parse_partition(args.nu)
    spec = CharacterSpec(args.m, nu, CharacterFlavor(args.character))
    label = certificate_from_closed_tuple(spec, t)
    payload = {
        "schema": SCHEMA,
        "command": "certificate",
        "character": spec.flavor.value,
        "m": args.m,
        "nu": list(nu.parts),
        "kind": t.kind.value,
        "label": list(label.parts),
    }
    lines = [
        f"certificate character={spec.flavor.value} m={args.m} nu={nu}",
        f"  constituent with multiplicity >= 1: {label}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="foulkes", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    for extremum in ("minimal", "maximal"):
        name = f"{extremum[:3]}-constituents"
        p = sub.add_parser(name, parents=[common], help=f"{extremum} constituent labels")
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--nu", required=True, help="partition, e.g. 2,1,1")
        p.add_argument("--character", choices=("phi", "psi"), default="phi")
        p.add_argument("--no-witness", action="store_true")
        p.set_defaults(func=lambda a, e=extremum: _cmd_constituents(a, e))

    p = sub.add_parser("expand", parents=[common], help="exact Schur expansion (oracle)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--flavor", choices=("row", "column"), default="row")
    p.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    p.add_argument("--cache", help=f"character cache directory (or ${CACHE_ENV_VAR})")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("verify", parents=[common], help="theorem engines vs oracle")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--nu")
    p.add_argument("--n", type=int, help="weight of nu for --seed-sweep")
    p.add_argument("--seed-sweep", action="store_true", help="verify every nu of weight --n")
    p.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    p.add_argument("--cache")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("agaoka", parents=[common], help="lex-least single-family type")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("set", "multiset"), default="set")
    p.set_defaults(func=_cmd_agaoka)

    p = sub.add_parser("theta", parents=[common], help="decomposition of s_(1^n) o s_(2)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_theta)

    p = sub.add_parser("families", parents=[common], help="closed families of one shape")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("set", "multiset"), default="set")
    p.set_defaults(func=_cmd_families)

    p = sub.add_parser("certificate", parents=[common], help="closed-tuple certificate")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--character", choices=("phi", "psi"), default="phi")
    p.add_argument("--tuple", help='family tuple JSON, e.g. {"m":2,"kind":"set","families":[...]}')
    p.add_argument("--tuple-file")
    p.set_defaults(func=_cmd_certificate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InternalConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
