"""Command-line front end.

Commands:

- fqg verify <preset|file> [--tol T] [--format text|json] [--only GLOB ...]
- fqg action <preset|file|action-spec.json> [--group <preset|file>]
      [--automorphisms inversion|conjugation|file] [--mode auto|full|sliced]
      [--tol T] [--format text|json] [--only GLOB ...]
- fqg preset <name> -o <path>
- fqg dual <preset|file> -o <path>

Exit codes: 0 all reported checks pass, 1 at least one check failed,
2 structural error (bad file, unknown preset, bad flags).

Reports are deterministic: the same input and configuration produce
byte-identical output (there are no timestamps; the provenance block hashes
the input).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

import numpy as np

from . import builders
from .actions import resolve_automorphisms
from .errors import ParseError, StructuralError
from .report import VerificationReport
from .suite import action_suite, full_suite

EXIT_OK = 0
EXIT_CHECKS_FAILED = 1
EXIT_STRUCTURAL = 2


def _sha256_of_algebra(a) -> str:
    return hashlib.sha256(builders.algebra_to_json(a).encode("utf-8")).hexdigest()


def _emit(report: VerificationReport, provenance: dict, fmt: str, only) -> int:
    if only:
        report = report.filtered(only)
    if fmt == "json":
        payload = {"provenance": provenance, **report.as_dict()}
        print(json.dumps(payload, indent=2))
    else:
        print(f"input: {provenance['input']}  tolerance: {provenance['tolerance']:g}")
        print(report.format_text())
    return EXIT_OK if report.overall_pass else EXIT_CHECKS_FAILED


def _cmd_verify(args) -> int:
    algebra = builders.resolve_algebra(args.input)
    report = full_suite(algebra, tol=args.tol)
    provenance = {
        "input": args.input,
        "sha256": _sha256_of_algebra(algebra),
        "tolerance": args.tol,
        "mode": None,
        "format_version": builders.FORMAT_VERSION,
    }
    return _emit(report, provenance, args.format, args.only)


def _resolve_group_input(spec: str):
    """A group preset name, or a path to a JSON file with an inline table."""
    import os

    if os.path.exists(spec) and spec.endswith(".json"):
        try:
            with open(spec, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{spec} is not valid JSON: {exc}") from exc
        return builders.resolve_group(data)
    return builders.resolve_group(spec)


def _looks_like_action_spec(path: str) -> bool:
    if not path.endswith(".json"):
        return False
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return False
    return isinstance(data, dict) and "automorphisms" in data


def _cmd_action(args) -> int:
    if _looks_like_action_spec(args.input):
        if args.group or args.automorphisms:
            raise StructuralError(
                "when an action spec file is given, --group/--automorphisms must be omitted"
            )
        spec = builders.load_action_spec(args.input)
        algebra = builders.resolve_algebra(spec["algebra"])
        k_group = builders.resolve_group(spec["group"])
        auto_spec = spec["automorphisms"]
        if isinstance(auto_spec, list):
            theta = builders.parse_explicit_automorphisms(
                auto_spec, k_group.order, algebra.dim
            )
        else:
            theta = resolve_automorphisms(algebra, k_group, auto_spec)
    else:
        if not args.group or not args.automorphisms:
            raise StructuralError("--group and --automorphisms are required")
        algebra = builders.resolve_algebra(args.input)
        k_group = _resolve_group_input(args.group)
        if args.automorphisms in ("inversion", "conjugation"):
            theta = resolve_automorphisms(algebra, k_group, args.automorphisms)
        else:
            try:
                with open(args.automorphisms, "r", encoding="utf-8") as fh:
                    entries = json.load(fh)
            except OSError as exc:
                raise ParseError(f"cannot read {args.automorphisms}: {exc}") from exc
            except json.JSONDecodeError as exc:
                raise ParseError(f"{args.automorphisms} is not valid JSON: {exc}") from exc
            theta = builders.parse_explicit_automorphisms(
                entries, k_group.order, algebra.dim
            )
    report = action_suite(algebra, k_group, theta, tol=args.tol, mode=args.mode)
    digest = hashlib.sha256()
    digest.update(builders.algebra_to_json(algebra).encode("utf-8"))
    digest.update(np.ascontiguousarray(k_group.table).tobytes())
    digest.update(np.ascontiguousarray(theta).tobytes())
    provenance = {
        "input": args.input,
        "sha256": digest.hexdigest(),
        "tolerance": args.tol,
        "mode": args.mode,
        "format_version": builders.FORMAT_VERSION,
    }
    return _emit(report, provenance, args.format, args.only)


def _cmd_preset(args) -> int:
    algebra = builders.preset(args.name)
    builders.save_algebra(algebra, args.output)
    print(f"wrote {args.name} to {args.output}")
    return EXIT_OK


def _cmd_dual(args) -> int:
    algebra = builders.resolve_algebra(args.input)
    builders.save_algebra(builders.dual_concrete(algebra), args.output)
    print(f"wrote dual of {args.input} to {args.output}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fqg", description="Verify finite quantum group identities numerically."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--tol", type=float, default=1e-9, help="residual tolerance")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument(
            "--only", action="append", default=None,
            help="glob filter on check names (repeatable)",
        )

    p_verify = sub.add_parser("verify", help="run the full identity suite on an algebra")
    p_verify.add_argument("input", help="preset name or algebra JSON file")
    common(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_action = sub.add_parser("action", help="verify a finite group action by automorphisms")
    p_action.add_argument("input", help="algebra preset/file, or an action spec JSON file")
    p_action.add_argument("--group", help="acting group preset or inline-table JSON file")
    p_action.add_argument(
        "--automorphisms",
        help="'inversion', 'conjugation', or a JSON file of per-element matrices",
    )
    p_action.add_argument("--mode", choices=("auto", "full", "sliced"), default="auto")
    common(p_action)
    p_action.set_defaults(func=_cmd_action)

    p_preset = sub.add_parser("preset", help="export a preset algebra to JSON")
    p_preset.add_argument("name")
    p_preset.add_argument("-o", "--output", required=True)
    p_preset.set_defaults(func=_cmd_preset)

    p_dual = sub.add_parser("dual", help="export the dual of an algebra to JSON")
    p_dual.add_argument("input", help="preset name or algebra JSON file")
    p_dual.add_argument("-o", "--output", required=True)
    p_dual.set_defaults(func=_cmd_dual)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "tol", 1.0) <= 0:
        print("error: tolerance must be positive", file=sys.stderr)
        return EXIT_STRUCTURAL
    try:
        return args.func(args)
    except StructuralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL


if __name__ == "__main__":
    sys.exit(main())
