"""Command-line surface: enumerate, count, formula, biject, verify.

Results go to stdout; progress and error messages go to stderr.  Exit codes
are stable: 0 success, 1 verification or membership mismatch, 2 usage or
parse error.  Configuration precedence is flags, then BALLOTKIT_* environment
variables, then built-in defaults.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import contextmanager

from . import bijections, formulas, verification
from .enumeration import count_sequence, enumerate_oracle, enumerate_pruned
from .errors import (
    BallotkitError,
    CapExceededError,
    InvalidInputError,
    UnsupportedClassError,
)
from .patterns import format_pattern_set, parse_pattern_set
from .perms import check_step_word, format_perm, parse_perm

SCHEMA_VERSION = verification.SCHEMA_VERSION

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class _UsageError(Exception):
    """Bad command-line input (as opposed to a semantic mismatch)."""


def _parse_perm_arg(text: str):
    try:
        return parse_perm(text)
    except InvalidInputError as exc:
        raise _UsageError(str(exc)) from None


def _parse_pset_arg(text: str):
    try:
        return parse_pattern_set(text)
    except InvalidInputError as exc:
        raise _UsageError(str(exc)) from None


def _parse_word_arg(text: str) -> str:
    try:
        return check_step_word(text)
    except InvalidInputError as exc:
        raise _UsageError(str(exc)) from None


def _emit_json(payload: dict) -> None:
    payload.setdefault("schema", SCHEMA_VERSION)
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def parse_json_output(text: str) -> dict:
    """Parse a command's JSON output, checking the schema marker."""
    payload = json.loads(text)
    if payload.get("schema") != SCHEMA_VERSION:
        raise InvalidInputError(f"unsupported schema: {payload.get('schema')!r}")
    return payload


@contextmanager
def _cap_flags(args: argparse.Namespace):
    # flags win over the environment for the duration of the command only
    overrides = {}
    for attr, env in (("oracle_max_n", "BALLOTKIT_ORACLE_MAX_N"),
                      ("pruned_max_n", "BALLOTKIT_PRUNED_MAX_N"),
                      ("threads", "BALLOTKIT_THREADS")):
        value = getattr(args, attr, None)
        if value is not None:
            overrides[env] = str(value)
    saved = {env: os.environ.get(env) for env in overrides}
    os.environ.update(overrides)
    try:
        yield
    finally:
        for env, old in saved.items():
            if old is None:
                os.environ.pop(env, None)
            else:
                os.environ[env] = old


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--oracle-max-n", type=int, default=None,
                     help="override the oracle enumeration cap (default 10)")
    sub.add_argument("--pruned-max-n", type=int, default=None,
                     help="override the pruned enumeration cap (default 16)")
    sub.add_argument("--threads", type=int, default=None,
                     help="worker threads for partitioned search (default: all cores)")


def _cmd_enumerate(args: argparse.Namespace) -> int:
    pset = _parse_pset_arg(args.patterns)
    enumerate_fn = enumerate_oracle if args.method == "oracle" else enumerate_pruned
    listing = enumerate_fn(args.n, pset, ballot=not args.no_ballot)
    if args.format == "json":
        _emit_json({
            "command": "enumerate",
            "class": format_pattern_set(pset),
            "n": args.n,
            "ballot": not args.no_ballot,
            "method": args.method,
            "count": len(listing),
            "perms": [format_perm(p) for p in listing],
        })
    else:
        for p in listing:
            sys.stdout.write(format_perm(p) + "\n")
    return EXIT_OK


def _cmd_count(args: argparse.Namespace) -> int:
    pset = _parse_pset_arg(args.patterns)
    name = format_pattern_set(pset)
    ballot = not args.no_ballot
    if args.method == "formula":
        record = formulas.formula_sequence(pset, args.n_max)
        if record is None:
            sys.stderr.write(f"no formula registered for {{{name}}}\n")
            return EXIT_USAGE
    elif args.method == "both":
        record = count_sequence(pset, args.n_max, "pruned", ballot=ballot)
        rule = formulas.formula_sequence(pset, args.n_max)
        prefix = formulas.reference_prefix(pset)
        for other in (rule, prefix):
            if other is None:
                continue
            m = min(len(record.counts), len(other.counts))
            for i in range(m):
                if record.counts[i] != other.counts[i]:
                    sys.stderr.write(
                        f"count mismatch for {{{name}}} at n={i + 1}: "
                        f"pruned={record.counts[i]} {other.provenance}={other.counts[i]}\n"
                    )
                    return EXIT_MISMATCH
    else:
        record = count_sequence(pset, args.n_max, args.method, ballot=ballot)
    if args.format == "json":
        _emit_json({
            "command": "count",
            "class": name,
            "n_max": args.n_max,
            "ballot": ballot,
            "provenance": record.provenance,
            "counts": list(record.counts),
        })
    elif args.format == "plain":
        sys.stdout.write(",".join(str(c) for c in record.counts) + "\n")
    else:
        for i, c in enumerate(record.counts):
            sys.stdout.write(f"{i + 1} {c}\n")
    return EXIT_OK


def _cmd_formula(args: argparse.Namespace) -> int:
    pset = _parse_pset_arg(args.patterns)
    spec = formulas.get_spec(pset)
    count = formulas.formula_count(pset, args.n)
    payload = {
        "command": "formula",
        "class": format_pattern_set(pset),
        "n": args.n,
        "count": count,
        "rule_kind": spec.kind if spec is not None else "none",
        "rule_text": spec.rule_text if spec is not None else "uncatalogued class",
        "corrected": spec.corrected if spec is not None else False,
    }
    if args.format == "plain":
        sys.stdout.write(("no formula" if count is None else str(count)) + "\n")
    else:
        _emit_json(payload)
    return EXIT_OK


def _cmd_biject(args: argparse.Namespace) -> int:
    if args.map == "dyck":
        if args.inverse:
            if args.word is None:
                raise UnsupportedClassError("--map dyck --inverse needs --word")
            sys.stdout.write(format_perm(bijections.from_dyck_prefix(_parse_word_arg(args.word))) + "\n")
        else:
            if args.perm is None:
                raise UnsupportedClassError("--map dyck needs --perm")
            sys.stdout.write(bijections.to_dyck_prefix(_parse_perm_arg(args.perm)) + "\n")
        return EXIT_OK
    if args.map == "transport":
        if args.perm is None or args.source is None or args.target is None:
            raise UnsupportedClassError("--map transport needs --perm, --from, and --to")
        image = bijections.wilf_transport(
            _parse_perm_arg(args.perm),
            _parse_pset_arg(args.source),
            _parse_pset_arg(args.target),
        )
        sys.stdout.write(format_perm(image) + "\n")
        return EXIT_OK
    if args.map == "insert-132-321":
        if args.perm is None:
            raise UnsupportedClassError(f"--map {args.map} needs --perm")
        p = _parse_perm_arg(args.perm)
        image = bijections.remove_132_321(p) if args.inverse else bijections.insert_132_321(p)
        sys.stdout.write(format_perm(image) + "\n")
        return EXIT_OK
    if args.map == "prepend-231-321":
        if args.perm is None:
            raise UnsupportedClassError(f"--map {args.map} needs --perm")
        p = _parse_perm_arg(args.perm)
        image = bijections.behead_231_321(p) if args.inverse else bijections.prepend_231_321(p)
        sys.stdout.write(format_perm(image) + "\n")
        return EXIT_OK
    raise UnsupportedClassError(f"unknown map: {args.map!r}")


def _cmd_verify(args: argparse.Namespace) -> int:
    report = verification.run_suite(args.suite, args.n_max)
    _emit_json(report)
    corrected = sum(1 for row in report["rows"] if row["status"] == "corrected")
    note = f" ({corrected} corrected row{'s' if corrected != 1 else ''})" if corrected else ""
    if report["pass"]:
        sys.stderr.write(f"verify: {report['checked']} rows checked, all pass{note}\n")
        return EXIT_OK
    sys.stderr.write(f"verify: FAIL at {verification.first_failure(report)}\n")
    return EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ballotkit",
        description="Enumerate, count, and map pattern-avoiding ballot permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list every avoider of one length")
    p.add_argument("--patterns", default="", help='avoidance class, e.g. "132,213"')
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--no-ballot", action="store_true",
                   help="drop the ballot restriction (plain avoiders)")
    p.add_argument("--method", choices=("oracle", "pruned"), default="pruned")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    _add_common_flags(p)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("count", help="count avoiders for n = 1..n_max")
    p.add_argument("--patterns", default="")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--no-ballot", action="store_true")
    p.add_argument("--method", choices=("oracle", "pruned", "formula", "both"),
                   default="pruned")
    p.add_argument("--format", choices=("bfile", "plain", "json"), default="bfile")
    _add_common_flags(p)
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("formula", help="evaluate the registered counting rule")
    p.add_argument("--patterns", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "plain"), default="json")
    p.set_defaults(fn=_cmd_formula)

    p = sub.add_parser("biject", help="apply a constructive map")
    p.add_argument("--map", required=True,
                   choices=("dyck", "transport", "insert-132-321", "prepend-231-321"))
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--perm", default=None)
    p.add_argument("--word", default=None)
    p.add_argument("--from", dest="source", default=None)
    p.add_argument("--to", dest="target", default=None)
    p.set_defaults(fn=_cmd_biject)

    p = sub.add_parser("verify", help="run the cross-check suites")
    p.add_argument("--suite", choices=("tables", "formulas", "bijections", "all"),
                   default="all")
    p.add_argument("--n-max", type=int, default=7)
    _add_common_flags(p)
    p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with _cap_flags(args):
            return args.fn(args)
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (UnsupportedClassError, CapExceededError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except InvalidInputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_MISMATCH
    except BallotkitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
