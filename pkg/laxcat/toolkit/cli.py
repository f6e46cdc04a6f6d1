"""
The ``laxcat`` command line.

Subcommands::

    laxcat validate FILE...
    laxcat compute CONSTRUCTION --workspace X.fcat --in FILE... [--out FILE]
    laxcat check NAME [FILE...] [--workspace X.fcat] [--morphism Q...]
    laxcat oracle {limit,colimit} CONSTRUCTION --workspace X.fcat --in FILE... [--apex FILE]

Exit codes: 0 pass, 1 verified failure, 2 hypothesis unmet, 3 input error.
Results go to stdout (or ``--out``), diagnostics to stderr.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from laxcat.core.exceptions import (
    CoequalizerNotFiniteWithinBound,
    HypothesisError,
    LaxcatError,
    MissingColimit,
    MissingLimit,
)
from laxcat.core.registry import ConstructionRegistry
from laxcat.core.settings import get_config
from laxcat.core.types import RegistryKind
from laxcat.core.utils.logger import get_logger, set_level
from laxcat.fincat.category import FinCategory
from laxcat.fincat.functor import Functor, NatTrans
from laxcat.laxcomma.adjunction import lax_isomorphic
from laxcat.laxstruct.construction import canonical_probes
from laxcat.presentation.elaborate import load_file
from laxcat.toolkit import commands
from laxcat.toolkit.checks import run_batch
from laxcat.toolkit.io import load_lax_object, load_workspace, write_text
from laxcat.toolkit.report import combined_exit_code, failed, passed, render_reports

logger = get_logger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_SKIPPED = 2
EXIT_INPUT = 3


def _count(minimum: int):
    def parse(text: str) -> int:
        value = int(text)
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}, got {value}")
        return value

    return parse


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", type=Path, help="write results to this file")
    common.add_argument("--timing", action="store_true", help="include elapsed times")
    common.add_argument("--workers", type=_count(1), help="concurrent checks in a batch")
    common.add_argument("--probes", type=_count(0), help="extra probe objects for oracles")
    common.add_argument("--bound", type=_count(1), help="coequalizer saturation bound")
    common.add_argument(
        "--log-level", type=str.upper, choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="laxcat", description="Finite lax comma categories Cat//X")
    sub = parser.add_subparsers(dest="command", required=True)

    validate = sub.add_parser("validate", parents=[common], help="parse and validate .fcat files")
    validate.add_argument("files", nargs="+", type=Path)

    constructions = ConstructionRegistry.list_available(RegistryKind.CONSTRUCTION)
    compute = sub.add_parser("compute", parents=[common], help="compute a construction in Cat//X")
    compute.add_argument("construction", help=f"one of: {', '.join(constructions)}")
    compute.add_argument("--workspace", type=Path, required=True)
    compute.add_argument("--in", dest="inputs", nargs="*", type=Path, default=[])

    names = ConstructionRegistry.list_available(RegistryKind.CHECK)
    check = sub.add_parser("check", parents=[common], help="run a property check")
    check.add_argument("name", help=f"one of: {', '.join(names)}")
    check.add_argument("files", nargs="*", type=Path)
    check.add_argument("--workspace", type=Path)
    check.add_argument("--in", dest="inputs", nargs="*", type=Path, default=[])
    check.add_argument("--morphism", dest="morphisms", action="append", default=[])

    oracle = sub.add_parser("oracle", parents=[common], help="re-verify a construction's universal property")
    oracle.add_argument("kind", choices=["limit", "colimit"])
    oracle.add_argument("construction")
    oracle.add_argument("--workspace", type=Path, required=True)
    oracle.add_argument("--in", dest="inputs", nargs="*", type=Path, default=[])
    oracle.add_argument("--apex", type=Path, help="a computed apex to compare against")
    return parser


def _configure(args: argparse.Namespace) -> None:
    config = get_config()
    if args.bound is not None:
        config.limits.saturation_bound = args.bound
    if args.probes is not None:
        config.oracle.probes = args.probes
    if args.workers is not None:
        config.oracle.workers = args.workers
    if args.log_level:
        config.log_level = args.log_level
    config.limits.__post_init__()
    config.oracle.__post_init__()
    set_level(config.log_level)


def _emit(text: str, args: argparse.Namespace) -> None:
    write_text(text, args.out)
    if args.out is None:
        sys.stdout.write(text)


def _request(args: argparse.Namespace, inputs: Sequence[Path]) -> commands.Request:
    workspace = load_workspace(args.workspace) if getattr(args, "workspace", None) else None
    return commands.Request(
        workspace=workspace,
        inputs=list(inputs),
        probes=args.probes,
        bound=args.bound,
        morphisms=list(getattr(args, "morphisms", [])),
        workers=args.workers,
    )


# ============================================================================
# SUBCOMMANDS
# ============================================================================


def _describe(name: str, value) -> dict:
    if isinstance(value, FinCategory):
        return {"kind": "category", "name": name, "objects": len(value.objects), "morphisms": len(value.morphisms)}
    if isinstance(value, Functor):
        return {"kind": "functor", "name": name, "source": value.source.name, "target": value.target.name}
    if isinstance(value, NatTrans):
        return {"kind": "nattrans", "name": name, "source": value.source.name, "target": value.target.name}
    return {"kind": type(value).__name__, "name": name}


def run_validate(args: argparse.Namespace) -> int:
    rows = []
    for path in args.files:
        rows.extend(_describe(name, value) for name, value in load_file(path).items())
    if args.json:
        text = "".join(json.dumps(r, sort_keys=True) + "\n" for r in rows)
    else:
        lines = []
        for r in rows:
            if r["kind"] == "category":
                lines.append(f"category {r['name']}: {r['objects']} objects, {r['morphisms']} morphisms")
            else:
                lines.append(f"{r['kind']} {r['name']}: {r.get('source')} -> {r.get('target')}")
        text = "".join(line + "\n" for line in lines)
    _emit(text, args)
    return EXIT_PASS


def run_compute(args: argparse.Namespace) -> int:
    handler = ConstructionRegistry.get(RegistryKind.CONSTRUCTION, args.construction)
    text, _ = handler(_request(args, args.inputs))
    if args.json:
        text = json.dumps({"construction": args.construction, "result": text}, sort_keys=True) + "\n"
    _emit(text, args)
    return EXIT_PASS


def run_check(args: argparse.Namespace) -> int:
    handler = ConstructionRegistry.get(RegistryKind.CHECK, args.name)
    request = _request(args, args.inputs)
    batch = []
    if request.workspace is not None or not args.files:
        batch.extend(handler(request))
    for path in args.files if request.workspace is None else ():
        request = _request(args, args.inputs)
        request.workspace = load_workspace(path)
        batch.extend(handler(request))
    reports = run_batch(batch, args.workers)
    _emit(render_reports(reports, as_json=args.json, timing=args.timing), args)
    return combined_exit_code(reports)


def run_oracle(args: argparse.Namespace) -> int:
    handler = ConstructionRegistry.get(RegistryKind.CONSTRUCTION, args.construction)
    request = _request(args, args.inputs)
    _, record = handler(request)
    if record is None:
        raise LaxcatError(f"{args.construction} has no (co)limit record to verify", error_code="IO_001")
    if record.kind != args.kind:
        raise LaxcatError(f"{args.construction} is a {record.kind}, not a {args.kind}", error_code="IO_001")
    subject = args.construction
    if args.apex is not None:
        given = load_lax_object(args.apex, request.require_workspace())
        if not lax_isomorphic(given, record.apex):
            report = failed("oracle", [str(args.apex)], "apex differs from the construction", subject=subject)
            _emit(render_reports([report], as_json=args.json, timing=args.timing), args)
            return report.exit_code
    ok = record.verify(canonical_probes(request.require_workspace(), args.probes))
    probes = record.probe_names()
    if ok:
        report = passed("oracle", subject=subject, probes=probes)
    else:
        report = failed("oracle", [record.apex.name], f"not a {args.kind} on the window", subject=subject, probes=probes)
    _emit(render_reports([report], as_json=args.json, timing=args.timing), args)
    return report.exit_code


COMMANDS = {
    "validate": run_validate,
    "compute": run_compute,
    "check": run_check,
    "oracle": run_oracle,
}


def _parse(parser: argparse.ArgumentParser, argv: Optional[List[str]]) -> argparse.Namespace:
    # Files given after an option land in the leftovers; keep them in order.
    args, extras = parser.parse_known_args(argv)
    if extras:
        if args.command != "check" or any(e.startswith("-") for e in extras):
            parser.error(f"unrecognized arguments: {' '.join(extras)}")
        args.files.extend(Path(e) for e in extras)
    return args


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = _parse(parser, argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    try:
        _configure(args)
        return COMMANDS[args.command](args)
    except (HypothesisError, MissingLimit, MissingColimit) as exc:
        sys.stderr.write(f"skipped: {exc.format_message()}\n")
        return EXIT_SKIPPED
    except CoequalizerNotFiniteWithinBound as exc:
        sys.stderr.write(f"{exc.format_message()}\n")
        return EXIT_FAIL
    except (LaxcatError, OSError) as exc:
        message = exc.format_message() if isinstance(exc, LaxcatError) else str(exc)
        sys.stderr.write(f"error: {message}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
