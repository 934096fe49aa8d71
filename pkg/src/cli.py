"""
Command-line runner for .hdga documents and the built-in catalog

    python -m src.cli check data/catalog/gl1.hdga
    python -m src.cli catalog planck --json
    python -m src.cli reduce data/catalog/gl2.hdga -e "d(a)*d"

Exit status: 0 when every expectation is met, 1 on a verification mismatch,
2 on usage, I/O or parse errors.
"""
import argparse
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from src.config import settings
from src.document_loader import DocumentLoader, LoadedDocument
from src.dsl_parser import evaluate_expression, serialize_presentation
from src.errors import DSLError, EngineError
from src.report import VerificationReport
from src.scalar import Scalar

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad command-line input that argparse cannot catch on its own"""


def parse_substitutions(items: Sequence[str]) -> Dict[str, Scalar]:
    """--subst q=1 --subst lam=1/2 -> {"q": 1, "lam": 1/2}"""
    assignment = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise UsageError(f"--subst expects name=value, got {item!r}")
        assignment[name.strip()] = Scalar.parse(value.strip())
    return assignment


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit the report as JSON")
    common.add_argument("--degree-bound", type=int, default=None, help="Word-length bound of the checks")
    common.add_argument("--budget", type=int, default=None, help="Rewrite-step budget of normal_form")
    common.add_argument(
        "--subst",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="Specialise scalars in witnesses and reduced output (repeatable)",
    )
    common.add_argument("-v", "--verbose", action="store_true", help="Print check traces")

    parser = argparse.ArgumentParser(
        prog="hdga",
        description="Verify differential graded Hopf algebra presentations and their cross products",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", parents=[common], help="Run every expectation a document declares")
    check.add_argument("file", type=Path)

    build = commands.add_parser("build", parents=[common], help="Run a document's recipe and emit the result")
    build.add_argument("file", type=Path)
    build.add_argument("-o", "--output", type=Path, default=None, help="Write the DSL here instead of stdout")

    derive = commands.add_parser("derive", parents=[common], help="Solve a document's ansatz")
    derive.add_argument("file", type=Path)
    derive.add_argument("--ansatz", default=None, help="Ansatz block name (default: the first)")
    derive.add_argument("-o", "--output", type=Path, default=None)

    reduce = commands.add_parser("reduce", parents=[common], help="Print the normal form of an expression")
    reduce.add_argument("file", type=Path)
    reduce.add_argument("-e", "--expr", required=True)
    reduce.add_argument("--presentation", default=None, help="Presentation name (default: the first)")

    catalog = commands.add_parser("catalog", parents=[common], help="List or run catalog entries")
    catalog.add_argument("name", nargs="?", default=None)
    catalog.add_argument("--all", action="store_true", help="Run every entry")

    commands.add_parser("schema", help="Print the JSON schema of verification reports")
    return parser


def _emit(report: VerificationReport, args, details: Optional[VerificationReport] = None):
    if args.json:
        print(report.to_json())
        return
    print(report.summary())
    if details is not None and args.verbose:
        print(details.summary())


def _loader(args) -> DocumentLoader:
    return DocumentLoader(budget=args.budget, degree_bound=args.degree_bound)


def _write(text: str, output: Optional[Path]):
    if output is None:
        sys.stdout.write(text)
        return
    output.write_text(text, encoding="utf-8")
    if settings.verbose:
        print(f"wrote {output}", file=sys.stderr)


def _specialize(report: VerificationReport, assignment: Dict[str, Scalar]) -> VerificationReport:
    return report.specialize(assignment) if assignment else report


def cmd_check(args) -> int:
    doc = _loader(args).load_file(args.file)
    details = VerificationReport(title=f"{doc.title} (details)")
    report = doc.check(details, parse_substitutions(args.subst))
    _emit(report, args, details)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_build(args) -> int:
    doc = _loader(args).load_file(args.file)
    built = doc.build(verbose=args.verbose)
    _write(serialize_presentation(built, doc.document.scalars), args.output)
    return EXIT_OK


def cmd_derive(args) -> int:
    doc = _loader(args).load_file(args.file)
    result = doc.derive(args.ansatz)
    report = _specialize(result.report, parse_substitutions(args.subst))
    if args.json:
        payload = report.to_dict()
        payload["free"] = list(result.free)
        payload["values"] = {name: str(value) for name, value in result.values.items()}
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        if result.presentation is not None:
            _write(serialize_presentation(result.presentation, doc.document.scalars), args.output)
        if result.certificate is not None:
            print(f"# inconsistent: {result.certificate}")
        print(f"# free unknowns: {', '.join(result.free) if result.free else 'none'}")
        if args.verbose:
            for stage in result.stages:
                print(f"# {stage}")
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _reduce_target(doc: LoadedDocument, name: Optional[str], args):
    if name is not None:
        return doc.presentation(name)
    if doc.presentations:
        return next(iter(doc.presentations.values()))
    if doc.document.recipe is not None:
        return doc.build(verbose=args.verbose)
    raise UsageError(f"{doc.title} declares no presentation to reduce in")


def cmd_reduce(args) -> int:
    doc = _loader(args).load_file(args.file)
    p = _reduce_target(doc, args.presentation, args)
    value = evaluate_expression(args.expr, p.alphabet, doc.document.scalars)
    if isinstance(value, Scalar):
        print(value)
        return EXIT_OK
    result = p.reduce(value)
    assignment = parse_substitutions(args.subst)
    if assignment:
        result = p.reduce(result.substitute(assignment))
    print(result)
    return EXIT_OK


def cmd_catalog(args) -> int:
    from src.catalog import catalog_get, catalog_names, catalog_run

    if args.name is None and not args.all:
        for name in catalog_names():
            print(f"{name:28s} {catalog_get(name).description}")
        return EXIT_OK

    names: List[str] = catalog_names() if args.all else [args.name]
    combined = VerificationReport(title="catalog")
    for name in names:
        details = VerificationReport(title=f"catalog {name} (details)")
        verdicts = catalog_run(name, details, degree_bound=args.degree_bound)
        combined.extend(verdicts)
        if not args.json:
            print(verdicts.summary())
            if args.verbose:
                print(details.summary())
                for note in catalog_get(name).notes:
                    print(f"  note: {note}")
    if args.json:
        print(combined.to_json())
    return EXIT_OK if combined.passed else EXIT_MISMATCH


def cmd_schema(args) -> int:
    print(json.dumps(VerificationReport.json_schema(), indent=2))
    return EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "build": cmd_build,
    "derive": cmd_derive,
    "reduce": cmd_reduce,
    "catalog": cmd_catalog,
    "schema": cmd_schema,
}


def run_command(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv and run one subcommand

    Returns:
        Exit status: 0 all expectations met, 1 mismatch, 2 usage or parse error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    verbose = getattr(args, "verbose", False)
    if verbose:
        settings.verbose = True
    if getattr(args, "budget", None):
        settings.rewrite_budget = args.budget

    try:
        return COMMANDS[args.command](args)
    except DSLError as exc:
        print(f"{getattr(args, 'file', '')}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EngineError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> int:
    return run_command(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
