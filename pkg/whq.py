"""
WHQ Engine - Command Line Interface

Checks, synthesizes, classifies and transforms weak Hopf (co)quasigroup
structure files.

Exit codes: 0 when every check passes, 1 on a mathematical failure,
2 on usage, file or format errors.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

sys.path.insert(0, str(Path(__file__).parent))

from config.settings import settings
from src.dsl import eval_expr, parse_expr, print_expr
from src.errors import WHQError
from src.exact import parse_field
from src.examples import build_example, example_names, resolve_name
from src.galois import check_galois_identities, check_prop27
from src.models import SuiteReport, Verdict
from src.moncat import mor_equal
from src.projections import check_projection_identities
from src.splitting import check_lemma_diagrams, check_omega_identities
from src.structure import WeakStructure, dualize, perturb, validate_premises
from src.structure_io import dumps, load_structure, matrix_literals, save_structure
from src.synthesis import classify, synthesize_antipode, verify_axioms

logger = logging.getLogger("whq")

EXIT_OK, EXIT_FAILURE, EXIT_ERROR = 0, 1, 2
SUITES = ("premises", "projections", "omega", "prop27", "axioms", "all")


def setup_logging() -> None:
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper(), logging.WARNING),
        format="%(asctime)s - %(levelname)s - %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


def banner(title: str) -> None:
    logger.info("=" * 70)
    logger.info(title)
    logger.info("=" * 70)


def _axioms(S: WeakStructure, workers: int) -> SuiteReport:
    if S.antipode is None:
        return SuiteReport(suite="axioms", notes=["no antipode stored; run `synthesize` first"], skipped=True)
    return verify_axioms(S, workers)


SUITE_RUNNERS: Dict[str, List[Callable[[WeakStructure, int], SuiteReport]]] = {
    "premises": [validate_premises],
    "projections": [check_projection_identities],
    "omega": [check_omega_identities, check_lemma_diagrams, check_galois_identities],
    "prop27": [check_prop27],
    "axioms": [_axioms],
}


def _print_report(report: SuiteReport) -> None:
    status = "SKIPPED" if report.skipped else ("PASS" if report.passed else "FAIL")
    print(f"[{report.suite}] {status}")
    for note in report.notes:
        print(f"  note: {note}")
    for line in report.lines:
        detail = f" ({line.detail})" if line.detail else ""
        print(f"  {line.id}: {'holds' if line.holds else 'FAILS'}{detail}")


def _write_json(path: Optional[str], payload) -> None:
    if path:
        Path(path).write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        logger.info(f"wrote {path}")


def cmd_check(args: argparse.Namespace) -> int:
    S = load_structure(args.file)
    names = [s for s in SUITES if s != "all"] if args.suite == "all" else [args.suite]
    reports: List[SuiteReport] = []
    for name in names:
        banner(f"SUITE {name.upper()} on {S!r}")
        for runner in SUITE_RUNNERS[name]:
            report = runner(S, settings.max_workers)
            _print_report(report)
            reports.append(report)
    _write_json(args.json, [r.model_dump(mode="json") for r in reports])
    # a skipped suite is not a pass
    ok = all(r.passed for r in reports)
    return EXIT_OK if ok else EXIT_FAILURE


def cmd_synthesize(args: argparse.Namespace) -> int:
    S = load_structure(args.file)
    banner(f"SYNTHESIZE {S!r}")
    result = synthesize_antipode(S, settings.max_workers)
    print(f"status: {result.status.value}" + (f" ({result.failed_axiom})" if result.failed_axiom else ""))
    for line in result.evidence:
        if not line.holds or line.detail:
            print(f"  {line.id}: {'holds' if line.holds else 'FAILS'}" + (f" ({line.detail})" if line.detail else ""))
    if not result.synthesized:
        return EXIT_FAILURE
    for row in matrix_literals(result.antipode.matrix):
        print("  " + " ".join(row))
    if args.out:
        save_structure(S.with_antipode(result.antipode), args.out)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    S = load_structure(args.file)
    banner(f"CLASSIFY {S!r}")
    outcome = classify(S, settings.max_workers)
    print(f"verdict: {outcome.verdict.value}")
    print(f"route: {outcome.route}")
    if outcome.reason:
        print(f"reason: {outcome.reason}")
    if outcome.dual_verdict is not None:
        print(f"dual verdict: {outcome.dual_verdict.value}")
    for flag, value in outcome.flags.model_dump().items():
        print(f"  {flag}: {value}")
    _write_json(args.json, outcome.to_report().model_dump(mode="json"))
    return EXIT_FAILURE if outcome.verdict is Verdict.NOT_RECOGNIZED else EXIT_OK


def cmd_dualize(args: argparse.Namespace) -> int:
    S = load_structure(args.file)
    save_structure(dualize(S), args.out)
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    S = load_structure(args.file)
    expr = parse_expr(args.expr)
    value = eval_expr(S, expr)
    if args.equals is None:
        print(f"{print_expr(expr)} : H^{value.src_arity} -> H^{value.dst_arity}")
        for row in matrix_literals(value.matrix):
            print("  " + " ".join(row))
        return EXIT_OK
    other = parse_expr(args.equals)
    equal = mor_equal(value, eval_expr(S, other))
    print(f"{print_expr(expr)} {'==' if equal else '!='} {print_expr(other)}")
    return EXIT_OK if equal else EXIT_FAILURE


def cmd_example(args: argparse.Namespace) -> int:
    name = resolve_name(args.name, args.group)
    field = parse_field(str(args.prime)) if args.prime else parse_field(settings.default_field)
    S = build_example(name, field)
    if args.out:
        save_structure(S, args.out)
    else:
        sys.stdout.write(dumps(S))
    return EXIT_OK


def cmd_perturb(args: argparse.Namespace) -> int:
    S = load_structure(args.file)
    save_structure(perturb(S, args.target, args.seed), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="whq", description="Exact checks for weak Hopf (co)quasigroups")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="evaluate identity suites")
    p.add_argument("file")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--json", help="write the reports as JSON")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("synthesize", help="build an antipode from the fusion maps")
    p.add_argument("file")
    p.add_argument("--out", help="write the structure with the synthesized antipode")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("classify", help="Hopf algebra / weak Hopf / (co)quasigroup verdict")
    p.add_argument("file")
    p.add_argument("--json", help="write the classification as JSON")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("dualize", help="transpose every structure map")
    p.add_argument("file")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_dualize)

    p = sub.add_parser("eval", help="evaluate a morphism expression")
    p.add_argument("file")
    p.add_argument("--expr", required=True)
    p.add_argument("--equals", help="second expression to compare against")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("example", help="emit a bundled example")
    p.add_argument("name", choices=["group"] + example_names())
    p.add_argument("--group", help="group for the `group` family (z2, z3, s3)")
    p.add_argument("--prime", type=int, help="build over GF(p) instead of the default field")
    p.add_argument("--out")
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("perturb", help="change one seeded structure constant")
    p.add_argument("file")
    p.add_argument("--target", choices=["mult", "comult", "unit", "counit"], required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_perturb)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    setup_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (WHQError, OSError, ValidationError, ValueError) as e:
        logger.error(f"{args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
