"""Command-line front end.

    python cli.py poincare --n 9 --max-degree 66 --json
    python cli.py ecriture --n 9
    python cli.py nullcone test --form "9: 0,0,0,0,1,0,0,0,0,0"
    python cli.py catalog --n 9
    python cli.py eval --n 9 --expr "@j_4" --form "9: 1,2,3,4,5,6,7,8,9,10"
    python cli.py basis --n 9 --max-degree 14
    python cli.py hsop check --n 9 --set thm --membership-degrees 4,8,12
    python cli.py verify-lemmas

Exit status: 0 on success, 1 when a table differs from the reference, an hsop
is not certified or a lemma check fails, 2 on bad input.
"""
import argparse
import json
import logging
import sys

import pandas as pd

import reference
from algebra import RationalField, make_ring
from campaigns import InconclusiveError, certify_hsop, find_basic_invariants
from catalog import catalog_for
from forms import evaluate_expr, parse_form
from glossary import help_str
from lemmas import verify_lemma_expansions
from nullcone import is_nullform, root_multiplicity_max
from scenarios import call_scenarios, custom_scenario, scenarios_dict
from series import DegreeSequence, ecriture_minimale_search, poincare_series, to_rational
from settings import RunConfig, defaults
from utils.helper_functions import parse_int_list

LOGGER = logging.getLogger(__name__)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _output_options():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=["text", "json", "csv"], default="text", dest="output")
    parent.add_argument("--json", action="store_const", const="json", dest="output",
                        help="Shorthand for --format json")
    parent.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for progress, -vv for debugging output on stderr")
    return parent


def _run_options():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--seed", type=int, default=defaults["seed"])
    parent.add_argument("--prime", type=int, default=defaults["prime"])
    parent.add_argument("--threads", type=int, default=defaults["threads"])
    parent.add_argument("--cache-dir", default=None, help="Overrides $BINVAR_CACHE_DIR")
    parent.add_argument("--no-cache", action="store_true")
    return parent


def build_parser():
    output, run = _output_options(), _run_options()
    parser = argparse.ArgumentParser(prog="binvar", description="Invariants of binary forms")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("poincare", parents=[output], help=help_str("poincare"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=66)
    p.add_argument("--degrees", default=None, help="Denominator degrees, e.g. 4,8,10,12,12,14,16")
    p.add_argument("--check", action="store_true", help="Compare with the published nonic series")

    p = subparsers.add_parser("ecriture", parents=[output], help=help_str("ecriture"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed-degrees", default=None, help="A known hsop degree sequence bounding the search")
    p.add_argument("--check", action="store_true", help="Compare with the published nonic table")

    p = subparsers.add_parser("nullcone", help=help_str("nullcone"))
    nullcone = p.add_subparsers(dest="action", required=True)
    q = nullcone.add_parser("test", parents=[output], help="Largest root multiplicity of a rational form")
    q.add_argument("--n", type=int, default=None)
    q.add_argument("--form", required=True, help="'order: c0,c1,...,cn'")
    q.add_argument("--a-convention", action="store_true", help="Coefficients carry binomial weights")
    nullcone.add_parser("verify-lemmas", parents=[output], help=help_str("verify-lemmas"))

    p = subparsers.add_parser("catalog", parents=[output], help=help_str("catalog"))
    p.add_argument("--n", type=int, required=True)

    p = subparsers.add_parser("eval", parents=[output], help=help_str("eval"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--expr", required=True)
    p.add_argument("--form", required=True)
    p.add_argument("--ring", default="QQ", help="QQ, a prime p, or dual:p")
    p.add_argument("--a-convention", action="store_true")

    p = subparsers.add_parser("basis", parents=[output, run], help=help_str("basis"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--check", action="store_true", help="Compare d_m with the published nonic counts")

    p = subparsers.add_parser("hsop", help=help_str("hsop"))
    hsop = p.add_subparsers(dest="action", required=True)
    q = hsop.add_parser("check", parents=[output, run], help=help_str("hsop"))
    q.add_argument("--n", type=int, default=None)
    group = q.add_mutually_exclusive_group(required=True)
    group.add_argument("--set", choices=sorted(scenarios_dict), dest="candidate_set")
    group.add_argument("--expr", action="append", help="A candidate invariant; repeat for each")
    q.add_argument("--membership-degrees", default="", help="e.g. 4,8,12")

    subparsers.add_parser("verify-lemmas", parents=[output], help=help_str("verify-lemmas"))
    return parser


def _config(args, n):
    return RunConfig(n=n, prime=args.prime, seed=args.seed, threads=args.threads, output=args.output,
                     cache_dir=args.cache_dir, use_cache=not args.no_cache)


def _emit(args, payload, lines=None, frame=None):
    if args.output == "json":
        print(json.dumps(payload, indent=2))
    elif args.output == "csv" and frame is not None:
        print(frame.to_csv(index=False), end="")
    else:
        for line in lines if lines is not None else [json.dumps(payload, indent=2)]:
            print(line)


def run_poincare(args):
    table = poincare_series(args.n, args.max_degree)
    payload = {"n": args.n, "dims": table.as_dict()}
    lines = [f"{d:4d} {dim}" for d, dim in enumerate(table) if dim]
    if args.degrees:
        rational = to_rational(table, DegreeSequence.parse(args.degrees))
        payload["rational"] = rational.as_dict() if rational is not None else None
        lines.append(f"numerator over {args.degrees}: "
                     + (" ".join(map(str, rational.numerator)) if rational is not None else "rejected"))
    status = EXIT_OK
    if args.check:
        expected = reference.expand(reference.nonic_poincare, table.max_degree)
        if args.n != 9 or list(table) != expected:
            LOGGER.error("series differs from the published nonic series")
            status = EXIT_MISMATCH
    _emit(args, payload, lines, table.to_dataframe())
    return status


def run_ecriture(args):
    seed = DegreeSequence.parse(args.seed_degrees) if args.seed_degrees else None
    rows = ecriture_minimale_search(args.n, seed)
    published = sorted(rows, key=lambda r: r.numerator_degree)
    frame = pd.DataFrame([{"numerator_degree": r.numerator_degree, "degrees": str(r.denominator),
                           "product": r.denominator.product} for r in published])
    lines = [f"{r.numerator_degree:4d}  {r.denominator}" for r in published]
    status = EXIT_OK
    if args.check:
        found = [(r.numerator_degree, r.denominator.degrees) for r in published]
        if args.n != 9 or found != reference.nonic_ecritures:
            LOGGER.error("écritures differ from the published nonic table")
            status = EXIT_MISMATCH
    _emit(args, [r.as_dict() for r in rows], lines, frame)
    return status


def run_nullcone_test(args):
    f = parse_form(args.form, RationalField(), args.a_convention)
    if args.n is not None and f.order != args.n:
        raise ValueError(f"form has order {f.order}, not {args.n}")
    report = root_multiplicity_max(f)
    payload = dict(report.as_dict(), is_nullform=is_nullform(f))
    lines = [f"multiplicity {report.max_multiplicity} ({report.witness or 'no roots'}), "
             f"nullform: {payload['is_nullform']}"]
    _emit(args, payload, lines)
    return EXIT_OK


def run_catalog(args):
    catalog = catalog_for(args.n)
    rows = [{"name": e.name, "expr": e.expr.key, "order": e.order, "degree": e.degree, "hsop": e.hsop}
            for e in catalog.values()]
    lines = [f"{r['name']:6s} order {r['order']:2d} degree {r['degree']:2d}  {r['expr']}" for r in rows]
    _emit(args, rows, lines, pd.DataFrame(rows))
    return EXIT_OK


def run_eval(args):
    catalog = catalog_for(args.n)
    ring = make_ring(args.ring)
    expr = catalog.parse(args.expr)
    f = parse_form(args.form, ring, args.a_convention)
    value = evaluate_expr(expr, f, catalog)
    payload = {"expr": expr.key, "order": value.order, "value": value.text()}
    _emit(args, payload, [value.text()])
    return EXIT_OK


def run_basis(args):
    config = _config(args, args.n)
    table, basis = find_basic_invariants(args.n, args.max_degree, config, verbose=args.verbose > 0)
    lines = [f"d_{m} = {table.d(m)}  (dim {e.dim}, products {e.product_rank})"
             for m, e in table.entries.items() if e.dim]
    lines.append(f"total {table.total}")
    status = EXIT_OK
    if args.check:
        wrong = {m: table.d(m) for m in table.entries
                 if table.d(m) != reference.nonic_basic_counts.get(m, 0)}
        if args.n != 9 or wrong:
            LOGGER.error("d_m differs from the published counts at %s", sorted(wrong))
            status = EXIT_MISMATCH
    payload = dict(table.as_dict(), basis=[b.as_dict() for b in basis])
    _emit(args, payload, lines, table.to_dataframe())
    return status


def run_hsop_check(args):
    if args.candidate_set:
        scenario = call_scenarios(args.candidate_set)
        if args.n is not None and args.n != scenario.n:
            raise ValueError(f"set {args.candidate_set} is for n = {scenario.n}")
    else:
        scenario = custom_scenario(args.n or 9, args.expr)
    config = _config(args, scenario.n)
    report = certify_hsop(scenario.exprs, config, labels=scenario.labels,
                          membership_degrees=parse_int_list(args.membership_degrees),
                          verbose=args.verbose > 0)
    lines = [f"verdict: {report.verdict}"] + [f"  {reason}" for reason in report.reasons]
    if report.jacobian_ranks:
        lines.append(f"jacobian ranks: {report.jacobian_ranks}")
    for m in report.membership:
        lines.append(f"I_{m.degree}: dim {m.dim}, rank in H {m.rank}, a_{m.degree} = {m.a_i}")
    frame = pd.DataFrame([m.model_dump() for m in report.membership]) if report.membership else None
    _emit(args, report.model_dump(mode="json"), lines, frame)
    return EXIT_OK if report.verdict == "certified-at-sampling-level" else EXIT_MISMATCH


def run_verify_lemmas(args):
    report = verify_lemma_expansions()
    frame = report.to_dataframe()
    _emit(args, report.as_dict(), frame.to_string(index=False).splitlines(), frame)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def dispatch(args):
    if args.command == "nullcone":
        return run_nullcone_test(args) if args.action == "test" else run_verify_lemmas(args)
    if args.command == "hsop":
        return run_hsop_check(args)
    handlers = {
        "poincare": run_poincare,
        "ecriture": run_ecriture,
        "catalog": run_catalog,
        "eval": run_eval,
        "basis": run_basis,
        "verify-lemmas": run_verify_lemmas,
    }
    return handlers[args.command](args)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(getattr(args, "verbose", 0), 2)]
    logging.basicConfig(format="%(asctime)s %(name)s %(message)s", level=level, stream=sys.stderr)
    try:
        return dispatch(args)
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
