"""
Template Knots Command Line
Enumerate orbits of Lorenz-like templates, fingerprint their knots and run the
inclusion, composite and connected-sum checks
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import pandas as pd
from pydantic import ValidationError

from utils.braids import simplify_braid
from utils.cache import (
    CatalogModel,
    CompositeSearchModel,
    InclusionChainModel,
    NegativeTwistCompositesModel,
    SumGridModel,
    WitnessModel,
    build_records,
    cache_path,
    read_records,
    resolve_cache_dir,
    update_cache,
    write_records,
    write_report,
)
from utils.diagrams import emit_diagram
from utils.exceptions import InternalInvariantViolation, InvalidTemplate, MixedSigns, TemplateKnotError
from utils.invariants import OrbitKnot, alexander_genus_bound, genus_bennequin
from utils.jones import kauffman_oracle
from utils.knot_standards import KnotStandards
from utils.logging_setup import configure_logging, logging_progress
from utils.orbits import TemplateSpec, canonical_word
from utils.report_tables import (
    OrbitCensusAnalyzer,
    composite_summary,
    inclusion_summary,
    records_to_frame,
    sum_grid_summary,
)
from utils.theorem_checks import (
    PrimeCatalog,
    build_prime_catalog,
    composites_for_negative_twists,
    find_composites,
    negative_braid_witness,
    verify_connected_sum,
    verify_inclusion,
    verify_inclusion_chain,
    verify_odd_twist_inclusions,
    verify_sum_grid,
)

logger = logging.getLogger('template_knots')

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


def _budgets(args, **extra) -> dict:
    return KnotStandards.get_budgets(jones_strands=args.jones_budget, **extra)


# ---------------------------------------------------------------------- #
# argument types (bad input fails at parse time with exit code 2)
# ---------------------------------------------------------------------- #

def _template_arg(text: str) -> TemplateSpec:
    try:
        return TemplateSpec.parse(text)
    except InvalidTemplate as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _optional_template_arg(text: str) -> TemplateSpec | None:
    return _template_arg(text) if text.strip() else None


def _word_arg(text: str):
    try:
        return canonical_word(text)
    except TemplateKnotError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _positive_arg(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _negative_arg(text: str) -> int:
    value = int(text)
    if value >= 0:
        raise argparse.ArgumentTypeError(f"expected a negative twist count, got {value}")
    return value


def _print_table(df: pd.DataFrame):
    if df.empty:
        print("(no rows)")
    else:
        print(df.to_string(index=False))


def _load_or_build_catalog(args) -> PrimeCatalog:
    if getattr(args, 'catalog', None):
        try:
            model = CatalogModel.model_validate_json(Path(args.catalog).read_text(encoding='utf-8'))
        except (OSError, ValidationError) as exc:
            raise TemplateKnotError(f"cannot read catalog {args.catalog}: {exc}") from exc
        return PrimeCatalog.from_model(model)
    return build_prime_catalog(args.catalog_len, args.jones_budget, args.workers, logging_progress())


# ---------------------------------------------------------------------- #
# commands
# ---------------------------------------------------------------------- #

def cmd_enumerate(args) -> int:
    spec = args.template
    records = build_records(spec, args.max_len, args.jones_budget, args.workers, logging_progress())
    if args.output:
        write_records(args.output, records)
    else:
        cache_dir = resolve_cache_dir(args.cache_dir)
        if cache_dir is None:
            raise TemplateKnotError(
                f"no output: pass --output, --cache-dir or set {KnotStandards.CACHE_DIR_ENV}")
        path = update_cache(cache_dir, spec, records)
        logger.info("Cache for %s now at %s", spec.label, path)
    print(f"{len(records)} orbits of {spec.label} up to length {args.max_len}")
    return EXIT_OK


def cmd_invariants(args) -> int:
    spec, word = args.template, args.word
    knot = OrbitKnot(word, spec, args.jones_budget)
    fp = knot.fingerprint()
    try:
        genus = genus_bennequin(knot.simplified)
    except MixedSigns:
        genus = None
    document = {
        'template': spec.label,
        'word': word.letters,
        'braid': {'strands': knot.braid.strands, 'gens': knot.braid.to_text()},
        'simplified': {'strands': knot.simplified.strands, 'gens': knot.simplified.to_text()},
        'fingerprint': fp.to_dict(),
        'alexander_text': fp.alexander.pretty(),
        'jones_text': fp.jones.pretty() if fp.jones is not None else None,
        'name': KnotStandards.get_knot_name(fp.alexander, fp.signature),
        'genus_bennequin': genus,
        'alexander_genus_bound': alexander_genus_bound(fp.alexander),
        'budgets': _budgets(args),
    }
    if args.oracle:
        oracle = kauffman_oracle(knot.simplified, args.oracle_budget)
        document['oracle_agrees'] = fp.jones is None or oracle == fp.jones
        document['oracle_jones'] = oracle.to_pairs()
    print(json.dumps(document, indent=2))
    return EXIT_OK


def cmd_verify_inclusion(args) -> int:
    report = verify_inclusion(args.sub, args.super, args.sub_len, args.search_len, args.jones_budget,
                              args.evidence, args.workers, logging_progress())
    if args.output:
        write_report(args.output, report.to_model())
    _print_table(inclusion_summary([report]))
    for word in report.unmatched:
        print(f"unmatched: {word}")
    return EXIT_OK if report.verified else EXIT_FALSE


def cmd_verify_chain(args) -> int:
    reports = verify_inclusion_chain(args.n_values, args.sub_len, args.search_len, args.jones_budget,
                                     args.evidence, args.workers, logging_progress())
    if args.output:
        model = InclusionChainModel(links=[r.to_model() for r in reports],
                                    budgets=_budgets(args, sub_max_len=args.sub_len, super_search_len=args.search_len))
        write_report(args.output, model)
    _print_table(inclusion_summary(reports))
    return EXIT_OK if all(r.verified for r in reports) else EXIT_FALSE


def cmd_verify_odd_twist(args) -> int:
    reports = verify_odd_twist_inclusions(args.n, args.sub_len, args.search_len, args.jones_budget,
                                          args.evidence, args.workers, logging_progress())
    if args.output:
        model = InclusionChainModel(links=[r.to_model() for r in reports],
                                    budgets=_budgets(args, sub_max_len=args.sub_len, super_search_len=args.search_len))
        write_report(args.output, model)
    _print_table(inclusion_summary(reports))
    return EXIT_OK if all(r.verified for r in reports) else EXIT_FALSE


def _negative_twist_composites(args, catalog: PrimeCatalog) -> int:
    max_len = args.max_len or KnotStandards.get_budget('negative_twist_search_len')
    found = composites_for_negative_twists(args.negative_twists, max_len, catalog, args.jones_budget,
                                           args.evidence, logging_progress())
    if args.output:
        model = NegativeTwistCompositesModel(
            max_len=max_len, catalog_len=catalog.max_len,
            budgets=_budgets(args, max_len=max_len, catalog_len=catalog.max_len),
            composites={n: r.to_model() if r is not None else None for n, r in found.items()})
        write_report(args.output, model)
    _print_table(composite_summary([r for r in found.values() if r is not None]))
    for n, report in found.items():
        if report is None:
            print(f"L(0,{n}): no composite up to length {max_len}")
    return EXIT_OK if all(r is not None for r in found.values()) else EXIT_FALSE


def cmd_find_composites(args) -> int:
    catalog = _load_or_build_catalog(args)
    if args.negative_twists:
        return _negative_twist_composites(args, catalog)
    spec = args.template
    max_len = args.max_len or KnotStandards.get_budget('composite_search_len')
    reports = find_composites(spec, max_len, catalog, args.jones_budget, args.evidence,
                              limit=args.limit, progress_callback=logging_progress())
    if args.output:
        model = CompositeSearchModel(template=spec.label, max_len=max_len, catalog_len=catalog.max_len,
                                     budgets=_budgets(args, max_len=max_len, catalog_len=catalog.max_len),
                                     composites=[r.to_model() for r in reports])
        write_report(args.output, model)
    _print_table(composite_summary(reports))
    if args.expect_some:
        return EXIT_OK if reports else EXIT_FALSE
    if args.expect_none:
        return EXIT_OK if not reports else EXIT_FALSE
    return EXIT_OK


def cmd_verify_sum(args) -> int:
    target = args.target
    witness = verify_connected_sum(args.u, args.v, target, args.search_len, args.jones_budget, args.evidence)
    if args.output:
        write_report(args.output, witness.to_model(_budgets(args, search_len=args.search_len)))
    if witness.found:
        print(f"{args.u} # {args.v} found in {target.label} as {witness.word} ({witness.evidence_level})")
        return EXIT_OK
    print(f"{args.u} # {args.v} not found in {target.label} up to length {witness.search_len}")
    return EXIT_FALSE


def cmd_sum_grid(args) -> int:
    witnesses = verify_sum_grid(args.max_factor_len, args.target, args.search_len, args.jones_budget,
                                args.evidence, logging_progress())
    if args.output:
        budgets = _budgets(args, sum_factor_len=args.max_factor_len, sum_search_len=args.search_len)
        model = SumGridModel(target=args.target.label, max_factor_len=args.max_factor_len,
                             search_len=args.search_len, budgets=budgets,
                             pairs=[w.to_model() for w in witnesses])
        write_report(args.output, model)
    _print_table(sum_grid_summary(witnesses))
    found = sum(w.found for w in witnesses)
    print(f"{found} of {len(witnesses)} sums found in {args.target.label} up to length {args.search_len}")
    return EXIT_OK if found == len(witnesses) else EXIT_FALSE


def cmd_emit_diagram(args) -> int:
    spec, word = args.template, args.word
    knot = OrbitKnot(word, spec, args.jones_budget)
    braid = simplify_braid(knot.braid) if args.simplify else knot.braid
    text = emit_diagram(braid, args.output, args.format, title=f"{word} on {spec.label}")
    if args.format == 'text':
        print(text, end='')
    return EXIT_OK


def cmd_build_catalog(args) -> int:
    catalog = build_prime_catalog(args.max_len, args.jones_budget, args.workers, logging_progress())
    model = catalog.to_model()
    model.budgets = _budgets(args, max_len=args.max_len)
    if args.output:
        write_report(args.output, model)
    for name in catalog.names():
        print(name)
    return EXIT_OK


def cmd_census(args) -> int:
    spec = args.template
    records = []
    cache_dir = resolve_cache_dir(args.cache_dir)
    if cache_dir is not None:
        records = [r for r in read_records(cache_path(cache_dir, spec)) if len(r.word) <= args.max_len]
    if not records:
        records = build_records(spec, args.max_len, args.jones_budget, args.workers, logging_progress())
    analyzer = OrbitCensusAnalyzer(records_to_frame(records))
    _print_table(analyzer.get_length_analysis())
    print()
    _print_table(analyzer.get_knot_type_summary())
    if args.output:
        analyzer.get_length_analysis().to_csv(args.output, index=False)
    return EXIT_OK


def cmd_witness(args) -> int:
    spec, against = args.template, args.against
    witnesses = negative_braid_witness(spec, args.max_len, args.jones_budget, against, args.search_len)
    if args.output:
        model = WitnessModel(template=spec.label, max_len=args.max_len,
                             budgets=_budgets(args, search_len=args.search_len),
                             witnesses=[w.to_dict() for w in witnesses])
        write_report(args.output, model)
    for w in witnesses:
        where = f" found in {against.label} as {w.found_in}" if w.found_in else ""
        print(f"{w.word}: braid [{w.braid.to_text()}] on {w.braid.strands} strands{where}")
    if not witnesses:
        return EXIT_FALSE
    return EXIT_OK if all(w.found_in is None for w in witnesses) else EXIT_FALSE


COMMANDS = {
    'enumerate': cmd_enumerate,
    'invariants': cmd_invariants,
    'verify-inclusion': cmd_verify_inclusion,
    'verify-chain': cmd_verify_chain,
    'verify-odd-twist': cmd_verify_odd_twist,
    'find-composites': cmd_find_composites,
    'verify-sum': cmd_verify_sum,
    'sum-grid': cmd_sum_grid,
    'emit-diagram': cmd_emit_diagram,
    'build-catalog': cmd_build_catalog,
    'census': cmd_census,
    'witness': cmd_witness,
}


def build_parser() -> argparse.ArgumentParser:
    budgets = KnotStandards.BUDGETS
    parser = argparse.ArgumentParser(
        prog='template_knots',
        description="Knots carried by the Lorenz-like templates L(m,n): enumeration, invariants and checks",
    )
    parser.add_argument('--verbose', '-v', action='store_true', help="Debug logging")
    parser.add_argument('--cache-dir', default=None,
                        help=f"Fingerprint cache directory (default: ${KnotStandards.CACHE_DIR_ENV})")
    parser.add_argument('--jones-budget', type=_positive_arg, default=budgets['jones_strands'],
                        help="Largest strand count for the Temperley-Lieb Jones computation")
    parser.add_argument('--workers', type=_positive_arg, default=1, help="Process pool size for fingerprint batches")
    evidence = dict(choices=KnotStandards.EVIDENCE_LEVELS, default='full_jones',
                    help="Strongest evidence level to attempt")
    template = dict(type=_template_arg, required=True, help="'m,n' or '~m,n'")
    word = dict(type=_word_arg, required=True, help="Orbit word over {x, y}, any rotation")
    subparsers = parser.add_subparsers(dest='command', required=True)

    p = subparsers.add_parser('enumerate', help="Fingerprint every orbit up to a length (JSON Lines)")
    p.add_argument('--template', **template)
    p.add_argument('--max-len', type=_positive_arg, required=True)
    p.add_argument('--output', help="JSON Lines file (default: the cache directory)")

    p = subparsers.add_parser('invariants', help="Print the fingerprint of one orbit")
    p.add_argument('--template', **template)
    p.add_argument('--word', **word)
    p.add_argument('--oracle', action='store_true', help="Cross-check Jones with the brute-force state sum")
    p.add_argument('--oracle-budget', type=_positive_arg, default=budgets['oracle_crossings'])

    p = subparsers.add_parser('verify-inclusion', help="Check that every knot of --sub appears in --super")
    p.add_argument('--sub', **template)
    p.add_argument('--super', **template)
    p.add_argument('--sub-len', type=_positive_arg, default=budgets['inclusion_sub_len'])
    p.add_argument('--search-len', type=_positive_arg, default=budgets['inclusion_search_len'])
    p.add_argument('--evidence', **evidence)
    p.add_argument('--output')

    p = subparsers.add_parser('verify-chain', help="Check L(0,n) inside L(0,n-2) for several n")
    p.add_argument('--n-values', type=int, nargs='+', default=[2, 1, 0, -1, -2])
    p.add_argument('--sub-len', type=_positive_arg, default=budgets['inclusion_sub_len'])
    p.add_argument('--search-len', type=_positive_arg, default=budgets['inclusion_search_len'])
    p.add_argument('--evidence', **evidence)
    p.add_argument('--output')

    p = subparsers.add_parser('verify-odd-twist', help="Check L(0,-4) and ~L(1,-(2n-1)) inside L(0,-1)")
    p.add_argument('--n', type=_positive_arg, default=1)
    p.add_argument('--sub-len', type=_positive_arg, default=budgets['odd_twist_sub_len'])
    p.add_argument('--search-len', type=_positive_arg, default=budgets['odd_twist_search_len'])
    p.add_argument('--evidence', **evidence)
    p.add_argument('--output')

    p = subparsers.add_parser('find-composites', help="Orbits whose fingerprint is a product of two catalog knots")
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument('--template', type=_template_arg)
    where.add_argument('--negative-twists', type=_negative_arg, nargs='+', metavar='N',
                       help="First composite on each L(0,N), N < 0")
    p.add_argument('--max-len', type=_positive_arg, default=None,
                   help=f"Search length (default: {budgets['composite_search_len']}, "
                        f"{budgets['negative_twist_search_len']} with --negative-twists)")
    p.add_argument('--catalog-len', type=_positive_arg, default=budgets['catalog_len'])
    p.add_argument('--catalog', help="Catalog JSON from build-catalog instead of building one")
    p.add_argument('--limit', type=_positive_arg, default=None)
    p.add_argument('--evidence', **evidence)
    expect = p.add_mutually_exclusive_group()
    expect.add_argument('--expect-some', action='store_true', help="Exit 1 when nothing is found")
    expect.add_argument('--expect-none', action='store_true', help="Exit 1 when anything is found")
    p.add_argument('--output')

    p = subparsers.add_parser('verify-sum', help="Find the connected sum of u on L(0,2) and v on ~L(0,2)")
    p.add_argument('--u', **word)
    p.add_argument('--v', **word)
    p.add_argument('--target', type=_template_arg, default='0,-2')
    p.add_argument('--search-len', type=_positive_arg, default=budgets['sum_search_len'])
    p.add_argument('--evidence', **evidence)
    p.add_argument('--output')

    p = subparsers.add_parser('sum-grid', help="verify-sum over every pair of nontrivial short factors")
    p.add_argument('--max-factor-len', type=_positive_arg, default=budgets['sum_factor_len'])
    p.add_argument('--target', type=_template_arg, default='0,-2')
    p.add_argument('--search-len', type=_positive_arg, default=budgets['sum_search_len'])
    p.add_argument('--evidence', **evidence)
    p.add_argument('--output')

    p = subparsers.add_parser('emit-diagram', help="Draw the braid of one orbit")
    p.add_argument('--template', **template)
    p.add_argument('--word', **word)
    p.add_argument('--format', choices=('svg', 'text'), default='svg')
    p.add_argument('--simplify', action='store_true', help="Draw the simplified braid")
    p.add_argument('--output', required=True)

    p = subparsers.add_parser('build-catalog', help="Fingerprint the Lorenz knots and their mirrors")
    p.add_argument('--max-len', type=_positive_arg, default=budgets['catalog_len'])
    p.add_argument('--output')

    p = subparsers.add_parser('census', help="Per-length orbit census of a template")
    p.add_argument('--template', **template)
    p.add_argument('--max-len', type=_positive_arg, default=budgets['census_len'])
    p.add_argument('--output', help="CSV of the per-length table")

    p = subparsers.add_parser('witness', help="Orbits with all-negative braids and nontrivial knots")
    p.add_argument('--template', type=_template_arg, default='0,-2')
    p.add_argument('--max-len', type=_positive_arg, default=4)
    p.add_argument('--against', type=_optional_template_arg, default='0,0',
                   help="Template to search each witness in ('' to skip)")
    p.add_argument('--search-len', type=_positive_arg, default=budgets['inclusion_search_len'])
    p.add_argument('--output')
    return parser


def _remove_partial(path, existed: bool):
    if path and not existed:
        Path(path).unlink(missing_ok=True)


def main(argv=None) -> int:
    """Run one verb; argument errors exit 2 from argparse, other ValueErrors are internal"""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    output = getattr(args, 'output', None)
    existed = bool(output) and Path(output).exists()
    try:
        return COMMANDS[args.command](args)
    except InternalInvariantViolation:
        _remove_partial(output, existed)
        raise
    except TemplateKnotError as exc:
        _remove_partial(output, existed)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BaseException:
        _remove_partial(output, existed)
        raise


if __name__ == '__main__':
    sys.exit(main())
