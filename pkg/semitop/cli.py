#!/usr/bin/env python3
"""
Command-line interface for semitop
Classify, partition, propagate and check finite semitopologies from documents or fixtures
"""

import argparse
import json
import logging
import random
import sys
import traceback
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from semitop.config import configure, get_settings, load_settings
from semitop.consensus.value_assignment import ValueAssignment, propagate
from semitop.errors import DocumentError, FamilyTruncated, SemiTopologyError
from semitop.gallery.fixture_library import FixtureLibrary
from semitop.gallery.random_generator import random_semitopology
from semitop.interchange import document as documents
from semitop.interchange.dot_export import as_graphviz
from semitop.topology.classification import classify, classify_all
from semitop.topology.pointset import PointSet
from semitop.topology.relations import maximal_topen_partition
from semitop.topology.semitopology import SemiTopology
from semitop.verification.oracle import OracleSpace, compare_with_oracle
from semitop.verification.theorem_suite import list_theorems, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def setup_logging(verbose: bool = False, log_file: Optional[str] = None) -> None:
    """Setup logging configuration."""
    level = logging.DEBUG if verbose else logging.WARNING
    handlers: List[logging.Handler] = [logging.StreamHandler()]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


def emit(args: argparse.Namespace, payload: Dict[str, Any], text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def resolve_space(source: str, params: Sequence[int] = ()
                  ) -> Tuple[SemiTopology, Optional[ValueAssignment]]:
    """A document path if one exists, otherwise a gallery fixture name."""
    if Path(source).is_file():
        return documents.load(source)
    return FixtureLibrary().build(source, params), None


def parse_set(space: SemiTopology, text: str) -> PointSet:
    labels = [label.strip() for label in text.split(',') if label.strip()]
    return space.set_of(labels)


def _flag(value: Optional[bool]) -> str:
    if value is None:
        return '?'
    return 'yes' if value else 'no'


# Commands

def cmd_classify(args: argparse.Namespace) -> int:
    space, _ = resolve_space(args.source, args.params)
    if args.point is not None:
        rows = [classify(space, space.index_of(args.point))]
    else:
        rows = list(classify_all(space))
    payload = {'space': space.name, 'points': [row.to_dict(space) for row in rows]}

    lines = [f"{'point':<8} {'*p':<20} {'K(p)':<20} regular weakly quasi unconflicted hypertransitive"]
    for row in rows:
        data = row.to_dict(space)
        lines.append(
            f"{data['point']:<8} {space.format_set(row.intertwined):<20} "
            f"{space.format_set(row.community):<20} {_flag(data['regular']):<7} "
            f"{_flag(data['weakly_regular']):<6} {_flag(data['quasiregular']):<5} "
            f"{_flag(data['unconflicted']):<11} {_flag(data['hypertransitive'])}"
        )
    emit(args, payload, '\n'.join(lines))
    return EXIT_OK


def cmd_partition(args: argparse.Namespace) -> int:
    space, _ = resolve_space(args.source, args.params)
    partition = maximal_topen_partition(space)
    lines = [f"Maximal topens: {len(partition.topens)}"]
    lines += [f"  {space.format_set(t)}" for t in partition.topens]
    lines.append(f"Residue: {space.format_set(partition.residue)}")
    emit(args, {'space': space.name, **partition.to_dict(space)}, '\n'.join(lines))
    return EXIT_OK


def cmd_closure(args: argparse.Namespace) -> int:
    space, _ = resolve_space(args.source, args.params)
    s = parse_set(space, args.set)
    result = space.closure(s)
    emit(args, {'set': space.labels_of(s), 'closure': space.labels_of(result)},
         space.format_set(result))
    return EXIT_OK


def cmd_interior(args: argparse.Namespace) -> int:
    space, _ = resolve_space(args.source, args.params)
    s = parse_set(space, args.set)
    result = space.interior(s)
    emit(args, {'set': space.labels_of(s), 'interior': space.labels_of(result)},
         space.format_set(result))
    return EXIT_OK


def cmd_propagate(args: argparse.Namespace) -> int:
    space, _ = resolve_space(args.source, args.params)
    seed = parse_set(space, args.seed)
    result = propagate(space, seed)
    lines = [
        f"Seed {space.format_set(seed)} agrees on {args.value}",
        f"  grade 2: {space.format_set(result.committed_grade2)}",
        f"  grade 1: {space.format_set(result.committed_grade1)}",
        f"  rounds:  {result.rounds}",
    ]
    emit(args, result.to_dict(space, args.value), '\n'.join(lines))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    space, _ = resolve_space(args.source, args.params)
    report = run_suite(space, args.theorem, seed=args.seed)
    lines = []
    for result in report.results:
        status = 'SKIP' if result.skipped else ('PASS' if result.passed else 'FAIL')
        lines.append(f"[{status}] {result.name}")
        lines += [f"    {v}" for v in result.violations]
    lines.append(f"{len(report.results) - len(report.failures)}/{len(report.results)} passed")
    emit(args, report.to_dict(), '\n'.join(lines))
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_gallery(args: argparse.Namespace) -> int:
    library = FixtureLibrary()
    if args.list or not args.name:
        names = library.list_fixtures()
        text = '\n'.join(f"{name:<24} {library.get_entry(name).description}" for name in names)
        emit(args, {'fixtures': names}, text)
        return EXIT_OK

    space = library.build(args.name, args.params)
    document = documents.from_space(space)
    if args.output:
        path = documents.save(space, args.output, fmt=args.format)
        emit(args, {'fixture': args.name, 'output': str(path)}, f"Wrote {path}")
    elif args.format == 'yaml':
        print(documents.to_yaml(document), end='')
    else:
        print(documents.to_json(document), end='')
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    space, _ = resolve_space(args.source, args.params)
    source = as_graphviz(space, palette=get_settings().dot_palette)
    if args.output:
        Path(args.output).write_text(source, encoding='utf-8')
        print(f"Wrote {args.output}")
    else:
        print(source, end='')
    return EXIT_OK


def cmd_oracle_diff(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    checked = skipped = 0
    for iteration in range(args.iters):
        n = rng.randint(1, args.n)
        k = rng.randint(0, args.k)
        space = random_semitopology(n, k, rng.randrange(1 << 31))
        try:
            reports = compare_with_oracle(space, seed=iteration, oracle=OracleSpace(space))
        except FamilyTruncated as e:
            logger.warning(f"Skipping {space.name}: {e}")
            skipped += 1
            continue
        checked += 1
        disagreement = next((r for r in reports if not r.agree), None)
        if disagreement is not None:
            path = documents.save(space, args.reproducer)
            emit(args, {'agree': False, 'iteration': iteration, 'reproducer': str(path),
                        'report': disagreement.to_dict(space)},
                 f"Disagreement at iteration {iteration}: {disagreement.predicate}"
                 f"({disagreement.argument}) fast={disagreement.fast} "
                 f"oracle={disagreement.oracle}\nReproducer written to {path}")
            return EXIT_FAILED
    emit(args, {'agree': True, 'checked': checked, 'skipped': skipped},
         f"Fast paths agree with the oracle on {checked} instances ({skipped} skipped)")
    return EXIT_OK


COMMANDS = {
    'classify': cmd_classify,
    'partition': cmd_partition,
    'closure': cmd_closure,
    'interior': cmd_interior,
    'propagate': cmd_propagate,
    'check': cmd_check,
    'gallery': cmd_gallery,
    'export-dot': cmd_export_dot,
    'oracle-diff': cmd_oracle_diff,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='semitop',
        description="Analyse finite semitopologies: topens, regularity and value propagation"
    )
    parser.add_argument('--verbose', '-v', action='store_true', help='Enable verbose logging')
    parser.add_argument('--json', action='store_true', help='Machine-readable JSON output')
    parser.add_argument('--config', help='YAML settings file')
    parser.add_argument('--log-file', help='Also write log records to this file')

    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    def with_source(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument('source', help='Document path or gallery fixture name')
        sub.add_argument('--params', type=int, nargs='*', default=[],
                         help='Integer parameters for parametric fixtures')
        return sub

    classify_cmd = with_source('classify', 'Per-point classification table')
    classify_cmd.add_argument('--point', help='Only this point label')

    with_source('partition', 'Maximal topens and residue')

    closure_cmd = with_source('closure', 'Closure of a set')
    closure_cmd.add_argument('--set', required=True, help='Comma-separated point labels')

    interior_cmd = with_source('interior', 'Interior of a set')
    interior_cmd.add_argument('--set', required=True, help='Comma-separated point labels')

    propagate_cmd = with_source('propagate', 'Propagate a value from an open seed')
    propagate_cmd.add_argument('--seed', required=True, help='Comma-separated open seed labels')
    propagate_cmd.add_argument('--value', default='A', help='Value agreed by the seed')

    check_cmd = with_source('check', 'Run the theorem suite')
    check_cmd.add_argument('--theorem', action='append', choices=list_theorems(),
                           help='Run only this theorem (repeatable)')
    check_cmd.add_argument('--seed', type=int, default=0, help='Sampling seed')

    gallery_cmd = subparsers.add_parser('gallery', help='Build or list gallery fixtures')
    gallery_cmd.add_argument('name', nargs='?', help='Fixture name')
    gallery_cmd.add_argument('--params', type=int, nargs='*', default=[],
                             help='Integer parameters for parametric fixtures')
    gallery_cmd.add_argument('--list', action='store_true', help='List fixture names')
    gallery_cmd.add_argument('--output', help='Write the document to this file')
    gallery_cmd.add_argument('--format', choices=['json', 'yaml'], default='json',
                             help='Document format')

    dot_cmd = with_source('export-dot', 'Graphviz rendering')
    dot_cmd.add_argument('--output', help='Write DOT source to this file')

    oracle_cmd = subparsers.add_parser('oracle-diff', help='Fuzz fast paths against the oracle')
    oracle_cmd.add_argument('--n', type=int, default=6, help='Maximum number of points')
    oracle_cmd.add_argument('--k', type=int, default=8, help='Maximum number of generators')
    oracle_cmd.add_argument('--iters', type=int, default=None, help='Number of instances')
    oracle_cmd.add_argument('--seed', type=int, default=0, help='Random seed')
    oracle_cmd.add_argument('--reproducer', default='oracle_reproducer.json',
                            help='Where to dump a disagreeing instance')
    return parser


def report_error(args: argparse.Namespace, error: SemiTopologyError) -> None:
    if args.json:
        details = error.to_dict() if isinstance(error, DocumentError) else {
            'type': type(error).__name__, 'message': str(error), 'field': None,
        }
        print(json.dumps({'error': details}, indent=2, ensure_ascii=False))
    else:
        print(f"Error: {error}", file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    setup_logging(args.verbose, args.log_file)

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    try:
        configure(load_settings(args.config))
        if args.command == 'oracle-diff':
            if args.iters is None:
                args.iters = get_settings().default_oracle_iters
            if not 1 <= args.n <= get_settings().random_max_points:
                parser.error(f"--n must be in 1..{get_settings().random_max_points}")
        return COMMANDS[args.command](args)
    except SemiTopologyError as e:
        report_error(args, e)
        if args.verbose:
            traceback.print_exc()
        return EXIT_USAGE
    except KeyboardInterrupt:
        print("\nOperation cancelled by user")
        return EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
