"""
QuadLabel Command Line
Label binary frames, compare with the reference, fuzz, benchmark the cycle budget and generate patterns
"""

import argparse
import sys
from typing import Any, Dict, List, Optional

import logging

from src.analysis.frame_report import format_record, stats_record, summary_lines
from src.analysis.fuzz_runner import run_fuzz
from src.engine.config import EngineConfig
from src.engine.pipeline import QuadLabelEngine, realtime_check
from src.patterns.pattern_manager import PatternManager
from src.utils.config_loader import env_override, load_config
from src.utils.errors import FrameError, QuadLabelError
from src.utils.image_io import read_pbm, write_pbm, write_pgm16, write_table_dump
from src.utils.logger import setup_logger
from src.verification.oracle import equivalent_up_to_relabeling, label_reference

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def _emit(record: Dict[str, Any], as_json: bool) -> None:
    print(format_record(record, as_json))


def _engine_config(config: Dict[str, Any], args: argparse.Namespace) -> EngineConfig:
    return EngineConfig.from_config(
        config,
        label_bits=getattr(args, 'bits', None),
        clock_hz=getattr(args, 'clock', None),
        fps=getattr(args, 'fps', None),
    )


def _pattern_params(args: argparse.Namespace) -> Dict[str, Any]:
    return {
        'density': args.density,
        'seed': args.seed,
        'n': args.n,
        'count': args.count,
    }


def cmd_label(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    img = read_pbm(args.input)
    cfg = _engine_config(config, args)
    try:
        result = QuadLabelEngine(cfg).process(img)
    except FrameError as e:
        logger.error(f"Frame invalid: {e}")
        if args.stats and e.stats is not None:
            _emit(stats_record(e.stats, realtime_check(e.stats, cfg)), args.json)
        return EXIT_VIOLATION

    write_pgm16(args.output, result.final)
    logger.info(f"Labels written to {args.output}")
    if args.dump_table:
        write_table_dump(args.dump_table, result.final_table.dump(result.stats.peak_label))
        logger.info(f"Equivalence table written to {args.dump_table}")
    if args.stats:
        _emit(stats_record(result.stats, realtime_check(result.stats, cfg)), args.json)
    return EXIT_OK


def cmd_compare(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    img = read_pbm(args.input)
    cfg = _engine_config(config, args)
    try:
        result = QuadLabelEngine(cfg).process(img)
    except FrameError as e:
        logger.error(f"Frame invalid: {e}")
        return EXIT_VIOLATION

    equivalent = equivalent_up_to_relabeling(result.final, label_reference(img))
    _emit({'equivalent': equivalent, 'peak_label': result.stats.peak_label}, args.json)
    if not equivalent:
        logger.error("Engine labels differ from the reference labelling")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_fuzz(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    settings = dict(config['fuzz'])
    if args.frames is not None:
        settings['frames'] = args.frames
    if args.max_size is not None:
        settings['max_width'], settings['max_height'] = args.max_size
    # QUADLABEL_SEED wins over --seed
    if args.seed is not None and env_override('fuzz', 'seed') is None:
        settings['seed'] = args.seed
    if args.workers is not None:
        settings['workers'] = args.workers
    if args.reproducer_dir is not None:
        settings['reproducer_dir'] = args.reproducer_dir

    bits = args.bits if args.bits is not None else settings['label_bits']
    cfg = EngineConfig.from_config(config, label_bits=bits, trace=False)

    report = run_fuzz(settings, cfg, log_level=config['system']['log_level'])
    lines = summary_lines(report.summary)
    if report.reproducer is not None:
        lines.append(f"reproducer={report.reproducer}")
    print("\n".join(lines))
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_bench(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    img = PatternManager(config.get('patterns')).generate(
        args.pattern, args.width, args.height, **_pattern_params(args)
    )
    cfg = _engine_config(config, args)
    header = {'pattern': args.pattern, 'width': img.width, 'height': img.height}
    try:
        stats = QuadLabelEngine(cfg).process(img).stats
    except FrameError as e:
        logger.error(f"Frame invalid: {e}")
        if e.stats is not None:
            _emit(stats_record(e.stats, realtime_check(e.stats, cfg), header), args.json)
        return EXIT_VIOLATION

    verdict = realtime_check(stats, cfg)
    logger.info(f"Real-time verdict: {verdict.label} (slack {verdict.slack} cycles)")
    _emit(stats_record(stats, verdict, header), args.json)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    img = PatternManager(config.get('patterns')).generate(
        args.pattern, args.width, args.height, **_pattern_params(args)
    )
    write_pbm(args.output, img, plain=args.plain)
    logger.info(f"{args.pattern} pattern {img.width}x{img.height} written to {args.output}")
    return EXIT_OK


def _add_pattern_args(parser: argparse.ArgumentParser, size_required: bool) -> None:
    parser.add_argument('--pattern', required=True, choices=PatternManager().get_enabled_patterns())
    parser.add_argument('--width', type=int, required=size_required)
    parser.add_argument('--height', type=int, required=size_required)
    parser.add_argument('--density', type=float, help='random: foreground probability')
    parser.add_argument('--seed', type=int, help='random: generator seed')
    parser.add_argument('--n', type=int, help='ascending_chain: number of chain links')
    parser.add_argument('--count', type=int, help='max_labels: number of components')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='quadlabel', description='Streaming 4-pixel-per-clock connected component labelling')
    parser.add_argument('--config', type=str, default='config/config.yaml', help='Path to configuration file')
    parser.add_argument('--log-level', type=str, help='Override system.log_level')
    parser.add_argument('--json', action='store_true', help='Print results as JSON instead of key=value lines')

    sub = parser.add_subparsers(dest='command', required=True)

    label = sub.add_parser('label', help='Label a PBM frame and write 16-bit PGM labels')
    label.add_argument('input')
    label.add_argument('-o', '--output', required=True)
    label.add_argument('--bits', type=int)
    label.add_argument('--dump-table', type=str)
    label.add_argument('--stats', action='store_true')
    label.set_defaults(handler=cmd_label)

    compare = sub.add_parser('compare', help='Check engine output against the reference labelling')
    compare.add_argument('input')
    compare.add_argument('--bits', type=int)
    compare.set_defaults(handler=cmd_compare)

    fuzz = sub.add_parser('fuzz', help='Random frames against the reference labelling')
    fuzz.add_argument('--frames', type=int)
    fuzz.add_argument('--max-size', type=int, nargs=2, metavar=('W', 'H'))
    fuzz.add_argument('--seed', type=int)
    fuzz.add_argument('--bits', type=int)
    fuzz.add_argument('--workers', type=int)
    fuzz.add_argument('--reproducer-dir', type=str)
    fuzz.set_defaults(handler=cmd_fuzz)

    bench = sub.add_parser('bench', help='Cycle budget of a generated frame')
    _add_pattern_args(bench, size_required=True)
    bench.add_argument('--clock', type=int)
    bench.add_argument('--fps', type=int)
    bench.add_argument('--bits', type=int)
    bench.set_defaults(handler=cmd_bench)

    gen = sub.add_parser('gen', help='Write a generated pattern as PBM')
    _add_pattern_args(gen, size_required=False)
    gen.add_argument('-o', '--output', required=True)
    gen.add_argument('--plain', action='store_true', help='Write plain P1 instead of raw P4')
    gen.set_defaults(handler=cmd_gen)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    config = load_config(args.config)
    system = config.get('system', {})
    setup_logger(
        log_dir=system.get('log_dir', 'logs'),
        log_level=args.log_level or system.get('log_level', 'INFO'),
        log_to_file=system.get('log_to_file', False),
    )

    try:
        return args.handler(args, config)
    except FrameError as e:
        logger.error(f"Frame invalid: {e}")
        return EXIT_VIOLATION
    except (QuadLabelError, OSError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
