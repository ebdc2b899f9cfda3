"""
Command line interface, ``choice-tools <command>``.

Exit statuses are shared by every command: ``0`` success, ``1`` the data lacks the property asked about (a
condition fails, no representation exists, a sweep found discrepancies), ``2`` input error, ``3`` internal defect.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__, axioms, oracle
from .dataset import (
    ChoiceDataset,
    format_linear_order,
    format_weak_order,
    labels_in_order,
    parse_linear_order,
    parse_weak_order,
    read_dataset,
)
from .engine import generate
from .errors import DatasetError, InternalDefectError
from .model import Universe
from .recovery import recover
from .utils import build_data_directory, configure_logging, format_pandas_for_logging, load_config
from .utils.config import ChoiceToolsConfig

__all__ = ["main", "build_parser", "EXIT_OK", "EXIT_FAILURE", "EXIT_INPUT", "EXIT_DEFECT"]

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_DEFECT = 3

# --sample given without a count
_CONFIGURED_COUNT = object()

logger = logging.getLogger(__name__)


def _emit(payload: dict, text: str, fmt: str) -> None:
    print(json.dumps(payload, indent=2) if fmt == "json" else text)


def _cmd_generate(args: argparse.Namespace, config: ChoiceToolsConfig) -> int:
    if args.labels:
        labels = [lbl.strip() for lbl in args.labels.split(",")]
    else:
        labels = labels_in_order(args.weak_order)
    universe = Universe(tuple(labels))

    weak_order = parse_weak_order(args.weak_order, universe)
    linear_order = parse_linear_order(args.linear_order, universe)
    dataset = ChoiceDataset(universe, generate(weak_order, linear_order, universe))

    if args.out is None:
        sys.stdout.write(dataset.to_json())
    else:
        build_data_directory(Path(args.out).parent)
        dataset.write(args.out)
        logger.info(f'Wrote {len(dataset.rows)} menus to "{args.out}"')
    return EXIT_OK


def _cmd_check(args: argparse.Namespace, config: ChoiceToolsConfig) -> int:
    dataset = read_dataset(args.in_path)
    report = axioms.check_all(dataset.correspondence)
    _emit(report.to_dict(dataset.universe), report.to_text(dataset.universe), args.format)
    return EXIT_OK if report.conditions_pass else EXIT_FAILURE


def _cmd_recover(args: argparse.Namespace, config: ChoiceToolsConfig) -> int:
    dataset = read_dataset(args.in_path)
    universe = dataset.universe
    result = recover(dataset.correspondence)

    if result.success:
        weak_order = format_weak_order(result.weak_order, universe)
        linear_order = format_linear_order(result.linear_order, universe)
        menus = len(universe.menus())
        payload = {"outcome": "success", "weak_order": weak_order, "linear_order": linear_order, "regenerated": True}
        text = f"R: {weak_order}\nL: {linear_order}\nRegenerated choices match the input on all {menus} menus."
        _emit(payload, text, args.format)
        return EXIT_OK

    payload = {
        "outcome": "failure",
        "condition": result.condition,
        "witness": result.witness.to_dict(universe),
    }
    text = f"No minimal-compromise representation: {result.condition} fails, {axioms.explain(result.witness, universe)}"
    _emit(payload, text, args.format)
    return EXIT_FAILURE


def _cmd_oracle(args: argparse.Namespace, config: ChoiceToolsConfig) -> int:
    dataset = read_dataset(args.in_path)
    universe = dataset.universe

    if args.rational:
        orders = oracle.brute_force_rationalize(dataset.correspondence)
        found = [{"weak_order": format_weak_order(r, universe)} for r in orders]
        text = "\n".join(f"R: {row['weak_order']}" for row in found)
        payload = {"rationalizations": found}
    else:
        pairs = oracle.brute_force_representations(dataset.correspondence)
        found = [
            {"weak_order": format_weak_order(r, universe), "linear_order": format_linear_order(l, universe)}
            for r, l in pairs
        ]
        text = "\n".join(f"R: {row['weak_order']}    L: {row['linear_order']}" for row in found)
        payload = {"representations": found}

    logger.info(f"Exhaustive search found {len(found)} solution(s)")
    _emit(payload, text if found else "No solution found.", args.format)
    return EXIT_OK if found else EXIT_FAILURE


def _cmd_sweep(args: argparse.Namespace, config: ChoiceToolsConfig) -> int:
    shards = config.shards if args.shards is None else args.shards
    if args.sample is not None:
        seed = config.seed if args.seed is None else args.seed
        count = config.sample_count if args.sample is _CONFIGURED_COUNT else args.sample
        report = oracle.theorem1_sweep(
            args.n, mode="sample", count=count, seed=seed, shards=shards, progress=shards == 1
        )
    else:
        report = oracle.theorem1_sweep(
            args.n,
            mode="exhaustive",
            shards=shards,
            long_running=args.long_running,
            max_exhaustive_n=config.max_exhaustive_n,
            progress=shards == 1,
        )

    logger.info(format_pandas_for_logging(report.to_frame(), title="Sweep summary"))

    text_lines = [
        f"n={report.n} mode={report.mode} seed={report.seed}",
        f"scanned={report.scanned} conditions_passing={report.conditions_passing} "
        f"representable={report.representable} recovered={report.recovered}",
        f"discrepancies={len(report.discrepancies)}",
    ]
    text_lines.extend(f"  index {d.index}: {d}" for d in report.discrepancies)
    _emit(report.to_dict(), "\n".join(text_lines), args.format)
    return EXIT_OK if report.ok else EXIT_FAILURE


def _cmd_census(args: argparse.Namespace, config: ChoiceToolsConfig) -> int:
    frame = oracle.census_frame(args.n)

    totals = frame.drop(columns="index").sum().to_frame(name="passing").T
    totals.insert(0, "tables", len(frame))
    logger.info(format_pandas_for_logging(totals, title=f"Census n={args.n}"))

    if args.out is None:
        print(frame.to_csv(index=False), end="")
        return EXIT_OK

    out = Path(args.out)
    build_data_directory(out.parent)
    if out.suffix == ".parquet":
        frame.to_parquet(out, index=False)
    else:
        frame.to_csv(out, index=False)
    logger.info(f'Wrote census of {len(frame)} tables to "{out}"')
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="choice-tools",
        description="Minimal-compromise choice: generate, check, recover and brute-force verify choice data.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", type=Path, default=None, help="Path to a config.ini file.")
    parser.add_argument("--log-level", default=None, help="Logging level, overrides the configuration.")
    parser.add_argument("--logfile", type=Path, default=None, help="Also write log messages to this file.")

    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="Write the table produced by a weak order and a linear order.")
    gen.add_argument("--weak-order", required=True, help='Classes best first, e.g. "x,y > z".')
    gen.add_argument("--linear-order", required=True, help='Chain best first, e.g. "x > y > z".')
    gen.add_argument("--labels", default=None, help="Comma separated alternative labels in universe order.")
    gen.add_argument("--out", default=None, help="Dataset file to write; standard output if omitted.")
    gen.set_defaults(handler=_cmd_generate)

    for name, handler, help_text in (
        ("check", _cmd_check, "Report every axiom and condition with witnesses."),
        ("recover", _cmd_recover, "Recover a weak order and linear order generating the data."),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--in", dest="in_path", required=True, type=Path, help="Dataset file to read.")
        cmd.add_argument("--format", choices=("json", "text"), default="text")
        cmd.set_defaults(handler=handler)

    orc = sub.add_parser("oracle", help="List every representation found by exhaustive search.")
    orc.add_argument("--in", dest="in_path", required=True, type=Path, help="Dataset file to read.")
    which = orc.add_mutually_exclusive_group()
    which.add_argument("--all", action="store_true", help="All (R, L) pairs generating the data (default).")
    which.add_argument("--rational", action="store_true", help="All weak orders whose maximization fits the data.")
    orc.add_argument("--format", choices=("json", "text"), default="text")
    orc.set_defaults(handler=_cmd_oracle)

    swp = sub.add_parser("sweep", help="Cross-check conditions, recovery and exhaustive search over a census.")
    swp.add_argument("--n", type=int, required=True, help="Number of alternatives.")
    mode = swp.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="Scan every table (default).")
    mode.add_argument(
        "--sample",
        type=int,
        nargs="?",
        const=_CONFIGURED_COUNT,
        metavar="COUNT",
        default=None,
        help="Scan COUNT seeded random tables, SAMPLE_COUNT from the configuration if omitted.",
    )
    swp.add_argument("--seed", type=int, default=None, help="Seed for --sample.")
    swp.add_argument("--shards", type=int, default=None, help="Worker processes.")
    swp.add_argument("--long-running", action="store_true", help="Allow an exhaustive sweep of a large census.")
    swp.add_argument("--format", choices=("json", "text"), default="text")
    swp.set_defaults(handler=_cmd_sweep)

    cen = sub.add_parser("census", help="Tabulate every verdict for every table on n alternatives.")
    cen.add_argument("--n", type=int, required=True, help="Number of alternatives.")
    cen.add_argument("--out", default=None, help="Output path, parquet by .parquet extension, otherwise CSV.")
    cen.set_defaults(handler=_cmd_census)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        config = load_config(args.config)
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT

    try:
        configure_logging(args.log_level.upper() if args.log_level else config.log_level, args.logfile)
        return args.handler(args, config)
    except InternalDefectError as err:
        logger.error(f"Internal defect: {err}")
        return EXIT_DEFECT
    except (DatasetError, ValueError, OSError) as err:
        logger.error(str(err))
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
