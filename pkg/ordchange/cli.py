#!/usr/bin/env python3
"""
Command-line front end for ordchange

Subcommands:
- detect: change-points of a series file, written as a JSON report
- profile: full statistic profile as CSV
- simulate: one realization of a process spec
- bench: a built-in or custom benchmark plan
- delta: asymptotic Delta grids and AR coefficient tables
- config: settings read from the environment
- serve: the HTTP service

Exit codes: 0 success, 2 usage, 3 I/O, 4 validation, 5 configuration.
"""

import argparse
import logging
import os
import sys
from typing import Any, Dict, List, Optional

import numpy as np

from . import __version__
from .asymptotics import DELTA_SCHEMA, default_theta_grid, delta_grid, delta_max, delta_table
from .bench import get_benchmark_plan, list_benchmark_plans, run_benchmark, write_outputs
from .config import (
    BENCH_CONFIG,
    DEFAULT_THREADS,
    SERVICE_CONFIG,
    configure_logging,
    get_bench_config,
    get_detection_config,
    print_config,
)
from .detection import DetectionConfig, build_statistic, check_series_length, detect_series
from .errors import ConfigError, InvalidInputError, SeriesFileError
from .models import (
    BenchmarkPlanModel,
    DetectionConfigModel,
    PairSourceModel,
    ProcessSpecModel,
    parse_config,
)
from .processes import simulate
from .services import read_json, read_series, write_json, write_profile, write_series, write_table
from .statistics import example_toy_series

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_VALIDATION = 4
EXIT_CONFIG = 5


def resolve_seed(seed: Optional[int]) -> int:
    """The given seed, or a fresh one printed to stderr so the run can be repeated"""
    if seed is not None:
        return seed
    seed = int(np.random.SeedSequence().generate_state(1, dtype=np.uint64)[0])
    print(f"seed: {seed}", file=sys.stderr)
    return seed


def _read_input(args) -> np.ndarray:
    return read_series(args.input, column=args.column, header=args.header)


def _detection_settings(args) -> Dict[str, Any]:
    data: Dict[str, Any] = read_json(args.config) if args.config else {}
    if not isinstance(data, dict):
        raise ConfigError(f"{args.config}: detection config must be a JSON object")
    flags = {
        "order": args.order,
        "alpha": args.alpha,
        "statistic": args.statistic,
        "delta": args.delta,
        "t_min": args.t_min,
        "n_boot_override": args.n_boot,
        "threads": args.threads,
    }
    data.update({k: v for k, v in flags.items() if v is not None})
    for key, value in get_detection_config().items():
        data.setdefault(key, value)
    return data


def cmd_detect(args) -> int:
    settings = _detection_settings(args)
    file_seed = settings.pop("seed", None)
    seed = resolve_seed(args.seed if args.seed is not None else file_seed)
    config = parse_config(DetectionConfigModel, settings, "detection config").to_config(seed)
    values = _read_input(args)
    report = detect_series(values, config, multi=args.multi)
    write_json(report.to_dict(), args.out)
    logger.info("Found %d change-point(s)", len(report.change_points))
    return EXIT_OK


def cmd_profile(args) -> int:
    if args.toy is not None:
        values = example_toy_series(args.toy)
    elif args.input is not None:
        values = _read_input(args)
    else:
        raise ConfigError("profile needs an input file or --toy LENGTH")
    check_series_length(values, DetectionConfig(order=args.order))
    statistic = build_statistic(args.stat, values, args.order, args.delta)
    first, last = statistic.domain()
    write_profile(statistic.profile(first, last, 0), args.out)
    return EXIT_OK


def cmd_simulate(args) -> int:
    spec = parse_config(ProcessSpecModel, read_json(args.spec), "process spec").to_spec()
    seed = resolve_seed(args.seed)
    series = simulate(spec, seed, burn_in=args.burn_in)
    write_json(series.to_dict(), args.out)
    if args.values_out:
        write_series(series.values, args.values_out)
    return EXIT_OK


def _load_plan(name: str):
    plan = get_benchmark_plan(name)
    if plan is not None:
        return plan
    if not os.path.exists(name):
        known = ", ".join(p["name"] for p in list_benchmark_plans())
        raise ConfigError(f"unknown benchmark plan {name!r}; built-in plans: {known}")
    return parse_config(BenchmarkPlanModel, read_json(name), "benchmark plan").to_plan()


def cmd_bench(args) -> int:
    if args.list:
        for entry in list_benchmark_plans():
            print(f"{entry['name']:<20} {entry['mode']:<7} {entry['description']}")
        return EXIT_OK
    if args.plan is None:
        raise ConfigError("bench needs a plan name or a plan file (see --list)")
    plan = _load_plan(args.plan)
    settings = get_bench_config()
    trials = settings["full_scale_trials"] if args.full_scale else args.trials
    seed = resolve_seed(args.seed)
    run = run_benchmark(plan, trials, seed, args.threads or settings["threads"])
    trials_path, summary_path = write_outputs(run, args.out_dir or settings["output_dir"])
    print(f"trials: {trials_path}")
    print(f"summary: {summary_path}")
    return EXIT_OK


def _pair_source(text: str) -> PairSourceModel:
    """'iid', 'ar:PHI' or a JSON file holding a pair source"""
    if text == "iid":
        return PairSourceModel(iid=True)
    if text.lower().startswith("ar:"):
        return parse_config(PairSourceModel, {
            "process": {"kind": "AR", "segments": [{"phi": text[3:]}], "length": 1}
        }, f"pair source {text!r}")
    return parse_config(PairSourceModel, read_json(text), f"pair source {text}")


def _with_mc_length(source: PairSourceModel, length: int) -> PairSourceModel:
    if source.process is None:
        return source
    process = source.process.model_copy(update={"length": length})
    return source.model_copy(update={"process": process})


def _parse_floats(text: str, name: str) -> List[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ConfigError(f"{name}: expected comma-separated numbers, got {text!r}") from None


def cmd_delta(args) -> int:
    seed = resolve_seed(args.seed)
    if args.ar_table:
        phis = _parse_floats(args.ar_table, "--ar-table")
        table = delta_table(args.order, phis, args.mc_length, seed, args.gamma,
                            args.threads or DEFAULT_THREADS)
        write_table(table.reset_index(), DELTA_SCHEMA, args.out)
        return EXIT_OK

    if args.p is None or args.q is None:
        raise ConfigError("delta needs --p and --q, or --ar-table")
    p_seed, q_seed = np.random.SeedSequence(seed).spawn(2)
    p = _with_mc_length(_pair_source(args.p), args.mc_length).resolve(args.order, p_seed)
    q = _with_mc_length(_pair_source(args.q), args.mc_length).resolve(args.order, q_seed)
    thetas = _parse_floats(args.thetas, "--thetas") if args.thetas else default_theta_grid(args.theta_grid)
    values = delta_grid(p, q, args.gamma, thetas)
    write_json({
        "schema": DELTA_SCHEMA,
        "order": args.order,
        "gamma": args.gamma,
        "seed": seed,
        "theta": [float(t) for t in thetas],
        "delta": values.tolist(),
        "delta_max": delta_max(p, q, args.gamma),
    }, args.out)
    return EXIT_OK


def cmd_config(args) -> int:
    print_config()
    return EXIT_OK


def cmd_serve(args) -> int:
    try:
        import uvicorn
    except ImportError:
        raise ConfigError("serve needs the optional service dependencies (requirements-optional.txt)")
    uvicorn.run("ordchange.main:app", host=args.host, port=args.port)
    return EXIT_OK


def _add_input_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("input", nargs=None if required else "?", help="series file, one value per line or CSV")
    parser.add_argument("--column", help="CSV column, 0-based index or header name")
    header = parser.add_mutually_exclusive_group()
    header.add_argument("--header", dest="header", action="store_true", default=None,
                        help="first line is a header")
    header.add_argument("--no-header", dest="header", action="store_false",
                        help="first line holds a value")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordchange",
        description="Change-point detection with the conditional entropy of ordinal patterns",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    detect = sub.add_parser("detect", help="detect change-points in a series file")
    _add_input_arguments(detect)
    detect.add_argument("--order", type=int, help="pattern order d (default 3)")
    detect.add_argument("--alpha", type=float, help="nominal false-alarm probability (default 0.05)")
    detect.add_argument("--statistic", help="ceofop (default), bdexp or bdcorr")
    detect.add_argument("--delta", type=float, help="BD weight exponent in [0, 1]")
    detect.add_argument("--t-min", type=int, help="minimal segment length, default (d+1)!(d+1)")
    detect.add_argument("--n-boot", type=int, help="override the floor(5/alpha) bootstrap replicates")
    detect.add_argument("--multi", action="store_true", help="detect all change-points, not just one")
    detect.add_argument("--seed", type=int, help="master seed; generated and printed when absent")
    detect.add_argument("--threads", type=int, help="bootstrap workers")
    detect.add_argument("--config", help="detection config JSON; flags override it")
    detect.add_argument("--out", help="report JSON path (stdout by default)")
    detect.set_defaults(handler=cmd_detect)

    profile = sub.add_parser("profile", help="full statistic profile as CSV")
    _add_input_arguments(profile, required=False)
    profile.add_argument("--toy", type=int, metavar="L", help="use the periodic toy series of length L")
    profile.add_argument("--order", type=int, default=get_detection_config()["order"])
    profile.add_argument("--stat", default="ceofop", help="ceofop, bdexp or bdcorr")
    profile.add_argument("--delta", type=float, default=0.0)
    profile.add_argument("--out", help="CSV path (stdout by default)")
    profile.set_defaults(handler=cmd_profile)

    sim = sub.add_parser("simulate", help="simulate a piecewise stationary process")
    sim.add_argument("spec", help="process spec JSON")
    sim.add_argument("--seed", type=int)
    sim.add_argument("--burn-in", type=int, default=0, help="AR warm-up steps dropped before t = 0")
    sim.add_argument("--out", help="simulation JSON path (stdout by default)")
    sim.add_argument("--values-out", help="also write the values, one per line")
    sim.set_defaults(handler=cmd_simulate)

    bench = sub.add_parser("bench", help="run a benchmark plan")
    bench.add_argument("plan", nargs="?", help="built-in plan name or plan JSON")
    bench.add_argument("--list", action="store_true", help="list built-in plans")
    bench.add_argument("--trials", type=int, help="trials per length (plan default otherwise)")
    bench.add_argument("--full-scale", action="store_true",
                       help=f"use {BENCH_CONFIG['full_scale_trials']} trials")
    bench.add_argument("--seed", type=int)
    bench.add_argument("--threads", type=int)
    bench.add_argument("--out-dir", help=f"output directory (default {BENCH_CONFIG['output_dir']})")
    bench.set_defaults(handler=cmd_bench)

    delta = sub.add_parser("delta", help="asymptotic Delta of two pair distributions")
    delta.add_argument("--p", help="'iid', 'ar:PHI' or pair source JSON (before the change)")
    delta.add_argument("--q", help="'iid', 'ar:PHI' or pair source JSON (after the change)")
    delta.add_argument("--ar-table", metavar="PHIS", help="comma-separated AR coefficients: 100 Delta table")
    delta.add_argument("--order", type=int, default=2)
    delta.add_argument("--gamma", type=float, default=0.5)
    delta.add_argument("--theta-grid", type=int, default=99, metavar="N", help="theta = k/(N+1)")
    delta.add_argument("--thetas", help="comma-separated theta values")
    delta.add_argument("--mc-length", type=int, default=10 ** 6, help="Monte-Carlo series length")
    delta.add_argument("--seed", type=int)
    delta.add_argument("--threads", type=int)
    delta.add_argument("--out", help="output path (stdout by default)")
    delta.set_defaults(handler=cmd_delta)

    info = sub.add_parser("config", help="print the configuration read from the environment")
    info.set_defaults(handler=cmd_config)

    serve = sub.add_parser("serve", help="start the HTTP service")
    serve.add_argument("--host", default=SERVICE_CONFIG["host"])
    serve.add_argument("--port", type=int, default=SERVICE_CONFIG["port"])
    serve.set_defaults(handler=cmd_serve)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    configure_logging(args.verbose)

    try:
        return args.handler(args)
    except SeriesFileError as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_IO
    except ConfigError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except InvalidInputError as e:
        print(f"Validation error: {e}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
