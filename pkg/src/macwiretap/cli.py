"""Command-line front end.

Every subcommand prints a JSON envelope {command, version, inputs_echo,
result}; result floats are rounded to 12 significant digits and the echo is
verbatim, so identical inputs on the same version produce byte-identical
output.  Exit codes: 0 success, 2 input or validation error, 3
self-verification failure (--verify gap above tolerance).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import __version__
from .channel import RawChannelConfig, StandardChannel, check_degraded, standardize
from .errors import ValidationError
from .optimizer import (
    grid_oracle,
    optimal_powers_jam,
    optimal_powers_sum,
    tdma_optimal_alpha,
)
from .regions import (
    RateVector,
    collective_region_at,
    delta_region,
    individual_region_at,
    outer_region_at,
    rate_split_collective,
    rate_split_individual,
    region_boundary_2d,
    tdma_region_at,
)
from .scenario import ScenarioConfig, sweep

VERIFY_GAP_TOL = 1e-6

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_VERIFY_FAILED = 3


def _round12(obj: Any) -> Any:
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round12(v) for v in obj]
    return obj


def _emit(command: str, inputs_echo: dict[str, Any], result: Any, stream=None) -> None:
    # the echo stays verbatim so feeding it back reproduces the run exactly;
    # result numerics are rounded to 12 significant digits
    envelope = {
        "command": command,
        "version": __version__,
        "inputs_echo": inputs_echo,
        "result": _round12(result),
    }
    print(json.dumps(envelope, indent=2, sort_keys=True), file=stream or sys.stdout)


def _floats_arg(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc


def _load_json(path: str) -> dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as fp:
            data = json.load(fp)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON in {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ValidationError(f"{path} must contain a JSON object")
    return data


def _std_channel(args: argparse.Namespace) -> StandardChannel:
    if len(args.h) != len(args.pmax):
        raise ValidationError("--h and --pmax must have the same length")
    return StandardChannel(num_users=len(args.h), h=args.h, pmax=args.pmax)


def _cmd_standardize(args: argparse.Namespace) -> int:
    if args.config:
        raw = RawChannelConfig.from_dict(_load_json(args.config))
    else:
        needed = [args.gains_main, args.gains_tap, args.power_limits]
        if any(v is None for v in needed) or args.noise_main is None or args.noise_tap is None:
            raise ValidationError(
                "either --config or all of --gains-main/--gains-tap/--noise-main/"
                "--noise-tap/--power-limits are required"
            )
        raw = RawChannelConfig(
            num_users=len(args.gains_main),
            gains_main=args.gains_main,
            gains_tap=args.gains_tap,
            noise_var_main=args.noise_main,
            noise_var_tap=args.noise_tap,
            power_limits=args.power_limits,
        )
    std = standardize(raw)
    report = check_degraded(std, args.tol)
    _emit(
        "standardize",
        {"raw": raw.to_dict(), "tol": args.tol},
        {"standard_channel": std.to_dict(), "degradedness": report.to_dict()},
    )
    return EXIT_OK


def _region_kind_arg(text: str) -> str:
    return text.strip().lower()


def _cmd_region(args: argparse.Namespace) -> int:
    std = _std_channel(args)
    kind = args.kind.upper().replace("-", "_")
    echo = {
        "kind": args.kind,
        "h": list(args.h),
        "pmax": list(args.pmax),
        "delta": args.delta,
        "res": args.res,
        "alpha_res": args.alpha_res,
        "power": list(args.power) if args.power else None,
        "alpha": list(args.alpha) if args.alpha else None,
        "format": args.format,
    }
    if args.power is not None:
        if args.format == "csv":
            raise ValidationError("constraint sets serialize to JSON; csv is for boundaries")
        if kind == "INDIVIDUAL":
            region = individual_region_at(std, args.power)
        elif kind == "COLLECTIVE":
            region = collective_region_at(std, args.power)
        elif kind == "TDMA":
            alpha = args.alpha if args.alpha else tdma_optimal_alpha(args.power)
            region = tdma_region_at(std, args.power, alpha)
        elif kind in ("OUTER_INDIVIDUAL", "OUTER_COLLECTIVE"):
            region = outer_region_at(std, args.power, kind.replace("OUTER_", ""))
        else:
            raise ValidationError(f"fixed-power constraint sets are not defined for kind {args.kind}")
        if args.delta is not None:
            region = delta_region(region, args.delta)
        _emit("region", echo, {"constraint_set": region.to_json_dict()})
        return EXIT_OK
    boundary = region_boundary_2d(
        std,
        kind,
        delta=args.delta if args.delta is not None else 1.0,
        power_grid_res=args.res,
        alpha_grid_res=args.alpha_res,
    )
    if args.format == "csv":
        sys.stdout.write(boundary.to_csv_string())
        return EXIT_OK
    _emit(
        "region",
        echo,
        {
            "boundary": {
                "vertices": [list(v) for v in boundary.vertices],
                "generator_count": boundary.generator_count,
                "max_sum": boundary.max_sum(),
            }
        },
    )
    return EXIT_OK


def _allocation_payload(alloc) -> dict[str, Any]:
    return alloc.to_dict()


def _cmd_power_opt(args: argparse.Namespace, which: str) -> int:
    if len(args.h) != 2 or len(args.pmax) != 2:
        raise ValidationError("power optimization is two-user: --h and --pmax need two entries")
    solver = optimal_powers_sum if which == "sumopt" else optimal_powers_jam
    alloc = solver(args.h, args.pmax)
    result: dict[str, Any] = {"allocation": _allocation_payload(alloc)}
    echo = {
        "h": list(args.h),
        "pmax": list(args.pmax),
        "verify": bool(args.verify),
        "res": args.res,
    }
    exit_code = EXIT_OK
    if args.verify:
        order = sorted(range(2), key=lambda i: args.h[i])
        h_sorted = tuple(args.h[i] for i in order)
        m_sorted = tuple(args.pmax[i] for i in order)
        # a jamming request that fell back to both-transmit solved the
        # sum-rate problem, so that is the objective to verify against
        objective = "SUM" if which == "sumopt" or alloc.case_label == "BOTH_TRANSMIT" else "JAM"
        oracle = grid_oracle(objective, h_sorted, m_sorted, resolution=args.res)
        gap = abs(alloc.achieved_rate - oracle.achieved_rate)
        result["oracle"] = _allocation_payload(oracle)
        result["oracle_objective"] = objective
        result["verify_gap"] = gap
        if gap > VERIFY_GAP_TOL:
            exit_code = EXIT_VERIFY_FAILED
    _emit(which, echo, result)
    return exit_code


def _cmd_tdma(args: argparse.Namespace) -> int:
    std = _std_channel(args)
    alpha = args.alpha if args.alpha else tdma_optimal_alpha(args.power)
    region = tdma_region_at(std, args.power, alpha)
    if args.delta is not None:
        payload = delta_region(region, args.delta).to_json_dict()
    else:
        payload = region.to_json_dict()
    _emit(
        "tdma",
        {
            "h": list(args.h),
            "pmax": list(args.pmax),
            "power": list(args.power),
            "alpha": list(args.alpha) if args.alpha else None,
            "delta": args.delta,
        },
        {"optimal_alpha": list(tdma_optimal_alpha(args.power)), "region": payload},
    )
    return EXIT_OK


def _cmd_split(args: argparse.Namespace) -> int:
    std = _std_channel(args)
    rates = RateVector(secret=args.secret, open=args.open or tuple(0.0 for _ in args.secret))
    splitter = rate_split_individual if args.kind == "individual" else rate_split_collective
    outcome = splitter(std, args.power, rates)
    _emit(
        "split",
        {
            "kind": args.kind,
            "h": list(args.h),
            "pmax": list(args.pmax),
            "power": list(args.power),
            "secret": list(rates.secret),
            "open": list(rates.open),
        },
        {
            "feasible": outcome.feasible,
            "extra": list(outcome.extra) if outcome.extra is not None else None,
            "binding": outcome.binding,
        },
    )
    return EXIT_OK


def _cmd_scenario(args: argparse.Namespace) -> int:
    config = ScenarioConfig.from_dict(_load_json(args.config))
    result = sweep(config, max_workers=args.threads)
    zero_jam, zero_nojam = result.zero_rate_counts()
    summary = {
        "cells": len(result.records),
        "zero_rate_cells_jam": zero_jam,
        "zero_rate_cells_nojam": zero_nojam,
        "out": args.out,
    }
    echo = {"config": config.to_dict(), "out": args.out}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fp:
            result.to_csv(fp)
        _emit("scenario", echo, summary)
    else:
        result.to_csv(sys.stdout)
        _emit("scenario", echo, summary, stream=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="macwiretap",
        description="Secrecy rate regions and power allocation for the two-user "
        "Gaussian multiple-access wiretap channel",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("standardize", help="transform a physical channel to standard form")
    p.add_argument("--config", help="JSON file with the physical channel description")
    p.add_argument("--gains-main", type=_floats_arg, help="per-user receiver gains")
    p.add_argument("--gains-tap", type=_floats_arg, help="per-user eavesdropper gains")
    p.add_argument("--noise-main", type=float, help="receiver noise variance")
    p.add_argument("--noise-tap", type=float, help="eavesdropper noise variance")
    p.add_argument("--power-limits", type=_floats_arg, help="per-user average power limits")
    p.add_argument("--tol", type=float, default=1e-9, help="degradedness tolerance")
    p.set_defaults(func=_cmd_standardize)

    p = sub.add_parser("region", help="rate region boundary or fixed-power constraint set")
    p.add_argument(
        "--kind",
        type=_region_kind_arg,
        required=True,
        choices=["individual", "collective", "tdma", "outer-individual", "outer-collective", "union-i-t"],
    )
    p.add_argument("--h", type=_floats_arg, required=True, help="standardized eavesdropper gains")
    p.add_argument("--pmax", type=_floats_arg, required=True, help="standardized power limits")
    p.add_argument(
        "--delta",
        type=float,
        default=None,
        help="secret fraction in (0, 1]; boundaries default to 1, fixed-power "
        "sets stay in (secret, open) coordinates when omitted",
    )
    p.add_argument("--res", type=int, default=101, help="power grid resolution per axis")
    p.add_argument("--alpha-res", type=int, default=101, help="time-share grid resolution")
    p.add_argument("--power", type=_floats_arg, help="fixed power: emit the constraint set instead")
    p.add_argument("--alpha", type=_floats_arg, help="time shares for the fixed-power tdma set")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_region)

    p = sub.add_parser("sumopt", help="secrecy sum-rate maximizing powers")
    p.add_argument("--h", type=_floats_arg, required=True)
    p.add_argument("--pmax", type=_floats_arg, required=True)
    p.add_argument("--verify", action="store_true", help="cross-check against the grid oracle")
    p.add_argument("--res", type=int, default=201, help="oracle grid resolution")
    p.set_defaults(func=lambda a: _cmd_power_opt(a, "sumopt"))

    p = sub.add_parser("jam", help="cooperative-jamming power allocation")
    p.add_argument("--h", type=_floats_arg, required=True)
    p.add_argument("--pmax", type=_floats_arg, required=True)
    p.add_argument("--verify", action="store_true", help="cross-check against the grid oracle")
    p.add_argument("--res", type=int, default=201, help="oracle grid resolution")
    p.set_defaults(func=lambda a: _cmd_power_opt(a, "jam"))

    p = sub.add_parser("tdma", help="optimal time shares and the time-division region")
    p.add_argument("--h", type=_floats_arg, required=True)
    p.add_argument("--pmax", type=_floats_arg, required=True)
    p.add_argument("--power", type=_floats_arg, required=True)
    p.add_argument("--alpha", type=_floats_arg, help="time shares (defaults to the optimum)")
    p.add_argument("--delta", type=float, default=None)
    p.set_defaults(func=_cmd_tdma)

    p = sub.add_parser("split", help="randomization-rate witnesses for a rate point")
    p.add_argument("--kind", choices=["individual", "collective"], required=True)
    p.add_argument("--h", type=_floats_arg, required=True)
    p.add_argument("--pmax", type=_floats_arg, required=True)
    p.add_argument("--power", type=_floats_arg, required=True)
    p.add_argument("--secret", type=_floats_arg, required=True, help="per-user secret rates")
    p.add_argument("--open", type=_floats_arg, help="per-user open rates (default zero)")
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("scenario", help="mobile-eavesdropper sweep over a position grid")
    p.add_argument("--config", required=True, help="scenario JSON config")
    p.add_argument("--out", help="CSV output path (stdout when omitted)")
    p.add_argument("--threads", type=int, help="worker threads (capped by WIRETAP_THREADS)")
    p.set_defaults(func=_cmd_scenario)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
