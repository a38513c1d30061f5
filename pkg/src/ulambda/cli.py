"""Command-line interface.

Subcommands: verify-sharpness, random-search, maximize, monotonicity,
reproduce-all.  Options can also come from a key=value config file
(--config); explicit flags win over the file.  Exit codes: 0 success,
1 verification failure, 2 configuration error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ConfigError
from .harness import (
    RunConfig,
    report_rows,
    report_to_json_bytes,
    rows_to_csv,
    run_maximize,
    run_monotonicity,
    run_random_search,
    run_reproduce_all,
    run_verify_sharpness,
)

_INT_KEYS = {"samples", "seed", "order", "angles", "region_grid"}
_LIST_KEYS = {"lambda_grid", "radii"}
_STR_KEYS = {"out", "format"}

_KEY_ALIASES = {
    "samples_per_lambda": "samples",
    "truncation_order": "order",
    "fmt": "format",
}


def _parse_float_list(text: str) -> tuple:
    cleaned = text.strip().strip("[]")
    parts = [p for p in (s.strip() for s in cleaned.split(",")) if p]
    if not parts:
        raise ConfigError(f"empty list value: {text!r}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise ConfigError(f"bad list value: {text!r}") from None


def load_config_file(path: str) -> dict:
    """Parse a plain key = value file; '#' starts a comment."""
    values: dict = {}
    p = Path(path)
    if not p.exists():
        raise ConfigError(f"config file not found: {path}")
    for lineno, raw in enumerate(p.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip().lower().replace("-", "_")
        key = _KEY_ALIASES.get(key, key)
        value = value.strip().strip("\"'")
        if key in _LIST_KEYS:
            values[key] = _parse_float_list(value)
        elif key in _INT_KEYS:
            try:
                values[key] = int(value)
            except ValueError:
                raise ConfigError(f"{path}:{lineno}: {key} must be an integer") from None
        elif key in _STR_KEYS:
            values[key] = value
        else:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
    return values


def build_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    values: dict = {}
    if args.config:
        values.update(load_config_file(args.config))
    # flags win over the file
    if args.lambda_grid is not None:
        values["lambda_grid"] = _parse_float_list(args.lambda_grid)
    if args.samples is not None:
        values["samples"] = args.samples
    if args.seed is not None:
        values["seed"] = args.seed
    if args.order is not None:
        values["order"] = args.order
    if args.angles is not None:
        values["angles"] = args.angles
    if args.radii is not None:
        values["radii"] = _parse_float_list(args.radii)
    if args.region_grid is not None:
        values["region_grid"] = args.region_grid
    if args.out is not None:
        values["out"] = args.out
    if args.fmt is not None:
        values["format"] = args.fmt

    if "lambda_grid" in values:
        cfg.lambda_grid = tuple(values["lambda_grid"])
    if "samples" in values:
        cfg.samples_per_lambda = values["samples"]
    if "seed" in values:
        cfg.seed = values["seed"]
    if "order" in values:
        cfg.truncation_order = values["order"]
    if "angles" in values:
        cfg.angles = values["angles"]
    if "radii" in values:
        cfg.radii = tuple(values["radii"])
    if "region_grid" in values:
        cfg.region_grid = values["region_grid"]
    if "out" in values:
        cfg.out = values["out"]
    if "format" in values:
        cfg.fmt = values["format"]
    return cfg.validate()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value config file; flags win")
    common.add_argument("--lambda-grid", dest="lambda_grid", help="comma list, e.g. 0.1,0.5,1.0")
    common.add_argument("--samples", type=int, help="draws per lambda")
    common.add_argument("--seed", type=int, help="master seed")
    common.add_argument("--order", type=int, help="series truncation order")
    common.add_argument("--angles", type=int, help="angular samples per circle")
    common.add_argument("--radii", help="comma list of sampling radii in (0,1)")
    common.add_argument("--region-grid", dest="region_grid", type=int, help="region grid points per axis")
    common.add_argument("--out", help="output file (directory for reproduce-all)")
    common.add_argument("--format", dest="fmt", choices=["json", "csv"], help="report format")

    parser = argparse.ArgumentParser(
        prog="ulambda",
        description="verification harness for coefficient bounds over the class U(lambda)",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify-sharpness", parents=[common], help="evaluate sharp bounds on their witnesses")
    sub.add_parser("random-search", parents=[common], help="randomized soundness sweep")
    mx = sub.add_parser("maximize", parents=[common], help="maximize one objective over the region")
    mx.add_argument("--which", choices=["g1", "g2", "g3"], required=True)
    sub.add_parser("monotonicity", parents=[common], help="sample the derivative-sign claims")
    sub.add_parser("reproduce-all", parents=[common], help="run everything and write report + bound table")
    return parser


def _emit(report: dict, cfg: RunConfig) -> None:
    if cfg.fmt == "csv":
        cols, rows = report_rows(report)
        text = rows_to_csv(cols, rows)
        data = text.encode("utf-8")
    else:
        data = report_to_json_bytes(report)
    if cfg.out:
        Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
        Path(cfg.out).write_bytes(data)
    else:
        sys.stdout.write(data.decode("utf-8"))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2

    if args.command == "verify-sharpness":
        report = run_verify_sharpness(cfg)
    elif args.command == "random-search":
        report = run_random_search(cfg)
    elif args.command == "maximize":
        report = run_maximize(cfg, args.which)
    elif args.command == "monotonicity":
        report = run_monotonicity(cfg)
    else:  # reproduce-all
        out_dir = Path(cfg.out or "reports")
        out_dir.mkdir(parents=True, exist_ok=True)
        report, table = run_reproduce_all(cfg)
        (out_dir / "report.json").write_bytes(report_to_json_bytes(report))
        (out_dir / "bound_table.csv").write_text(table)
        print(f"wrote {out_dir / 'report.json'} and {out_dir / 'bound_table.csv'}")
        return 0 if report["ok"] else 1

    _emit(report, cfg)
    return 0 if report["ok"] else 1


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
