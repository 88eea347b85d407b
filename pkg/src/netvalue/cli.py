"""Command-line entry point: ``netvalue generate|value|sweep|fit|reproduce``."""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError, InputError, NetValueError
from .experiments import (
    DEFAULT_P_GRID, DEFAULT_REPETITIONS, ExperimentPlan, fit_fp_from_sweep,
    run_p_sweep, run_sandwich_check, run_size_sweep,
)
from .fitting import fit_power_law, fit_quadratic
from .generators import BaConfig, RandomBinomialConfig, RngSeed, WsConfig, generate
from .graph import Graph
from .valuation import Metric, evaluate

QUALITATIVE_BANNER = (
    "note: calculated value uses the {metric} metric; the published small-world and "
    "random-network magnitudes rest on an unstated counting procedure, so compare "
    "shape (growth with n and p, Zipf/Metcalfe bounds), not numbers."
)


@dataclass
class GenerateCmd:
    config: object
    seed: RngSeed
    out: Path | None


@dataclass
class ValueCmd:
    graph: Path
    metric: Metric
    json: bool = False


@dataclass
class SweepCmd:
    plan: ExperimentPlan
    kind: str
    out: Path | None
    json: bool = False
    svg: bool = False


@dataclass
class FitCmd:
    input: Path
    model: str
    x: str | None = None
    y: str | None = None


@dataclass
class ReproduceCmd:
    target: str  # "table" or "figure"
    ident: int
    out: Path
    reps: int
    seed: int
    json: bool = False
    svg: bool = False


# ----------------------------------------------------------------------------- parsing

def _u64(text: str) -> int:
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {v}")
    return v


def _probability(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number {text!r}") from None
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"probability must lie in [0, 1], got {v}")
    return v


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer list {text!r}") from None


def _prob_list(text: str) -> tuple[float, ...]:
    return tuple(_probability(t) for t in text.split(",") if t.strip())


def _metric(text: str) -> Metric:
    try:
        return Metric.parse(text)
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="netvalue", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="generate one graph as canonical JSON")
    g.add_argument("--model", choices=("ws", "ba", "random"), required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, default=4)
    g.add_argument("--p", type=_probability, default=0.0, help="ws rewiring probability")
    g.add_argument("--m", type=int, default=1)
    g.add_argument("--seed-size", type=int)
    g.add_argument("--prob", type=_probability, default=0.3, help="random edge probability")
    g.add_argument("--seed", type=_u64, default=0)
    g.add_argument("--stream", type=int, default=0, help="repetition stream index")
    g.add_argument("--out", type=Path)

    v = sub.add_parser("value", help="value of a graph file under one metric")
    v.add_argument("--graph", type=Path, required=True)
    v.add_argument("--metric", type=_metric, required=True,
                   help="metcalfe | zipf | reed | degree-sum | hop:<h>")
    v.add_argument("--json", action="store_true")

    s = sub.add_parser("sweep", help="Monte Carlo sweep over sizes or rewiring probabilities")
    s.add_argument("--plan", type=Path, help="experiment plan JSON")
    s.add_argument("--family", choices=("ws", "ba", "random"))
    s.add_argument("--sizes", type=_int_list)
    s.add_argument("--p-grid", type=_prob_list)
    s.add_argument("--k", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--seed-size", type=int)
    s.add_argument("--prob", type=_probability, dest="edge_prob")
    s.add_argument("--metric", type=_metric)
    s.add_argument("--kind", choices=("auto", "size", "p", "sandwich"), default="auto")
    _common(s)
    s.add_argument("--out", type=Path)

    f = sub.add_parser("fit", help="least-squares fit of a two-column CSV")
    f.add_argument("--input", type=Path, required=True)
    f.add_argument("--model", choices=("quadratic", "power-law"), required=True)
    f.add_argument("--x", help="x column name (header CSVs)")
    f.add_argument("--y", help="y column name (header CSVs)")

    r = sub.add_parser("reproduce", help="regenerate a published table or figure dataset")
    which = r.add_mutually_exclusive_group(required=True)
    which.add_argument("--table", type=int, choices=(1, 2, 3))
    which.add_argument("--figure", type=int, choices=(2, 8, 13))
    _common(r)
    r.add_argument("--out", type=Path, default=Path("."), help="output directory")
    return parser


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=_u64)
    p.add_argument("--reps", type=_positive_int)
    p.add_argument("--json", action="store_true", help="also write a JSON mirror")
    p.add_argument("--svg", action="store_true", help="also write an SVG plot")


def _check_input(parser, path: Path) -> None:
    if not path.is_file():
        parser.error(f"input file not found: {path}")


def _check_output(parser, path: Path | None) -> None:
    if path is not None and not path.parent.resolve().is_dir():
        parser.error(f"output directory does not exist: {path.parent}")


def parse_args(argv: list[str]):
    parser = build_parser()
    a = parser.parse_args(argv)

    if a.command == "generate":
        if a.model == "ws":
            cfg = WsConfig(a.n, a.k, a.p)
        elif a.model == "ba":
            cfg = BaConfig(a.n, a.m, a.seed_size)
        else:
            cfg = RandomBinomialConfig.uniform(a.n, a.prob)
        try:
            cfg.validate()
        except ConfigError as exc:
            parser.error(str(exc))
        if a.stream < 0:
            parser.error("--stream must be non-negative")
        _check_output(parser, a.out)
        return GenerateCmd(cfg, RngSeed(a.seed, a.stream), a.out)

    if a.command == "value":
        _check_input(parser, a.graph)
        return ValueCmd(a.graph, a.metric, a.json)

    if a.command == "sweep":
        return _parse_sweep(parser, a)

    if a.command == "fit":
        _check_input(parser, a.input)
        return FitCmd(a.input, a.model, a.x, a.y)

    target, ident = ("table", a.table) if a.table is not None else ("figure", a.figure)
    if not a.out.is_dir():
        parser.error(f"output directory does not exist: {a.out}")
    return ReproduceCmd(target, ident, a.out,
                        a.reps if a.reps is not None else DEFAULT_REPETITIONS,
                        a.seed if a.seed is not None else 0, a.json, a.svg)


def _parse_sweep(parser, a) -> SweepCmd:
    if a.plan is not None:
        _check_input(parser, a.plan)
        try:
            doc = json.loads(a.plan.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            parser.error(f"cannot read plan {a.plan}: {exc}")
        if not isinstance(doc, dict):
            parser.error("plan document must be a JSON object")
    else:
        doc = {}
    overrides = {"family": a.family, "sizes": a.sizes, "p_grid": a.p_grid, "k": a.k,
                 "m": a.m, "seed_size": a.seed_size, "edge_prob": a.edge_prob,
                 "metric": a.metric.token if a.metric else None,
                 "repetitions": a.reps, "master_seed": a.seed}
    doc.update({key: val for key, val in overrides.items() if val is not None})
    for required in ("family", "sizes", "metric"):
        if required not in doc:
            parser.error(f"sweep needs --{required} (or a --plan providing it)")
    if doc["family"] == "ws":
        doc.setdefault("p_grid", list(DEFAULT_P_GRID))
    try:
        plan = ExperimentPlan.from_dict(doc)
    except (ConfigError, InputError) as exc:
        parser.error(str(exc))
    kind = a.kind
    if kind == "auto":
        if plan.family == "random":
            kind = "sandwich"
        elif plan.family == "ws" and len(plan.p_grid) > 1:
            kind = "p"
        else:
            kind = "size"
    try:
        for n in plan.sizes:
            for p in (plan.p_grid or (None,)):
                plan.config(n, p)
    except ConfigError as exc:
        parser.error(str(exc))
    _check_output(parser, a.out)
    return SweepCmd(plan, kind, a.out, a.json, a.svg)


# ----------------------------------------------------------------------------- execution

def write_atomic(files: dict[Path, str]) -> None:
    """Write every file via temp-and-rename; nothing is left behind on failure."""
    staged = []
    try:
        for path, text in files.items():
            fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
            staged.append((tmp, path))
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        for tmp, path in staged:
            os.replace(tmp, path)
    except BaseException:
        for tmp, _ in staged:
            if os.path.exists(tmp):
                os.unlink(tmp)
        raise


def _format_number(x: float) -> str:
    if x == int(x) and abs(x) < 2**53:
        return str(int(x))
    return repr(x)


def _sweep_files(result, stem: Path, as_json: bool, svg: bool, title: str, fit=None) -> dict:
    files = {stem.with_suffix(".csv"): result.to_csv()}
    if as_json:
        files[stem.with_suffix(".json")] = result.to_json()
    if svg:
        from .plotting import sweep_svg
        files[stem.with_suffix(".svg")] = sweep_svg(result, title, fit)
    return files


def _run_sweep(plan: ExperimentPlan, kind: str):
    if kind == "p":
        return run_p_sweep(plan)
    if kind == "sandwich":
        return run_sandwich_check(plan)
    return run_size_sweep(plan)


def _reproduce_plan(cmd: ReproduceCmd) -> tuple[ExperimentPlan, str, str]:
    hop2 = Metric("hop", 2)
    common = {"repetitions": cmd.reps, "master_seed": cmd.seed}
    if cmd.target == "table" and cmd.ident in (1, 2):
        p = 0.18 if cmd.ident == 1 else 0.32
        plan = ExperimentPlan("ws", tuple(range(40, 101, 10)), hop2, p_grid=(p,), k=4, **common)
        return plan, "size", f"Small-world value vs size, k=4, p={p}"
    if cmd.target == "table" or cmd.ident == 13:
        plan = ExperimentPlan("ba", tuple(range(30, 101, 10)), Metric("degree-sum"),
                              m=1, seed_size=3, **common)
        return plan, "size", "Scale-free value vs size, m=1"
    if cmd.ident == 2:
        plan = ExperimentPlan("random", tuple(range(20, 101, 10)), hop2, edge_prob=0.3, **common)
        return plan, "sandwich", "Random network value vs size, edge probability 0.3"
    plan = ExperimentPlan("ws", (100,), hop2, p_grid=DEFAULT_P_GRID, k=4, **common)
    return plan, "p", "Value ratio vs rewiring probability, n=100, k=4"


def execute(cmd) -> int:
    try:
        return _execute(cmd)
    except (NetValueError, OSError, ValueError) as exc:
        print(f"netvalue: error: {exc}", file=sys.stderr)
        return 1


def _execute(cmd) -> int:
    if isinstance(cmd, GenerateCmd):
        text = generate(cmd.config, cmd.seed).to_json() + "\n"
        if cmd.out is None:
            sys.stdout.write(text)
        else:
            write_atomic({cmd.out: text})
        return 0

    if isinstance(cmd, ValueCmd):
        g = Graph.from_json(cmd.graph.read_text())
        report = evaluate(g, cmd.metric)
        if cmd.json:
            doc = {"metric": cmd.metric.token, "n": report.n, "value": report.value}
            if report.log2_value is not None:
                doc["log2_value"] = report.log2_value
            print(json.dumps(doc, sort_keys=True))
        else:
            print(_format_number(report.value))
        return 0

    if isinstance(cmd, SweepCmd):
        result = _run_sweep(cmd.plan, cmd.kind)
        fit = fit_fp_from_sweep(result) if cmd.kind == "p" and len(result.rows) >= 3 else None
        if cmd.out is None:
            sys.stdout.write(result.to_csv())
            return 0
        stem = cmd.out.with_suffix("")
        files = _sweep_files(result, stem, cmd.json, cmd.svg, "", fit)
        files[cmd.out] = files.pop(stem.with_suffix(".csv"))
        if fit is not None:
            files[stem.with_name(stem.name + "_fit").with_suffix(".json")] = \
                json.dumps(fit.to_dict(), sort_keys=True) + "\n"
        write_atomic(files)
        return 0

    if isinstance(cmd, FitCmd):
        xs, ys = read_xy_csv(cmd.input, cmd.x, cmd.y)
        if cmd.model == "quadratic":
            fit = fit_quadratic(zip(xs, ys))
        else:
            hist = {}
            for d, c in zip(xs, ys):
                if d != int(d) or c != int(c):
                    raise InputError("power-law input needs integer degree,count rows")
                hist[int(d)] = hist.get(int(d), 0) + int(c)
            fit = fit_power_law(hist)
        print(json.dumps(fit.to_dict(), sort_keys=True))
        return 0

    if isinstance(cmd, ReproduceCmd):
        plan, kind, title = _reproduce_plan(cmd)
        if plan.family != "ba":
            print(QUALITATIVE_BANNER.format(metric=plan.metric.token), file=sys.stderr)
        result = _run_sweep(plan, kind)
        fit = fit_fp_from_sweep(result) if kind == "p" else None
        stem = cmd.out / f"{cmd.target}{cmd.ident}"
        files = _sweep_files(result, stem, cmd.json, cmd.svg, title, fit)
        if fit is not None:
            files[cmd.out / f"{cmd.target}{cmd.ident}_fit.json"] = \
                json.dumps(fit.to_dict(), sort_keys=True) + "\n"
        write_atomic(files)
        for path in files:
            print(path)
        return 0

    raise TypeError(f"unknown command {cmd!r}")


def read_xy_csv(path: Path, x: str | None = None, y: str | None = None):
    """Read two numeric columns; a non-numeric first row is treated as a header."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [r for r in csv.reader(fh) if r and any(c.strip() for c in r)]
    if not rows:
        raise InputError(f"{path}: no data rows")
    header = None
    try:
        [float(c) for c in rows[0]]
    except ValueError:
        header, rows = [c.strip() for c in rows[0]], rows[1:]
    if header is None and (x or y):
        raise InputError(f"{path}: --x/--y need a header row")
    try:
        ix = header.index(x) if x else 0
        iy = header.index(y) if y else 1
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None
    xs, ys = [], []
    for lineno, r in enumerate(rows, start=2 if header else 1):
        try:
            xs.append(float(r[ix]))
            ys.append(float(r[iy]))
        except (ValueError, IndexError):
            raise InputError(f"{path}: line {lineno}: expected numeric columns") from None
    return xs, ys


def main(argv: list[str] | None = None) -> int:
    cmd = parse_args(sys.argv[1:] if argv is None else argv)
    return execute(cmd)


if __name__ == "__main__":
    sys.exit(main())
