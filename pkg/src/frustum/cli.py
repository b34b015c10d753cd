"""Command-line front end: generate, analyze, validate, sweep.

Exit codes: 0 success, 1 validation mismatch, 2 input or configuration
error, 3 resource limit (vertex budget).  All outputs are deterministic
text, so identical invocations produce byte-identical files.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import BudgetExceededError, FrustumError, InvalidParamsError
from .io import read_model_file, read_run, write_run
from .metrics import metrics_report, render_metrics_report
from .model import ModelParams, generate, snapshots, validate_params
from .oracles import RECOMMENDED_WIENER_CANDIDATE, densification_diagnostic
from .sequences import parse_sequence_spec
from .spectral import spectral_report
from .validation import (
    render_validation_json,
    render_validation_text,
    run_validation,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_CONFIG = 2
EXIT_RESOURCE = 3


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation: one command plus its inputs and toggles."""

    command: str
    params: ModelParams | None
    run_dir: str | None
    out_dir: str | None
    distances: bool = True
    clustering: bool = True
    spectral: bool = False
    workers: int = 1
    negative_control: bool = False


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frustum",
        description=(
            "Deterministic clique-extension graphs: every clique of order f(t) "
            "is extended by g(t) new vertices each step."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_model_args(p, require_model=True):
        p.add_argument("--model", metavar="PATH", help="model spec file")
        p.add_argument("--n", type=int, help="seed clique order (inline model)")
        p.add_argument("--f", metavar="SPEC", help="clique order sequence, e.g. constant:1")
        p.add_argument("--g", metavar="SPEC", help="cap size sequence, e.g. affine:1,0")
        p.add_argument("--horizon", type=int, help="number of growth steps")
        p.add_argument("--budget", type=int, help="vertex budget cap")
        _ = require_model

    gen = sub.add_parser("generate", help="generate a graph and export it")
    add_model_args(gen)
    gen.add_argument("--out", metavar="DIR", required=True, help="output directory")

    ana = sub.add_parser("analyze", help="per-step metrics for every snapshot")
    add_model_args(ana, require_model=False)
    ana.add_argument("--in", dest="run_dir", metavar="DIR",
                     help="read a previously generated run instead of a model")
    ana.add_argument("--out", metavar="DIR", help="write metrics.txt and series.txt here")
    ana.add_argument("--distances", action=argparse.BooleanOptionalAction, default=True,
                     help="diameter, Wiener index, average distance")
    ana.add_argument("--clustering", action=argparse.BooleanOptionalAction, default=True,
                     help="mean clustering coefficient")
    ana.add_argument("--spectral", action=argparse.BooleanOptionalAction, default=False,
                     help="normalized Laplacian spectral gap")

    val = sub.add_parser("validate", help="closed forms vs brute-force measurement")
    add_model_args(val, require_model=False)
    val.add_argument("--out", metavar="DIR", help="write report.txt and report.json here")
    val.add_argument("--negative-control", action="store_true",
                     help="inject a corrupted expected value; the run must fail")

    swp = sub.add_parser("sweep", help="growth diagnostics over a parameter grid")
    swp.add_argument("--n", type=int, default=1, help="seed clique order for every cell")
    swp.add_argument("--f-grid", default="", metavar="SPECS",
                     help="semicolon-separated f specs, e.g. 'constant:1;constant:2'")
    swp.add_argument("--g-grid", default="", metavar="SPECS",
                     help="semicolon-separated g specs")
    swp.add_argument("--horizon", type=int, required=True)
    swp.add_argument("--budget", type=int)
    swp.add_argument("--workers", type=int, default=1, help="parallel sweep cells")
    swp.add_argument("--out", metavar="DIR", help="write sweep.txt here")
    return parser


def _resolve_params(args) -> ModelParams | None:
    """Model from --model file or inline flags, with overrides applied."""
    inline = args.n is not None or args.f is not None or args.g is not None
    if args.model and inline:
        raise ValueError("give either --model or inline --n/--f/--g, not both")
    if args.model:
        params = read_model_file(args.model)
    elif inline:
        if args.n is None or args.f is None or args.g is None:
            raise ValueError("inline models need all of --n, --f, --g")
        if args.horizon is None:
            raise ValueError("inline models need --horizon")
        params = ModelParams(
            n=args.n,
            f=parse_sequence_spec(args.f),
            g=parse_sequence_spec(args.g),
            horizon=args.horizon,
        )
    else:
        return None
    if args.horizon is not None:
        params = replace(params, horizon=args.horizon)
    if args.budget is not None:
        params = replace(params, vertex_budget=args.budget)
    return params


def cmd_generate(config: RunConfig) -> int:
    params = config.params
    violations = validate_params(params)
    if violations:
        for v in violations:
            print(f"invalid model: {v}", file=sys.stderr)
        return EXIT_CONFIG
    graph = generate(params)
    write_run(config.out_dir, graph, params)
    print(
        f"generated horizon={graph.horizon} n={graph.n} e={graph.edge_count} "
        f"caps={len(graph.caps)} -> {config.out_dir}"
    )
    return EXIT_OK


def _series_text(snaps, config: RunConfig) -> str:
    lines = ["# t n e ratio diam clustering lambda"]
    report = metrics_report(snaps, config.distances, config.clustering)
    for t, step in enumerate(report.steps):
        lam = "-"
        if config.spectral:
            try:
                lam = f"{spectral_report(snaps[t]).lambda_gap:.9f}"
            except FrustumError:
                lam = "-"
            except ValueError:
                lam = "-"
        ratio = str(step.ratio)
        diam = "-" if step.diameter is None else str(step.diameter)
        clus = "-" if step.clustering is None else str(step.clustering)
        lines.append(f"{t} {step.n} {step.e} {ratio} {diam} {clus} {lam}")
    return "\n".join(lines) + "\n"


def cmd_analyze(config: RunConfig) -> int:
    if config.run_dir is not None:
        graph = read_run(config.run_dir)
    else:
        graph = generate(config.params)
    snaps = snapshots(graph)
    metrics_text = render_metrics_report(
        metrics_report(snaps, config.distances, config.clustering)
    )
    series_text = _series_text(snaps, config)
    if config.out_dir:
        os.makedirs(config.out_dir, exist_ok=True)
        for name, text in (("metrics.txt", metrics_text), ("series.txt", series_text)):
            with open(os.path.join(config.out_dir, name), "w", encoding="utf-8",
                      newline="\n") as fh:
                fh.write(text)
        print(f"analyzed horizon={graph.horizon} n={graph.n} -> {config.out_dir}")
    else:
        sys.stdout.write(metrics_text)
        sys.stdout.write(series_text)
    return EXIT_OK


def cmd_validate(config: RunConfig) -> int:
    report = run_validation(
        params=config.params, negative_control=config.negative_control
    )
    text = render_validation_text(report)
    if config.out_dir:
        os.makedirs(config.out_dir, exist_ok=True)
        for name, payload in (
            ("report.txt", text),
            ("report.json", render_validation_json(report)),
        ):
            with open(os.path.join(config.out_dir, name), "w", encoding="utf-8",
                      newline="\n") as fh:
                fh.write(payload)
    sys.stdout.write(text)
    if config.params is None:
        if report.wiener_winners == (RECOMMENDED_WIENER_CANDIDATE,):
            print(
                "Wiener arbitration: the pair-partition recurrence is the only "
                "closed form matching brute force on every calibration run"
            )
        else:
            print(
                "Wiener arbitration FAILED: matching candidates = "
                + (",".join(report.wiener_winners) or "none")
            )
    if not report.all_ok:
        for row in report.failures:
            print(
                f"mismatch: {row.quantity} {row.instance} t={row.t} "
                f"expected {row.expected} measured {row.measured}",
                file=sys.stderr,
            )
        return EXIT_VALIDATION
    return EXIT_OK


def _sweep_cell(payload: tuple) -> dict:
    index, n, f_text, g_text, horizon, budget = payload
    cell = {
        "index": index, "f": f_text, "g": g_text,
        "status": "ok", "n": "-", "e": "-", "ratio": "-",
        "growth_factor_min": "-", "densify_evidence": "-", "clique_richness": "-",
    }
    try:
        params = ModelParams(
            n=n,
            f=parse_sequence_spec(f_text),
            g=parse_sequence_spec(g_text),
            horizon=horizon,
            **({"vertex_budget": budget} if budget else {}),
        )
        violations = validate_params(params)
        if violations:
            cell["status"] = "invalid: " + violations[0]
            return cell
        graph = generate(params)
        snaps = snapshots(graph)
        diag = densification_diagnostic(snaps, params)
        cell["n"] = str(graph.n)
        cell["e"] = str(graph.edge_count)
        cell["ratio"] = str(Fraction(graph.edge_count, graph.n))
        if diag.growth_factor_min is not None:
            cell["growth_factor_min"] = str(diag.growth_factor_min)
        cell["densify_evidence"] = "yes" if diag.densify_evidence else "no"
        cell["clique_richness"] = "yes" if diag.clique_richness_somewhere else "no"
    except BudgetExceededError as exc:
        cell["status"] = f"budget: projected n={exc.projected_vertices} at t={exc.step}"
    except (FrustumError, ValueError) as exc:
        cell["status"] = f"error: {exc}"
    return cell


def cmd_sweep(args) -> int:
    f_specs = [s.strip() for s in args.f_grid.split(";") if s.strip()]
    g_specs = [s.strip() for s in args.g_grid.split(";") if s.strip()]
    payloads = []
    index = 0
    for f_text in f_specs:
        for g_text in g_specs:
            payloads.append((index, args.n, f_text, g_text, args.horizon, args.budget))
            index += 1
    if args.workers > 1 and payloads:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            cells = list(pool.map(_sweep_cell, payloads))
    else:
        cells = [_sweep_cell(p) for p in payloads]
    header = "index | f | g | status | n | e | ratio | growth_factor_min | densify_evidence | clique_richness"
    lines = [header]
    for cell in cells:  # map preserves grid order
        lines.append(
            f"{cell['index']} | {cell['f']} | {cell['g']} | {cell['status']} | "
            f"{cell['n']} | {cell['e']} | {cell['ratio']} | "
            f"{cell['growth_factor_min']} | {cell['densify_evidence']} | "
            f"{cell['clique_richness']}"
        )
    text = "\n".join(lines) + "\n"
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        with open(os.path.join(args.out, "sweep.txt"), "w", encoding="utf-8",
                  newline="\n") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sweep":
            return cmd_sweep(args)
        params = _resolve_params(args)
        if args.command == "generate":
            if params is None:
                raise ValueError("generate needs --model or inline --n/--f/--g")
            config = RunConfig("generate", params, None, args.out)
            return cmd_generate(config)
        if args.command == "analyze":
            if params is None and args.run_dir is None:
                raise ValueError("analyze needs --model, inline params, or --in DIR")
            config = RunConfig(
                "analyze", params, args.run_dir, args.out,
                distances=args.distances, clustering=args.clustering,
                spectral=args.spectral,
            )
            return cmd_analyze(config)
        config = RunConfig(
            "validate", params, None, args.out,
            negative_control=args.negative_control,
        )
        return cmd_validate(config)
    except BudgetExceededError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvalidParamsError as exc:
        for v in exc.violations:
            print(f"invalid model: {v}", file=sys.stderr)
        return EXIT_CONFIG
    except (FrustumError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
