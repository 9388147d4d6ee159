"""Command-line interface.

Subcommands:
  decompose         greedy periodic decomposition of a CSV signal
  similarity        periodic similarity between two CSV signals
  experiment        length / SNR robustness sweeps with seeded trials
  inspect-subspace  number-theoretic view of one period's subspace

Signals are single-column CSV files (one sample per line, optional
header).  All JSON output indexes periods 1-based.  Exit codes: 0 ok,
2 unreadable/unparseable input, 3 precondition violation, 4 internal
invariant failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import energy_histogram, periodic_similarity, pes
from .experiment import ExperimentConfig, run_experiment
from .number_theory import divisors, euler_totient, ramanujan_sums
from .pursuit import PursuitConfig, frsp, rsp
from .subspace import build_basis

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_INVARIANT = 4

WORKERS_ENV = "PERIODPURSUIT_WORKERS"


class InputFileError(Exception):
    pass


def read_signal_csv(path) -> np.ndarray:
    """Load a single-column CSV: one sample per line, optional header row."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputFileError(f"cannot read {path}: {exc}") from exc
    values = []
    header_allowed = True
    for lineno, line in enumerate(text.splitlines(), start=1):
        item = line.strip().rstrip(",")
        if not item:
            continue
        try:
            values.append(float(item))
        except ValueError:
            if header_allowed:
                header_allowed = False
                continue
            raise InputFileError(f"{path}:{lineno}: not a number: {line.strip()!r}") from None
        header_allowed = False
    if not values:
        raise InputFileError(f"{path}: no samples found")
    return np.asarray(values, dtype=np.float64)


def _emit(payload: dict, output: str | None) -> None:
    text = json.dumps(payload, indent=2)
    if output:
        Path(output).write_text(text + "\n")
        print(f"wrote {output}")
    else:
        print(text)


def _add_pursuit_flags(parser: argparse.ArgumentParser, default_q: int = 60) -> None:
    parser.add_argument("--max-period", type=int, default=default_q, metavar="Q",
                        help=f"largest candidate period (default {default_q})")
    parser.add_argument("--iterations", type=int, default=10, metavar="K",
                        help="maximum pursuit iterations (default 10)")
    parser.add_argument("--tolerance", type=float, default=1e-6, metavar="T",
                        help="relative residual energy early stop (default 1e-6)")
    parser.add_argument("--algorithm", choices=("frsp", "rsp"), default="frsp",
                        help="fast (one ACF pass per iteration) or exact pursuit")
    parser.add_argument("--metric", choices=("exact", "approximate"), default="exact",
                        help="periodicity metric form (default exact)")


def _pursuit_config(args) -> PursuitConfig:
    return PursuitConfig(
        max_period=args.max_period,
        max_iterations=args.iterations,
        residual_tolerance=args.tolerance,
        metric_mode=args.metric,
    )


def _decompose(x: np.ndarray, args):
    engine = rsp if args.algorithm == "rsp" else frsp
    return engine(x, _pursuit_config(args))


def cmd_decompose(args) -> int:
    x = read_signal_csv(args.input)
    decomposition = _decompose(x, args)
    spectrum = pes(decomposition, args.max_period)

    if args.verify:
        recon = decomposition.reconstruction()
        err = float(np.linalg.norm(recon - x))
        scale = float(np.linalg.norm(x)) or 1.0
        if err / scale > 1e-8:
            print(f"verification failed: reconstruction error {err / scale:.3e}",
                  file=sys.stderr)
            return EXIT_INVARIANT

    payload = {
        "version": __version__,
        "input": {"path": str(args.input), "length": int(x.size)},
        "config": {
            "algorithm": args.algorithm,
            "max_period": args.max_period,
            "iterations": args.iterations,
            "tolerance": args.tolerance,
            "metric_mode": args.metric,
        },
        "selected_periods": decomposition.selected_periods,
        "components": [
            {
                "period": c.period,
                "energy": c.energy,
                "metric": c.metric,
                "iteration": c.iteration,
            }
            for c in decomposition.components
        ],
        "input_energy": decomposition.input_energy,
        "residual_energy": decomposition.residual_energy_trace[-1],
        "residual_energy_trace": decomposition.residual_energy_trace,
        "energy_split_defects": decomposition.energy_split_defects,
        "representation_condition_met": decomposition.representation_condition_met,
        "degenerate_stop": decomposition.degenerate_stop,
        "pes": spectrum.to_dict(),
    }
    _emit(payload, args.output)

    if args.figures:
        from .plotting import save_decomposition_plot, save_spectrum_plot

        outdir = Path(args.figures)
        outdir.mkdir(parents=True, exist_ok=True)
        stem = Path(args.input).stem
        p1 = save_spectrum_plot(spectrum.energies, outdir / f"{stem}_pes.png")
        p2 = save_decomposition_plot(
            x, decomposition.residual, decomposition.residual_energy_trace,
            outdir / f"{stem}_decomposition.png",
        )
        print(f"wrote {p1}\nwrote {p2}")
    return EXIT_OK


def cmd_similarity(args) -> int:
    xa = read_signal_csv(args.input_a)
    xb = read_signal_csv(args.input_b)
    da = _decompose(xa, args)
    db = _decompose(xb, args)
    ha = energy_histogram(da, args.max_period)
    hb = energy_histogram(db, args.max_period)
    payload = {
        "version": __version__,
        "inputs": [str(args.input_a), str(args.input_b)],
        "config": {
            "algorithm": args.algorithm,
            "max_period": args.max_period,
            "iterations": args.iterations,
            "tolerance": args.tolerance,
            "metric_mode": args.metric,
        },
        "similarity": periodic_similarity(ha, hb),
        "histogram_a": ha.to_dict(),
        "histogram_b": hb.to_dict(),
    }
    _emit(payload, args.output)
    return EXIT_OK


def _parse_grid(raw: str) -> list[float]:
    try:
        values = [float(v) for v in raw.replace(",", " ").split()]
    except ValueError:
        raise ValueError(f"grid must be a comma- or space-separated list of numbers: {raw!r}")
    if not values:
        raise ValueError("grid is empty")
    return values


def cmd_experiment(args) -> int:
    workers = args.workers
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1"))
    cfg = ExperimentConfig(
        protocol=args.protocol,
        grid=_parse_grid(args.grid),
        trials=args.trials,
        base_seed=args.seed,
        max_period=args.max_period,
        iterations=args.iterations,
        residual_tolerance=args.tolerance,
        metric_mode=args.metric,
        snr_length=args.snr_length,
        reference_length=args.reference_length,
        truth_mode=args.truth,
        workers=workers,
    )
    report = run_experiment(cfg)

    out = Path(args.output)
    out.write_text(json.dumps(report.to_dict(), indent=2) + "\n")
    print(f"wrote {out}")

    table_path = out.with_suffix(".csv")
    header = "length" if cfg.protocol == "length" else "snr_db"
    lines = [f"{header},mean_similarity"]
    lines += [f"{v:g},{m:.6f}" for v, m in report.table()]
    table_path.write_text("\n".join(lines) + "\n")
    print(f"wrote {table_path}")

    if args.figures:
        from .plotting import save_sweep_plot

        outdir = Path(args.figures)
        outdir.mkdir(parents=True, exist_ok=True)
        xlabel = "signal length" if cfg.protocol == "length" else "SNR (dB)"
        fig_path = save_sweep_plot(
            [p.value for p in report.points],
            [p.mean_similarity for p in report.points],
            [p.std_similarity for p in report.points],
            xlabel,
            outdir / f"{out.stem}_sweep.png",
        )
        print(f"wrote {fig_path}")
    return EXIT_OK


def cmd_inspect_subspace(args) -> int:
    q = args.period
    basis = build_basis(q)
    payload = {
        "period": q,
        "ramanujan_sums": [int(v) for v in ramanujan_sums(q)],
        "totient": euler_totient(q),
        "divisors": divisors(q),
        "dimension": basis.dimension,
        "projector_trace": float(np.trace(basis.projector)),
    }
    _emit(payload, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="periodpursuit",
        description="Decompose signals into exactly periodic components, "
                    "estimate hidden integer periods, and compare periodic structure.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="decompose a signal into periodic components")
    p.add_argument("input", help="single-column CSV signal file")
    _add_pursuit_flags(p)
    p.add_argument("--output", metavar="PATH", help="write JSON here instead of stdout")
    p.add_argument("--verify", action="store_true",
                   help="check that components + residual reproduce the input")
    p.add_argument("--figures", metavar="DIR",
                   help="render spectrum and residual figures into DIR")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("similarity", help="periodic similarity between two signals")
    p.add_argument("input_a")
    p.add_argument("input_b")
    _add_pursuit_flags(p)
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_similarity)

    p = sub.add_parser("experiment", help="run a length or SNR robustness sweep")
    p.add_argument("--protocol", choices=("length", "snr"), required=True)
    p.add_argument("--grid", required=True,
                   help="comma-separated sweep values, e.g. --grid 200,400,800; "
                        "use the equals form for negative values: --grid=-10,0,10")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=123, help="base seed (default 123)")
    p.add_argument("--max-period", type=int, default=120, metavar="Q")
    p.add_argument("--iterations", type=int, default=10, metavar="K")
    p.add_argument("--tolerance", type=float, default=1e-6, metavar="T")
    p.add_argument("--metric", choices=("exact", "approximate"), default="exact")
    p.add_argument("--snr-length", type=int, default=500,
                   help="signal length for the snr protocol (default 500)")
    p.add_argument("--reference-length", type=int, default=1000,
                   help="clean reference length for the ground truth (default 1000)")
    p.add_argument("--truth", choices=("reference", "true-periods"), default="reference",
                   help="ground-truth histogram construction (default reference)")
    p.add_argument("--workers", type=int, default=None,
                   help=f"parallel trial workers (default ${WORKERS_ENV} or 1)")
    p.add_argument("--output", required=True, metavar="PATH",
                   help="report JSON path; a .csv table is written alongside")
    p.add_argument("--figures", metavar="DIR", help="render the sweep figure into DIR")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("inspect-subspace", help="print c_q, totient, divisors, trace")
    p.add_argument("--period", type=int, required=True)
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_inspect_subspace)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
