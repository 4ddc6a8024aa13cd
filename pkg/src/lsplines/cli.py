"""Command-line front end: CSV in, fitted samples + figures out.

Two subcommands:

* ``interp`` reads a two-column t,z CSV, fits a clamped or natural tension
  interpolant, and writes the sampled curve as CSV, optionally with an SVG
  chart and/or a matplotlib figure.
* ``demo`` runs a built-in seven-knot example (tension 5, data sin(25 t),
  end slopes 25) and writes the sampled curve, the piecewise-linear
  interpolant of the same points for comparison, an SVG overlay and a PNG.

Exit codes: 0 success, 1 configuration error, 2 input parse error,
3 I/O error, 4 numeric failure.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import csvio, plots, svg
from .errors import (
    BadSpec,
    ConfigError,
    DimensionMismatch,
    DomainError,
    NonFiniteInput,
    ParseError,
    SingularSystem,
)
from .spline import fit
from .system import NATURAL, Clamped

__all__ = ["main", "entrypoint", "RunConfig", "DEMO_KNOTS", "DEMO_XI"]

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_PARSE = 2
EXIT_IO = 3
EXIT_NUMERIC = 4

_NUMERIC_ERRORS = (DomainError, DimensionMismatch, NonFiniteInput, SingularSystem, BadSpec)

# Built-in demo setup: seven knots on [0, 1], data sin(25 t), tension 5,
# both end slopes prescribed as 25.
DEMO_XI = 5.0
DEMO_KNOTS = (0.0, 0.1667, 0.3333, 0.5, 0.6667, 0.8333, 1.0)
DEMO_FREQ = 25.0
DEMO_SLOPE = 25.0
DEMO_SAMPLES = 500


@dataclass
class RunConfig:
    """Validated settings for one ``interp`` run."""

    xi: float
    boundary: str
    input_path: str
    output_path: str
    left_deriv: float | None = None
    right_deriv: float | None = None
    svg_path: str | None = None
    plot_path: str | None = None
    samples: int = 500

    def __post_init__(self):
        if self.boundary not in ("clamped", "natural"):
            raise ConfigError(f"--boundary must be 'clamped' or 'natural', got {self.boundary!r}")
        if self.boundary == "clamped":
            if self.left_deriv is None or self.right_deriv is None:
                raise ConfigError("--boundary clamped requires both --left-deriv and --right-deriv")
        else:
            given = [
                name
                for name, value in (("--left-deriv", self.left_deriv), ("--right-deriv", self.right_deriv))
                if value is not None
            ]
            if given:
                raise ConfigError(
                    f"--boundary natural conflicts with {' and '.join(given)}; drop the derivative flags"
                )
        if not math.isfinite(self.xi) or self.xi < 0.0:
            raise ConfigError(f"--xi must be a finite nonnegative number, got {self.xi!r}")
        if self.samples < 2:
            raise ConfigError(f"--samples must be at least 2, got {self.samples}")

    def boundary_condition(self):
        if self.boundary == "clamped":
            return Clamped(self.left_deriv, self.right_deriv)
        return NATURAL


def cmd_interp(cfg):
    t, z = csvio.read_points(cfg.input_path)
    model = fit(t, z, cfg.xi, cfg.boundary_condition())
    table = model.sample(count=cfg.samples)
    csvio.write_samples(table, cfg.output_path)
    if cfg.svg_path:
        svg.write_chart(
            cfg.svg_path,
            series=[(table.t, table.value)],
            markers=(t, z),
            labels=[f"tension spline (xi={cfg.xi:g})"],
        )
    if cfg.plot_path:
        plots.save_curve_plot(
            cfg.plot_path,
            curves=[(table.t, table.value, f"tension spline (xi={cfg.xi:g})")],
            knots=(t, z),
            title=f"{cfg.boundary} fit of {os.path.basename(cfg.input_path)}",
        )
    return EXIT_OK


def cmd_demo(out_dir):
    os.makedirs(out_dir, exist_ok=True)
    t = np.array(DEMO_KNOTS)
    z = np.sin(DEMO_FREQ * t)
    model = fit(t, z, DEMO_XI, Clamped(DEMO_SLOPE, DEMO_SLOPE))
    table = model.sample(count=DEMO_SAMPLES)
    linear = np.interp(table.t, t, z)

    spline_csv = os.path.join(out_dir, "lspline.csv")
    linear_csv = os.path.join(out_dir, "linear.csv")
    chart_svg = os.path.join(out_dir, "demo.svg")
    chart_png = os.path.join(out_dir, "demo.png")

    csvio.write_samples(table, spline_csv)
    with open(linear_csv, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("t,value\n")
        for ti, vi in zip(table.t, linear):
            handle.write(f"{ti:.17g},{vi:.17g}\n")
    svg.write_chart(
        chart_svg,
        series=[(table.t, table.value), (table.t, linear)],
        markers=(t, z),
        labels=["tension spline (xi=5)", "piecewise linear"],
    )
    plots.save_curve_plot(
        chart_png,
        curves=[
            (table.t, table.value, "tension spline (xi=5)"),
            (table.t, linear, "piecewise linear"),
        ],
        knots=(t, z),
        title="Clamped tension interpolation of sin(25 t)",
    )
    for path in (spline_csv, linear_csv, chart_svg, chart_png):
        print(path)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lsplines",
        description="Tension-spline interpolation with clamped or natural boundary conditions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_interp = sub.add_parser("interp", help="fit a CSV of knots/values and write sampled output")
    p_interp.add_argument("--input", required=True, help="input CSV with columns t,z")
    p_interp.add_argument("--output", required=True, help="output CSV (t,value,d1,d2)")
    p_interp.add_argument("--svg", default=None, help="optional SVG chart path")
    p_interp.add_argument("--plot", default=None, help="optional matplotlib figure path (PNG)")
    p_interp.add_argument("--xi", type=float, required=True, help="tension parameter (>= 0)")
    p_interp.add_argument("--boundary", choices=("clamped", "natural"), required=True)
    p_interp.add_argument("--left-deriv", type=float, default=None, help="end slope at the first knot")
    p_interp.add_argument("--right-deriv", type=float, default=None, help="end slope at the last knot")
    p_interp.add_argument("--samples", type=int, default=500, help="number of output samples (default 500)")

    p_demo = sub.add_parser("demo", help="run the built-in seven-knot example")
    p_demo.add_argument("--out", required=True, help="output directory")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "interp":
            cfg = RunConfig(
                xi=args.xi,
                boundary=args.boundary,
                left_deriv=args.left_deriv,
                right_deriv=args.right_deriv,
                input_path=args.input,
                output_path=args.output,
                svg_path=args.svg,
                plot_path=args.plot,
                samples=args.samples,
            )
            return cmd_interp(cfg)
        return cmd_demo(args.out)
    except ConfigError as exc:
        print(f"lsplines: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ParseError as exc:
        print(f"lsplines: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"lsplines: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except _NUMERIC_ERRORS as exc:
        print(f"lsplines: numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def entrypoint():
    raise SystemExit(main())
