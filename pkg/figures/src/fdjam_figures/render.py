"""Render fdjam sweep CSVs as static plots.

Consumes only the CSV contract of the `fdjam` CLI (snake_case headers, one
header line, self-describing rows); nothing is recomputed here. Each known
sweep layout maps to one figure: analytic columns become lines, Monte Carlo
columns become markers with error bars, and curve families split on the
layout's grouping columns.

Rendering is deterministic: a fixed style, no timestamps, and the
Agg backend, so identical CSV input yields identical image bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


class SchemaError(ValueError):
    """The CSV does not match any known sweep layout."""


_STYLE = {
    "figure.figsize": (7.0, 5.0),
    "figure.dpi": 110,
    "savefig.dpi": 110,
    "font.size": 10,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "lines.linewidth": 1.6,
}

_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
           "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")

_LABELS = {
    "q": "fraction of full-duplex receivers q",
    "eta": "residual self-interference",
    "lambda_e": "eavesdropper density",
    "lambda_l": "legitimate density",
    "lambda_f": "jammer density",
    "n_e": "eavesdropper antennas",
    "rho": "jamming power ratio",
    "r_o": "link distance",
    "sigma": "connection outage target",
    "epsilon": "secrecy outage target",
    "alpha": "path-loss exponent",
    "q_policy": "fraction policy",
}


@dataclass(frozen=True)
class PlotSpec:
    """One sweep layout: marker column identifies it, the rest drives axes."""

    name: str
    marker_column: str
    x: str
    lines: tuple[tuple[str, str], ...]
    group: tuple[str, ...]
    ylabel: str
    points: tuple[tuple[str, str], ...] = ()
    logx: bool = False


SPECS: tuple[PlotSpec, ...] = (
    PlotSpec(
        name="fig1", marker_column="pco_mc", x="q",
        lines=(("pco_exact", "exact"), ("pco_upper", "upper bound"),
               ("pco_lower", "lower bound")),
        points=(("pco_mc", "pco_mc_stderr"),),
        group=("eta",), ylabel="connection outage probability",
    ),
    PlotSpec(
        name="fig2", marker_column="pso_mc", x="lambda_e",
        lines=(("pso_upper", "upper bound"), ("pso_fd_approx", "approximation")),
        points=(("pso_mc", "pso_mc_stderr"),),
        group=("r_o", "lambda_f"), ylabel="secrecy outage probability",
        logx=True,
    ),
    PlotSpec(
        name="fig3", marker_column="asln_opt", x="lambda_l",
        lines=(("q_star", "optimal fraction"),),
        group=("r_o", "rho"), ylabel="optimal fraction q*", logx=True,
    ),
    PlotSpec(
        name="fig4", marker_column="asln", x="n_e",
        lines=(("asln", "secure link density"),),
        group=("rho", "q_policy"), ylabel="secure link density",
    ),
    PlotSpec(
        name="fig5", marker_column="nst_opt", x="lambda_l",
        lines=(("q_star", "optimal fraction"),),
        group=("r_o", "sigma"), ylabel="optimal fraction q*", logx=True,
    ),
    PlotSpec(
        name="fig6", marker_column="nst", x="sigma",
        lines=(("nst", "secrecy throughput density"),),
        group=("alpha", "q_policy"), ylabel="secrecy throughput density",
    ),
    PlotSpec(
        name="fig7", marker_column="nsee_opt", x="rho",
        lines=(("q_star", "optimal fraction"),),
        group=("sigma", "epsilon"), ylabel="optimal fraction q*", logx=True,
    ),
    PlotSpec(
        name="fig8", marker_column="nsee_unconstrained", x="lambda_l",
        lines=(("nsee_unconstrained", "unconstrained"),
               ("nsee_constrained", "with throughput floor")),
        group=("rho", "n_e"), ylabel="secrecy energy efficiency", logx=True,
    ),
)


def detect_spec(frame: pd.DataFrame) -> PlotSpec:
    """Match a CSV to its sweep layout by marker column, then verify shape."""
    for spec in SPECS:
        if spec.marker_column not in frame.columns:
            continue
        needed = {spec.x, *spec.group}
        needed.update(col for col, _ in spec.lines)
        needed.update(col for pair in spec.points for col in pair)
        missing = sorted(needed - set(frame.columns))
        if missing:
            raise SchemaError(
                f"columns match the {spec.name} layout but {missing} are missing"
            )
        return spec
    raise SchemaError(
        f"no known sweep layout matches columns {sorted(frame.columns)}"
    )


def _group_label(spec: PlotSpec, key) -> str:
    values = key if isinstance(key, tuple) else (key,)
    parts = [f"{col}={value:g}" if isinstance(value, float) else f"{col}={value}"
             for col, value in zip(spec.group, values)]
    return ", ".join(parts)


def render_csv(csv_path: str | Path, out_dir: str | Path, log_y: bool = False) -> Path:
    """Render one CSV to `<out_dir>/<csv stem>.png`; returns the image path."""
    csv_path = Path(csv_path)
    try:
        frame = pd.read_csv(csv_path)
    except pd.errors.EmptyDataError:
        raise SchemaError(f"{csv_path} is empty") from None
    if frame.empty:
        raise SchemaError(f"{csv_path} has a header but no rows")
    spec = detect_spec(frame)

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    out_path = out_dir / f"{csv_path.stem}.png"

    line_styles = ("-", "--", ":", "-.")
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        groups = frame.groupby(list(spec.group), sort=True)
        for color_idx, (key, block) in enumerate(groups):
            block = block.sort_values(spec.x)
            color = _COLORS[color_idx % len(_COLORS)]
            label_base = _group_label(spec, key)
            for style_idx, (column, label) in enumerate(spec.lines):
                ax.plot(
                    block[spec.x], block[column],
                    line_styles[style_idx % len(line_styles)], color=color,
                    label=f"{label_base} ({label})" if len(spec.lines) > 1 else label_base,
                )
            for column, err_column in spec.points:
                ax.errorbar(
                    block[spec.x], block[column], yerr=block[err_column],
                    fmt="o", color=color, markersize=3.5, capsize=2,
                    linestyle="none", label=None,
                )
        ax.set_xlabel(_LABELS.get(spec.x, spec.x))
        ax.set_ylabel(spec.ylabel)
        if spec.logx:
            ax.set_xscale("log")
        if log_y:
            ax.set_yscale("log")
        ax.legend(fontsize=8)
        fig.savefig(out_path, metadata={"Software": "fdjam-figures"})
        plt.close(fig)
    return out_path


def render_many(csv_paths, out_dir, log_y: bool = False) -> list[Path]:
    return [render_csv(path, out_dir, log_y) for path in csv_paths]
