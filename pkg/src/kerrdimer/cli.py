"""Command-line front end emitting plot-ready CSV artifacts.

Every command writes one CSV (dot decimal separator, comma fields, LF line
endings, 15 significant digits) plus a JSON run manifest next to it;
re-running the manifest's command reproduces the CSV byte for byte.  Time
columns are the dimensionless g*t.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass
from datetime import datetime, timezone

import click
import numpy as np

from . import __version__
from .experiments import TraceConfig, max_table, trace
from .jaynes import jaynes_entropy
from .model import FockPair, ModelParams

#: Points on the envelope imbalance grid written by the envelope command.
ENVELOPE_GRID = 401


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility record written alongside every output file."""

    command: str
    parameters: dict
    artifact_version: str
    output: str
    timestamp: str


def _default_out(filename: str) -> str:
    return os.path.join(os.environ.get("OUT_DIR", "."), filename)


def _fmt(value: float) -> str:
    return f"{value:.15g}"


def _write_rows(fh, header: tuple[str, ...], rows) -> None:
    fh.write(",".join(header) + "\n")
    for row in rows:
        fh.write(",".join(_fmt(v) for v in row) + "\n")


def _write_manifest(out: str, command: str, parameters: dict) -> None:
    manifest = RunManifest(
        command=command,
        parameters=parameters,
        artifact_version=__version__,
        output=out,
        timestamp=datetime.now(timezone.utc).isoformat(),
    )
    with open(out + ".manifest.json", "w", newline="\n") as fh:
        json.dump(asdict(manifest), fh, indent=2)
        fh.write("\n")


@click.group()
@click.version_option(__version__)
def main() -> None:
    """Exact two-mode Kerr-coupled dynamics: traces, maxima, envelopes."""


@main.command("trace")
@click.option("--p", type=int, required=True, help="Initial quanta in mode A.")
@click.option("--q", type=int, required=True, help="Initial quanta in mode B.")
@click.option("--chi-over-g", type=float, default=0.34, show_default=True)
@click.option("--t-max", type=float, default=12.0, show_default=True)
@click.option("--steps", type=int, default=2400, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_trace(p: int, q: int, chi_over_g: float, t_max: float, steps: int, out: str):
    """Sweep entropy and populations on a uniform g*t grid."""
    out = out or _default_out("trace.csv")
    try:
        config = TraceConfig(
            initial=FockPair(p, q),
            params=ModelParams(g=1.0, chi=chi_over_g),
            t_start=0.0,
            t_end=t_max,
            steps=steps,
        )
        samples = trace(config)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    with open(out, "w", newline="\n") as fh:
        _write_rows(
            fh,
            ("gt", "entropy", "n1", "n2", "delta_n"),
            ((s.t, s.entropy, s.n1, s.n2, s.delta_n) for s in samples),
        )
    _write_manifest(
        out,
        "trace",
        {"p": p, "q": q, "chi_over_g": chi_over_g, "t_max": t_max, "steps": steps},
    )
    click.echo(f"wrote {out}")


@main.command("maxscan")
@click.option("--l-max", type=int, default=10, show_default=True)
@click.option(
    "--ratios",
    type=str,
    default="0,0.01,0.34,0.8",
    show_default=True,
    help="Comma-separated chi/g values.",
)
@click.option("--t-max", type=float, default=600.0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_maxscan(l_max: int, ratios: str, t_max: float, out: str):
    """Scan entropy maxima for initial states |L>_A |0>_B up to L = l-max."""
    out = out or _default_out("maxscan.csv")
    try:
        ratio_values = [float(r) for r in ratios.split(",") if r.strip() != ""]
        if not ratio_values:
            raise ValueError("need at least one ratio")
        rows = max_table(l_max, ratio_values, t_max)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    with open(out, "w", newline="\n") as fh:
        _write_rows(
            fh,
            ("L", "ratio", "e_star", "t_star", "ln_Lplus1", "gap"),
            ((r.total, r.ratio, r.e_star, r.t_star, r.ln_dim, r.gap) for r in rows),
        )
    _write_manifest(
        out, "maxscan", {"l_max": l_max, "ratios": ratios, "t_max": t_max}
    )
    click.echo(f"wrote {out}")


@main.command("envelope")
@click.option("--l", "total", type=int, required=True, help="Total quanta L.")
@click.option("--chi-over-g", type=float, default=0.34, show_default=True)
@click.option("--t-max", type=float, default=60.0, show_default=True)
@click.option("--steps", type=int, default=10000, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_envelope(total: int, chi_over_g: float, t_max: float, steps: int, out: str):
    """Entropy-vs-imbalance scatter plus its maximum-entropy envelope.

    The CSV holds two sections: the time-sweep scatter (delta_n, entropy)
    and the envelope (delta_n_grid, e_jaynes) on a uniform imbalance grid.
    """
    out = out or _default_out("envelope.csv")
    try:
        config = TraceConfig(
            initial=FockPair(total, 0),
            params=ModelParams(g=1.0, chi=chi_over_g),
            t_start=0.0,
            t_end=t_max,
            steps=steps,
        )
        samples = trace(config)
        grid = np.linspace(-total, total, ENVELOPE_GRID)
        envelope = [jaynes_entropy(float(dn), total) for dn in grid]
    except ValueError as exc:
        raise click.ClickException(str(exc))
    with open(out, "w", newline="\n") as fh:
        _write_rows(
            fh, ("delta_n", "entropy"), ((s.delta_n, s.entropy) for s in samples)
        )
        fh.write("\n")
        _write_rows(fh, ("delta_n_grid", "e_jaynes"), zip(grid, envelope))
    _write_manifest(
        out,
        "envelope",
        {
            "l": total,
            "chi_over_g": chi_over_g,
            "t_max": t_max,
            "steps": steps,
        },
    )
    click.echo(f"wrote {out}")


@main.command("verify")
@click.option("--quick", is_flag=True, help="Restrict sweeps to L <= 5.")
def cmd_verify(quick: bool):
    """Run every acceptance check and report pass/fail per criterion."""
    from .acceptance import run_all

    results = run_all(quick=quick)
    failed = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        failed += not res.passed
        click.echo(
            f"{status}  {res.name}: measured {res.measured} (tolerance {res.tolerance})"
        )
    click.echo(f"{len(results) - failed}/{len(results)} checks passed")
    if failed:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
