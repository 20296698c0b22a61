"""The `verify` command: run check suites and emit a deterministic report.

Exit codes: 0 all cases passed, 1 at least one case failed, 2 the
configuration was unusable.  Every option can also be supplied through
a VERIFY_* environment variable (VERIFY_SUITE, VERIFY_SEED, ...).
"""

from __future__ import annotations

import click

from .errors import ConfigError, ExhaustionError
from .harness import SUITE_ORDER, SuiteConfig, run_suite

_SETTINGS = {
    "auto_envvar_prefix": "VERIFY",
    "help_option_names": ["-h", "--help"],
}


@click.command(context_settings=_SETTINGS)
@click.option(
    "--suite",
    default="all",
    show_default=True,
    metavar="NAME",
    help="One of: " + ", ".join(SUITE_ORDER) + ", all.",
)
@click.option("--sites", default=2, show_default=True, help="Number of chain sites L.")
@click.option(
    "--c",
    "coupling",
    default="1",
    show_default=True,
    metavar="P/Q",
    help="Coupling constant, an exact rational.",
)
@click.option("--seed", default=7, show_default=True, help="Base seed for all draws.")
@click.option(
    "--max-set-size",
    default=2,
    show_default=True,
    help="Size cap for drawn variable sets (suite grids scale with it).",
)
@click.option("--draws", default=3, show_default=True, help="Random draws per case family.")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Report format.",
)
@click.option(
    "--out",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Write the report to this file instead of stdout.",
)
@click.option(
    "--figures",
    "figures_dir",
    type=click.Path(file_okay=False),
    default=None,
    help="Also render cases.csv and summary.png into this directory.",
)
def main(suite, sites, coupling, seed, max_set_size, draws, output_format, out, figures_dir):
    """Verify the graded exchange-algebra identities with exact arithmetic."""
    try:
        cfg = SuiteConfig(
            suite=suite,
            L=sites,
            c=coupling,
            seed=seed,
            max_set_size=max_set_size,
            draws=draws,
            output_format=output_format,
        )
    except (ConfigError, ValueError, ZeroDivisionError) as exc:
        click.echo(f"config error: {exc}", err=True)
        raise SystemExit(2)

    try:
        report = run_suite(cfg)
    except ExhaustionError as exc:
        click.echo(f"config error: {exc}", err=True)
        raise SystemExit(2)

    payload = report.to_json() if output_format == "json" else report.to_text()
    if out:
        with open(out, "w") as fh:
            fh.write(payload)
    else:
        click.echo(payload, nl=False)

    if figures_dir:
        from .figures import render_figures

        for path in render_figures(report, figures_dir):
            click.echo(f"wrote {path}", err=True)

    click.echo(
        f"{cfg.suite}: {len(report.cases)} cases, {len(report.failed)} failed,"
        f" {report.wall_seconds:.1f}s",
        err=True,
    )
    raise SystemExit(1 if report.failed else 0)
