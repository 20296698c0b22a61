"""Optional file rendering of a run's report: a CSV of cases and a summary chart."""

from __future__ import annotations

import csv
import os


def render_figures(report, directory: str) -> list[str]:
    """Write cases.csv and summary.png for the given report; return the paths."""
    os.makedirs(directory, exist_ok=True)

    csv_path = os.path.join(directory, "cases.csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["suite", "case_id", "equation_ref", "status", "detail"])
        for r in report.cases:
            writer.writerow(
                [r["suite"], r["case_id"], r["equation_ref"], r["status"], r["detail"]]
            )

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    suites: list[str] = []
    for r in report.cases:
        if r["suite"] not in suites:
            suites.append(r["suite"])
    n_pass = [
        sum(1 for r in report.cases if r["suite"] == s and r["status"] == "pass")
        for s in suites
    ]
    n_fail = [
        sum(1 for r in report.cases if r["suite"] == s and r["status"] == "fail")
        for s in suites
    ]

    fig, ax = plt.subplots(figsize=(max(4.0, 1.1 * len(suites)), 3.4))
    xs = range(len(suites))
    ax.bar(xs, n_pass, color="#2e7d32", label="pass")
    ax.bar(xs, n_fail, bottom=n_pass, color="#c62828", label="fail")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(suites, rotation=30, ha="right")
    ax.set_ylabel("cases")
    ax.set_title(f"suite {report.suite}: {len(report.cases)} cases")
    ax.legend(loc="upper right")
    fig.tight_layout()
    png_path = os.path.join(directory, "summary.png")
    fig.savefig(png_path, dpi=120)
    plt.close(fig)

    return [csv_path, png_path]
