"""The ten headline acceptance properties, one verdict line each.

Every criterion runs the real suites through run_suite (or the CLI),
checks that nothing failed and that the advertised coverage is actually
present in the report, and enforces its runtime budget.  Run with
`pytest tests/test_acceptance.py -v -s` to see the verdict lines.
"""

import json
import shutil
import subprocess
import sys
import time
from math import comb

from gradedchain.harness import SuiteConfig, run_suite

SEED = 7


def _verdict(num, label, problems, elapsed, budget):
    if elapsed >= budget:
        problems = list(problems) + [f"took {elapsed:.1f}s, budget {budget}s"]
    mark = "PASS" if not problems else "FAIL"
    print(f"[{mark}] criterion {num:>2}: {label} ({elapsed:.1f}s, budget {budget}s)")
    assert not problems, f"criterion {num}: " + "; ".join(problems)


def _failures(report, tag):
    return [f"{tag}:{r['case_id']}:{r['detail']}" for r in report.failed]


def test_criterion_01_exchange_relation():
    t0 = time.monotonic()
    problems = []
    for L in (1, 2, 3):
        report = run_suite(SuiteConfig(suite="rtt", L=L, seed=SEED, draws=10))
        problems += _failures(report, f"L={L}")
        n = sum(1 for r in report.cases if r["equation_ref"] == "RTT-exchange")
        if n < 10:
            problems.append(f"L={L}: only {n} exchange draws")
    _verdict(
        1,
        "defining exchange relation exact on L=1,2,3 with 10 draws each",
        problems,
        time.monotonic() - t0,
        30,
    )


def test_criterion_02_graded_commutator():
    t0 = time.monotonic()
    report = run_suite(SuiteConfig(suite="rtt", L=2, seed=SEED, draws=5))
    problems = _failures(report, "L=2")
    tm = [r for r in report.cases if r["equation_ref"] == "graded-commutator"]
    quadruples = {r["params"]["quadruple"] for r in tm}
    if len(quadruples) != 81:
        problems.append(f"covered {len(quadruples)} quadruples, need 81")
    if len(tm) < 81 * 5:
        problems.append(f"only {len(tm)} commutator cases, need 405")
    _verdict(
        2,
        "both graded-commutator closed forms, all 81 quadruples, L=2, 5 draws",
        problems,
        time.monotonic() - t0,
        60,
    )


def test_criterion_03_dwpf():
    t0 = time.monotonic()
    report = run_suite(SuiteConfig(suite="dwpf", seed=SEED, max_set_size=4, draws=20))
    problems = _failures(report, "dwpf")

    def count(prefix):
        return sum(1 for r in report.cases if r["case_id"].startswith(prefix))

    for n in range(1, 6):
        if count(f"K-perm-n{n}-") < 20:
            problems.append(f"permutation size {n} under 20 draws")
    for n in range(0, 5):
        if count(f"K-shift-n{n}-") < 20:
            problems.append(f"shift size {n} under 20 draws")
    for n in range(1, 5):
        if count(f"K-residue-n{n}-") < 20:
            problems.append(f"residue size {n} under 20 draws")
    for n in range(0, 5):
        if count(f"cauchy-n{n}-") < 20:
            problems.append(f"cauchy size {n} under 20 draws")
    _verdict(
        3,
        "partition-function symmetry, shifts, Cauchy determinant, residue "
        "reconstruction with degree bound",
        problems,
        time.monotonic() - t0,
        60,
    )


def test_criterion_04_lemmas():
    t0 = time.monotonic()
    report = run_suite(SuiteConfig(suite="lemmas", seed=SEED, max_set_size=6, draws=20))
    problems = _failures(report, "lemmas")

    def count(prefix):
        return sum(1 for r in report.cases if r["case_id"].startswith(prefix))

    for total in range(1, 7):
        for m1 in range(total + 1):
            for tag in ("split", "conv"):
                if count(f"{tag}-{m1}+{total - m1}-") < 20:
                    problems.append(f"{tag} at sizes {m1}+{total - m1} under 20 draws")
    for n in (1, 2, 3):
        for tag in ("peel-u", "peel-v"):
            if count(f"{tag}-n{n}-") < 20:
                problems.append(f"{tag} at n={n} under 20 draws")
    for m in range(1, 6):
        if count(f"contour-m{m}-") < 20:
            problems.append(f"contour at m={m} under 20 draws")
    _verdict(
        4,
        "all five summation lemmas, brute force vs closed form, sizes up to 6",
        problems,
        time.monotonic() - t0,
        120,
    )


def test_criterion_05_row_mcr():
    t0 = time.monotonic()
    problems = []
    for L in (2, 3):
        report = run_suite(
            SuiteConfig(suite="mcr-rows", L=L, seed=SEED, max_set_size=2, draws=5)
        )
        problems += _failures(report, f"L={L}")
        sizes = {
            (r["case_id"].split("-n")[1].split("-")[0])
            for r in report.cases
            if r["case_id"].startswith("MC-")
        }
        for want in ("1m1", "1m2", "2m1", "2m2", "1m3"):
            if want not in sizes:
                problems.append(f"L={L}: size n{want} not exercised")
    _verdict(
        5,
        "all six same-row commutation relations on L=2,3, sizes to 2 plus the "
        "1+3 base case, 5 draws",
        problems,
        time.monotonic() - t0,
        300,
    )


def test_criterion_06_column_specials():
    t0 = time.monotonic()
    report = run_suite(
        SuiteConfig(suite="mcr-columns", L=2, seed=SEED, max_set_size=2, draws=5)
    )
    problems = _failures(report, "columns")
    t23 = [r for r in report.cases if r["case_id"].startswith("MC-T23T13")]
    if not t23:
        problems.append("no T23T13 cases ran")
    for r in t23:
        if "literal_label_reading_holds=" not in r["detail"]:
            problems.append(f"{r['case_id']}: literal-label verdict not recorded")
    _verdict(
        6,
        "column special cases exact with the literal-label verdict recorded",
        problems,
        time.monotonic() - t0,
        60,
    )


def test_criterion_07_xy_operators():
    t0 = time.monotonic()
    problems = []
    for L in (1, 2, 3):
        report = run_suite(
            SuiteConfig(suite="xy", L=L, seed=SEED, max_set_size=4, draws=3)
        )
        problems += _failures(report, f"L={L}")
        cids = {r["case_id"] for r in report.cases}
        for a in range(0, 5):
            for b in range(0, 5 - a):
                if f"xy-equal-a{a}b{b}-d0" not in cids:
                    problems.append(f"L={L}: equality grid misses a={a} b={b}")
                if a >= 1 and f"recursion-X-a{a}b{b}-d0" not in cids:
                    problems.append(f"L={L}: recursion grid misses a={a} b={b}")
        for b in range(0, 4):
            if f"xy-base-b{b}-d0" not in cids:
                problems.append(f"L={L}: base case misses b={b}")
    _verdict(
        7,
        "X=Y equality, both recursions, and the a=0 base case over a+b<=4 on "
        "L=1,2,3",
        problems,
        time.monotonic() - t0,
        600,
    )


def test_criterion_08_bethe_vectors():
    t0 = time.monotonic()
    problems = []
    for suite, tag in (("bethe", "BV"), ("dual-bethe", "dBV")):
        for L in (2, 3):
            report = run_suite(
                SuiteConfig(suite=suite, L=L, seed=SEED, max_set_size=2, draws=3)
            )
            problems += _failures(report, f"{suite}:L={L}")
            for a, b in ((1, 1), (2, 1), (1, 2), (2, 2)):
                n = sum(
                    1
                    for r in report.cases
                    if r["case_id"].startswith(f"{tag}-a{a}b{b}-")
                )
                if n < 3:
                    problems.append(f"{suite}:L={L}: (a,b)=({a},{b}) under 3 draws")
    _verdict(
        8,
        "four representations and four dual representations agree at "
        "(1,1),(2,1),(1,2),(2,2) on L=2,3, 3 draws",
        problems,
        time.monotonic() - t0,
        600,
    )


def test_criterion_09_single_u_commutator():
    t0 = time.monotonic()
    report = run_suite(SuiteConfig(suite="xy", L=2, seed=SEED, max_set_size=3, draws=3))
    problems = _failures(report, "xy")
    cids = {r["case_id"] for r in report.cases}
    for b in (1, 2, 3):
        if f"COMM-a1-b{b}-d0" not in cids:
            problems.append(f"commutator misses b={b}")
    _verdict(
        9,
        "T12 against the odd symmetric product for b=1,2,3 on L=2",
        problems,
        time.monotonic() - t0,
        30,
    )


def test_criterion_10_byte_determinism():
    t0 = time.monotonic()
    exe = shutil.which("verify")
    base = [exe] if exe else [sys.executable, "-c", "from gradedchain.cli import main; main()"]
    cmd = base + ["--suite", "all", "--sites", "2", "--seed", "7", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    problems = []
    for name, res in (("first", first), ("second", second)):
        if res.returncode != 0:
            problems.append(f"{name} run exited {res.returncode}")
    if first.stdout != second.stdout:
        problems.append("reports are not byte-identical")
    records = json.loads(first.stdout)
    if not records or any(r["status"] != "pass" for r in records):
        problems.append("full run is not all-pass")
    _verdict(
        10,
        "repeated full CLI runs emit byte-identical JSON",
        problems,
        time.monotonic() - t0,
        120,
    )
