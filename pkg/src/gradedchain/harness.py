"""Suite registry, pole-free parameter drawing, and report generation.

A suite is a deterministic grid of check cases.  Every random quantity
is derived from a per-case rng seeded with "<seed>:<suite>:<case_id>",
so a report is a pure function of the configuration.  Timing is never
written into the report body (elapsed_ms is always 0); byte-identical
reports across runs are part of the contract, and wall-clock numbers go
to stderr instead.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from time import perf_counter

from .dwpf import (
    K,
    KArgs,
    K_residue_check,
    K_shift_properties_check,
    cauchy_determinant_check,
    k_value,
    lemma_sum_check,
    micro_rewrite_check,
)
from .errors import (
    CheckFailure,
    CheckReport,
    ConfigError,
    DuplicateError,
    ExhaustionError,
    PoleError,
    RangeError,
    ReconstructionError,
    SizeMismatchError,
)
from .graded import unitarity_check, yang_baxter_check
from .identities import (
    McrCase,
    XYArgs,
    bethe_agreement_check,
    mcr_check,
    pair_exchange_check,
    recursion_check,
    x_operator,
    xy_equivalence_check,
    xy_leading_term_check,
    y_operator,
)
from .monodromy import (
    ChainSpec,
    entry_parity_check,
    extraction_convention_report,
    get_monodromy,
    graded_commutator_check,
    odd_symmetry_check,
    rtt_check,
    vacuum_check,
)
from .scalars import Rat, f, g, h, rat, rat_str, set_product
from .varsets import VarSet, make_varset

SUITE_ORDER = (
    "scalars",
    "dwpf",
    "lemmas",
    "rtt",
    "mcr-rows",
    "mcr-columns",
    "xy",
    "bethe",
    "dual-bethe",
)

_CASE_ERRORS = (
    PoleError,
    DuplicateError,
    SizeMismatchError,
    RangeError,
    ReconstructionError,
)


@dataclass(frozen=True)
class SuiteConfig:
    """Everything a suite run depends on; validated on construction."""

    suite: str = "all"
    L: int = 2
    c: Rat = Fraction(1)
    seed: int = 7
    max_set_size: int = 2
    draws: int = 3
    output_format: str = "text"

    def __post_init__(self):
        if self.suite != "all" and self.suite not in SUITE_ORDER:
            known = ", ".join(SUITE_ORDER + ("all",))
            raise ConfigError(f"unknown suite {self.suite!r}; known: {known}")
        if self.L < 1:
            raise ConfigError(f"sites must be >= 1, got {self.L}")
        if self.max_set_size < 0:
            raise ConfigError(f"max-set-size must be >= 0, got {self.max_set_size}")
        if self.draws < 1:
            raise ConfigError(f"draws must be >= 1, got {self.draws}")
        if self.output_format not in ("text", "json"):
            raise ConfigError(f"format must be text or json, got {self.output_format!r}")
        try:
            object.__setattr__(self, "c", rat(self.c))
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"coupling not a rational: {self.c!r}") from exc
        if self.c == 0:
            raise ConfigError("coupling must be nonzero")


@dataclass
class Report:
    """Flat per-case records plus the wall time of the whole run."""

    suite: str
    cases: list = field(default_factory=list)
    wall_seconds: float = 0.0

    @property
    def failed(self) -> list:
        return [r for r in self.cases if r["status"] == "fail"]

    def to_json(self) -> str:
        return json.dumps(self.cases, indent=1) + "\n"

    def to_text(self) -> str:
        lines = []
        for r in self.cases:
            lines.append(
                f"{r['status']:4s} {r['suite']}:{r['case_id']}"
                + (f"  {r['detail']}" if r["detail"] else "")
            )
        n = len(self.cases)
        bad = len(self.failed)
        lines.append(f"{n} cases: {n - bad} pass, {bad} fail")
        return "\n".join(lines) + "\n"


def draw_parameters(seed, count: int, c: Rat, forbidden=()) -> VarSet:
    """Rationals p/q, |p| <= 40, 1 <= q <= 8, rejection-sampled so that
    all pairwise differences and all differences against `forbidden`
    anchors avoid {0, +c, -c}.  Deterministic in the seed.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    c = rat(c)
    bad = (Fraction(0), c, -c)
    anchors = [rat(x) for x in forbidden]
    picked: list[Fraction] = []
    limit = 500 * (count + 1)
    tries = 0
    while len(picked) < count:
        tries += 1
        if tries > limit:
            raise ExhaustionError(
                f"no admissible draw of {count} points after {limit} tries"
            )
        cand = Fraction(rng.randint(-40, 40), rng.randint(1, 8))
        if all(cand - x not in bad for x in picked) and all(
            cand - x not in bad for x in anchors
        ):
            picked.append(cand)
    return make_varset(picked)


def _pset(values) -> str:
    return ",".join(rat_str(rat(x)) for x in values)


class _CaseRunner:
    """Executes one suite's cases and appends flat records."""

    def __init__(self, cfg: SuiteConfig, suite: str, records: list):
        self.cfg = cfg
        self.suite = suite
        self.records = records

    def rng(self, case_id: str) -> random.Random:
        return random.Random(f"{self.cfg.seed}:{self.suite}:{case_id}")

    def draw(self, case_id: str, count: int, forbidden=()):
        rng = self.rng(case_id)
        pts = draw_parameters(rng, count, self.cfg.c, forbidden)
        return list(pts), rng

    def chain(self, draw_index: int) -> ChainSpec:
        rng = random.Random(f"{self.cfg.seed}:{self.suite}:chain-d{draw_index}")
        xi = draw_parameters(rng, self.cfg.L, self.cfg.c)
        return ChainSpec(L=self.cfg.L, c=self.cfg.c, xi=tuple(xi.elements))

    def __call__(self, case_id: str, equation_ref: str, params: dict, thunk):
        try:
            rep = thunk()
            detail = ""
            if isinstance(rep, CheckReport):
                detail = rep.detail
                if rep.data:
                    extras = " ".join(
                        f"{k}={v}" for k, v in sorted(rep.data.items())
                    )
                    detail = f"{detail} {extras}".strip()
            status = "pass"
        except CheckFailure as exc:
            status = "fail"
            detail = exc.detail
            if exc.lhs is not None:
                detail += f" lhs={rat_str(rat(exc.lhs))} rhs={rat_str(rat(exc.rhs))}"
        except _CASE_ERRORS as exc:
            status = "fail"
            detail = f"{type(exc).__name__}: {exc}"
        self.records.append(
            {
                "suite": self.suite,
                "case_id": case_id,
                "equation_ref": equation_ref,
                "params": params,
                "status": status,
                "detail": detail,
                "elapsed_ms": 0,
            }
        )


def _suite_scalars(cfg: SuiteConfig, run: _CaseRunner):
    c = cfg.c
    for d in range(cfg.draws):
        cid = f"g-antisym-d{d}"
        pts, _ = run.draw(cid, 2)
        x, y = pts

        def t_anti(x=x, y=y):
            if g(x, y, c) != -g(y, x, c) or g(x, y, c) * (x - y) != c:
                raise CheckFailure("g antisymmetry failed")
            return CheckReport("g-antisym")

        run(cid, "g-antisymmetry", {"c": rat_str(c), "x": rat_str(x), "y": rat_str(y)}, t_anti)

        cid = f"f-g-unit-d{d}"
        pts, _ = run.draw(cid, 2)
        x, y = pts

        def t_fg(x=x, y=y):
            if f(x, y, c) - g(x, y, c) != 1:
                raise CheckFailure("f - g = 1 failed")
            return CheckReport("f-g-unit")

        run(cid, "f-minus-g", {"c": rat_str(c), "x": rat_str(x), "y": rat_str(y)}, t_fg)

        cid = f"h-inverse-d{d}"
        pts, _ = run.draw(cid, 2)
        x, y = pts

        def t_h(x=x, y=y):
            if h(x, y, c) * g(x, y - c, c) != 1:
                raise CheckFailure("h(x,y) g(x,y-c) = 1 failed")
            return CheckReport("h-inverse")

        run(cid, "h-g-inverse", {"c": rat_str(c), "x": rat_str(x), "y": rat_str(y)}, t_h)

        cid = f"f-reflect-d{d}"
        pts, _ = run.draw(cid, 2)
        x, y = pts

        def t_refl(x=x, y=y):
            if f(x - c, y, c) * f(y, x, c) != 1:
                raise CheckFailure("f(x-c,y) f(y,x) = 1 failed")
            return CheckReport("f-reflect")

        run(cid, "f-reflection", {"c": rat_str(c), "x": rat_str(x), "y": rat_str(y)}, t_refl)

        cid = f"set-factor-d{d}"
        pts, _ = run.draw(cid, 5)
        a_part, b_part, c_part = pts[:2], pts[2:3], pts[3:]

        def t_fact(a=a_part, b=b_part, cc=c_part):
            whole = set_product(g, a + b, cc, c)
            split = set_product(g, a, cc, c) * set_product(g, b, cc, c)
            if whole != split:
                raise CheckFailure("set product does not factor over a union")
            return CheckReport("set-factor")

        run(
            cid,
            "set-product-factorization",
            {"c": rat_str(c), "a": _pset(a_part), "b": _pset(b_part), "z": _pset(c_part)},
            t_fact,
        )


def _suite_dwpf(cfg: SuiteConfig, run: _CaseRunner):
    c = cfg.c
    m = cfg.max_set_size
    for n in range(1, m + 2):
        for d in range(cfg.draws):
            cid = f"K-perm-n{n}-d{d}"
            pts, rng = run.draw(cid, 2 * n)
            us, vs = pts[:n], pts[n:]

            def t_perm(us=us, vs=vs, rng=rng):
                base = k_value(us, vs, c)
                pu, pv = list(us), list(vs)
                rng.shuffle(pu)
                rng.shuffle(pv)
                if k_value(pu, vs, c) != base or k_value(us, pv, c) != base:
                    raise CheckFailure("K changed under reordering of a set")
                return CheckReport("K-perm", f"n={n}")

            run(cid, "K-permutation", {"c": rat_str(c), "u": _pset(us), "v": _pset(vs)}, t_perm)

    for n in range(0, m + 1):
        for d in range(cfg.draws):
            cid = f"K-shift-n{n}-d{d}"
            pts, _ = run.draw(cid, 2 * n)
            us, vs = pts[:n], pts[n:]
            run(
                cid,
                "K-shift",
                {"c": rat_str(c), "u": _pset(us), "v": _pset(vs)},
                lambda us=us, vs=vs: K_shift_properties_check(
                    KArgs(make_varset(us), make_varset(vs), c)
                ),
            )

    for n in range(1, m + 1):
        for d in range(cfg.draws):
            cid = f"K-residue-n{n}-d{d}"
            pts, _ = run.draw(cid, 2 * n)
            us, vs = pts[:n], pts[n:]
            run(
                cid,
                "K-residue",
                {"c": rat_str(c), "u": _pset(us), "v": _pset(vs)},
                lambda us=us, vs=vs: K_residue_check(
                    make_varset(us), make_varset(vs), c
                ),
            )

    for n in range(0, m + 1):
        for d in range(cfg.draws):
            cid = f"cauchy-n{n}-d{d}"
            pts, _ = run.draw(cid, 2 * n)
            us, vs = pts[:n], pts[n:]
            run(
                cid,
                "cauchy-det",
                {"c": rat_str(c), "u": _pset(us), "v": _pset(vs)},
                lambda us=us, vs=vs: cauchy_determinant_check(
                    make_varset(us), make_varset(vs), c
                ),
            )

    for d in range(cfg.draws):
        cid = f"K-micro-d{d}"
        pts, _ = run.draw(cid, 2)
        u, v = pts
        run(
            cid,
            "K-micro-rewrites",
            {"c": rat_str(c), "u": rat_str(u), "v": rat_str(v)},
            lambda u=u, v=v: micro_rewrite_check(u, v, c),
        )

        cid = f"K-hzero-d{d}"
        pts, _ = run.draw(cid, 3)
        us = pts[:2]
        vs = [us[0] + c, pts[2]]

        def t_hzero(us=us, vs=vs):
            args = KArgs(make_varset(us), make_varset(vs), c)
            guards = args.guards()
            if len(guards) != 1 or not guards[0].startswith("h-zero"):
                raise CheckFailure(f"expected one h-zero guard, got {guards}")
            value = K(args)
            return CheckReport("K-hzero", guards[0], {"value": rat_str(value)})

        run(cid, "K-h-locus", {"c": rat_str(c), "u": _pset(us), "v": _pset(vs)}, t_hzero)


def _suite_lemmas(cfg: SuiteConfig, run: _CaseRunner):
    c = cfg.c
    m = cfg.max_set_size
    pairs = [
        (m1, m2)
        for total in range(1, m + 1)
        for m1 in range(total + 1)
        for m2 in [total - m1]
    ]
    for m1, m2 in pairs:
        for d in range(cfg.draws):
            for tag, lemma in (("split", "g-product-split"), ("conv", "K-convolution")):
                cid = f"{tag}-{m1}+{m2}-d{d}"
                pts, _ = run.draw(cid, 2 * (m1 + m2))
                us, vs = pts[:m1], pts[m1 : m1 + m2]
                ws = pts[m1 + m2 :]
                run(
                    cid,
                    f"lemma-{lemma}",
                    {"c": rat_str(c), "u": _pset(us), "v": _pset(vs), "w": _pset(ws)},
                    lambda us=us, vs=vs, ws=ws, lemma=lemma: lemma_sum_check(
                        lemma,
                        c,
                        u_set=make_varset(us),
                        v_set=make_varset(vs),
                        w_set=make_varset(ws),
                    ),
                )

    for n in range(1, max(1, m // 2) + 1):
        for d in range(cfg.draws):
            for tag, lemma in (("peel-u", "K-peel-u"), ("peel-v", "K-peel-v")):
                cid = f"{tag}-n{n}-d{d}"
                pts, _ = run.draw(cid, 2 * n + 1)
                us, vs, xi = pts[:n], pts[n : 2 * n], pts[2 * n]
                run(
                    cid,
                    f"lemma-{lemma}",
                    {"c": rat_str(c), "u": _pset(us), "v": _pset(vs), "xi": rat_str(xi)},
                    lambda us=us, vs=vs, xi=xi, lemma=lemma: lemma_sum_check(
                        lemma,
                        c,
                        u_set=make_varset(us),
                        v_set=make_varset(vs),
                        xi=xi,
                    ),
                )

    for n in range(1, max(1, m - 1) + 1):
        for d in range(cfg.draws):
            cid = f"contour-m{n}-d{d}"
            pts, _ = run.draw(cid, n + 2)
            gamma, tau, ua = pts[:n], pts[n], pts[n + 1]
            run(
                cid,
                "lemma-contour",
                {
                    "c": rat_str(c),
                    "gamma": _pset(gamma),
                    "tau": rat_str(tau),
                    "ua": rat_str(ua),
                },
                lambda gamma=gamma, tau=tau, ua=ua: lemma_sum_check(
                    "contour", c, u_a=ua, v_gamma=make_varset(gamma), v_tau=tau
                ),
            )


def _suite_rtt(cfg: SuiteConfig, run: _CaseRunner):
    c = cfg.c
    for d in range(cfg.draws):
        chain = run.chain(d)
        base = {"c": rat_str(c), "L": str(cfg.L), "xi": _pset(chain.xi)}
        pts, _ = run.draw(f"points-d{d}", 3, forbidden=chain.xi)
        u, v, w = pts
        uv = dict(base, u=rat_str(u), v=rat_str(v))

        run(f"RTT-d{d}", "RTT-exchange", uv, lambda ch=chain, u=u, v=v: rtt_check(ch, u, v))
        run(
            f"YB-d{d}",
            "yang-baxter",
            {"c": rat_str(c), "u": rat_str(u), "v": rat_str(v), "w": rat_str(w)},
            lambda u=u, v=v, w=w: yang_baxter_check(u, v, w, c),
        )
        run(
            f"unitarity-d{d}",
            "unitarity",
            {"c": rat_str(c), "u": rat_str(u), "v": rat_str(v)},
            lambda u=u, v=v: unitarity_check(u, v, c),
        )
        run(
            f"vacuum-d{d}",
            "vacuum-structure",
            dict(base, u=rat_str(u)),
            lambda ch=chain, u=u: vacuum_check(ch, u),
        )
        run(
            f"parity-d{d}",
            "entry-parity",
            dict(base, u=rat_str(u)),
            lambda ch=chain, u=u: entry_parity_check(ch, u),
        )
        for j in (1, 2):
            run(
                f"odd-sym-j{j}-d{d}",
                "odd-exchange",
                dict(uv, j=str(j)),
                lambda ch=chain, j=j, u=u, v=v: odd_symmetry_check(ch, j, u, v),
            )
        run(
            f"conventions-d{d}",
            "extraction-conventions",
            uv,
            lambda ch=chain, u=u, v=v: extraction_convention_report(ch, u, v),
        )
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                for k in (1, 2, 3):
                    for l in (1, 2, 3):
                        run(
                            f"TM-{i}{j}{k}{l}-d{d}",
                            "graded-commutator",
                            dict(uv, quadruple=f"{i}{j}{k}{l}"),
                            lambda ch=chain, i=i, j=j, k=k, l=l, u=u, v=v: (
                                graded_commutator_check(ch, i, j, k, l, u, v)
                            ),
                        )


_ROW_MCR_INDEXES = {
    "MC-TijTik": [
        (i, j, k) for i in (1, 2) for j in (1, 2) for k in (1, 2)
    ],
    "MC-Ti3Tj3": [(i, j, None) for i in (1, 2) for j in (1, 2)],
    "MC-TijTi3": [(i, j, None) for i in (1, 2) for j in (1, 2)],
    "MC-Ti3Tij": [(i, j, None) for i in (1, 2) for j in (1, 2)],
    "MC-T33T3i": [(i, None, None) for i in (1, 2)],
    "MC-T3iT33": [(i, None, None) for i in (1, 2)],
}


def _idx_tag(idx) -> str:
    return "".join(str(x) for x in idx if x is not None)


def _suite_mcr_rows(cfg: SuiteConfig, run: _CaseRunner):
    c = cfg.c
    smax = max(1, min(2, cfg.max_set_size))
    sizes = [(n, m) for n in range(1, smax + 1) for m in range(1, smax + 1)]
    for d in range(cfg.draws):
        chain = run.chain(d)
        base = {"c": rat_str(c), "L": str(cfg.L), "xi": _pset(chain.xi)}

        for eid, index_list in _ROW_MCR_INDEXES.items():
            for idx in index_list:
                size_grid = sizes if eid != "MC-TijTi3" else sizes + [(1, 3)]
                for n, m in size_grid:
                    cid = f"{eid}-{_idx_tag(idx)}-n{n}m{m}-d{d}"
                    pts, _ = run.draw(cid, n + m, forbidden=chain.xi)
                    us, vs = make_varset(pts[:n]), make_varset(pts[n:])
                    i, j, k = idx
                    run(
                        cid,
                        eid,
                        dict(base, u=_pset(us), v=_pset(vs), idx=_idx_tag(idx)),
                        lambda eid=eid, ch=chain, us=us, vs=vs, i=i, j=j, k=k: (
                            mcr_check(McrCase(eid, ch, us, vs, i=i, j=j, k=k))
                        ),
                    )

        for i in (1, 2):
            for j in (1, 2):
                cid = f"pair-exchange-{i}{j}-d{d}"
                pts, _ = run.draw(cid, 2, forbidden=chain.xi)
                run(
                    cid,
                    "pair-exchange",
                    dict(base, u=rat_str(pts[0]), v=rat_str(pts[1]), idx=f"{i}{j}"),
                    lambda ch=chain, i=i, j=j, u=pts[0], v=pts[1]: (
                        pair_exchange_check(ch, i, j, u, v)
                    ),
                )


def _suite_mcr_columns(cfg: SuiteConfig, run: _CaseRunner):
    c = cfg.c
    amax = max(1, min(3, cfg.max_set_size))
    for d in range(cfg.draws):
        chain = run.chain(d)
        base = {"c": rat_str(c), "L": str(cfg.L), "xi": _pset(chain.xi)}
        for eid in ("MC-T22T12", "MC-T23T13"):
            for a in range(1, amax + 1):
                cid = f"{eid}-a{a}-d{d}"
                pts, _ = run.draw(cid, a + 1, forbidden=chain.xi)
                v_pt, us = pts[0], make_varset(pts[1:])
                run(
                    cid,
                    eid,
                    dict(base, u=_pset(us), v=rat_str(v_pt)),
                    lambda eid=eid, ch=chain, us=us, v_pt=v_pt: (
                        mcr_check(McrCase(eid, ch, us, make_varset([v_pt])))
                    ),
                )


def _suite_xy(cfg: SuiteConfig, run: _CaseRunner):
    c = cfg.c
    total_max = cfg.max_set_size
    grid = [
        (a, b)
        for total in range(total_max + 1)
        for a in range(total + 1)
        for b in [total - a]
    ]
    for d in range(cfg.draws):
        chain = run.chain(d)
        base = {"c": rat_str(c), "L": str(cfg.L), "xi": _pset(chain.xi)}
        for a, b in grid:
            for tag, checker in (
                ("xy-equal", xy_equivalence_check),
                ("leading-term", xy_leading_term_check),
            ):
                cid = f"{tag}-a{a}b{b}-d{d}"
                pts, _ = run.draw(cid, a + b, forbidden=chain.xi)
                us, vs = make_varset(pts[:a]), make_varset(pts[a:])
                run(
                    cid,
                    tag,
                    dict(base, u=_pset(us), v=_pset(vs)),
                    lambda checker=checker, us=us, vs=vs, ch=chain: checker(
                        XYArgs(us, vs, ch)
                    ),
                )
            if a >= 1:
                for which in ("X", "Y"):
                    cid = f"recursion-{which}-a{a}b{b}-d{d}"
                    pts, _ = run.draw(cid, a + b, forbidden=chain.xi)
                    us, vs = make_varset(pts[:a]), make_varset(pts[a:])
                    run(
                        cid,
                        f"recursion-{which}",
                        dict(base, u=_pset(us), v=_pset(vs)),
                        lambda which=which, us=us, vs=vs, ch=chain: recursion_check(
                            which, XYArgs(us, vs, ch)
                        ),
                    )

        for b in range(0, min(3, total_max) + 1):
            cid = f"xy-base-b{b}-d{d}"
            pts, _ = run.draw(cid, b, forbidden=chain.xi)
            vs = make_varset(pts)

            def t_base(vs=vs, ch=chain, b=b):
                mono = get_monodromy(ch)
                args = XYArgs(make_varset([]), vs, ch)
                expect = mono.sym_odd("col", 2, vs)
                for name, op in (("X", x_operator), ("Y", y_operator)):
                    diff = op(args).first_difference(expect)
                    if diff is not None:
                        raise CheckFailure(
                            f"{name} at a=0 is not the bare symmetric product",
                            lhs=diff[2],
                            rhs=diff[3],
                            coords=diff[:2],
                        )
                return CheckReport("xy-base", f"b={b}")

            run(cid, "xy-base", dict(base, v=_pset(vs)), t_base)

        for b in range(1, min(3, total_max) + 1):
            cid = f"COMM-a1-b{b}-d{d}"
            pts, _ = run.draw(cid, b + 1, forbidden=chain.xi)
            u_pt, vs = pts[0], make_varset(pts[1:])
            run(
                cid,
                "COMM-a1",
                dict(base, u=rat_str(u_pt), v=_pset(vs)),
                lambda ch=chain, u_pt=u_pt, vs=vs: mcr_check(
                    McrCase("COMM-a1", ch, make_varset([u_pt]), vs)
                ),
            )


def _bethe_suite(dual: bool):
    def suite(cfg: SuiteConfig, run: _CaseRunner):
        c = cfg.c
        top = max(1, min(2, cfg.max_set_size))
        tag = "dBV" if dual else "BV"
        ref = "dBV-agree" if dual else "BV-agree"
        for d in range(cfg.draws):
            chain = run.chain(d)
            base = {"c": rat_str(c), "L": str(cfg.L), "xi": _pset(chain.xi)}
            for a in range(0, top + 1):
                for b in range(0, top + 1):
                    cid = f"{tag}-a{a}b{b}-d{d}"
                    pts, _ = run.draw(cid, a + b, forbidden=chain.xi)
                    us, vs = make_varset(pts[:a]), make_varset(pts[a:])
                    run(
                        cid,
                        ref,
                        dict(base, u=_pset(us), v=_pset(vs)),
                        lambda us=us, vs=vs, ch=chain: bethe_agreement_check(
                            XYArgs(us, vs, ch), dual=dual
                        ),
                    )

    return suite


_SUITES = {
    "scalars": _suite_scalars,
    "dwpf": _suite_dwpf,
    "lemmas": _suite_lemmas,
    "rtt": _suite_rtt,
    "mcr-rows": _suite_mcr_rows,
    "mcr-columns": _suite_mcr_columns,
    "xy": _suite_xy,
    "bethe": _bethe_suite(dual=False),
    "dual-bethe": _bethe_suite(dual=True),
}


def run_suite(cfg: SuiteConfig) -> Report:
    """Execute one suite (or all of them) and return the flat report."""
    names = SUITE_ORDER if cfg.suite == "all" else (cfg.suite,)
    report = Report(cfg.suite)
    t0 = perf_counter()
    for name in names:
        _SUITES[name](cfg, _CaseRunner(cfg, name, report.cases))
    report.wall_seconds = perf_counter() - t0
    return report
