"""The domain-wall partition function K and the summation lemmas around it.

K(ū|v̄) is defined for equal-size sets of distinct rationals as

    K = Δ'(ū) Δ(v̄) h(ū,v̄) det[ g(u_j,v_k) / h(u_j,v_k) ]

with K(∅|∅) = 1.  Internally the h-prefactor is distributed into the
determinant rows, making every entry g(u_j,v_k) ∏_{k'≠k} h(u_j,v_{k'}).
That form stays finite when some h(u_j,v_k) vanishes (u_j − v_k + c = 0),
which several of the summation identities rely on; the only genuine
poles are at u_j = v_k.  KArgs.guards() reports both loci so callers can
see which one an input sits on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import CheckFailure, CheckReport, PoleError, ReconstructionError
from .linalg import det, poly_eval, poly_interpolate
from .scalars import Coupling, Rat, f, g, h, rat_str, set_product
from .varsets import VarSet, enumerate_splits, make_varset, shift_set


def delta_products(u_set: VarSet, v_set: VarSet, c: Coupling) -> tuple[Rat, Rat]:
    """Return (Δ'(ū), Δ(v̄)) = (∏_{j<k} g(u_j,u_k), ∏_{j>k} g(v_j,v_k)).

    >>> from gradedchain.scalars import Coupling
    >>> from gradedchain.varsets import make_varset
    >>> delta_products(make_varset([3, 1]), make_varset([3, 1]), Coupling(1))
    (Fraction(1, 2), Fraction(-1, 2))
    """
    us, vs = u_set.elements, v_set.elements
    dp = Fraction(1)
    for j in range(len(us)):
        for k in range(j + 1, len(us)):
            dp *= g(us[j], us[k], c)
    dm = Fraction(1)
    for j in range(len(vs)):
        for k in range(j):
            dm *= g(vs[j], vs[k], c)
    return dp, dm


@dataclass(frozen=True)
class KArgs:
    """Arguments of K: two equal-size variable sets and the coupling."""

    u_set: VarSet
    v_set: VarSet
    c: Coupling

    def __post_init__(self):
        if len(self.u_set) != len(self.v_set):
            raise PoleError(
                f"K needs equal-size sets, got {len(self.u_set)} and {len(self.v_set)}"
            )

    def guards(self) -> tuple[str, ...]:
        """Which dangerous loci the arguments sit on, if any.

        "g-pole" entries (u_j = v_k) are genuine poles of K; "h-zero"
        entries (u_j - v_k + c = 0) are zeros of the h-prefactor that
        the row-cleared determinant absorbs.
        """
        hits = []
        for j, uj in enumerate(self.u_set):
            for k, vk in enumerate(self.v_set):
                if uj == vk:
                    hits.append(f"g-pole at u[{j}]=v[{k}]={rat_str(uj)}")
                elif uj - vk + self.c == 0:
                    hits.append(f"h-zero at u[{j}]={rat_str(uj)}, v[{k}]={rat_str(vk)}")
        return tuple(hits)


def K(args: KArgs) -> Rat:
    """Evaluate the partition function exactly.

    >>> from gradedchain.scalars import Coupling
    >>> from gradedchain.varsets import make_varset
    >>> c1 = Coupling(1)
    >>> K(KArgs(make_varset([]), make_varset([]), c1))
    Fraction(1, 1)
    >>> K(KArgs(make_varset([2]), make_varset([0]), c1))
    Fraction(1, 2)
    """
    us, vs, c = args.u_set.elements, args.v_set.elements, args.c
    n = len(us)
    if n == 0:
        return Fraction(1)
    for j, uj in enumerate(us):
        for k, vk in enumerate(vs):
            if uj == vk:
                raise PoleError(f"K pole: u[{j}] = v[{k}] = {rat_str(uj)}")
    dp, dm = delta_products(args.u_set, args.v_set, c)
    rows = []
    for uj in us:
        hs = [h(uj, vk, c) for vk in vs]
        row = []
        for k, vk in enumerate(vs):
            e = g(uj, vk, c)
            for kp in range(n):
                if kp != k:
                    e *= hs[kp]
            row.append(e)
        rows.append(row)
    return dp * dm * det(rows)


def k_value(us, vs, c: Coupling) -> Rat:
    """K on raw element sequences; builds the VarSets in the given order."""
    return K(KArgs(make_varset(us), make_varset(vs), c))


def _fresh_points(count: int, avoid, start: Rat) -> list[Fraction]:
    """Deterministic integers >= start not colliding with `avoid`."""
    taken = set(avoid)
    out: list[Fraction] = []
    t = Fraction(start).__ceil__()
    while len(out) < count:
        ft = Fraction(t)
        if ft not in taken:
            out.append(ft)
            taken.add(ft)
        t += 1
    return out


def K_shift_properties_check(args: KArgs) -> CheckReport:
    """Verify the three exact shift properties of K.

    (a) appending z−c to ū and z to v̄ (or z to ū and z+c to v̄) flips
        the sign: both extended evaluations equal −K(ū|v̄);
    (b) K(ū−c|v̄) = K(ū|v̄+c) = (−1)^n K(v̄|ū) / f(v̄,ū);
    (c) rebuilding everything with the negated coupling gives K(v̄|ū).
    """
    us, vs, c = args.u_set, args.v_set, args.c
    n = len(us)
    base = K(args)

    # (a): pick the first integer z clear of every pole of both extensions
    elems = list(us) + list(vs)
    avoid = set(elems)
    avoid |= {x + c for x in elems} | {x - c for x in elems}
    top = max((abs(x) for x in elems), default=Fraction(0)) + abs(c) + 1
    z = _fresh_points(1, avoid, top)[0]
    ext1 = k_value(list(us) + [z - c], list(vs) + [z], c)
    if ext1 != -base:
        raise CheckFailure(
            f"shift (a) first form failed at z={rat_str(z)}", lhs=ext1, rhs=-base
        )
    ext2 = k_value(list(us) + [z], list(vs) + [z + c], c)
    if ext2 != -base:
        raise CheckFailure(
            f"shift (a) second form failed at z={rat_str(z)}", lhs=ext2, rhs=-base
        )

    # (b): two whole-set shifts against the reflected evaluation
    fvu = set_product(f, vs, us, c)
    if fvu == 0:
        raise PoleError("property (b) prefactor f(v̄,ū) vanishes for these sets")
    reflected = K(KArgs(vs, us, c)) * (-1) ** n / fvu
    down = K(KArgs(shift_set(us, -c), vs, c))
    if down != reflected:
        raise CheckFailure("shift (b) failed for ū−c", lhs=down, rhs=reflected)
    up = K(KArgs(us, shift_set(vs, c), c))
    if up != reflected:
        raise CheckFailure("shift (b) failed for v̄+c", lhs=up, rhs=reflected)

    # (c): negate the coupling, rebuild from scratch
    negated = K(KArgs(us, vs, Coupling(-c)))
    swapped = K(KArgs(vs, us, c))
    if negated != swapped:
        raise CheckFailure("coupling reflection (c) failed", lhs=negated, rhs=swapped)

    return CheckReport(
        "K-shift",
        f"n={n}",
        {"z": rat_str(z), "base": rat_str(base)},
    )


def K_residue_check(u_set: VarSet, v_set: VarSet, c: Coupling) -> CheckReport:
    """Reconstruct K as a rational function of the last u and check its poles.

    As a function of t = u_n, K({ū_n,t}|v̄) equals P(t) / ∏_k (t − v_k)
    with deg P ≤ n−1.  We sample n+2 fresh points, interpolate P exactly,
    confirm the degree bound (the two extra points make the bound a real
    statement), and match the residue at every v_k against
    c · f(v_k, v̄∖v_k) · f(ū_n, v_k) · K(ū_n | v̄∖v_k).
    """
    n = len(v_set)
    if n == 0 or len(u_set) != n:
        raise ReconstructionError("need equal nonempty sets")
    u_rest = make_varset(u_set.elements[:-1])
    vs = v_set.elements
    elems = list(u_rest) + list(vs)
    top = max(abs(x) for x in list(u_set) + list(vs)) + 1
    ts = _fresh_points(n + 2, elems, top)
    points = []
    for t in ts:
        kt = k_value(list(u_rest) + [t], vs, c)
        denom = Fraction(1)
        for vk in vs:
            denom *= t - vk
        points.append((t, kt * denom))
    coeffs = poly_interpolate(points)
    degree = len(coeffs) - 1
    if degree > n - 1:
        raise CheckFailure(
            f"numerator degree {degree} exceeds {n - 1}: no 1/u decay", lhs=degree
        )
    rest = list(u_rest)
    for k, vk in enumerate(vs):
        others = [v for i, v in enumerate(vs) if i != k]
        denom = Fraction(1)
        for v in others:
            denom *= vk - v
        residue = poly_eval(coeffs, vk) / denom
        expected = (
            c
            * set_product(f, [vk], others, c)
            * set_product(f, rest, [vk], c)
            * k_value(rest, others, c)
        )
        if residue != expected:
            raise CheckFailure(
                f"residue at v[{k}]={rat_str(vk)} mismatched",
                lhs=residue,
                rhs=expected,
            )
    return CheckReport(
        "K-residue", f"n={n} degree={degree}", {"samples": len(ts)}
    )


def cauchy_determinant_check(u_set: VarSet, v_set: VarSet, c: Coupling) -> CheckReport:
    """Verify g(ū,v̄) = Δ(ū) Δ'(v̄) det[g(u_j,v_k)] exactly.

    Note the primes sit on the opposite sets compared to the K prefactor.
    """
    if len(u_set) != len(v_set):
        raise PoleError("need equal-size sets")
    lhs = set_product(g, u_set, v_set, c)
    d_prime_v, d_u = delta_products(v_set, u_set, c)
    rows = [[g(uj, vk, c) for vk in v_set] for uj in u_set]
    rhs = d_u * d_prime_v * det(rows)
    if lhs != rhs:
        raise CheckFailure("Cauchy determinant form mismatched", lhs=lhs, rhs=rhs)
    return CheckReport("cauchy-det", f"n={len(u_set)}", {"value": rat_str(lhs)})


def lemma_sum_check(
    lemma_id: str,
    c: Coupling,
    u_set: Optional[VarSet] = None,
    v_set: Optional[VarSet] = None,
    w_set: Optional[VarSet] = None,
    xi: Optional[Rat] = None,
    u_a: Optional[Rat] = None,
    v_gamma: Optional[VarSet] = None,
    v_tau: Optional[Rat] = None,
) -> CheckReport:
    """Brute-force one of the partition-sum lemmas and compare closed forms.

    g-product-split: sums g(w̄_α,ū) g(w̄_ᾱ,v̄) g(w̄_ᾱ,w̄_α) over splits of
             w̄ with |w̄_α| = |ū|; closed form g(w̄,ū) g(w̄,v̄) / g(ū,v̄).
    K-convolution: sums K(w̄_α|ū) K(v̄|w̄_ᾱ) f(w̄_ᾱ,w̄_α); closed form
             (−1)^{|ū|} f(w̄,ū) K({ū−c,v̄}|w̄).
    K-peel-u: sums K(v̄|{ū_ᾱ,ξ}) g(ū_α,ξ) f(ū_ᾱ,ū_α) over single-element
             ū_α; closed form (f(ū,ξ) − f(v̄,ξ)) K(v̄|ū).
    K-peel-v: mirror of K-peel-u on the v side with ξ in the first slot.
    contour: sums f(v̄_ρ,v̄_σ) g(v_τ,v̄_ρ) g(u_a,v̄_ρ) over single-element
             v̄_ρ ⊂ v̄_γ; closed form g(u_a,v_τ)(f(v_τ,v̄_γ) − f(u_a,v̄_γ)).
             Holds for a single spectator point v_τ only.
    """
    if lemma_id == "g-product-split":
        m1, m2 = len(u_set), len(v_set)
        if len(w_set) != m1 + m2:
            raise PoleError("g-product-split needs |w̄| = |ū| + |v̄|")
        total = Fraction(0)
        splits = enumerate_splits(w_set, [m1, m2])
        for sp in splits:
            wa, wb = sp.parts
            total += (
                set_product(g, wa, u_set, c)
                * set_product(g, wb, v_set, c)
                * set_product(g, wb, wa, c)
            )
        closed = (
            set_product(g, w_set, u_set, c)
            * set_product(g, w_set, v_set, c)
            / set_product(g, u_set, v_set, c)
        )
        terms = len(splits)
    elif lemma_id == "K-convolution":
        m1, m2 = len(u_set), len(v_set)
        if len(w_set) != m1 + m2:
            raise PoleError("K-convolution needs |w̄| = |ū| + |v̄|")
        total = Fraction(0)
        splits = enumerate_splits(w_set, [m1, m2])
        for sp in splits:
            wa, wb = sp.parts
            total += (
                k_value(list(wa), list(u_set), c)
                * k_value(list(v_set), list(wb), c)
                * set_product(f, wb, wa, c)
            )
        closed = (
            (-1) ** m1
            * set_product(f, w_set, u_set, c)
            * k_value(list(shift_set(u_set, -c)) + list(v_set), list(w_set), c)
        )
        terms = len(splits)
    elif lemma_id == "K-peel-u":
        n = len(u_set)
        if len(v_set) != n:
            raise PoleError("K-peel-u needs |ū| = |v̄|")
        total = Fraction(0)
        splits = enumerate_splits(u_set, [1, n - 1])
        for sp in splits:
            ua, ub = sp.parts
            total += (
                k_value(list(v_set), list(ub) + [xi], c)
                * g(ua[0], xi, c)
                * set_product(f, ub, ua, c)
            )
        closed = (
            set_product(f, u_set, [xi], c) - set_product(f, v_set, [xi], c)
        ) * k_value(list(v_set), list(u_set), c)
        terms = len(splits)
    elif lemma_id == "K-peel-v":
        n = len(u_set)
        if len(v_set) != n:
            raise PoleError("K-peel-v needs |ū| = |v̄|")
        total = Fraction(0)
        splits = enumerate_splits(v_set, [1, n - 1])
        for sp in splits:
            va, vb = sp.parts
            total += (
                k_value(list(vb) + [xi], list(u_set), c)
                * g(va[0], xi, c)
                * set_product(f, va, vb, c)
            )
        closed = (
            set_product(f, [xi], u_set, c) - set_product(f, [xi], v_set, c)
        ) * k_value(list(v_set), list(u_set), c)
        terms = len(splits)
    elif lemma_id == "contour":
        n = len(v_gamma)
        total = Fraction(0)
        splits = enumerate_splits(v_gamma, [n - 1, 1])
        for sp in splits:
            vs_, vr = sp.parts
            total += (
                set_product(f, vr, vs_, c)
                * g(v_tau, vr[0], c)
                * g(u_a, vr[0], c)
            )
        closed = g(u_a, v_tau, c) * (
            set_product(f, [v_tau], v_gamma, c) - set_product(f, [u_a], v_gamma, c)
        )
        terms = len(splits)
    else:
        raise PoleError(f"unknown lemma id {lemma_id!r}")
    if total != closed:
        raise CheckFailure(
            f"lemma {lemma_id} mismatched over {terms} terms", lhs=total, rhs=closed
        )
    return CheckReport(
        f"lemma-{lemma_id}", f"{terms} terms", {"value": rat_str(total)}
    )


def micro_rewrite_check(u: Rat, v: Rat, c: Coupling) -> CheckReport:
    """The single-variable rewrites between 1/h and shifted 1x1 K values.

    1/h(v,u) = −K({u}|{v+c}) and K({u−c}|{v}) = −1/h(v,u).
    """
    hv = h(v, u, c)
    if hv == 0:
        raise PoleError("h(v,u) vanishes; rewrite undefined")
    inv = 1 / hv
    first = k_value([u], [v + c], c)
    if inv != -first:
        raise CheckFailure("1/h(v,u) = −K({u}|{v+c}) failed", lhs=inv, rhs=-first)
    second = k_value([u - c], [v], c)
    if second != -inv:
        raise CheckFailure("K({u−c}|{v}) = −1/h(v,u) failed", lhs=second, rhs=-inv)
    return CheckReport("micro-rewrites", "", {"value": rat_str(inv)})


if __name__ == "__main__":
    import doctest

    doctest.testmod()
