"""The graded vector space C^{2|1}, its operators, and graded embeddings.

Basis indices 1, 2, 3 carry parities [1] = [2] = 0 and [3] = 1.  A chain
of n such factors has dimension 3**n; composite basis states are tuples
(i_1, ..., i_n) with the leftmost factor most significant in the flat
index.

GMatrix stores a square operator as one sorted tuple of (column, value)
pairs per row, zeros dropped.  This keeps multiplication proportional to
the number of nonzeros, which is what makes exact arithmetic viable for
the 243-dimensional spaces the exchange-relation checks live on.

Embeddings into a larger tensor product use the Koszul convention: a
matrix unit E_ij acting on factor k picks up the sign
(-1)**(([i]+[j]) * sum of parities of the basis indices left of k).
A two-factor operator M at positions p < q embeds component-wise as

    M[ab, cd] * (-1)**(([b]+[d]) * P(<q, skip p) + ([a]+[c]) * P(<p))

where P(...) sums spectator parities over the indicated factor range.
For parity-even M (such as the R-matrix) the sign reduces to the parity
of the spectators strictly between p and q.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .errors import CheckFailure, CheckReport, PoleError, RangeError
from .scalars import Coupling, RatLike, f, g, rat

PARITY = (0, 0, 1)


def parity(i: int) -> int:
    """Parity of basis index i in {1, 2, 3}: [1] = [2] = 0, [3] = 1."""
    return PARITY[i - 1]


@lru_cache(maxsize=None)
def _powers(factors: int) -> tuple[int, ...]:
    return tuple(3 ** (factors - 1 - k) for k in range(factors))


@lru_cache(maxsize=None)
def all_states(factors: int) -> tuple[tuple[int, ...], ...]:
    """All composite basis states as tuples of indices in {1, 2, 3}."""
    return tuple(product((1, 2, 3), repeat=factors))


def state_index(state: Sequence[int]) -> int:
    """Flat index of a composite state, leftmost factor most significant."""
    idx = 0
    for i in state:
        idx = idx * 3 + (i - 1)
    return idx


@lru_cache(maxsize=None)
def state_parities(factors: int) -> tuple[int, ...]:
    """Total parity (mod 2) of every composite basis state."""
    return tuple(sum(parity(i) for i in s) % 2 for s in all_states(factors))


class GMatrix:
    """Immutable exact matrix on a graded tensor power of C^{2|1}."""

    __slots__ = ("factors", "dim", "rows")

    def __init__(self, factors: int, rows: Sequence[Sequence[tuple[int, Fraction]]]):
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "dim", 3**factors)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))
        if len(self.rows) != self.dim:
            raise ValueError(f"expected {self.dim} rows, got {len(self.rows)}")

    def __setattr__(self, name, value):
        raise AttributeError("GMatrix is immutable")

    @classmethod
    def from_dict(cls, factors: int, entries: dict[tuple[int, int], Fraction]) -> "GMatrix":
        dim = 3**factors
        rows: list[list[tuple[int, Fraction]]] = [[] for _ in range(dim)]
        for (i, j), v in entries.items():
            if v != 0:
                rows[i].append((j, v))
        return cls(factors, [sorted(r) for r in rows])

    @classmethod
    def identity(cls, factors: int) -> "GMatrix":
        one = Fraction(1)
        return cls(factors, [((j, one),) for j in range(3**factors)])

    @classmethod
    def zero(cls, factors: int) -> "GMatrix":
        return cls(factors, [()] * (3**factors))

    def get(self, i: int, j: int) -> Fraction:
        for col, v in self.rows[i]:
            if col == j:
                return v
            if col > j:
                break
        return Fraction(0)

    def __matmul__(self, other: "GMatrix") -> "GMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch in matrix product")
        orows = other.rows
        out = []
        for row in self.rows:
            acc: dict[int, Fraction] = {}
            for k, a in row:
                for j, b in orows[k]:
                    prev = acc.get(j)
                    acc[j] = a * b if prev is None else prev + a * b
            out.append(sorted((j, v) for j, v in acc.items() if v != 0))
        return GMatrix(self.factors, out)

    def __add__(self, other: "GMatrix") -> "GMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch in matrix sum")
        out = []
        for ra, rb in zip(self.rows, other.rows):
            acc = dict(ra)
            for j, v in rb:
                prev = acc.get(j)
                s = v if prev is None else prev + v
                acc[j] = s
            out.append(sorted((j, v) for j, v in acc.items() if v != 0))
        return GMatrix(self.factors, out)

    def __sub__(self, other: "GMatrix") -> "GMatrix":
        return self + other.scale(Fraction(-1))

    def __neg__(self) -> "GMatrix":
        return self.scale(Fraction(-1))

    def scale(self, s: RatLike) -> "GMatrix":
        s = rat(s)
        if s == 0:
            return GMatrix.zero(self.factors)
        return GMatrix(self.factors, [tuple((j, s * v) for j, v in r) for r in self.rows])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GMatrix)
            and self.dim == other.dim
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.dim, self.rows))

    def is_zero(self) -> bool:
        return all(len(r) == 0 for r in self.rows)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def matvec(self, vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Column action: (self @ vec)."""
        zero = Fraction(0)
        return tuple(
            sum((v * vec[j] for j, v in row), zero) for row in self.rows
        )

    def vecmat(self, vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Row action: (vec @ self)."""
        acc = [Fraction(0)] * self.dim
        for i, x in enumerate(vec):
            if x != 0:
                for j, v in self.rows[i]:
                    acc[j] += x * v
        return tuple(acc)

    def first_difference(self, other: "GMatrix"):
        """Coordinates and values of the first differing entry, or None."""
        for i in range(self.dim):
            da, db = dict(self.rows[i]), dict(other.rows[i])
            for j in sorted(set(da) | set(db)):
                va, vb = da.get(j, Fraction(0)), db.get(j, Fraction(0))
                if va != vb:
                    return (i, j, va, vb)
        return None


def graded_permutation() -> GMatrix:
    """The 9x9 graded permutation: P(e_i x e_j) = (-1)**([i][j]) e_j x e_i."""
    entries: dict[tuple[int, int], Fraction] = {}
    for i, j in product((1, 2, 3), repeat=2):
        col = (i - 1) * 3 + (j - 1)
        row = (j - 1) * 3 + (i - 1)
        entries[(row, col)] = Fraction((-1) ** (parity(i) * parity(j)))
    return GMatrix.from_dict(2, entries)


_P2 = graded_permutation()
_I2 = GMatrix.identity(2)


def r_matrix(u: RatLike, v: RatLike, c: Coupling) -> GMatrix:
    """R(u, v) = I + g(u, v) P on the twofold graded space."""
    u, v = rat(u), rat(v)
    if u == v:
        raise PoleError("R-matrix evaluated at coinciding spectral parameters")
    return _I2 + _P2.scale(g(u, v, c))


def embed_one(m: GMatrix, position: int, total_sites: int) -> GMatrix:
    """Embed a single-factor operator at the given position with Koszul signs."""
    if not 0 <= position < total_sites:
        raise RangeError(f"position {position} outside {total_sites} factors")
    cols_of: dict[int, list[tuple[int, Fraction]]] = {1: [], 2: [], 3: []}
    for a in range(3):
        for jcol, v in m.rows[a]:
            cols_of[jcol + 1].append((a + 1, v))
    dim = 3**total_sites
    rows: list[list[tuple[int, Fraction]]] = [[] for _ in range(dim)]
    pw = _powers(total_sites)
    for s in all_states(total_sites):
        col = state_index(s)
        left_parity = sum(parity(x) for x in s[:position]) % 2
        c_idx = s[position]
        base = col - (c_idx - 1) * pw[position]
        for a, v in cols_of[c_idx]:
            row = base + (a - 1) * pw[position]
            sign = -1 if ((parity(a) + parity(c_idx)) * left_parity) % 2 else 1
            rows[row].append((col, v if sign == 1 else -v))
    return GMatrix(total_sites, [sorted(r) for r in rows])


def embed_two(m: GMatrix, pos_a: int, pos_b: int, total_sites: int) -> GMatrix:
    """Embed a two-factor operator at positions pos_a < pos_b with Koszul signs.

    m acts on the ordered pair (pos_a, pos_b): its row and column indices
    decompose as (a, b) with a at pos_a and b at pos_b.
    """
    if not (0 <= pos_a < pos_b < total_sites):
        raise RangeError(
            f"positions ({pos_a}, {pos_b}) invalid for {total_sites} factors"
        )
    cols_of: dict[tuple[int, int], list[tuple[int, int, Fraction]]] = {}
    for ridx in range(9):
        a, b = divmod(ridx, 3)
        for cidx, v in m.rows[ridx]:
            c2, d2 = divmod(cidx, 3)
            cols_of.setdefault((c2 + 1, d2 + 1), []).append((a + 1, b + 1, v))
    dim = 3**total_sites
    rows: list[list[tuple[int, Fraction]]] = [[] for _ in range(dim)]
    pw = _powers(total_sites)
    for s in all_states(total_sites):
        col = state_index(s)
        cd = (s[pos_a], s[pos_b])
        hits = cols_of.get(cd)
        if not hits:
            continue
        pre = [0]
        for x in s:
            pre.append(pre[-1] + parity(x))
        left_a = pre[pos_a]
        # parities of all factors left of pos_b except pos_a itself
        between = pre[pos_b] - parity(s[pos_a])
        c_idx, d_idx = cd
        base = col - (c_idx - 1) * pw[pos_a] - (d_idx - 1) * pw[pos_b]
        for a, b, v in hits:
            row = base + (a - 1) * pw[pos_a] + (b - 1) * pw[pos_b]
            exp = (parity(b) + parity(d_idx)) * between + (
                parity(a) + parity(c_idx)
            ) * left_a
            rows[row].append((col, v if exp % 2 == 0 else -v))
    return GMatrix(total_sites, [sorted(r) for r in rows])


def graded_embed(m: GMatrix, position: int, total_sites: int) -> GMatrix:
    """Embed a one- or two-factor operator; two-factor acts on (position, position+1)."""
    if m.factors == 1:
        return embed_one(m, position, total_sites)
    if m.factors == 2:
        return embed_two(m, position, position + 1, total_sites)
    raise RangeError("only one- and two-factor operators can be embedded")


def matrix_unit(i: int, j: int) -> GMatrix:
    """The 3x3 matrix unit E_ij (row i, column j, 1-based)."""
    return GMatrix.from_dict(1, {(i - 1, j - 1): Fraction(1)})


def yang_baxter_check(u: RatLike, v: RatLike, w: RatLike, c: Coupling) -> CheckReport:
    """R12 R13 R23 = R23 R13 R12 on the threefold space, pairwise arguments."""
    r12 = embed_two(r_matrix(u, v, c), 0, 1, 3)
    r13 = embed_two(r_matrix(u, w, c), 0, 2, 3)
    r23 = embed_two(r_matrix(v, w, c), 1, 2, 3)
    lhs = r12 @ r13 @ r23
    rhs = r23 @ r13 @ r12
    diff = lhs.first_difference(rhs)
    if diff is not None:
        i, j, a, b = diff
        raise CheckFailure(
            f"triple exchange mismatched at entry ({i},{j})", lhs=a, rhs=b,
            coords=(i, j),
        )
    return CheckReport("yang-baxter", "", {})


def unitarity_check(u: RatLike, v: RatLike, c: Coupling) -> CheckReport:
    """R(u,v) R(v,u) = f(u,v) f(v,u) Id."""
    u, v = rat(u), rat(v)
    prod_m = r_matrix(u, v, c) @ r_matrix(v, u, c)
    expect = GMatrix.identity(2).scale(f(u, v, c) * f(v, u, c))
    diff = prod_m.first_difference(expect)
    if diff is not None:
        i, j, a, b = diff
        raise CheckFailure(
            f"unitarity mismatched at entry ({i},{j})", lhs=a, rhs=b, coords=(i, j)
        )
    return CheckReport("unitarity", "", {})
