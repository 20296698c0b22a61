"""Ordered sets of spectral parameters and their partitions.

A VarSet is an ordered list of pairwise distinct rationals.  The order is
the natural order: the index order in which the set was built.  Every
partition (Split) hands each part the relative order it had in the parent,
so a subset of a naturally ordered set is again naturally ordered.

Partitions into parts of prescribed sizes are enumerated by choosing index
subsets in lexicographic order, which makes every brute-force partition
sum reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import DuplicateError, SizeMismatchError
from .scalars import RatLike, rat, rat_str


class VarSet:
    """An immutable ordered tuple of pairwise distinct rationals."""

    __slots__ = ("elements",)

    def __init__(self, elements: Iterable[RatLike]):
        elems = tuple(rat(x) for x in elements)
        seen = set()
        for x in elems:
            if x in seen:
                raise DuplicateError(f"repeated value {rat_str(x)} in variable set")
            seen.add(x)
        object.__setattr__(self, "elements", elems)

    def __setattr__(self, name, value):
        raise AttributeError("VarSet is immutable")

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, k):
        return self.elements[k]

    def __contains__(self, x) -> bool:
        return rat(x) in self.elements

    def __eq__(self, other) -> bool:
        return isinstance(other, VarSet) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return "{" + ", ".join(rat_str(x) for x in self.elements) + "}"

    def concat(self, other: "VarSet | Iterable[RatLike]") -> "VarSet":
        """Union written by juxtaposition: self first, then other."""
        other_elems = other.elements if isinstance(other, VarSet) else tuple(other)
        return VarSet(self.elements + tuple(rat(x) for x in other_elems))

    def remove(self, x: RatLike) -> "VarSet":
        """Complement of a single element, order preserved."""
        x = rat(x)
        if x not in self.elements:
            raise KeyError(f"{rat_str(x)} not in set")
        return VarSet(tuple(e for e in self.elements if e != x))

    def serialize(self) -> str:
        return ",".join(rat_str(x) for x in self.elements)


@dataclass(frozen=True)
class Split:
    """An ordered partition of a parent VarSet into disjoint parts.

    Each part keeps the relative order its elements had in the parent.
    """

    parts: tuple
    parent: VarSet

    def __iter__(self) -> Iterator[VarSet]:
        return iter(self.parts)

    def __getitem__(self, k) -> VarSet:
        return self.parts[k]


def make_varset(xs: Iterable[RatLike]) -> VarSet:
    """Build a VarSet, rejecting duplicates.

    >>> make_varset([1, 2, 3])
    {1, 2, 3}
    """
    return VarSet(xs)


def enumerate_splits(s: VarSet, sizes: Sequence[int]) -> list[Split]:
    """All ordered partitions of s into parts of the given sizes.

    The parts are chosen as index subsets in lexicographic order, the
    first part varying slowest.  The number of results is the multinomial
    coefficient |s|! / prod(sizes[k]!).

    >>> [tuple(p.elements for p in sp) for sp in enumerate_splits(make_varset([1, 2, 3]), [1, 2])]
    [((Fraction(1, 1),), (Fraction(2, 1), Fraction(3, 1))), ((Fraction(2, 1),), (Fraction(1, 1), Fraction(3, 1))), ((Fraction(3, 1),), (Fraction(1, 1), Fraction(2, 1)))]
    """
    if any(k < 0 for k in sizes):
        raise SizeMismatchError(f"negative part size in {list(sizes)}")
    if sum(sizes) != len(s):
        raise SizeMismatchError(
            f"part sizes {list(sizes)} do not sum to set size {len(s)}"
        )
    elems = s.elements
    results: list[Split] = []

    def recurse(remaining: tuple, chosen: tuple):
        depth = len(chosen)
        if depth == len(sizes):
            results.append(Split(parts=chosen, parent=s))
            return
        k = sizes[depth]
        for idx in combinations(range(len(remaining)), k):
            part = VarSet(remaining[i] for i in idx)
            rest = tuple(remaining[i] for i in range(len(remaining)) if i not in idx)
            recurse(rest, chosen + (part,))

    recurse(elems, ())
    return results


def shift_set(s: VarSet, d: RatLike) -> VarSet:
    """Every element shifted by d, order preserved."""
    d = rat(d)
    return VarSet(x + d for x in s.elements)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
