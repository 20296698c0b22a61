"""Exact rational scalars and the three elementary rational functions.

Everything in this package is computed over exact rationals; there is no
floating point anywhere.  The three functions

    g(x, y) = c / (x - y)
    f(x, y) = 1 + g(x, y) = (x - y + c) / (x - y)
    h(x, y) = f(x, y) / g(x, y) = (x - y + c) / c

are the only scalar building blocks.  g and f have a pole at x = y;
h is polynomial in x - y and is defined everywhere, with h(x, x) = 1.

Products of these functions over sets of arguments run over all ordered
pairs, one argument from each set, and the empty product is 1.  When the
two sets share elements the diagonal pairs are included; this matters
only for h, where the diagonal factors equal 1 and are harmless.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Union

from .errors import PoleError

Rat = Fraction
RatLike = Union[Fraction, int, str]


def rat(x: RatLike) -> Fraction:
    """Coerce an int, string like "3/4", or Fraction into an exact rational.

    >>> rat("3/4") + rat(1)
    Fraction(7, 4)
    """
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def rat_str(x: Fraction) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1.

    >>> rat_str(Fraction(-3, 4)), rat_str(Fraction(5))
    ('-3/4', '5')
    """
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Coupling(Fraction):
    """The nonzero coupling constant c of the model.

    Behaves as a plain Fraction in arithmetic; construction rejects zero.

    >>> Coupling("1/2") * 2
    Fraction(1, 1)
    """

    def __new__(cls, value: RatLike) -> "Coupling":
        q = Fraction(value)
        if q == 0:
            raise ValueError("coupling constant must be nonzero")
        return super().__new__(cls, q)


def g(x: RatLike, y: RatLike, c: Coupling) -> Fraction:
    """g(x, y) = c / (x - y).  Antisymmetric; pole at x = y."""
    x, y = rat(x), rat(y)
    if x == y:
        raise PoleError(f"g({rat_str(x)}, {rat_str(y)}) has a pole at equal arguments")
    return c / (x - y)


def f(x: RatLike, y: RatLike, c: Coupling) -> Fraction:
    """f(x, y) = (x - y + c) / (x - y) = 1 + g(x, y).  Pole at x = y."""
    x, y = rat(x), rat(y)
    if x == y:
        raise PoleError(f"f({rat_str(x)}, {rat_str(y)}) has a pole at equal arguments")
    return (x - y + c) / (x - y)


def h(x: RatLike, y: RatLike, c: Coupling) -> Fraction:
    """h(x, y) = (x - y + c) / c.  Polynomial; h(x, x) = 1, zero at x - y = -c."""
    return (rat(x) - rat(y) + c) / c


def set_product(
    fn: Callable[[RatLike, RatLike, Coupling], Fraction],
    a_set: Iterable[RatLike],
    b_set: Iterable[RatLike],
    c: Coupling,
) -> Fraction:
    """Double product of fn over all ordered pairs (a, b), a from a_set, b from b_set.

    The empty product is 1.  A pole in any pair aborts with a PoleError that
    names the offending pair.

    >>> set_product(g, [3, 5], [1], Coupling(1))
    Fraction(1, 8)
    """
    total = Fraction(1)
    b_list = [rat(b) for b in b_set]
    for a in a_set:
        a = rat(a)
        for b in b_list:
            try:
                total *= fn(a, b, c)
            except PoleError:
                raise PoleError(
                    f"set product hit a pole at pair ({rat_str(a)}, {rat_str(b)})"
                ) from None
    return total


if __name__ == "__main__":
    import doctest

    doctest.testmod()
