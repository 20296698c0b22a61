"""Exact-arithmetic checks for a graded spin chain with a fermionic level.

The package builds the rational R-matrix on C^{2|1}, inhomogeneous
monodromy matrices over chains of such factors, and verifies the
exchange relations, partition-function identities, and Bethe-vector
representations that the operator algebra is supposed to satisfy.
Everything runs over Fraction; a check passes only on exact equality.
"""

from .scalars import Coupling, Rat, f, g, h, rat, rat_str, set_product
from .varsets import Split, VarSet, enumerate_splits, make_varset, shift_set

__all__ = [
    "Coupling",
    "Rat",
    "Split",
    "VarSet",
    "enumerate_splits",
    "f",
    "g",
    "h",
    "make_varset",
    "rat",
    "rat_str",
    "set_product",
    "shift_set",
]
