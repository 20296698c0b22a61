"""Exception types shared across the package.

Every failure mode has its own class so callers can react precisely:
pole hits and guard violations are input problems (ValueError family),
while CheckFailure signals that an exact identity did not hold and
carries both sides of the first mismatch for reporting.
"""


class PoleError(ValueError):
    """A scalar function or matrix entry was evaluated at a pole."""


class DuplicateError(ValueError):
    """A variable set was built with a repeated element."""


class SizeMismatchError(ValueError):
    """Partition sizes do not add up to the size of the parent set."""


class RangeError(ValueError):
    """A tensor-factor position is outside the available factors."""


class ReconstructionError(ValueError):
    """Rational-function reconstruction could not pick pole-free samples."""


class ExhaustionError(RuntimeError):
    """Rejection sampling failed to produce a collision-free draw."""


class ConfigError(ValueError):
    """Unknown suite name or invalid harness configuration."""


class CheckFailure(AssertionError):
    """An exact identity check failed.

    Attributes
    ----------
    detail: human-readable description of the first mismatch
    lhs, rhs: the differing values (scalars, or single matrix entries)
    coords: optional (row, col) of the first differing matrix entry
    """

    def __init__(self, detail, lhs=None, rhs=None, coords=None):
        super().__init__(detail)
        self.detail = detail
        self.lhs = lhs
        self.rhs = rhs
        self.coords = coords


class CheckReport:
    """Successful outcome of an identity check.

    Checks raise CheckFailure on any exact mismatch, so holding a
    CheckReport means the identity held; `data` carries whatever the
    check wants on record (term counts, serialized values).
    """

    __slots__ = ("name", "detail", "data")

    def __init__(self, name: str, detail: str = "", data: dict | None = None):
        self.name = name
        self.detail = detail
        self.data = data or {}

    def __repr__(self):
        return f"CheckReport({self.name!r}, {self.detail!r})"
