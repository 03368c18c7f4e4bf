"""Exception hierarchy shared by every module.

Each error carries a stable ``code`` string (used in JSON error objects) and
an ``exit_code`` used by the command line front end:

* 1 -- the input is not a valid codimension one distribution
* 2 -- the input is valid but the derived invariants are inconsistent
* 3 -- an internal invariant of the library was violated
"""

from __future__ import annotations

from typing import Any


class DistributionError(Exception):
    code = "error"
    exit_code = 3

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def to_dict(self) -> dict:
        out = {"code": self.code, "message": self.message}
        if self.witness is not None:
            out["witness"] = str(self.witness)
        return out


class ValidationError(DistributionError):
    exit_code = 1


class InconsistencyError(DistributionError):
    exit_code = 2


class InternalError(DistributionError):
    exit_code = 3


# -- polynomial core ---------------------------------------------------------

class ParseError(ValidationError):
    code = "parse_error"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position

    def to_dict(self) -> dict:
        out = super().to_dict()
        out["position"] = self.position
        return out


class UnknownIdentifier(ParseError):
    code = "unknown_identifier"


class ExponentOverflow(ParseError):
    code = "exponent_overflow"


class NotDivisible(ValidationError):
    """Raised by exact division; ``witness`` is the nonzero remainder."""
    code = "not_divisible"


# -- forms -------------------------------------------------------------------

class NotHomogeneous(ValidationError):
    code = "not_homogeneous"


class MixedDegrees(ValidationError):
    code = "mixed_degrees"


class ZeroForm(ValidationError):
    code = "zero_form"


class EulerConditionViolated(ValidationError):
    """``witness`` is the nonzero contraction sum z_i A_i."""
    code = "euler_condition_violated"


class NotAntisymmetric(ValidationError):
    code = "not_antisymmetric"


class MartinetDivisionFailed(InternalError):
    code = "martinet_division_failed"


# -- groebner / hilbert ------------------------------------------------------

class GuardExceeded(InternalError):
    code = "guard_exceeded"


# -- invariants --------------------------------------------------------------

class DivisorialSingularLocus(ValidationError):
    code = "divisorial_singular_locus"


class InconsistentInvariants(InconsistencyError):
    code = "inconsistent_invariants"


class ParityViolation(InconsistencyError):
    code = "parity_violation"


class NonIntegralGenus(InconsistencyError):
    code = "non_integral_genus"


class UnclassifiedInvariants(InconsistencyError):
    code = "unclassified_invariants"


# -- generators --------------------------------------------------------------

class InvalidSpec(ValidationError):
    code = "invalid_spec"


class GenerationExhausted(InternalError):
    code = "generation_exhausted"


class UnknownComponent(ValidationError):
    code = "unknown_component"


class UnknownClaim(ValidationError):
    code = "unknown_claim"
