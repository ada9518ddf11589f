"""Shared exception types and the computation budget."""

from dataclasses import dataclass


class SigmaDynError(Exception):
    """Base class for all library errors."""


class ZeroDenominator(SigmaDynError):
    pass


class ResourceLimit(SigmaDynError):
    """A Groebner/solver run exceeded its pair-reduction budget."""


class CompositionUndefined(SigmaDynError):
    """A pulled-back denominator vanishes identically on the source."""


class MapUndefinedOnX(SigmaDynError):
    """A denominator of the map lies in the ideal of the subvariety."""


class FibreUndefined(SigmaDynError):
    pass


class FibreMismatch(SigmaDynError):
    pass


class NotInH0(SigmaDynError):
    """Generic transport of a pair parameter has no solution in Z."""


class IdentityFails(SigmaDynError):
    """A symbolic identity that should vanish has a nonzero residual."""

    def __init__(self, message, residuals=()):
        super().__init__(message)
        self.residuals = tuple(residuals)


class PresentationIncomplete(SigmaDynError):
    pass


class NonAffineRho(SigmaDynError):
    pass


class OrbitLeavesDomain(SigmaDynError):
    def __init__(self, message, iterate):
        super().__init__(message)
        self.iterate = iterate


class InputError(SigmaDynError):
    """Bad user input (DSL syntax, unresolved names, arity)."""


@dataclass(frozen=True)
class Budget:
    """Caps the exact kernel so CLI runs fail loudly instead of hanging.

    pair_reductions bounds Buchberger S-pair reductions per basis call;
    sigma_closure_steps bounds canonical-base orbit iteration.
    """

    pair_reductions: int = 50_000
    sigma_closure_steps: int = 3


DEFAULT_BUDGET = Budget()
