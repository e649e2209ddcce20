"""Exception hierarchy shared by every gsprime module."""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all gsprime errors."""


class StructureError(AlgebraError):
    """Tables are malformed (wrong size, ids out of range) before any axiom is checked."""


class ValidationError(AlgebraError):
    """An axiom failed; ``violations`` lists every failure with a witness tuple."""

    def __init__(self, what: str, violations):
        self.what = what
        self.violations = list(violations)
        first = self.violations[0] if self.violations else None
        msg = f"{what} failed validation"
        if first is not None:
            msg += f": {first.axiom} (witness {first.witness})"
            if len(self.violations) > 1:
                msg += f" and {len(self.violations) - 1} more"
        super().__init__(msg)


class PreconditionError(AlgebraError):
    """An operation was called outside its domain (improper, non-graded, s = 0, ...)."""


class HypothesisError(PreconditionError):
    """A theorem's hypothesis does not hold for the supplied instance."""

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        super().__init__(f"hypothesis failed: {hypothesis}" + (f" ({detail})" if detail else ""))


class SizeBoundError(AlgebraError):
    """Carrier too large for exhaustive treatment."""


class TheoremViolation(AlgebraError):
    """A proved statement failed on a concrete instance.

    Either the engine is wrong or the statement needs an extra hypothesis;
    ``bundle`` is a JSON-serialisable reproduction of the instance.
    """

    def __init__(self, name: str, bundle: dict):
        self.name = name
        self.bundle = bundle
        super().__init__(f"{name} failed on {bundle}")
