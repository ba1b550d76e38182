"""
Exception hierarchy for the finite presheaf toolkit.

Every error is a ValueError carrying a machine-readable ``code`` so the CLI
can report it without string matching.
"""

from typing import Any, List, Optional


class ToposError(ValueError):
    """Base class for all toolkit errors."""
    code = "TOPOS_ERROR"


class MalformedInput(ToposError):
    code = "MALFORMED_INPUT"


class AxiomViolation(ToposError):
    """A category description breaks a category axiom."""
    code = "AXIOM_VIOLATION"

    def __init__(self, message: str, violations: Optional[List[Any]] = None):
        super().__init__(message)
        self.violations = list(violations or [])


class UnknownObject(ToposError):
    code = "UNKNOWN_OBJECT"


class UnknownMorphism(ToposError):
    code = "UNKNOWN_MORPHISM"


class UnknownElement(ToposError):
    code = "UNKNOWN_ELEMENT"


class NoFactorization(ToposError):
    code = "NO_FACTORIZATION"

    def __init__(self, message: str, morphism: Any = None):
        super().__init__(message)
        self.morphism = morphism


class BudgetExceeded(ToposError):
    code = "BUDGET_EXCEEDED"


class NotNatural(ToposError):
    code = "NOT_NATURAL"

    def __init__(self, message: str, square: Any = None):
        super().__init__(message)
        self.square = square


class ParentMismatch(ToposError):
    code = "PARENT_MISMATCH"


class UnboundVariable(ToposError):
    code = "UNBOUND_VARIABLE"


class NotInLattice(ToposError):
    code = "NOT_IN_LATTICE"


class IncompatibleBase(ToposError):
    code = "INCOMPATIBLE_BASE"


class HypothesisFailed(ToposError):
    code = "HYPOTHESIS_FAILED"

    def __init__(self, message: str, report: Any = None):
        super().__init__(message)
        self.report = report


class TheoremViolation(ToposError):
    """Raised when a verified implication fails; always indicates a bug."""
    code = "THEOREM_VIOLATION"


class FormulaSyntaxError(ToposError):
    code = "FORMULA_SYNTAX"
