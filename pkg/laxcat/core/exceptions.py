"""
Custom exceptions for the laxcat library.

This module provides a hierarchy of exceptions with error codes so that
callers (and the command line) can tell law violations, malformed input,
missing universal constructions and unmet hypotheses apart.
"""

from typing import Any, Dict, Optional, Sequence

# ============================================================================
# BASE EXCEPTION
# ============================================================================


class LaxcatError(Exception):
    """Base exception for all laxcat errors."""

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        """
        Initialize LaxcatError.

        Args:
            message: Human-readable error message
            error_code: Machine-readable error code (e.g., 'CAT_001')
            details: Additional error details
        """
        self.message = message
        self.error_code = error_code or "LAXCAT_000"
        self.details = details or {}
        super().__init__(self.format_message())

    def format_message(self) -> str:
        """Format error message with code and details."""
        msg = f"[{self.error_code}] {self.message}"
        if self.details:
            details_str = ", ".join(f"{k}={v}" for k, v in self.details.items())
            msg += f" ({details_str})"
        return msg

    def __str__(self) -> str:
        return self.format_message()

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary for logging/reporting."""
        return {
            "error_code": self.error_code,
            "message": self.message,
            "details": self.details,
            "type": self.__class__.__name__,
        }


# ============================================================================
# CATEGORY LAW ERRORS
# ============================================================================


class CategoryError(LaxcatError):
    """Base exception for malformed categories, functors and transformations."""

    def __init__(
        self,
        message: str,
        category: Optional[str] = None,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        """
        Initialize CategoryError.

        Args:
            message: Human-readable error message
            category: Name of the offending category, if known
            error_code: Error code
            details: Additional error details
        """
        details = details or {}
        if category:
            details["category"] = category

        super().__init__(
            message=message,
            error_code=error_code or "CAT_000",
            details=details,
        )


class NonTotalComposition(CategoryError):
    """Raised when the composition table misses, or wrongly types, a pair."""

    def __init__(self, g: str, f: str, category: Optional[str] = None, reason: str = "missing"):
        super().__init__(
            message=f"Composition of '{g}' after '{f}' is {reason}",
            category=category,
            error_code="CAT_001",
            details={"g": g, "f": f},
        )


class IdentityLawViolation(CategoryError):
    """Raised when an identity fails to be neutral for some morphism."""

    def __init__(self, f: str, identity: str, category: Optional[str] = None):
        super().__init__(
            message=f"Identity '{identity}' is not neutral for '{f}'",
            category=category,
            error_code="CAT_002",
            details={"f": f, "identity": identity},
        )


class AssociativityViolation(CategoryError):
    """Raised when h(gf) differs from (hg)f for a composable triple."""

    def __init__(self, h: str, g: str, f: str, category: Optional[str] = None):
        super().__init__(
            message=f"Composition is not associative on ('{h}', '{g}', '{f}')",
            category=category,
            error_code="CAT_003",
            details={"h": h, "g": g, "f": f},
        )


class FunctorLawViolation(CategoryError):
    """Raised when an object/morphism map fails to be a functor."""

    def __init__(self, functor: str, reason: str, witness: Sequence[str] = ()):
        """
        Initialize FunctorLawViolation.

        Args:
            functor: Name of the candidate functor
            reason: Which law failed (domain, identity, composition, totality)
            witness: The offending morphisms
        """
        super().__init__(
            message=f"'{functor}' is not a functor: {reason}",
            error_code="CAT_004",
            details={"functor": functor, "witness": list(witness)},
        )


class NaturalityViolation(CategoryError):
    """Raised when a component family is not natural."""

    def __init__(self, transformation: str, morphism: str):
        super().__init__(
            message=f"'{transformation}' is not natural at '{morphism}'",
            error_code="CAT_005",
            details={"transformation": transformation, "morphism": morphism},
        )


class NotParallel(CategoryError):
    """Raised when two functors or morphisms are expected to be parallel."""

    def __init__(self, left: str, right: str):
        super().__init__(
            message=f"'{left}' and '{right}' are not parallel",
            error_code="CAT_006",
            details={"left": left, "right": right},
        )


class ObjectNotFound(CategoryError):
    """Raised when an object or morphism name is not part of a category."""

    def __init__(self, name: str, category: Optional[str] = None, kind: str = "object"):
        super().__init__(
            message=f"No {kind} named '{name}'",
            category=category,
            error_code="CAT_007",
            details={"kind": kind, "name": name},
        )


class SizeLimitExceeded(CategoryError):
    """Raised when a construction or enumeration would exceed a size guard."""

    def __init__(self, what: str, size: int, limit: int, setting: str):
        """
        Initialize SizeLimitExceeded.

        Args:
            what: Description of the offending value or enumeration
            size: Size reached
            limit: Configured cap
            setting: Environment variable that raises the cap
        """
        super().__init__(
            message=f"{what} has size {size}, above the configured limit {limit}",
            error_code="CAT_008",
            details={"limit": limit, "setting": setting},
        )


# ============================================================================
# PRESENTATION ERRORS
# ============================================================================


class PresentationError(LaxcatError):
    """Base exception for `.fcat` parsing and elaboration errors.

    Every presentation error carries the source position it refers to.
    """

    def __init__(
        self,
        message: str,
        line: int,
        col: int,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        self.line = line
        self.col = col
        details = dict(details or {})
        details["line"] = line
        details["col"] = col

        super().__init__(
            message=message,
            error_code=error_code or "PRES_000",
            details=details,
        )


class PresentationSyntaxError(PresentationError):
    """Raised on the first token that does not fit the grammar."""

    def __init__(self, line: int, col: int, expected: str, found: str):
        self.expected = expected
        super().__init__(
            message=f"Expected {expected}, found {found}",
            line=line,
            col=col,
            error_code="PRES_001",
            details={"expected": expected},
        )


class DuplicateName(PresentationError):
    """Raised when a name is declared twice in the same scope."""

    def __init__(self, name: str, line: int, col: int):
        super().__init__(
            message=f"Name '{name}' is already declared",
            line=line,
            col=col,
            error_code="PRES_002",
            details={"name": name},
        )


class UnknownReference(PresentationError):
    """Raised when a declaration refers to an undeclared name."""

    def __init__(self, name: str, line: int, col: int):
        super().__init__(
            message=f"Reference to undeclared name '{name}'",
            line=line,
            col=col,
            error_code="PRES_003",
            details={"name": name},
        )


class NotAntisymmetric(PresentationError):
    """Raised when a poset body relates two distinct elements both ways."""

    def __init__(self, a: str, b: str, line: int, col: int):
        super().__init__(
            message=f"'{a}' <= '{b}' and '{b}' <= '{a}' for distinct elements",
            line=line,
            col=col,
            error_code="PRES_004",
            details={"a": a, "b": b},
        )


class CyclicGraph(PresentationError):
    """Raised when a freeacyclic body contains a directed cycle."""

    def __init__(self, cycle: Sequence[str], line: int, col: int):
        super().__init__(
            message="Graph has a directed cycle through " + " -> ".join(cycle),
            line=line,
            col=col,
            error_code="PRES_005",
            details={"cycle": list(cycle)},
        )


class InvalidDocument(PresentationError):
    """Raised when a reference resolves to a document of the wrong kind."""

    def __init__(self, name: str, expected: str, line: int, col: int):
        super().__init__(
            message=f"'{name}' is not a {expected}",
            line=line,
            col=col,
            error_code="PRES_006",
            details={"name": name, "expected": expected},
        )


# ============================================================================
# UNIVERSAL PROPERTY ERRORS
# ============================================================================


class NotACone(LaxcatError):
    """Raised when legs handed to an oracle do not commute with the diagram."""

    def __init__(self, apex: str, morphism: str, dual: bool = False):
        kind = "cocone" if dual else "cone"
        super().__init__(
            message=f"Legs from '{apex}' are not a {kind}: fails at '{morphism}'",
            error_code="UP_001",
            details={"apex": apex, "morphism": morphism},
        )


class MissingLimit(LaxcatError):
    """Raised when a construction needs a limit that the category lacks."""

    def __init__(
        self,
        name: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        """
        Initialize MissingLimit.

        Args:
            name: Name of the missing limit (e.g. 'product(a,b)')
            error_code: Error code
            details: Additional error details
        """
        details = details or {}
        details["limit"] = name
        super().__init__(
            message=f"Required limit '{name}' does not exist",
            error_code=error_code or "UP_002",
            details=details,
        )


class MissingProducts(MissingLimit):
    """Raised when a binary (or finite) product is missing."""

    def __init__(self, name: str):
        super().__init__(name, error_code="UP_003")


class MissingPullbacks(MissingLimit):
    """Raised when a pointwise pullback needed by a construction is missing."""

    def __init__(self, name: str):
        super().__init__(name, error_code="UP_004")


class MissingPullback(MissingLimit):
    """Raised when change of base meets an object without a pullback."""

    def __init__(self, obj: str):
        super().__init__(f"pullback at {obj}", error_code="UP_005", details={"object": obj})


class MissingExponential(MissingLimit):
    """Raised when an internal hom x => y does not exist."""

    def __init__(self, x: str, y: str):
        super().__init__(f"{x}=>{y}", error_code="UP_006", details={"x": x, "y": y})


class MissingEnd(MissingLimit):
    """Raised when the end defining an exponential structure is missing."""

    def __init__(self, name: str):
        super().__init__(f"end at {name}", error_code="UP_007")


class MissingColimit(LaxcatError):
    """Raised when a construction needs a colimit that the category lacks."""

    def __init__(self, name: str):
        super().__init__(
            message=f"Required colimit '{name}' does not exist",
            error_code="UP_008",
            details={"colimit": name},
        )


# ============================================================================
# HYPOTHESIS ERRORS
# ============================================================================


class HypothesisError(LaxcatError):
    """Base exception for an unmet hypothesis on the workspace category.

    The toolkit reports these as a skipped verdict rather than a failure.
    """

    def __init__(
        self,
        message: str,
        hypothesis: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        self.hypothesis = hypothesis
        details = details or {}
        details["hypothesis"] = hypothesis
        super().__init__(
            message=message,
            error_code=error_code or "HYP_000",
            details=details,
        )


class NoInitialObject(HypothesisError):
    """Raised when the workspace category has no initial object."""

    def __init__(self, category: str):
        super().__init__(
            message=f"'{category}' has no initial object",
            hypothesis="initial object",
            error_code="HYP_001",
            details={"category": category},
        )


class NoTerminalObject(HypothesisError):
    """Raised when the workspace category has no terminal object."""

    def __init__(self, category: str):
        super().__init__(
            message=f"'{category}' has no terminal object",
            hypothesis="terminal object",
            error_code="HYP_002",
            details={"category": category},
        )


class StrictInitialMissing(HypothesisError):
    """Raised when the workspace category has no strict initial object."""

    def __init__(self, category: str):
        super().__init__(
            message=f"'{category}' has no strict initial object",
            hypothesis="strict initial object",
            error_code="HYP_003",
            details={"category": category},
        )


class NotFullyFaithful(HypothesisError):
    """Raised when a functor is required to be fully faithful but is not."""

    def __init__(self, functor: str, witness: Sequence[str] = ()):
        super().__init__(
            message=f"'{functor}' is not fully faithful",
            hypothesis="fully faithful",
            error_code="HYP_004",
            details={"functor": functor, "witness": list(witness)},
        )


class NotAPullbackSquare(HypothesisError):
    """Raised when a square handed to a descent check is not a pullback."""

    def __init__(self, apex: str):
        super().__init__(
            message=f"Square with apex '{apex}' is not a pullback",
            hypothesis="pullback square",
            error_code="HYP_005",
            details={"apex": apex},
        )


# ============================================================================
# LAX COMMA ERRORS
# ============================================================================


class LaxCommaError(LaxcatError):
    """Base exception for ill-typed data in the lax comma category."""

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(
            message=message,
            error_code=error_code or "LAX_000",
            details=details,
        )


class NotComposable(LaxCommaError):
    """Raised when the codomain of f is not the domain of g."""

    def __init__(self, g: str, f: str):
        super().__init__(
            message=f"Cannot compose '{g}' after '{f}'",
            error_code="LAX_001",
            details={"g": g, "f": f},
        )


class NoCommonCodomain(LaxCommaError):
    """Raised when a cospan's legs do not share their codomain."""

    def __init__(self, left: str, right: str):
        super().__init__(
            message=f"'{left}' and '{right}' have different codomains",
            error_code="LAX_002",
            details={"left": left, "right": right},
        )


class ShapeMismatch(LaxCommaError):
    """Raised when a 2-cell does not match the extension it is transposed along."""

    def __init__(self, expected: str, found: str):
        super().__init__(
            message=f"Expected a cell out of '{expected}', got one out of '{found}'",
            error_code="LAX_003",
            details={"expected": expected, "found": found},
        )


class BijectiveFailure(LaxCommaError):
    """Raised when an adjunction's hom-set correspondence fails on a window.

    Args:
        adjunction: Name of the adjunction under test
        witness: The pair of objects (or morphisms) exhibiting the failure
        reason: Which property failed (count, injectivity, naturality, triangle)
    """

    def __init__(self, adjunction: str, witness: Sequence[str], reason: str):
        self.witness = tuple(witness)
        super().__init__(
            message=f"{adjunction}: {reason}",
            error_code="LAX_004",
            details={"witness": list(witness)},
        )


# ============================================================================
# CONSTRUCTION BOUND ERRORS
# ============================================================================


class CoequalizerNotFiniteWithinBound(LaxcatError):
    """Raised when the Cat-coequalizer saturation does not stabilize."""

    def __init__(self, bound: int, reached: int):
        super().__init__(
            message=f"Coequalizer saturation did not stabilize within depth {bound}",
            error_code="BOUND_001",
            details={"bound": bound, "reached": reached, "setting": "LAXCAT_BOUND"},
        )


# ============================================================================
# INPUT FILE ERRORS
# ============================================================================


class InputFileError(LaxcatError):
    """Raised when a file does not hold the documents its role requires."""

    def __init__(self, path: str, reason: str):
        super().__init__(
            message=f"{path}: {reason}",
            error_code="IO_001",
            details={"path": path, "reason": reason},
        )


# ============================================================================
# REGISTRY ERRORS
# ============================================================================


class UnknownCommand(LaxcatError):
    """Raised when no construction or check is registered under a name."""

    def __init__(self, kind: str, name: str, available: Sequence[str]):
        super().__init__(
            message=f"No {kind} named '{name}'",
            error_code="REG_001",
            details={"available": ", ".join(available)},
        )


# ============================================================================
# ERROR CODE REFERENCE
# ============================================================================

ERROR_CODES = {
    # General
    "LAXCAT_000": "General laxcat error",
    # Category laws
    "CAT_000": "General category error",
    "CAT_001": "Composition table not total or ill-typed",
    "CAT_002": "Identity law violated",
    "CAT_003": "Associativity violated",
    "CAT_004": "Functor law violated",
    "CAT_005": "Naturality violated",
    "CAT_006": "Not parallel",
    "CAT_007": "Object or morphism not found",
    "CAT_008": "Size limit exceeded",
    # Presentation
    "PRES_000": "General presentation error",
    "PRES_001": "Syntax error",
    "PRES_002": "Duplicate name",
    "PRES_003": "Unknown reference",
    "PRES_004": "Poset not antisymmetric",
    "PRES_005": "Graph has a cycle",
    "PRES_006": "Reference to a document of the wrong kind",
    # Universal properties
    "UP_001": "Not a cone",
    "UP_002": "Missing limit",
    "UP_003": "Missing products",
    "UP_004": "Missing pullbacks",
    "UP_005": "Missing pullback",
    "UP_006": "Missing exponential",
    "UP_007": "Missing end",
    "UP_008": "Missing colimit",
    # Hypotheses
    "HYP_000": "Hypothesis unmet",
    "HYP_001": "No initial object",
    "HYP_002": "No terminal object",
    "HYP_003": "No strict initial object",
    "HYP_004": "Not fully faithful",
    "HYP_005": "Not a pullback square",
    # Lax comma
    "LAX_000": "General lax comma error",
    "LAX_001": "Not composable",
    "LAX_002": "No common codomain",
    "LAX_003": "Shape mismatch",
    "LAX_004": "Adjunction bijection failure",
    # Bounds
    "BOUND_001": "Coequalizer not finite within bound",
    # Input files
    "IO_001": "Input file does not match its role",
    # Registry
    "REG_001": "Unknown construction or check",
}


def get_error_description(error_code: str) -> str:
    """
    Get description for an error code.

    Args:
        error_code: Error code string

    Returns:
        Error description or 'Unknown error code'
    """
    return ERROR_CODES.get(error_code, "Unknown error code")
