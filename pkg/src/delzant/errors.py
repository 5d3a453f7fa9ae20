"""Exception hierarchy shared by all modules.

Every library-level failure derives from DelzantError and carries an
``exit_code`` used by the command line frontend.  The codes are disjoint:

    2  usage / bad flag combination (argparse also uses 2)
    3  input file cannot be parsed
    4  polytope structure rejected (not Delzant, not simple, unbounded, ...)
    5  enumeration budget exceeded
    6  formula or consistency violation (these signal bugs, never bad luck)
"""

from __future__ import annotations


class DelzantError(Exception):
    exit_code = 1


class PolytopeParseError(DelzantError):
    """Input file rejected.  ``line`` is 1-based, 0 means whole-file."""

    exit_code = 3

    def __init__(self, message: str, line: int = 0):
        self.line = line
        if line:
            message = f"line {line}: {message}"
        super().__init__(message)


class DimMismatchError(PolytopeParseError):
    pass


class NonPrimitiveNormalError(PolytopeParseError):
    pass


class NonIntegerOffsetError(PolytopeParseError):
    pass


class PolytopeStructureError(DelzantError):
    exit_code = 4


class NonSimpleError(PolytopeStructureError):
    """A vertex lies on more than ``dim`` facets."""

    def __init__(self, point, facets_1based):
        self.point = tuple(point)
        self.facets = tuple(facets_1based)
        coords = ", ".join(str(c) for c in self.point)
        super().__init__(
            f"vertex ({coords}) lies on {len(self.facets)} facets "
            f"{list(self.facets)}; polytope is not simple"
        )


class UnboundedError(PolytopeStructureError):
    def __init__(self, ray):
        self.ray = tuple(ray)
        super().__init__(f"polytope is unbounded along {self.ray}")


class EmptyPolytopeError(PolytopeStructureError):
    pass


class RedundantFacetError(PolytopeStructureError):
    def __init__(self, facets_1based):
        self.facets = tuple(facets_1based)
        super().__init__(
            f"facets {list(self.facets)} carry no vertex (redundant inequality)"
        )


class NotDelzantError(PolytopeStructureError):
    """Raised by operations that require a Delzant polytope."""

    def __init__(self, report):
        self.report = report
        super().__init__("polytope is not Delzant: " + report.summary())


class BudgetExceededError(DelzantError):
    exit_code = 5

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumeration needs {required} point classifications, budget is {budget}"
        )


class DegenerateTriangulationError(DelzantError):
    exit_code = 6


class ChamberCrossedError(DelzantError):
    """A sample offset vector has a different vertex-facet incidence than the anchor."""


class NotPolynomialError(DelzantError):
    exit_code = 6


class TruncationError(DelzantError):
    exit_code = 6


class FormulaViolationError(DelzantError):
    exit_code = 6


class DisagreementError(DelzantError):
    """The three boundary Hilbert polynomial routes disagree.  Always a bug."""

    exit_code = 6

    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)
