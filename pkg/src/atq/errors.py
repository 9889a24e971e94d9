"""Exception hierarchy. Each class carries a stable ``code`` used by the CLI."""

from __future__ import annotations


class AtqError(Exception):
    code = "atq_error"

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self)}


class InvalidPolygon(AtqError):
    code = "invalid_polygon"


class InvalidParameter(AtqError):
    code = "invalid_parameter"


class NotApplicable(AtqError):
    code = "inapplicable"


class GeometricOverlap(AtqError):
    code = "geometric_overlap"


class NonDelzant(AtqError):
    code = "non_delzant"


class AlreadyTraded(AtqError):
    code = "already_traded"


class NodeExterior(AtqError):
    code = "node_exterior"


class CutCollision(AtqError):
    code = "cut_collision"


class InvalidDiagram(AtqError):
    code = "invalid_diagram"

    def __init__(self, message: str, violations=()):
        super().__init__(message)
        self.violations = list(violations)

    def to_json(self) -> dict:
        out = super().to_json()
        out["violations"] = [v.to_json() for v in self.violations]
        return out


class UntradedVertex(AtqError):
    code = "untraded_vertex"


class PerimeterMismatch(AtqError):
    code = "perimeter_mismatch"


class PrequantumIncompatible(AtqError):
    code = "prequantum_incompatible"


class CoefficientMismatch(AtqError):
    code = "coeff_mismatch"


class CompletionRequired(AtqError):
    """Raised for C^oo(R) (x) C^oo(R) products, where the algebraic tensor
    product is not the right object and a completion might be needed."""

    code = "completion_required"


class EmptyWindow(AtqError):
    code = "empty_window"


class ParseError(AtqError):
    code = "parse_error"


class UnknownFixture(AtqError):
    code = "unknown_fixture"


ALL_ERRORS = [
    cls for cls in list(globals().values())
    if isinstance(cls, type) and issubclass(cls, AtqError)
]
