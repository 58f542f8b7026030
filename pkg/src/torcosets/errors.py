"""Exceptions shared across the toolkit."""

from __future__ import annotations


class ToolError(Exception):
    """Base for all domain errors; carries a stable machine-readable kind."""

    kind = "error"

    def payload(self) -> dict:
        return {"error": {"type": self.kind, "message": str(self)}}


class CapExceeded(ToolError):
    kind = "cap-exceeded"


class UnsupportedDimension(ToolError):
    kind = "unsupported-dimension"


class DescentDepthExceeded(ToolError):
    """The recursion cap was hit; the enumeration is incomplete, not wrong."""

    kind = "descent-depth-exceeded"


class DegenerateDescent(ToolError):
    """Every remaining transform shares a full-degree factor with the input.

    Raised instead of returning a possibly incomplete point list.
    """

    kind = "degenerate-descent"


class DegenerateInput(ToolError):
    kind = "degenerate-input"


class ScaleTooSmall(ToolError):
    """Rounding at this scale collapsed the matrix; retry with a larger one."""

    kind = "scale-too-small"


class ParseError(ToolError):
    kind = "parse-error"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position

    def payload(self) -> dict:
        d = super().payload()
        d["error"]["position"] = self.position
        return d
