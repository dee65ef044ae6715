"""Service layer between the CLI and the library."""

from .coloring_service import ColoringService, GraphRequest
from .manifest import RunManifest

__all__ = [
    "ColoringService",
    "GraphRequest",
    "RunManifest",
]
