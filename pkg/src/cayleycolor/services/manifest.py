"""Run manifests: what a command produced and how each artifact was judged."""

import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

from .. import __version__
from ..utils.files import write_json


@dataclass
class ArtifactRecord:
    path: str
    kind: str
    verdict: str


@dataclass
class RunManifest:
    """Collected during a command; ``elapsed_seconds`` is the only non-deterministic field."""

    command: str
    parameters: dict[str, Any]
    artifacts: list[ArtifactRecord] = field(default_factory=list)
    verdicts: dict[str, Any] = field(default_factory=dict)
    tool_version: str = __version__
    elapsed_seconds: float = 0.0
    _started: float = field(default_factory=time.monotonic, repr=False)

    def add_artifact(self, path: Path, kind: str, verdict: str) -> None:
        self.artifacts.append(ArtifactRecord(str(path), kind, verdict))

    def finish(self) -> "RunManifest":
        self.elapsed_seconds = round(time.monotonic() - self._started, 3)
        return self

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data.pop("_started")
        return data

    def write(self, path: Path) -> Path:
        return write_json(path, self.to_dict())
