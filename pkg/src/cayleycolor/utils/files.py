"""Artifact file helpers.

Artifacts are written through a temporary sibling and renamed into place, so a crashed run
never leaves a half-written matrix next to a manifest that claims it verified.
"""

import contextlib
import json
import os
import tempfile
from collections.abc import Generator
from pathlib import Path
from typing import IO, Any


@contextlib.contextmanager
def atomic_open(path: str | Path, *, file_mode: int = 0o644) -> Generator[IO[str]]:
    """Open a text file for writing that appears at ``path`` only on success.

    Args:
        path: Final file path.
        file_mode: Unix permission bits of the final file.
    """
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            yield f
        os.chmod(tmp_name, file_mode)
        os.replace(tmp_name, target)
    except BaseException:
        with contextlib.suppress(OSError):
            os.unlink(tmp_name)
        raise


def write_text(path: str | Path, text: str) -> Path:
    """Atomically write ``text`` to ``path``."""
    with atomic_open(path) as f:
        f.write(text)
    return Path(path)


def dump_json(data: Any) -> str:
    """Deterministic JSON text (sorted keys, trailing newline)."""
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def write_json(path: str | Path, data: Any) -> Path:
    """Atomically write ``data`` as deterministic JSON."""
    return write_text(path, dump_json(data))
