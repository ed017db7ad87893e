"""Content-addressed on-disk cache for JSON reports.

Keys hash the package version, the operation name and a canonical
serialization of the inputs.  Writes go to a temporary file in the cache
directory followed by ``os.replace``, so concurrent writers never expose a
partial entry.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile

from . import __version__

ENV_VAR = "TAMLODAY_CACHE_DIR"


def resolve_dir(cli_dir: str | None) -> str | None:
    """The environment variable wins over ``--cache-dir``."""
    return os.environ.get(ENV_VAR) or cli_dir


def key(operation: str, payload: dict) -> str:
    blob = json.dumps({"version": __version__, "op": operation, "input": payload}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


class Cache:
    def __init__(self, directory: str | None):
        self.dir = directory
        if directory:
            os.makedirs(directory, exist_ok=True)

    def _path(self, k: str) -> str:
        return os.path.join(self.dir, f"{k}.json")

    def get(self, k: str):
        if not self.dir:
            return None
        try:
            with open(self._path(k)) as fh:
                return json.load(fh)
        except (OSError, ValueError):
            return None

    def put(self, k: str, value) -> None:
        if not self.dir:
            return
        fd, tmp = tempfile.mkstemp(dir=self.dir, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(value, fh, sort_keys=True)
            os.replace(tmp, self._path(k))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
