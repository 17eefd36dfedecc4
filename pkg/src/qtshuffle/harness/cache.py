"""A directory of checksummed JSON documents."""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path


class CacheCorruptionError(RuntimeError):
    pass


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def checksum(obj) -> str:
    return hashlib.sha256(_canonical(obj).encode()).hexdigest()


class JsonCache:
    """Each key maps to ``<dir>/<key>.json`` holding the payload and its sha256.

    Writes go through a temporary file and an atomic rename, so readers see
    either the old document or the new one.
    """

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def _path(self, key: str) -> Path:
        if not key or "/" in key or key.startswith("."):
            raise ValueError(f"bad cache key {key!r}")
        return self.directory / f"{key}.json"

    def get_json(self, key: str):
        path = self._path(key)
        if not path.exists():
            return None
        try:
            doc = json.loads(path.read_text())
            payload, stored = doc["payload"], doc["sha256"]
        except (ValueError, KeyError, TypeError) as exc:
            raise CacheCorruptionError(f"{path}: unreadable cache entry ({exc})") from exc
        if checksum(payload) != stored:
            raise CacheCorruptionError(f"{path}: checksum mismatch")
        return payload

    def put_json(self, key: str, payload) -> None:
        path = self._path(key)
        doc = {"sha256": checksum(payload), "payload": payload}
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(_canonical(doc))
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def keys(self) -> list[str]:
        return sorted(p.stem for p in self.directory.glob("*.json"))

    def clear(self) -> None:
        for p in self.directory.glob("*.json"):
            p.unlink()
