"""Optional persistent cache for memoized coefficient tables.

One JSON file per (kind, key), with a format-version header and a sha256
checksum of the payload; corrupted or stale entries are detected, logged
and recomputed.  Writes are atomic (temp file + rename), so concurrent
readers on the same directory are safe.  All IO failures degrade to
in-memory operation.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile

log = logging.getLogger("symcalc.cache")

FORMAT_VERSION = 1

_active: "PersistentCache | None" = None


def set_cache_dir(path) -> "PersistentCache | None":
    """Install a process-wide cache directory (None disables)."""
    global _active
    _active = PersistentCache(path) if path else None
    return _active


def active_cache() -> "PersistentCache | None":
    return _active


def _checksum(payload_text: str) -> str:
    return hashlib.sha256(payload_text.encode("utf-8")).hexdigest()


class PersistentCache:
    def __init__(self, directory):
        self.directory = str(directory)
        try:
            os.makedirs(self.directory, exist_ok=True)
            self.usable = True
        except OSError as exc:
            log.warning("cache directory unusable (%s); using memory only", exc)
            self.usable = False

    def _path(self, kind: str, key: str) -> str:
        safe = key.replace(",", "_").replace(" ", "")
        return os.path.join(self.directory, f"{kind}-{safe}.json")

    def get(self, kind: str, key: str):
        """Return the stored payload, or None if absent or corrupted."""
        if not self.usable:
            return None
        path = self._path(kind, key)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
        except FileNotFoundError:
            return None
        except (OSError, json.JSONDecodeError) as exc:
            log.warning("cache entry %s unreadable (%s); recomputing", path, exc)
            return None
        if doc.get("version") != FORMAT_VERSION:
            log.warning("cache entry %s has wrong version; recomputing", path)
            return None
        payload_text = json.dumps(doc.get("payload"), sort_keys=True)
        if doc.get("sha256") != _checksum(payload_text):
            log.warning("cache entry %s failed checksum; recomputing", path)
            return None
        return doc["payload"]

    def put(self, kind: str, key: str, payload) -> None:
        if not self.usable:
            return
        path = self._path(kind, key)
        payload_text = json.dumps(payload, sort_keys=True)
        doc = {"version": FORMAT_VERSION, "sha256": _checksum(payload_text),
               "payload": payload}
        try:
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, sort_keys=True)
            os.replace(tmp, path)
        except OSError as exc:
            log.warning("cache write to %s failed (%s); continuing", path, exc)


def cached_table(kind: str, key: str, compute, encode, decode):
    """Fetch (kind,key) from the active cache or compute-and-store."""
    cache = _active
    if cache is not None:
        payload = cache.get(kind, key)
        if payload is not None:
            return decode(payload)
    value = compute()
    if cache is not None:
        cache.put(kind, key, encode(value))
    return value
