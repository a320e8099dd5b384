"""File cache for expensive expansions.

One file per key; the filename is a stable hash of the canonical key JSON,
writes go through a temp file plus atomic rename, and corrupt entries are
treated as absent.  The cache is purely an accelerator: every suite must
produce identical results with it disabled.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile

log = logging.getLogger(__name__)


class Cache:
    def __init__(self, directory: str | None):
        self.directory = directory
        if directory is not None:
            os.makedirs(directory, exist_ok=True)

    @staticmethod
    def _canonical_key(key) -> str:
        return json.dumps(key, sort_keys=True, separators=(",", ":"))

    def _path(self, key) -> str:
        digest = hashlib.sha256(self._canonical_key(key).encode()).hexdigest()[:32]
        return os.path.join(self.directory, f"{digest}.json")

    def load(self, key):
        if self.directory is None:
            return None
        path = self._path(key)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                payload = json.load(fh)
        except FileNotFoundError:
            return None
        except (OSError, ValueError) as exc:
            log.warning("cache entry %s unreadable (%s); recomputing", path, exc)
            return None
        if payload.get("key") != json.loads(self._canonical_key(key)):
            log.warning("cache entry %s key mismatch; recomputing", path)
            return None
        return payload.get("value")

    def store(self, key, value) -> None:
        if self.directory is None:
            return
        path = self._path(key)
        payload = {"key": json.loads(self._canonical_key(key)), "value": value}
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, sort_keys=True)
            os.replace(tmp, path)
        except OSError:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise


_active: Cache = Cache(None)


def set_active_cache(cache: Cache) -> None:
    global _active
    _active = cache


def get_active_cache() -> Cache:
    return _active


# -- serialization of expansions -------------------------------------------

def expansion_to_value(exp) -> list:
    return [[str(k), c.to_text()] for k, c in
            sorted(exp.coeffs.items(), key=lambda kv: kv[0].parts)]


def value_to_expansion(value, basis: str, n: int):
    from .partitions import parse_partition
    from .scalars import parse_scalar
    from .symfunc import SymExpansion

    coeffs = {parse_partition(k): parse_scalar(txt) for k, txt in value}
    return SymExpansion(basis, n, coeffs)
