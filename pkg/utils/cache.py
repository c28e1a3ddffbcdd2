"""Persisted invariant values at the campaign point stream.

One ``.npy`` file per (seed, prime, n, expression); the file holds the values
at the first k stream points and is only ever replaced by a longer prefix.
"""
import hashlib
import logging
import os
from pathlib import Path

import numpy as np

LOGGER = logging.getLogger(__name__)

CACHE_ENV = "BINVAR_CACHE_DIR"


def default_cache_dir():
    return os.environ.get(CACHE_ENV) or str(Path.home() / ".cache" / "binvar")


class EvaluationCache:

    def __init__(self, directory, seed, prime, n):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self.origin = (tuple(seed) if isinstance(seed, (tuple, list)) else (seed,), prime, n)

    def _path(self, key):
        digest = hashlib.sha1(f"{self.origin}|{key}".encode()).hexdigest()
        return self.directory / f"{digest}.npy"

    def get(self, key, count):
        path = self._path(key)
        if not path.exists():
            return None
        values = np.load(path)
        if len(values) < count:
            return None
        return values[:count]

    def put(self, key, values):
        path = self._path(key)
        if path.exists() and len(np.load(path)) >= len(values):
            return
        tmp = path.with_suffix(".tmp.npy")
        np.save(tmp, np.asarray(values, dtype=np.int64))
        os.replace(tmp, path)
        LOGGER.debug("cached %d values for %s", len(values), key[:60])


def open_cache(config, n):
    """The cache for a run, or None when caching is off."""
    if not config.use_cache:
        return None
    return EvaluationCache(config.cache_dir or default_cache_dir(), config.seed, config.prime, n)


class MemoryCache:
    """Same interface as ``EvaluationCache``, kept for one process only."""

    def __init__(self, origin):
        self.origin = origin
        self._values = {}

    def get(self, key, count):
        values = self._values.get(key)
        if values is None or len(values) < count:
            return None
        return values[:count]

    def put(self, key, values):
        if key not in self._values or len(self._values[key]) < len(values):
            self._values[key] = np.asarray(values, dtype=np.int64)
