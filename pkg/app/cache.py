# app/cache.py
import fcntl
import hashlib
import json
import logging
import os
from pathlib import Path

from tenacity import retry, retry_if_exception_type, stop_after_attempt, wait_fixed

from config.settings import CACHE_LOCK_ATTEMPTS, CACHE_LOCK_WAIT_SECONDS, CACHE_SCHEMA_VERSION

logger = logging.getLogger(__name__)

LOCK_NAME = ".lock"


def cache_key(request):
    """sha256 of the canonical JSON of a request ({verb, group, sigma, params})."""
    canonical = json.dumps(request, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def load_cached(cache_dir, request):
    """Return the cached output for ``request`` or None.

    Entries written under another schema version are treated as missing.
    """
    path = Path(cache_dir) / f"{cache_key(request)}.json"
    if not path.exists():
        return None
    try:
        with open(path, "r") as f:
            entry = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        logger.warning("❌ Ignoring unreadable cache entry %s: %s", path, e)
        return None
    if entry.get("version") != CACHE_SCHEMA_VERSION or entry.get("input") != request:
        logger.info("Cache entry %s is stale, recomputing", path.name)
        return None
    logger.info("Loaded %s from cache", path.name)
    return entry["output"]


@retry(
    stop=stop_after_attempt(CACHE_LOCK_ATTEMPTS),
    wait=wait_fixed(CACHE_LOCK_WAIT_SECONDS),
    retry=retry_if_exception_type(BlockingIOError),
    reraise=True,
)
def _acquire_lock(handle):
    fcntl.flock(handle, fcntl.LOCK_EX | fcntl.LOCK_NB)


def store_cached(cache_dir, request, output):
    """Write {input, output, version} to <cache_dir>/<key>.json under an advisory lock."""
    cache_dir = Path(cache_dir)
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = cache_dir / f"{cache_key(request)}.json"
    entry = {"input": request, "output": output, "version": CACHE_SCHEMA_VERSION}
    with open(cache_dir / LOCK_NAME, "a") as lock:
        _acquire_lock(lock)
        try:
            tmp = path.with_suffix(".tmp")
            with open(tmp, "w") as f:
                json.dump(entry, f, sort_keys=True, separators=(",", ":"))
            os.replace(tmp, path)
        finally:
            fcntl.flock(lock, fcntl.LOCK_UN)
    logger.info("Stored %s in cache", path.name)
    return path
