"""Content-addressed result cache for the CLI.

Entries are keyed by (operation, parameters, code-version tag) so a version
bump invalidates everything, and stored as the JSON payload the operation
would emit.  A corrupt entry is treated as a miss; the caller recomputes and
overwrites it.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
from pathlib import Path
from typing import Any, Optional

VERSION_TAG = "sumfree-0.1.0"


def default_cache_dir() -> Path:
    env = os.environ.get("SUMFREE_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "sumfree"


def cache_key(operation: str, params: Any, version: str = VERSION_TAG) -> str:
    blob = json.dumps([operation, params, version], sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def cache_lookup(
    cache_dir: Path, operation: str, params: Any, version: str = VERSION_TAG
) -> Optional[Any]:
    path = cache_dir / f"{cache_key(operation, params, version)}.json"
    if not path.exists():
        return None
    try:
        entry = json.loads(path.read_text())
        if entry["operation"] != operation or entry["version"] != version:
            return None
        return entry["payload"]
    except (json.JSONDecodeError, KeyError, OSError) as exc:
        print(f"warning: corrupt cache entry {path.name}: {exc}", file=sys.stderr)
        return None


def cache_store(
    cache_dir: Path,
    operation: str,
    params: Any,
    payload: Any,
    version: str = VERSION_TAG,
) -> None:
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = cache_dir / f"{cache_key(operation, params, version)}.json"
    entry = {
        "operation": operation,
        "params": params,
        "version": version,
        "payload": payload,
    }
    path.write_text(json.dumps(entry, sort_keys=True))
