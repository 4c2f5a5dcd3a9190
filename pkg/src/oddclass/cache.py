"""On-disk JSON cache for expensive tables (partitions, o_n values, reports)."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Optional

__all__ = ["CacheEntry", "ResultCache", "stable_dumps", "CACHE_ENV", "KINDS"]

CACHE_ENV = "ODDCLASS_CACHE_DIR"
KINDS = ("partition", "o_value", "report")


def stable_dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


@dataclass(frozen=True)
class CacheEntry:
    n: int
    kind: str
    payload: Any
    checksum: str

    @classmethod
    def make(cls, n: int, kind: str, payload: Any) -> "CacheEntry":
        if kind not in KINDS:
            raise ValueError(f"unknown cache kind {kind!r}")
        return cls(n, kind, payload, _digest(stable_dumps(payload)))

    def valid(self) -> bool:
        return self.checksum == _digest(stable_dumps(self.payload))


class ResultCache:
    def __init__(self, root: Optional[Path] = None):
        if root is None:
            root = Path(os.environ.get(CACHE_ENV) or Path.home() / ".cache" / "oddclass")
        self.root = Path(root)

    def path(self, kind: str, n: int, params: dict) -> Path:
        tag = _digest(stable_dumps(params))[:16]
        return self.root / f"{kind}-n{n}-{tag}.json"

    def read(self, kind: str, n: int, params: dict) -> Optional[CacheEntry]:
        path = self.path(kind, n, params)
        try:
            raw = json.loads(path.read_text())
            entry = CacheEntry(raw["n"], raw["kind"], raw["payload"], raw["checksum"])
        except (OSError, ValueError, KeyError):
            return None
        if entry.kind != kind or entry.n != n or not entry.valid():
            return None
        return entry

    def write(self, kind: str, n: int, params: dict, payload: Any) -> CacheEntry:
        entry = CacheEntry.make(n, kind, payload)
        self.root.mkdir(parents=True, exist_ok=True)
        path = self.path(kind, n, params)
        blob = stable_dumps({"n": entry.n, "kind": entry.kind,
                             "payload": entry.payload, "checksum": entry.checksum})
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(blob)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return entry

    def get_or_compute(self, kind: str, n: int, params: dict, compute: Callable[[], Any]) -> Any:
        entry = self.read(kind, n, params)
        if entry is not None:
            return entry.payload
        payload = compute()
        # round-trip so a cold run returns exactly what a later hit would
        return json.loads(stable_dumps(self.write(kind, n, params, payload).payload))
