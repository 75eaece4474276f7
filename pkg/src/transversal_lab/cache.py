"""On-disk certificate cache: one file per (n, m, order).

Each file holds a JSON header line {n, m, order, verified_at} followed by
the digraph6 line of the counterexample.  Certificates are re-verified
before every store and after every load, so a corrupted or tampered cache
can never propagate an unsound bound.
"""

from __future__ import annotations

import json
import os
import time
from pathlib import Path
from typing import Optional

from .codec import decode_digraph6, encode_digraph6
from .errors import CacheCorrupt, MalformedInput
from .ramsey import DrCertificate

ENV_CACHE_DIR = "TRANSVERSAL_LAB_CACHE"
DEFAULT_CACHE_DIR = ".transversal-lab-cache"


def resolve_cache_dir(explicit: Optional[str] = None) -> Path:
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    return Path(DEFAULT_CACHE_DIR)


class CertificateCache:
    """Directory of verified dr counterexamples, keyed by (n, m, order)."""

    def __init__(self, directory: Optional[str | Path] = None):
        self.directory = resolve_cache_dir(str(directory) if directory else None)

    def _path(self, n: int, m: int, order: int) -> Path:
        return self.directory / f"dr-{n}-{m}-{order}.cert"

    def store(self, cert: DrCertificate) -> Path:
        """Persist a certificate, re-verifying it first."""
        if not (cert.verified_no_transitive and cert.verified_no_independent):
            raise CacheCorrupt("refusing to store an unverified certificate")
        if not cert.reverify():
            raise CacheCorrupt("certificate failed re-verification before store")
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self._path(cert.n, cert.m, cert.order)
        header = {
            "n": cert.n,
            "m": cert.m,
            "order": cert.order,
            "verified_at": int(time.time()),
        }
        path.write_text(
            json.dumps(header, sort_keys=True) + "\n" + encode_digraph6(cert.digraph) + "\n"
        )
        return path

    def load(self, n: int, m: int, order: int) -> Optional[DrCertificate]:
        """Load and re-verify a certificate; None on cache miss.

        Raises CacheCorrupt when the file exists but fails parsing or
        re-verification.
        """
        path = self._path(n, m, order)
        if not path.exists():
            return None
        try:
            header_line, graph_line = path.read_text().splitlines()[:2]
            header = json.loads(header_line)
            digraph = decode_digraph6(graph_line)
        except (ValueError, MalformedInput) as exc:
            raise CacheCorrupt(f"unparseable certificate file {path}: {exc}") from exc
        if (header.get("n"), header.get("m"), header.get("order")) != (n, m, order):
            raise CacheCorrupt(f"header mismatch in {path}")
        if digraph.order != order:
            raise CacheCorrupt(f"digraph order mismatch in {path}")
        cert = DrCertificate(n, m, digraph, True, True)
        if not cert.reverify():
            raise CacheCorrupt(f"certificate in {path} failed re-verification")
        return cert

    def best_order(self, n: int, m: int) -> Optional[int]:
        """Largest cached counterexample order for (n, m), by filename scan."""
        if not self.directory.is_dir():
            return None
        best = None
        prefix = f"dr-{n}-{m}-"
        for path in self.directory.iterdir():
            name = path.name
            if name.startswith(prefix) and name.endswith(".cert"):
                try:
                    order = int(name[len(prefix) : -len(".cert")])
                except ValueError:
                    continue
                best = order if best is None else max(best, order)
        return best
