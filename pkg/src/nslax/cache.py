"""On-disk JSON cache with a format version and atomic writes."""

from __future__ import annotations

import json
import os
from pathlib import Path

from nslax.exactalg import format_rational
from nslax.fock import FockVector, pi_0
from nslax.jack import JackCharacterTable, compute_jacks, jack_characters
from nslax.lax import apply_lax
from nslax.partitions import Partition, content_value, enumerate_partitions

FORMAT_VERSION = 1
CACHE_ENV = "NSLAX_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "nslax"


def dumps(data) -> str:
    return json.dumps(data, indent=1) + "\n"


def write_json_atomic(path, data) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(f".{path.name}.{os.getpid()}.tmp")
    tmp.write_text(dumps(data))
    tmp.replace(path)


def read_versioned(path):
    """Payload of a cache file, or None if missing, unreadable or from another format version."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, ValueError):
        return None
    if not isinstance(data, dict) or data.get("format_version") != FORMAT_VERSION:
        return None
    return data.get("payload")


def write_versioned(path, payload) -> None:
    write_json_atomic(path, {"format_version": FORMAT_VERSION, "payload": payload})


def _tag(x) -> str:
    return format_rational(x).replace("/", "d")


def jack_path(cache_dir, n: int) -> Path:
    return Path(cache_dir) / f"jack_n{n}.json"


def psi_path(cache_dir, n: int, eps) -> Path:
    return Path(cache_dir) / f"psi_n{n}_e{_tag(eps[0])}_{_tag(eps[1])}.json"


def cached_jack_characters(n: int, cache_dir) -> JackCharacterTable:
    path = jack_path(cache_dir, n)
    payload = read_versioned(path)
    if payload is not None:
        try:
            table = JackCharacterTable.from_json(payload)
            if table.n == n:
                return table
        except (KeyError, TypeError, ValueError):
            pass
    table = jack_characters(n)
    write_versioned(path, table.to_json())
    return table


def _eigensystems_payload(n: int, eps) -> dict:
    from nslax.spectral import build_cyclic, eigenfunctions

    systems = [eigenfunctions(build_cyclic(lam, *eps)).to_json() for lam in enumerate_partitions(n)]
    return {"n": n, "eps": [format_rational(e) for e in eps], "systems": systems}


def _verify_eigensystems(payload, n: int, eps) -> bool:
    """Re-check a loaded table: eigen equation, pi_0 = j, and complete cell coverage."""
    jacks = compute_jacks(n, *eps)
    seen = set()
    for sys in payload["systems"]:
        lam = Partition(sys["lambda"])
        for item in sys["eigenfunctions"]:
            s = tuple(item["cell"])
            p = FockVector.from_json(item["psi"])
            if p.n != n or p.eps != tuple(eps):
                return False
            sigma = content_value(s, *eps)
            if apply_lax(p) != p.scale(sigma) or pi_0(p) != jacks[lam]:
                return False
            seen.add((lam, s))
    from nslax.partitions import iter_addable_pairs

    return seen == set(iter_addable_pairs(n))


def cached_eigensystems(n: int, eps, cache_dir) -> dict:
    """Eigenfunction table for degree n at eps, loaded and re-verified or freshly computed."""
    path = psi_path(cache_dir, n, eps)
    payload = read_versioned(path)
    if payload is not None:
        try:
            if _verify_eigensystems(payload, n, eps):
                return payload
        except (KeyError, TypeError, ValueError):
            pass
    payload = _eigensystems_payload(n, eps)
    write_versioned(path, payload)
    return payload
