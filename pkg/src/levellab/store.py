"""Append-only JSONL store for classification certificates.

One record per line, schema-versioned, diff-able.  Verification replays
construction recipes from their stored seed and demands byte-identical
generator text and identical ranks; criterion and non-level records are
re-evaluated from scratch.
"""

import json
import os
from datetime import datetime, timezone
from random import Random

from levellab.classify import (
    Classification,
    Status,
    build_recipe,
    condition_still_violated,
    criterion_still_holds,
)
from levellab.errors import VerificationError
from levellab.macaulay import HVector
from levellab.modules import h_vector, module_from_text, module_to_text

SCHEMA_VERSION = 1
STORE_ENV = "LEVELLAB_STORE"


def default_store_path() -> str | None:
    return os.environ.get(STORE_ENV)


def record_from_classification(result: Classification) -> dict:
    """Flatten a classification into a storable record."""
    h = result.h
    record = {
        "schema": SCHEMA_VERSION,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "h": list(h.entries),
        "r": h.codimension,
        "e": h.socle_degree,
        "t": h.type,
        "status": result.status.value,
    }
    if result.status is Status.NONLEVEL:
        record["condition"] = result.condition
        record["detail"] = result.detail
    cert = result.certificate
    if cert is not None and cert.kind == "construction":
        record.update(
            recipe=cert.recipe,
            seed=cert.seed,
            prime=cert.prime,
            ranks=list(cert.ranks),
            generators=cert.generators,
            characteristic=cert.characteristic,
        )
    elif cert is not None and cert.kind == "criterion":
        record["criterion"] = cert.criterion
        record["detail"] = cert.detail
    return record


def _require_path(path: str | None) -> str:
    path = path or default_store_path()
    if not path:
        raise ValueError(
            f"no store path given and {STORE_ENV} is not set"
        )
    return path


def store_append(record: dict, path: str | None = None) -> None:
    """Append one record; creates the file on first use."""
    path = _require_path(path)
    line = json.dumps(record, sort_keys=True, separators=(",", ":"))
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(line + "\n")


def store_load(path: str | None = None, **filters) -> list[dict]:
    """Load records, optionally filtered by field equality.

    The ``h`` filter accepts anything HVector.parse-compatible or a
    sequence of entries.
    """
    path = _require_path(path)
    if "h" in filters:
        wanted = filters["h"]
        if isinstance(wanted, str):
            wanted = HVector.parse(wanted)
        elif not isinstance(wanted, HVector):
            wanted = HVector(wanted)
        filters["h"] = list(wanted.entries)
    records = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            record = json.loads(line)
            if all(record.get(key) == value for key, value in filters.items()):
                records.append(record)
    return records


def store_verify(record: dict) -> None:
    """Re-establish a record's claim; raise VerificationError on any drift.

    Construction records are replayed from (recipe, seed, prime) and must
    reproduce the stored generator text byte for byte and the stored ranks;
    records without a recipe are recomputed from their generator payload.
    Criterion and non-level records re-run their decision rule.
    """
    if record.get("schema") != SCHEMA_VERSION:
        raise VerificationError(f"unsupported schema {record.get('schema')!r}")
    try:
        h = HVector(record["h"])
    except (KeyError, ValueError) as exc:
        raise VerificationError(f"bad h-vector field: {exc}") from exc
    for key, value in (("r", h.codimension), ("e", h.socle_degree), ("t", h.type)):
        if record.get(key) != value:
            raise VerificationError(
                f"field {key}={record.get(key)!r} disagrees with h ({value})"
            )
    status = record.get("status")
    if status == Status.NONLEVEL.value:
        name = record.get("condition")
        if not name or not condition_still_violated(name, h):
            raise VerificationError(
                f"condition {name!r} no longer rejects {h}"
            )
        return
    if status == Status.UNKNOWN.value:
        return
    if status != Status.LEVEL.value:
        raise VerificationError(f"unknown status {status!r}")

    if record.get("criterion"):
        if not criterion_still_holds(record["criterion"], h):
            raise VerificationError(
                f"criterion {record['criterion']!r} no longer accepts {h}"
            )
        return

    generators = record.get("generators")
    prime = record.get("prime")
    ranks = record.get("ranks")
    if not generators or not prime or ranks is None:
        raise VerificationError("level record lacks generators, prime or ranks")
    if list(ranks) != list(h.entries):
        raise VerificationError(f"stored ranks {ranks} disagree with h {h}")

    recipe = record.get("recipe")
    if recipe is not None:
        module = build_recipe(recipe, Random(record["seed"]), prime)
        replayed = module_to_text(module)
        if replayed != generators:
            raise VerificationError(
                "replayed generators differ from the stored payload"
            )
    else:
        module = module_from_text(generators, prime)
    profile = h_vector(module)
    if profile.dims != tuple(ranks):
        raise VerificationError(
            f"recomputed ranks {profile.dims} differ from stored {tuple(ranks)}"
        )


def verify_store_file(path: str | None = None) -> int:
    """Verify every record in a store; returns the count, raises on the
    first failure with its line number."""
    path = _require_path(path)
    count = 0
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                store_verify(json.loads(line))
            except VerificationError as exc:
                raise VerificationError(f"line {lineno}: {exc}") from exc
            except json.JSONDecodeError as exc:
                raise VerificationError(f"line {lineno}: not valid JSON: {exc}") from exc
            count += 1
    return count
