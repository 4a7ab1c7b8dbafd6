"""A persistent, append-only catalog of certified artifacts.

Layout: one directory holding ``records.jsonl`` (one canonical JSON record
per line) and a ``payloads/`` tree with one subdirectory per record that
stores the recipe, the matrices, and the certificates.  Record ids are the
SHA-256 of the canonical recipe JSON, so identical recipes always produce
identical ids.  Appends take an exclusive lock on ``catalog.lock``; readers
need no lock.
"""

from __future__ import annotations

import datetime
import fcntl
import hashlib
import json
import os
from dataclasses import dataclass
from pathlib import Path

from .errors import CatalogError, EtfForgeError
from .frames import certify_etf, verify_naimark_pair
from .recipes import Artifact, replay
from .serialize import (
    canonical_json,
    certificate_to_obj,
    dump,
    frame_from_files,
    load,
    matrix_to_obj,
    pair_to_obj,
)

ENV_VAR = "ETF_FORGE_CATALOG"
DEFAULT_DIR = "etf-catalog"


def catalog_path(override=None) -> Path:
    if override:
        return Path(override)
    return Path(os.environ.get(ENV_VAR, DEFAULT_DIR))


def recipe_id(rec: dict) -> str:
    return hashlib.sha256(canonical_json(rec).encode()).hexdigest()


def _params_summary(artifact: Artifact) -> dict:
    summary = {"d": artifact.primary.d, "n": artifact.primary.n}
    if artifact.link is not None:
        p = artifact.link.params
        summary["qsd"] = list(p.as_tuple()) + [artifact.link.x, artifact.link.y]
    return summary


@dataclass
class CatalogRecord:
    id: str
    kind: str
    params: dict
    certificates: dict
    created_at: str
    payload: str

    def to_obj(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "params": self.params,
            "certificates": self.certificates,
            "created_at": self.created_at,
            "payload": self.payload,
        }

    @staticmethod
    def from_obj(obj) -> "CatalogRecord":
        return CatalogRecord(
            obj["id"], obj["kind"], obj["params"], obj["certificates"],
            obj["created_at"], obj["payload"],
        )


class Catalog:
    def __init__(self, root: Path | str | None = None):
        self.root = catalog_path(root)
        self.records_file = self.root / "records.jsonl"
        self.payloads = self.root / "payloads"
        self.lock_file = self.root / "catalog.lock"

    def records(self) -> list[CatalogRecord]:
        if not self.records_file.exists():
            return []
        out = []
        with open(self.records_file) as fh:
            for line in fh:
                line = line.strip()
                if line:
                    out.append(CatalogRecord.from_obj(json.loads(line)))
        return out

    def find(self, record_id: str) -> CatalogRecord:
        for record in self.records():
            if record.id == record_id or record.id.startswith(record_id):
                return record
        raise CatalogError(f"no record with id {record_id}")

    def add(self, rec: dict) -> CatalogRecord:
        """Replay the recipe, re-certify, persist the payload, append the record."""
        artifact = replay(rec)
        rid = recipe_id(rec)
        certs = {"primary": certificate_to_obj(certify_etf(artifact.primary))}
        if artifact.complement is not None:
            certs["complement"] = certificate_to_obj(certify_etf(artifact.complement))
        record = CatalogRecord(
            id=rid,
            kind=artifact.kind,
            params=_params_summary(artifact),
            certificates=certs,
            created_at=datetime.datetime.now(datetime.timezone.utc).isoformat(),
            payload=f"payloads/{rid}",
        )

        self.root.mkdir(parents=True, exist_ok=True)
        payload_dir = self.root / record.payload
        payload_dir.mkdir(parents=True, exist_ok=True)
        dump(rec, payload_dir / "recipe.json")
        dump(matrix_to_obj(artifact.primary.matrix), payload_dir / "primary.json")
        if artifact.complement is not None:
            dump(matrix_to_obj(artifact.complement.matrix), payload_dir / "complement.json")
            dump(
                pair_to_obj(artifact.primary, artifact.complement, artifact.alpha),
                payload_dir / "pair.json",
            )
        for role, cert in certs.items():
            dump(cert, payload_dir / f"certificate_{role}.json")

        with open(self.lock_file, "w") as lock:
            fcntl.flock(lock, fcntl.LOCK_EX)
            try:
                existing = {r.id for r in self.records()}
                if rid not in existing:
                    with open(self.records_file, "a") as fh:
                        fh.write(canonical_json(record.to_obj()).rstrip("\n") + "\n")
            finally:
                fcntl.flock(lock, fcntl.LOCK_UN)
        return record

    def audit(self) -> list[str]:
        """Re-verify every payload; returns the ids that fail."""
        failures = []
        for record in self.records():
            try:
                self._audit_one(record)
            except EtfForgeError:
                failures.append(record.id)
        return failures

    def _audit_one(self, record: CatalogRecord) -> None:
        payload_dir = self.root / record.payload
        rec = load(payload_dir / "recipe.json")
        if recipe_id(rec) != record.id:
            raise CatalogError(f"recipe hash mismatch for {record.id}")
        pair_obj = None
        pair_path = payload_dir / "pair.json"
        if pair_path.exists():
            pair_obj = load(pair_path)
        primary = frame_from_files(load(payload_dir / "primary.json"), pair_obj, "primary")
        cert = certificate_to_obj(certify_etf(primary))
        if cert != record.certificates["primary"]:
            raise CatalogError(f"primary certificate drifted for {record.id}")
        if "complement" in record.certificates:
            complement = frame_from_files(
                load(payload_dir / "complement.json"), pair_obj, "complement"
            )
            cert_c = certificate_to_obj(certify_etf(complement))
            if cert_c != record.certificates["complement"]:
                raise CatalogError(f"complement certificate drifted for {record.id}")
            verify_naimark_pair(primary, complement)
