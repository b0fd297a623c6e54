"""Challenge-response authentication around rotating diagrams.

Users enroll one secret path per (user, label) pair, where the label names
a security tier ("low", "high", ...), so one user can hold several paths
of different lengths.  Each login issues a freshly generated diagram as
the challenge; the effective password is whatever the enrolled path reads
off that diagram, so accepted passwords change on every access.

Challenge lifecycle: issued with a TTL, single use.  A verification attempt
consumes the challenge whatever the outcome, so one issued diagram admits
exactly one guess.  Revoking an enrollment also deletes its pending
challenges.

Concurrency: all operations serialize on one process-wide lock (single
writer).  Verify-and-consume happens under the lock, so two racing verifies
of one challenge yield at most one ``accepted``.  The store must not be
shared by multiple service processes.
"""

from __future__ import annotations

import hmac
import secrets
import threading
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from enum import Enum
from typing import Callable

from ..alphabet import Alphabet
from ..diagram import (
    Diagram,
    alphabet_from_dict,
    alphabet_to_dict,
    diagram_from_dict,
    diagram_to_dict,
    generate_diagram,
)
from ..errors import DuplicateEnrollmentError, PathError, UnknownEnrollmentError
from ..path import Path, canonicalize_password, derive, make_path, path_from_dict, path_to_dict
from .store import ServiceStore

DEFAULT_TTL_SECONDS = 120.0

# Attempts to regenerate when a fresh diagram collides with a pending one.
# A collision needs two identical grids; for the default 10x10 layout the
# chance is far below 2^-64, so the loop is a formality.
_MAX_COLLISION_RETRIES = 8


@dataclass(frozen=True)
class GridParams:
    alphabet: Alphabet
    rows: int
    cols: int

    def to_dict(self) -> dict:
        return {
            "alphabet": alphabet_to_dict(self.alphabet),
            "rows": self.rows,
            "cols": self.cols,
        }

    @staticmethod
    def from_dict(obj: dict) -> "GridParams":
        return GridParams(
            alphabet=alphabet_from_dict(obj["alphabet"]),
            rows=int(obj["rows"]),
            cols=int(obj["cols"]),
        )


@dataclass(frozen=True)
class EnrollmentRecord:
    user: str
    label: str
    path: Path
    grid_params: GridParams
    created_at: datetime


@dataclass(frozen=True)
class Challenge:
    id: str
    user: str
    label: str
    diagram: Diagram
    issued_at: datetime
    expires_at: datetime
    consumed: bool


class VerifyOutcome(str, Enum):
    ACCEPTED = "accepted"
    REJECTED = "rejected"
    EXPIRED = "expired"
    UNKNOWN_CHALLENGE = "unknown-challenge"
    REPLAYED = "replayed"


@dataclass(frozen=True)
class VerifyResult:
    outcome: VerifyOutcome


class AuthService:
    def __init__(
        self,
        store: ServiceStore,
        ttl_seconds: float = DEFAULT_TTL_SECONDS,
        clock: Callable[[], float] | None = None,
    ):
        if ttl_seconds <= 0:
            raise ValueError(f"ttl_seconds must be positive, got {ttl_seconds}")
        self._store = store
        self._ttl = ttl_seconds
        self._clock = clock or time.time
        self._lock = threading.RLock()

    def _now(self) -> datetime:
        return datetime.fromtimestamp(self._clock(), tz=timezone.utc)

    # -- enrollment --------------------------------------------------------

    def enroll(
        self, user: str, label: str, path: Path, grid_params: GridParams
    ) -> EnrollmentRecord:
        """Store a secret path for (user, label); the pair must be new."""
        if path.dims != (grid_params.rows, grid_params.cols):
            raise PathError(
                f"path is for a {path.rows}x{path.cols} grid but the enrollment "
                f"grid is {grid_params.rows}x{grid_params.cols}"
            )
        # Re-run full validation so a hand-built Path value cannot smuggle
        # duplicates or out-of-bounds steps into the store.
        make_path(path.dims, [tuple(s) for s in path.steps])
        with self._lock:
            if self._store.get_enrollment(user, label) is not None:
                raise DuplicateEnrollmentError(f"({user!r}, {label!r}) already enrolled")
            record = EnrollmentRecord(
                user=user,
                label=label,
                path=path,
                grid_params=grid_params,
                created_at=self._now(),
            )
            self._store.put_enrollment(
                user,
                label,
                {
                    "user": user,
                    "label": label,
                    "grid_params": grid_params.to_dict(),
                    "path_sealed": self._store.seal(path_to_dict(path)),
                    "created_at": record.created_at.isoformat(),
                },
            )
            return record

    def _load_enrollment(self, user: str, label: str) -> EnrollmentRecord:
        doc = self._store.get_enrollment(user, label)
        if doc is None:
            raise UnknownEnrollmentError(f"no enrollment for ({user!r}, {label!r})")
        return EnrollmentRecord(
            user=doc["user"],
            label=doc["label"],
            path=path_from_dict(self._store.unseal(doc["path_sealed"])),
            grid_params=GridParams.from_dict(doc["grid_params"]),
            created_at=datetime.fromisoformat(doc["created_at"]),
        )

    # -- challenges ---------------------------------------------------------

    def issue_challenge(self, user: str, label: str) -> Challenge:
        """Generate a fresh diagram for the enrollment and persist it with a TTL."""
        with self._lock:
            record = self._load_enrollment(user, label)
            pending_ids = {
                doc["diagram"]["id"] for doc in self._store.challenges_for(user, label)
            }
            params = record.grid_params
            for _ in range(_MAX_COLLISION_RETRIES):
                diagram = generate_diagram(params.alphabet, params.rows, params.cols)
                if diagram.id not in pending_ids:
                    break
            issued = self._now()
            expires = datetime.fromtimestamp(
                issued.timestamp() + self._ttl, tz=timezone.utc
            )
            challenge = Challenge(
                id=secrets.token_urlsafe(24),
                user=user,
                label=label,
                diagram=diagram,
                issued_at=issued,
                expires_at=expires,
                consumed=False,
            )
            self._store.put_challenge(challenge.id, self._challenge_doc(challenge))
            return challenge

    @staticmethod
    def _challenge_doc(challenge: Challenge) -> dict:
        return {
            "id": challenge.id,
            "user": challenge.user,
            "label": challenge.label,
            "diagram": diagram_to_dict(challenge.diagram),
            "issued_at": challenge.issued_at.isoformat(),
            "expires_at": challenge.expires_at.isoformat(),
            "consumed": challenge.consumed,
        }

    def verify(self, challenge_id: str, submitted_password: str) -> VerifyResult:
        """Single-use check of a submitted password against one challenge.

        Accepts only when the challenge exists, is unexpired and unconsumed,
        and the submission matches the enrolled path read off the challenge
        diagram.  The challenge is consumed by any terminal outcome,
        including a wrong password, so one diagram admits one guess.
        """
        with self._lock:
            doc = self._store.get_challenge(challenge_id)
            if doc is None:
                return VerifyResult(VerifyOutcome.UNKNOWN_CHALLENGE)
            if doc["consumed"]:
                return VerifyResult(VerifyOutcome.REPLAYED)

            doc["consumed"] = True
            self._store.put_challenge(challenge_id, doc)

            if self._now() > datetime.fromisoformat(doc["expires_at"]):
                return VerifyResult(VerifyOutcome.EXPIRED)

            try:
                record = self._load_enrollment(doc["user"], doc["label"])
            except UnknownEnrollmentError:
                return VerifyResult(VerifyOutcome.UNKNOWN_CHALLENGE)

            diagram = diagram_from_dict(doc["diagram"], strict_coverage=False)
            expected = derive(record.path, diagram).text
            submitted = canonicalize_password(submitted_password)
            if hmac.compare_digest(expected.encode(), submitted.encode()):
                return VerifyResult(VerifyOutcome.ACCEPTED)
            return VerifyResult(VerifyOutcome.REJECTED)

    def revoke(self, user: str, label: str) -> None:
        """Remove the enrollment and every pending challenge it could answer."""
        with self._lock:
            if self._store.get_enrollment(user, label) is None:
                raise UnknownEnrollmentError(f"no enrollment for ({user!r}, {label!r})")
            for doc in self._store.challenges_for(user, label):
                self._store.delete_challenge(doc["id"])
            self._store.delete_enrollment(user, label)
