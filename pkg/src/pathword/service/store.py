"""File-backed service state with atomic replace-on-write.

Layout under the store root:

    enrollments/<b64url(user)>.<b64url(label)>.json
    challenges/<challenge id>.json

Every write goes to a fresh temp file in the target directory, is fsynced,
then moved into place with ``os.replace``, so a crash never leaves a
half-written document visible.  Temp files (``*.tmp-*``) are ignored on
read and swept on startup.

Enrollment documents hold the user's secret path encrypted with a Fernet
key derived from the service master key (SHA-256 of the configured string).
The key comes from the ``PATHWORD_MASTER_KEY`` environment variable unless
passed explicitly.  The path must be recoverable server-side (a fresh
diagram has to be read along it on every challenge), so a one-way hash is
not an option; at-rest encryption is the fallback posture.
"""

from __future__ import annotations

import base64
import hashlib
import json
import os
import secrets
from pathlib import Path as FsPath

from cryptography.fernet import Fernet, InvalidToken

from ..errors import StoreError

MASTER_KEY_ENV = "PATHWORD_MASTER_KEY"


def _encode_name(part: str) -> str:
    return base64.urlsafe_b64encode(part.encode("utf-8")).decode("ascii").rstrip("=")


class ServiceStore:
    def __init__(self, root: str | FsPath, master_key: str | None = None):
        key = master_key if master_key is not None else os.environ.get(MASTER_KEY_ENV)
        if not key:
            raise StoreError(
                f"no master key: pass one explicitly or set {MASTER_KEY_ENV}"
            )
        digest = hashlib.sha256(key.encode("utf-8")).digest()
        self._fernet = Fernet(base64.urlsafe_b64encode(digest))
        self.root = FsPath(root)
        self._enrollments = self.root / "enrollments"
        self._challenges = self.root / "challenges"
        self._enrollments.mkdir(parents=True, exist_ok=True)
        self._challenges.mkdir(parents=True, exist_ok=True)
        self._sweep_temp_files()

    def _sweep_temp_files(self) -> None:
        for directory in (self._enrollments, self._challenges):
            for leftover in directory.glob("*.tmp-*"):
                leftover.unlink(missing_ok=True)

    # -- low-level document IO -------------------------------------------

    @staticmethod
    def _write_json(target: FsPath, obj: dict) -> None:
        tmp = target.parent / f"{target.name}.tmp-{secrets.token_hex(6)}"
        data = json.dumps(obj, indent=2, sort_keys=True).encode("utf-8")
        with open(tmp, "wb") as fh:
            fh.write(data)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, target)

    @staticmethod
    def _read_json(target: FsPath) -> dict | None:
        try:
            with open(target, "rb") as fh:
                return json.loads(fh.read().decode("utf-8"))
        except FileNotFoundError:
            return None
        except (OSError, ValueError) as exc:
            raise StoreError(f"unreadable document {target}: {exc}") from exc

    # -- secret path encryption ------------------------------------------

    def seal(self, obj: dict) -> str:
        return self._fernet.encrypt(
            json.dumps(obj, sort_keys=True).encode("utf-8")
        ).decode("ascii")

    def unseal(self, token: str) -> dict:
        try:
            return json.loads(self._fernet.decrypt(token.encode("ascii")))
        except (InvalidToken, ValueError) as exc:
            raise StoreError("cannot decrypt stored path; wrong master key?") from exc

    # -- enrollments ------------------------------------------------------

    def _enrollment_file(self, user: str, label: str) -> FsPath:
        return self._enrollments / f"{_encode_name(user)}.{_encode_name(label)}.json"

    def put_enrollment(self, user: str, label: str, doc: dict) -> None:
        self._write_json(self._enrollment_file(user, label), doc)

    def get_enrollment(self, user: str, label: str) -> dict | None:
        return self._read_json(self._enrollment_file(user, label))

    def delete_enrollment(self, user: str, label: str) -> bool:
        try:
            self._enrollment_file(user, label).unlink()
            return True
        except FileNotFoundError:
            return False

    # -- challenges -------------------------------------------------------

    def _challenge_file(self, challenge_id: str) -> FsPath:
        if not challenge_id or not all(c.isalnum() or c in "-_" for c in challenge_id):
            raise StoreError(f"malformed challenge id {challenge_id!r}")
        return self._challenges / f"{challenge_id}.json"

    def put_challenge(self, challenge_id: str, doc: dict) -> None:
        self._write_json(self._challenge_file(challenge_id), doc)

    def get_challenge(self, challenge_id: str) -> dict | None:
        try:
            path = self._challenge_file(challenge_id)
        except StoreError:
            return None
        return self._read_json(path)

    def delete_challenge(self, challenge_id: str) -> None:
        self._challenge_file(challenge_id).unlink(missing_ok=True)

    def challenges_for(self, user: str, label: str) -> list[dict]:
        docs = []
        for item in sorted(self._challenges.glob("*.json")):
            doc = self._read_json(item)
            if doc and doc.get("user") == user and doc.get("label") == label:
                docs.append(doc)
        return docs
