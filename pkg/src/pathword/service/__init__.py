from .core import (
    AuthService,
    Challenge,
    EnrollmentRecord,
    GridParams,
    VerifyOutcome,
    VerifyResult,
    DEFAULT_TTL_SECONDS,
)
from .store import ServiceStore, MASTER_KEY_ENV

__all__ = [
    "AuthService",
    "Challenge",
    "DEFAULT_TTL_SECONDS",
    "EnrollmentRecord",
    "GridParams",
    "MASTER_KEY_ENV",
    "ServiceStore",
    "VerifyOutcome",
    "VerifyResult",
]
