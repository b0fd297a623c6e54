"""Randomness sources for grid and path generation.

Two sources share one small interface:

* ``SystemSource`` draws from the operating system CSPRNG (``secrets``) and
  is used whenever no seed is given.
* ``SeededSource`` is a portable deterministic generator: SHA-256 in counter
  mode over a domain-separated key.  The byte stream for a given
  (domain, seed material) pair is stable across platforms and Python
  versions, so seeded outputs can be frozen into golden tests.

Stream definition (SeededSource):

    key      = SHA256(domain || 0x00 || part_1 || 0x00 || part_2 || ...)
    block_i  = SHA256(key || uint64_be(i))          for i = 0, 1, 2, ...
    stream   = block_0 || block_1 || ...

``randbelow(n)`` consumes ceil(bitlen(n-1) / 8) bytes per attempt, keeps the
top ``bitlen(n-1)`` bits, and rejects values >= n.  Shuffling and sampling
are Fisher-Yates on top of ``randbelow``.
"""

from __future__ import annotations

import hashlib
import secrets

_BLOCK = 32  # SHA-256 digest size


class RandomSource:
    """Uniform integers plus the derived shuffle/sample operations."""

    def randbelow(self, n: int) -> int:
        raise NotImplementedError

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, items: list, k: int) -> list:
        """Uniformly random ordered sample of k distinct elements."""
        if not 0 <= k <= len(items):
            raise ValueError(f"sample size {k} out of range for {len(items)} items")
        pool = list(items)
        out = []
        for i in range(k):
            j = i + self.randbelow(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
            out.append(pool[i])
        return out


class SystemSource(RandomSource):
    """OS cryptographic entropy; not reproducible."""

    def randbelow(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randbelow() needs n >= 1")
        return secrets.randbelow(n)


class SeededSource(RandomSource):
    """Deterministic SHA-256 counter-mode stream, keyed by domain + seed parts."""

    def __init__(self, domain: str, *parts: str | int | bytes):
        h = hashlib.sha256(domain.encode("utf-8"))
        for part in parts:
            h.update(b"\x00")
            if isinstance(part, bytes):
                h.update(part)
            else:
                h.update(str(part).encode("utf-8"))
        self._key = h.digest()
        self._counter = 0
        self._buffer = b""

    def _take(self, k: int) -> bytes:
        while len(self._buffer) < k:
            block = hashlib.sha256(
                self._key + self._counter.to_bytes(8, "big")
            ).digest()
            self._counter += 1
            self._buffer += block
        out, self._buffer = self._buffer[:k], self._buffer[k:]
        return out

    def randbelow(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randbelow() needs n >= 1")
        if n == 1:
            return 0
        nbits = (n - 1).bit_length()
        nbytes = (nbits + 7) // 8
        shift = 8 * nbytes - nbits
        while True:
            value = int.from_bytes(self._take(nbytes), "big") >> shift
            if value < n:
                return value


def source_for(domain: str, seed: str | int | None, *context: str | int) -> RandomSource:
    """System entropy when seed is None, else the seeded stream for (domain, context, seed)."""
    if seed is None:
        return SystemSource()
    return SeededSource(domain, *context, seed)
