"""Alphabets: the ordered letter sets grids are filled from.

A letter is a non-empty printable token; all letters of one alphabet have
the same token length so a derived password splits back into letters
unambiguously.  Two built-ins cover the common configurations: ``hex``
(16 single-character letters) and ``digit-pairs`` (100 two-character
letters, "00" through "99").
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import AlphabetError

BUILTIN_NAMES = ("hex", "digit-pairs")


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of distinct, equal-length letter tokens."""

    letters: tuple[str, ...]
    name: str | None = None
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.letters) < 2:
            raise AlphabetError("alphabet needs at least 2 letters")
        lengths = {len(t) for t in self.letters}
        if 0 in lengths:
            raise AlphabetError("letters must be non-empty")
        if len(lengths) != 1:
            raise AlphabetError(f"letters must share one token length, got lengths {sorted(lengths)}")
        if len(set(self.letters)) != len(self.letters):
            dupes = sorted({t for t in self.letters if self.letters.count(t) > 1})
            raise AlphabetError(f"duplicate letters: {', '.join(dupes)}")
        for t in self.letters:
            if not t.isprintable() or any(ch.isspace() for ch in t):
                raise AlphabetError(f"letter {t!r} must be printable and contain no whitespace")
        object.__setattr__(self, "_index", {t: i for i, t in enumerate(self.letters)})

    @property
    def size(self) -> int:
        return len(self.letters)

    @property
    def token_length(self) -> int:
        return len(self.letters[0])

    def index_of(self, letter: str) -> int:
        try:
            return self._index[letter]
        except KeyError:
            raise AlphabetError(f"{letter!r} is not a letter of this alphabet") from None

    def __contains__(self, letter: str) -> bool:
        return letter in self._index


def _hex_alphabet() -> Alphabet:
    return Alphabet(tuple("0123456789abcdef"), name="hex")


def _digit_pairs_alphabet() -> Alphabet:
    return Alphabet(tuple(f"{i:02d}" for i in range(100)), name="digit-pairs")


_BUILTINS = {
    "hex": _hex_alphabet,
    "digit-pairs": _digit_pairs_alphabet,
}


def make_alphabet(spec: str | list[str] | tuple[str, ...]) -> Alphabet:
    """Build an alphabet from a built-in name or an explicit letter list.

    Built-in letters are lowercase; that is the canonical form passwords
    derived from them use.
    """
    if isinstance(spec, str):
        try:
            return _BUILTINS[spec]()
        except KeyError:
            raise AlphabetError(
                f"unknown alphabet {spec!r}; built-ins: {', '.join(BUILTIN_NAMES)}"
            ) from None
    return Alphabet(tuple(spec))
