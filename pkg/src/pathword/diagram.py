"""Grids of letters ("diagrams") plus their generation, validation, and codecs.

A diagram is a rows x cols grid of letters from one alphabet.  Generated
diagrams always contain every alphabet letter; hand-written or historical
grids may not, so coverage is a *checked* property (see ``validate_diagram``)
rather than a construction invariant, and the strict decoders accept a
switch to admit partially covered grids.

Generation procedure (seeded runs reproduce it exactly):

1. Lay out one copy of every alphabet letter, then fill the remaining
   ``rows*cols - size`` slots with letters drawn uniformly at random.
2. Fisher-Yates shuffle the whole slot list.
3. Reshape row-major.

The one-copy seeding guarantees coverage; the full shuffle makes cell
positions exchangeable, so per-cell marginals stay near uniform.

Identity: ``diagram.id`` is the SHA-256 hex digest of the canonical content
string (see ``content_digest``).  Equal grids over equal alphabets get equal
ids regardless of when they were generated, which is what makes duplicate
challenge diagrams detectable.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from datetime import datetime, timezone

from .alphabet import Alphabet, BUILTIN_NAMES, make_alphabet
from .errors import CoverageError, DiagramError, SchemaError
from .rng import RandomSource, source_for

# Timestamp used for seeded generation, so that output is a pure function of
# (alphabet, rows, cols, seed).
EPOCH = datetime(1970, 1, 1, tzinfo=timezone.utc)

_GENERATOR_DOMAIN = "pathword-grid-v1"


@dataclass(frozen=True)
class Diagram:
    """Immutable letter grid.  ``cells[r][c]`` is an index into the alphabet."""

    alphabet: Alphabet
    rows: int
    cols: int
    cells: tuple[tuple[int, ...], ...]
    id: str = ""
    created_at: datetime = EPOCH

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DiagramError(f"grid dimensions must be positive, got {self.rows}x{self.cols}")
        if self.rows * self.cols < self.alphabet.size:
            raise DiagramError(
                f"{self.rows}x{self.cols} grid has {self.rows * self.cols} cells; "
                f"needs at least {self.alphabet.size} to hold every letter"
            )
        if len(self.cells) != self.rows:
            raise DiagramError(f"expected {self.rows} rows, got {len(self.cells)}")
        for r, row in enumerate(self.cells):
            if len(row) != self.cols:
                raise DiagramError(f"row {r + 1} has {len(row)} cells, expected {self.cols}")
            for idx in row:
                if not 0 <= idx < self.alphabet.size:
                    raise DiagramError(f"cell index {idx} out of range for alphabet of size {self.alphabet.size}")
        if not self.id:
            object.__setattr__(self, "id", content_digest(self))

    def letter_at(self, row: int, col: int) -> str:
        """Letter token at 1-based (row, col)."""
        if not (1 <= row <= self.rows and 1 <= col <= self.cols):
            raise DiagramError(f"({row},{col}) outside {self.rows}x{self.cols} grid")
        return self.alphabet.letters[self.cells[row - 1][col - 1]]

    def token_rows(self) -> list[list[str]]:
        return [[self.alphabet.letters[i] for i in row] for row in self.cells]


@dataclass(frozen=True)
class CoverageReport:
    covered: bool
    missing_letters: tuple[str, ...]
    letter_frequencies: dict[str, int] = field(compare=False)

    @property
    def present_count(self) -> int:
        """Number of distinct letters actually occurring in the grid."""
        return sum(1 for n in self.letter_frequencies.values() if n > 0)


def content_digest(d: Diagram) -> str:
    """SHA-256 hex digest of the canonical content string.

    Canonical string (UTF-8):

        alphabet=<letters joined by ","> \\n
        rows=<rows> \\n
        cols=<cols> \\n
        cells=<row-major letter tokens joined by ",">
    """
    parts = [
        "alphabet=" + ",".join(d.alphabet.letters),
        f"rows={d.rows}",
        f"cols={d.cols}",
        "cells=" + ",".join(d.alphabet.letters[i] for row in d.cells for i in row),
    ]
    return hashlib.sha256("\n".join(parts).encode("utf-8")).hexdigest()


def diagram_from_rows(
    alphabet: Alphabet,
    token_rows: list[list[str]],
    created_at: datetime = EPOCH,
) -> Diagram:
    """Build a diagram from letter tokens, computing its id."""
    if not token_rows or not token_rows[0]:
        raise DiagramError("grid must have at least one row and one column")
    cells = tuple(
        tuple(alphabet.index_of(tok) for tok in row) for row in token_rows
    )
    return Diagram(
        alphabet=alphabet,
        rows=len(token_rows),
        cols=len(token_rows[0]),
        cells=cells,
        created_at=created_at,
    )


def generate_diagram(
    alphabet: Alphabet,
    rows: int,
    cols: int,
    seed: str | int | None = None,
) -> Diagram:
    """Random diagram containing every alphabet letter.

    Without a seed, entropy comes from the OS CSPRNG and ``created_at`` is
    the current UTC time.  With a seed the output is a pure deterministic
    function of (alphabet, rows, cols, seed) and ``created_at`` is the Unix
    epoch.
    """
    if rows < 1 or cols < 1:
        raise DiagramError(f"grid dimensions must be positive, got {rows}x{cols}")
    total = rows * cols
    if total < alphabet.size:
        raise DiagramError(
            f"{rows}x{cols} grid has {total} cells; needs at least "
            f"{alphabet.size} to hold every letter"
        )
    rng = source_for(
        _GENERATOR_DOMAIN, seed, ",".join(alphabet.letters), rows, cols
    )
    slots = list(range(alphabet.size))
    slots.extend(rng.randbelow(alphabet.size) for _ in range(total - alphabet.size))
    rng.shuffle(slots)
    cells = tuple(
        tuple(slots[r * cols : (r + 1) * cols]) for r in range(rows)
    )
    created = EPOCH if seed is not None else datetime.now(timezone.utc)
    return Diagram(alphabet=alphabet, rows=rows, cols=cols, cells=cells, created_at=created)


def validate_diagram(d: Diagram) -> CoverageReport:
    """Exact letter frequencies plus whether every letter occurs."""
    freq = {letter: 0 for letter in d.alphabet.letters}
    for row in d.cells:
        for idx in row:
            freq[d.alphabet.letters[idx]] += 1
    missing = tuple(letter for letter in d.alphabet.letters if freq[letter] == 0)
    return CoverageReport(covered=not missing, missing_letters=missing, letter_frequencies=freq)


def render_diagram(
    d: Diagram,
    annotations: dict[tuple[int, int], int] | None = None,
) -> str:
    """Fixed-width text table; annotated cells show ``letter^ordinal``.

    Annotation keys are 1-based (row, col) coordinates.
    """
    annotations = annotations or {}
    for (r, c) in annotations:
        if not (1 <= r <= d.rows and 1 <= c <= d.cols):
            raise DiagramError(f"annotation ({r},{c}) outside {d.rows}x{d.cols} grid")
    texts = [
        [
            d.letter_at(r, c)
            + (f"^{annotations[(r, c)]}" if (r, c) in annotations else "")
            for c in range(1, d.cols + 1)
        ]
        for r in range(1, d.rows + 1)
    ]
    width = max(len(t) for row in texts for t in row)
    rule = "+" + "+".join(["-" * (width + 2)] * d.cols) + "+"
    lines = [rule]
    for row in texts:
        lines.append("| " + " | ".join(t.ljust(width) for t in row) + " |")
        lines.append(rule)
    return "\n".join(lines)


def encode_diagram(d: Diagram) -> str:
    """Line-oriented text document.

    Header lines (``key: value``), then a blank line, then ``rows`` lines of
    ``cols`` space-separated letter tokens:

        alphabet: <built-in name>      (or: letters: <tokens joined by " ">)
        rows: <int>
        cols: <int>
        id: <64 lowercase hex chars>
        created: <ISO 8601 UTC timestamp>
    """
    if d.alphabet.name in BUILTIN_NAMES:
        head = f"alphabet: {d.alphabet.name}"
    else:
        head = "letters: " + " ".join(d.alphabet.letters)
    lines = [
        head,
        f"rows: {d.rows}",
        f"cols: {d.cols}",
        f"id: {d.id}",
        f"created: {d.created_at.isoformat()}",
        "",
    ]
    lines.extend(" ".join(row) for row in d.token_rows())
    return "\n".join(lines) + "\n"


def decode_diagram(text: str, strict_coverage: bool = True) -> Diagram:
    """Parse a text document produced by ``encode_diagram`` (or hand-written).

    The ``id`` and ``created`` header lines are optional in hand-written
    documents; a present ``id`` must match the recomputed content digest.
    With ``strict_coverage`` (the default) a grid missing any alphabet
    letter is rejected with :class:`CoverageError`.
    """
    lines = text.splitlines()
    header: dict[str, str] = {}
    body_start = None
    for i, line in enumerate(lines):
        if not line.strip():
            body_start = i + 1
            break
        if ":" not in line:
            raise SchemaError(f"header line {i + 1} is not 'key: value': {line!r}")
        key, _, value = line.partition(":")
        key = key.strip().lower()
        if key in header:
            raise SchemaError(f"duplicate header key {key!r}")
        header[key] = value.strip()
    if body_start is None:
        raise SchemaError("missing blank line between header and grid body")

    if "alphabet" in header and "letters" in header:
        raise SchemaError("give either 'alphabet' or 'letters', not both")
    if "alphabet" in header:
        alphabet = make_alphabet(header["alphabet"])
    elif "letters" in header:
        alphabet = make_alphabet(header["letters"].split())
    else:
        raise SchemaError("header needs an 'alphabet' or 'letters' line")

    try:
        rows = int(header["rows"])
        cols = int(header["cols"])
    except KeyError as exc:
        raise SchemaError(f"header missing {exc.args[0]!r} line") from None
    except ValueError:
        raise SchemaError("'rows' and 'cols' must be integers") from None

    body = [line.split() for line in lines[body_start:] if line.strip()]
    if len(body) != rows:
        raise SchemaError(f"expected {rows} grid rows, found {len(body)}")
    for r, row in enumerate(body):
        if len(row) != cols:
            raise SchemaError(f"grid row {r + 1} has {len(row)} tokens, expected {cols}")
        for tok in row:
            if tok not in alphabet:
                raise SchemaError(f"grid row {r + 1}: {tok!r} is not a letter of the alphabet")

    created = EPOCH
    if "created" in header:
        try:
            created = datetime.fromisoformat(header["created"])
        except ValueError:
            raise SchemaError(f"invalid 'created' timestamp {header['created']!r}") from None

    d = diagram_from_rows(alphabet, body, created_at=created)
    if "id" in header and header["id"] != d.id:
        raise SchemaError("document id does not match the grid content digest")

    if strict_coverage:
        report = validate_diagram(d)
        if not report.covered:
            raise CoverageError(list(report.missing_letters))
    return d


def alphabet_to_dict(alphabet: Alphabet) -> dict:
    if alphabet.name in BUILTIN_NAMES:
        return {"name": alphabet.name}
    return {"letters": list(alphabet.letters)}


def alphabet_from_dict(obj: dict) -> Alphabet:
    if not isinstance(obj, dict):
        raise SchemaError("alphabet must be an object with 'name' or 'letters'")
    if "name" in obj:
        return make_alphabet(obj["name"])
    if "letters" in obj:
        return make_alphabet(list(obj["letters"]))
    raise SchemaError("alphabet object needs 'name' or 'letters'")


def diagram_to_dict(d: Diagram) -> dict:
    """Structured-object encoding used by the service wire protocol."""
    return {
        "alphabet": alphabet_to_dict(d.alphabet),
        "rows": d.rows,
        "cols": d.cols,
        "cells": d.token_rows(),
        "id": d.id,
        "created": d.created_at.isoformat(),
    }


def diagram_from_dict(obj: dict, strict_coverage: bool = True) -> Diagram:
    if not isinstance(obj, dict):
        raise SchemaError("diagram must be a JSON object")
    for key in ("alphabet", "rows", "cols", "cells"):
        if key not in obj:
            raise SchemaError(f"diagram object missing {key!r}")
    alphabet = alphabet_from_dict(obj["alphabet"])
    cells = obj["cells"]
    if not isinstance(cells, list) or not all(isinstance(row, list) for row in cells):
        raise SchemaError("'cells' must be a list of rows")
    if len(cells) != obj["rows"] or any(len(row) != obj["cols"] for row in cells):
        raise SchemaError("'cells' shape does not match rows x cols")
    for row in cells:
        for tok in row:
            if tok not in alphabet:
                raise SchemaError(f"{tok!r} is not a letter of the alphabet")
    created = EPOCH
    if "created" in obj:
        try:
            created = datetime.fromisoformat(obj["created"])
        except (TypeError, ValueError):
            raise SchemaError(f"invalid 'created' timestamp {obj['created']!r}") from None
    d = diagram_from_rows(alphabet, cells, created_at=created)
    if obj.get("id") and obj["id"] != d.id:
        raise SchemaError("object id does not match the grid content digest")
    if strict_coverage:
        report = validate_diagram(d)
        if not report.covered:
            raise CoverageError(list(report.missing_letters))
    return d
