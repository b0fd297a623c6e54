"""Secret paths over a grid and password derivation.

A path is an ordered sequence of distinct 1-based cell coordinates, tied to
the grid shape it was defined for.  Reading the letters along a path off a
diagram of that shape yields the password.  Paths are arbitrary injective
sequences; steps do not have to be adjacent.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

from .diagram import Diagram
from .errors import PathError, SchemaError
from .rng import source_for

_PATH_DOMAIN = "pathword-path-v1"


class Coordinate(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class Path:
    rows: int
    cols: int
    steps: tuple[Coordinate, ...]

    @property
    def dims(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def length(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class Password:
    """Letters read along a path, and their concatenation."""

    letters: tuple[str, ...]

    @property
    def text(self) -> str:
        return "".join(self.letters)

    @property
    def length(self) -> int:
        return len(self.letters)


def make_path(dims: tuple[int, int], coords: list[tuple[int, int]]) -> Path:
    """Validated path: every step in bounds, no repeats, at least one step."""
    rows, cols = dims
    if rows < 1 or cols < 1:
        raise PathError(f"grid dimensions must be positive, got {rows}x{cols}")
    if not coords:
        raise PathError("a path needs at least one step")
    steps = []
    seen = set()
    for k, (r, c) in enumerate(coords, start=1):
        if not (1 <= r <= rows and 1 <= c <= cols):
            raise PathError(f"step {k}: ({r},{c}) outside {rows}x{cols} grid")
        if (r, c) in seen:
            raise PathError(f"step {k}: ({r},{c}) already visited")
        seen.add((r, c))
        steps.append(Coordinate(r, c))
    return Path(rows=rows, cols=cols, steps=tuple(steps))


def derive(path: Path, d: Diagram) -> Password:
    """Password read off the diagram along the path."""
    if path.dims != (d.rows, d.cols):
        raise PathError(
            f"path is for a {path.rows}x{path.cols} grid, diagram is {d.rows}x{d.cols}"
        )
    return Password(tuple(d.letter_at(r, c) for r, c in path.steps))


def random_path(
    dims: tuple[int, int], n: int, seed: str | int | None = None
) -> Path:
    """Uniformly random injective sequence of n distinct cells."""
    rows, cols = dims
    if rows < 1 or cols < 1:
        raise PathError(f"grid dimensions must be positive, got {rows}x{cols}")
    if not 1 <= n <= rows * cols:
        raise PathError(f"path length {n} out of range 1..{rows * cols} for {rows}x{cols}")
    rng = source_for(_PATH_DOMAIN, seed, rows, cols, n)
    all_cells = [Coordinate(r, c) for r in range(1, rows + 1) for c in range(1, cols + 1)]
    return Path(rows=rows, cols=cols, steps=tuple(rng.sample(all_cells, n)))


def render_path_overlay(d: Diagram, path: Path) -> str:
    """Diagram table with each path step annotated by its visit ordinal."""
    from .diagram import render_diagram

    if path.dims != (d.rows, d.cols):
        raise PathError(
            f"path is for a {path.rows}x{path.cols} grid, diagram is {d.rows}x{d.cols}"
        )
    return render_diagram(d, {step: k for k, step in enumerate(path.steps, start=1)})


_PATH_RE = re.compile(r"^\s*(\d+)\s*x\s*(\d+)\s*:\s*(.*)$", re.DOTALL)
_STEP_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def format_path(path: Path) -> str:
    """Canonical text form: ``"RxC: (r1,c1) (r2,c2) ..."``."""
    steps = " ".join(f"({r},{c})" for r, c in path.steps)
    return f"{path.rows}x{path.cols}: {steps}"


def parse_path(text: str) -> Path:
    """Parse the text form emitted by ``format_path``."""
    m = _PATH_RE.match(text)
    if not m:
        raise SchemaError('path text must look like "RxC: (r1,c1) (r2,c2) ..."')
    rows, cols, rest = int(m.group(1)), int(m.group(2)), m.group(3)
    steps = [(int(r), int(c)) for r, c in _STEP_RE.findall(rest)]
    stripped = _STEP_RE.sub("", rest).strip()
    if stripped:
        raise SchemaError(f"unrecognized text in path step list: {stripped!r}")
    return make_path((rows, cols), steps)


def path_to_dict(path: Path) -> dict:
    """Structured-object encoding used by the service wire protocol."""
    return {"rows": path.rows, "cols": path.cols, "steps": [[r, c] for r, c in path.steps]}


def path_from_dict(obj: dict) -> Path:
    if not isinstance(obj, dict):
        raise SchemaError("path must be a JSON object")
    for key in ("rows", "cols", "steps"):
        if key not in obj:
            raise SchemaError(f"path object missing {key!r}")
    steps = obj["steps"]
    if not isinstance(steps, list) or not all(
        isinstance(s, (list, tuple)) and len(s) == 2 for s in steps
    ):
        raise SchemaError("'steps' must be a list of [row, col] pairs")
    return make_path((obj["rows"], obj["cols"]), [(int(r), int(c)) for r, c in steps])


def canonicalize_password(text: str) -> str:
    """Lowercase and strip all whitespace; the comparison form for verification."""
    return "".join(text.split()).lower()
