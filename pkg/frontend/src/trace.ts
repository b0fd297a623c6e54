import type { Coord, DiagramData, Mode } from "./types.js";

export type ClickResult =
  | { kind: "added"; ordinal: number }
  | { kind: "already-visited"; ordinal: number }
  | { kind: "out-of-bounds" };

/**
 * Click-trace state over one displayed diagram.
 *
 * The traced sequence is always injective: clicking a visited cell is
 * rejected (the caller gets the cell's existing ordinal for visual
 * feedback) and the sequence can never exceed the cell count.  Undo
 * removes the most recent step.
 */
export class TraceState {
  readonly diagram: DiagramData;
  readonly mode: Mode;
  private steps: Coord[] = [];
  private visited = new Set<string>();

  constructor(diagram: DiagramData, mode: Mode) {
    this.diagram = diagram;
    this.mode = mode;
  }

  private key(coord: Coord): string {
    return `${coord.row},${coord.col}`;
  }

  click(coord: Coord): ClickResult {
    const { row, col } = coord;
    if (row < 1 || row > this.diagram.rows || col < 1 || col > this.diagram.cols) {
      return { kind: "out-of-bounds" };
    }
    const key = this.key(coord);
    if (this.visited.has(key)) {
      const ordinal = this.steps.findIndex((s) => this.key(s) === key) + 1;
      return { kind: "already-visited", ordinal };
    }
    this.visited.add(key);
    this.steps.push({ row, col });
    return { kind: "added", ordinal: this.steps.length };
  }

  undo(): Coord | undefined {
    const last = this.steps.pop();
    if (last) this.visited.delete(this.key(last));
    return last;
  }

  reset(): void {
    this.steps = [];
    this.visited.clear();
  }

  get sequence(): Coord[] {
    return [...this.steps];
  }

  get length(): number {
    return this.steps.length;
  }

  /** Visit ordinal for a cell (badge text), or undefined if untraced. */
  ordinalAt(coord: Coord): number | undefined {
    const index = this.steps.findIndex((s) => this.key(s) === this.key(coord));
    return index === -1 ? undefined : index + 1;
  }
}
