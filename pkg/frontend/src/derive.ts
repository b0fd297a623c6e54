import type { Coord, DiagramData } from "./types.js";

/** Letter token at a 1-based coordinate. */
export function letterAt(diagram: DiagramData, coord: Coord): string {
  const { row, col } = coord;
  if (row < 1 || row > diagram.rows || col < 1 || col > diagram.cols) {
    throw new Error(`(${row},${col}) outside ${diagram.rows}x${diagram.cols} grid`);
  }
  const token = diagram.cells[row - 1]?.[col - 1];
  if (token === undefined) {
    throw new Error(`malformed diagram: no cell at (${row},${col})`);
  }
  return token;
}

/**
 * The password a traced path reads off the displayed diagram: the plain
 * concatenation of the letters along the trace.  This is the only value
 * login ever sends to the service; the trace itself stays on the client.
 */
export function derivePassword(diagram: DiagramData, steps: Coord[]): string {
  return steps.map((step) => letterAt(diagram, step)).join("");
}
