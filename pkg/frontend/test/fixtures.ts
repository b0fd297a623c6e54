import type { Coord, DiagramData } from "../src/types.js";

// Well-known 6x6 hex demo pair: the golden client-side derivation vector.
export const WORKED_DIAGRAM: DiagramData = {
  alphabet: { name: "hex" },
  rows: 6,
  cols: 6,
  cells: [
    ["a", "c", "e", "2", "3", "4"],
    ["a", "1", "6", "f", "7", "2"],
    ["d", "2", "a", "1", "9", "4"],
    ["f", "c", "f", "a", "9", "6"],
    ["e", "1", "b", "5", "b", "c"],
    ["8", "7", "3", "4", "d", "9"],
  ],
};

export const WORKED_STEPS: Coord[] = [
  { row: 1, col: 1 }, { row: 1, col: 2 }, { row: 1, col: 6 }, { row: 1, col: 5 },
  { row: 2, col: 1 }, { row: 2, col: 2 }, { row: 2, col: 5 }, { row: 2, col: 6 },
  { row: 5, col: 1 }, { row: 5, col: 2 }, { row: 5, col: 6 }, { row: 5, col: 5 },
  { row: 6, col: 1 }, { row: 6, col: 2 }, { row: 6, col: 6 }, { row: 6, col: 5 },
];

export const WORKED_PASSWORD = "ac43a172e1cb879d";
