/** Wire-protocol shapes shared with the service. */

export interface AlphabetData {
  name?: string;
  letters?: string[];
}

export interface DiagramData {
  alphabet: AlphabetData;
  rows: number;
  cols: number;
  /** Rows of letter tokens, 1-based addressing via cells[r-1][c-1]. */
  cells: string[][];
  id?: string;
  created?: string;
}

export interface GridParamsData {
  alphabet: AlphabetData;
  rows: number;
  cols: number;
}

/** 1-based grid coordinate, matching the service's path encoding. */
export interface Coord {
  row: number;
  col: number;
}

export interface PathData {
  rows: number;
  cols: number;
  steps: [number, number][];
}

export type VerifyOutcome =
  | "accepted"
  | "rejected"
  | "expired"
  | "unknown-challenge"
  | "replayed";

export interface ChallengeData {
  challenge_id: string;
  diagram: DiagramData;
  expires_at: string;
}

export type Mode = "enroll" | "login" | "practice";
