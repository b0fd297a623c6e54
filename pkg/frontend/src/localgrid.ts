import { alphabetLetters } from "./alphabet.js";
import type { AlphabetData, DiagramData } from "./types.js";

/**
 * Local seeded diagram generation for practice mode, so practicing a path
 * works offline.  Same construction as the service (one copy of every
 * letter, uniform fill, full shuffle) but with a small local PRNG; practice
 * grids do not need to match any server-generated stream.
 */

function hashSeed(seed: string): number {
  // xmur3 finalizer over the seed string.
  let h = 1779033703 ^ seed.length;
  for (let i = 0; i < seed.length; i++) {
    h = Math.imul(h ^ seed.charCodeAt(i), 3432918353);
    h = (h << 13) | (h >>> 19);
  }
  h = Math.imul(h ^ (h >>> 16), 2246822507);
  h = Math.imul(h ^ (h >>> 13), 3266489909);
  return (h ^= h >>> 16) >>> 0;
}

function mulberry32(state: number): () => number {
  return () => {
    state = (state + 0x6d2b79f5) | 0;
    let t = Math.imul(state ^ (state >>> 15), 1 | state);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function generatePracticeDiagram(
  alphabet: AlphabetData,
  rows: number,
  cols: number,
  seed: string,
): DiagramData {
  const letters = alphabetLetters(alphabet);
  const total = rows * cols;
  if (total < letters.length) {
    throw new Error(
      `${rows}x${cols} grid has ${total} cells; needs at least ${letters.length}`,
    );
  }
  const rand = mulberry32(hashSeed(seed));
  const randBelow = (n: number) => Math.floor(rand() * n);

  const slots = letters.map((_, i) => i);
  while (slots.length < total) slots.push(randBelow(letters.length));
  for (let i = slots.length - 1; i > 0; i--) {
    const j = randBelow(i + 1);
    [slots[i], slots[j]] = [slots[j]!, slots[i]!];
  }

  const cells: string[][] = [];
  for (let r = 0; r < rows; r++) {
    cells.push(slots.slice(r * cols, (r + 1) * cols).map((i) => letters[i]!));
  }
  return { alphabet, rows, cols, cells };
}
