import type { AlphabetData } from "./types.js";

const HEX = "0123456789abcdef".split("");

const DIGIT_PAIRS = Array.from({ length: 100 }, (_, i) =>
  i.toString().padStart(2, "0"),
);

/** Resolve a wire alphabet object to its ordered letter list. */
export function alphabetLetters(data: AlphabetData): string[] {
  if (data.letters && data.letters.length > 0) return [...data.letters];
  switch (data.name) {
    case "hex":
      return [...HEX];
    case "digit-pairs":
      return [...DIGIT_PAIRS];
    default:
      throw new Error(`unknown alphabet: ${JSON.stringify(data)}`);
  }
}

export function alphabetSize(data: AlphabetData): number {
  return alphabetLetters(data).length;
}
