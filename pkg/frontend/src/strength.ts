/** Client-side strength yardsticks for enrollment feedback. */

export const RECOMMENDED_MIN_STEPS = 8;

/** log2 of the number of length-n strings over the alphabet. */
export function bitsOfStrength(alphabetSize: number, steps: number): number {
  return steps * Math.log2(alphabetSize);
}

/**
 * Warning text for traces shorter than the recommended minimum, quoting
 * the bit counts so the user sees what they are giving up.  Returns
 * undefined when the trace is long enough.
 */
export function shortTraceWarning(
  alphabetSize: number,
  steps: number,
  minimum: number = RECOMMENDED_MIN_STEPS,
): string | undefined {
  if (steps >= minimum) return undefined;
  const have = bitsOfStrength(alphabetSize, steps).toFixed(1);
  const want = bitsOfStrength(alphabetSize, minimum).toFixed(1);
  return (
    `trace has ${steps} steps (~${have} bits); ` +
    `at least ${minimum} steps (~${want} bits) recommended`
  );
}
