import type { ServiceClient } from "./api.js";
import { ServiceError } from "./api.js";
import { derivePassword } from "./derive.js";
import { shortTraceWarning } from "./strength.js";
import { alphabetSize } from "./alphabet.js";
import type {
  Coord,
  DiagramData,
  GridParamsData,
  VerifyOutcome,
} from "./types.js";

/**
 * Flow logic, kept free of DOM concerns so it is directly testable: the UI
 * layer supplies a `TraceProvider` that resolves once the user has finished
 * tracing on the diagram it was given.
 */
export type TraceProvider = (diagram: DiagramData | null) => Promise<Coord[]>;

export interface EnrollResult {
  ok: boolean;
  /** Present when the trace is shorter than the recommended minimum. */
  warning?: string;
  /** Service rejection (409 duplicate and friends), surfaced verbatim. */
  error?: string;
}

export async function enrollFlow(
  client: ServiceClient,
  user: string,
  label: string,
  gridParams: GridParamsData,
  trace: TraceProvider,
  minSteps?: number,
): Promise<EnrollResult> {
  const steps = await trace(null);
  const warning = shortTraceWarning(
    alphabetSize(gridParams.alphabet),
    steps.length,
    minSteps,
  );
  try {
    await client.enroll(user, label, {
      rows: gridParams.rows,
      cols: gridParams.cols,
      steps: steps.map(({ row, col }) => [row, col] as [number, number]),
    }, gridParams);
  } catch (err) {
    if (err instanceof ServiceError) {
      return { ok: false, warning, error: err.message };
    }
    throw err;
  }
  return { ok: true, warning };
}

export interface LoginResult {
  outcome: VerifyOutcome;
  /** The derived password; hidden by default in the UI, reveal on demand. */
  password: string;
  challengeId: string;
}

/**
 * Fetch a challenge, let the user trace it, post the derived password.
 * Only the concatenated letters travel; the trace never leaves the client.
 */
export async function loginFlow(
  client: ServiceClient,
  user: string,
  label: string,
  trace: TraceProvider,
): Promise<LoginResult> {
  const challenge = await client.challenge(user, label);
  const steps = await trace(challenge.diagram);
  const password = derivePassword(challenge.diagram, steps);
  const outcome = await client.verify(challenge.challenge_id, password);
  return { outcome, password, challengeId: challenge.challenge_id };
}

/** Re-submit a password for an already-traced challenge (replay probe). */
export async function resubmit(
  client: ServiceClient,
  result: LoginResult,
): Promise<VerifyOutcome> {
  return client.verify(result.challengeId, result.password);
}
