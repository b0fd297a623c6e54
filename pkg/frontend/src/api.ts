import type {
  ChallengeData,
  GridParamsData,
  PathData,
  VerifyOutcome,
} from "./types.js";

export class ServiceError extends Error {
  readonly status: number;
  constructor(status: number, detail: string) {
    super(detail);
    this.status = status;
  }
}

async function detailOf(resp: Response): Promise<string> {
  try {
    const body = (await resp.json()) as { detail?: unknown };
    if (typeof body.detail === "string") return body.detail;
  } catch {
    // fall through to the status line
  }
  return `${resp.status} ${resp.statusText}`;
}

/** Thin typed client over the service wire protocol. */
export class ServiceClient {
  readonly baseUrl: string;

  constructor(baseUrl: string) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
  }

  private async post(path: string, body: unknown): Promise<Response> {
    return fetch(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  async enroll(
    user: string,
    label: string,
    path: PathData,
    gridParams: GridParamsData,
  ): Promise<void> {
    const resp = await this.post("/enroll", {
      user,
      label,
      path,
      grid_params: gridParams,
    });
    if (resp.status !== 201) throw new ServiceError(resp.status, await detailOf(resp));
  }

  async challenge(user: string, label: string): Promise<ChallengeData> {
    const resp = await this.post("/challenge", { user, label });
    if (!resp.ok) throw new ServiceError(resp.status, await detailOf(resp));
    return (await resp.json()) as ChallengeData;
  }

  async verify(challengeId: string, password: string): Promise<VerifyOutcome> {
    const resp = await this.post("/verify", {
      challenge_id: challengeId,
      password,
    });
    if (!resp.ok) throw new ServiceError(resp.status, await detailOf(resp));
    const body = (await resp.json()) as { outcome: VerifyOutcome };
    return body.outcome;
  }

  async revoke(user: string, label: string): Promise<void> {
    const resp = await fetch(
      `${this.baseUrl}/enrollment/${encodeURIComponent(user)}/${encodeURIComponent(label)}`,
      { method: "DELETE" },
    );
    if (resp.status !== 204) throw new ServiceError(resp.status, await detailOf(resp));
  }
}
