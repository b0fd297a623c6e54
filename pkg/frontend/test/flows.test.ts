import { describe, expect, it, vi } from "vitest";

import { ServiceClient, ServiceError } from "../src/api.js";
import { enrollFlow, loginFlow } from "../src/flows.js";
import type { Coord, GridParamsData } from "../src/types.js";
import { WORKED_DIAGRAM, WORKED_PASSWORD, WORKED_STEPS } from "./fixtures.js";

const PARAMS: GridParamsData = { alphabet: { name: "hex" }, rows: 6, cols: 6 };

function mockClient(overrides: Partial<ServiceClient> = {}): ServiceClient {
  const base = {
    enroll: vi.fn(async () => undefined),
    challenge: vi.fn(async () => ({
      challenge_id: "cid-1",
      diagram: WORKED_DIAGRAM,
      expires_at: "2100-01-01T00:00:00+00:00",
    })),
    verify: vi.fn(async () => "accepted" as const),
    revoke: vi.fn(async () => undefined),
  };
  return Object.assign(Object.create(ServiceClient.prototype), base, overrides);
}

const traceWith = (steps: Coord[]) => async () => steps;

describe("enrollFlow", () => {
  it("posts the traced path and succeeds", async () => {
    const client = mockClient();
    const result = await enrollFlow(client, "alice", "high", PARAMS, traceWith(WORKED_STEPS));
    expect(result.ok).toBe(true);
    expect(result.warning).toBeUndefined();
    expect(client.enroll).toHaveBeenCalledWith(
      "alice",
      "high",
      { rows: 6, cols: 6, steps: WORKED_STEPS.map(({ row, col }) => [row, col]) },
      PARAMS,
    );
  });

  it("warns on short traces but still enrolls", async () => {
    const client = mockClient();
    const result = await enrollFlow(
      client, "alice", "low", PARAMS,
      traceWith(WORKED_STEPS.slice(0, 4)),
    );
    expect(result.ok).toBe(true);
    expect(result.warning).toContain("4 steps");
  });

  it("surfaces duplicate enrollment rejections", async () => {
    const client = mockClient({
      enroll: vi.fn(async () => {
        throw new ServiceError(409, "('alice', 'high') already enrolled");
      }),
    });
    const result = await enrollFlow(client, "alice", "high", PARAMS, traceWith(WORKED_STEPS));
    expect(result.ok).toBe(false);
    expect(result.error).toContain("already enrolled");
  });
});

describe("loginFlow", () => {
  it("derives the password from the displayed diagram and posts only that", async () => {
    const client = mockClient();
    const result = await loginFlow(client, "alice", "high", async (diagram) => {
      expect(diagram).toEqual(WORKED_DIAGRAM);
      return WORKED_STEPS;
    });
    expect(result.outcome).toBe("accepted");
    expect(result.password).toBe(WORKED_PASSWORD);
    // The verify call carries the challenge id and the derived password;
    // the traced coordinates never leave the client.
    expect(client.verify).toHaveBeenCalledTimes(1);
    expect(client.verify).toHaveBeenCalledWith("cid-1", WORKED_PASSWORD);
    const verifyArgs = JSON.stringify(vi.mocked(client.verify).mock.calls);
    expect(verifyArgs).not.toContain('"row"');
    expect(verifyArgs).not.toContain("steps");
  });

  it("propagates non-accepted outcomes", async () => {
    const client = mockClient({ verify: vi.fn(async () => "rejected" as const) });
    const result = await loginFlow(client, "alice", "high", traceWith(WORKED_STEPS.slice(1)));
    expect(result.outcome).toBe("rejected");
  });
});
