import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import type { FetchLike } from "../src/api.js";

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

describe("api client", () => {
  it("posts session creation and unwraps the payload", async () => {
    const calls: { url: string; init?: RequestInit }[] = [];
    const fake: FetchLike = async (url, init) => {
      calls.push({ url, init });
      return jsonResponse({ session_id: "abc", state: { n: 2 } });
    };
    const api = new ApiClient("", fake);
    const { sessionId, state } = await api.createSession({
      graph6: "A_",
      weights: [1, 0],
      human_side: "alice",
      engine_policy: "optimal",
    });
    expect(sessionId).toBe("abc");
    expect(state.n).toBe(2);
    expect(calls[0]!.url).toBe("/api/session");
    expect(calls[0]!.init?.method).toBe("POST");
    expect(JSON.parse(String(calls[0]!.init?.body)).weights).toEqual([1, 0]);
  });

  it("unwraps move and analysis responses", async () => {
    const fake: FetchLike = async (url) => {
      if (url.endsWith("/move")) return jsonResponse({ state: { n: 2, game_over: true } });
      if (url.endsWith("/analysis")) return jsonResponse([{ vertex: 0, value_after_move: 1 }]);
      return jsonResponse({ state: { n: 2 } });
    };
    const api = new ApiClient("", fake);
    // the fake routes on the URL suffix, so the method mismatch cannot hide
    expect((await api.move("s", 0)).game_over).toBe(true);
    expect(await api.analysis("s")).toEqual([{ vertex: 0, value_after_move: 1 }]);
    expect((await api.getState("s")).n).toBe(2);
  });

  it("surfaces error details for tooltips", async () => {
    const fake: FetchLike = async () =>
      jsonResponse({ detail: "vertex is a cut vertex of the current graph" }, 409);
    const api = new ApiClient("", fake);
    try {
      await api.move("s", 0);
      expect.unreachable();
    } catch (err) {
      expect(err).toBeInstanceOf(ApiError);
      expect((err as ApiError).status).toBe(409);
      expect((err as ApiError).detail).toBe("vertex is a cut vertex of the current graph");
    }
  });

  it("prefixes a base URL", async () => {
    const urls: string[] = [];
    const fake: FetchLike = async (url) => {
      urls.push(url);
      return jsonResponse({ state: {} });
    };
    await new ApiClient("http://host:1", fake).getState("x");
    expect(urls).toEqual(["http://host:1/api/session/x"]);
  });
});
