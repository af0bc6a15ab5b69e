import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";

function fakeFetch(
  handler: (url: string, init?: RequestInit) => { status: number; body: unknown },
): typeof fetch {
  return (async (url: any, init?: RequestInit) => {
    const { status, body } = handler(String(url), init);
    return new Response(JSON.stringify(body), {
      status,
      headers: { "Content-Type": "application/json" },
    });
  }) as typeof fetch;
}

describe("ApiClient", () => {
  it("sends JSON bodies and unwraps replies", async () => {
    const seen: { url: string; init?: RequestInit }[] = [];
    const client = new ApiClient(
      "http://x",
      fakeFetch((url, init) => {
        seen.push({ url, init });
        return { status: 200, body: { v: 1, id: "s1" } };
      }),
    );
    const created = await client.createSession();
    expect(created.id).toBe("s1");
    expect(seen[0]!.url).toBe("http://x/sessions");
    expect(seen[0]!.init?.method).toBe("POST");
  });

  it("turns structured 422 details into ApiError diagnostics", async () => {
    const client = new ApiClient(
      "",
      fakeFetch(() => ({
        status: 422,
        body: {
          detail: { message: "line 2: unrecognized statement", position: 0, hint: "`whenever`" },
        },
      })),
    );
    const err = await client.putKb("s1", "junk").catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(422);
    expect(err.diagnostic.hint).toBe("`whenever`");
  });

  it("handles plain-string 404 details", async () => {
    const client = new ApiClient(
      "",
      fakeFetch(() => ({ status: 404, body: { detail: "unknown session nope" } })),
    );
    const err = await client.getSession("nope").catch((e) => e);
    expect(err.status).toBe(404);
    expect(err.message).toBe("unknown session nope");
  });
});
