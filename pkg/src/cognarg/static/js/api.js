// Typed client for the cognarg HTTP API (JSON wire format v1).
// The UI never reasons locally: every verdict shown comes from these calls.
export class ApiError extends Error {
    status;
    diagnostic;
    constructor(status, diagnostic) {
        super(diagnostic.message);
        this.status = status;
        this.diagnostic = diagnostic;
    }
}
async function unwrap(resp) {
    if (resp.ok) {
        return (await resp.json());
    }
    let diagnostic = { message: `HTTP ${resp.status}` };
    try {
        const body = await resp.json();
        const detail = body.detail;
        if (typeof detail === "string") {
            diagnostic = { message: detail };
        }
        else if (detail && typeof detail.message === "string") {
            diagnostic = detail;
        }
    }
    catch {
        // non-JSON error body; keep the status-line message
    }
    throw new ApiError(resp.status, diagnostic);
}
export class ApiClient {
    base;
    doFetch;
    constructor(base = "", doFetch = (...args) => fetch(...args)) {
        this.base = base;
        this.doFetch = doFetch;
    }
    req(method, path, body) {
        return this.doFetch(this.base + path, {
            method,
            headers: body === undefined ? {} : { "Content-Type": "application/json" },
            body: body === undefined ? undefined : JSON.stringify(body),
        }).then((r) => unwrap(r));
    }
    createSession() {
        return this.req("POST", "/sessions");
    }
    getSession(sid) {
        return this.req("GET", `/sessions/${sid}`);
    }
    putKb(sid, text) {
        return this.req("PUT", `/sessions/${sid}/kb`, { text });
    }
    postFact(sid, literal) {
        return this.req("POST", `/sessions/${sid}/facts`, { literal });
    }
    putProfile(sid, profile) {
        return this.req("PUT", `/sessions/${sid}/profile`, profile);
    }
    query(sid, literal) {
        return this.req("POST", `/sessions/${sid}/query`, { literal });
    }
}
