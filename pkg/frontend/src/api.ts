// Typed client for the cognarg HTTP API (JSON wire format v1).
// The UI never reasons locally: every verdict shown comes from these calls.

export interface ConditionalJson {
  id: string;
  condition: string[];
  consequent: string;
  interpretation: string;
}

export interface SessionJson {
  v: number;
  id: string;
  kb_text: string;
  atoms: string[];
  conditionals: ConditionalJson[];
  state: { facts: string[]; awareness: string[] };
  profile: {
    mode: string;
    allow_exogenous: boolean;
    auto_demote_necessity: boolean;
    overrides: Record<string, string>;
  };
  history: [string, string][];
}

export interface ArgJson {
  members: string[];
}

export type EdgeKind = "attack" | "defense" | "strong";

export interface TreeChildJson {
  attacker: ArgJson;
  defense: ArgJson | null;
  edge: EdgeKind;
}

export interface TreeJson {
  claim: string;
  status: "acceptable" | "defeated" | "exhausted";
  root: ArgJson;
  children: TreeChildJson[];
}

export interface VerdictJson {
  literal: string;
  credulous_pos: boolean;
  credulous_neg: boolean;
  classification:
    | "skeptical_yes"
    | "skeptical_no"
    | "credulous_both"
    | "no_support";
  witnesses: TreeJson[];
}

export interface QueryResponse {
  v: number;
  verdict: VerdictJson;
  explanation: string;
  tree: TreeJson[];
}

export interface ApiDiagnostic {
  message: string;
  position?: number;
  hint?: string;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public diagnostic: ApiDiagnostic,
  ) {
    super(diagnostic.message);
  }
}

async function unwrap<T>(resp: Response): Promise<T> {
  if (resp.ok) {
    return (await resp.json()) as T;
  }
  let diagnostic: ApiDiagnostic = { message: `HTTP ${resp.status}` };
  try {
    const body = await resp.json();
    const detail = body.detail;
    if (typeof detail === "string") {
      diagnostic = { message: detail };
    } else if (detail && typeof detail.message === "string") {
      diagnostic = detail as ApiDiagnostic;
    }
  } catch {
    // non-JSON error body; keep the status-line message
  }
  throw new ApiError(resp.status, diagnostic);
}

export class ApiClient {
  constructor(
    private base: string = "",
    private doFetch: typeof fetch = (...args) => fetch(...args),
  ) {}

  private req<T>(method: string, path: string, body?: unknown): Promise<T> {
    return this.doFetch(this.base + path, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    }).then((r) => unwrap<T>(r));
  }

  createSession(): Promise<{ v: number; id: string }> {
    return this.req("POST", "/sessions");
  }

  getSession(sid: string): Promise<SessionJson> {
    return this.req("GET", `/sessions/${sid}`);
  }

  putKb(sid: string, text: string): Promise<SessionJson> {
    return this.req("PUT", `/sessions/${sid}/kb`, { text });
  }

  postFact(sid: string, literal: string): Promise<SessionJson> {
    return this.req("POST", `/sessions/${sid}/facts`, { literal });
  }

  putProfile(
    sid: string,
    profile: Partial<SessionJson["profile"]>,
  ): Promise<SessionJson> {
    return this.req("PUT", `/sessions/${sid}/profile`, profile);
  }

  query(sid: string, literal: string): Promise<QueryResponse> {
    return this.req("POST", `/sessions/${sid}/query`, { literal });
  }
}
