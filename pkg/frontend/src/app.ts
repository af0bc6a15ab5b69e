// Application wiring: one session, a kb editor, fact/profile controls, and a
// verdict + tree panel.  All state shown is read back from the API.

import { ApiClient, ApiError, type QueryResponse, type SessionJson } from "./api.js";
import {
  RequestGate,
  answerFor,
  diagnosticLine,
  sessionView,
  treeModel,
} from "./viewmodel.js";
import { renderTree } from "./tree.js";

const api = new ApiClient("");
const queryGate = new RequestGate();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function banner(message: string | null): void {
  const b = el<HTMLDivElement>("banner");
  b.textContent = message ?? "";
  b.hidden = message === null;
}

function showKbDiagnostic(err: ApiError | null): void {
  const box = el<HTMLDivElement>("kb-diagnostic");
  if (!err) {
    box.hidden = true;
    box.textContent = "";
    return;
  }
  const line = diagnosticLine(err.diagnostic);
  const hint = err.diagnostic.hint ? ` — expected ${err.diagnostic.hint}` : "";
  box.textContent =
    (line !== null ? `line ${line + 1}: ` : "") + err.diagnostic.message + hint;
  box.hidden = false;
  if (line !== null) {
    const editor = el<HTMLTextAreaElement>("kb-editor");
    const lines = editor.value.split("\n");
    const start = lines.slice(0, line).reduce((n, l) => n + l.length + 1, 0);
    editor.focus();
    editor.setSelectionRange(start, start + (lines[line]?.length ?? 0));
  }
}

function renderSession(doc: SessionJson): void {
  const view = sessionView(doc);
  el<HTMLUListElement>("kb-list").replaceChildren(
    ...view.conditionals.map((c) => {
      const li = document.createElement("li");
      li.textContent = `${c.id}: ${c.text}`;
      return li;
    }),
  );
  el<HTMLSpanElement>("fact-list").textContent =
    view.facts.join(", ") || "(none)";
  el<HTMLSpanElement>("awareness-list").textContent =
    view.awareness.join(", ") || "(none)";
  el<HTMLSelectElement>("profile-mode").value = view.mode;
  el<HTMLInputElement>("profile-exo").checked = view.allowExogenous;
  el<HTMLInputElement>("profile-demote").checked = view.autoDemote;
}

function renderVerdict(resp: QueryResponse): void {
  el<HTMLDivElement>("answer").textContent = answerFor(resp.verdict);
  el<HTMLDivElement>("answer").dataset.classification =
    resp.verdict.classification;
  el<HTMLPreElement>("explanation").textContent = resp.explanation;
  const trees = el<HTMLDivElement>("trees");
  trees.replaceChildren(
    ...resp.tree.map((t) => {
      const model = treeModel(t);
      const wrap = document.createElement("figure");
      const caption = document.createElement("figcaption");
      caption.textContent = `claim: ${model.claim} (${model.status})`;
      wrap.append(caption, renderTree(model));
      return wrap;
    }),
  );
}

async function withSession(): Promise<string> {
  const existing = sessionStorage.getItem("cognarg-session");
  if (existing) {
    try {
      await api.getSession(existing);
      return existing;
    } catch {
      sessionStorage.removeItem("cognarg-session");
    }
  }
  const created = await api.createSession();
  sessionStorage.setItem("cognarg-session", created.id);
  return created.id;
}

async function main(): Promise<void> {
  let sid: string;
  try {
    sid = await withSession();
    renderSession(await api.getSession(sid));
  } catch (err) {
    banner(`cannot reach the cognarg API: ${(err as Error).message}`);
    return;
  }

  el<HTMLButtonElement>("kb-submit").addEventListener("click", async () => {
    const text = el<HTMLTextAreaElement>("kb-editor").value;
    if (!text.trim()) return;
    try {
      renderSession(await api.putKb(sid, text));
      showKbDiagnostic(null);
      banner(null);
    } catch (err) {
      if (err instanceof ApiError && err.status === 422) showKbDiagnostic(err);
      else banner((err as Error).message);
    }
  });

  el<HTMLButtonElement>("fact-submit").addEventListener("click", async () => {
    const input = el<HTMLInputElement>("fact-input");
    if (!input.value.trim()) return;
    try {
      renderSession(await api.postFact(sid, input.value));
      input.value = "";
      banner(null);
    } catch (err) {
      banner((err as Error).message);
    }
  });

  const pushProfile = async () => {
    try {
      renderSession(
        await api.putProfile(sid, {
          mode: el<HTMLSelectElement>("profile-mode").value,
          allow_exogenous: el<HTMLInputElement>("profile-exo").checked,
          auto_demote_necessity:
            el<HTMLInputElement>("profile-demote").checked,
        }),
      );
      banner(null);
    } catch (err) {
      banner((err as Error).message);
    }
  };
  el<HTMLSelectElement>("profile-mode").addEventListener("change", pushProfile);
  el<HTMLInputElement>("profile-exo").addEventListener("change", pushProfile);
  el<HTMLInputElement>("profile-demote").addEventListener(
    "change",
    pushProfile,
  );

  el<HTMLButtonElement>("query-submit").addEventListener("click", async () => {
    const phrase = el<HTMLInputElement>("query-input").value;
    if (!phrase.trim()) return;
    const negated = el<HTMLInputElement>("query-negate").checked;
    const literal = negated ? `not ${phrase}` : phrase;
    try {
      const resp = await queryGate.run(() => api.query(sid, literal));
      if (resp !== null) {
        renderVerdict(resp);
        banner(null);
      }
    } catch (err) {
      banner((err as Error).message);
    }
  });
}

main();
