// Application wiring: one session, a kb editor, fact/profile controls, and a
// verdict + tree panel.  All state shown is read back from the API.
import { ApiClient, ApiError } from "./api.js";
import { RequestGate, answerFor, diagnosticLine, sessionView, treeModel, } from "./viewmodel.js";
import { renderTree } from "./tree.js";
const api = new ApiClient("");
const queryGate = new RequestGate();
function el(id) {
    const node = document.getElementById(id);
    if (!node)
        throw new Error(`missing element #${id}`);
    return node;
}
function banner(message) {
    const b = el("banner");
    b.textContent = message ?? "";
    b.hidden = message === null;
}
function showKbDiagnostic(err) {
    const box = el("kb-diagnostic");
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
        const editor = el("kb-editor");
        const lines = editor.value.split("\n");
        const start = lines.slice(0, line).reduce((n, l) => n + l.length + 1, 0);
        editor.focus();
        editor.setSelectionRange(start, start + (lines[line]?.length ?? 0));
    }
}
function renderSession(doc) {
    const view = sessionView(doc);
    el("kb-list").replaceChildren(...view.conditionals.map((c) => {
        const li = document.createElement("li");
        li.textContent = `${c.id}: ${c.text}`;
        return li;
    }));
    el("fact-list").textContent =
        view.facts.join(", ") || "(none)";
    el("awareness-list").textContent =
        view.awareness.join(", ") || "(none)";
    el("profile-mode").value = view.mode;
    el("profile-exo").checked = view.allowExogenous;
    el("profile-demote").checked = view.autoDemote;
}
function renderVerdict(resp) {
    el("answer").textContent = answerFor(resp.verdict);
    el("answer").dataset.classification =
        resp.verdict.classification;
    el("explanation").textContent = resp.explanation;
    const trees = el("trees");
    trees.replaceChildren(...resp.tree.map((t) => {
        const model = treeModel(t);
        const wrap = document.createElement("figure");
        const caption = document.createElement("figcaption");
        caption.textContent = `claim: ${model.claim} (${model.status})`;
        wrap.append(caption, renderTree(model));
        return wrap;
    }));
}
async function withSession() {
    const existing = sessionStorage.getItem("cognarg-session");
    if (existing) {
        try {
            await api.getSession(existing);
            return existing;
        }
        catch {
            sessionStorage.removeItem("cognarg-session");
        }
    }
    const created = await api.createSession();
    sessionStorage.setItem("cognarg-session", created.id);
    return created.id;
}
async function main() {
    let sid;
    try {
        sid = await withSession();
        renderSession(await api.getSession(sid));
    }
    catch (err) {
        banner(`cannot reach the cognarg API: ${err.message}`);
        return;
    }
    el("kb-submit").addEventListener("click", async () => {
        const text = el("kb-editor").value;
        if (!text.trim())
            return;
        try {
            renderSession(await api.putKb(sid, text));
            showKbDiagnostic(null);
            banner(null);
        }
        catch (err) {
            if (err instanceof ApiError && err.status === 422)
                showKbDiagnostic(err);
            else
                banner(err.message);
        }
    });
    el("fact-submit").addEventListener("click", async () => {
        const input = el("fact-input");
        if (!input.value.trim())
            return;
        try {
            renderSession(await api.postFact(sid, input.value));
            input.value = "";
            banner(null);
        }
        catch (err) {
            banner(err.message);
        }
    });
    const pushProfile = async () => {
        try {
            renderSession(await api.putProfile(sid, {
                mode: el("profile-mode").value,
                allow_exogenous: el("profile-exo").checked,
                auto_demote_necessity: el("profile-demote").checked,
            }));
            banner(null);
        }
        catch (err) {
            banner(err.message);
        }
    };
    el("profile-mode").addEventListener("change", pushProfile);
    el("profile-exo").addEventListener("change", pushProfile);
    el("profile-demote").addEventListener("change", pushProfile);
    el("query-submit").addEventListener("click", async () => {
        const phrase = el("query-input").value;
        if (!phrase.trim())
            return;
        const negated = el("query-negate").checked;
        const literal = negated ? `not ${phrase}` : phrase;
        try {
            const resp = await queryGate.run(() => api.query(sid, literal));
            if (resp !== null) {
                renderVerdict(resp);
                banner(null);
            }
        }
        catch (err) {
            banner(err.message);
        }
    });
}
main();
