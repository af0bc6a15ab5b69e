"""Operational shell: interactive sessions, JSON persistence, HTTP API.

A session holds a knowledge base (entered as CNL statement lines), a set of
asserted facts, declared awareness, and a reasoner profile.  Awareness is the
union of the declared atoms and every atom mentioned by the kb or the facts —
presenting a conditional makes its concepts part of the awareness set.
Mutations recompile eagerly so a session is always in a queryable state.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from dataclasses import dataclass, field, replace

from .core import (
    Atom,
    CognitiveState,
    Conditional,
    CoreError,
    Framework,
    Interpretation,
    Literal,
    make_state,
)
from .compiler import (
    CompileError,
    Mode,
    ReasonerProfile,
    compile_schemes,
    kb_to_json,
)
from .engine import QueryVerdict, query
from . import cnl


class SessionError(CoreError):
    pass


@dataclass
class Session:
    id: str
    kb_text: str = ""
    kb: list[Conditional] = field(default_factory=list)
    declared_awareness: set[Atom] = field(default_factory=set)
    facts: set[Literal] = field(default_factory=set)
    profile: ReasonerProfile = field(default_factory=ReasonerProfile)
    history: list[tuple[str, str]] = field(default_factory=list)
    last_verdict: QueryVerdict | None = None

    def awareness(self) -> set[Atom]:
        atoms = set(self.declared_awareness)
        for c in self.kb:
            atoms |= c.atoms()
        atoms |= {f.atom for f in self.facts}
        return atoms

    def state(self) -> CognitiveState:
        return make_state(self.facts, self.awareness())

    def compile(self) -> tuple[Framework, CognitiveState]:
        state = self.state()
        return compile_schemes(self.kb, state, self.profile), state

    def query(self, l: Literal) -> tuple[QueryVerdict, Framework]:
        f, state = self.compile()
        verdict = query(l, f, state)
        self.last_verdict = verdict
        return verdict, f

    def set_kb_text(self, text: str):
        statements = cnl.parse_statements(text)
        kb = cnl.statements_to_conditionals(statements)
        aware = {
            st.atom for st in statements if isinstance(st, cnl.AwarenessDecl)
        }
        old = (self.kb_text, self.kb, self.declared_awareness)
        self.kb_text, self.kb, self.declared_awareness = text, kb, aware
        try:
            self.compile()
        except CoreError:
            self.kb_text, self.kb, self.declared_awareness = old
            raise

    def add_fact(self, l: Literal):
        if l.complement() in self.facts:
            raise SessionError(f"fact {l} contradicts {l.complement()}")
        self.facts.add(l)
        try:
            self.compile()
        except CoreError:
            self.facts.discard(l)
            raise

    def to_json(self) -> dict:
        doc = kb_to_json(self.kb, self.state(), self.profile)
        doc.update({
            "id": self.id,
            "kb_text": self.kb_text,
            "declared_awareness": sorted(a.name
                                         for a in self.declared_awareness),
            "history": [list(h) for h in self.history],
        })
        return doc

    @staticmethod
    def from_json(doc: dict) -> "Session":
        from .compiler import kb_from_json
        kb, state, profile = kb_from_json(doc)
        return Session(
            id=doc["id"],
            kb_text=doc.get("kb_text", ""),
            kb=kb,
            declared_awareness={
                Atom(a) for a in doc.get("declared_awareness", [])
            },
            facts=set(state.facts),
            profile=profile,
            history=[tuple(h) for h in doc.get("history", [])],
        )


class SessionStore:
    """Single-file JSON persistence; per-session serialized access."""

    def __init__(self, path: str | None = None):
        self.path = path or os.environ.get("COGNARG_STORE") or \
            os.path.join(os.path.expanduser("~"), ".cognarg-sessions.json")
        self._lock = threading.Lock()
        self._session_locks: dict[str, threading.Lock] = {}
        self._sessions: dict[str, Session] = {}
        self._load()

    def _load(self):
        if not os.path.exists(self.path):
            return
        with open(self.path, encoding="utf-8") as fh:
            doc = json.load(fh)
        for sid, sdoc in doc.get("sessions", {}).items():
            self._sessions[sid] = Session.from_json(sdoc)

    def _flush(self):
        doc = {
            "v": 1,
            "sessions": {
                sid: s.to_json() for sid, s in self._sessions.items()
            },
        }
        tmp = self.path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1, sort_keys=True)
        os.replace(tmp, self.path)

    def create(self) -> Session:
        with self._lock:
            sid = uuid.uuid4().hex[:12]
            s = Session(id=sid)
            self._sessions[sid] = s
            self._session_locks[sid] = threading.Lock()
            self._flush()
            return s

    def get(self, sid: str) -> Session:
        with self._lock:
            s = self._sessions.get(sid)
        if s is None:
            raise KeyError(sid)
        return s

    def lock_for(self, sid: str) -> threading.Lock:
        with self._lock:
            return self._session_locks.setdefault(sid, threading.Lock())

    def save(self, _s: Session):
        with self._lock:
            self._flush()


# --- REPL ---------------------------------------------------------------------

REPL_HELP = """statements: whenever/when rules, fact:, aware:, ? <phrase>
meta: :profile [mode predictive|explanatory] [exo on|off]
      :facts   :reset [all]   :tree   :help   :quit"""


def repl_eval(line: str, s: Session) -> tuple[Session, str]:
    """Evaluate one REPL line; the session is mutated only on success."""
    line = line.strip()
    if not line or line.startswith("#"):
        return s, ""
    try:
        if line.startswith(":"):
            out = _meta(line, s)
        else:
            out = _statement(line, s)
    except CoreError as ex:
        return s, f"error: {ex}"
    s.history.append((line, out))
    return s, out


def _meta(line: str, s: Session) -> str:
    parts = line.split()
    cmd = parts[0]
    if cmd == ":help":
        return REPL_HELP
    if cmd == ":profile":
        if len(parts) == 1:
            return (f"mode={s.profile.mode.value} "
                    f"allow_exogenous={s.profile.allow_exogenous} "
                    f"auto_demote_necessity={s.profile.auto_demote_necessity}")
        if parts[1] == "mode" and len(parts) == 3:
            s.profile = replace(s.profile, mode=Mode(parts[2]))
            return f"mode set to {parts[2]}"
        if parts[1] == "exo" and len(parts) == 3:
            s.profile = replace(s.profile,
                                allow_exogenous=parts[2] == "on")
            return f"allow_exogenous={'on' == parts[2]}"
        raise SessionError(f"unknown profile setting: {' '.join(parts[1:])}")
    if cmd == ":facts":
        return ", ".join(sorted(f.to_text() for f in s.facts)) or "(none)"
    if cmd == ":reset":
        s.facts.clear()
        s.last_verdict = None
        if len(parts) > 1 and parts[1] == "all":
            s.kb_text, s.kb = "", []
            s.declared_awareness = set()
            s.history.clear()
        return "reset"
    if cmd == ":tree":
        if s.last_verdict is None:
            return "(no query yet)"
        f, _ = s.compile()
        return json.dumps(
            [t.to_json(f) for t in s.last_verdict.witnesses], indent=1)
    if cmd == ":quit":
        raise EOFError
    raise SessionError(f"unknown meta command {cmd}")


def _statement(line: str, s: Session) -> str:
    st = cnl.parse_statement(line)
    if isinstance(st, (cnl.WheneverRule, cnl.WhenRule)):
        s.set_kb_text((s.kb_text + "\n" + line).strip())
        return f"rule r{len(s.kb)} added"
    if isinstance(st, cnl.AwarenessDecl):
        s.declared_awareness.add(st.atom)
        return f"aware of {st.atom}"
    if isinstance(st, cnl.FactAssertion):
        s.add_fact(st.literal)
        return f"fact {st.literal.to_text()} recorded"
    if isinstance(st, cnl.Query):
        verdict, _ = s.query(st.literal)
        return cnl.render_explanation(verdict)
    raise SessionError("unsupported statement")


def run_repl(store: SessionStore, stdin=None, stdout=None):
    import sys
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    s = store.create()
    print(f"cognarg repl — session {s.id}. :help for help.", file=stdout)
    for raw in stdin:
        try:
            s, out = repl_eval(raw, s)
        except EOFError:
            break
        if out:
            print(out, file=stdout)
        store.save(s)
    print("bye", file=stdout)


# --- HTTP API -------------------------------------------------------------------

def create_app(store: SessionStore, ui_dir: str | None = None):
    from fastapi import FastAPI, HTTPException
    from fastapi.responses import JSONResponse

    app = FastAPI(title="cognarg", version="1")

    def _get(sid: str) -> Session:
        try:
            return store.get(sid)
        except KeyError:
            raise HTTPException(status_code=404,
                                detail=f"unknown session {sid}")

    def _error422(ex: CoreError):
        detail = {"message": str(ex)}
        if isinstance(ex, cnl.ParseError):
            detail["position"] = ex.position
            detail["hint"] = ex.hint
        raise HTTPException(status_code=422, detail=detail)

    @app.post("/sessions")
    def create_session():
        s = store.create()
        return {"v": 1, "id": s.id}

    @app.get("/sessions/{sid}")
    def get_session(sid: str):
        return _get(sid).to_json()

    @app.put("/sessions/{sid}/kb")
    def put_kb(sid: str, body: dict):
        s = _get(sid)
        with store.lock_for(sid):
            try:
                s.set_kb_text(body.get("text", ""))
            except CoreError as ex:
                _error422(ex)
            store.save(s)
            return s.to_json()

    @app.post("/sessions/{sid}/facts")
    def post_facts(sid: str, body: dict):
        s = _get(sid)
        with store.lock_for(sid):
            lits = body.get("literals")
            if lits is None:
                lits = [body.get("literal", "")]
            try:
                for text in lits:
                    s.add_fact(cnl.parse_phrase(text))
            except CoreError as ex:
                _error422(ex)
            store.save(s)
            return s.to_json()

    @app.put("/sessions/{sid}/profile")
    def put_profile(sid: str, body: dict):
        s = _get(sid)
        with store.lock_for(sid):
            try:
                s.profile = ReasonerProfile(
                    mode=Mode(body.get("mode", s.profile.mode.value)),
                    allow_exogenous=bool(
                        body.get("allow_exogenous",
                                 s.profile.allow_exogenous)),
                    auto_demote_necessity=bool(
                        body.get("auto_demote_necessity",
                                 s.profile.auto_demote_necessity)),
                    interpretation_overrides=tuple(
                        sorted((k, Interpretation(v)) for k, v in body.get(
                            "overrides", {}).items())),
                )
                s.compile()
            except (CoreError, ValueError) as ex:
                _error422(CoreError(str(ex)))
            store.save(s)
            return s.to_json()

    @app.post("/sessions/{sid}/query")
    def post_query(sid: str, body: dict):
        s = _get(sid)
        with store.lock_for(sid):
            try:
                lit = cnl.parse_phrase(body.get("literal", ""))
                verdict, f = s.query(lit)
            except CoreError as ex:
                _error422(ex)
            explanation = cnl.render_explanation(verdict)
            s.history.append((f"? {lit.to_text()}", explanation))
            store.save(s)
            return {
                "v": 1,
                "verdict": verdict.to_json(f),
                "explanation": explanation,
                "tree": [t.to_json(f) for t in verdict.witnesses],
            }

    if ui_dir and os.path.isdir(ui_dir):
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def default_ui_dir() -> str | None:
    here = os.path.dirname(os.path.abspath(__file__))
    candidate = os.path.join(here, "static")
    return candidate if os.path.isdir(candidate) else None
