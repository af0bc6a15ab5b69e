import json

import pytest
from fastapi.testclient import TestClient

from cognarg.service import Session, SessionError, SessionStore, create_app, \
    repl_eval

KB = ("whenever she has an essay to finish then she will study late in the "
      "library\n"
      "when the library is not open then she will not study late in the "
      "library\n")
FACT = "fact: she has an essay to finish"
QUERY = "? she will study late in the library"


@pytest.fixture
def store(tmp_path):
    return SessionStore(str(tmp_path / "sessions.json"))


@pytest.fixture
def client(store):
    return TestClient(create_app(store))


def test_repl_group_iii_flow(store):
    s = store.create()
    for line in KB.splitlines():
        s, out = repl_eval(line, s)
        assert out.startswith("rule ")
    s, out = repl_eval(FACT, s)
    assert out == "fact she_has_essay_to_finish recorded"
    s, verdict = repl_eval(QUERY, s)
    assert verdict.splitlines()[0] == "Maybe"
    # parse errors do not mutate the session
    before = (s.kb_text, set(s.facts))
    s, out = repl_eval("whenever x then x", s)
    assert out.startswith("error:")
    assert (s.kb_text, set(s.facts)) == before


def test_repl_meta_commands(store):
    s = store.create()
    s, out = repl_eval(":help", s)
    assert ":profile" in out
    s, out = repl_eval(":profile", s)
    assert "mode=predictive" in out
    s, out = repl_eval(":profile mode explanatory", s)
    assert "explanatory" in out
    s, out = repl_eval(":profile exo on", s)
    assert s.profile.allow_exogenous
    s, out = repl_eval(":facts", s)
    assert out == "(none)"
    s, out = repl_eval(":tree", s)
    assert out == "(no query yet)"
    s, out = repl_eval(":bogus", s)
    assert out.startswith("error:")
    with pytest.raises(EOFError):
        repl_eval(":quit", s)


def test_repl_reset(store):
    s = store.create()
    s, _ = repl_eval(KB.splitlines()[0], s)
    s, _ = repl_eval(FACT, s)
    s, _ = repl_eval(":reset", s)
    assert not s.facts and s.kb  # facts cleared, rules kept
    s, _ = repl_eval(":reset all", s)
    assert not s.kb and not s.kb_text


def test_http_group_iii_flow(client):
    sid = client.post("/sessions").json()["id"]
    r = client.put(f"/sessions/{sid}/kb", json={"text": KB})
    assert r.status_code == 200
    r = client.post(f"/sessions/{sid}/facts",
                    json={"literal": "she has an essay to finish"})
    assert r.status_code == 200
    r = client.post(f"/sessions/{sid}/query",
                    json={"literal": "she will study late in the library"})
    assert r.status_code == 200
    doc = r.json()
    assert doc["v"] == 1
    assert doc["verdict"]["classification"] == "credulous_both"
    assert doc["explanation"].splitlines()[0] == "Maybe"
    assert len(doc["tree"]) == 2
    for t in doc["tree"]:
        assert t["status"] == "acceptable"


def test_http_profile_update(client):
    sid = client.post("/sessions").json()["id"]
    r = client.put(f"/sessions/{sid}/profile",
                   json={"mode": "explanatory", "allow_exogenous": True})
    assert r.status_code == 200
    r = client.put(f"/sessions/{sid}/profile", json={"mode": "telepathic"})
    assert r.status_code == 422


def test_http_errors(client):
    assert client.get("/sessions/nope").status_code == 404
    sid = client.post("/sessions").json()["id"]
    r = client.put(f"/sessions/{sid}/kb", json={"text": "junk line"})
    assert r.status_code == 422
    detail = r.json()["detail"]
    assert "message" in detail and "position" in detail and "hint" in detail
    r = client.post(f"/sessions/{sid}/facts", json={"literal": ""})
    assert r.status_code == 422


def test_persistence_across_reload(store, tmp_path):
    s = store.create()
    for line in KB.splitlines() + [FACT]:
        s, out = repl_eval(line, s)
        assert not out.startswith("error:")
    store.save(s)
    store2 = SessionStore(store.path)
    s2 = store2.get(s.id)
    assert s2.kb == s.kb
    assert s2.facts == s.facts
    s2, verdict = repl_eval(QUERY, s2)
    assert verdict.splitlines()[0] == "Maybe"


def test_repl_and_http_agree(store, client):
    s = store.create()
    for line in KB.splitlines() + [FACT]:
        s, _ = repl_eval(line, s)
    s, repl_answer = repl_eval(QUERY, s)

    sid = client.post("/sessions").json()["id"]
    client.put(f"/sessions/{sid}/kb", json={"text": KB})
    client.post(f"/sessions/{sid}/facts",
                json={"literal": "she has an essay to finish"})
    doc = client.post(
        f"/sessions/{sid}/query",
        json={"literal": "she will study late in the library"}).json()
    assert doc["explanation"] == repl_answer


def test_contradictory_fact_rejected(store):
    s = store.create()
    s, _ = repl_eval("fact: rain", s)
    s, out = repl_eval("fact: not rain", s)
    assert out.startswith("error:")
    s_json = json.dumps(s.to_json())
    assert Session.from_json(json.loads(s_json)).facts == s.facts
