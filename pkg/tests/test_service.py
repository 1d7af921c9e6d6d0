import pytest
from fastapi.testclient import TestClient

from iqgame.service import SessionStore, create_app


@pytest.fixture
def client():
    return TestClient(create_app(SessionStore()))


def create_holmes(client):
    response = client.post("/sessions", json={"scenario": "holmes"})
    assert response.status_code == 201
    body = response.json()
    return body["id"], body["state"]


class TestSessions:
    def test_create_opens_with_premise_and_principal(self, client):
        _, state = create_holmes(client)
        assert state["entries"][0]["content"] == "exists x. x = t"
        assert state["entries"][1]["kind"] == "question"

    def test_get_state(self, client):
        sid, state = create_holmes(client)
        assert client.get(f"/sessions/{sid}").json() == state

    def test_unknown_session_404(self, client):
        assert client.get("/sessions/nope").status_code == 404
        assert client.post("/sessions/nope/moves", json={"type": "ask"}).status_code == 404

    def test_delete(self, client):
        sid, _ = create_holmes(client)
        assert client.delete(f"/sessions/{sid}").status_code == 204
        assert client.get(f"/sessions/{sid}").status_code == 404
        assert client.delete(f"/sessions/{sid}").status_code == 404

    def test_bad_scenario_400(self, client):
        assert client.post("/sessions", json={"scenario": "atlantis"}).status_code == 400

    def test_inline_scenario(self, client):
        doc = {
            "scenario_version": 1,
            "name": "inline",
            "signature": {"predicates": {"P": 1}, "constants": ["a"]},
            "premises": [],
            "principal": {"kind": "yesno", "formula": "P(a)"},
            "ra": [{"kind": "yesno", "formula": "P(a)"}],
            "oracle": [{"question": {"kind": "yesno", "formula": "P(a)"}, "answer": "P(a)"}],
        }
        response = client.post("/sessions", json={"scenario": doc})
        assert response.status_code == 201

    def test_list_scenarios(self, client):
        names = [s["name"] for s in client.get("/scenarios").json()]
        assert names == ["holmes", "mendel"]


class TestMoves:
    def test_ask_and_oracle(self, client):
        sid, _ = create_holmes(client)
        q = {"kind": "yesno", "formula": "exists x. D(x)"}
        response = client.post(f"/sessions/{sid}/moves", json={"type": "ask", "question": q})
        assert response.status_code == 200
        assert len(response.json()["entries"]) == 4
        response = client.post(f"/sessions/{sid}/oracle", json={"question": q})
        assert response.status_code == 200
        assert response.json()["answer"] == "exists x. D(x)"

    def test_blocked_wh_422(self, client):
        doc = {
            "scenario_version": 1,
            "name": "inline",
            "signature": {"predicates": {"P": 1, "Q": 1}, "constants": ["a"]},
            "premises": ["exists x. P(x)"],
            "principal": {"kind": "wh", "var": "x", "formula": "P(x)"},
            "ra": [
                {"kind": "wh", "var": "x", "formula": "P(x)"},
                {"kind": "wh", "var": "x", "formula": "Q(x)"},
            ],
            "oracle": [],
        }
        response = client.post("/sessions", json={"scenario": doc})
        sid = response.json()["id"]
        response = client.post(
            f"/sessions/{sid}/moves",
            json={"type": "ask", "question": {"kind": "wh", "var": "x", "formula": "Q(x)"}},
        )
        assert response.status_code == 422
        body = response.json()
        assert body["error"] == "blocked"
        assert body["missing"] == "exists x. Q(x)"

    def test_invalid_deduce_422(self, client):
        sid, _ = create_holmes(client)
        response = client.post(
            f"/sessions/{sid}/moves",
            json={
                "type": "deduce",
                "rule": "modus_ponens",
                "premises": [1, 1],
                "conclusion": "t = o",
            },
        )
        assert response.status_code == 422
        assert response.json()["error"] == "invalid_step"

    def test_malformed_move_400(self, client):
        sid, _ = create_holmes(client)
        response = client.post(f"/sessions/{sid}/moves", json={"type": "teleport"})
        assert response.status_code == 400

    def test_oracle_without_open_question_422(self, client):
        sid, _ = create_holmes(client)
        response = client.post(
            f"/sessions/{sid}/oracle",
            json={"question": {"kind": "yesno", "formula": "B(d, t)"}},
        )
        assert response.status_code == 422
        assert response.json()["error"] == "not_open"

    def test_direct_answer_move(self, client):
        sid, _ = create_holmes(client)
        q = {"kind": "yesno", "formula": "exists x. D(x)"}
        client.post(f"/sessions/{sid}/moves", json={"type": "ask", "question": q})
        response = client.post(
            f"/sessions/{sid}/moves",
            json={
                "type": "answer",
                "question_seq": 4,
                "answer": {"type": "direct", "formula": "exists x. D(x)"},
            },
        )
        assert response.status_code == 200
        assert response.json()["entries"][-1]["content"] == "exists x. D(x)"


class TestMoveCheck:
    def test_valid_step_returns_conclusion_without_mutating(self, client):
        sid, _ = create_holmes(client)
        q = {"kind": "yesno", "formula": "exists x. D(x)"}
        client.post(f"/sessions/{sid}/moves", json={"type": "ask", "question": q})
        client.post(f"/sessions/{sid}/oracle", json={"question": q})
        before = client.get(f"/sessions/{sid}").json()
        response = client.post(
            f"/sessions/{sid}/moves/check",
            json={"rule": "existential_instantiation", "premises": [5], "witness": "d"},
        )
        assert response.status_code == 200
        assert response.json() == {"ok": True, "conclusion": "D(d)"}
        assert client.get(f"/sessions/{sid}").json() == before

    def test_inapplicable_rule_reports_why(self, client):
        sid, _ = create_holmes(client)
        response = client.post(
            f"/sessions/{sid}/moves/check",
            json={"rule": "modus_ponens", "premises": [1, 1]},
        )
        body = response.json()
        assert response.status_code == 200
        assert body["ok"] is False
        assert body["error"] == "invalid_step"

    def test_claimed_conclusion_must_match(self, client):
        sid, _ = create_holmes(client)
        q = {"kind": "yesno", "formula": "exists x. D(x)"}
        client.post(f"/sessions/{sid}/moves", json={"type": "ask", "question": q})
        client.post(f"/sessions/{sid}/oracle", json={"question": q})
        response = client.post(
            f"/sessions/{sid}/moves/check",
            json={
                "rule": "existential_instantiation",
                "premises": [5],
                "witness": "w",
                "conclusion": "D(d)",
            },
        )
        body = response.json()
        assert body["ok"] is False
        assert "yields" in body["message"]

    def test_unknown_rule_400(self, client):
        sid, _ = create_holmes(client)
        response = client.post(
            f"/sessions/{sid}/moves/check", json={"rule": "teleport", "premises": []}
        )
        assert response.status_code == 400


class TestQuestionsAndTableau:
    def test_questions_listing(self, client):
        sid, _ = create_holmes(client)
        items = client.get(f"/sessions/{sid}/questions").json()
        assert len(items) == 5
        assert all(item["askable"] for item in items)

    def test_tableau_formats(self, client):
        sid, _ = create_holmes(client)
        doc = client.get(f"/sessions/{sid}/tableau").json()
        assert doc["tableau_version"] == 1
        text = client.get(f"/sessions/{sid}/tableau", params={"format": "text"}).text
        assert "SOURCE OF INFORMATION" in text
        bad = client.get(f"/sessions/{sid}/tableau", params={"format": "yaml"})
        assert bad.status_code == 400


class TestPersistence:
    def test_restart_resumes_sessions(self, tmp_path):
        store = SessionStore(persist_dir=tmp_path)
        client = TestClient(create_app(store))
        sid, _ = create_holmes(client)
        q = {"kind": "yesno", "formula": "exists x. D(x)"}
        client.post(f"/sessions/{sid}/moves", json={"type": "ask", "question": q})
        client.post(f"/sessions/{sid}/oracle", json={"question": q})
        before = client.get(f"/sessions/{sid}").json()

        fresh = TestClient(create_app(SessionStore(persist_dir=tmp_path)))
        after = fresh.get(f"/sessions/{sid}").json()
        assert after == before
        # the resumed session still accepts moves
        response = fresh.post(
            f"/sessions/{sid}/moves",
            json={
                "type": "deduce",
                "rule": "existential_instantiation",
                "premises": [5],
                "witness": "d",
                "conclusion": "D(d)",
            },
        )
        assert response.status_code == 200
