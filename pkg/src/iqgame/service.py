"""HTTP session service over the game engine.

All game state lives in the session store; with a persistence directory
each session is one JSON document and a restarted service resumes them.
The oracle script stays server-side.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from . import engine
from .engine import EngineError, BlockedQuestionError
from .erotetics import QuestionError, Refusal
from .logic import LogicError, print_formula
from .scenarios import (
    BUILTIN_NAMES,
    ScenarioError,
    _parse_question,
    answer_to_json,
    find_scenario,
    scenario_from_json,
    step_from_json,
)
from .serialize import session_state_from_json, session_to_json, state_to_json


@dataclass
class Session:
    id: str
    state: engine.GameState
    created_at: float
    mode: str
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def oracle(self):
        return self.state.scenario.oracle


class SessionStore:
    def __init__(self, persist_dir=None):
        self._sessions = {}
        self._lock = threading.Lock()
        self.persist_dir = Path(persist_dir) if persist_dir else None
        if self.persist_dir:
            self.persist_dir.mkdir(parents=True, exist_ok=True)
            for path in sorted(self.persist_dir.glob("*.json")):
                doc = json.loads(path.read_text(encoding="utf-8"))
                session = Session(
                    id=doc["id"],
                    state=session_state_from_json(doc),
                    created_at=doc["created_at"],
                    mode=doc["mode"],
                )
                self._sessions[session.id] = session

    def create(self, scenario, mode="interactive"):
        session = Session(
            id=uuid.uuid4().hex,
            state=engine.new_game(scenario),
            created_at=time.time(),
            mode=mode,
        )
        with self._lock:
            self._sessions[session.id] = session
        self.save(session)
        return session

    def get(self, session_id):
        return self._sessions.get(session_id)

    def delete(self, session_id):
        with self._lock:
            session = self._sessions.pop(session_id, None)
        if session and self.persist_dir:
            path = self.persist_dir / f"{session_id}.json"
            if path.exists():
                path.unlink()
        return session

    def save(self, session):
        if self.persist_dir:
            path = self.persist_dir / f"{session.id}.json"
            path.write_text(
                json.dumps(session_to_json(session), indent=2) + "\n", encoding="utf-8"
            )

    def ids(self):
        return list(self._sessions)


def _bad_request(message):
    return JSONResponse(status_code=400, content={"error": "bad_request", "message": message})


def _engine_error(exc):
    body = {"error": exc.code, "message": str(exc)}
    if isinstance(exc, BlockedQuestionError):
        body["missing"] = print_formula(exc.missing)
    return JSONResponse(status_code=422, content=body)


def _not_found():
    return JSONResponse(
        status_code=404, content={"error": "unknown_session", "message": "unknown session"}
    )


def create_app(store=None):
    store = store or SessionStore()
    app = FastAPI(title="interrogative game service")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.store = store

    def resolve_scenario(value):
        if isinstance(value, str):
            return find_scenario(value)
        if isinstance(value, dict):
            return scenario_from_json(value)
        raise ScenarioError("scenario must be a builtin name or an inline document")

    @app.get("/scenarios")
    def list_scenarios():
        out = []
        for name in BUILTIN_NAMES:
            scenario = find_scenario(name)
            out.append(
                {
                    "name": scenario.name,
                    "inquirer": scenario.inquirer,
                    "principal": scenario.principal.label,
                }
            )
        return out

    @app.post("/sessions", status_code=201)
    def create_session(payload: dict):
        try:
            scenario = resolve_scenario(payload.get("scenario"))
            mode = payload.get("mode", "interactive")
            if mode not in ("interactive", "replay"):
                return _bad_request(f"unknown mode {mode!r}")
        except (ScenarioError, LogicError, QuestionError) as exc:
            return _bad_request(str(exc))
        try:
            session = store.create(scenario, mode=mode)
        except EngineError as exc:
            return _engine_error(exc)
        return {"id": session.id, "state": state_to_json(session.state)}

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session = store.get(session_id)
        if session is None:
            return _not_found()
        return state_to_json(session.state)

    @app.get("/sessions/{session_id}/questions")
    def get_questions(session_id: str):
        from .scenarios import question_to_json

        session = store.get(session_id)
        if session is None:
            return _not_found()
        out = []
        for item in engine.available_questions(session.state):
            doc = {
                "question": question_to_json(item.question),
                "askable": isinstance(item.status, engine.Askable),
                "answered": item.answered,
                "open_seq": item.open_seq,
            }
            if isinstance(item.status, engine.Blocked):
                doc["missing"] = print_formula(item.status.missing)
            out.append(doc)
        return out

    def build_move(payload, sig):
        kind = payload.get("type")
        if kind == "ask":
            q = _parse_question(payload["question"], sig, strict=False)
            return lambda state: engine.ask(state, q)
        if kind == "answer":
            seq = payload["question_seq"]
            answer_doc = payload["answer"]
            if answer_doc.get("type") == "refuse":
                answer = Refusal()
            elif answer_doc.get("type") == "direct":
                from .logic import parse_formula
                from .erotetics import Direct

                answer = Direct(parse_formula(answer_doc["formula"], sig=sig, strict=False))
            else:
                raise ScenarioError("answer type must be 'direct' or 'refuse'")
            return lambda state: engine.record_answer(state, seq, answer)
        if kind == "deduce":
            step = step_from_json(payload, sig)
            return lambda state: engine.deduce(state, step)
        raise ScenarioError(f"move type must be ask/answer/deduce, got {kind!r}")

    @app.post("/sessions/{session_id}/moves")
    def post_move(session_id: str, payload: dict):
        session = store.get(session_id)
        if session is None:
            return _not_found()
        try:
            apply = build_move(payload, session.state.scenario.signature)
        except (ScenarioError, LogicError, QuestionError, KeyError, TypeError) as exc:
            return _bad_request(f"malformed move: {exc}")
        with session.lock:
            try:
                session.state = apply(session.state)
            except EngineError as exc:
                return _engine_error(exc)
            store.save(session)
            return state_to_json(session.state)

    @app.post("/sessions/{session_id}/moves/check")
    def check_move(session_id: str, payload: dict):
        """Dry-run a deduce move: validate and return the conclusion the
        rule would yield, without changing the session."""
        from .logic import parse_formula
        from .rules import Const, Rule, RuleError, apply_rule

        session = store.get(session_id)
        if session is None:
            return _not_found()
        sig = session.state.scenario.signature
        try:
            rule = Rule(payload["rule"])
            refs = [int(r) for r in payload.get("premises", ())]
            witness = (
                Const(payload["witness"]) if payload.get("witness") else None
            )
            conclusion = (
                parse_formula(payload["conclusion"], sig=sig, strict=False)
                if payload.get("conclusion")
                else None
            )
        except (ValueError, KeyError, TypeError, LogicError) as exc:
            return _bad_request(f"malformed step: {exc}")
        state = session.state
        by_seq = state.established_by_seq
        premises = []
        for ref in refs:
            if ref not in by_seq:
                return {
                    "ok": False,
                    "error": "invalid_step",
                    "message": f"entry {ref} is not an established sentence",
                }
            premises.append(by_seq[ref])
        try:
            got = apply_rule(
                rule,
                premises,
                witness=witness,
                used_constants=state.used_constants,
                conclusion=conclusion,
            )
        except RuleError as exc:
            return {"ok": False, "error": "invalid_step", "message": str(exc)}
        if conclusion is not None and got != conclusion:
            return {
                "ok": False,
                "error": "invalid_step",
                "message": f"rule yields {print_formula(got)}",
            }
        return {"ok": True, "conclusion": print_formula(got)}

    @app.post("/sessions/{session_id}/oracle")
    def post_oracle(session_id: str, payload: dict):
        session = store.get(session_id)
        if session is None:
            return _not_found()
        try:
            q = _parse_question(
                payload["question"], session.state.scenario.signature, strict=False
            )
        except (ScenarioError, LogicError, QuestionError, KeyError, TypeError) as exc:
            return _bad_request(f"malformed question: {exc}")
        with session.lock:
            seq = engine.find_open_question(session.state, q)
            if seq is None:
                return _engine_error(
                    engine.NotOpenError("no open question matches the request")
                )
            answer = session.oracle.answer(q)
            try:
                session.state = engine.record_answer(session.state, seq, answer)
            except EngineError as exc:
                return _engine_error(exc)
            store.save(session)
            return {"answer": answer_to_json(answer), "state": state_to_json(session.state)}

    @app.get("/sessions/{session_id}/tableau")
    def get_tableau(session_id: str, format: str = "json"):
        session = store.get(session_id)
        if session is None:
            return _not_found()
        if format == "json":
            return engine.tableau_json(session.state)
        if format in ("text", "markdown"):
            return PlainTextResponse(engine.render_tableau(session.state, format))
        return _bad_request(f"unknown format {format!r}")

    @app.delete("/sessions/{session_id}", status_code=204)
    def delete_session(session_id: str):
        if store.delete(session_id) is None:
            return _not_found()

    return app
