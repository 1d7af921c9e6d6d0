"""JSON forms of game state, used by the HTTP service, session
persistence, and the CLI export command."""

from __future__ import annotations

from .engine import (
    AnswerTo,
    AskedFromRA,
    Deduced,
    GameState,
    IN_PROGRESS,
    InitialPremise,
    INQUIRER,
    PresuppositionOf,
    Solved,
    SOURCE,
    TableauEntry,
    TautologyPremise,
)
from .logic import parse_formula, print_formula
from .scenarios import (
    ScenarioError,
    question_to_json,
    scenario_from_json,
    scenario_to_json,
    step_from_json,
    step_to_json,
    _parse_question,
)

STATE_VERSION = 1


def justification_to_json(j):
    if isinstance(j, InitialPremise):
        return {"type": "initial_premise"}
    if isinstance(j, TautologyPremise):
        return {"type": "tautology_premise"}
    if isinstance(j, AskedFromRA):
        return {"type": "asked_from_ra"}
    if isinstance(j, PresuppositionOf):
        return {"type": "presupposition_of", "seq": j.seq}
    if isinstance(j, AnswerTo):
        return {"type": "answer_to", "seq": j.seq}
    if isinstance(j, Deduced):
        return {"type": "deduced", "step": step_to_json(j.step)}
    raise ScenarioError(f"unknown justification {j!r}")


def justification_from_json(doc, sig):
    kind = doc["type"]
    if kind == "initial_premise":
        return InitialPremise()
    if kind == "tautology_premise":
        return TautologyPremise()
    if kind == "asked_from_ra":
        return AskedFromRA()
    if kind == "presupposition_of":
        return PresuppositionOf(doc["seq"])
    if kind == "answer_to":
        return AnswerTo(doc["seq"])
    if kind == "deduced":
        return Deduced(step_from_json(doc["step"], sig))
    raise ScenarioError(f"unknown justification type {kind!r}")


def entry_to_json(e):
    doc = {
        "seq": e.seq,
        "side": e.side,
        "justification": justification_to_json(e.justification),
    }
    if e.side == SOURCE:
        doc["kind"] = "sentence"
        doc["content"] = print_formula(e.content)
    else:
        doc["kind"] = "question"
        doc["content"] = question_to_json(e.content)
    return doc


def entry_from_json(doc, sig):
    if doc["side"] == SOURCE:
        content = parse_formula(doc["content"], sig=sig, strict=False)
    else:
        content = _parse_question(doc["content"], sig, strict=False)
    return TableauEntry(
        seq=doc["seq"],
        side=doc["side"],
        content=content,
        justification=justification_from_json(doc["justification"], sig),
    )


def status_to_json(status):
    if isinstance(status, Solved):
        return {
            "state": "solved",
            "answer": print_formula(status.answer),
            "witness": status.witness.name if status.witness else None,
        }
    return {"state": "in_progress"}


def state_to_json(state):
    return {
        "state_version": STATE_VERSION,
        "scenario": state.scenario.name,
        "status": status_to_json(state.status),
        "entries": [entry_to_json(e) for e in state.entries],
        "open_questions": sorted(state.open_questions),
        "established": [
            print_formula(e.content) for e in state.entries if e.side == SOURCE
        ],
        "used_constants": sorted(state.used_constants),
    }


def state_from_json(doc, scenario):
    if doc.get("state_version") != STATE_VERSION:
        raise ScenarioError(f"unsupported state_version {doc.get('state_version')!r}")
    sig = scenario.signature
    entries = tuple(entry_from_json(ed, sig) for ed in doc["entries"])
    state = GameState(
        scenario=scenario,
        entries=entries,
        open_questions=frozenset(doc.get("open_questions", ())),
        status=IN_PROGRESS,
    )
    status_doc = doc.get("status", {})
    if status_doc.get("state") == "solved":
        from .logic import Const

        answer = parse_formula(status_doc["answer"], sig=sig, strict=False)
        witness = Const(status_doc["witness"]) if status_doc.get("witness") else None
        state = GameState(
            scenario=scenario,
            entries=entries,
            open_questions=state.open_questions,
            status=Solved(answer, witness),
        )
    return state


def session_to_json(session):
    return {
        "id": session.id,
        "created_at": session.created_at,
        "mode": session.mode,
        "scenario": scenario_to_json(session.state.scenario),
        "state": state_to_json(session.state),
    }


def session_state_from_json(doc):
    scenario = scenario_from_json(doc["scenario"], origin="session")
    return state_from_json(doc["state"], scenario)
