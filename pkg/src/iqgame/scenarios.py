"""Scenario files: schema, validation, scripted oracles, builtins, and
the dominant/recessive ratio report."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from importlib import resources
from pathlib import Path

from .engine import AnswerMove, AskMove, DeduceMove
from .erotetics import (
    Direct,
    Question,
    QuestionError,
    RangeOfAttention,
    REFUSAL,
    Refusal,
    Wh,
    YesNo,
    question_key,
    render_question,
)
from .logic import (
    Const,
    LogicError,
    Signature,
    is_sentence,
    parse_formula,
    print_formula,
)
from .rules import DeductionStep, Rule

SCENARIO_VERSION = 1


class ScenarioError(Exception):
    pass


@dataclass(frozen=True)
class Oracle:
    """Deterministic scripted answer table; unscripted questions are refused."""

    script: dict = field(default_factory=dict)

    def answer(self, q):
        return self.script.get(question_key(q), REFUSAL)


@dataclass(frozen=True)
class Scenario:
    name: str
    signature: Signature
    answer_eligible: frozenset
    premises: tuple
    principal: Question
    principal_only: bool
    ra: RangeOfAttention
    oracle: Oracle
    moves: tuple | None = None
    notes: str = ""
    inquirer: str | None = None


def ratio_report(n_dominant, n_recessive):
    """Dominant/recessive quotient, half-up rounded to two decimals,
    rendered as "R : 1"."""
    if n_dominant <= 0 or n_recessive <= 0:
        raise ScenarioError("counts must be positive")
    q = (Decimal(n_dominant) / Decimal(n_recessive)).quantize(
        Decimal("0.01"), rounding=ROUND_HALF_UP
    )
    return f"{q} : 1"


# --- JSON (de)serialization ---

def _parse_question(doc, sig, strict=True):
    kind = doc.get("kind")
    label = doc.get("label")
    if kind == "yesno":
        body = parse_formula(doc["formula"], sig=sig, strict=strict)
        return YesNo(body, label=label)
    if kind == "wh":
        var = doc["var"]
        matrix = parse_formula(doc["formula"], sig=sig, strict=strict, free_vars=(var,))
        return Wh(var, matrix, label=label, compound=bool(doc.get("compound", False)))
    raise ScenarioError(f"question kind must be 'yesno' or 'wh', got {kind!r}")


def question_to_json(q):
    if isinstance(q, YesNo):
        doc = {"kind": "yesno", "formula": print_formula(q.body)}
    else:
        doc = {"kind": "wh", "var": q.var, "formula": print_formula(q.matrix)}
        if q.compound:
            doc["compound"] = True
    if q.label:
        doc["label"] = q.label
    return doc


def _parse_answer(value, sig):
    if value == "refuse":
        return REFUSAL
    return Direct(parse_formula(value, sig=sig, strict=False))


def answer_to_json(a):
    if isinstance(a, Refusal):
        return "refuse"
    return print_formula(a.content)


def step_from_json(doc, sig):
    try:
        rule = Rule(doc["rule"])
    except ValueError:
        raise ScenarioError(f"unknown rule {doc.get('rule')!r}") from None
    witness = Const(doc["witness"]) if doc.get("witness") is not None else None
    return DeductionStep(
        rule=rule,
        premise_refs=tuple(doc.get("premises", ())),
        witness=witness,
        conclusion=parse_formula(doc["conclusion"], sig=sig, strict=False),
    )


def step_to_json(step):
    doc = {
        "rule": step.rule.value,
        "premises": list(step.premise_refs),
        "conclusion": print_formula(step.conclusion),
    }
    if step.witness is not None:
        doc["witness"] = step.witness.name
    return doc


def _parse_move(doc, sig):
    kind = doc.get("type")
    if kind == "ask":
        return AskMove(_parse_question(doc["question"], sig, strict=False))
    if kind == "answer":
        answer = _parse_answer(doc["answer"], sig) if "answer" in doc else None
        return AnswerMove(_parse_question(doc["question"], sig, strict=False), answer)
    if kind == "deduce":
        return DeduceMove(step_from_json(doc, sig))
    raise ScenarioError(f"move type must be ask/answer/deduce, got {kind!r}")


def move_to_json(move):
    if isinstance(move, AskMove):
        return {"type": "ask", "question": question_to_json(move.question)}
    if isinstance(move, AnswerMove):
        doc = {"type": "answer", "question": question_to_json(move.question)}
        if move.answer is not None:
            doc["answer"] = answer_to_json(move.answer)
        return doc
    return {"type": "deduce", **step_to_json(move.step)}


def scenario_from_json(doc, origin="<inline>"):
    try:
        version = doc.get("scenario_version")
        if version != SCENARIO_VERSION:
            raise ScenarioError(f"unsupported scenario_version {version!r}")
        sig_doc = doc.get("signature", {})
        sig = Signature(
            predicates=dict(sig_doc.get("predicates", {})),
            constants=frozenset(sig_doc.get("constants", ())),
        )
        premises = []
        for text in doc.get("premises", ()):
            f = parse_formula(text, sig=sig, strict=True)
            if not is_sentence(f):
                raise ScenarioError(f"premise is not a sentence: {text}")
            premises.append(f)
        principal_doc = doc["principal"]
        principal = _parse_question(principal_doc, sig)
        principal_only = bool(principal_doc.get("principal_only", False))
        ra = RangeOfAttention(
            tuple(_parse_question(qd, sig) for qd in doc.get("ra", ()))
        )
        if not principal_only and principal not in ra:
            raise ScenarioError(
                "principal question must be in the range of attention or "
                "flagged principal_only"
            )
        script = {}
        for entry in doc.get("oracle", ()):
            q = _parse_question(entry["question"], sig, strict=False)
            key = question_key(q)
            if key in script:
                raise ScenarioError(f"duplicate oracle entry for {render_question(q)}")
            script[key] = _parse_answer(entry["answer"], sig)
        oracle = Oracle(script)
        moves = None
        if "moves" in doc:
            moves = tuple(_parse_move(md, sig) for md in doc["moves"])
        scenario = Scenario(
            name=doc["name"],
            signature=sig,
            answer_eligible=frozenset(doc.get("answer_eligible", ())),
            premises=tuple(premises),
            principal=principal,
            principal_only=principal_only,
            ra=ra,
            oracle=oracle,
            moves=moves,
            notes=doc.get("notes", ""),
            inquirer=doc.get("inquirer"),
        )
        _validate_script(scenario)
        return scenario
    except (KeyError, TypeError) as exc:
        raise ScenarioError(f"{origin}: malformed scenario document ({exc!r})") from exc
    except (LogicError, QuestionError) as exc:
        raise ScenarioError(f"{origin}: {exc}") from exc


def _validate_script(scenario):
    """Scripted asks must reference range questions; scripted answers
    must agree with the oracle script."""
    for i, move in enumerate(scenario.moves or (), start=1):
        if isinstance(move, AskMove):
            q = move.question
            from .erotetics import same_question

            if q not in scenario.ra and not same_question(q, scenario.principal):
                raise ScenarioError(
                    f"move {i} asks a question outside the range of attention: "
                    f"{render_question(q)}"
                )
        elif isinstance(move, AnswerMove) and move.answer is not None:
            scripted = scenario.oracle.answer(move.question)
            if scripted != move.answer:
                raise ScenarioError(
                    f"move {i} records an answer that disagrees with the oracle "
                    f"script for {render_question(move.question)}"
                )


def scenario_to_json(scenario):
    doc = {
        "scenario_version": SCENARIO_VERSION,
        "name": scenario.name,
        "signature": {
            "predicates": dict(sorted(scenario.signature.predicates.items())),
            "constants": sorted(scenario.signature.constants),
        },
        "answer_eligible": sorted(scenario.answer_eligible),
        "premises": [print_formula(p) for p in scenario.premises],
        "principal": {
            **question_to_json(scenario.principal),
            **({"principal_only": True} if scenario.principal_only else {}),
        },
        "ra": [question_to_json(q) for q in scenario.ra],
        "notes": scenario.notes,
    }
    # Oracle keys are canonical renderings; reconstruct full question docs
    # from the range of attention so the round trip is faithful.
    oracle_docs = []
    by_key = {question_key(q): q for q in scenario.ra}
    by_key.setdefault(question_key(scenario.principal), scenario.principal)
    for key, a in scenario.oracle.script.items():
        q = by_key.get(key)
        if q is None:
            raise ScenarioError(f"oracle entry {key!r} matches no known question")
        oracle_docs.append({"question": question_to_json(q), "answer": answer_to_json(a)})
    doc["oracle"] = oracle_docs
    if scenario.moves is not None:
        doc["moves"] = [move_to_json(m) for m in scenario.moves]
    if scenario.inquirer:
        doc["inquirer"] = scenario.inquirer
    return doc


def load_scenario(path):
    path = Path(path)
    if not path.exists():
        raise ScenarioError(f"no such scenario file: {path}")
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: invalid JSON ({exc})") from exc
    return scenario_from_json(doc, origin=str(path))


def save_scenario(scenario, path):
    Path(path).write_text(
        json.dumps(scenario_to_json(scenario), indent=2) + "\n", encoding="utf-8"
    )


BUILTIN_NAMES = ("holmes", "mendel")

SCENARIO_PATH_ENV = "IQGAME_SCENARIO_PATH"


def builtin_scenarios():
    return [_load_builtin(name) for name in BUILTIN_NAMES]


def _load_builtin(name):
    data = resources.files("iqgame.data").joinpath(f"{name}.json").read_text(encoding="utf-8")
    return scenario_from_json(json.loads(data), origin=f"builtin:{name}")


def find_scenario(name_or_path):
    """Resolve a builtin name, a direct path, or a name under the
    directories listed in IQGAME_SCENARIO_PATH."""
    if name_or_path in BUILTIN_NAMES:
        return _load_builtin(name_or_path)
    p = Path(name_or_path)
    if p.exists():
        return load_scenario(p)
    for directory in os.environ.get(SCENARIO_PATH_ENV, "").split(os.pathsep):
        if not directory:
            continue
        candidate = Path(directory) / f"{name_or_path}.json"
        if candidate.exists():
            return load_scenario(candidate)
    raise ScenarioError(f"unknown scenario {name_or_path!r}")
