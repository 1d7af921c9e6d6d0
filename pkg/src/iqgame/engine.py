"""Two-column interrogative tableau state machine.

Established sentences sit on the source-of-information side, questions
on the inquirer side.  Internally entries carry one dense sequence
number; the classic odd/even display numbering is computed at render
time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .erotetics import (
    ASKABLE,
    Askable,
    Blocked,
    Direct,
    Question,
    Refusal,
    Wh,
    YesNo,
    askable,
    is_direct_answer,
    presupposition,
    render_question,
    same_question,
)
from .logic import Const, Exists, Formula, constants_of, match_instance, print_formula
from .rules import DeductionStep, RuleError, apply_rule


class EngineError(Exception):
    """Base for rejected moves; `code` is the machine-readable reason."""

    code = "engine_error"


class NotInRangeError(EngineError):
    code = "not_in_range"


class BlockedQuestionError(EngineError):
    code = "blocked"

    def __init__(self, missing):
        super().__init__(
            f"presupposition not yet established: {print_formula(missing)}"
        )
        self.missing = missing


class NotOpenError(EngineError):
    code = "not_open"


class NotADirectAnswerError(EngineError):
    code = "not_a_direct_answer"


class InvalidStepError(EngineError):
    code = "invalid_step"


SOURCE = "source"
INQUIRER = "inquirer"


# --- justifications ---

@dataclass(frozen=True)
class InitialPremise:
    pass


@dataclass(frozen=True)
class TautologyPremise:
    pass


@dataclass(frozen=True)
class AskedFromRA:
    pass


@dataclass(frozen=True)
class PresuppositionOf:
    seq: int


@dataclass(frozen=True)
class AnswerTo:
    seq: int


@dataclass(frozen=True)
class Deduced:
    step: DeductionStep


@dataclass(frozen=True)
class TableauEntry:
    seq: int
    side: str
    content: object  # Formula on the source side, Question on the inquirer side
    justification: object


# --- scripted moves (also the wire-level move vocabulary) ---

@dataclass(frozen=True)
class AskMove:
    question: Question


@dataclass(frozen=True)
class AnswerMove:
    question: Question
    answer: object | None = None  # None: consult the scenario oracle


@dataclass(frozen=True)
class DeduceMove:
    step: DeductionStep


@dataclass(frozen=True)
class InProgress:
    pass


@dataclass(frozen=True)
class Solved:
    answer: Formula
    witness: Const | None


IN_PROGRESS = InProgress()


@dataclass(frozen=True)
class GameState:
    scenario: object
    entries: tuple = ()
    open_questions: frozenset = frozenset()
    status: object = IN_PROGRESS

    @property
    def established(self):
        return frozenset(e.content for e in self.entries if e.side == SOURCE)

    @property
    def established_by_seq(self):
        return {e.seq: e.content for e in self.entries if e.side == SOURCE}

    @property
    def used_constants(self):
        out = set()
        for e in self.entries:
            if e.side == SOURCE:
                out |= constants_of(e.content)
        return frozenset(out)

    @property
    def next_seq(self):
        return len(self.entries) + 1

    def entry(self, seq):
        if 1 <= seq <= len(self.entries):
            return self.entries[seq - 1]
        return None


def _append(state, side, content, justification):
    entry = TableauEntry(state.next_seq, side, content, justification)
    return replace(state, entries=state.entries + (entry,)), entry


def _after_move(state):
    if state.status != IN_PROGRESS:
        return state
    hit = check_solved(state)
    if hit is None:
        return state
    answer, witness = hit
    return replace(state, status=Solved(answer, witness))


def new_game(scenario):
    """Seed the source column with the declared premises, then ask the
    principal question."""
    state = GameState(scenario=scenario)
    for premise in scenario.premises:
        state, _ = _append(state, SOURCE, premise, InitialPremise())
    return ask(state, scenario.principal)


def _in_range(state, q):
    return q in state.scenario.ra or same_question(q, state.scenario.principal)


def ask(state, q):
    if not _in_range(state, q):
        raise NotInRangeError(f"question not in the range of attention: {render_question(q)}")
    status = askable(q, state.established)
    if isinstance(status, Blocked):
        raise BlockedQuestionError(status.missing)
    if isinstance(q, YesNo) and presupposition(q) not in state.established:
        state, _ = _append(state, SOURCE, presupposition(q), TautologyPremise())
    state, entry = _append(state, INQUIRER, q, AskedFromRA())
    state = replace(state, open_questions=state.open_questions | {entry.seq})
    return _after_move(state)


@dataclass(frozen=True)
class AvailableQuestion:
    question: Question
    status: object  # Askable | Blocked
    answered: bool
    open_seq: int | None


def available_questions(state):
    """Every range-of-attention question with its current askability."""
    answered = set()
    open_by_question = {}
    for e in state.entries:
        if e.side != INQUIRER:
            continue
        if e.seq in state.open_questions:
            open_by_question.setdefault(id_key := _qkey(e.content), e.seq)
        else:
            answered.add(_qkey(e.content))
    out = []
    established = state.established
    for q in state.scenario.ra:
        out.append(
            AvailableQuestion(
                question=q,
                status=askable(q, established),
                answered=_qkey(q) in answered,
                open_seq=open_by_question.get(_qkey(q)),
            )
        )
    return out


def _qkey(q):
    if isinstance(q, YesNo):
        return ("yesno", q.body)
    return ("wh", q.var, q.matrix, q.compound)


def _strip_existentials(f):
    variables = []
    while isinstance(f, Exists):
        variables.append(f.var)
        f = f.body
    return variables, f


def _check_compound_answer(state, q, content):
    """A compound wh-answer fully instantiates the presupposition's
    matrix; every constant assigned to a stripped variable must be fresh."""
    from .logic import match_instances

    variables, body = _strip_existentials(presupposition(q))
    assignment = match_instances(body, variables, content)
    if assignment is None:
        return False
    used = state.used_constants
    for term in assignment.values():
        if term.name in used:
            raise NotADirectAnswerError(
                f"compound answer reuses constant {term.name!r}; fresh constants required"
            )
    return True


def record_answer(state, question_seq, answer):
    entry = state.entry(question_seq)
    if entry is None or entry.side != INQUIRER:
        raise NotOpenError(f"entry {question_seq} is not a question")
    if question_seq not in state.open_questions:
        raise NotOpenError(f"question {question_seq} is not open")
    q = entry.content
    if isinstance(answer, Refusal):
        state = replace(state, open_questions=state.open_questions - {question_seq})
        return _after_move(state)
    content = answer.content
    ok = is_direct_answer(q, content)
    if not ok and isinstance(q, Wh) and q.compound:
        ok = _check_compound_answer(state, q, content)
    if not ok:
        raise NotADirectAnswerError(
            f"{print_formula(content)} is not a direct answer to {render_question(q)}"
        )
    state, _ = _append(state, SOURCE, content, AnswerTo(question_seq))
    state = replace(state, open_questions=state.open_questions - {question_seq})
    return _after_move(state)


def deduce(state, step):
    by_seq = state.established_by_seq
    premises = []
    for ref in step.premise_refs:
        if state.entry(ref) is None:
            raise InvalidStepError(f"premise reference {ref} is dangling")
        if ref not in by_seq:
            raise InvalidStepError(f"entry {ref} is a question, not an established sentence")
        premises.append(by_seq[ref])
    try:
        got = apply_rule(
            step.rule,
            premises,
            witness=step.witness,
            used_constants=state.used_constants,
            conclusion=step.conclusion,
        )
    except RuleError as exc:
        raise InvalidStepError(str(exc)) from exc
    if got != step.conclusion:
        raise InvalidStepError(
            f"rule yields {print_formula(got)}, step claims {print_formula(step.conclusion)}"
        )
    state, _ = _append(state, SOURCE, step.conclusion, Deduced(step))
    return _after_move(state)


def check_solved(state):
    """The first established sentence that conclusively answers the
    principal question, as (answer, witness)."""
    principal = state.scenario.principal
    eligible = state.scenario.answer_eligible
    for e in state.entries:
        if e.side != SOURCE:
            continue
        f = e.content
        if isinstance(principal, YesNo):
            if is_direct_answer(principal, f):
                return f, None
        else:
            u = match_instance(principal.matrix, principal.var, f)
            if u is not None and u.name in eligible:
                return f, u
    return None


def apply_move(state, move):
    """Dispatch one scripted move; answers with no scripted content
    consult the scenario oracle."""
    if isinstance(move, AskMove):
        return ask(state, move.question)
    if isinstance(move, AnswerMove):
        seq = find_open_question(state, move.question)
        if seq is None:
            raise NotOpenError(f"no open question matches {render_question(move.question)}")
        answer = move.answer
        if answer is None:
            answer = state.scenario.oracle.answer(move.question)
        return record_answer(state, seq, answer)
    if isinstance(move, DeduceMove):
        return deduce(state, move.step)
    raise EngineError(f"unknown move {move!r}")


def find_open_question(state, q):
    for e in state.entries:
        if e.side == INQUIRER and e.seq in state.open_questions and same_question(e.content, q):
            return e.seq
    return None


# --- replay ---

@dataclass(frozen=True)
class MoveRecord:
    index: int
    description: str
    new_seqs: tuple
    error: str | None


@dataclass(frozen=True)
class Report:
    records: tuple
    final_status: object

    @property
    def ok(self):
        return all(r.error is None for r in self.records)


def _describe(move):
    if isinstance(move, AskMove):
        return f"ask {render_question(move.question)}"
    if isinstance(move, AnswerMove):
        if isinstance(move.answer, Direct):
            return f"answer {print_formula(move.answer.content)}"
        if isinstance(move.answer, Refusal):
            return f"refuse {render_question(move.question)}"
        return f"answer {render_question(move.question)} via oracle"
    return f"deduce {move.step.rule.value} -> {print_formula(move.step.conclusion)}"


def replay(scenario, strict=True):
    """Run the scenario's scripted move list; strict mode raises on the
    first rejected move, lenient mode records and skips it."""
    state = new_game(scenario)
    records = []
    for i, move in enumerate(scenario.moves or (), start=1):
        before = len(state.entries)
        try:
            state = apply_move(state, move)
            error = None
        except EngineError as exc:
            if strict:
                exc.args = (f"move {i} ({_describe(move)}): {exc}",)
                raise
            error = str(exc)
        new_seqs = tuple(e.seq for e in state.entries[before:])
        records.append(MoveRecord(i, _describe(move), new_seqs, error))
    return state, Report(tuple(records), state.status)


# --- rendering ---

def display_rows(state):
    """Pair each source entry with an immediately following inquirer
    entry (premise+principal, tautology+question); everything else gets a
    blank opposite cell.  Left cells are numbered 1,3,5,... and right
    cells 2,4,6,..."""
    rows = []
    entries = state.entries
    i = 0
    while i < len(entries):
        e = entries[i]
        if (
            e.side == SOURCE
            and i + 1 < len(entries)
            and entries[i + 1].side == INQUIRER
        ):
            rows.append((e, entries[i + 1]))
            i += 2
        elif e.side == SOURCE:
            rows.append((e, None))
            i += 1
        else:
            rows.append((None, e))
            i += 1
    out = []
    for k, (left, right) in enumerate(rows):
        out.append(
            {
                "left_no": 2 * k + 1,
                "left": print_formula(left.content) if left else "",
                "left_seq": left.seq if left else None,
                "right_no": 2 * k + 2,
                "right": render_question(right.content) if right else "",
                "right_seq": right.seq if right else None,
            }
        )
    return out


def _inquirer_title(state):
    name = getattr(state.scenario, "inquirer", None)
    return f"INQUIRER: {name.upper()}" if name else "INQUIRER"


def tableau_json(state):
    status = state.status
    if isinstance(status, Solved):
        status_doc = {
            "state": "solved",
            "answer": print_formula(status.answer),
            "witness": status.witness.name if status.witness else None,
        }
    else:
        status_doc = {"state": "in_progress"}
    return {
        "tableau_version": 1,
        "scenario": getattr(state.scenario, "name", None),
        "inquirer": _inquirer_title(state),
        "rows": display_rows(state),
        "status": status_doc,
    }


def render_tableau(state, fmt="text"):
    if fmt == "json":
        return json.dumps(tableau_json(state), indent=2)
    rows = display_rows(state)
    header = ("#", "SOURCE OF INFORMATION", _inquirer_title(state), "#")
    cells = [header] + [
        (str(r["left_no"]), r["left"], r["right"], str(r["right_no"])) for r in rows
    ]
    if fmt == "markdown":
        def esc(cell):
            return cell.replace("|", "\\|")

        lines = ["| " + " | ".join(header) + " |", "|---|---|---|---|"]
        for row in cells[1:]:
            lines.append("| " + " | ".join(esc(c) for c in row) + " |")
    elif fmt == "text":
        widths = [max(len(row[i]) for row in cells) for i in range(4)]
        lines = []
        for j, row in enumerate(cells):
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
            if j == 0:
                lines.append("-" * (sum(widths) + 6))
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(state.status, Solved):
        lines.append("")
        lines.append(f"SOLVED: {print_formula(state.status.answer)}")
    return "\n".join(lines)
