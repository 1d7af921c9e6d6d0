"""Command-line interface: parse, presup, replay, play, serve, export."""

from __future__ import annotations

import json
import sys

import click

from . import engine
from .engine import DeduceMove, EngineError, Solved
from .erotetics import Direct, QuestionError, Refusal, render_question
from .logic import Const, LogicError, parse_formula, print_formula
from .rules import DeductionStep, Rule, RuleError
from .scenarios import ScenarioError, _parse_question, find_scenario
from .serialize import session_state_from_json, state_to_json

ERRORS = (EngineError, ScenarioError, LogicError, QuestionError, RuleError)


def _fail(exc):
    code = getattr(exc, "code", "error")
    click.echo(f"error[{code}]: {exc}", err=True)
    sys.exit(1)


@click.group()
def main():
    """Interrogative games over first-order logic."""


@main.command("parse")
@click.argument("formula")
def parse_cmd(formula):
    """Parse FORMULA and print its canonical form."""
    try:
        click.echo(print_formula(parse_formula(formula)))
    except ERRORS as exc:
        _fail(exc)


@main.command("presup")
@click.argument("question_json")
def presup_cmd(question_json):
    """Print the presupposition of a question given as JSON
    ({"kind": "yesno"|"wh", "formula": ..., "var": ...})."""
    from .erotetics import presupposition

    try:
        doc = json.loads(question_json)
    except json.JSONDecodeError as exc:
        _fail(ScenarioError(f"invalid question JSON: {exc}"))
    try:
        q = _parse_question(doc, None, strict=False)
        click.echo(print_formula(presupposition(q)))
    except ERRORS as exc:
        _fail(exc)


@main.command("replay")
@click.argument("scenario")
@click.option("--strict/--lenient", default=True, show_default=True)
@click.option(
    "--format", "fmt", type=click.Choice(["text", "markdown", "json"]), default="text"
)
def replay_cmd(scenario, strict, fmt):
    """Replay SCENARIO's scripted moves and print the tableau."""
    try:
        sc = find_scenario(scenario)
        state, report = engine.replay(sc, strict=strict)
    except ERRORS as exc:
        _fail(exc)
    if fmt == "json":
        doc = state_to_json(state)
        doc["tableau"] = engine.tableau_json(state)
        click.echo(json.dumps(doc, indent=2))
    else:
        click.echo(engine.render_tableau(state, fmt))
    if not report.ok:
        for record in report.records:
            if record.error:
                click.echo(f"move {record.index} failed: {record.error}", err=True)
        sys.exit(1)


@main.command("export")
@click.argument("session_json", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--format", "fmt", type=click.Choice(["text", "markdown", "json"]), default="text"
)
def export_cmd(session_json, fmt):
    """Render the tableau of a persisted session document."""
    try:
        with open(session_json, encoding="utf-8") as fh:
            doc = json.load(fh)
        state = session_state_from_json(doc)
    except (json.JSONDecodeError, KeyError) as exc:
        _fail(ScenarioError(f"malformed session document: {exc}"))
    except ERRORS as exc:
        _fail(exc)
    click.echo(engine.render_tableau(state, fmt))


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--persist", default=None, type=click.Path(file_okay=False))
def serve_cmd(host, port, persist):
    """Run the HTTP session service."""
    import uvicorn

    from .service import SessionStore, create_app

    app = create_app(SessionStore(persist_dir=persist))
    uvicorn.run(app, host=host, port=port, log_level="warning")


def _show_questions(state):
    items = engine.available_questions(state)
    for i, item in enumerate(items, start=1):
        q = item.question
        label = f" -- {q.label}" if q.label else ""
        if item.answered:
            status = "answered"
        elif item.open_seq is not None:
            status = f"open at {item.open_seq}"
        elif isinstance(item.status, engine.Blocked):
            status = f"blocked, needs {print_formula(item.status.missing)}"
        else:
            status = "askable"
        click.echo(f"  [{i}] {render_question(q)}{label}  ({status})")
    return items


def _play_deduce(state):
    rule_names = [r.value for r in Rule]
    rule = click.prompt("rule", type=click.Choice(rule_names))
    refs = click.prompt("premise entry numbers (comma-separated, empty for none)", default="")
    premise_refs = tuple(int(x) for x in refs.replace(" ", "").split(",") if x)
    witness_text = click.prompt("witness constant (empty for none)", default="")
    witness = Const(witness_text) if witness_text else None
    conclusion = parse_formula(click.prompt("conclusion"))
    step = DeductionStep(
        rule=Rule(rule), premise_refs=premise_refs, witness=witness, conclusion=conclusion
    )
    return engine.deduce(state, step)


@main.command("play")
@click.argument("scenario")
def play_cmd(scenario):
    """Play SCENARIO interactively as the Inquirer."""
    try:
        sc = find_scenario(scenario)
        state = engine.new_game(sc)
    except ERRORS as exc:
        _fail(exc)
    click.echo(engine.render_tableau(state, "text"))
    while True:
        if isinstance(state.status, Solved):
            witness = state.status.witness
            suffix = f" (witness: {witness.name})" if witness else ""
            click.echo(f"SOLVED: {print_formula(state.status.answer)}{suffix}")
            return
        click.echo("\nQuestions in the range of attention:")
        items = _show_questions(state)
        command = click.prompt("command (ask N | deduce | show | quit)", default="show")
        try:
            if command == "quit":
                return
            elif command == "show":
                click.echo(engine.render_tableau(state, "text"))
            elif command.startswith("ask"):
                idx = int(command.split()[1]) - 1
                if not 0 <= idx < len(items):
                    click.echo("no such question", err=True)
                    continue
                q = items[idx].question
                state = engine.ask(state, q)
                seq = engine.find_open_question(state, q)
                answer = sc.oracle.answer(q)
                if isinstance(answer, Refusal):
                    state = engine.record_answer(state, seq, answer)
                    click.echo("The source refuses to answer.")
                else:
                    state = engine.record_answer(state, seq, answer)
                    click.echo(f"Answer: {print_formula(answer.content)}")
                click.echo(engine.render_tableau(state, "text"))
            elif command == "deduce":
                state = _play_deduce(state)
                click.echo(engine.render_tableau(state, "text"))
            else:
                click.echo("commands: ask N, deduce, show, quit", err=True)
        except ERRORS as exc:
            click.echo(f"rejected: {exc}", err=True)
        except (ValueError, IndexError):
            click.echo("could not parse that command", err=True)


if __name__ == "__main__":
    main()
