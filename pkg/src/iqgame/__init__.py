"""Interrogative games over classical first-order logic: questions with
computable presuppositions, a range-of-attention discipline, deductive
move rules, and two-column tableaux."""

from .logic import (
    And,
    Atom,
    Const,
    Equal,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Signature,
    Term,
    Var,
    free_variables,
    is_sentence,
    match_instance,
    parse_formula,
    print_formula,
    substitute,
)
from .erotetics import (
    Askable,
    Blocked,
    Direct,
    Question,
    RangeOfAttention,
    Refusal,
    Wh,
    YesNo,
    askable,
    is_direct_answer,
    is_tautology_skeleton,
    presupposition,
    render_question,
)
from .rules import (
    DeductionStep,
    Rule,
    apply_rule,
    check_step,
    fresh_constant,
    model_check_entailment,
)
from .engine import (
    GameState,
    Solved,
    ask,
    available_questions,
    check_solved,
    deduce,
    new_game,
    record_answer,
    render_tableau,
    replay,
)
from .scenarios import (
    Oracle,
    Scenario,
    builtin_scenarios,
    find_scenario,
    load_scenario,
    ratio_report,
    save_scenario,
)

__version__ = "0.1.0"
