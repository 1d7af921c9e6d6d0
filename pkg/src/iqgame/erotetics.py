"""Questions, presuppositions, direct answers, and askability.

Two question forms: a yes-no question over a sentence S (asked as
"S | !S?") and a wh-question "exists x. S(x)?" whose direct answers are
closed instances of the matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .logic import (
    And,
    Atom,
    Equal,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    LogicError,
    Not,
    Or,
    free_variables,
    is_sentence,
    match_instance,
    print_formula,
)


class QuestionError(LogicError):
    pass


class SkeletonTooLargeError(LogicError):
    pass


@dataclass(frozen=True)
class YesNo:
    body: Formula
    label: str | None = None

    def __post_init__(self):
        if not is_sentence(self.body):
            raise QuestionError(f"yes-no body must be a sentence: {print_formula(self.body)}")


@dataclass(frozen=True)
class Wh:
    var: str
    matrix: Formula
    label: str | None = None
    compound: bool = False

    def __post_init__(self):
        fv = free_variables(self.matrix)
        if fv != {self.var}:
            raise QuestionError(
                f"wh matrix must have exactly {{{self.var}}} free, has {sorted(fv)}"
            )


Question = YesNo | Wh


def question_kind(q):
    return "yesno" if isinstance(q, YesNo) else "wh"


def same_question(a, b):
    """Structural identity ignoring display labels."""
    if isinstance(a, YesNo) and isinstance(b, YesNo):
        return a.body == b.body
    if isinstance(a, Wh) and isinstance(b, Wh):
        return a.var == b.var and a.matrix == b.matrix and a.compound == b.compound
    return False


@dataclass(frozen=True)
class RangeOfAttention:
    questions: tuple

    def __post_init__(self):
        object.__setattr__(self, "questions", tuple(self.questions))
        for i, q in enumerate(self.questions):
            for other in self.questions[i + 1:]:
                if same_question(q, other):
                    raise QuestionError(f"duplicate question in range: {render_question(q)}")

    def __iter__(self):
        return iter(self.questions)

    def __contains__(self, q):
        return any(same_question(q, other) for other in self.questions)


@dataclass(frozen=True)
class Direct:
    content: Formula

    def __post_init__(self):
        if not is_sentence(self.content):
            raise QuestionError(f"answer must be a sentence: {print_formula(self.content)}")


@dataclass(frozen=True)
class Refusal:
    pass


REFUSAL = Refusal()
Answer = Direct | Refusal


def presupposition(q):
    """Drop the question mark: S | !S for yes-no, exists x. S for wh."""
    if isinstance(q, YesNo):
        return Or(q.body, Not(q.body))
    return Exists(q.var, q.matrix)


def render_question(q):
    """Canonical question text: the presupposition followed by "?"."""
    return print_formula(presupposition(q)) + "?"


def question_key(q):
    """Stable oracle-script key: kind tag plus canonical rendering."""
    return f"{question_kind(q)}:{render_question(q)}"


def is_direct_answer(q, f):
    if not is_sentence(f):
        raise QuestionError("direct answers must be sentences")
    if isinstance(q, YesNo):
        return f == q.body or f == Not(q.body)
    return match_instance(q.matrix, q.var, f) is not None


@dataclass(frozen=True)
class Askable:
    pass


@dataclass(frozen=True)
class Blocked:
    missing: Formula


ASKABLE = Askable()


def askable(q, established):
    """Yes-no questions are always askable (tautological presupposition);
    a wh-question needs its presupposition among the established sentences."""
    if isinstance(q, YesNo):
        return ASKABLE
    need = presupposition(q)
    if need in set(established):
        return ASKABLE
    return Blocked(need)


def _skeleton_letters(f, table):
    if isinstance(f, (Atom, Equal, Forall, Exists)):
        table.setdefault(f, len(table))
    elif isinstance(f, Not):
        _skeleton_letters(f.inner, table)
    elif isinstance(f, (And, Or, Implies, Iff)):
        _skeleton_letters(f.left, table)
        _skeleton_letters(f.right, table)
    else:
        raise TypeError(f"not a formula: {f!r}")


def is_tautology_skeleton(f, max_letters=20):
    """Propositional-skeleton tautology test.

    Each distinct atom, equality, or quantified subformula becomes one
    propositional letter; the skeleton is then truth-tabled.  Sound but
    incomplete for first-order validity; exact for S | !S shapes.
    """
    table = {}
    _skeleton_letters(f, table)
    if len(table) > max_letters:
        raise SkeletonTooLargeError(f"{len(table)} letters exceeds limit of {max_letters}")

    def ev(f, row):
        if isinstance(f, (Atom, Equal, Forall, Exists)):
            return row[table[f]]
        if isinstance(f, Not):
            return not ev(f.inner, row)
        if isinstance(f, And):
            return ev(f.left, row) and ev(f.right, row)
        if isinstance(f, Or):
            return ev(f.left, row) or ev(f.right, row)
        if isinstance(f, Implies):
            return (not ev(f.left, row)) or ev(f.right, row)
        if isinstance(f, Iff):
            return ev(f.left, row) == ev(f.right, row)
        raise TypeError(f"not a formula: {f!r}")

    return all(ev(f, row) for row in itertools.product((False, True), repeat=len(table)))
