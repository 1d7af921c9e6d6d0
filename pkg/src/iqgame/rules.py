"""Deductive move kernel: a closed rule set, a step checker, and a
brute-force finite-model entailment oracle used for soundness testing."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from math import prod

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
    LogicError,
    Not,
    Or,
    Term,
    constants_of,
    free_variables,
    is_sentence,
    predicates_of,
    print_formula,
    replace_constant,
    substitute,
)


class RuleError(LogicError):
    pass


class DanglingReferenceError(RuleError):
    pass


class SearchSpaceTooLargeError(LogicError):
    pass


class Rule(enum.Enum):
    EXISTENTIAL_INSTANTIATION = "existential_instantiation"
    UNIVERSAL_INSTANTIATION = "universal_instantiation"
    MODUS_PONENS = "modus_ponens"
    CONJUNCTION_ELIM_LEFT = "conjunction_elim_left"
    CONJUNCTION_ELIM_RIGHT = "conjunction_elim_right"
    CONJUNCTION_INTRO = "conjunction_intro"
    DISJUNCTIVE_SYLLOGISM = "disjunctive_syllogism"
    DOUBLE_NEGATION_ELIM = "double_negation_elim"
    EQUALITY_SUBSTITUTION = "equality_substitution"
    TAUTOLOGY_INTRO = "tautology_intro"


@dataclass(frozen=True)
class DeductionStep:
    rule: Rule
    premise_refs: tuple
    conclusion: Formula
    witness: Term | None = None

    def __post_init__(self):
        object.__setattr__(self, "premise_refs", tuple(self.premise_refs))
        if not is_sentence(self.conclusion):
            raise RuleError("step conclusion must be a sentence")
        if self.rule is not Rule.TAUTOLOGY_INTRO and not self.premise_refs:
            raise RuleError(f"{self.rule.value} needs at least one premise")


def _want(n, premises, rule):
    if len(premises) != n:
        raise RuleError(f"{rule.value} takes {n} premise(s), got {len(premises)}")


def apply_rule(rule, premises, witness=None, used_constants=frozenset(), conclusion=None):
    """Apply one deduction rule to sentence premises; returns the conclusion.

    witness: the fresh constant for EI, the instantiating closed term for
    UI, or the replacement side for equality substitution.  conclusion is
    consulted only by tautology introduction, which has no premises.
    """
    for p in premises:
        if not is_sentence(p):
            raise RuleError(f"premise is not a sentence: {print_formula(p)}")

    if rule is Rule.EXISTENTIAL_INSTANTIATION:
        _want(1, premises, rule)
        (p,) = premises
        if not isinstance(p, Exists):
            raise RuleError("existential instantiation needs an existential premise")
        if not isinstance(witness, Const):
            raise RuleError("existential instantiation needs a constant witness")
        if witness.name in used_constants:
            raise RuleError(f"witness constant {witness.name!r} is not fresh")
        return substitute(p.body, p.var, witness)

    if rule is Rule.UNIVERSAL_INSTANTIATION:
        _want(1, premises, rule)
        (p,) = premises
        if not isinstance(p, Forall):
            raise RuleError("universal instantiation needs a universal premise")
        if not isinstance(witness, Const):
            raise RuleError("universal instantiation needs a closed witness term")
        return substitute(p.body, p.var, witness)

    if rule is Rule.MODUS_PONENS:
        _want(2, premises, rule)
        for a, b in (premises, premises[::-1]):
            if isinstance(b, Implies) and b.left == a:
                return b.right
        raise RuleError("modus ponens needs a sentence and a matching implication")

    if rule is Rule.CONJUNCTION_ELIM_LEFT or rule is Rule.CONJUNCTION_ELIM_RIGHT:
        _want(1, premises, rule)
        (p,) = premises
        if not isinstance(p, And):
            raise RuleError("conjunction elimination needs a conjunctive premise")
        return p.left if rule is Rule.CONJUNCTION_ELIM_LEFT else p.right

    if rule is Rule.CONJUNCTION_INTRO:
        _want(2, premises, rule)
        return And(premises[0], premises[1])

    if rule is Rule.DISJUNCTIVE_SYLLOGISM:
        _want(2, premises, rule)
        for d, n in (premises, premises[::-1]):
            if isinstance(d, Or) and isinstance(n, Not):
                if n.inner == d.left:
                    return d.right
                if n.inner == d.right:
                    return d.left
        raise RuleError("disjunctive syllogism needs a disjunction and a matching negation")

    if rule is Rule.DOUBLE_NEGATION_ELIM:
        _want(1, premises, rule)
        (p,) = premises
        if isinstance(p, Not) and isinstance(p.inner, Not):
            return p.inner.inner
        raise RuleError("double negation elimination needs a doubly negated premise")

    if rule is Rule.EQUALITY_SUBSTITUTION:
        _want(2, premises, rule)
        if not isinstance(witness, Const):
            raise RuleError("equality substitution needs the replacement side as witness")
        for eq, phi in (premises, premises[::-1]):
            if not isinstance(eq, Equal):
                continue
            if witness == eq.right:
                return replace_constant(phi, eq.left, eq.right)
            if witness == eq.left:
                return replace_constant(phi, eq.right, eq.left)
        raise RuleError("equality substitution needs an equality premise containing the witness")

    if rule is Rule.TAUTOLOGY_INTRO:
        _want(0, premises, rule)
        if (
            conclusion is None
            or not isinstance(conclusion, Or)
            or conclusion.right != Not(conclusion.left)
        ):
            raise RuleError("tautology introduction concludes S | !S for a sentence S")
        return conclusion

    raise RuleError(f"unknown rule {rule!r}")


def check_step(established, step, used_constants=frozenset()):
    """True iff applying step.rule to the referenced established sentences
    yields exactly step.conclusion.  `established` maps entry sequence
    numbers to source-side sentences."""
    try:
        premises = [established[r] for r in step.premise_refs]
    except KeyError:
        return False
    try:
        got = apply_rule(
            step.rule,
            premises,
            witness=step.witness,
            used_constants=used_constants,
            conclusion=step.conclusion,
        )
    except RuleError:
        return False
    return got == step.conclusion


def fresh_constant(used, hint="c"):
    """hint itself if unused, else hint with the smallest numeric suffix."""
    if hint not in used:
        return hint
    i = 1
    while f"{hint}{i}" in used:
        i += 1
    return f"{hint}{i}"


# --- brute-force finite-model oracle ---

def _eval(f, n, consts, preds, env):
    if isinstance(f, Atom):
        args = tuple(env[a.name] if a.name in env else consts[a.name] for a in f.args)
        return args in preds[f.predicate]
    if isinstance(f, Equal):
        l = env[f.left.name] if f.left.name in env else consts[f.left.name]
        r = env[f.right.name] if f.right.name in env else consts[f.right.name]
        return l == r
    if isinstance(f, Not):
        return not _eval(f.inner, n, consts, preds, env)
    if isinstance(f, And):
        return _eval(f.left, n, consts, preds, env) and _eval(f.right, n, consts, preds, env)
    if isinstance(f, Or):
        return _eval(f.left, n, consts, preds, env) or _eval(f.right, n, consts, preds, env)
    if isinstance(f, Implies):
        return (not _eval(f.left, n, consts, preds, env)) or _eval(
            f.right, n, consts, preds, env
        )
    if isinstance(f, Iff):
        return _eval(f.left, n, consts, preds, env) == _eval(f.right, n, consts, preds, env)
    if isinstance(f, Forall):
        return all(
            _eval(f.body, n, consts, preds, {**env, f.var: d}) for d in range(n)
        )
    if isinstance(f, Exists):
        return any(
            _eval(f.body, n, consts, preds, {**env, f.var: d}) for d in range(n)
        )
    raise TypeError(f"not a formula: {f!r}")


def _symbols(formulas):
    consts = set()
    preds = {}
    for f in formulas:
        consts |= constants_of(f)
        for name, arity in predicates_of(f).items():
            if preds.setdefault(name, arity) != arity:
                raise LogicError(f"predicate {name!r} used with conflicting arities")
    return sorted(consts), dict(sorted(preds.items()))


def _interpretations(n, const_names, preds, budget=2 ** 24):
    tuple_lists = {p: list(itertools.product(range(n), repeat=ar)) for p, ar in preds.items()}
    space = n ** len(const_names) * prod(2 ** len(ts) for ts in tuple_lists.values())
    if space > budget:
        raise SearchSpaceTooLargeError(f"{space} interpretations at domain size {n}")
    for cvals in itertools.product(range(n), repeat=len(const_names)):
        consts = dict(zip(const_names, cvals))
        for choice in itertools.product(
            *(itertools.product((False, True), repeat=len(ts)) for ts in tuple_lists.values())
        ):
            preds_interp = {
                p: {t for t, keep in zip(ts, flags) if keep}
                for (p, ts), flags in zip(tuple_lists.items(), choice)
            }
            yield consts, preds_interp


def model_check_entailment(premises, conclusion, max_domain=3):
    """True iff every interpretation over domain sizes 1..max_domain that
    makes all premises true makes the conclusion true (equality is
    identity).  Exhaustive; for testing, not for proof search."""
    if max_domain > 4:
        raise SearchSpaceTooLargeError("max_domain must be at most 4")
    formulas = list(premises) + [conclusion]
    for f in formulas:
        if not is_sentence(f):
            raise LogicError(f"model checking needs sentences: {print_formula(f)}")
    const_names, preds = _symbols(formulas)
    for n in range(1, max_domain + 1):
        for consts, pinterp in _interpretations(n, const_names, preds):
            if all(_eval(p, n, consts, pinterp, {}) for p in premises):
                if not _eval(conclusion, n, consts, pinterp, {}):
                    return False
    return True


def find_model(sentences, max_domain=3):
    """True iff some interpretation over domain sizes 1..max_domain makes
    every sentence true."""
    for f in sentences:
        if not is_sentence(f):
            raise LogicError(f"model search needs sentences: {print_formula(f)}")
    const_names, preds = _symbols(sentences)
    for n in range(1, max_domain + 1):
        for consts, pinterp in _interpretations(n, const_names, preds):
            if all(_eval(p, n, consts, pinterp, {}) for p in sentences):
                return True
    return False
