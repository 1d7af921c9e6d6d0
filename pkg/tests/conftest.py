"""Shared generators: hypothesis strategies for formulas and a seeded
random sentence generator for rule-soundness sweeps."""

from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from iqgame.erotetics import RangeOfAttention
from iqgame.logic import (
    And,
    Atom,
    Const,
    Equal,
    Exists,
    Forall,
    Iff,
    Implies,
    Not,
    Or,
    Var,
)
from iqgame.scenarios import Oracle, Scenario
from iqgame.logic import Signature

PREDICATES = {"P": 0, "D": 1, "B": 2}
CONSTANT_NAMES = ("a", "b", "t", "o", "5474")
VARIABLE_NAMES = ("x", "y", "z")

BINARY_OPS = (And, Or, Implies, Iff)


def _terms(bound):
    options = [st.sampled_from(CONSTANT_NAMES).map(Const)]
    if bound:
        options.append(st.sampled_from(sorted(bound)).map(Var))
    return st.one_of(options)


def _atoms(bound):
    def build(name):
        arity = PREDICATES[name]
        if arity == 0:
            return st.just(Atom(name, ()))
        return st.tuples(*[_terms(bound)] * arity).map(lambda args: Atom(name, args))

    atom = st.sampled_from(sorted(PREDICATES)).flatmap(build)
    equal = st.tuples(_terms(bound), _terms(bound)).map(lambda p: Equal(*p))
    return st.one_of(atom, equal)


def formulas(depth=6, bound=frozenset()):
    """Closed-by-construction formula strategy (every variable bound)."""
    if depth == 0:
        return _atoms(bound)
    sub = formulas(depth - 1, bound)
    quantified = st.sampled_from(VARIABLE_NAMES).flatmap(
        lambda v: st.tuples(
            st.sampled_from((Forall, Exists)), formulas(depth - 1, bound | {v})
        ).map(lambda p: p[0](v, p[1]))
    )
    return st.one_of(
        _atoms(bound),
        sub.map(Not),
        st.tuples(st.sampled_from(BINARY_OPS), sub, sub).map(lambda p: p[0](p[1], p[2])),
        quantified,
    )


def sentences(depth=4):
    return formulas(depth=depth)


# --- seeded random generator, for large deterministic sweeps ---

class SentenceGen:
    """Random closed formulas over a small unary-heavy signature."""

    def __init__(self, seed=0, predicates=None, constants=("a", "b")):
        self.rng = random.Random(seed)
        self.predicates = predicates or {"P": 1, "Q": 1, "R": 2}
        self.constants = constants

    def term(self, bound):
        if bound and self.rng.random() < 0.5:
            return Var(self.rng.choice(bound))
        return Const(self.rng.choice(self.constants))

    def atom(self, bound):
        if self.rng.random() < 0.15:
            return Equal(self.term(bound), self.term(bound))
        weights = [(name, 1 if arity > 1 else 4) for name, arity in self.predicates.items()]
        total = sum(w for _, w in weights)
        pick = self.rng.uniform(0, total)
        for name, w in weights:
            pick -= w
            if pick <= 0:
                break
        arity = self.predicates[name]
        return Atom(name, tuple(self.term(bound) for _ in range(arity)))

    def formula(self, depth, bound=()):
        if depth == 0 or self.rng.random() < 0.3:
            return self.atom(bound)
        choice = self.rng.random()
        if choice < 0.2:
            return Not(self.formula(depth - 1, bound))
        if choice < 0.35:
            var = self.rng.choice(["x", "y"])
            kind = self.rng.choice([Forall, Exists])
            return kind(var, self.formula(depth - 1, bound + (var,)))
        op = self.rng.choice([And, Or, Implies, Iff])
        return op(self.formula(depth - 1, bound), self.formula(depth - 1, bound))

    def sentence(self, depth=2):
        return self.formula(depth)


# --- scenario helpers ---

def make_scenario(
    premises=(),
    principal=None,
    ra=(),
    script=None,
    eligible=(),
    moves=None,
    name="toy",
    principal_only=False,
    signature=None,
):
    return Scenario(
        name=name,
        signature=signature or Signature(),
        answer_eligible=frozenset(eligible),
        premises=tuple(premises),
        principal=principal,
        principal_only=principal_only,
        ra=RangeOfAttention(tuple(ra)),
        oracle=Oracle(script or {}),
        moves=tuple(moves) if moves is not None else None,
    )


@pytest.fixture
def holmes():
    from iqgame.scenarios import find_scenario

    return find_scenario("holmes")


@pytest.fixture
def mendel():
    from iqgame.scenarios import find_scenario

    return find_scenario("mendel")
