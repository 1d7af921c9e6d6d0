#!/usr/bin/env python3
"""Sweep randomly generated rule applications against the finite-model oracle.

Every non-EI rule conclusion must be entailed by its premises in all models
with up to --domain elements; existential instantiation must preserve
satisfiability (a fresh witness cannot make a satisfiable premise set
unsatisfiable).

Usage: python3 scripts/rule_soundness_sweep.py [--count N] [--seed S] [--domain D]
"""

import argparse
import time

from iqgame.logic import And, Const, Equal, Exists, Forall, Implies, Not, Or
from iqgame.rules import Rule, apply_rule, find_model, model_check_entailment

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from conftest import SentenceGen  # noqa: E402


def instances(rule, gen, count):
    for _ in range(count):
        if rule is Rule.MODUS_PONENS:
            phi, psi = gen.sentence(2), gen.sentence(2)
            yield [phi, Implies(phi, psi)], None, None
        elif rule in (Rule.CONJUNCTION_ELIM_LEFT, Rule.CONJUNCTION_ELIM_RIGHT):
            yield [And(gen.sentence(2), gen.sentence(2))], None, None
        elif rule is Rule.CONJUNCTION_INTRO:
            yield [gen.sentence(2), gen.sentence(2)], None, None
        elif rule is Rule.DISJUNCTIVE_SYLLOGISM:
            phi, psi = gen.sentence(2), gen.sentence(2)
            negated = phi if gen.rng.random() < 0.5 else psi
            yield [Or(phi, psi), Not(negated)], None, None
        elif rule is Rule.DOUBLE_NEGATION_ELIM:
            yield [Not(Not(gen.sentence(2)))], None, None
        elif rule is Rule.EQUALITY_SUBSTITUTION:
            eq = Equal(Const("a"), Const("b"))
            yield [eq, gen.sentence(2)], Const(gen.rng.choice(("a", "b"))), None
        elif rule is Rule.UNIVERSAL_INSTANTIATION:
            yield [Forall("x", gen.formula(2, bound=("x",)))], Const(
                gen.rng.choice(gen.constants)
            ), None
        elif rule is Rule.TAUTOLOGY_INTRO:
            s = gen.sentence(2)
            yield [], None, Or(s, Not(s))
        elif rule is Rule.EXISTENTIAL_INSTANTIATION:
            yield [Exists("x", gen.formula(2, bound=("x",)))], Const("w"), None


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--domain", type=int, default=3)
    args = parser.parse_args()

    failures = 0
    for rule in Rule:
        gen = SentenceGen(seed=args.seed + hash(rule.value) % 10_000, predicates={"P": 1, "Q": 1})
        start = time.time()
        bad = 0
        for premises, witness, conclusion in instances(rule, gen, args.count):
            got = apply_rule(rule, premises, witness=witness, conclusion=conclusion)
            if rule is Rule.EXISTENTIAL_INSTANTIATION:
                ok = not find_model(premises, args.domain) or find_model(
                    list(premises) + [got], args.domain
                )
            else:
                ok = model_check_entailment(premises, got, args.domain)
            bad += not ok
        failures += bad
        print(f"{rule.value:28s} {args.count - bad}/{args.count} sound  ({time.time() - start:.2f}s)")
    print("all rules sound" if failures == 0 else f"{failures} FAILURES")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
