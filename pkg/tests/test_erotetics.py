import pytest
from hypothesis import given, settings

from iqgame.erotetics import (
    ASKABLE,
    Blocked,
    Direct,
    QuestionError,
    RangeOfAttention,
    Refusal,
    Wh,
    YesNo,
    askable,
    is_direct_answer,
    is_tautology_skeleton,
    presupposition,
    render_question,
    SkeletonTooLargeError,
)
from iqgame.logic import (
    Atom,
    Const,
    Equal,
    Exists,
    Not,
    Or,
    Var,
    parse_formula,
    print_formula,
)
from iqgame.rules import model_check_entailment

from conftest import formulas, sentences

x = Var("x")
t, o, d = Const("t"), Const("o"), Const("d")
EXISTS_DOG = parse_formula("exists x. D(x)")
UNIQUE = parse_formula("exists z. forall y. (!B(d,y) -> y = z)")


class TestConstruction:
    def test_yesno_body_must_be_sentence(self):
        with pytest.raises(QuestionError):
            YesNo(Atom("D", (x,)))

    def test_wh_matrix_free_vars(self):
        Wh("x", Atom("D", (x,)))
        with pytest.raises(QuestionError):
            Wh("x", EXISTS_DOG)
        with pytest.raises(QuestionError):
            Wh("x", parse_formula("B(x, y)", free_vars=("x", "y")))

    def test_range_rejects_duplicates(self):
        q = YesNo(EXISTS_DOG)
        with pytest.raises(QuestionError):
            RangeOfAttention((q, YesNo(EXISTS_DOG, label="other label")))

    def test_direct_answer_must_be_sentence(self):
        with pytest.raises(QuestionError):
            Direct(Atom("D", (x,)))


class TestPresupposition:
    def test_yesno(self):
        assert presupposition(YesNo(EXISTS_DOG)) == Or(EXISTS_DOG, Not(EXISTS_DOG))

    def test_wh(self):
        assert presupposition(Wh("x", Equal(x, t))) == Exists("x", Equal(x, t))

    def test_propositional(self):
        p = Atom("P")
        assert presupposition(YesNo(p)) == Or(p, Not(p))

    @given(sentences(depth=3))
    @settings(max_examples=100)
    def test_drop_the_question_mark(self, s):
        q = YesNo(s)
        assert render_question(q) == print_formula(presupposition(q)) + "?"


class TestDirectAnswers:
    def test_yes(self):
        assert is_direct_answer(YesNo(EXISTS_DOG), EXISTS_DOG)

    def test_no(self):
        body = parse_formula("B(d, t)")
        assert is_direct_answer(YesNo(body), Not(body))

    def test_wh_instance(self):
        assert is_direct_answer(Wh("x", Atom("D", (x,))), Atom("D", (d,)))

    def test_not_an_instance(self):
        assert not is_direct_answer(Wh("x", Atom("D", (x,))), EXISTS_DOG)

    @given(formulas(depth=2, bound=frozenset({"x"})))
    @settings(max_examples=40, deadline=None)
    def test_answer_entails_presupposition(self, matrix):
        from iqgame.logic import free_variables, substitute
        from hypothesis import assume

        assume(free_variables(matrix) == {"x"})
        q = Wh("x", matrix)
        answer = substitute(matrix, "x", d)
        assert is_direct_answer(q, answer)
        assert model_check_entailment([answer], presupposition(q), 3)


class TestAskable:
    def test_yesno_always(self):
        assert askable(YesNo(EXISTS_DOG), set()) is ASKABLE

    def test_wh_with_presupposition(self):
        q = Wh("x", Equal(x, t))
        assert askable(q, {Exists("x", Equal(x, t))}) is ASKABLE

    def test_wh_blocked(self):
        q = Wh("x", Atom("D", (x,)))
        result = askable(q, set())
        assert result == Blocked(EXISTS_DOG)

    @given(sentences(depth=3))
    @settings(max_examples=100)
    def test_monotone(self, extra):
        q = Wh("x", Atom("D", (x,)))
        small = {EXISTS_DOG}
        assert askable(q, small) is ASKABLE
        assert askable(q, small | {extra}) is ASKABLE


class TestTautologySkeleton:
    def test_excluded_middle(self):
        assert is_tautology_skeleton(Or(EXISTS_DOG, Not(EXISTS_DOG)))

    def test_atom_alone(self):
        assert not is_tautology_skeleton(Atom("P"))

    def test_unique_or_not(self):
        assert is_tautology_skeleton(Or(UNIQUE, Not(UNIQUE)))

    def test_quantified_subformulas_are_opaque(self):
        # exists x. D(x) and D(d) are distinct letters: no hidden FOL reasoning
        assert not is_tautology_skeleton(
            parse_formula("D(d) -> exists x. D(x)")
        )

    def test_too_large(self):
        f = Atom("P0")
        for i in range(1, 25):
            f = Or(f, Atom(f"P{i}"))
        with pytest.raises(SkeletonTooLargeError):
            is_tautology_skeleton(f)

    @given(sentences(depth=3))
    @settings(max_examples=150)
    def test_every_yesno_presupposition(self, s):
        assert is_tautology_skeleton(presupposition(YesNo(s)))
