"""First-order logic with equality: terms, formulas, parsing, printing.

No function symbols and no arithmetic: numerals like 5474 are ordinary
constants whose name is the digit string.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
# capture-avoiding renames append apostrophes, which only ever appear
# on bound variables, never in source text
VAR_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*'*\Z")


class LogicError(Exception):
    pass


class ParseError(LogicError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ArityError(LogicError):
    pass


class UnknownSymbolError(LogicError):
    pass


# --- terms ---

class Term:
    __slots__ = ()


@dataclass(frozen=True)
class Var(Term):
    name: str

    def __post_init__(self):
        if not VAR_RE.match(self.name):
            raise LogicError(f"bad variable name: {self.name!r}")


@dataclass(frozen=True)
class Const(Term):
    name: str

    def __post_init__(self):
        if not IDENT_RE.match(self.name) and not self.name.isdigit():
            raise LogicError(f"bad constant name: {self.name!r}")


# --- formulas ---

class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class Atom(Formula):
    predicate: str
    args: tuple = ()


@dataclass(frozen=True)
class Equal(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Not(Formula):
    inner: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


QUANTIFIERS = (Forall, Exists)
BINARY = {And: "&", Or: "|", Implies: "->", Iff: "<->"}


@dataclass(frozen=True)
class Signature:
    """Declared predicates (name -> arity) and constants."""

    predicates: dict = field(default_factory=dict)
    constants: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "constants", frozenset(self.constants))
        for name, arity in self.predicates.items():
            if not IDENT_RE.match(name):
                raise LogicError(f"bad predicate name: {name!r}")
            if arity < 0:
                raise LogicError(f"negative arity for {name}")
        for name in self.constants:
            if not IDENT_RE.match(name) and not name.isdigit():
                raise LogicError(f"bad constant name: {name!r}")
        overlap = set(self.predicates) & set(self.constants)
        if overlap:
            raise LogicError(f"names used as both predicate and constant: {sorted(overlap)}")


# --- tokenizer ---

_TOKEN_RE = re.compile(
    r"""\s*(?:
        (?P<number>[0-9]+(?:,[0-9]+)*)
      | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<sym><->|->|\||&|!|\(|\)|\.|,|=)
    )""",
    re.VERBOSE,
)

_KEYWORDS = {"forall", "exists"}


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == m.start():
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r}", pos)
        if m.lastgroup == "number":
            tokens.append(("number", m.group("number").replace(",", ""), m.start("number")))
        elif m.lastgroup == "ident":
            word = m.group("ident")
            kind = "keyword" if word in _KEYWORDS else "ident"
            tokens.append((kind, word, m.start("ident")))
        else:
            tokens.append(("sym", m.group("sym"), m.start("sym")))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, sig=None, strict=False, free_vars=()):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.sig = sig
        self.strict = strict
        self.bound = list(free_vars)

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        if tok[0] != "eof":
            self.pos += 1
        return tok

    def expect(self, value):
        kind, val, at = self.peek()
        if val != value or kind == "eof":
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", at)
        return self.advance()

    def parse(self):
        f = self.iff()
        kind, val, at = self.peek()
        if kind != "eof":
            raise ParseError(f"unexpected trailing input {val!r}", at)
        return f

    def iff(self):
        f = self.imp()
        while self.peek()[1] == "<->":
            self.advance()
            f = Iff(f, self.imp())
        return f

    def imp(self):
        f = self.disj()
        if self.peek()[1] == "->":
            self.advance()
            return Implies(f, self.imp())
        return f

    def disj(self):
        f = self.conj()
        while self.peek()[1] == "|":
            self.advance()
            f = Or(f, self.conj())
        return f

    def conj(self):
        f = self.unary()
        while self.peek()[1] == "&":
            self.advance()
            f = And(f, self.unary())
        return f

    def unary(self):
        kind, val, at = self.peek()
        if val == "!":
            self.advance()
            return Not(self.unary())
        if kind == "keyword":
            self.advance()
            vkind, vname, vat = self.advance()
            if vkind != "ident":
                raise ParseError(f"expected variable after {val!r}", vat)
            self.expect(".")
            self.bound.append(vname)
            try:
                body = self.unary()
            finally:
                self.bound.pop()
            return Forall(vname, body) if val == "forall" else Exists(vname, body)
        return self.atom()

    def atom(self):
        kind, val, at = self.peek()
        if val == "(":
            self.advance()
            f = self.iff()
            self.expect(")")
            return f
        if kind == "number":
            left = self.term()
            self.expect("=")
            return Equal(left, self.term())
        if kind != "ident":
            raise ParseError(f"expected formula, found {val or 'end of input'!r}", at)
        self.advance()
        nxt = self.peek()
        if nxt[1] == "(":
            self.advance()
            args = [self.term()]
            while self.peek()[1] == ",":
                self.advance()
                args.append(self.term())
            self.expect(")")
            return self._atom(val, tuple(args), at)
        if nxt[1] == "=":
            self.advance()
            return Equal(self._resolve_term(val), self.term())
        return self._atom(val, (), at)

    def term(self):
        kind, val, at = self.advance()
        if kind == "number":
            return Const(val)
        if kind != "ident":
            raise ParseError(f"expected term, found {val or 'end of input'!r}", at)
        return self._resolve_term(val)

    def _resolve_term(self, name):
        if name in self.bound:
            return Var(name)
        if self.sig is not None and self.strict and name not in self.sig.constants:
            raise UnknownSymbolError(f"unknown constant {name!r}")
        return Const(name)

    def _atom(self, pred, args, at):
        if self.sig is not None:
            if pred not in self.sig.predicates:
                raise UnknownSymbolError(f"unknown predicate {pred!r}")
            want = self.sig.predicates[pred]
            if want != len(args):
                raise ArityError(f"{pred} expects {want} argument(s), got {len(args)}")
        return Atom(pred, args)


def parse_formula(text, sig=None, strict=False, free_vars=()):
    """Parse ASCII formula text.

    Identifiers bound by an enclosing quantifier (or listed in free_vars)
    become variables; all other identifiers and numerals become
    constants.  With a signature, every atom is arity-checked; with
    strict=True, constants must be declared too.
    """
    return _Parser(text, sig=sig, strict=strict, free_vars=free_vars).parse()


def parse_term(text):
    tokens = _tokenize(text)
    kind, val, at = tokens[0]
    if kind not in ("ident", "number") or tokens[1][0] != "eof":
        raise ParseError(f"expected a single term", at)
    return Const(val)


# --- printing ---

_LEVEL = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Forall: 5, Exists: 5, Atom: 6, Equal: 6}

_UNICODE = {"&": "∧", "|": "∨", "->": "→", "<->": "↔"}


def print_term(t):
    return t.name


def print_formula(f, unicode=False):
    """Canonical text with minimal parentheses; parse(print(f)) == f."""

    def go(f, minimum):
        level = _LEVEL[type(f)]
        if isinstance(f, Atom):
            s = f.predicate
            if f.args:
                s += "(" + ", ".join(print_term(a) for a in f.args) + ")"
        elif isinstance(f, Equal):
            s = f"{print_term(f.left)} = {print_term(f.right)}"
        elif isinstance(f, Not):
            s = ("¬" if unicode else "!") + go(f.inner, 5)
        elif isinstance(f, Forall):
            s = ("∀" if unicode else "forall ") + f.var + ". " + go(f.body, 5)
        elif isinstance(f, Exists):
            s = ("∃" if unicode else "exists ") + f.var + ". " + go(f.body, 5)
        elif isinstance(f, Implies):
            op = _UNICODE["->"] if unicode else "->"
            s = f"{go(f.left, 3)} {op} {go(f.right, 2)}"
        elif isinstance(f, Iff):
            op = _UNICODE["<->"] if unicode else "<->"
            s = f"{go(f.left, 1)} {op} {go(f.right, 2)}"
        else:
            op = _UNICODE[BINARY[type(f)]] if unicode else BINARY[type(f)]
            s = f"{go(f.left, level)} {op} {go(f.right, level + 1)}"
        if level < minimum:
            return "(" + s + ")"
        return s

    return go(f, 0)


# --- structural queries ---

def term_variables(t):
    return {t.name} if isinstance(t, Var) else set()


def free_variables(f):
    if isinstance(f, Atom):
        out = set()
        for a in f.args:
            out |= term_variables(a)
        return out
    if isinstance(f, Equal):
        return term_variables(f.left) | term_variables(f.right)
    if isinstance(f, Not):
        return free_variables(f.inner)
    if isinstance(f, (And, Or, Implies, Iff)):
        return free_variables(f.left) | free_variables(f.right)
    if isinstance(f, QUANTIFIERS):
        return free_variables(f.body) - {f.var}
    raise TypeError(f"not a formula: {f!r}")


def constants_of(f):
    if isinstance(f, Atom):
        return {a.name for a in f.args if isinstance(a, Const)}
    if isinstance(f, Equal):
        return {t.name for t in (f.left, f.right) if isinstance(t, Const)}
    if isinstance(f, Not):
        return constants_of(f.inner)
    if isinstance(f, (And, Or, Implies, Iff)):
        return constants_of(f.left) | constants_of(f.right)
    if isinstance(f, QUANTIFIERS):
        return constants_of(f.body)
    raise TypeError(f"not a formula: {f!r}")


def predicates_of(f):
    """All predicate symbols with arities, as a dict."""
    out = {}

    def walk(f):
        if isinstance(f, Atom):
            out[f.predicate] = len(f.args)
        elif isinstance(f, Not):
            walk(f.inner)
        elif isinstance(f, (And, Or, Implies, Iff)):
            walk(f.left)
            walk(f.right)
        elif isinstance(f, QUANTIFIERS):
            walk(f.body)

    walk(f)
    return out


def all_variables(f):
    """Every variable name occurring in f, bound or free."""
    if isinstance(f, Atom):
        out = set()
        for a in f.args:
            out |= term_variables(a)
        return out
    if isinstance(f, Equal):
        return term_variables(f.left) | term_variables(f.right)
    if isinstance(f, Not):
        return all_variables(f.inner)
    if isinstance(f, (And, Or, Implies, Iff)):
        return all_variables(f.left) | all_variables(f.right)
    if isinstance(f, QUANTIFIERS):
        return all_variables(f.body) | {f.var}
    raise TypeError(f"not a formula: {f!r}")


def is_sentence(f):
    return not free_variables(f)


# --- substitution ---

def _subst_term(t, var, replacement):
    if isinstance(t, Var) and t.name == var:
        return replacement
    return t


def substitute(f, var, t):
    """Replace free occurrences of var by term t, capture-avoiding.

    Bound variables that would capture a variable of t are renamed by
    appending apostrophes until unused.
    """
    if isinstance(f, Atom):
        return Atom(f.predicate, tuple(_subst_term(a, var, t) for a in f.args))
    if isinstance(f, Equal):
        return Equal(_subst_term(f.left, var, t), _subst_term(f.right, var, t))
    if isinstance(f, Not):
        return Not(substitute(f.inner, var, t))
    if isinstance(f, (And, Or, Implies, Iff)):
        return type(f)(substitute(f.left, var, t), substitute(f.right, var, t))
    if isinstance(f, QUANTIFIERS):
        if f.var == var:
            return f
        if var not in free_variables(f.body):
            return f
        if f.var in term_variables(t):
            taken = all_variables(f.body) | term_variables(t) | {var}
            fresh = f.var
            while fresh in taken:
                fresh += "'"
            body = substitute(f.body, f.var, Var(fresh))
            return type(f)(fresh, substitute(body, var, t))
        return type(f)(f.var, substitute(f.body, var, t))
    raise TypeError(f"not a formula: {f!r}")


def replace_constant(f, old, new):
    """Replace every occurrence of constant old by term new."""

    def on_term(t):
        return new if t == old else t

    if isinstance(f, Atom):
        return Atom(f.predicate, tuple(on_term(a) for a in f.args))
    if isinstance(f, Equal):
        return Equal(on_term(f.left), on_term(f.right))
    if isinstance(f, Not):
        return Not(replace_constant(f.inner, old, new))
    if isinstance(f, (And, Or, Implies, Iff)):
        return type(f)(replace_constant(f.left, old, new), replace_constant(f.right, old, new))
    if isinstance(f, QUANTIFIERS):
        return type(f)(f.var, replace_constant(f.body, old, new))
    raise TypeError(f"not a formula: {f!r}")


# --- equality-symmetric comparison and instance matching ---

def equal_mod_symmetry(f, g):
    """Structural equality treating a = b and b = a as the same atom."""
    if type(f) is not type(g):
        return False
    if isinstance(f, Equal):
        return (f.left, f.right) in ((g.left, g.right), (g.right, g.left))
    if isinstance(f, Atom):
        return f == g
    if isinstance(f, Not):
        return equal_mod_symmetry(f.inner, g.inner)
    if isinstance(f, (And, Or, Implies, Iff)):
        return equal_mod_symmetry(f.left, g.left) and equal_mod_symmetry(f.right, g.right)
    if isinstance(f, QUANTIFIERS):
        return f.var == g.var and equal_mod_symmetry(f.body, g.body)
    raise TypeError(f"not a formula: {f!r}")


def match_instance(matrix, var, candidate):
    """The closed term u with substitute(matrix, var, u) == candidate, if any.

    Equality atoms compare modulo symmetry.  The witness must occur in
    the candidate, so it suffices to try each of its constants.
    """
    for name in sorted(constants_of(candidate)):
        u = Const(name)
        if equal_mod_symmetry(substitute(matrix, var, u), candidate):
            return u
    return None


def match_instances(body, variables, candidate):
    """Simultaneous instance match: an assignment {var: Const} making
    body equal candidate (modulo equality symmetry), or None."""
    import itertools

    names = sorted(constants_of(candidate))
    for combo in itertools.product(names, repeat=len(variables)):
        assignment = dict(zip(variables, combo))
        instance = body
        for v, n in assignment.items():
            instance = substitute(instance, v, Const(n))
        if equal_mod_symmetry(instance, candidate):
            return {v: Const(n) for v, n in assignment.items()}
    return None
