"""The KISP language: lexer, parser, and tree-walking evaluator.

KISP is a small LISP dialect for querying family trees.  Programs are
sequences of terms; a parenthesized term applies a function to
arguments.  ``define`` is restricted to the top level, lambdas may be
niladic, and the nine keywords (true, false, define, lambda, people,
now, void, if, vacant) can never be rebound.  ``and``/``or`` are
short-circuit special forms and are likewise reserved.

Values are Python natives where possible: numerals are ints (arbitrary
precision), strings are str, lists are tuples, dates are
``datetime.date``; persons, closures, and builtins get small wrapper
types.  ``void`` is a singleton distinct from every other value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from datetime import date
from typing import Callable, Optional, Sequence, Union

from . import temporal
from .temporal import Timeline, format_date, parse_date
from .tree import FamilyTree, Sex

KEYWORDS = frozenset(
    {"true", "false", "define", "lambda", "people", "now", "void", "if", "vacant"}
)
# and/or are evaluated as short-circuit special forms, so they cannot be
# bound either; they are reserved on top of the nine keywords.
RESERVED = KEYWORDS | {"and", "or"}

_NUMERAL_RE = re.compile(r"^-?[0-9]+$")
_NAME_RE = re.compile(r"^[A-Za-z]+(?:-[A-Za-z]+)*\??$")
_OPERATOR_NAMES = frozenset({"+", "-", "*", "<", "="})


# --- errors ------------------------------------------------------------------


class KispError(Exception):
    """Base class for all KISP failures; carries a source position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, col {col})")
        self.message = message
        self.line = line
        self.col = col


class KispLexError(KispError):
    pass


class KispParseError(KispError):
    pass


class KispRuntimeError(KispError):
    pass


# --- lexer -------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # "(", ")", "numeral", "string", "name"
    value: object
    line: int
    col: int


def tokenize(src: str) -> list[Token]:
    tokens: list[Token] = []
    i, n = 0, len(src)
    line, col = 1, 1

    def step(k: int = 1) -> None:
        nonlocal i, line, col
        for _ in range(k):
            if i < n and src[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        c = src[i]
        if c in " \t\r\n":
            step()
            continue
        if c in "()":
            tokens.append(Token(c, c, line, col))
            step()
            continue
        if c == "'":
            start_line, start_col = line, col
            step()
            chars: list[str] = []
            while True:
                if i >= n or src[i] == "\n":
                    raise KispLexError("unterminated string", start_line, start_col)
                ch = src[i]
                if ch == "'":
                    step()
                    break
                if not (0x20 <= ord(ch) <= 0x7E):
                    raise KispLexError(
                        f"illegal character {ch!r} in string", line, col
                    )
                chars.append(ch)
                step()
            tokens.append(Token("string", "".join(chars), start_line, start_col))
            continue
        # a word: everything up to the next delimiter
        start_line, start_col = line, col
        j = i
        while j < n and src[j] not in " \t\r\n()'":
            j += 1
        word = src[i:j]
        step(j - i)
        if _NUMERAL_RE.match(word):
            tokens.append(Token("numeral", int(word), start_line, start_col))
        elif word in _OPERATOR_NAMES or _NAME_RE.match(word):
            tokens.append(Token("name", word, start_line, start_col))
        else:
            raise KispLexError(f"invalid token {word!r}", start_line, start_col)
    return tokens


# --- AST ---------------------------------------------------------------------


class KispExpr:
    __slots__ = ()


@dataclass(frozen=True)
class Literal(KispExpr):
    value: object
    line: int
    col: int


@dataclass(frozen=True)
class Reference(KispExpr):
    name: str
    line: int
    col: int


@dataclass(frozen=True)
class Lambda(KispExpr):
    params: tuple[str, ...]
    body: KispExpr
    line: int
    col: int


@dataclass(frozen=True)
class Define(KispExpr):
    name: str
    value: KispExpr
    line: int
    col: int


@dataclass(frozen=True)
class If(KispExpr):
    cond: KispExpr
    then: KispExpr
    otherwise: KispExpr
    line: int
    col: int


@dataclass(frozen=True)
class ShortCircuit(KispExpr):
    op: str  # "and" | "or"
    operands: tuple[KispExpr, ...]
    line: int
    col: int


@dataclass(frozen=True)
class Application(KispExpr):
    head: KispExpr
    args: tuple[KispExpr, ...]
    line: int
    col: int


# --- values ------------------------------------------------------------------


class Void:
    _instance: Optional["Void"] = None

    def __new__(cls) -> "Void":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "void"


VOID = Void()

VACANT: tuple = ()


@dataclass(frozen=True)
class PersonRef:
    id: str


@dataclass(frozen=True)
class Closure:
    params: tuple[str, ...]
    body: KispExpr
    env: "Environment"


@dataclass(frozen=True)
class Builtin:
    name: str
    min_args: int
    max_args: Optional[int]  # None = variadic
    fn: Callable[["Interpreter", list, KispExpr], object]


KispValue = Union[
    bool, int, str, Void, tuple, PersonRef, date, Closure, Builtin
]


# --- parser ------------------------------------------------------------------


def parse_program(src: str) -> list[KispExpr]:
    """Parse a whole program: a sequence of top-level terms."""
    return _Parser(tokenize(src)).program()


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _eof_pos(self) -> tuple[int, int]:
        if self.tokens:
            last = self.tokens[-1]
            return last.line, last.col
        return 1, 1

    def program(self) -> list[KispExpr]:
        out = []
        while self.peek() is not None:
            out.append(self.term(top_level=True))
        return out

    def term(self, top_level: bool = False) -> KispExpr:
        tok = self.peek()
        if tok is None:
            line, col = self._eof_pos()
            raise KispParseError("unexpected end of input", line, col)
        if tok.kind == ")":
            raise KispParseError("unexpected ')'", tok.line, tok.col)
        if tok.kind == "numeral" or tok.kind == "string":
            self.advance()
            return Literal(tok.value, tok.line, tok.col)
        if tok.kind == "name":
            self.advance()
            return self._atom(tok)
        # tok.kind == "("
        return self._form(top_level)

    def _atom(self, tok: Token) -> KispExpr:
        name = tok.value
        if name == "true":
            return Literal(True, tok.line, tok.col)
        if name == "false":
            return Literal(False, tok.line, tok.col)
        if name == "void":
            return Literal(VOID, tok.line, tok.col)
        if name == "vacant":
            return Literal(VACANT, tok.line, tok.col)
        if name in ("define", "lambda", "if"):
            raise KispParseError(
                f"keyword {name!r} cannot be used as a reference", tok.line, tok.col
            )
        if name in ("and", "or"):
            raise KispParseError(
                f"reserved word {name!r} cannot be used as a reference",
                tok.line,
                tok.col,
            )
        # people and now are keywords but legal in expression position;
        # they resolve through the global frame like any reference.
        return Reference(name, tok.line, tok.col)  # type: ignore[arg-type]

    def _form(self, top_level: bool) -> KispExpr:
        open_tok = self.advance()  # "("
        tok = self.peek()
        if tok is None:
            raise KispParseError("unbalanced '('", open_tok.line, open_tok.col)
        if tok.kind == ")":
            self.advance()
            raise KispParseError(
                "'()' is not a well-formed term", open_tok.line, open_tok.col
            )
        if tok.kind == "name" and tok.value == "define":
            if not top_level:
                raise KispParseError(
                    "'define' is only allowed at the top level", tok.line, tok.col
                )
            return self._define(open_tok)
        if tok.kind == "name" and tok.value == "lambda":
            return self._lambda(open_tok)
        if tok.kind == "name" and tok.value == "if":
            return self._if(open_tok)
        if tok.kind == "name" and tok.value in ("and", "or"):
            return self._short_circuit(open_tok)
        head = self.term()
        args = []
        while (nxt := self.peek()) is not None and nxt.kind != ")":
            args.append(self.term())
        self._close(open_tok)
        return Application(head, tuple(args), open_tok.line, open_tok.col)

    def _close(self, open_tok: Token) -> None:
        tok = self.peek()
        if tok is None:
            raise KispParseError("unbalanced '('", open_tok.line, open_tok.col)
        assert tok.kind == ")"
        self.advance()

    def _binding_name(self, what: str) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != "name":
            line, col = (tok.line, tok.col) if tok else self._eof_pos()
            raise KispParseError(f"{what} must be a reference", line, col)
        if tok.value in RESERVED:
            raise KispParseError(
                f"cannot bind reserved name {tok.value!r}", tok.line, tok.col
            )
        self.advance()
        return tok

    def _define(self, open_tok: Token) -> KispExpr:
        self.advance()  # "define"
        name_tok = self._binding_name("defined name")
        value = self.term()
        self._ensure_close(open_tok, "'define' takes a name and one term")
        return Define(name_tok.value, value, open_tok.line, open_tok.col)  # type: ignore[arg-type]

    def _lambda(self, open_tok: Token) -> KispExpr:
        self.advance()  # "lambda"
        tok = self.peek()
        if tok is None or tok.kind != "(":
            line, col = (tok.line, tok.col) if tok else self._eof_pos()
            raise KispParseError("lambda needs a parameter list", line, col)
        self.advance()
        params: list[str] = []
        while (nxt := self.peek()) is not None and nxt.kind != ")":
            param_tok = self._binding_name("lambda parameter")
            if param_tok.value in params:
                raise KispParseError(
                    f"duplicate parameter {param_tok.value!r}",
                    param_tok.line,
                    param_tok.col,
                )
            params.append(param_tok.value)  # type: ignore[arg-type]
        if self.peek() is None:
            raise KispParseError("unbalanced '('", open_tok.line, open_tok.col)
        self.advance()  # close parameter list
        body = self.term()
        self._ensure_close(open_tok, "lambda takes a parameter list and one body term")
        return Lambda(tuple(params), body, open_tok.line, open_tok.col)

    def _if(self, open_tok: Token) -> KispExpr:
        self.advance()  # "if"
        cond = self.term()
        then = self.term()
        otherwise = self.term()
        self._ensure_close(open_tok, "'if' takes exactly three terms")
        return If(cond, then, otherwise, open_tok.line, open_tok.col)

    def _short_circuit(self, open_tok: Token) -> KispExpr:
        op_tok = self.advance()
        operands = []
        while (nxt := self.peek()) is not None and nxt.kind != ")":
            operands.append(self.term())
        if len(operands) < 2:
            raise KispParseError(
                f"'{op_tok.value}' needs at least two operands",
                op_tok.line,
                op_tok.col,
            )
        self._close(open_tok)
        return ShortCircuit(
            op_tok.value, tuple(operands), open_tok.line, open_tok.col  # type: ignore[arg-type]
        )

    def _ensure_close(self, open_tok: Token, message: str) -> None:
        tok = self.peek()
        if tok is None:
            raise KispParseError("unbalanced '('", open_tok.line, open_tok.col)
        if tok.kind != ")":
            raise KispParseError(message, tok.line, tok.col)
        self.advance()


# --- environments ------------------------------------------------------------


class Environment:
    __slots__ = ("bindings", "parent")

    def __init__(self, parent: Optional["Environment"] = None):
        self.bindings: dict[str, object] = {}
        self.parent = parent

    def lookup(self, name: str, node: KispExpr) -> object:
        env: Optional[Environment] = self
        while env is not None:
            if name in env.bindings:
                return env.bindings[name]
            env = env.parent
        raise KispRuntimeError(f"unbound reference {name!r}", node.line, node.col)  # type: ignore[attr-defined]

    def bind(self, name: str, value: object) -> None:
        self.bindings[name] = value


# --- value helpers -----------------------------------------------------------


def kisp_equal(a: object, b: object) -> bool:
    """Structural equality; values of different types are unequal."""
    if isinstance(a, bool) or isinstance(b, bool):
        return isinstance(a, bool) and isinstance(b, bool) and a == b
    if isinstance(a, int) and isinstance(b, int):
        return a == b
    if isinstance(a, str) and isinstance(b, str):
        return a == b
    if isinstance(a, Void) and isinstance(b, Void):
        return True
    if isinstance(a, date) and isinstance(b, date):
        return a == b
    if isinstance(a, PersonRef) and isinstance(b, PersonRef):
        return a.id == b.id
    if isinstance(a, tuple) and isinstance(b, tuple):
        return len(a) == len(b) and all(kisp_equal(x, y) for x, y in zip(a, b))
    if isinstance(a, (Closure, Builtin)) and isinstance(b, (Closure, Builtin)):
        return a is b
    return False


def format_value(value: object) -> str:
    """Canonical printed form of a KISP value."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return f"'{value}'"
    if isinstance(value, Void):
        return "void"
    if isinstance(value, date):
        return format_date(value)
    if isinstance(value, PersonRef):
        return value.id
    if isinstance(value, tuple):
        return "(" + " ".join(format_value(v) for v in value) + ")"
    if isinstance(value, Closure):
        return "<function>"
    if isinstance(value, Builtin):
        return f"<builtin {value.name}>"
    raise TypeError(f"not a KISP value: {value!r}")


def type_name(value: object) -> str:
    if isinstance(value, bool):
        return "boolean"
    if isinstance(value, int):
        return "numeral"
    if isinstance(value, str):
        return "string"
    if isinstance(value, Void):
        return "void"
    if isinstance(value, date):
        return "date"
    if isinstance(value, PersonRef):
        return "person"
    if isinstance(value, tuple):
        return "list"
    if isinstance(value, (Closure, Builtin)):
        return "function"
    return type(value).__name__


# --- interpreter -------------------------------------------------------------

# Higher-order helpers shipped as KISP source rather than natives.
PRELUDE = """
(define square (lambda (x) (* x x)))
(define twice (lambda (f) (lambda (x) (f (f x)))))
(define compose (lambda (f g) (lambda (x) (f (g x)))))
"""


class Interpreter:
    """One KISP session: a global frame over an optional family tree."""

    def __init__(
        self,
        tree: Optional[FamilyTree] = None,
        timeline: Optional[Timeline] = None,
        ego: Optional[str] = None,
    ):
        if tree is not None:
            tree.require_valid()
        self.tree = tree
        self.timeline = timeline if timeline is not None else Timeline.today()
        self.globals = Environment()
        for builtin in _BUILTINS:
            self.globals.bind(builtin.name, builtin)
        people: tuple = ()
        if tree is not None:
            people = tuple(PersonRef(p.id) for p in tree.persons)
        self.globals.bind("people", people)
        self.globals.bind("now", self.timeline.now)
        if ego is not None:
            if tree is None:
                raise ValueError("cannot bind ego without a family tree")
            tree.person(ego)  # raises UnknownPersonError if absent
            self.globals.bind("ego", PersonRef(ego))
        for node in parse_program(PRELUDE):
            self.eval_top(node)

    # -- evaluation --

    def eval_in(self, env: Environment, node: KispExpr) -> object:
        if isinstance(node, Literal):
            return node.value
        if isinstance(node, Reference):
            return env.lookup(node.name, node)
        if isinstance(node, Lambda):
            return Closure(node.params, node.body, env)
        if isinstance(node, Define):
            value = self.eval_in(env, node.value)
            self.globals.bind(node.name, value)
            return VOID
        if isinstance(node, If):
            cond = self.eval_in(env, node.cond)
            self._require_bool(cond, node.cond)
            branch = node.then if cond else node.otherwise
            return self.eval_in(env, branch)
        if isinstance(node, ShortCircuit):
            for i, operand in enumerate(node.operands):
                value = self.eval_in(env, operand)
                self._require_bool(value, operand)
                last = i == len(node.operands) - 1
                if node.op == "and" and not value:
                    return False
                if node.op == "or" and value:
                    return True
                if last:
                    return value
            raise AssertionError("unreachable")
        if isinstance(node, Application):
            fn = self.eval_in(env, node.head)
            args = [self.eval_in(env, arg) for arg in node.args]
            return self.apply(fn, args, node)
        raise AssertionError(f"unknown node {node!r}")

    def apply(self, fn: object, args: list, node: KispExpr) -> object:
        if isinstance(fn, Closure):
            if len(args) != len(fn.params):
                raise KispRuntimeError(
                    f"function expects {len(fn.params)} argument(s), got {len(args)}",
                    node.line,  # type: ignore[attr-defined]
                    node.col,  # type: ignore[attr-defined]
                )
            frame = Environment(fn.env)
            for name, value in zip(fn.params, args):
                frame.bind(name, value)
            return self.eval_in(frame, fn.body)
        if isinstance(fn, Builtin):
            if len(args) < fn.min_args or (
                fn.max_args is not None and len(args) > fn.max_args
            ):
                if fn.max_args == fn.min_args:
                    wanted = str(fn.min_args)
                elif fn.max_args is None:
                    wanted = f"at least {fn.min_args}"
                else:
                    wanted = f"{fn.min_args}..{fn.max_args}"
                raise KispRuntimeError(
                    f"'{fn.name}' expects {wanted} argument(s), got {len(args)}",
                    node.line,  # type: ignore[attr-defined]
                    node.col,  # type: ignore[attr-defined]
                )
            return fn.fn(self, args, node)
        raise KispRuntimeError(
            f"cannot apply a {type_name(fn)} as a function",
            node.line,  # type: ignore[attr-defined]
            node.col,  # type: ignore[attr-defined]
        )

    def eval_top(self, node: KispExpr) -> object:
        return self.eval_in(self.globals, node)

    def eval_program(self, src: str) -> list[tuple[KispExpr, object]]:
        """Evaluate a program; returns (term, value) pairs in order."""
        return [(node, self.eval_top(node)) for node in parse_program(src)]

    def eval_text(self, src: str) -> object:
        """Evaluate source and return the value of the last term."""
        result: object = VOID
        for _, value in self.eval_program(src):
            result = value
        return result

    def script_output(self, src: str) -> list[str]:
        """Printed lines for a script: one per top-level non-define term."""
        lines = []
        for node, value in self.eval_program(src):
            if not isinstance(node, Define):
                lines.append(format_value(value))
        return lines

    # -- helpers used by builtins --

    def _require_bool(self, value: object, node: KispExpr) -> None:
        if not isinstance(value, bool):
            raise KispRuntimeError(
                f"expected a boolean, got {type_name(value)}",
                node.line,  # type: ignore[attr-defined]
                node.col,  # type: ignore[attr-defined]
            )

    def require_tree(self, node: KispExpr) -> FamilyTree:
        if self.tree is None:
            raise KispRuntimeError(
                "no family tree loaded", node.line, node.col  # type: ignore[attr-defined]
            )
        return self.tree


# --- builtin library ----------------------------------------------------------


def _arg_error(name: str, expected: str, value: object, node: KispExpr) -> KispRuntimeError:
    return KispRuntimeError(
        f"'{name}' expects {expected}, got {type_name(value)}",
        node.line,  # type: ignore[attr-defined]
        node.col,  # type: ignore[attr-defined]
    )


def _want_int(name: str, value: object, node: KispExpr) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise _arg_error(name, "a numeral", value, node)
    return value


def _want_list(name: str, value: object, node: KispExpr) -> tuple:
    if not isinstance(value, tuple):
        raise _arg_error(name, "a list", value, node)
    return value


def _want_date(name: str, value: object, node: KispExpr) -> date:
    if not isinstance(value, date):
        raise _arg_error(name, "a date", value, node)
    return value


def _want_person(name: str, value: object, node: KispExpr) -> PersonRef:
    if not isinstance(value, PersonRef):
        raise _arg_error(name, "a person", value, node)
    return value


def _want_bool(name: str, value: object, node: KispExpr) -> bool:
    if not isinstance(value, bool):
        raise _arg_error(name, "a boolean", value, node)
    return value


def _want_str(name: str, value: object, node: KispExpr) -> str:
    if not isinstance(value, str):
        raise _arg_error(name, "a string", value, node)
    return value


def _dedup(values: Sequence[object]) -> tuple:
    out: list[object] = []
    for v in values:
        if not any(kisp_equal(v, seen) for seen in out):
            out.append(v)
    return tuple(out)


def _builtin_add(interp, args, node):
    return sum(_want_int("+", a, node) for a in args)


def _builtin_sub(interp, args, node):
    return _want_int("-", args[0], node) - _want_int("-", args[1], node)


def _builtin_mul(interp, args, node):
    out = 1
    for a in args:
        out *= _want_int("*", a, node)
    return out


def _builtin_less(interp, args, node):
    return _want_int("<", args[0], node) < _want_int("<", args[1], node)


def _builtin_equal(interp, args, node):
    return kisp_equal(args[0], args[1])


def _builtin_inc(interp, args, node):
    return _want_int("inc", args[0], node) + 1


def _builtin_count(interp, args, node):
    return len(_want_list("count", args[0], node))


def _builtin_not(interp, args, node):
    return not _want_bool("not", args[0], node)


def _builtin_list(interp, args, node):
    return tuple(args)


def _builtin_append(interp, args, node):
    out: list = []
    for a in args:
        out.extend(_want_list("append", a, node))
    return tuple(out)


def _builtin_concat(interp, args, node):
    return "".join(_want_str("concat", a, node) for a in args)


def _builtin_join(interp, args, node):
    merged: list = []
    for a in args:
        merged.extend(_want_list("join", a, node))
    return _dedup(merged)


def _builtin_filter(interp, args, node):
    fn, lst = args[0], _want_list("filter", args[1], node)
    out = []
    for item in lst:
        keep = interp.apply(fn, [item], node)
        if not isinstance(keep, bool):
            raise _arg_error("filter", "a boolean from its predicate", keep, node)
        if keep:
            out.append(item)
    return tuple(out)


def _builtin_map(interp, args, node):
    fn, lst = args[0], _want_list("map", args[1], node)
    return tuple(interp.apply(fn, [item], node) for item in lst)


def _kin_accessor(name: str, relation: Callable[[FamilyTree, str], Sequence[str]]):
    def run(interp: Interpreter, args, node):
        tree = interp.require_tree(node)
        value = args[0]
        if isinstance(value, PersonRef):
            people = [value]
        elif isinstance(value, tuple):
            people = [_want_person(name, v, node) for v in value]
        else:
            raise _arg_error(name, "a person or a list of persons", value, node)
        ids: set[str] = set()
        for ref in people:
            if ref.id not in tree:
                raise KispRuntimeError(
                    f"unknown person {ref.id!r}", node.line, node.col
                )
            ids.update(relation(tree, ref.id))
        ordered = sorted(ids, key=tree.index_of)
        return tuple(PersonRef(pid) for pid in ordered)

    return run


def _sex_filtered(getter, sex: Sex):
    def relation(tree: FamilyTree, pid: str) -> list[str]:
        return [q for q in getter(tree, pid) if tree.person(q).sex is sex]

    return relation


def _builtin_attr(interp, args, node):
    person = _want_person("attr", args[0], node)
    key = _want_str("attr", args[1], node)
    tree = interp.require_tree(node)
    if person.id not in tree:
        raise KispRuntimeError(f"unknown person {person.id!r}", node.line, node.col)
    record = tree.person(person.id)
    if key == "name":
        return record.name
    if key == "sex":
        return record.sex.value
    if key == "birthdate":
        return record.birthdate
    if key == "birthplace":
        return record.birthplace if record.birthplace is not None else VOID
    raise KispRuntimeError(f"unknown attribute {key!r}", node.line, node.col)


def _builtin_date(interp, args, node):
    text = _want_str("date", args[0], node)
    try:
        return parse_date(text)
    except ValueError as exc:
        raise KispRuntimeError(str(exc), node.line, node.col) from None


def _builtin_before(interp, args, node):
    return temporal.before(
        _want_date("before", args[0], node), _want_date("before", args[1], node)
    )


def _builtin_after(interp, args, node):
    return temporal.after(
        _want_date("after", args[0], node), _want_date("after", args[1], node)
    )


def _builtin_during(interp, args, node):
    return temporal.during(
        _want_date("during", args[0], node),
        _want_date("during", args[1], node),
        _want_date("during", args[2], node),
    )


def _builtin_past(interp, args, node):
    return temporal.past(interp.timeline, _want_date("past", args[0], node))


def _builtin_future(interp, args, node):
    return temporal.future(interp.timeline, _want_date("future", args[0], node))


_BUILTINS = [
    Builtin("+", 2, None, _builtin_add),
    Builtin("-", 2, 2, _builtin_sub),
    Builtin("*", 2, None, _builtin_mul),
    Builtin("<", 2, 2, _builtin_less),
    Builtin("=", 2, 2, _builtin_equal),
    Builtin("inc", 1, 1, _builtin_inc),
    Builtin("count", 1, 1, _builtin_count),
    Builtin("not", 1, 1, _builtin_not),
    Builtin("list", 0, None, _builtin_list),
    Builtin("append", 1, None, _builtin_append),
    Builtin("concat", 1, None, _builtin_concat),
    Builtin("join", 1, None, _builtin_join),
    Builtin("filter", 2, 2, _builtin_filter),
    Builtin("map", 2, 2, _builtin_map),
    Builtin("children", 1, 1, _kin_accessor("children", lambda t, p: t.children_of(p))),
    Builtin(
        "son",
        1,
        1,
        _kin_accessor("son", _sex_filtered(lambda t, p: t.children_of(p), Sex.MALE)),
    ),
    Builtin(
        "daughter",
        1,
        1,
        _kin_accessor(
            "daughter", _sex_filtered(lambda t, p: t.children_of(p), Sex.FEMALE)
        ),
    ),
    Builtin(
        "father",
        1,
        1,
        _kin_accessor("father", _sex_filtered(lambda t, p: t.parents_of(p), Sex.MALE)),
    ),
    Builtin(
        "mother",
        1,
        1,
        _kin_accessor(
            "mother", _sex_filtered(lambda t, p: t.parents_of(p), Sex.FEMALE)
        ),
    ),
    Builtin("spouse", 1, 1, _kin_accessor("spouse", lambda t, p: t.spouses_of(p))),
    Builtin(
        "husband",
        1,
        1,
        _kin_accessor("husband", _sex_filtered(lambda t, p: t.spouses_of(p), Sex.MALE)),
    ),
    Builtin(
        "wife",
        1,
        1,
        _kin_accessor("wife", _sex_filtered(lambda t, p: t.spouses_of(p), Sex.FEMALE)),
    ),
    Builtin("attr", 2, 2, _builtin_attr),
    Builtin("date", 1, 1, _builtin_date),
    Builtin("before", 2, 2, _builtin_before),
    Builtin("after", 2, 2, _builtin_after),
    Builtin("during", 3, 3, _builtin_during),
    Builtin("past", 1, 1, _builtin_past),
    Builtin("future", 1, 1, _builtin_future),
]
