"""A small declarative language for kets, projectors and valuation queries.

Example::

    let o = ket[1, 0]
    let d1 = ket[1, -1]
    let P_O = proj(o) (x) proj(o)
    let P_D1 = proj(d1) (x) proj(d1)
    let psi = ket[0, 1, 1, 1]
    eval many_valued P_D1 in psi

Grammar (LL(1))::

    script    := statement*
    statement := "let" IDENT "=" expr
               | "eval" MODE expr "in" IDENT ("post" IDENT)?
    MODE      := "bivalent" | "supervaluationist" | "many_valued" | "weak"
    expr      := term ("(x)" term)*
    term      := "not" term | "proj" "(" expr ")" | "ket" "[" scalar ("," scalar)* "]"
               | IDENT | "(" expr ")"
    scalar    := SIGNED_INT ("/" INT)? (("+"|"-") SIGNED_INT ("/" INT)? "i")? | "i"

``#`` starts a comment. The tensor token ``(x)`` is matched before ``(``;
where an operand is expected it is read back as the name ``x``, so
``proj(x)`` and ``(x) (x) y`` still parse.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Union

from qsem.errors import QsemError
from qsem.exact import MAX_DIM, ExactVector, Scalar
from qsem.projector import Projector, from_ket, negate, tensor
from qsem.semantics import SemanticsKind, State, TruthValue, evaluate

KEYWORDS = frozenset({"let", "eval", "in", "post", "not", "proj", "ket"})
MODES = {k.value: k for k in SemanticsKind}


@dataclass(frozen=True)
class Pos:
    line: int
    col: int

    def __str__(self) -> str:
        return f"{self.line}:{self.col}"


class DslError(QsemError):
    def __init__(self, message: str, pos: Optional[Pos] = None):
        self.message = message
        self.pos = pos
        super().__init__(f"{pos}: {message}" if pos else message)


class DslSyntaxError(DslError):
    pass


class DslCheckError(DslError):
    pass


class DslEvalError(DslError):
    pass


# -- AST ----------------------------------------------------------------------

_NOPOS = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class KetLiteral:
    values: tuple[Scalar, ...]
    pos: Optional[Pos] = _NOPOS


@dataclass(frozen=True)
class Name:
    name: str
    pos: Optional[Pos] = _NOPOS


@dataclass(frozen=True)
class Proj:
    arg: "Expr"
    pos: Optional[Pos] = _NOPOS


@dataclass(frozen=True)
class Neg:
    arg: "Expr"
    pos: Optional[Pos] = _NOPOS


@dataclass(frozen=True)
class Tensor:
    left: "Expr"
    right: "Expr"
    pos: Optional[Pos] = _NOPOS


Expr = Union[KetLiteral, Name, Proj, Neg, Tensor]


@dataclass(frozen=True)
class Let:
    name: str
    expr: Expr
    pos: Optional[Pos] = _NOPOS


@dataclass(frozen=True)
class Eval:
    semantics: SemanticsKind
    prop: Expr
    state: str
    post: Optional[str] = None
    pos: Optional[Pos] = _NOPOS


Statement = Union[Let, Eval]


@dataclass(frozen=True)
class Script:
    statements: tuple[Statement, ...]


# -- lexer --------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT, INT, TENSOR, EOF or the punctuation character itself
    text: str
    pos: Pos


_PUNCT = set("=()[],/+-")


def tokenize(source: str) -> Iterator[Token]:
    i, line, col = 0, 1, 1
    n = len(source)
    while i < n:
        c = source[i]
        if c == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if c.isspace():
            i, col = i + 1, col + 1
            continue
        if c == "#":
            while i < n and source[i] != "\n":
                i += 1
            continue
        pos = Pos(line, col)
        if source.startswith("(x)", i):
            yield Token("TENSOR", "(x)", pos)
            i, col = i + 3, col + 3
        elif c.isascii() and (c.isalpha() or c == "_"):
            j = i + 1
            while j < n and source[j].isascii() and (source[j].isalnum() or source[j] == "_"):
                j += 1
            yield Token("IDENT", source[i:j], pos)
            col += j - i
            i = j
        elif c.isascii() and c.isdigit():
            j = i + 1
            while j < n and source[j].isascii() and source[j].isdigit():
                j += 1
            if j < n and source[j] == ".":
                raise DslSyntaxError("decimal literals are not accepted; write an exact fraction p/q", pos)
            yield Token("INT", source[i:j], pos)
            col += j - i
            i = j
        elif c in _PUNCT:
            yield Token(c, c, pos)
            i, col = i + 1, col + 1
        else:
            raise DslSyntaxError(f"unexpected character {c!r}", pos)
    yield Token("EOF", "", Pos(line, col))


# -- parser -------------------------------------------------------------------


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind == "EOF" else repr(tok.text)


class Parser:
    def __init__(self, source: str):
        self._tokens = list(tokenize(source))
        self._i = 0

    @property
    def _tok(self) -> Token:
        return self._tokens[self._i]

    def _advance(self) -> Token:
        tok = self._tokens[self._i]
        if tok.kind != "EOF":
            self._i += 1
        return tok

    def _is_kw(self, word: str) -> bool:
        return self._tok.kind == "IDENT" and self._tok.text == word

    def _expect(self, kind: str, what: Optional[str] = None) -> Token:
        if self._tok.kind != kind:
            raise DslSyntaxError(f"expected {what or repr(kind)}, found {_describe(self._tok)}", self._tok.pos)
        return self._advance()

    def _expect_kw(self, word: str) -> Token:
        if not self._is_kw(word):
            raise DslSyntaxError(f"expected {word!r}, found {_describe(self._tok)}", self._tok.pos)
        return self._advance()

    def _ident(self, what: str) -> Token:
        tok = self._expect("IDENT", what)
        if tok.text in KEYWORDS:
            raise DslSyntaxError(f"keyword {tok.text!r} cannot be used as {what}", tok.pos)
        return tok

    def parse(self) -> Script:
        stmts = []
        while self._tok.kind != "EOF":
            stmts.append(self._statement())
        return Script(tuple(stmts))

    def _statement(self) -> Statement:
        tok = self._tok
        if self._is_kw("let"):
            self._advance()
            name = self._ident("a name")
            self._expect("=", "'='")
            return Let(name.text, self._expr(), tok.pos)
        if self._is_kw("eval"):
            self._advance()
            mode = self._expect("IDENT", "a semantics name")
            if mode.text not in MODES:
                raise DslSyntaxError(
                    f"unknown semantics {mode.text!r}; expected one of {', '.join(MODES)}", mode.pos
                )
            prop = self._expr()
            self._expect_kw("in")
            state = self._ident("a state name")
            post = None
            if self._is_kw("post"):
                self._advance()
                post = self._ident("a state name").text
            return Eval(MODES[mode.text], prop, state.text, post, tok.pos)
        if tok.kind == "IDENT":
            raise DslSyntaxError(f"unknown keyword {tok.text!r}; statements start with 'let' or 'eval'", tok.pos)
        raise DslSyntaxError(f"expected a statement, found {_describe(tok)}", tok.pos)

    def _expr(self) -> Expr:
        left = self._term()
        while self._tok.kind == "TENSOR":
            op = self._advance()
            left = Tensor(left, self._term(), op.pos)
        return left

    def _shadowed_x(self) -> Name:
        # the lexer reads "(x)" as the tensor operator; where an operand is
        # required it can only mean the parenthesized name x
        tok = self._advance()
        return Name("x", Pos(tok.pos.line, tok.pos.col + 1))

    def _term(self) -> Expr:
        tok = self._tok
        if self._is_kw("not"):
            self._advance()
            return Neg(self._term(), tok.pos)
        if self._is_kw("proj"):
            self._advance()
            if self._tok.kind == "TENSOR":
                return Proj(self._shadowed_x(), tok.pos)
            self._expect("(", "'('")
            arg = self._expr()
            self._expect(")", "')'")
            return Proj(arg, tok.pos)
        if self._is_kw("ket"):
            self._advance()
            self._expect("[", "'['")
            values = [self._scalar()]
            while self._tok.kind == ",":
                self._advance()
                values.append(self._scalar())
            self._expect("]", "']'")
            return KetLiteral(tuple(values), tok.pos)
        if tok.kind == "TENSOR":
            return self._shadowed_x()
        if tok.kind == "(":
            self._advance()
            inner = self._expr()
            self._expect(")", "')'")
            return inner
        if tok.kind == "IDENT":
            if tok.text in KEYWORDS:
                raise DslSyntaxError(f"unexpected keyword {tok.text!r}", tok.pos)
            self._advance()
            return Name(tok.text, tok.pos)
        raise DslSyntaxError(f"expected an expression, found {_describe(tok)}", tok.pos)

    def _rational(self, signed: bool) -> Fraction:
        sign = 1
        if signed and self._tok.kind in ("+", "-"):
            sign = -1 if self._advance().kind == "-" else 1
        num = int(self._expect("INT", "an integer").text)
        den = 1
        if self._tok.kind == "/":
            self._advance()
            d = self._expect("INT", "a denominator")
            den = int(d.text)
            if den == 0:
                raise DslSyntaxError("zero denominator", d.pos)
        return Fraction(sign * num, den)

    def _is_unit_i(self) -> bool:
        return self._tok.kind == "IDENT" and self._tok.text == "i"

    def _scalar(self) -> Scalar:
        if self._is_unit_i():
            self._advance()
            return Scalar(0, 1)
        re = self._rational(signed=True)
        if self._tok.kind in ("+", "-"):
            sign = -1 if self._advance().kind == "-" else 1
            im = self._rational(signed=True)
            if not self._is_unit_i():
                raise DslSyntaxError(f"expected 'i' after imaginary part, found {_describe(self._tok)}", self._tok.pos)
            self._advance()
            return Scalar(re, sign * im)
        return Scalar(re)


def parse(source: str) -> Script:
    return Parser(source).parse()


# -- pretty printing ----------------------------------------------------------


def format_expr(e: Expr) -> str:
    if isinstance(e, KetLiteral):
        return "ket[" + ", ".join(str(v) for v in e.values) + "]"
    if isinstance(e, Name):
        return e.name
    if isinstance(e, Proj):
        return f"proj({format_expr(e.arg)})"
    if isinstance(e, Neg):
        inner = format_expr(e.arg)
        return f"not ({inner})" if isinstance(e.arg, Tensor) else f"not {inner}"
    if isinstance(e, Tensor):
        right = format_expr(e.right)
        if isinstance(e.right, Tensor):
            right = f"({right})"
        return f"{format_expr(e.left)} (x) {right}"
    raise TypeError(f"not an expression: {e!r}")


def format_statement(s: Statement) -> str:
    if isinstance(s, Let):
        return f"let {s.name} = {format_expr(s.expr)}"
    text = f"eval {s.semantics.value} {format_expr(s.prop)} in {s.state}"
    if s.post is not None:
        text += f" post {s.post}"
    return text


def format_script(script: Script) -> str:
    return "".join(format_statement(s) + "\n" for s in script.statements)


# -- checking -----------------------------------------------------------------


@dataclass(frozen=True)
class Kind:
    sort: str  # "vector" or "projector"
    dim: int

    def __str__(self) -> str:
        return f"{self.dim}-dimensional {self.sort}"


@dataclass(frozen=True)
class CheckedScript:
    script: Script
    bindings: dict[str, Kind]


def _kind_of(e: Expr, env: dict[str, Kind]) -> Kind:
    if isinstance(e, KetLiteral):
        return Kind("vector", len(e.values))
    if isinstance(e, Name):
        if e.name not in env:
            raise DslCheckError(f"unbound name {e.name!r}", e.pos)
        return env[e.name]
    if isinstance(e, Proj):
        k = _kind_of(e.arg, env)
        if k.sort != "vector":
            raise DslCheckError(f"proj expects a vector, got a {k}", e.pos)
        return Kind("projector", k.dim)
    if isinstance(e, Neg):
        k = _kind_of(e.arg, env)
        if k.sort != "projector":
            raise DslCheckError(f"'not' is defined on projectors only, got a {k}", e.pos)
        return k
    if isinstance(e, Tensor):
        a, b = _kind_of(e.left, env), _kind_of(e.right, env)
        for k in (a, b):
            if k.sort != "projector":
                raise DslCheckError(f"'(x)' combines projectors only, got a {k}", e.pos)
        dim = a.dim * b.dim
        if dim > MAX_DIM:
            raise DslCheckError(f"tensor product dimension {dim} exceeds {MAX_DIM}", e.pos)
        return Kind("projector", dim)
    raise TypeError(f"not an expression: {e!r}")


def _state_kind(name: str, env: dict[str, Kind], pos: Optional[Pos]) -> Kind:
    if name not in env:
        raise DslCheckError(f"unbound name {name!r}", pos)
    k = env[name]
    if k.sort != "vector":
        raise DslCheckError(f"{name!r} is a {k}, but a state must be a vector", pos)
    return k


def check(script: Script) -> CheckedScript:
    env: dict[str, Kind] = {}
    for s in script.statements:
        if isinstance(s, Let):
            if s.name in env:
                raise DslCheckError(f"{s.name!r} is already bound", s.pos)
            env[s.name] = _kind_of(s.expr, env)
            continue
        k = _kind_of(s.prop, env)
        if k.sort != "projector":
            raise DslCheckError(f"a query needs a proposition (projector), got a {k}", s.pos)
        st = _state_kind(s.state, env, s.pos)
        if st.dim != k.dim:
            raise DslCheckError(
                f"dimension mismatch: {k.dim}-dimensional proposition in {st.dim}-dimensional state {s.state!r}",
                s.pos,
            )
        if s.semantics is SemanticsKind.WEAK:
            if s.post is None:
                raise DslCheckError("weak queries need a post-selected state ('post NAME')", s.pos)
            pk = _state_kind(s.post, env, s.pos)
            if pk.dim != k.dim:
                raise DslCheckError(
                    f"dimension mismatch: post-selected state {s.post!r} is {pk.dim}-dimensional", s.pos
                )
        elif s.post is not None:
            raise DslCheckError(f"only weak queries take a post-selected state, not {s.semantics.value}", s.pos)
    return CheckedScript(script, env)


# -- interpretation -----------------------------------------------------------


@dataclass(frozen=True)
class QueryResult:
    query: Eval
    result: TruthValue

    @property
    def text(self) -> str:
        return format_statement(self.query)


def _value(e: Expr, env: dict) -> Union[ExactVector, Projector]:
    if isinstance(e, KetLiteral):
        return ExactVector(e.values)
    if isinstance(e, Name):
        return env[e.name]
    if isinstance(e, Proj):
        return from_ket(_value(e.arg, env), format_expr(e))
    if isinstance(e, Neg):
        return negate(_value(e.arg, env))
    if isinstance(e, Tensor):
        return tensor(_value(e.left, env), _value(e.right, env))
    raise TypeError(f"not an expression: {e!r}")


def run(checked: CheckedScript) -> list[QueryResult]:
    env: dict = {}
    out = []
    for s in checked.script.statements:
        try:
            if isinstance(s, Let):
                v = _value(s.expr, env)
                env[s.name] = v.relabel(s.name) if isinstance(v, Projector) else v
                continue
            prop = _value(s.prop, env)
            pre = State(env[s.state], s.state)
            post = State(env[s.post], s.post) if s.post is not None else None
            out.append(QueryResult(s, evaluate(s.semantics, prop, pre, post)))
        except QsemError as exc:
            raise DslEvalError(str(exc), s.pos) from exc
    return out


def run_source(source: str) -> list[QueryResult]:
    return run(check(parse(source)))


def bundled_scripts() -> list[str]:
    root = importlib.resources.files("qsem") / "scripts"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".qsem"))


def bundled_script(name: str) -> str:
    return (importlib.resources.files("qsem") / "scripts" / name).read_text(encoding="utf-8")
