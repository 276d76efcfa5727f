"""Text format for motive expressions, ledgers and rewrite rules.

Grammar (LL(1) recursive descent, single-token lookahead; precedence
``^`` over ``*`` over ``+``/``-``; whitespace-insensitive; ``#`` starts a
line comment; integers are arbitrary precision):

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := INT
             | 'L' ('^' INT)?
             | ATOM
             | 'Sym2' '(' expr ')'
             | ATOM '(*)' ATOM
             | '(' expr ')'
    ledger  := '{' (ATOM ':' INT (',' ATOM ':' INT)*)? '}'
    rule    := lhs '=>' ledger
    lhs     := ATOM | 'Sym2' '(' ATOM ')' | ATOM '(*)' ATOM
    ATOM    := [A-Za-z][A-Za-z0-9_]*

A *statement* is an expr, a ledger or a rule; script files are sequences of
statements (``.mot`` for expression check lists, ``.sod`` for ledger/rule
scripts).  Canonical printing sorts everything, so printing is independent
of construction history and ``parse(print(v))`` returns an equal value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .motive import MotiveExpr, sym2_class
from .sod import RewriteRule, SodLedger

MAX_NESTING = 400


@dataclass(frozen=True)
class SourceSpan:
    start: int  # byte offsets into the input
    end: int
    line: int  # 1-based position of start
    column: int

    def __post_init__(self):
        if self.start > self.end or self.line < 1 or self.column < 1:
            raise ValueError("malformed span")


class ParseError(ValueError):
    def __init__(self, message: str, span: SourceSpan,
                 expected: tuple[str, ...] = (), found: str = ""):
        self.span = span
        self.expected = expected
        self.found = found
        super().__init__(f"line {span.line}, column {span.column}: {message}")


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class Node:
    span: SourceSpan


@dataclass(frozen=True)
class IntLit(Node):
    value: int


@dataclass(frozen=True)
class LPow(Node):
    power: int


@dataclass(frozen=True)
class Atom(Node):
    name: str


@dataclass(frozen=True)
class Sym2(Node):
    arg: Node


@dataclass(frozen=True)
class Tensor(Node):
    left: str
    right: str


@dataclass(frozen=True)
class Sum(Node):
    terms: tuple[tuple[int, Node], ...]  # (+1 or -1, term)


@dataclass(frozen=True)
class Product(Node):
    factors: tuple[Node, ...]


@dataclass(frozen=True)
class LedgerLiteral(Node):
    entries: tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class RuleDef(Node):
    lhs: Node  # Atom, Sym2(Atom) or Tensor
    rhs: LedgerLiteral


Ast = Node


# -- lexer --------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<INT>\d+)
  | (?P<IDENT>[A-Za-z][A-Za-z0-9_]*)
  | (?P<TENSOR>\(\*\))
  | (?P<ARROW>=>)
  | (?P<PLUS>\+) | (?P<MINUS>-) | (?P<STAR>\*) | (?P<CARET>\^)
  | (?P<LPAREN>\() | (?P<RPAREN>\))
  | (?P<LBRACE>\{) | (?P<RBRACE>\})
  | (?P<COLON>:) | (?P<COMMA>,)
    """,
    re.VERBOSE,
)
_SKIP_RE = re.compile(r"(?:[ \t\r\n]+|\#[^\n]*)+")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    span: SourceSpan


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    last_nl = text.rfind("\n", 0, pos)
    return line, pos - last_nl


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    n = len(text)
    while pos < n:
        skip = _SKIP_RE.match(text, pos)
        if skip:
            pos = skip.end()
            if pos >= n:
                break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            line, col = _line_col(text, pos)
            span = SourceSpan(pos, pos + 1, line, col)
            raise ParseError(
                f"unexpected character {text[pos]!r}", span,
                expected=("token",), found=text[pos],
            )
        line, col = _line_col(text, m.start())
        tokens.append(Token(str(m.lastgroup), m.group(),
                            SourceSpan(m.start(), m.end(), line, col)))
        pos = m.end()
    line, col = _line_col(text, n)
    tokens.append(Token("EOF", "", SourceSpan(n, n, line, col)))
    return tokens


# -- parser -------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0
        self.depth = 0

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "EOF":
            self.i += 1
        return tok

    def fail(self, expected: tuple[str, ...]) -> ParseError:
        tok = self.peek()
        found = tok.text or "end of input"
        return ParseError(
            f"expected {' or '.join(expected)}; found {found!r}",
            tok.span, expected=expected, found=found,
        )

    def expect(self, kind: str, what: str) -> Token:
        if self.peek().kind != kind:
            raise self.fail((what,))
        return self.advance()

    def _enter(self):
        self.depth += 1
        if self.depth > MAX_NESTING:
            raise ParseError("expression nesting too deep", self.peek().span,
                             expected=(), found=self.peek().text)

    # statements ---------------------------------------------------------

    def at_rule(self) -> bool:
        # match the three lhs shapes exactly so that an expression statement
        # followed by a rule is never misread as one long rule
        kinds = [self.peek(d).kind for d in range(5)]
        if kinds[0] != "IDENT":
            return False
        if kinds[1] == "ARROW":
            return True
        if kinds[1] == "TENSOR" and kinds[2] == "IDENT" and kinds[3] == "ARROW":
            return True
        return (self.peek().text == "Sym2" and kinds[1] == "LPAREN"
                and kinds[2] == "IDENT" and kinds[3] == "RPAREN"
                and kinds[4] == "ARROW")

    def statement(self) -> Node:
        if self.peek().kind == "LBRACE":
            return self.ledger()
        if self.at_rule():
            return self.rule()
        return self.expr()

    def script(self) -> list[Node]:
        out = []
        while self.peek().kind != "EOF":
            out.append(self.statement())
        return out

    # expressions ----------------------------------------------------------

    def expr(self) -> Node:
        self._enter()
        try:
            start = self.peek().span
            terms = [(1, self.term())]
            while self.peek().kind in ("PLUS", "MINUS"):
                sign = 1 if self.advance().kind == "PLUS" else -1
                terms.append((sign, self.term()))
            if len(terms) == 1:
                return terms[0][1]
            end = terms[-1][1].span
            return Sum(_join(start, end), tuple(terms))
        finally:
            self.depth -= 1

    def term(self) -> Node:
        start = self.peek().span
        factors = [self.factor()]
        while self.peek().kind == "STAR":
            self.advance()
            factors.append(self.factor())
        if len(factors) == 1:
            return factors[0]
        return Product(_join(start, factors[-1].span), tuple(factors))

    def factor(self) -> Node:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            return IntLit(tok.span, int(tok.text))
        if tok.kind == "LPAREN":
            self._enter()
            try:
                self.advance()
                inner = self.expr()
                close = self.expect("RPAREN", "')'")
                return _respan(inner, _join(tok.span, close.span))
            finally:
                self.depth -= 1
        if tok.kind == "IDENT":
            if tok.text == "L":
                self.advance()
                if self.peek().kind == "CARET":
                    self.advance()
                    exp = self.expect("INT", "integer exponent")
                    return LPow(_join(tok.span, exp.span), int(exp.text))
                return LPow(tok.span, 1)
            if tok.text == "Sym2":
                self.advance()
                self.expect("LPAREN", "'(' after Sym2")
                self._enter()
                try:
                    inner = self.expr()
                finally:
                    self.depth -= 1
                close = self.expect("RPAREN", "')'")
                return Sym2(_join(tok.span, close.span), inner)
            self.advance()
            if self.peek().kind == "TENSOR":
                self.advance()
                right = self.expect("IDENT", "atom after '(*)'")
                return Tensor(_join(tok.span, right.span), tok.text, right.text)
            return Atom(tok.span, tok.text)
        raise self.fail(("integer", "'L'", "atom", "Sym2(...)", "'('"))

    # ledgers and rules ---------------------------------------------------

    def ledger(self) -> LedgerLiteral:
        open_ = self.expect("LBRACE", "'{'")
        entries: list[tuple[str, int]] = []
        if self.peek().kind != "RBRACE":
            while True:
                name = self.expect("IDENT", "atom name")
                self.expect("COLON", "':'")
                count = self.expect("INT", "multiplicity")
                entries.append((name.text, int(count.text)))
                if self.peek().kind == "COMMA":
                    self.advance()
                    continue
                break
        close = self.expect("RBRACE", "'}' or ','")
        return LedgerLiteral(_join(open_.span, close.span), tuple(entries))

    def rule(self) -> RuleDef:
        lhs = self.rule_lhs()
        self.expect("ARROW", "'=>'")
        rhs = self.ledger()
        return RuleDef(_join(lhs.span, rhs.span), lhs, rhs)

    def rule_lhs(self) -> Node:
        tok = self.expect("IDENT", "atom or Sym2(...)")
        if tok.text == "Sym2" and self.peek().kind == "LPAREN":
            self.advance()
            inner = self.expect("IDENT", "atom name")
            close = self.expect("RPAREN", "')'")
            return Sym2(_join(tok.span, close.span),
                        Atom(inner.span, inner.text))
        if self.peek().kind == "TENSOR":
            self.advance()
            right = self.expect("IDENT", "atom after '(*)'")
            return Tensor(_join(tok.span, right.span), tok.text, right.text)
        return Atom(tok.span, tok.text)


def _join(a: SourceSpan, b: SourceSpan) -> SourceSpan:
    return SourceSpan(a.start, max(a.end, b.end), a.line, a.column)


def _respan(node: Node, span: SourceSpan) -> Node:
    cls = type(node)
    fields = {k: getattr(node, k) for k in node.__dataclass_fields__}
    fields["span"] = span
    return cls(**fields)


def parse(text: str) -> Ast:
    """Parse a single statement (expr, ledger or rule), requiring the whole
    input to be consumed."""
    parser = _Parser(tokenize(text))
    if parser.peek().kind == "EOF":
        raise parser.fail(("statement",))
    node = parser.statement()
    if parser.peek().kind != "EOF":
        raise parser.fail(("end of input",))
    return node


def parse_script(text: str) -> list[Ast]:
    """Parse a file as a sequence of statements."""
    return _Parser(tokenize(text)).script()


# -- evaluation ---------------------------------------------------------------


class EvalError(ValueError):
    pass


Value = Union[MotiveExpr, SodLedger, RewriteRule]


def evaluate(node: Ast) -> Value:
    """Evaluate an AST to a motive expression, a ledger or a rewrite rule."""
    if isinstance(node, LedgerLiteral):
        merged: dict[str, int] = {}
        for name, count in node.entries:
            merged[name] = merged.get(name, 0) + count
        return SodLedger(merged)
    if isinstance(node, RuleDef):
        rhs = evaluate(node.rhs)
        assert isinstance(rhs, SodLedger)
        lhs = node.lhs
        if isinstance(lhs, Atom):
            return RewriteRule("atom", (lhs.name,), rhs)
        if isinstance(lhs, Sym2):
            assert isinstance(lhs.arg, Atom)
            return RewriteRule("sym2", (lhs.arg.name,), rhs)
        assert isinstance(lhs, Tensor)
        return RewriteRule("tensor", (lhs.left, lhs.right), rhs)
    return _eval_expr(node)


def _eval_expr(node: Ast) -> MotiveExpr:
    if isinstance(node, IntLit):
        return MotiveExpr.const(node.value)
    if isinstance(node, LPow):
        return MotiveExpr.lefschetz(node.power)
    if isinstance(node, Atom):
        try:
            return MotiveExpr.atom(node.name)
        except ValueError as exc:
            raise EvalError(str(exc))
    if isinstance(node, Sym2):
        return sym2_class(_eval_expr(node.arg))
    if isinstance(node, Sum):
        total = MotiveExpr()
        for sign, term in node.terms:
            value = _eval_expr(term)
            total = total + value if sign > 0 else total - value
        return total
    if isinstance(node, Product):
        out = MotiveExpr.const(1)
        for factor in node.factors:
            out = out * _eval_expr(factor)
        return out
    if isinstance(node, Tensor):
        raise EvalError("tensor factors only make sense on rule left-hand sides")
    raise EvalError(f"cannot evaluate {type(node).__name__} as an expression")


def parse_motive(text: str) -> MotiveExpr:
    value = evaluate(parse(text))
    if not isinstance(value, MotiveExpr):
        raise EvalError("input is not a motive expression")
    return value


def parse_ledger(text: str) -> SodLedger:
    value = evaluate(parse(text))
    if not isinstance(value, SodLedger):
        raise EvalError("input is not a ledger")
    return value


def parse_rule(text: str) -> RewriteRule:
    value = evaluate(parse(text))
    if not isinstance(value, RewriteRule):
        raise EvalError("input is not a rewrite rule")
    return value


# -- canonical printing -------------------------------------------------------


def print_canonical(value) -> str:
    """Deterministic text form; parse(print(v)) evaluates back to v."""
    if isinstance(value, Node):
        return print_canonical(evaluate(value))
    if isinstance(value, MotiveExpr):
        return _print_motive(value)
    if isinstance(value, SodLedger):
        return _print_ledger(value)
    if isinstance(value, RewriteRule):
        return _print_rule(value)
    raise TypeError(f"cannot print {type(value).__name__}")


def _print_motive(x: MotiveExpr) -> str:
    if x.is_zero():
        return "0"
    keys = sorted(x.terms, key=lambda key: (key[1], key[0]))
    out = []
    for idx, (lp, mono) in enumerate(keys):
        coeff = x.terms[(lp, mono)]
        magnitude = abs(coeff)
        pieces = []
        if magnitude != 1 or (lp == 0 and not mono):
            pieces.append(str(magnitude))
        if lp == 1:
            pieces.append("L")
        elif lp >= 2:
            pieces.append(f"L^{lp}")
        pieces.extend(mono)
        text = "*".join(pieces)
        if idx == 0:
            # the grammar has no unary minus: anchor at an explicit zero
            out.append(f"0 - {text}" if coeff < 0 else text)
        else:
            out.append(f"{'-' if coeff < 0 else '+'} {text}")
    return " ".join(out)


def _print_ledger(led: SodLedger) -> str:
    inner = ", ".join(
        f"{name}:{m}" for name, m in sorted(led.multiplicities.items())
    )
    return "{" + inner + "}"


def _print_rule(rule: RewriteRule) -> str:
    if rule.kind == "atom":
        lhs = rule.args[0]
    elif rule.kind == "sym2":
        lhs = f"Sym2({rule.args[0]})"
    else:
        lhs = f"{rule.args[0]} (*) {rule.args[1]}"
    return f"{lhs} => {_print_ledger(rule.rhs)}"
