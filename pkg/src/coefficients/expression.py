"""
Coefficient expressions q(t, omega)

Grammar: decimal/scientific numbers, variables t and omega (plus any
bound parameters), binary + - * / ^, unary -, parentheses and the
functions sin cos exp log sqrt tanh abs. Precedence from loosest to
tightest: + -, * /, unary -, ^ (right-associative).
"""
import re
from dataclasses import dataclass
from typing import Optional, Dict, Any, List, Union

import numpy as np

from ..core.errors import ParseError
from ..core.interfaces import CoefficientSpec

# Binary operators: precedence and associativity
BINARY_OPERATORS = {
    "+": (1, "left"),
    "-": (1, "left"),
    "*": (2, "left"),
    "/": (2, "left"),
    "^": (4, "right"),
}
UNARY_PRECEDENCE = 3

FUNCTIONS = {
    "sin": np.sin,
    "cos": np.cos,
    "exp": np.exp,
    "log": np.log,
    "sqrt": np.sqrt,
    "tanh": np.tanh,
    "abs": np.abs,
}

VARIABLES = ("t", "omega")

_NUMBER = re.compile(r"(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")
_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


@dataclass(frozen=True)
class Token:
    kind: str  # "number", "name", "op", "end"
    text: str
    offset: int


@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Variable:
    name: str


@dataclass(frozen=True)
class Unary:
    operand: "Node"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Node"


Node = Union[Number, Variable, Unary, Binary, Call]


def tokenize(source: str) -> List[Token]:
    """Splits source into tokens, recording the offset of each"""
    tokens: List[Token] = []
    idx = 0
    while idx < len(source):
        c = source[idx]
        if c.isspace():
            idx += 1
            continue
        if not c.isascii():
            raise ParseError(f"unexpected character {c!r}", idx)
        number = _NUMBER.match(source, idx)
        if number:
            tokens.append(Token("number", number.group(0), idx))
            idx = number.end()
            continue
        name = _NAME.match(source, idx)
        if name:
            tokens.append(Token("name", name.group(0), idx))
            idx = name.end()
            continue
        if c in BINARY_OPERATORS or c in "()":
            tokens.append(Token("op", c, idx))
            idx += 1
            continue
        raise ParseError(f"unexpected character {c!r}", idx)
    tokens.append(Token("end", "", len(source)))
    return tokens


class _Parser:
    """Precedence-climbing parser over a token list"""

    def __init__(self, tokens: List[Token], names: set):
        self.tokens = tokens
        self.pos = 0
        self.names = names

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, text: str) -> Token:
        token = self.advance()
        if token.text != text:
            found = token.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", token.offset)
        return token

    def parse(self) -> Node:
        node = self.expression(0)
        token = self.peek()
        if token.kind != "end":
            raise ParseError(f"unexpected {token.text!r}", token.offset)
        return node

    def expression(self, min_prec: int) -> Node:
        lhs = self.prefix()
        while True:
            token = self.peek()
            if token.kind != "op" or token.text not in BINARY_OPERATORS:
                return lhs
            prec, assoc = BINARY_OPERATORS[token.text]
            if prec < min_prec:
                return lhs
            self.advance()
            next_min = prec + 1 if assoc == "left" else prec
            rhs = self.expression(next_min)
            lhs = Binary(token.text, lhs, rhs)

    def prefix(self) -> Node:
        token = self.advance()
        if token.kind == "op" and token.text == "-":
            return Unary(self.expression(UNARY_PRECEDENCE))
        if token.kind == "number":
            return Number(float(token.text))
        if token.kind == "op" and token.text == "(":
            node = self.expression(0)
            self.expect(")")
            return node
        if token.kind == "name":
            return self.name(token)
        if token.kind == "end":
            raise ParseError("unexpected end of input", token.offset)
        raise ParseError(f"unexpected {token.text!r}", token.offset)

    def name(self, token: Token) -> Node:
        if token.text in FUNCTIONS:
            self.expect("(")
            arg = self.expression(0)
            self.expect(")")
            return Call(token.text, arg)
        if token.text in self.names:
            return Variable(token.text)
        raise ParseError(f"unknown identifier {token.text!r}", token.offset)


def parse_ast(source: str, params: Optional[Dict[str, float]] = None) -> Node:
    """
    Parses an expression into an AST

    Args:
        source: Expression text
        params: Extra named constants allowed in the expression

    Returns:
        Root node
    """
    if not source or not source.strip():
        raise ParseError("empty expression", 0)
    names = set(VARIABLES) | set(params or {})
    return _Parser(tokenize(source), names).parse()


def evaluate_ast(node: Node, env: Dict[str, Any]):
    """Tree-walk evaluation; env maps variable names to values or arrays"""
    if isinstance(node, Number):
        return node.value
    if isinstance(node, Variable):
        return env[node.name]
    if isinstance(node, Unary):
        return -evaluate_ast(node.operand, env)
    if isinstance(node, Call):
        return FUNCTIONS[node.func](evaluate_ast(node.arg, env))
    left = evaluate_ast(node.left, env)
    right = evaluate_ast(node.right, env)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if node.op == "/":
        return np.divide(left, right)
    return np.power(left, right)


def to_source(node: Node) -> str:
    """Pretty-prints an AST as fully parenthesised source"""
    if isinstance(node, Number):
        return repr(node.value)
    if isinstance(node, Variable):
        return node.name
    if isinstance(node, Unary):
        return f"(-{to_source(node.operand)})"
    if isinstance(node, Call):
        return f"{node.func}({to_source(node.arg)})"
    return f"({to_source(node.left)} {node.op} {to_source(node.right)})"


class ExpressionCoefficient(CoefficientSpec):
    """Coefficient given by a parsed expression"""

    kind = "expression"

    def __init__(self, source: str, params: Optional[Dict[str, float]] = None):
        """
        Args:
            source: Expression text
            params: Values of extra named constants used in source
        """
        self.source = source
        self.params = dict(params or {})
        self.ast = parse_ast(source, self.params)

    def evaluate(self, t: np.ndarray, omega: float) -> np.ndarray:
        env = dict(self.params)
        env["t"] = np.asarray(t, dtype=float)
        env["omega"] = float(omega)
        return evaluate_ast(self.ast, env)

    def get_name(self) -> str:
        return f"q(t, omega) = {self.source}"

    def get_parameters(self) -> Dict[str, Any]:
        return {"expr_source": self.source, **self.params}
