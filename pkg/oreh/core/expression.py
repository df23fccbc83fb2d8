"""
# Expressions

The textual input language of the command line: rational literals, the symbols x and t,
binary + - * /, integer powers, parentheses and the literals

    zeta(m,k)                      ζ_m^k
    sym                            the symbolic unit parameter
    sigma(<poly>)                  σ_r
    tau(<scalar>[, <scalar>])      τ_{a,b}
    deriv(w=<expr>, H=<expr>, s=<poly>)

Automorphisms are composed with ';' and `sigma(x^2);tau(2)` is σ_{x^2} ∘ τ_2, so the rightmost
factor is applied first. Products are kept left to right in the tree; normal forms are only
computed by the evaluators.

Binding strength from loosest to tightest: ';', binary + -, * /, unary -, ^. An exponent is an
optionally signed integer literal, and implicit multiplication such as "2x" is rejected.
"""
from __future__ import annotations

import typing as t
from dataclasses import dataclass, field
from fractions import Fraction

from oreh.core.algebra import AlgebraContext, OreElement, ore_mul, ore_pow
from oreh.core.automorphism import Automorphism, compose
from oreh.core.cyclotomic import zeta
from oreh.core.derivation import Derivation
from oreh.core.localization import SpecialPoly
from oreh.core.poly import Poly
from oreh.core.scalar import ONE, Scalar, scalar_power
from oreh.core.unit import UnitParam
from oreh.utils.errors import ExpressionSyntaxError, InvalidInputError, UnknownSymbolError

SYMBOLS = ("x", "t", "sym")
FUNCTIONS = ("zeta", "sigma", "tau", "deriv")
DERIVATION_KEYWORDS = ("w", "H", "s")
PUNCTUATION = "+-*/^(),;="

# groups of binary operators in increasing binding strength
OPERATORS = [["+", "-"], ["*", "/"]]
OPERATOR_PREC = {op: idx for idx, group in enumerate(OPERATORS) for op in group}
UNARY_PREC = len(OPERATORS)
POWER_PREC = UNARY_PREC + 1
ATOM_PREC = POWER_PREC + 1


class Node:
    """Base class of the expression tree."""

    @property
    def precedence(self) -> int:
        return ATOM_PREC

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Number(Node):
    value: int


@dataclass(frozen=True)
class Symbol(Node):
    name: str


@dataclass(frozen=True)
class Zeta(Node):
    m: int
    k: int


@dataclass(frozen=True)
class Neg(Node):
    operand: Node

    @property
    def precedence(self) -> int:
        return UNARY_PREC


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node

    @property
    def precedence(self) -> int:
        return OPERATOR_PREC[self.op]


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exponent: int

    @property
    def precedence(self) -> int:
        return POWER_PREC


@dataclass(frozen=True)
class Call(Node):
    """sigma(...), tau(...) or deriv(...); deriv takes keyword arguments only."""

    name: str
    args: t.Tuple[Node, ...] = ()
    kwargs: t.Tuple[t.Tuple[str, Node], ...] = field(default=())


@dataclass(frozen=True)
class Compose(Node):
    parts: t.Tuple[Node, ...]

    @property
    def precedence(self) -> int:
        return -1


@dataclass(frozen=True)
class Token:
    kind: str  # "number", "name", "op" or "end"
    text: str
    offset: int


def tokenize(source: str) -> t.List[Token]:
    """Splits the input into tokens, recording the byte offset of each."""
    tokens: t.List[Token] = []
    idx = 0
    while idx < len(source):
        c = source[idx]
        offset = len(source[:idx].encode("utf-8"))
        if c.isspace():
            idx += 1
            continue
        if c.isdigit():
            end = idx
            while end < len(source) and source[end].isdigit():
                end += 1
            tokens.append(Token("number", source[idx:end], offset))
            idx = end
            continue
        if c.isalpha() or c == "_":
            end = idx
            while end < len(source) and (source[end].isalnum() or source[end] == "_"):
                end += 1
            tokens.append(Token("name", source[idx:end], offset))
            idx = end
            continue
        if c in PUNCTUATION:
            tokens.append(Token("op", c, offset))
            idx += 1
            continue
        raise ExpressionSyntaxError(f"Unexpected character {c!r}", offset)
    tokens.append(Token("end", "", len(source.encode("utf-8"))))
    return tokens


class Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.position = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def advance(self) -> Token:
        token = self.current
        if token.kind != "end":
            self.position += 1
        return token

    def accept(self, text: str) -> bool:
        if self.current.kind == "op" and self.current.text == text:
            self.advance()
            return True
        return False

    def expect(self, text: str) -> Token:
        token = self.current
        if token.kind != "op" or token.text != text:
            raise self.error(f"Expected {text!r}")
        return self.advance()

    def error(self, message: str, token: t.Optional[Token] = None) -> ExpressionSyntaxError:
        token = token or self.current
        found = "end of input" if token.kind == "end" else repr(token.text)
        return ExpressionSyntaxError(f"{message}, found {found}", token.offset)

    def parse(self) -> Node:
        node = self.composition()
        if self.current.kind != "end":
            raise self.error("Unexpected token")
        return node

    def composition(self) -> Node:
        parts = [self.binary(0)]
        while self.accept(";"):
            parts.append(self.binary(0))
        return parts[0] if len(parts) == 1 else Compose(tuple(parts))

    def binary(self, min_prec: int) -> Node:
        left = self.unary()
        while (
            self.current.kind == "op"
            and self.current.text in OPERATOR_PREC
            and OPERATOR_PREC[self.current.text] >= min_prec
        ):
            op = self.advance().text
            # all binary operators are left associative
            right = self.binary(OPERATOR_PREC[op] + 1)
            left = BinOp(op, left, right)
        return left

    def unary(self) -> Node:
        if self.accept("-"):
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if not self.accept("^"):
            return base
        negative = self.accept("-")
        token = self.current
        if token.kind != "number":
            raise self.error("Expected an integer exponent")
        self.advance()
        exponent = int(token.text)
        return Pow(base, -exponent if negative else exponent)

    def atom(self) -> Node:
        token = self.current
        if token.kind == "number":
            self.advance()
            return Number(int(token.text))
        if token.kind == "op" and token.text == "(":
            self.advance()
            node = self.composition()
            self.expect(")")
            return node
        if token.kind == "name":
            self.advance()
            if token.text in SYMBOLS:
                return Symbol(token.text)
            if token.text == "zeta":
                return self.zeta()
            if token.text in FUNCTIONS:
                return self.call(token.text)
            raise UnknownSymbolError(token.text, token.offset)
        raise self.error("Expected an expression")

    def integer(self) -> int:
        negative = self.accept("-")
        token = self.current
        if token.kind != "number":
            raise self.error("Expected an integer")
        self.advance()
        return -int(token.text) if negative else int(token.text)

    def zeta(self) -> Zeta:
        self.expect("(")
        m = self.integer()
        self.expect(",")
        k = self.integer()
        self.expect(")")
        return Zeta(m, k)

    def call(self, name: str) -> Call:
        self.expect("(")
        args: t.List[Node] = []
        kwargs: t.List[t.Tuple[str, Node]] = []
        if not self.accept(")"):
            while True:
                if name == "deriv":
                    kwargs.append(self.keyword())
                else:
                    args.append(self.binary(0))
                if self.accept(")"):
                    break
                self.expect(",")
        return Call(name, tuple(args), tuple(kwargs))

    def keyword(self) -> t.Tuple[str, Node]:
        token = self.current
        if token.kind != "name" or token.text not in DERIVATION_KEYWORDS:
            raise self.error("Expected one of w=, H=, s=")
        self.advance()
        self.expect("=")
        return token.text, self.binary(0)


def parse(source: str) -> Node:
    """Parses an expression.

    Raises:
        ExpressionSyntaxError: With the byte offset of the offending token.
        UnknownSymbolError: For identifiers that are neither symbols nor literals.
    """
    return Parser(source).parse()


def render(node: Node) -> str:
    """Prints a tree with the fewest parentheses that parse back to the same tree."""
    if isinstance(node, Number):
        return str(node.value)
    if isinstance(node, Symbol):
        return node.name
    if isinstance(node, Zeta):
        return f"zeta({node.m},{node.k})"
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, UNARY_PREC)
    if isinstance(node, BinOp):
        prec = node.precedence
        separator = f" {node.op} " if node.op in "+-" else node.op
        return f"{_wrap(node.left, prec)}{separator}{_wrap(node.right, prec + 1)}"
    if isinstance(node, Pow):
        return f"{_wrap(node.base, ATOM_PREC)}^{node.exponent}"
    if isinstance(node, Call):
        args = [_wrap(arg, 0) for arg in node.args]
        args.extend(f"{key}={_wrap(value, 0)}" for key, value in node.kwargs)
        return f"{node.name}({', '.join(args)})"
    if isinstance(node, Compose):
        return ";".join(_wrap(part, 0) for part in node.parts)
    raise InvalidInputError(f"Unknown expression node {node!r}")


def _wrap(node: Node, min_prec: int) -> str:
    text = render(node)
    return f"({text})" if node.precedence < min_prec else text


def _unexpected(node: Node, expected: str) -> InvalidInputError:
    return InvalidInputError(f"Expected {expected}, got {render(node)}")


def evaluate_scalar(node: Node) -> Scalar:
    if isinstance(node, Number):
        return Fraction(node.value)
    if isinstance(node, Zeta):
        return zeta(node.m, node.k)
    if isinstance(node, Neg):
        return -evaluate_scalar(node.operand)
    if isinstance(node, Pow):
        return scalar_power(evaluate_scalar(node.base), node.exponent)
    if isinstance(node, BinOp):
        left, right = evaluate_scalar(node.left), evaluate_scalar(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if not right:
            raise InvalidInputError("Division by zero")
        return left / right
    raise _unexpected(node, "a scalar")


def _is_scalar_node(node: Node) -> bool:
    if isinstance(node, (Number, Zeta)):
        return True
    if isinstance(node, Neg):
        return _is_scalar_node(node.operand)
    if isinstance(node, Pow):
        return _is_scalar_node(node.base)
    if isinstance(node, BinOp):
        return _is_scalar_node(node.left) and _is_scalar_node(node.right)
    return False


def evaluate_poly(node: Node) -> Poly:
    """Evaluates a polynomial in x."""
    if _is_scalar_node(node):
        return Poly.constant(evaluate_scalar(node))
    if isinstance(node, Symbol):
        if node.name == "x":
            return Poly.x()
        raise _unexpected(node, "a polynomial in x")
    if isinstance(node, Neg):
        return -evaluate_poly(node.operand)
    if isinstance(node, Pow):
        if node.exponent < 0:
            raise InvalidInputError(f"Negative power in {render(node)}")
        return evaluate_poly(node.base) ** node.exponent
    if isinstance(node, BinOp):
        if node.op == "/":
            return evaluate_poly(node.left) / _divisor(node.right)
        left, right = evaluate_poly(node.left), evaluate_poly(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return left * right
    raise _unexpected(node, "a polynomial in x")


def _divisor(node: Node) -> Scalar:
    divisor = evaluate_scalar(node)
    if not divisor:
        raise InvalidInputError("Division by zero")
    return divisor


def evaluate_element(ctx: AlgebraContext, node: Node) -> OreElement:
    """Evaluates an element of A_h, normalizing products with tx - xt = h(x)."""
    if _is_scalar_node(node):
        return OreElement.from_poly(evaluate_scalar(node))
    if isinstance(node, Symbol):
        if node.name == "x":
            return OreElement.x()
        if node.name == "t":
            return OreElement.t()
        raise _unexpected(node, "an element of A_h")
    if isinstance(node, Neg):
        return -evaluate_element(ctx, node.operand)
    if isinstance(node, Pow):
        if node.exponent < 0:
            raise InvalidInputError(f"Negative power in {render(node)}")
        return ore_pow(ctx, evaluate_element(ctx, node.base), node.exponent)
    if isinstance(node, BinOp):
        if node.op == "/":
            return evaluate_element(ctx, node.left) * (ONE / _divisor(node.right))
        left, right = evaluate_element(ctx, node.left), evaluate_element(ctx, node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return ore_mul(ctx, left, right)
    raise _unexpected(node, "an element of A_h")


def evaluate_automorphism(ctx: AlgebraContext, node: Node) -> Automorphism:
    if isinstance(node, Compose):
        parts = [evaluate_automorphism(ctx, part) for part in node.parts]
        result = parts[0]
        for part in parts[1:]:
            result = _compose(ctx, result, part)
        return result
    if isinstance(node, Call) and node.name == "sigma" and len(node.args) == 1:
        return Automorphism.sigma(evaluate_poly(node.args[0]))
    if isinstance(node, Call) and node.name == "tau" and len(node.args) in (1, 2):
        a: t.Union[UnitParam, Scalar]
        if node.args[0] == Symbol("sym"):
            a = UnitParam.symbolic()
        else:
            a = evaluate_scalar(node.args[0])
        b = evaluate_scalar(node.args[1]) if len(node.args) == 2 else 0
        return Automorphism.tau(a, b)
    raise _unexpected(node, "an automorphism such as sigma(x);tau(2)")


def _compose(ctx: AlgebraContext, left: Automorphism, right: Automorphism) -> Automorphism:
    if not left.is_symbolic and not right.is_symbolic:
        return compose(ctx, left, right)
    # σ_r ∘ τ_sym is the only composite with a symbolic factor
    if (
        not left.is_symbolic
        and left.a_value == ONE
        and not left.b
        and right.is_symbolic
        and not right.r
    ):
        return Automorphism(right.a, left.r)
    raise InvalidInputError(f"Cannot compose {left} with {right} symbolically")


def evaluate_derivation(ctx: AlgebraContext, node: Node) -> Derivation:
    """`deriv(w=..., H=..., s=...)`, or any element w read as the inner derivation ad_w."""
    if not (isinstance(node, Call) and node.name == "deriv"):
        return Derivation.inner(evaluate_element(ctx, node))
    values = dict(node.kwargs)
    if len(values) != len(node.kwargs):
        raise InvalidInputError(f"Repeated keyword in {render(node)}")
    w = evaluate_element(ctx, values["w"]) if "w" in values else None
    H = SpecialPoly.create(ctx, evaluate_element(ctx, values["H"])) if "H" in values else None
    s = evaluate_poly(values["s"]) if "s" in values else None
    return Derivation.create(ctx, w, H, s)


def parse_scalar(source: str) -> Scalar:
    return evaluate_scalar(parse(source))


def parse_poly(source: str) -> Poly:
    return evaluate_poly(parse(source))


def parse_element(ctx: AlgebraContext, source: str) -> OreElement:
    return evaluate_element(ctx, parse(source))


def parse_automorphism(ctx: AlgebraContext, source: str) -> Automorphism:
    return evaluate_automorphism(ctx, parse(source))


def parse_derivation(ctx: AlgebraContext, source: str) -> Derivation:
    return evaluate_derivation(ctx, parse(source))
