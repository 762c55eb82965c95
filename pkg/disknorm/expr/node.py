# -*- coding: utf-8 -*-
import cmath
import math
import numbers

from ..config import ASSERTIONS, EPS_POLE
from .exceptions import ExprError

CONST = "const"
VAR = "z"
ADD = "add"
SUB = "sub"
MUL = "mul"
DIV = "div"
NEG = "neg"
POW = "pow"
IPOW = "ipow"
EXP = "exp"
LOG = "log"

ARITY = {
    CONST: 0,
    VAR: 0,
    ADD: 2,
    SUB: 2,
    MUL: 2,
    DIV: 2,
    NEG: 1,
    POW: 1,
    IPOW: 1,
    EXP: 1,
    LOG: 1,
}


class Expr:
    """
    Immutable expression tree of an analytic function of `z`.

    Args:
        kind (str): node kind, one of the keys of :any:`ARITY`.

    Keyword Args:
        children: child expressions, as many as the kind requires.
        value: complex payload of a constant.
        exponent: real exponent of `pow`, integer exponent of `ipow`.

    Nodes compare structurally and can be shared between trees.

    >>> from disknorm.expr import parse
    >>> e = parse("1/(1-z)")
    >>> e
    Expr('1/(1 - z)')
    >>> e.kind, e.children[1].kind
    ('div', 'sub')
    >>> e == parse("1 / (1 - z)")
    True

    Arithmetic operators build new expressions, folding literal subtrees:

    >>> (e * 2 + 0).kind
    'mul'
    >>> (Expr(CONST, value=2) * 3).value
    (6+0j)
    """

    __slots__ = ("kind", "children", "value", "exponent", "_hash")

    def __init__(self, kind, children=(), value=None, exponent=None):
        children = tuple(children)
        if kind not in ARITY:
            raise ExprError("Unknown node kind %r." % (kind,))
        if len(children) != ARITY[kind]:
            msg = "Node kind %r requires %d children, got %d."
            raise ExprError(msg % (kind, ARITY[kind], len(children)))
        if not all(isinstance(child, Expr) for child in children):
            raise ExprError("Children of %r must be expressions." % (kind,))
        if kind == CONST:
            value = complex(value)
            if not cmath.isfinite(value):
                raise ExprError("Constant %r is not finite." % (value,))
        else:
            value = None
        if kind == POW:
            exponent = float(exponent)
            if not math.isfinite(exponent):
                raise ExprError("Exponent %r is not finite." % (exponent,))
        elif kind == IPOW:
            if not isinstance(exponent, numbers.Integral) or isinstance(exponent, bool):
                raise ExprError("Exponent %r is not an integer." % (exponent,))
            exponent = int(exponent)
        else:
            exponent = None
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "exponent", exponent)
        object.__setattr__(self, "_hash", hash((kind, value, exponent, children)))

    def __setattr__(self, name, value):
        raise AttributeError("Expr is immutable.")

    def __delattr__(self, name):
        raise AttributeError("Expr is immutable.")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Expr) or self._hash != other._hash:
            return False
        return (
            self.kind == other.kind
            and self.value == other.value
            and self.exponent == other.exponent
            and self.children == other.children
        )

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        # pylint: disable=C0415
        from .printer import pretty_print

        return "%s(%r)" % (self.__class__.__name__, pretty_print(self))

    @property
    def label(self):
        """Short node description used by :any:`RenderTree`."""
        if self.kind == CONST:
            # pylint: disable=C0415
            from .printer import format_number

            return "const %s" % format_number(self.value)
        if self.kind in (POW, IPOW):
            return "%s %r" % (self.kind, self.exponent)
        return self.kind

    @property
    def is_leaf(self):
        return not self.children

    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else add(self, other)

    def __radd__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else add(other, self)

    def __sub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else sub(self, other)

    def __rsub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else sub(other, self)

    def __mul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else mul(self, other)

    def __rmul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else mul(other, self)

    def __truediv__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else div(self, other)

    def __rtruediv__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else div(other, self)

    def __neg__(self):
        return neg(self)

    def __pow__(self, exponent):
        if isinstance(exponent, numbers.Integral):
            return ipower(self, exponent)
        if isinstance(exponent, numbers.Real):
            return power(self, exponent)
        return NotImplemented


def _coerce(other):
    if isinstance(other, Expr):
        return other
    if isinstance(other, numbers.Number):
        return const(other)
    return None


Z = Expr(VAR)


def const(value):
    """Constant node."""
    return Expr(CONST, value=value)


def is_const(expr, value=None):
    """`expr` is a literal constant, optionally equal to `value`."""
    return expr.kind == CONST and (value is None or expr.value == value)


def _fold(kind, children, exponent=None):
    """Literal result of `kind` applied to constant children or `None`."""
    args = [child.value for child in children]
    try:
        if kind == ADD:
            result = args[0] + args[1]
        elif kind == SUB:
            result = args[0] - args[1]
        elif kind == MUL:
            result = args[0] * args[1]
        elif kind == DIV:
            if abs(args[1]) < EPS_POLE:
                return None
            result = args[0] / args[1]
        elif kind == NEG:
            result = -args[0]
        elif kind == EXP:
            result = cmath.exp(args[0])
        elif kind == LOG:
            if abs(args[0]) < EPS_POLE:
                return None
            result = cmath.log(args[0])
        elif kind == POW:
            if abs(args[0]) < EPS_POLE:
                return None
            result = cmath.exp(exponent * cmath.log(args[0]))
        else:
            if exponent < 0 and abs(args[0]) < EPS_POLE:
                return None
            result = args[0] ** exponent
    except (ArithmeticError, ValueError):
        return None
    if not cmath.isfinite(result):
        return None
    return const(result)


def _build(kind, children, exponent=None):
    if all(child.kind == CONST for child in children):
        folded = _fold(kind, children, exponent)
        if folded is not None:
            return folded
    return Expr(kind, children, exponent=exponent)


def add(left, right):
    if is_const(left, 0):
        return right
    if is_const(right, 0):
        return left
    return _build(ADD, (left, right))


def sub(left, right):
    if is_const(right, 0):
        return left
    if is_const(left, 0):
        return neg(right)
    return _build(SUB, (left, right))


def mul(left, right):
    if is_const(left, 0) or is_const(right, 0):
        return const(0)
    if is_const(left, 1):
        return right
    if is_const(right, 1):
        return left
    return _build(MUL, (left, right))


def div(left, right):
    if is_const(right, 1):
        return left
    if is_const(left, 0) and not is_const(right, 0):
        return const(0)
    return _build(DIV, (left, right))


def neg(operand):
    if operand.kind == NEG:
        return operand.children[0]
    return _build(NEG, (operand,))


def power(base, exponent):
    """Principal-branch power with real exponent."""
    exponent = float(exponent)
    if exponent == 0:
        return const(1)
    if exponent == 1:
        return base
    return _build(POW, (base,), exponent)


def ipower(base, exponent):
    """Integer power."""
    if exponent == 0:
        return const(1)
    if exponent == 1:
        return base
    if base.kind == IPOW:
        return ipower(base.children[0], base.exponent * int(exponent))
    return _build(IPOW, (base,), int(exponent))


def exp(operand):
    return _build(EXP, (operand,))


def log(operand):
    """Principal-branch logarithm."""
    return _build(LOG, (operand,))


def substitute(expr, replacement):
    """
    Return `expr` with the variable replaced by `replacement`.

    This is the composition `expr o replacement`.

    >>> from disknorm.expr import parse
    >>> substitute(parse("1/(1-z)"), parse("z^2"))
    Expr('1/(1 - z^2)')
    """
    memo = {}

    def visit(node):
        try:
            return memo[node]
        except KeyError:
            pass
        if node.kind == VAR:
            result = replacement
        elif node.kind == CONST:
            result = node
        else:
            children = tuple(visit(child) for child in node.children)
            result = rebuild(node, children)
        memo[node] = result
        return result

    return visit(expr)


def rebuild(node, children):
    """Rebuild `node` with new `children` through the folding constructors."""
    kind = node.kind
    if ASSERTIONS:  # pragma: no branch
        assert len(children) == ARITY[kind], "Arity mismatch."
    if kind == ADD:
        return add(*children)
    if kind == SUB:
        return sub(*children)
    if kind == MUL:
        return mul(*children)
    if kind == DIV:
        return div(*children)
    if kind == NEG:
        return neg(*children)
    if kind == POW:
        return power(children[0], node.exponent)
    if kind == IPOW:
        return ipower(children[0], node.exponent)
    if kind == EXP:
        return exp(*children)
    if kind == LOG:
        return log(*children)
    return node
