from ..iterators import PostOrderIter
from .node import ADD, CONST, DIV, EXP, IPOW, LOG, MUL, NEG, POW, SUB, VAR, const, ipower, power


def differentiate(expr):
    """
    Derivative of `expr` with respect to `z`.

    Structural rules only. Literal subtrees are folded, nothing else is simplified.

    >>> from disknorm.expr import parse
    >>> differentiate(parse("z"))
    Expr('1')
    >>> differentiate(parse("1/(1-z)"))
    Expr('1/(1 - z)^2')
    >>> differentiate(parse("exp(2*z)"))
    Expr('exp(2*z)*2')
    """
    derivatives = {}
    for node in PostOrderIter(expr, unique=True):
        derivatives[node] = _rule(node, [derivatives[child] for child in node.children])
    return derivatives[expr]


def _rule(node, dchildren):
    # pylint: disable=R0911
    kind = node.kind
    if kind == CONST:
        return const(0)
    if kind == VAR:
        return const(1)
    if kind == ADD:
        return dchildren[0] + dchildren[1]
    if kind == SUB:
        return dchildren[0] - dchildren[1]
    if kind == NEG:
        return -dchildren[0]
    if kind == EXP:
        return node * dchildren[0]
    if kind == LOG:
        return dchildren[0] / node.children[0]
    if kind == MUL:
        left, right = node.children
        return dchildren[0] * right + left * dchildren[1]
    if kind == DIV:
        left, right = node.children
        return (dchildren[0] * right - left * dchildren[1]) / ipower(right, 2)
    base = node.children[0]
    if kind == POW:
        return const(node.exponent) * power(base, node.exponent - 1) * dchildren[0]
    if kind == IPOW:
        return const(node.exponent) * ipower(base, node.exponent - 1) * dchildren[0]
    raise AssertionError("Unknown node kind %r." % (kind,))  # pragma: no cover
