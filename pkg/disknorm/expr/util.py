"""Expression Utilities."""

from ..search import find_by_attr, findall
from .node import LOG, POW, VAR


def is_constant(expr):
    """
    `expr` does not depend on `z`.

    >>> from disknorm.expr import parse
    >>> is_constant(parse("exp(1+2i)/3"))
    True
    >>> is_constant(parse("1/(1-z)"))
    False
    """
    return find_by_attr(expr, VAR, unique=True) is None


def branch_nodes(expr):
    """
    Logarithms and real powers below `expr`, the nodes whose principal branch may jump.

    >>> from disknorm.expr import parse
    >>> branch_nodes(parse("(1-z)^0.5*log(1+z)/(1-z)^2"))
    (Expr('(1 - z)^0.5'), Expr('log(1 + z)'))
    """
    return findall(expr, filter_=lambda node: node.kind in (LOG, POW), unique=True)
