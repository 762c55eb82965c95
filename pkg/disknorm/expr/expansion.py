import logging

from ..config import TAYLOR_ORDER
from ..iterators import PostOrderIter
from .exceptions import NotAnalyticAtZeroError, TruncationExhaustedError
from .node import ADD, CONST, DIV, EXP, IPOW, LOG, MUL, NEG, POW, SUB, VAR
from .series import TaylorSeries, series_exp, series_log, series_pow

_RETRIES = 3


def taylor_expand(expr, order=TAYLOR_ORDER):
    """
    Taylor series of `expr` at the origin up to `order`.

    Coefficients come from series arithmetic, never from numerical differentiation.

    >>> from disknorm.expr import parse
    >>> taylor_expand(parse("1/(1-z)"), 5)
    TaylorSeries([1, 1, 1, 1, 1, 1])
    >>> taylor_expand(parse("-log(1-z)"), 4)
    TaylorSeries([0, 1, 0.5, 0.3333333333333333, 0.25])

    Removable singularities at the origin are fine:

    >>> taylor_expand(parse("(exp(z) - 1)/z"), 2)
    TaylorSeries([1, 0.5, 0.16666666666666666])
    >>> taylor_expand(parse("1/z"), 2)
    Traceback (most recent call last):
      ...
    disknorm.expr.exceptions.NotAnalyticAtZeroError: Quotient has a pole at the origin.
    """
    if order < 0:
        raise ValueError("Order must be nonnegative, got %d." % order)
    working = order
    for _ in range(_RETRIES):
        try:
            series = _expand(expr, working)
        except TruncationExhaustedError:
            working = 2 * working + 8
            continue
        if series.order >= order:
            return series.truncate(order)
        logging.getLogger(__name__).debug("Cancellation lost %d orders, expanding further.", order - series.order)
        working += order - series.order
    raise NotAnalyticAtZeroError("Cancellation exhausted the truncation order.")


def _expand(expr, order):
    values = {}
    for node in PostOrderIter(expr, unique=True):
        values[node] = _series(node, [values[child] for child in node.children], order)
    return values[expr]


def _series(node, args, order):
    # pylint: disable=R0911
    kind = node.kind
    if kind == CONST:
        return TaylorSeries.constant(node.value, order)
    if kind == VAR:
        return TaylorSeries.variable(order)
    if kind == ADD:
        return args[0] + args[1]
    if kind == SUB:
        return args[0] - args[1]
    if kind == MUL:
        return args[0] * args[1]
    if kind == DIV:
        return args[0] / args[1]
    if kind == NEG:
        return -args[0]
    if kind == EXP:
        return series_exp(args[0])
    if kind == LOG:
        return series_log(args[0])
    if kind == POW:
        return series_pow(args[0], node.exponent)
    if kind == IPOW:
        return args[0] ** node.exponent
    raise AssertionError("Unknown node kind %r." % (kind,))  # pragma: no cover
