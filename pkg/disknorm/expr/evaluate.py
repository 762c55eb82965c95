"""
Expression Evaluation.

Logarithms and real powers use the principal branch pointwise.
"""

import numpy as np

from ..config import EPS_POLE
from ..iterators import PostOrderIter
from .exceptions import BranchCutError, PoleEncounteredError
from .node import ADD, CONST, DIV, EXP, IPOW, LOG, MUL, NEG, POW, SUB, VAR


class Evaluation:
    """
    Evaluate expressions at the sample points `zs`.

    Args:
        zs: complex sample points, any shape.

    Keyword Args:
        strict (bool): raise at the first bad sample instead of returning `nan` there.

    Values of subexpressions are cached, so evaluating `h`, `h'` and `h''`
    through one instance computes every shared subexpression once.

    A sum or difference that cancels below `EPS_POLE` relative to its operands
    is zero. Division by zero, a zero `log`/`pow` argument and a non-finite
    value mark the sample. Small divisors are kept: `(1-z)^4` at `z = 1 - 1e-8`
    evaluates to `1e-32`.

    >>> from disknorm.expr import parse
    >>> ev = Evaluation([0, 0.5, 1])
    >>> ev(parse("1/(1-z)")).real.tolist()
    [1.0, 2.0, nan]
    >>> parse("1-z") in ev.cache
    True
    >>> Evaluation([0, 1], strict=True)(parse("1/(1-z)"))
    Traceback (most recent call last):
      ...
    disknorm.expr.exceptions.PoleEncounteredError: Pole encountered at z=(1+0j).
    """

    def __init__(self, zs, strict=False):
        self.zs = np.asarray(zs, dtype=complex)
        self.strict = strict
        self.cache = {}

    def __call__(self, expr):
        cache = self.cache
        with np.errstate(all="ignore"):
            for node in PostOrderIter(expr, stop=lambda n: n in cache, unique=True):
                cache[node] = self._apply(node, [cache[child] for child in node.children])
        return cache[expr]

    def _apply(self, node, args):
        # pylint: disable=R0911
        kind = node.kind
        if kind == CONST:
            return np.full(self.zs.shape, node.value, dtype=complex)
        if kind == VAR:
            return self.zs
        if kind == ADD:
            return self._finite(_cancel(args[0] + args[1], args))
        if kind == SUB:
            return self._finite(_cancel(args[0] - args[1], args))
        if kind == MUL:
            return self._finite(args[0] * args[1])
        if kind == NEG:
            return -args[0]
        if kind == EXP:
            return self._finite(np.exp(args[0]))
        if kind == DIV:
            bad = self._guard(args[1], PoleEncounteredError)
            return self._finite(args[0] / args[1], bad)
        if kind == IPOW:
            bad = self._guard(args[0], PoleEncounteredError) if node.exponent < 0 else None
            return self._finite(args[0] ** node.exponent, bad)
        bad = self._guard(args[0], BranchCutError)
        if kind == LOG:
            return self._finite(np.log(args[0]), bad)
        if kind == POW:
            return self._finite(np.exp(node.exponent * np.log(args[0])), bad)
        raise AssertionError("Unknown node kind %r." % (kind,))  # pragma: no cover

    def _guard(self, values, exccls):
        bad = values == 0
        if self.strict and bad.any():
            raise exccls(complex(self.zs[bad].flat[0]))
        return bad

    def _finite(self, values, guarded=None):
        bad = ~np.isfinite(values)
        if guarded is not None:
            bad |= guarded
        if bad.any():
            if self.strict:
                raise PoleEncounteredError(complex(self.zs[bad].flat[0]))
            values = np.where(bad, np.nan, values)
        return values


def _cancel(values, args):
    """Sums cancelling below `EPS_POLE` relative to their operands are exact zeros."""
    scale = np.maximum(np.abs(args[0]), np.abs(args[1]))
    return np.where(np.isfinite(values) & (np.abs(values) <= EPS_POLE * scale), 0, values)


def evaluate(expr, z):
    """
    Value of `expr` at the point `z`.

    >>> from disknorm.expr import parse
    >>> evaluate(parse("1/(1-z)"), 0.5)
    (2+0j)
    >>> evaluate(parse("exp(-z)/(1-z)"), 0)
    (1+0j)
    >>> evaluate(parse("log(z)"), 0)
    Traceback (most recent call last):
      ...
    disknorm.expr.exceptions.BranchCutError: Zero argument of log/pow at z=0j.
    """
    return complex(Evaluation([z], strict=True)(expr)[0])


def evaluate_grid(expr, zs):
    """
    Values of `expr` at the points `zs`, `nan` where `expr` is undefined.

    >>> from disknorm.expr import parse
    >>> evaluate_grid(parse("log(z)"), [0, 1]).real.tolist()
    [nan, 0.0]
    """
    return Evaluation(zs)(expr)
