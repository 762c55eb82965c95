"""
Expression Printing.

:any:`pretty_print` writes the infix form accepted by :any:`parse`.
"""

from .node import ADD, CONST, DIV, EXP, IPOW, LOG, MUL, NEG, POW, SUB, VAR

_PREC_ADD = 1
_PREC_MUL = 2
_PREC_NEG = 3
_PREC_POW = 4
_PREC_ATOM = 5

_BINARY = {ADD: " + ", SUB: " - ", MUL: "*", DIV: "/"}


def pretty_print(expr):
    """
    Infix text of `expr` with the least number of parentheses.

    >>> from disknorm.expr import parse
    >>> pretty_print(parse("exp(-z)/(1-z)"))
    'exp(-z)/(1 - z)'
    >>> pretty_print(parse("z/(1-z)^2"))
    'z/(1 - z)^2'
    >>> pretty_print(parse("(1+z)^0.5 - 2.5i*z"))
    '(1 + z)^0.5 - 2.5i*z'
    >>> pretty_print(parse("1 - (z - 1)"))
    '1 - (z - 1)'
    """
    memo = {}
    return _print(expr, memo)[0]


def format_number(value):
    """
    Text of the complex constant `value`.

    >>> format_number(2)
    '2'
    >>> format_number(0.25j)
    '0.25i'
    >>> format_number(1j)
    'i'
    >>> format_number(-1.5)
    '-1.5'
    >>> format_number(1 - 2j)
    '(1-2i)'
    """
    return _number(complex(value))[0]


def _real(value):
    if value.is_integer() and abs(value) < 1e16:
        return "%d" % value
    return repr(value)


def _imag(value):
    return "i" if value == 1 else _real(value) + "i"


def _number(value):
    re, im = value.real, value.imag
    if im == 0:
        if re < 0:
            return "-" + _real(-re), _PREC_NEG
        return _real(abs(re)), _PREC_ATOM
    if re == 0:
        if im < 0:
            return "-" + _imag(-im), _PREC_NEG
        return _imag(im), _PREC_ATOM
    sign = "+" if im > 0 else "-"
    return "(%s%s%s)" % (_real(re), sign, _imag(abs(im))), _PREC_ATOM


def _wrap(text, prec, needed):
    return "(%s)" % text if prec < needed else text


def _print(node, memo):
    try:
        return memo[node]
    except KeyError:
        pass
    kind = node.kind
    if kind == CONST:
        result = _number(node.value)
    elif kind == VAR:
        result = "z", _PREC_ATOM
    elif kind in (EXP, LOG):
        result = "%s(%s)" % (kind, _print(node.children[0], memo)[0]), _PREC_ATOM
    elif kind == NEG:
        text, prec = _print(node.children[0], memo)
        result = "-" + _wrap(text, prec, _PREC_NEG), _PREC_NEG
    elif kind in (POW, IPOW):
        text, prec = _print(node.children[0], memo)
        exponent = repr(node.exponent) if kind == POW else "%d" % node.exponent
        result = "%s^%s" % (_wrap(text, prec, _PREC_ATOM), exponent), _PREC_POW
    else:
        own = _PREC_ADD if kind in (ADD, SUB) else _PREC_MUL
        left, lprec = _print(node.children[0], memo)
        right, rprec = _print(node.children[1], memo)
        result = _wrap(left, lprec, own) + _BINARY[kind] + _wrap(right, rprec, own + 1), own
    memo[node] = result
    return result
