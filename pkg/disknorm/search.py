"""
Expression Searching.

Search subexpressions of an :any:`Expr` by predicate or by attribute value.
"""

from .iterators import PreOrderIter


def findall(node, filter_=None, stop=None, maxlevel=None, mincount=None, maxcount=None, unique=False):
    """
    Search subexpressions matching `filter_` but stop at `maxlevel` or `stop`.

    Return tuple with matching nodes.

    Args:
        node: top node, start searching.

    Keyword Args:
        filter_: function called with every `node` as argument, `node` is returned if `True`.
        stop: stop iteration at `node` if `stop` function returns `True` for `node`.
        maxlevel (int): maximum descending in the node hierarchy.
        mincount (int): minimum number of nodes.
        maxcount (int): maximum number of nodes.
        unique (bool): report structurally equal subexpressions once.

    Example expression:

    >>> from disknorm import RenderTree, AsciiStyle
    >>> from disknorm.expr import parse
    >>> e = parse("exp(-z)/(1-z) + log(1+z)")
    >>> print(RenderTree(e, style=AsciiStyle()).by_attr("label"))
    add
    |-- div
    |   |-- exp
    |   |   +-- neg
    |   |       +-- z
    |   +-- sub
    |       |-- const 1
    |       +-- z
    +-- log
        +-- add
            |-- const 1
            +-- z

    >>> findall(e, filter_=lambda node: node.kind in ("exp", "log"))
    (Expr('exp(-z)'), Expr('log(1 + z)'))
    >>> len(findall(e, filter_=lambda node: node.kind == "z"))
    3
    >>> findall(e, filter_=lambda node: node.kind == "z", unique=True)
    (Expr('z'),)

    The number of matches can be limited:

    >>> findall(e, filter_=lambda node: node.kind == "const", maxcount=1)  # doctest: +ELLIPSIS
    Traceback (most recent call last):
      ...
    disknorm.search.CountError: Expecting 1 elements at maximum, but found 2. (Expr('1'), Expr('1'))
    """
    return _findall(
        node, filter_=filter_, stop=stop, maxlevel=maxlevel, mincount=mincount, maxcount=maxcount, unique=unique
    )


def findall_by_attr(node, value, name="kind", maxlevel=None, mincount=None, maxcount=None, unique=False):
    """
    Search subexpressions with attribute `name` having `value` but stop at `maxlevel`.

    Return tuple with matching nodes.

    Args:
        node: top node, start searching.
        value: value which need to match

    Keyword Args:
        name (str): attribute name need to match
        maxlevel (int): maximum descending in the node hierarchy.
        mincount (int): minimum number of nodes.
        maxcount (int): maximum number of nodes.
        unique (bool): report structurally equal subexpressions once.

    >>> from disknorm.expr import parse
    >>> findall_by_attr(parse("(1-z)^0.5 + z^2"), "pow")
    (Expr('(1 - z)^0.5'),)
    >>> findall_by_attr(parse("(1-z)^0.5 + z^2"), 2, name="exponent")
    (Expr('z^2'),)
    """
    return _findall(
        node,
        filter_=lambda n: _filter_by_name(n, name, value),
        maxlevel=maxlevel,
        mincount=mincount,
        maxcount=maxcount,
        unique=unique,
    )


def find(node, filter_=None, stop=None, maxlevel=None, unique=False):
    """
    Search for *single* subexpression matching `filter_` but stop at `maxlevel` or `stop`.

    Return matching node.

    Args:
        node: top node, start searching.

    Keyword Args:
        filter_: function called with every `node` as argument, `node` is returned if `True`.
        stop: stop iteration at `node` if `stop` function returns `True` for `node`.
        maxlevel (int): maximum descending in the node hierarchy.
        unique (bool): report structurally equal subexpressions once.

    >>> from disknorm.expr import parse
    >>> e = parse("exp(-z)/(1-z)")
    >>> find(e, lambda node: node.kind == "exp")
    Expr('exp(-z)')
    >>> find(e, lambda node: node.kind == "log")
    >>> find(e, lambda node: node.kind == "z", unique=True)
    Expr('z')
    >>> find(e, lambda node: node.kind == "z")
    Traceback (most recent call last):
        ...
    disknorm.search.CountError: Expecting 1 elements at maximum, but found 2. (Expr('z'), Expr('z'))
    """
    return _find(node, filter_=filter_, stop=stop, maxlevel=maxlevel, unique=unique)


def find_by_attr(node, value, name="kind", maxlevel=None, unique=False):
    """
    Search for *single* subexpression with attribute `name` having `value` but stop at `maxlevel`.

    Return matching node.

    Args:
        node: top node, start searching.
        value: value which need to match

    Keyword Args:
        name (str): attribute name need to match
        maxlevel (int): maximum descending in the node hierarchy.
        unique (bool): report structurally equal subexpressions once.

    >>> from disknorm.expr import parse
    >>> find_by_attr(parse("1/(1-z)"), "sub")
    Expr('1 - z')
    >>> find_by_attr(parse("1/(1-z)"), "log")
    """
    return _find(node, filter_=lambda n: _filter_by_name(n, name, value), maxlevel=maxlevel, unique=unique)


def _find(node, filter_, stop=None, maxlevel=None, unique=False):
    items = _findall(node, filter_, stop=stop, maxlevel=maxlevel, maxcount=1, unique=unique)
    return items[0] if items else None


def _findall(node, filter_, stop=None, maxlevel=None, mincount=None, maxcount=None, unique=False):
    result = tuple(PreOrderIter(node, filter_, stop, maxlevel, unique=unique))
    resultlen = len(result)
    if mincount is not None and resultlen < mincount:
        msg = "Expecting at least %d elements, but found %d."
        raise CountError(msg % (mincount, resultlen), result)
    if maxcount is not None and resultlen > maxcount:
        msg = "Expecting %d elements at maximum, but found %d."
        raise CountError(msg % (maxcount, resultlen), result)
    return result


def _filter_by_name(node, name, value):
    try:
        return getattr(node, name) == value
    except AttributeError:
        return False


class CountError(RuntimeError):
    def __init__(self, msg, result):
        """Error raised on `mincount` or `maxcount` mismatch."""
        if result:
            msg += " " + repr(result)
        super(CountError, self).__init__(msg)
