# -*- coding: utf-8 -*-
"""
Expression Tree Iteration.

* :any:`PreOrderIter`: iterate over an expression using pre-order strategy (self, children)
* :any:`PostOrderIter`: iterate over an expression using post-order strategy (children, self)

Expressions share subtrees. Both iterators take `unique=True` to visit every
distinct subexpression once.
"""

from .abstractiter import AbstractIter  # noqa
from .postorderiter import PostOrderIter  # noqa
from .preorderiter import PreOrderIter  # noqa
