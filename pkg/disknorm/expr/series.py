"""
Truncated Power Series.

A :any:`TaylorSeries` of order `N` holds the coefficients `c_0 .. c_N` of a
function at the origin. Arithmetic between two series truncates to the smaller
order.
"""

import cmath
import numbers

import numpy as np

from .exceptions import NotAnalyticAtZeroError, TruncationExhaustedError

# Coefficients below this fraction of the largest one count as zero for division.
_ZERO = 1e-13


class TaylorSeries:
    """
    Truncated Taylor series at the origin.

    Args:
        coefficients: complex coefficients `c_0 .. c_N`, at least one.

    >>> s = TaylorSeries([1, 1, 1])
    >>> s
    TaylorSeries([1, 1, 1])
    >>> s.order
    2
    >>> s * s
    TaylorSeries([1, 2, 3])
    >>> 1 / TaylorSeries([1, -1, 0, 0])
    TaylorSeries([1, 1, 1, 1])
    >>> s(0.5)
    (1.75+0j)

    A common power of `z` cancels in divisions, lowering the order:

    >>> TaylorSeries([0, 1, 1, 1]) / TaylorSeries([0, 1, 0, 0])
    TaylorSeries([1, 1, 1])
    """

    def __init__(self, coefficients):
        coefficients = np.array(coefficients, dtype=complex).reshape(-1)
        if not coefficients.size:
            raise ValueError("A Taylor series needs at least one coefficient.")
        coefficients.flags.writeable = False
        self.__coefficients = coefficients

    @staticmethod
    def constant(value, order):
        """Series of the constant `value`."""
        coefficients = np.zeros(order + 1, dtype=complex)
        coefficients[0] = value
        return TaylorSeries(coefficients)

    @staticmethod
    def variable(order):
        """Series of `z`."""
        coefficients = np.zeros(order + 1, dtype=complex)
        if order:
            coefficients[1] = 1
        return TaylorSeries(coefficients)

    @property
    def coefficients(self):
        """Read-only coefficient array."""
        return self.__coefficients

    @property
    def order(self):
        """Truncation order `N`."""
        return len(self.__coefficients) - 1

    def __len__(self):
        return len(self.__coefficients)

    def __getitem__(self, index):
        return complex(self.__coefficients[index])

    def __iter__(self):
        return (complex(c) for c in self.__coefficients)

    def __repr__(self):
        # pylint: disable=C0415
        from .printer import format_number

        return "%s([%s])" % (self.__class__.__name__, ", ".join(format_number(c) for c in self.__coefficients))

    def __call__(self, z):
        """Partial sum at `z`."""
        return complex(np.polynomial.polynomial.polyval(complex(z), self.__coefficients))

    def truncate(self, order):
        """Series cut down to `order`."""
        if not 0 <= order <= self.order:
            raise ValueError("Cannot truncate order %d to %d." % (self.order, order))
        return TaylorSeries(self.__coefficients[: order + 1])

    def _align(self, other):
        if isinstance(other, TaylorSeries):
            order = min(self.order, other.order)
            return self.__coefficients[: order + 1], other.coefficients[: order + 1]
        if isinstance(other, numbers.Number):
            return self.__coefficients, TaylorSeries.constant(other, self.order).coefficients
        return None, None

    def __add__(self, other):
        left, right = self._align(other)
        return NotImplemented if left is None else TaylorSeries(left + right)

    __radd__ = __add__

    def __sub__(self, other):
        left, right = self._align(other)
        return NotImplemented if left is None else TaylorSeries(left - right)

    def __rsub__(self, other):
        left, right = self._align(other)
        return NotImplemented if left is None else TaylorSeries(right - left)

    def __neg__(self):
        return TaylorSeries(-self.__coefficients)

    def __mul__(self, other):
        left, right = self._align(other)
        if left is None:
            return NotImplemented
        return TaylorSeries(np.convolve(left, right)[: len(left)])

    __rmul__ = __mul__

    def __truediv__(self, other):
        left, right = self._align(other)
        return NotImplemented if left is None else TaylorSeries(_divide(left, right))

    def __rtruediv__(self, other):
        left, right = self._align(other)
        return NotImplemented if left is None else TaylorSeries(_divide(right, left))

    def __pow__(self, exponent):
        if isinstance(exponent, numbers.Integral):
            return _ipow(self, int(exponent))
        if isinstance(exponent, numbers.Real):
            return series_pow(self, exponent)
        return NotImplemented


def _valuation(coefficients, scale):
    nonzero = np.flatnonzero(np.abs(coefficients) > _ZERO * scale)
    return int(nonzero[0]) if nonzero.size else None


def _divide(numerator, divisor):
    scale = max(np.abs(divisor).max(), np.abs(numerator).max(), 1.0)
    shift = _valuation(divisor, scale)
    if shift is None:
        raise TruncationExhaustedError("Division by a zero series.")
    if shift:
        if np.any(np.abs(numerator[:shift]) > _ZERO * scale):
            raise NotAnalyticAtZeroError("Quotient has a pole at the origin.")
        numerator, divisor = numerator[shift:], divisor[shift:]
    quotient = np.zeros(len(numerator), dtype=complex)
    lead = divisor[0]
    for k in range(len(numerator)):
        quotient[k] = (numerator[k] - np.dot(divisor[1 : k + 1], quotient[:k][::-1])) / lead
    return quotient


def _ipow(series, exponent):
    if exponent < 0:
        return 1 / _ipow(series, -exponent)
    result = TaylorSeries.constant(1, series.order)
    base = series
    while exponent:
        if exponent & 1:
            result = result * base
        exponent >>= 1
        if exponent:
            base = base * base
    return result


def series_integrate(series):
    """
    Termwise antiderivative with zero constant term, one order higher.

    >>> series_integrate(TaylorSeries([1, 1, 1]))
    TaylorSeries([0, 1, 0.5, 0.3333333333333333])
    >>> series_integrate(TaylorSeries([0]))
    TaylorSeries([0, 0])
    """
    coefficients = series.coefficients
    return TaylorSeries(np.concatenate(([0], coefficients / np.arange(1, len(coefficients) + 1))))


def series_derivative(series):
    """
    Termwise derivative, one order lower. A constant yields the zero series.

    >>> series_derivative(TaylorSeries([1, 1, 1]))
    TaylorSeries([1, 2])
    """
    coefficients = series.coefficients
    if len(coefficients) == 1:
        return TaylorSeries([0])
    return TaylorSeries(coefficients[1:] * np.arange(1, len(coefficients)))


def series_exp(series):
    """
    Exponential of `series`, same order.

    Uses the recurrence following from `(exp s)' = s' exp s`.

    >>> series_exp(TaylorSeries([0]))
    TaylorSeries([1])
    >>> series_exp(TaylorSeries([0, 1, 0, 0]))
    TaylorSeries([1, 1, 0.5, 0.16666666666666666])
    """
    s = series.coefficients
    n = len(s)
    result = np.zeros(n, dtype=complex)
    result[0] = cmath.exp(s[0])
    weighted = np.arange(n) * s
    for k in range(1, n):
        result[k] = np.dot(weighted[1 : k + 1], result[:k][::-1]) / k
    return TaylorSeries(result)


def series_log(series):
    """
    Logarithm of `series`, principal branch at the origin, same order.

    >>> series_log(TaylorSeries([1, -1, 0, 0]))
    TaylorSeries([0, -1, -0.5, -0.3333333333333333])
    """
    lead = series[0]
    if abs(lead) <= _ZERO * max(np.abs(series.coefficients).max(), 1.0):
        raise NotAnalyticAtZeroError("Logarithm of a series vanishing at the origin.")
    if series.order == 0:
        return TaylorSeries([cmath.log(lead)])
    return series_integrate(series_derivative(series) / series) + cmath.log(lead)


def series_pow(series, exponent):
    """
    Principal power `series ** exponent` for real `exponent`, same order.

    >>> series_pow(TaylorSeries([1, 2, 1]), 0.5)
    TaylorSeries([1, 1, 0])
    """
    return series_exp(series_log(series) * float(exponent))
