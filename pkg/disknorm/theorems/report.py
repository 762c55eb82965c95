"""
Check Reports.

A :any:`Check` collects computed values and their comparisons while a checker
runs and turns them into an immutable :any:`CheckReport`.
"""

import logging
import time

from ..util import _repr


class CheckReport:
    """
    Outcome of one checker.

    Args:
        check_id (str): name of the check.

    Keyword Args:
        inputs (dict): serialized parameters.
        computed (dict): computed values by name.
        expected (dict): per name a dict `{"value", "provenance", "sense"}` with
            `sense` one of `"equal"`, `"upper"` and `"lower"`.
        tolerance (float): tolerance of the comparisons.
        passed (bool): all comparisons hold.
        runtime_ms (int): wall-clock time.
        verdict (str): additional outcome of checks which only test a hypothesis.

    >>> report = CheckReport("demo", computed={"x": 1.0}, passed=True)
    >>> report
    CheckReport('demo', computed={'x': 1.0}, expected={}, inputs={}, passed=True, runtime_ms=0, tolerance=0.0, verdict=None)
    """

    def __init__(
        self,
        check_id,
        inputs=None,
        computed=None,
        expected=None,
        tolerance=0.0,
        passed=False,
        runtime_ms=0,
        verdict=None,
    ):
        # pylint: disable=R0913
        self.check_id = check_id
        self.inputs = inputs or {}
        self.computed = computed or {}
        self.expected = expected or {}
        self.tolerance = tolerance
        self.passed = passed
        self.runtime_ms = runtime_ms
        self.verdict = verdict

    def __repr__(self):
        return _repr(self, args=[repr(self.check_id)], nameblacklist=["check_id"])

    def __eq__(self, other):
        return isinstance(other, CheckReport) and self.__dict__ == other.__dict__

    __hash__ = None


class Check:
    """
    Builder of a :any:`CheckReport`.

    Args:
        check_id (str): name of the check.
        tolerance (float): default tolerance of all comparisons.

    Keyword Args:
        inputs: serialized parameters.

    >>> check = Check("demo", 1e-3, t=0.5)
    >>> check.equal("value", 5.0004, 5.0, "hand computation")
    True
    >>> check.upper("gap", 1.01, 1.0, "theorem")
    False
    >>> report = check.report()
    >>> report.passed, sorted(report.computed)
    (False, ['gap', 'value'])
    >>> report.expected["gap"]
    {'value': 1.0, 'provenance': 'theorem', 'sense': 'upper'}
    """

    def __init__(self, check_id, tolerance, **inputs):
        self.check_id = check_id
        self.tolerance = tolerance
        self.inputs = inputs
        self.computed = {}
        self.expected = {}
        self.failures = []
        self.verdict = None
        self._start = time.perf_counter()

    def __repr__(self):
        return _repr(self, nameblacklist=["computed", "expected"])

    def record(self, name, value):
        """Record `value` without comparison."""
        self.computed[name] = value
        return value

    def compare(self, name, value, expected, provenance, sense="equal", tolerance=None, relative=False):
        """
        Record `value` and compare it with `expected`.

        Keyword Args:
            sense (str): `"equal"` for a two-sided, `"upper"` and `"lower"` for one-sided comparisons.
            tolerance (float): overrides the default tolerance.
            relative (bool): the tolerance is relative to `|expected|`.
        """
        # pylint: disable=R0913
        tolerance = self.tolerance if tolerance is None else tolerance
        slack = tolerance * abs(expected) if relative else tolerance
        if sense == "equal":
            holds = abs(value - expected) <= slack
        elif sense == "upper":
            holds = value <= expected + slack
        elif sense == "lower":
            holds = value >= expected - slack
        else:
            raise ValueError("Unknown comparison sense %r." % (sense,))
        self.computed[name] = value
        self.expected[name] = {"value": expected, "provenance": provenance, "sense": sense}
        if not holds:
            self.failures.append(name)
        return holds

    def equal(self, name, value, expected, provenance, **kwargs):
        return self.compare(name, value, expected, provenance, sense="equal", **kwargs)

    def upper(self, name, value, bound, provenance, **kwargs):
        return self.compare(name, value, bound, provenance, sense="upper", **kwargs)

    def lower(self, name, value, bound, provenance, **kwargs):
        return self.compare(name, value, bound, provenance, sense="lower", **kwargs)

    def require(self, name, holds):
        """Fail the check unless `holds`."""
        if not holds:
            self.failures.append(name)
        return holds

    def report(self):
        passed = not self.failures
        runtime_ms = int(round((time.perf_counter() - self._start) * 1000))
        logging.getLogger(__name__).info(
            "%s: %s%s", self.check_id, "pass" if passed else "FAIL", "" if passed else " (%s)" % ", ".join(self.failures)
        )
        return CheckReport(
            self.check_id,
            inputs=self.inputs,
            computed=self.computed,
            expected=self.expected,
            tolerance=self.tolerance,
            passed=passed,
            runtime_ms=runtime_ms,
            verdict=self.verdict,
        )
