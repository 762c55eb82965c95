class ExprError(RuntimeError):
    """Expression Error."""


class ExprSyntaxError(ExprError):
    source = None

    def __init__(self, position, expected, found=None):
        """
        Source text does not conform to the expression grammar.

        Args:
            position (int): 0-based offset into the source.
            expected: tokens which would have been accepted at `position`.
            found (str): offending token text, `None` at end of input.
        """
        self.position = position
        self.expected = tuple(expected)
        self.found = found
        msg = "Expected %s at column %d, found %s." % (
            " or ".join(self.expected),
            self.column,
            "end of input" if found is None else repr(found),
        )
        super(ExprSyntaxError, self).__init__(msg)

    @property
    def column(self):
        """
        1-based column of the error.

        End of input is reported one column past the implicit line end, so
        `1/(1-z` fails at column 8.
        """
        return self.position + (2 if self.found is None else 1)


class UnknownIdentifierError(ExprError):
    source = None

    def __init__(self, name, position):
        """Identifier other than `z`, `i`, `exp` and `log`."""
        self.name = name
        self.position = position
        msg = "Unknown identifier %r at column %d." % (name, position + 1)
        super(UnknownIdentifierError, self).__init__(msg)


class PoleEncounteredError(ExprError):
    def __init__(self, z):
        """Division by a value of modulus below the pole guard."""
        self.z = z
        super(PoleEncounteredError, self).__init__("Pole encountered at z=%r." % (z,))


class BranchCutError(ExprError):
    def __init__(self, z):
        """Logarithm or non-integer power of zero."""
        self.z = z
        super(BranchCutError, self).__init__("Zero argument of log/pow at z=%r." % (z,))


class NotAnalyticAtZeroError(ExprError):
    """Expression has no Taylor expansion at the origin."""


class TruncationExhaustedError(NotAnalyticAtZeroError):
    """Cancellation in a division used up every coefficient of a truncated series."""
