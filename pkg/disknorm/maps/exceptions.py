class MapError(RuntimeError):
    """Disk Map Error."""


class DegenerateFunctionError(MapError):
    """A derivative vanishes identically."""


class NotSensePreservingError(MapError):
    def __init__(self, z, modulus):
        """Dilatation modulus reaches the unit circle at `z`."""
        self.z = z
        self.modulus = modulus
        msg = "Map is not sense-preserving: |omega(%r)| = %r." % (z, modulus)
        super(NotSensePreservingError, self).__init__(msg)


class InvalidExponentError(MapError):
    """Power construction with a nonpositive exponent."""


class NormalizationError(MapError):
    """Map violates h(0) = g(0) = h'(0) = 1."""


class UnknownCatalogNameError(MapError):
    def __init__(self, name):
        """No catalog entry is called `name`."""
        self.name = name
        super(UnknownCatalogNameError, self).__init__("Unknown catalog name %r." % (name,))


class MapSpecError(MapError):
    """Map specification is inconsistent or malformed."""
