class NoFiniteSamplesError(RuntimeError):
    """Every sample of an objective was skipped."""
