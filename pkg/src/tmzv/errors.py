"""Domain error types shared across the package."""


class NotInH1Error(ValueError):
    """Word does not end in y, so it has no z-letter decomposition."""


class NotInH0Error(ValueError):
    """Word does not correspond to an admissible (convergent) index."""


class DivergentError(ValueError):
    """Numerical evaluation of a non-admissible index was requested."""


class BadParamsError(ValueError):
    """Identity parameters outside their stated range."""
