"""Exception and warning types shared across the package."""


class ParameterDomainError(ValueError):
    """A distribution or ensemble parameter lies outside its legal domain."""


class DegenerateMeasureError(ValueError):
    """A discrete measure has coincident or missing support points."""


class DegenerateSpectrumError(ValueError):
    """A matrix has a spectral measure supported on fewer points than its size."""


class EnvelopeError(RuntimeError):
    """A rejection sampler's acceptance rate fell below the usable floor."""


class DegeneracyWarning(UserWarning):
    """Nearly coincident support points detected; results may lose accuracy."""
