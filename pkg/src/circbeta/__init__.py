"""circbeta: matrix-model samplers for circular and Jacobi beta-ensembles.

The library side exposes the coefficient-sequence machinery (``opuc``), the
sparse five-diagonal and dense Hessenberg operator models (``cmv``), the
circle-to-interval dictionary (``szego_map``), the building-block
distributions (``distributions``), and the ensemble samplers plus their
verification oracles (``ensembles``).  The ``circbeta`` command line wraps
sampling, validation suites, closed-form evaluation, and histogram reports.
"""

from .rng import RngStream
from .errors import (
    DegeneracyWarning,
    DegenerateMeasureError,
    DegenerateSpectrumError,
    EnvelopeError,
    ParameterDomainError,
)
from .opuc import MonicPolynomial, SpectralMeasureCircle, VerblunskySeq
from .szego_map import JacobiOperator, SpectralMeasureInterval
from .ensembles import EnsembleSpec, SampleBatch, sample_circular, sample_jacobi

__version__ = "0.1.0"

__all__ = [
    "RngStream",
    "VerblunskySeq",
    "MonicPolynomial",
    "SpectralMeasureCircle",
    "SpectralMeasureInterval",
    "JacobiOperator",
    "EnsembleSpec",
    "SampleBatch",
    "sample_circular",
    "sample_jacobi",
    "ParameterDomainError",
    "DegenerateMeasureError",
    "DegenerateSpectrumError",
    "EnvelopeError",
    "DegeneracyWarning",
    "__version__",
]
