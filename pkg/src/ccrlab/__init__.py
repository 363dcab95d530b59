"""Uncertainty, coherence and complementarity quantifiers for finite-dimensional states."""

from .complementarity import QuantifierReport, ccr_report
from .exceptions import (
    ConsistencyError,
    ConvergenceError,
    DimensionError,
    NotPSDError,
    ValidationError,
)
from .states import BipartitePureState, DensityMatrix, DetectorModel

__version__ = "0.1.0"
