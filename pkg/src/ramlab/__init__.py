"""ramlab: exact computation of wild-ramification invariants on surfaces."""

__version__ = "0.1.0"
