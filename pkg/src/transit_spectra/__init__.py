"""Distance-spectral irregularity of connected graphs."""

__version__ = "0.1.0"
