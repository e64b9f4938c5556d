"""Exact representation catalog and wave-equation spectra for the Lorentz group."""

__version__ = "0.1.0"
