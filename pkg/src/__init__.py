"""
oscphase - frequency-independent phase-function solver for oscillatory ODEs
"""

__version__ = "1.0.0"
