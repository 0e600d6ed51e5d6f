"""Exact identities, partial sums and generating functions for squares of
Fibonacci-like numbers."""

__version__ = "0.1.0"

from .sequence import FIBONACCI, LUCAS, SequenceSpec, fib, g_at, g_range, lucas

__all__ = ["FIBONACCI", "LUCAS", "SequenceSpec", "fib", "g_at", "g_range", "lucas", "__version__"]
