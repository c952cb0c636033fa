"""Orbit-method computations for the Heisenberg, symplectic and Jacobi groups."""

__version__ = "0.1.0"
