"""Exact lattice computations behind Kodaira-dimension transition bounds for
universal families of polarized holomorphic symplectic varieties."""

__version__ = "0.1.0"
