"""Exact spectra, algebraic classification and field evaluation for
quasi-radial solutions of the two-dimensional gamma-Laplacian."""

from .classifier import AlgebraicCertificate, AlgebraicClass, classify, enumerate_algebraic
from .exact import QuadExt, quad_solve
from .field import FieldConfig, PlanePoint, eval_u, gradient, pde_residual, verify_suite
from .spectrum import DomainError, Gamma, Spectrum, make_spectrum

__all__ = [
    "AlgebraicCertificate",
    "AlgebraicClass",
    "DomainError",
    "FieldConfig",
    "Gamma",
    "PlanePoint",
    "QuadExt",
    "Spectrum",
    "classify",
    "enumerate_algebraic",
    "eval_u",
    "gradient",
    "make_spectrum",
    "pde_residual",
    "quad_solve",
    "verify_suite",
]

__version__ = "0.1.0"
