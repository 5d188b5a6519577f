"""Exact computation with finite Weyl groups: separable elements, splittings
of generalized quotients, nested sets on Dynkin graphs, and linear-extension
inequalities, with brute-force verification built in."""

from . import errors, linext, nested, order, pattern, qpoly, quotient, rootsys, separable, weyl
from .qpoly import QPolynomial
from .rootsys import RootSystem, Subsystem, build, direct_sum, parse_type, type_string
from .weyl import GroupElement

__all__ = [
    "errors",
    "linext",
    "nested",
    "order",
    "pattern",
    "qpoly",
    "quotient",
    "rootsys",
    "separable",
    "weyl",
    "QPolynomial",
    "RootSystem",
    "Subsystem",
    "GroupElement",
    "build",
    "direct_sum",
    "parse_type",
    "type_string",
]

__version__ = "0.1.0"
