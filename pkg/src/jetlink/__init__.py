"""Invariants of Legendrian links in the 1-jet space of the circle.

Submodules: ``algebra`` (exact Laurent polynomials and skein elements),
``front`` (front diagrams), ``ruling``, ``closedform``, ``skein``, ``dga``,
``barannikov`` and ``cli``.
"""

from .algebra import AZPoly, SkeinElement, ZPoly
from .front import FrontDiagram, load_front

__all__ = ["AZPoly", "SkeinElement", "ZPoly", "FrontDiagram", "load_front"]
__version__ = "0.1.0"
