"""torusclass: exact invariants and diffeomorphism classification for a
family of sphere- and projective-bundle torus manifolds over CP^l."""

from torusclass.intpoly import Domain, GradedPoly
from torusclass.invariants import ManifoldDescriptor

__all__ = ["Domain", "GradedPoly", "ManifoldDescriptor"]
__version__ = "0.1.0"
