"""Closed-form topological invariants of the manifolds A(l,rho,k1,k2) and
B(l,rho,k1,k2).

Family A is the projectivization of a sum of line bundles over CP^l
(a 2-stage generalized Bott manifold); family B is the unit sphere bundle
of k1 copies of a twisted line bundle plus a trivial R^(2*k2+1) summand.
Cohomology rings and total Pontrjagin / Stiefel-Whitney classes come from
the standard product formulas for these bundles.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from torusclass.intpoly import Domain, GradedPoly
from torusclass.quotient import (NormalElement, RingPresentation, canonicalize,
                                 normal_form, presentation_mod2)


class DescriptorError(ValueError):
    """Raised for a malformed or out-of-range manifold descriptor."""


@dataclass(frozen=True)
class ManifoldDescriptor:
    """Parameter tuple naming a manifold: family A or B, l >= 1, rho, k1 >= 1, k2.

    Family A requires k2 >= 1 (the fiber is a projective space of a rank
    k1+k2 bundle); family B allows k2 >= 0.
    """

    family: str
    ell: int
    rho: int
    k1: int
    k2: int

    def __post_init__(self):
        if self.family not in ("A", "B"):
            raise DescriptorError(f"family must be 'A' or 'B', got {self.family!r}")
        if self.ell < 1:
            raise DescriptorError(f"l must be >= 1, got {self.ell}")
        if self.k1 < 1:
            raise DescriptorError(f"k1 must be >= 1, got {self.k1}")
        k2_min = 1 if self.family == "A" else 0
        if self.k2 < k2_min:
            raise DescriptorError(
                f"family {self.family} requires k2 >= {k2_min}, got {self.k2}")

    _GRAMMAR = re.compile(
        r"\s*([AB])\s*\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)\s*$")

    @classmethod
    def parse(cls, text: str) -> "ManifoldDescriptor":
        """Parse 'A(l,rho,k1,k2)' / 'B(l,rho,k1,k2)' with signed integers."""
        m = cls._GRAMMAR.match(text)
        if not m:
            raise DescriptorError(
                f"cannot parse descriptor {text!r}: expected A(l,rho,k1,k2) or B(l,rho,k1,k2)")
        fam, ell, rho, k1, k2 = m.groups()
        return cls(fam, int(ell), int(rho), int(k1), int(k2))

    def render(self) -> str:
        return f"{self.family}({self.ell},{self.rho},{self.k1},{self.k2})"

    def __str__(self) -> str:
        return self.render()


@dataclass
class CharClassReport:
    """Bundle of the invariants of one manifold."""

    descriptor: ManifoldDescriptor
    dimension: int
    cohomology: RingPresentation
    pontrjagin: NormalElement
    stiefel_whitney: NormalElement

    def to_json(self) -> dict:
        return {
            "descriptor": self.descriptor.render(),
            "dimension": self.dimension,
            "cohomology": self.cohomology.to_json(),
            "pontrjagin": self.pontrjagin.text(),
            "stiefel_whitney": self.stiefel_whitney.text(),
        }


def dimension(d: ManifoldDescriptor) -> int:
    """Real dimension: base CP^l plus the fiber (CP^(k1+k2-1) or S^(2k1+2k2))."""
    if d.family == "A":
        return 2 * (d.ell + d.k1 + d.k2 - 1)
    return 2 * (d.ell + d.k1 + d.k2)


def cohomology(d: ManifoldDescriptor) -> RingPresentation:
    """Integral cohomology ring as a canonical two-generator presentation.

    A(l,rho,k1,k2):        Z[x,y] / <x^(l+1), y^k2 (y + rho x)^k1>, deg y = 2
    B(l,rho,k1,0):         Z[x,z] / <x^(l+1), z(z + (rho x)^k1)>,   deg z = 2 k1
    B(l,rho,k1,k2), k2>0:  Z[x,z] / <x^(l+1), z^2>,                 deg z = 2(k1+k2)
    """
    if d.family == "A":
        gens = (("x", 2), ("y", 2))
        x = GradedPoly.generator(gens, "x")
        y = GradedPoly.generator(gens, "y")
        f = (y ** d.k2) * ((y + d.rho * x) ** d.k1)
        raw = RingPresentation("x", "y", 2, d.ell, f)
    elif d.k2 == 0:
        w_degree = 2 * d.k1
        gens = (("x", 2), ("z", w_degree))
        x = GradedPoly.generator(gens, "x")
        z = GradedPoly.generator(gens, "z")
        f = z * (z + (d.rho * x) ** d.k1)
        raw = RingPresentation("x", "z", w_degree, d.ell, f)
    else:
        w_degree = 2 * (d.k1 + d.k2)
        gens = (("x", 2), ("z", w_degree))
        z = GradedPoly.generator(gens, "z")
        raw = RingPresentation("x", "z", w_degree, d.ell, z * z)
    return canonicalize(raw)


def _pontrjagin_product(d: ManifoldDescriptor, gens) -> GradedPoly:
    x = GradedPoly.generator(gens, "x")
    if d.family == "A":
        y = GradedPoly.generator(gens, "y")
        one = GradedPoly.one(gens)
        return ((one + x * x) ** (d.ell + 1)
                * (one + (d.rho * x + y) ** 2) ** d.k1
                * (one + y * y) ** d.k2)
    one = GradedPoly.one(gens)
    return (one + x * x) ** (d.ell + 1) * (one + d.rho * d.rho * x * x) ** d.k1


def _stiefel_whitney_product(d: ManifoldDescriptor, gens,
                             domain: Domain = Domain.MOD2) -> GradedPoly:
    """Product formula for the total Stiefel-Whitney class.

    Computed over the requested domain so tests can cross-check the native
    mod-2 product against the reduced integer expansion.
    """
    x = GradedPoly.generator(gens, "x", domain)
    one = GradedPoly.one(gens, domain)
    if d.family == "A":
        y = GradedPoly.generator(gens, "y", domain)
        return ((one + x) ** (d.ell + 1)
                * (one + d.rho * x + y) ** d.k1
                * (one + y) ** d.k2)
    return (one + x) ** (d.ell + 1) * (one + d.rho * x) ** d.k1


def pontrjagin(d: ManifoldDescriptor) -> NormalElement:
    """Total Pontrjagin class, reduced to normal form in cohomology(d)."""
    P = cohomology(d)
    return normal_form(_pontrjagin_product(d, P.gens), P)


def stiefel_whitney(d: ManifoldDescriptor) -> NormalElement:
    """Total Stiefel-Whitney class in the mod-2 cohomology presentation."""
    P2 = presentation_mod2(cohomology(d))
    return normal_form(_stiefel_whitney_product(d, P2.gens), P2)


def report(d: ManifoldDescriptor) -> CharClassReport:
    return CharClassReport(
        descriptor=d,
        dimension=dimension(d),
        cohomology=cohomology(d),
        pontrjagin=pontrjagin(d),
        stiefel_whitney=stiefel_whitney(d),
    )
