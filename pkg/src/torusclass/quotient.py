"""Two-generator graded quotient rings Z[x,w]/<x^(l+1), f(x,w)>.

The first generator has degree 2 and is truncated at power l+1; the second
relation f is monic in w, homogeneous, with coefficients that are
polynomials in x.  Division by f (monic in w) followed by truncation in x
is a complete, confluent reduction, so every coset has a unique normal
form on the monomial basis x^a w^b, a <= l, b <= D-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from torusclass.intpoly import Domain, GradedPoly, substitute


class RingPresentation:
    """Presentation of Z[x,w]/<x^(ell+1), relation> with relation monic in w."""

    __slots__ = ("x_name", "w_name", "w_degree", "ell", "relation", "domain")

    def __init__(self, x_name: str, w_name: str, w_degree: int, ell: int,
                 relation: GradedPoly, domain: Domain = Domain.INT):
        if ell < 0:
            raise ValueError(f"truncation exponent must be >= 0, got ell={ell}")
        if w_degree <= 0 or w_degree % 2:
            raise ValueError(f"w must have even positive degree, got {w_degree}")
        expected = ((x_name, 2), (w_name, w_degree))
        if relation.gens != expected:
            raise ValueError(f"relation generators {relation.gens} != {expected}")
        if relation.domain is not domain:
            raise ValueError("relation domain does not match presentation domain")
        self.x_name = x_name
        self.w_name = w_name
        self.w_degree = w_degree
        self.ell = ell
        self.relation = relation
        self.domain = domain
        D = self.w_exponent
        if D < 1:
            raise ValueError("relation must involve w")
        lead = [(e, c) for e, c in relation.terms.items() if e[1] == D]
        if lead != [((0, D), 1)]:
            raise ValueError("relation is not monic in w")
        if not relation.is_homogeneous(D * w_degree):
            raise ValueError(f"relation is not homogeneous of degree {D * w_degree}")

    @property
    def w_exponent(self) -> int:
        """Degree D of the relation as a polynomial in w."""
        return max(e[1] for e in self.relation.terms)

    @property
    def gens(self):
        return ((self.x_name, 2), (self.w_name, self.w_degree))

    def is_canonical(self) -> bool:
        return all(e[0] <= self.ell for e in self.relation.terms)

    def poly(self, terms: Mapping[tuple[int, int], int]) -> GradedPoly:
        """Convenience constructor for polynomials over this presentation's generators."""
        return GradedPoly(self.gens, terms, self.domain)

    def zero(self) -> GradedPoly:
        return GradedPoly.zero(self.gens, self.domain)

    def one(self) -> GradedPoly:
        return GradedPoly.one(self.gens, self.domain)

    def x(self) -> GradedPoly:
        return GradedPoly.generator(self.gens, self.x_name, self.domain)

    def w(self) -> GradedPoly:
        return GradedPoly.generator(self.gens, self.w_name, self.domain)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingPresentation):
            return NotImplemented
        return (self.x_name == other.x_name and self.w_name == other.w_name
                and self.w_degree == other.w_degree and self.ell == other.ell
                and self.domain is other.domain and self.relation == other.relation)

    def __str__(self) -> str:
        coeff = "Z" if self.domain is Domain.INT else "F2"
        return (f"{coeff}[{self.x_name},{self.w_name}]/"
                f"<{self.x_name}^{self.ell + 1}, {self.relation.text()}>")

    def __repr__(self) -> str:
        return f"RingPresentation({self})"

    def to_json(self) -> dict:
        return {
            "gens": [[self.x_name, 2], [self.w_name, self.w_degree]],
            "ell": self.ell,
            "relation": self.relation.text(),
        }


def canonicalize(raw: RingPresentation) -> RingPresentation:
    """Drop relation terms with x-exponent beyond the truncation bound.

    <x^(l+1), f> = <x^(l+1), f mod x^(l+1)>, so this changes the
    presentation but not the ring; equality of canonical presentations is
    syntactic.
    """
    terms = {e: c for e, c in raw.relation.terms.items() if e[0] <= raw.ell}
    relation = GradedPoly(raw.relation.gens, terms, raw.domain)
    return RingPresentation(raw.x_name, raw.w_name, raw.w_degree, raw.ell, relation, raw.domain)


def presentation_mod2(P: RingPresentation) -> RingPresentation:
    """The same presentation shape with coefficients reduced mod 2."""
    if P.domain is Domain.MOD2:
        return P
    return RingPresentation(P.x_name, P.w_name, P.w_degree, P.ell,
                            P.relation.reduce_mod2(), Domain.MOD2)


@dataclass
class NormalElement:
    """A coset representative on the normal basis of its presentation."""

    presentation: RingPresentation
    poly: GradedPoly

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    @property
    def constant_term(self) -> int:
        return self.poly.constant_term

    def text(self) -> str:
        return self.poly.text()

    def __str__(self) -> str:
        return self.text()

    def __eq__(self, other) -> bool:
        if not isinstance(other, NormalElement):
            return NotImplemented
        return self.presentation == other.presentation and self.poly == other.poly


def normal_form(p: GradedPoly, P: RingPresentation) -> NormalElement:
    """Unique coset representative of p in the quotient ring.

    Rewrites w^D -> w^D - f (strictly lower w-order) until every term has
    w-exponent < D, dropping x-exponents > l along the way.
    """
    if p.gens != P.gens:
        raise ValueError(f"polynomial generators {p.gens} do not match presentation {P.gens}")
    if p.domain is not P.domain:
        raise ValueError("polynomial domain does not match presentation domain")
    D = P.w_exponent
    # w^D is congruent to -(f - w^D)
    low = {e: -c for e, c in P.relation.terms.items() if e != (0, D)}
    out: dict[tuple[int, ...], int] = {}
    work = dict(p.terms)
    while work:
        (a, b), c = work.popitem()
        if a > P.ell or c == 0:
            continue
        if b < D:
            out[(a, b)] = out.get((a, b), 0) + c
            continue
        for (i, j), d in low.items():
            e = (a + i, b - D + j)
            work[e] = work.get(e, 0) + c * d
    return NormalElement(P, GradedPoly(P.gens, out, P.domain))


def ring_equal(p: GradedPoly, q: GradedPoly, P: RingPresentation) -> bool:
    """True iff p and q represent the same coset."""
    return normal_form(p, P) == normal_form(q, P)


def additive_rank(P: RingPresentation) -> int:
    """Rank of the quotient as a free abelian group: (l+1) * D."""
    if not P.is_canonical():
        raise ValueError("additive_rank expects a canonical presentation")
    return (P.ell + 1) * P.w_exponent


def monomial_basis(P: RingPresentation) -> list[tuple[int, int]]:
    """The normal basis exponents (a, b), a <= l, b <= D-1, in graded order."""
    D = P.w_exponent
    basis = [(a, b) for a in range(P.ell + 1) for b in range(D)]
    basis.sort(key=lambda ab: (2 * ab[0] + P.w_degree * ab[1], ab))
    return basis


def graded_ranks(P: RingPresentation) -> dict[int, int]:
    """Rank of each graded component, degree -> rank."""
    ranks: dict[int, int] = {}
    for a, b in monomial_basis(P):
        d = 2 * a + P.w_degree * b
        ranks[d] = ranks.get(d, 0) + 1
    return ranks


def evaluate_hom(images: Mapping[str, GradedPoly], p: GradedPoly,
                 target: RingPresentation) -> NormalElement:
    """Substitute generator images into p and reduce in the target ring.

    Each image must be homogeneous of its generator's degree (zero counts
    as homogeneous of any degree).
    """
    for name, deg in p.gens:
        img = images.get(name)
        if img is None:
            raise ValueError(f"no image for generator {name!r}")
        if not img.is_homogeneous(deg):
            raise ValueError(f"image of {name!r} is not homogeneous of degree {deg}")
    return normal_form(substitute(p, images), target)
