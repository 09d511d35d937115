"""Exact numerical invariants of Grassmannians and their invariant bundles.

Degrees are taken with respect to the Pluecker embedding, whose hyperplane
class generates the Picard group.  Slopes deg(c1)/rank are exact rationals,
carried as :class:`fractions.Fraction` values (always reduced, positive
denominator), never floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .bbw import GrassmannSpace, HomogeneousBundle
from .weights import weyl_dim

__all__ = [
    "NonIntegralChernDegree",
    "variety_dimension",
    "degree",
    "rank",
    "slope",
    "c1_degree",
]


class NonIntegralChernDegree(ArithmeticError):
    """Raised if slope * rank fails to be an integer; signals an internal bug."""


def variety_dimension(space: GrassmannSpace) -> int:
    """dim Gr(k, n) = (k+1)(n-k)."""
    return space.dimension


def degree(space: GrassmannSpace) -> int:
    """Degree of Gr(k, n) under the Pluecker embedding.

    Computed as ((k+1)(n-k))! * 2! * 3! * ... * k! divided by
    n! * (n-1)! * ... * (n-k)!, all with exact big integers; the quotient
    is checked to be exact.  For k = 0 the small superfactorial is the
    empty product and the degree is 1: projective space embeds by the
    identity.
    """
    num = factorial(space.dimension)
    for j in range(2, space.k + 1):
        num *= factorial(j)
    den = 1
    for m in range(space.n - space.k, space.n + 1):
        den *= factorial(m)
    q, rem = divmod(num, den)
    assert rem == 0, "Grassmannian degree formula must divide exactly"
    return q


def rank(bundle: HomogeneousBundle) -> int:
    """Rank of Sigma^beta Q (x) Sigma^gamma S*: the product of the two
    irreducible GL dimensions."""
    space = bundle.space
    return weyl_dim(bundle.beta, space.quotient_rank) * weyl_dim(
        bundle.gamma, space.sub_rank
    )


def slope(bundle: HomogeneousBundle) -> Fraction:
    """Slope deg(c1)/rank, exactly.

    Equals (sum(beta)/(k+1) - sum(gamma)/(n-k)) * deg Gr(k, n).  The sums
    are plain signed sums of the entries; this is the reading under which
    the slope is additive under twisting (each unit of twist adds one
    Grassmannian degree) and the dual sub bundle gets slope -deg/(n-k).
    """
    space = bundle.space
    per_degree = Fraction(bundle.beta.total, space.quotient_rank) - Fraction(
        bundle.gamma.total, space.sub_rank
    )
    return per_degree * degree(space)


def c1_degree(bundle: HomogeneousBundle) -> int:
    """Degree of the first Chern class: slope times rank, as an integer."""
    product = slope(bundle) * rank(bundle)
    if product.denominator != 1:
        raise NonIntegralChernDegree(
            f"slope * rank = {product} is not an integer for {bundle}"
        )
    return product.numerator
