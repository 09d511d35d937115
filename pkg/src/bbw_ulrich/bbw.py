"""Borel-Bott-Weil cohomology of GL(V)-invariant bundles on Grassmannians.

``Gr(k, n)`` denotes the Grassmannian of projective k-planes in P^n = P(V),
with dim V = n + 1.  Every irreducible GL(V)-invariant bundle on it is of
the form Sigma^beta Q (x) Sigma^gamma S*, where Q and S are the tautological
quotient and sub bundles of ranks k+1 and n-k, and beta, gamma are GL
weights of those lengths.

The cohomology of such a bundle is pure combinatorics.  Concatenate beta
and gamma into alpha in Z^{n+1} and add the staircase rho = (n+1, ..., 1):

* if two entries of alpha + rho coincide, every cohomology group vanishes;
* otherwise exactly one group survives, in degree equal to the number of
  inversions of alpha + rho, and it is the irreducible GL(V*)
  representation of highest weight sort(alpha + rho) - rho.

Everything in this module is a pure function of immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .weights import GLWeight, LengthMismatch, rho, sort_and_count, weyl_dim

__all__ = [
    "GrassmannSpace",
    "HomogeneousBundle",
    "CohomologyReport",
    "BadRange",
    "cohomology",
    "cohomology_table",
    "euler_characteristic",
    "h0",
    "structure_sheaf",
    "tautological_quotient",
    "tautological_subdual",
]


class BadRange(ValueError):
    """Raised when a twist range has its endpoints out of order."""


@dataclass(frozen=True)
class GrassmannSpace:
    """The Grassmannian Gr(k, n) of projective k-planes in P^n.

    Valid for every 0 <= k <= n-1, including both degenerate ends: k = 0 is
    projective n-space, k = n-1 its dual.  The isomorphic exchange
    Gr(k, n) ~ Gr(n-k-1, n) is available to callers but never forced.
    """

    k: int
    n: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n - 1:
            raise ValueError(f"need 0 <= k <= n-1, got k={self.k}, n={self.n}")

    @property
    def dimension(self) -> int:
        """dim Gr(k, n) = (k+1)(n-k)."""
        return (self.k + 1) * (self.n - self.k)

    @property
    def quotient_rank(self) -> int:
        """Rank k+1 of the tautological quotient bundle Q."""
        return self.k + 1

    @property
    def sub_rank(self) -> int:
        """Rank n-k of the tautological sub bundle S."""
        return self.n - self.k

    def __repr__(self) -> str:
        return f"Gr({self.k},{self.n})"


@dataclass(frozen=True)
class HomogeneousBundle:
    """The bundle Sigma^beta Q (x) Sigma^gamma S* on a Grassmannian.

    ``beta`` weights the quotient bundle (length k+1), ``gamma`` the dual of
    the sub bundle (length n-k).
    """

    space: GrassmannSpace
    beta: GLWeight
    gamma: GLWeight

    def __post_init__(self):
        if len(self.beta) != self.space.quotient_rank:
            raise LengthMismatch(
                f"beta has {len(self.beta)} entries, {self.space} needs "
                f"{self.space.quotient_rank}"
            )
        if len(self.gamma) != self.space.sub_rank:
            raise LengthMismatch(
                f"gamma has {len(self.gamma)} entries, {self.space} needs "
                f"{self.space.sub_rank}"
            )

    def twist(self, t: int) -> "HomogeneousBundle":
        """Tensor with O(t): adds t to every beta entry, gamma untouched."""
        return HomogeneousBundle(self.space, self.beta.shift(t), self.gamma)

    def normalize(self) -> tuple["HomogeneousBundle", int]:
        """Shift both weights so the last gamma entry becomes zero.

        Adding the same constant to beta and gamma gives an isomorphic
        bundle, so every bundle has a unique representative with
        gamma ending in 0.  Returns that representative and the shift
        applied; idempotent.
        """
        shift = -self.gamma.entries[-1]
        if shift == 0:
            return self, 0
        return (
            HomogeneousBundle(self.space, self.beta.shift(shift), self.gamma.shift(shift)),
            shift,
        )

    def dual(self) -> "HomogeneousBundle":
        """The dual bundle: negate and reverse each weight.  Involutive."""
        return HomogeneousBundle(
            self.space,
            GLWeight(-e for e in reversed(self.beta.entries)),
            GLWeight(-e for e in reversed(self.gamma.entries)),
        )


def structure_sheaf(space: GrassmannSpace, t: int = 0) -> HomogeneousBundle:
    """The line bundle O(t); O itself for t = 0."""
    return HomogeneousBundle(
        space,
        GLWeight((t,) * space.quotient_rank),
        GLWeight((0,) * space.sub_rank),
    )


def tautological_quotient(space: GrassmannSpace) -> HomogeneousBundle:
    """The tautological quotient bundle Q, of rank k+1."""
    return HomogeneousBundle(
        space,
        GLWeight((1,) + (0,) * space.k),
        GLWeight((0,) * space.sub_rank),
    )


def tautological_subdual(space: GrassmannSpace) -> HomogeneousBundle:
    """The dual S* of the tautological sub bundle, of rank n-k."""
    return HomogeneousBundle(
        space,
        GLWeight((0,) * space.quotient_rank),
        GLWeight((1,) + (0,) * (space.sub_rank - 1)),
    )


@dataclass(frozen=True)
class CohomologyReport:
    """Outcome of one cohomology evaluation.

    Either every group vanishes (``degree`` and ``weight`` are None,
    ``dimension`` is 0), or exactly one group survives: it sits in
    cohomological ``degree``, and is the irreducible GL(V*) representation
    of highest ``weight``, of the given ``dimension``.
    """

    degree: Optional[int] = None
    weight: Optional[GLWeight] = None
    dimension: int = 0

    @property
    def is_zero(self) -> bool:
        return self.degree is None


def cohomology(bundle: HomogeneousBundle, t: int = 0) -> CohomologyReport:
    """All cohomology of the twisted bundle, in one report.

    Forms alpha = (beta + t, gamma), adds the staircase, and reads the
    answer off the inversion structure as described in the module
    docstring.  At most one degree can be nonzero, and since each weight
    block is already strictly decreasing after adding the staircase, only
    cross-block pairs can invert; the degree therefore lies in
    [0, (k+1)(n-k)].
    """
    space = bundle.space
    staircase = rho(space.n + 1)
    alpha = tuple(e + t for e in bundle.beta.entries) + bundle.gamma.entries
    shifted = tuple(a + r for a, r in zip(alpha, staircase))
    outcome = sort_and_count(shifted)
    if outcome is None:
        return CohomologyReport()
    dominant, inversions = outcome
    assert 0 <= inversions <= space.dimension
    weight = GLWeight(d - r for d, r in zip(dominant, staircase))
    return CohomologyReport(
        degree=inversions,
        weight=weight,
        dimension=weyl_dim(weight, space.n + 1),
    )


def cohomology_table(
    bundle: HomogeneousBundle, t_min: int, t_max: int
) -> list[tuple[int, CohomologyReport]]:
    """Cohomology reports for every twist t in [t_min, t_max], ascending."""
    if t_min > t_max:
        raise BadRange(f"need t_min <= t_max, got [{t_min}, {t_max}]")
    return [(t, cohomology(bundle, t)) for t in range(t_min, t_max + 1)]


def euler_characteristic(bundle: HomogeneousBundle, t: int = 0) -> int:
    """chi of the twisted bundle: (-1)^degree * dimension, or 0.

    As a function of t this agrees with a single polynomial of degree at
    most dim Gr(k, n), the Hilbert polynomial when the bundle is O.
    """
    report = cohomology(bundle, t)
    if report.is_zero:
        return 0
    return -report.dimension if report.degree % 2 else report.dimension


def h0(bundle: HomogeneousBundle) -> int:
    """Dimension of the space of global sections."""
    report = cohomology(bundle)
    if report.degree == 0:
        return report.dimension
    return 0
