"""Weyl group words and the Borel-Weil-Bott reduction.

This module computes the cohomology of homogeneous line bundles on flag varieties
`G/P`. A parabolic subgroup is described by the simple roots of its Levi factor (a
[ParabolicSpec][hororigid.weylbwb.ParabolicSpec]) and a bundle by a character `chi`
that is dominant for that Levi factor.

The reduction follows the Borel-Weil-Bott theorem: the character is moved to its
lowest Levi weight by the longest element `w_0^I` of the Levi Weyl group and shifted
by `-rho`. If the result pairs to zero with a positive coroot, every cohomology
group vanishes. Otherwise simple reflections are applied to positive coordinates
until the weight is strictly antidominant; the number of reflections is the unique
nonvanishing degree and the final weight gives the highest weight of the module.

Two entry points share that engine:

* [bwb_cohomology][hororigid.weylbwb.bwb_cohomology] takes `chi` exactly as in the
  statement of the theorem, the form used by the rigidity pipeline.
* [line_bundle_cohomology][hororigid.weylbwb.line_bundle_cohomology] takes the
  Borel-Weil weight `lambda`, so that a dominant `lambda` on `G/B` gives
  `H^0 = V(lambda)`. This is the form used by the `bwb` command.
"""

import dataclasses
from functools import lru_cache
from typing import Iterable, Optional

import sympy

from hororigid.logger import LOGGER
from hororigid.rootsys import (
    Coroot,
    RootSystem,
    Weight,
    format_weight,
    pairing,
    positive_coroots,
    positive_roots,
    reflect_coroot,
    reflect_weight,
)

PICK_POLICIES = ("lowest", "highest")


@dataclasses.dataclass(frozen=True)
class WeylWord:
    """A word in the simple reflections.

    The letters are simple root indices written as a product, so the leftmost
    letter is applied last: `(j, k)` acts as `s_j s_k`.
    """

    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        """Coerces the letters to a tuple of integers."""
        object.__setattr__(self, "letters", tuple(int(j) for j in self.letters))

    @property
    def length(self) -> int:
        """The number of letters."""
        return len(self.letters)

    def inverse(self) -> "WeylWord":
        """The word for the inverse element."""
        return WeylWord(tuple(reversed(self.letters)))


@dataclasses.dataclass(frozen=True)
class ParabolicSpec:
    """A parabolic subgroup given by the simple roots of its Levi factor.

    The Borel subgroup has an empty Levi root set. The parabolic `P_{alpha,beta}`
    of a closed orbit is built with
    [from_complement][hororigid.weylbwb.ParabolicSpec.from_complement].

    Args:
        levi_roots: Global indices of the simple roots of the Levi factor
    """

    levi_roots: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        """Coerces the Levi roots to a frozenset of non-negative integers."""

        roots = frozenset(int(j) for j in self.levi_roots)
        if any(j < 0 for j in roots):
            raise ValueError("Simple root indices cannot be negative")
        object.__setattr__(self, "levi_roots", roots)

    @classmethod
    def from_complement(cls, rs: RootSystem, roots: Iterable[int]) -> "ParabolicSpec":
        """Build the parabolic whose Levi has every simple root except `roots`."""

        removed = frozenset(roots)
        for j in removed:
            rs._check_index(j)
        return cls(frozenset(range(rs.rank)) - removed)

    def complement(self, rs: RootSystem) -> frozenset[int]:
        """The simple roots not in the Levi factor."""
        self.check(rs)
        return frozenset(range(rs.rank)) - self.levi_roots

    def check(self, rs: RootSystem) -> None:
        """Check that the Levi roots belong to a root system.

        Raises:
            ValueError: A Levi root is not a simple root index of `rs`.
        """
        outside = sorted(j for j in self.levi_roots if j >= rs.rank)
        if outside:
            raise ValueError(f"Levi roots {outside} not in root system {rs.name}")


@dataclasses.dataclass(frozen=True)
class CohomologyResult:
    """The outcome of the Borel-Weil-Bott theorem for one bundle.

    Either every cohomology group vanishes (both fields None) or exactly one
    degree is nonzero and holds the irreducible module with the given dominant
    highest weight.

    Args:
        degree: The nonvanishing degree, or None if all groups vanish
        highest_weight: The highest weight of the module in that degree
    """

    degree: Optional[int] = None
    highest_weight: Optional[Weight] = None

    def __post_init__(self) -> None:
        """Validates the combination of degree and highest weight."""

        if (self.degree is None) != (self.highest_weight is None):
            raise ValueError("Degree and highest weight must be given together")

        if self.degree is not None and self.highest_weight is not None:
            if self.degree < 0:
                raise ValueError("Cohomology degree cannot be negative")
            if not self.highest_weight.is_dominant():
                raise ValueError(
                    f"Highest weight {self.highest_weight} is not dominant"
                )

    @classmethod
    def all_zero(cls) -> "CohomologyResult":
        """The result with every cohomology group vanishing."""
        return cls()

    @classmethod
    def nonzero(cls, degree: int, highest_weight: Weight) -> "CohomologyResult":
        """The result with a single nonvanishing degree."""
        return cls(degree, highest_weight)

    @property
    def is_nonzero(self) -> bool:
        """Is some cohomology group nonzero."""
        return self.degree is not None

    def in_degree(self, degree: int) -> "CohomologyResult":
        """Restrict the result to a single degree."""

        if self.degree == degree:
            return self
        return CohomologyResult.all_zero()

    def dimension(self, rs: RootSystem) -> int:
        """The dimension of the nonzero cohomology group, or 0."""

        if self.highest_weight is None:
            return 0
        return weyl_dimension(rs, self.highest_weight)

    def describe(self, rs: RootSystem) -> str:
        """Describe the result with the module highest weight over `w[j]` labels."""

        if self.highest_weight is None:
            return "all H^i = 0"
        weight = format_weight(rs, self.highest_weight.coords)
        return f"H{self.degree} = V({weight}), dim {self.dimension(rs)}"

    def __str__(self) -> str:
        if self.highest_weight is None:
            return "all H^i = 0"
        return f"H{self.degree} = V({self.highest_weight})"


def apply_word(rs: RootSystem, word: WeylWord, weight: Weight) -> Weight:
    """Act on a weight with a Weyl word, rightmost letter first."""

    for j in reversed(word.letters):
        weight = reflect_weight(rs, j, weight)
    return weight


def apply_word_coroot(rs: RootSystem, word: WeylWord, coroot: Coroot) -> Coroot:
    """Act on a coroot with a Weyl word, rightmost letter first."""

    for j in reversed(word.letters):
        coroot = reflect_coroot(rs, j, coroot)
    return coroot


@lru_cache(maxsize=None)
def _longest_word(rs: RootSystem, levi: frozenset[int]) -> WeylWord:

    # Only the Levi coordinates of the weight are tracked
    weight = Weight(tuple(int(k in levi) for k in range(rs.rank)))
    applied: list[int] = []

    while True:
        descents = [j for j in sorted(levi) if weight[j] > 0]
        if not descents:
            break
        j = descents[0]
        weight = reflect_weight(rs, j, weight)
        applied.append(j)

    return WeylWord(tuple(reversed(applied)))


def longest_parabolic_word(rs: RootSystem, levi_roots: Iterable[int]) -> WeylWord:
    """A reduced word for the longest element of a parabolic Weyl subgroup.

    The word is found by greedy descent: starting from a weight that is dominant
    and regular on the Levi roots, simple reflections are applied at positive Levi
    coordinates until all of them are negative. Words are cached per root system
    and root set.

    Args:
        rs: The root system
        levi_roots: The simple roots generating the subgroup

    Raises:
        IndexError: A root index is out of range.
    """

    levi = frozenset(levi_roots)
    for j in levi:
        rs._check_index(j)

    return _longest_word(rs, levi)


def is_singular(rs: RootSystem, weight: Weight) -> bool:
    """Does a weight pair to zero with some positive coroot."""
    return any(pairing(weight, coroot) == 0 for coroot in positive_coroots(rs))


def bott_reduce(rs: RootSystem, mu: Weight, pick: str = "lowest") -> CohomologyResult:
    """Reduce a rho-shifted weight to the antidominant chamber.

    If `mu` is singular every cohomology group vanishes. Otherwise reflections are
    applied at a positive coordinate until all coordinates are negative. The number
    of reflections is the nonzero degree and `-w(mu) - rho` the highest weight. The
    outcome does not depend on which positive coordinate is reflected first.

    Args:
        rs: The root system
        mu: The weight `w_0^I(chi) - rho`
        pick: Reflect at the `lowest` or the `highest` positive coordinate

    Raises:
        ValueError: For an unknown pick policy.
    """

    if pick not in PICK_POLICIES:
        raise ValueError(f"Unknown pick policy: {pick}")

    if is_singular(rs, mu):
        return CohomologyResult.all_zero()

    bound = len(positive_roots(rs))
    steps = 0
    while True:
        positive = [j for j, v in enumerate(mu.coords) if v > 0]
        if not positive:
            break
        j = positive[0] if pick == "lowest" else positive[-1]
        mu = reflect_weight(rs, j, mu)
        steps += 1
        assert steps <= bound, "Bott reduction exceeded the number of positive roots"

    return CohomologyResult.nonzero(steps, -mu - Weight.rho(rs.rank))


def lowered_weight(rs: RootSystem, parabolic: ParabolicSpec, chi: Weight) -> Weight:
    """The rho-shifted lowest Levi weight `w_0^I(chi) - rho`.

    Raises:
        ValueError: `chi` is not dominant for the Levi factor.
    """

    parabolic.check(rs)
    if len(chi) != rs.rank:
        raise ValueError(f"Weight {chi} does not have rank {rs.rank}")
    if not chi.is_dominant(parabolic.levi_roots):
        raise ValueError(f"Weight {chi} is not dominant for the Levi factor")

    word = longest_parabolic_word(rs, parabolic.levi_roots)
    return apply_word(rs, word, chi) - Weight.rho(rs.rank)


def bwb_cohomology(
    rs: RootSystem, parabolic: ParabolicSpec, chi: Weight
) -> CohomologyResult:
    """Compute the cohomology of the bundle `G x^P V` on `G/P`.

    Here `V` is the irreducible Levi module with highest weight `chi`.

    Args:
        rs: The root system of `G`
        parabolic: The parabolic subgroup `P`
        chi: A weight dominant on the Levi roots

    Raises:
        ValueError: `chi` is not dominant for the Levi factor.
    """

    mu = lowered_weight(rs, parabolic, chi)
    result = bott_reduce(rs, mu)
    LOGGER.debug(f"BWB on {rs.name}: chi = {chi}, mu = {mu}: {result}")
    return result


def line_bundle_cohomology(
    rs: RootSystem, parabolic: ParabolicSpec, weight: Weight
) -> CohomologyResult:
    """Compute cohomology with the Borel-Weil sign convention.

    A weight `lambda` dominant for `G` on `G/B` gives `H^0 = V(lambda)`. The bundle
    is the one handled by [bwb_cohomology][hororigid.weylbwb.bwb_cohomology] for
    the character `-w_0^I(lambda)`.

    Raises:
        ValueError: `weight` is not dominant for the Levi factor.
    """

    parabolic.check(rs)
    if not weight.is_dominant(parabolic.levi_roots):
        raise ValueError(f"Weight {weight} is not dominant for the Levi factor")

    word = longest_parabolic_word(rs, parabolic.levi_roots)
    return bwb_cohomology(rs, parabolic, -apply_word(rs, word, weight))


def weyl_dimension(rs: RootSystem, weight: Weight) -> int:
    """The dimension of the irreducible module with a dominant highest weight.

    Uses the Weyl dimension formula, the product over positive coroots `c` of
    `<lambda + rho, c> / <rho, c>`, with exact rational arithmetic.

    Raises:
        ValueError: The weight is not dominant.
    """

    if not weight.is_dominant():
        raise ValueError(f"Weight {weight} is not dominant")

    shifted = weight + Weight.rho(rs.rank)
    rho = Weight.rho(rs.rank)
    dim = sympy.Integer(1)
    for coroot in positive_coroots(rs):
        dim *= sympy.Rational(pairing(shifted, coroot), pairing(rho, coroot))

    return int(dim)
