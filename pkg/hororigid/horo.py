"""Local rigidity of rank one horospherical varieties of Picard number two.

A variety in this family is given by a
[HorosphericalDatum][hororigid.horo.HorosphericalDatum]: a group `G` with root
system `rs`, a simple root `beta` of the first simple factor `G_0`, two further
roots `alpha_0` and `alpha_1` and a non-negative integer `a_1`. The roots `alpha_0`
and `alpha_1` may be imaginary, standing in for a trivial factor (`alpha_0`) or a
torus factor (`alpha_1`) that carries no simple root. Imaginary roots are stored as
None.

The variety has two closed orbits, `Y = G/P(alpha_0, beta)` and
`Z = G/P(alpha_1, beta)`, and the tangent cohomology in degrees one and two is the
sum of the cohomology of the normal bundles of these two orbits. Each normal bundle
is a homogeneous line bundle with character

* `chi_Y = -w[alpha_0] + w[alpha_1] + a_1 w[beta]`, and
* `chi_Z = -chi_Y`,

with the terms of imaginary roots deleted. The module computes those cohomology
groups directly with [bwb_cohomology][hororigid.weylbwb.bwb_cohomology] and checks
each result against the closed-form criterion built from the `c`, `d`, `A` and `B`
coefficients of the datum. It also decides the Fano status of the variety and
whether its deformations can be obstructed.

The criterion is not stated for the case labelled `XVIII.8` (and its prime), so
for data carrying those labels the direct computation is the only answer.
"""

import dataclasses
from enum import Enum
from typing import Optional

import simplejson
import sympy

from hororigid.logger import LOGGER
from hororigid.rootsys import (
    TORUS,
    TRIVIAL,
    Coroot,
    RootSystem,
    Weight,
    format_weight,
    positive_roots,
)
from hororigid.weylbwb import (
    CohomologyResult,
    ParabolicSpec,
    apply_word,
    apply_word_coroot,
    bwb_cohomology,
    longest_parabolic_word,
    lowered_weight,
)

RootRef = Optional[int]
"""A global simple root index, or None for an imaginary root."""

EXCLUDED_LABELS = ("XVIII.8", "XVIII.8'")
"""Case labels outside the scope of the rigidity criterion."""


class Orbit(Enum):
    """The two closed orbits of the variety."""

    Y = "Y"
    Z = "Z"


class FanoStatus(Enum):
    """The positivity of the anticanonical divisor."""

    FANO = "Fano"
    WEAK_FANO = "WeakFano"
    NEITHER = "Neither"


class NotApplicableError(Exception):
    """Exception class for data outside the scope of the rigidity criterion.

    Attributes:
        message: explanation of the error
    """

    def __init__(self, message="Rigidity criterion does not apply to this datum"):
        self.message = message
        super().__init__(self.message)


class CrossCheckError(Exception):
    """Exception class for disagreements between the criterion and Bott reduction.

    Attributes:
        message: explanation of the error
    """

    def __init__(self, message="Rigidity criterion disagrees with direct computation"):
        self.message = message
        super().__init__(self.message)


@dataclasses.dataclass(frozen=True)
class HorosphericalDatum:
    """The defining data of a rank one horospherical variety of Picard number two.

    Args:
        rs: The root system of the group
        beta: The global index of `beta`, a simple root of the first simple factor
        alpha0: The global index of `alpha_0`, or None if imaginary
        alpha1: The global index of `alpha_1`, or None if imaginary
        a1: The non-negative integer `a_1`
        case_label: An optional catalog label, such as `I.3`

    Raises:
        TypeError: For non-integer root indices or `a1`.
        ValueError: For an invalid combination of roots and group factors.
    """

    rs: RootSystem
    beta: int
    alpha0: RootRef
    alpha1: RootRef
    a1: int = 0
    case_label: Optional[str] = None

    def __post_init__(self) -> None:
        """Validates the root placements and `a1`."""

        for name in ("beta", "alpha0", "alpha1", "a1"):
            value = getattr(self, name)
            if name in ("alpha0", "alpha1") and value is None:
                continue
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"Datum field {name} is not an integer")

        if self.a1 < 0:
            raise ValueError("a1 cannot be negative")

        kinds = [comp.kind for comp in self.rs.components]
        if self.alpha0 is None and TRIVIAL not in kinds:
            raise ValueError("alpha0 can only be imaginary with a trivial factor")
        if self.alpha1 is None and TORUS not in kinds:
            raise ValueError("alpha1 can only be imaginary with a torus factor")

        concrete = [j for j in (self.beta, self.alpha0, self.alpha1) if j is not None]
        for j in concrete:
            if not 0 <= j < self.rs.rank:
                raise ValueError(f"Root index {j} out of range for {self.rs.name}")
        if len(set(concrete)) != len(concrete):
            raise ValueError("beta, alpha0 and alpha1 must be distinct")

        g0 = next(cdx for cdx, c in enumerate(self.rs.components) if c.is_simple)
        if self.beta not in self.rs.component_indices(g0):
            raise ValueError("beta must be a simple root of the first simple factor")

    @property
    def imaginary(self) -> tuple[bool, bool]:
        """Are alpha0 and alpha1 imaginary."""
        return self.alpha0 is None, self.alpha1 is None

    @property
    def is_excluded_case(self) -> bool:
        """Is the datum labelled as one of the cases outside the criterion."""
        return self.case_label in EXCLUDED_LABELS

    def with_a1(self, a1: int) -> "HorosphericalDatum":
        """A copy of the datum with a different `a1`."""
        return dataclasses.replace(self, a1=a1)

    def describe(self) -> str:
        """A one line description with printed Bourbaki labels."""

        def show(j: RootRef) -> str:
            return "im" if j is None else self.rs.label(j)

        label = f"{self.case_label} " if self.case_label else ""
        return (
            f"{label}{self.rs.name} beta={show(self.beta)} "
            f"alpha0={show(self.alpha0)} alpha1={show(self.alpha1)} a1={self.a1}"
        )


@dataclasses.dataclass(frozen=True)
class CdCoefficients:
    """The coefficients describing the longest Levi element on the orbit roots.

    For an orbit with removed root `alpha_j` and other root `alpha_i`, `c` and `d`
    are the coefficients of `alpha_i^vee` in `w_0(alpha_j^vee)` and `w_0(beta^vee)`,
    and `alpha_prime` is the simple root `gamma` with `w_0(alpha_i) = -gamma`.
    """

    c: int
    d: int
    alpha_prime: RootRef


@dataclasses.dataclass(frozen=True)
class AppendixFilters:
    """The three conditions used to prune the appendix case list.

    Args:
        linked: `beta` is linked only to the allowed pair of roots
        small_ab: `A` and `B` are at most 1
        beta_extremal: `beta` has at most one neighbour in `G_0`
    """

    linked: bool
    small_ab: bool
    beta_extremal: bool


@dataclasses.dataclass(frozen=True)
class OrbitAnalysis:
    """The cohomology of the normal bundle of one closed orbit.

    The `theorem_verdict` is None when the criterion does not apply.
    """

    orbit: Orbit
    chi: Weight
    lowered: Weight
    cohomology: CohomologyResult
    h0: CohomologyResult
    h1: CohomologyResult
    h2: CohomologyResult
    theorem_verdict: Optional[bool]
    A: int
    B: int
    lam: int
    cd: CdCoefficients


def _orbit_roots(d: HorosphericalDatum, orbit: Orbit) -> tuple[RootRef, RootRef]:
    # The removed root alpha_j and the other root alpha_i of an orbit
    if orbit is Orbit.Y:
        return d.alpha0, d.alpha1
    return d.alpha1, d.alpha0


def _fundamental(d: HorosphericalDatum, j: RootRef) -> Weight:
    if j is None:
        return Weight.zero(d.rs.rank)
    return Weight.fundamental(d.rs.rank, j)


def chi_Y(d: HorosphericalDatum) -> Weight:
    """The character of the normal bundle of the closed orbit Y."""

    return (
        _fundamental(d, d.alpha1)
        - _fundamental(d, d.alpha0)
        + d.a1 * Weight.fundamental(d.rs.rank, d.beta)
    )


def chi_Z(d: HorosphericalDatum) -> Weight:
    """The character of the normal bundle of the closed orbit Z."""
    return -chi_Y(d)


def levi(d: HorosphericalDatum, orbit: Orbit) -> ParabolicSpec:
    """The parabolic of a closed orbit, all simple roots but beta and alpha_j."""

    removed, _ = _orbit_roots(d, orbit)
    roots = [d.beta] if removed is None else [d.beta, removed]
    return ParabolicSpec.from_complement(d.rs, roots)


def cd_coefficients(d: HorosphericalDatum, orbit: Orbit) -> CdCoefficients:
    """Compute the c and d coefficients and the primed root for an orbit.

    For orbit Y these are `c_{alpha_1}`, `d_{alpha_1}` and `alpha_1'`, read from
    the longest element of the Levi of `P(alpha_0, beta)`; orbit Z exchanges the
    roles of the two alphas. If `alpha_i` is imaginary all values are zero and the
    primed root is imaginary; if only `alpha_j` is imaginary, `c` is zero.
    """

    removed, other = _orbit_roots(d, orbit)
    if other is None:
        return CdCoefficients(c=0, d=0, alpha_prime=None)

    rs = d.rs
    word = longest_parabolic_word(rs, levi(d, orbit).levi_roots)

    c = 0
    if removed is not None:
        c = apply_word_coroot(rs, word, Coroot.simple(rs.rank, removed))[other]

    dval = apply_word_coroot(rs, word, Coroot.simple(rs.rank, d.beta))[other]

    image = apply_word_coroot(rs, word, Coroot.simple(rs.rank, other))
    negated = -image
    assert negated.is_positive() and negated.height == 1, "Primed root not simple"
    (prime,) = negated.support

    return CdCoefficients(c=c, d=dval, alpha_prime=prime)


def linkage_AB(d: HorosphericalDatum, orbit: Orbit) -> tuple[int, int, bool]:
    """The A and B coefficients of an orbit and the linkage condition on beta.

    For orbit Y, `A = -<beta, alpha_0^vee>` and `B = -<beta, alpha_1'^vee>`, each
    zero when the root involved is imaginary. The boolean is true when every Dynkin
    neighbour of beta is `alpha_0` or `alpha_1'`. Orbit Z exchanges the alphas.
    """

    removed, _ = _orbit_roots(d, orbit)
    prime = cd_coefficients(d, orbit).alpha_prime
    cartan = d.rs.cartan

    A = 0 if removed is None else -cartan[d.beta][removed]
    B = 0 if prime is None else -cartan[d.beta][prime]

    allowed = {j for j in (removed, prime) if j is not None}
    linked = d.rs.neighbours(d.beta) <= allowed

    return A, B, linked


def _lambda(d: HorosphericalDatum, orbit: Orbit, cd: CdCoefficients) -> int:
    if orbit is Orbit.Y:
        return cd.d + d.a1 - 1
    return cd.d - d.a1 - 1


def theorem_verdict(d: HorosphericalDatum, orbit: Orbit) -> bool:
    """Predict whether the normal bundle of an orbit has a nonzero H^1.

    The prediction holds when `lambda > 0` and `c < 2`, beta is linked only to the
    allowed roots, `A lambda + c - 2 < 0` and `B lambda - 2 < 0`. Here `lambda` is
    `d + a1 - 1` on Y and `d - a1 - 1` on Z. Imaginary roots have zero A or B and c,
    which gives the reduced conditions of the imaginary cases.

    Raises:
        NotApplicableError: The datum carries an excluded case label or has `c`
            above 2.
    """

    if d.is_excluded_case:
        raise NotApplicableError(f"No rigidity criterion for case {d.case_label}")

    cd = cd_coefficients(d, orbit)
    if cd.c > 2:
        raise NotApplicableError(f"Coefficient c = {cd.c} outside the criterion")

    A, B, linked = linkage_AB(d, orbit)
    lam = _lambda(d, orbit, cd)

    return (
        lam > 0
        and cd.c < 2
        and linked
        and A * lam + cd.c - 2 < 0
        and B * lam - 2 < 0
    )


def orbit_analysis(d: HorosphericalDatum, orbit: Orbit) -> OrbitAnalysis:
    """Compute the normal bundle cohomology of one orbit and check the criterion.

    Raises:
        CrossCheckError: The criterion and the direct computation disagree.
    """

    chi = chi_Y(d) if orbit is Orbit.Y else chi_Z(d)
    parabolic = levi(d, orbit)
    result = bwb_cohomology(d.rs, parabolic, chi)

    cd = cd_coefficients(d, orbit)
    A, B, _ = linkage_AB(d, orbit)

    try:
        verdict: Optional[bool] = theorem_verdict(d, orbit)
    except NotApplicableError as excep:
        LOGGER.debug(f"{d.describe()} orbit {orbit.value}: {excep.message}")
        verdict = None

    analysis = OrbitAnalysis(
        orbit=orbit,
        chi=chi,
        lowered=lowered_weight(d.rs, parabolic, chi),
        cohomology=result,
        h0=result.in_degree(0),
        h1=result.in_degree(1),
        h2=result.in_degree(2),
        theorem_verdict=verdict,
        A=A,
        B=B,
        lam=_lambda(d, orbit, cd),
        cd=cd,
    )

    if verdict is not None and verdict != analysis.h1.is_nonzero:
        raise CrossCheckError(
            f"{d.describe()} orbit {orbit.value}: criterion predicts "
            f"{'nonzero' if verdict else 'zero'} H1, direct computation gives "
            f"{result}"
        )

    return analysis


def anticanonical_coefficients(d: HorosphericalDatum) -> tuple[int, int]:
    """The anticanonical coefficients `a_beta` and `a_alpha1`.

    For a simple root `gamma`, `a_gamma = 2 - <sum of R+_X, gamma^vee>`, where `R+_X`
    holds the positive roots supported away from beta, alpha0 and alpha1. An
    imaginary `alpha_1` has coefficient 1.
    """

    rs = d.rs
    support = set(range(rs.rank)) - {d.beta, d.alpha0, d.alpha1}
    roots = positive_roots(rs, support)
    total = [sum(root[k] for root in roots) for k in range(rs.rank)]

    def coefficient(gamma: int) -> int:
        return 2 - sum(t * rs.cartan[k][gamma] for k, t in enumerate(total))

    a_alpha1 = 1 if d.alpha1 is None else coefficient(d.alpha1)
    return coefficient(d.beta), a_alpha1


def fano_status(d: HorosphericalDatum) -> FanoStatus:
    """Decide whether the variety is Fano, weak Fano or neither."""

    a_beta, a_alpha1 = anticanonical_coefficients(d)
    if d.a1 * a_alpha1 < a_beta:
        return FanoStatus.FANO
    if d.a1 * a_alpha1 == a_beta:
        return FanoStatus.WEAK_FANO
    return FanoStatus.NEITHER


def _obstruction(
    d: HorosphericalDatum, analyses: tuple[OrbitAnalysis, ...], fano: FanoStatus
) -> tuple[bool, str]:

    nonzero = [a.orbit.value for a in analyses if a.h2.is_nonzero]
    if nonzero:
        if fano is not FanoStatus.NEITHER:
            LOGGER.error(f"{d.describe()}: nonzero H2 on a {fano.value} variety")
        return False, f"nonzero H^2 on orbit {', '.join(nonzero)}"

    if fano is not FanoStatus.NEITHER:
        return True, "weak Fano"

    if not any(a.cohomology.is_nonzero for a in analyses):
        return True, "all cohomology vanishes"

    return True, "at most one nonzero degree per orbit, none in degree 2"


def obstruction_verdict(d: HorosphericalDatum) -> tuple[bool, str]:
    """Decide whether the obstruction space `H^2(X, T_X)` vanishes.

    The space is computed as the sum of the degree two cohomology of the two normal
    bundles. The reason reported names the first sufficient condition that holds.

    Returns:
        A tuple of whether the obstruction space is trivial and the reason.
    """

    analyses = (orbit_analysis(d, Orbit.Y), orbit_analysis(d, Orbit.Z))
    return _obstruction(d, analyses, fano_status(d))


@dataclasses.dataclass(frozen=True)
class RigidityReport:
    """The deformation theory summary of a datum."""

    datum: HorosphericalDatum
    analysis_y: OrbitAnalysis
    analysis_z: OrbitAnalysis
    h1_total_dim: int
    h2_total_dim: int
    locally_rigid: bool
    fano: FanoStatus
    a_beta: int
    a_alpha1: int
    obstruction_space_trivial: bool
    unobstructed_reason: str

    @property
    def analyses(self) -> tuple[OrbitAnalysis, OrbitAnalysis]:
        """The two orbit analyses, Y first."""
        return self.analysis_y, self.analysis_z

    def to_dict(self) -> dict:
        """The report as a dictionary with a fixed key order."""

        rs = self.datum.rs

        def root(j: RootRef) -> str:
            return "im" if j is None else rs.label(j)

        def cohomology(res: CohomologyResult) -> Optional[dict]:
            if res.highest_weight is None:
                return None
            return {
                "degree": res.degree,
                "highest_weight": format_weight(rs, res.highest_weight.coords),
                "dimension": res.dimension(rs),
            }

        orbits = {}
        for analysis in self.analyses:
            orbits[analysis.orbit.value] = {
                "chi": format_weight(rs, analysis.chi.coords),
                "lowered": format_weight(rs, analysis.lowered.coords),
                "cohomology": cohomology(analysis.cohomology),
                "theorem_verdict": analysis.theorem_verdict,
                "A": analysis.A,
                "B": analysis.B,
                "lambda": analysis.lam,
                "c": analysis.cd.c,
                "d": analysis.cd.d,
                "alpha_prime": root(analysis.cd.alpha_prime),
            }

        return {
            "case": self.datum.case_label,
            "group": rs.name,
            "beta": root(self.datum.beta),
            "alpha0": root(self.datum.alpha0),
            "alpha1": root(self.datum.alpha1),
            "a1": self.datum.a1,
            "orbits": orbits,
            "h1_total_dim": self.h1_total_dim,
            "h2_total_dim": self.h2_total_dim,
            "locally_rigid": self.locally_rigid,
            "fano": self.fano.value,
            "a_beta": self.a_beta,
            "a_alpha1": self.a_alpha1,
            "obstruction_space_trivial": self.obstruction_space_trivial,
            "unobstructed_reason": self.unobstructed_reason,
        }

    def to_json(self) -> str:
        """The report as an indented JSON document."""
        return simplejson.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        """The report as a short human readable summary."""

        rs = self.datum.rs
        lines = [self.datum.describe()]
        for analysis in self.analyses:
            verdict = {None: "n/a", True: "nonzero H1", False: "zero H1"}[
                analysis.theorem_verdict
            ]
            lines.append(
                f"  {analysis.orbit.value}: {analysis.cohomology.describe(rs)} "
                f"(A={analysis.A}, B={analysis.B}, c={analysis.cd.c}, "
                f"d={analysis.cd.d}, lambda={analysis.lam}, criterion: {verdict})"
            )

        rigid = "locally rigid" if self.locally_rigid else "not rigid"
        obstruction = (
            "unobstructed" if self.obstruction_space_trivial else "obstructed"
        )
        lines.append(
            f"{rigid}, h1 = {self.h1_total_dim}, {self.fano.value} "
            f"(a_beta={self.a_beta}, a_alpha1={self.a_alpha1}), "
            f"{obstruction}: {self.unobstructed_reason}"
        )
        return "\n".join(lines)


def rigidity_report(d: HorosphericalDatum) -> RigidityReport:
    """Assemble the orbit analyses, Fano status and obstruction of a datum.

    Raises:
        CrossCheckError: The criterion and the direct computation disagree.
    """

    analyses = (orbit_analysis(d, Orbit.Y), orbit_analysis(d, Orbit.Z))
    fano = fano_status(d)
    a_beta, a_alpha1 = anticanonical_coefficients(d)
    trivial, reason = _obstruction(d, analyses, fano)

    report = RigidityReport(
        datum=d,
        analysis_y=analyses[0],
        analysis_z=analyses[1],
        h1_total_dim=sum(a.h1.dimension(d.rs) for a in analyses),
        h2_total_dim=sum(a.h2.dimension(d.rs) for a in analyses),
        locally_rigid=not any(a.h1.is_nonzero for a in analyses),
        fano=fano,
        a_beta=a_beta,
        a_alpha1=a_alpha1,
        obstruction_space_trivial=trivial,
        unobstructed_reason=reason,
    )
    LOGGER.debug(
        f"{d.describe()}: h1 = {report.h1_total_dim}, {fano.value}, {reason}"
    )
    return report


def primed(d: HorosphericalDatum) -> HorosphericalDatum:
    """The partner datum with alpha0 and alpha1 exchanged.

    The case label gains or loses its prime mark.

    Raises:
        ValueError: One of the alphas is imaginary.
    """

    if d.alpha0 is None or d.alpha1 is None:
        raise ValueError("Only data with concrete alphas have a primed partner")

    label = d.case_label
    if label is not None:
        label = label[:-1] if label.endswith("'") else label + "'"

    return dataclasses.replace(d, alpha0=d.alpha1, alpha1=d.alpha0, case_label=label)


def appendix_filters(d: HorosphericalDatum, orbit: Orbit) -> AppendixFilters:
    """Evaluate the linkage, small A and B, and extremal beta conditions."""

    A, B, linked = linkage_AB(d, orbit)
    g0 = d.rs.locate(d.beta)[0]
    in_g0 = set(d.rs.component_indices(g0))
    return AppendixFilters(
        linked=linked,
        small_ab=A <= 1 and B <= 1,
        beta_extremal=len(d.rs.neighbours(d.beta) & in_g0) <= 1,
    )


def symbolic_lowered_weight(d: HorosphericalDatum, orbit: Orbit) -> tuple:
    """The weight `w_0^I(chi) - rho` with `a1` kept as a symbol.

    The longest Levi element fixes `w[beta]`, so the weight is affine in `a1` with
    slope `+w[beta]` on Y and `-w[beta]` on Z.
    """

    base = d.with_a1(0)
    chi = chi_Y(base) if orbit is Orbit.Y else chi_Z(base)
    parabolic = levi(d, orbit)
    word = longest_parabolic_word(d.rs, parabolic.levi_roots)
    assert apply_word(
        d.rs, word, Weight.fundamental(d.rs.rank, d.beta)
    ) == Weight.fundamental(d.rs.rank, d.beta)

    coords = [sympy.Integer(v) for v in lowered_weight(d.rs, parabolic, chi).coords]
    sign = 1 if orbit is Orbit.Y else -1
    coords[d.beta] += sign * sympy.Symbol("a1")

    return tuple(coords)
