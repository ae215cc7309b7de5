"""Tests of the orbit analyses, Fano status and obstruction of horospherical data."""

from logging import DEBUG, ERROR

import pytest
import simplejson
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hororigid.groupspec import parse_group
from hororigid.horo import (
    CrossCheckError,
    FanoStatus,
    HorosphericalDatum,
    NotApplicableError,
    Orbit,
    anticanonical_coefficients,
    appendix_filters,
    cd_coefficients,
    chi_Y,
    chi_Z,
    fano_status,
    levi,
    linkage_AB,
    obstruction_verdict,
    orbit_analysis,
    primed,
    rigidity_report,
    symbolic_lowered_weight,
    theorem_verdict,
)
from hororigid.rootsys import (
    Coroot,
    Weight,
    build_root_system,
    format_weight,
    partial_order_leq,
    positive_coroots,
)
from hororigid.weylbwb import (
    apply_word,
    apply_word_coroot,
    bwb_cohomology,
    longest_parabolic_word,
)

from .conftest import PROPERTY_SETTINGS


def system(group):
    return build_root_system(parse_group(group))


def hirzebruch(a1):
    """The datum whose variety is the Hirzebruch surface F_a1."""
    return HorosphericalDatum(
        system("A1x-xC*"), beta=0, alpha0=None, alpha1=None, a1=a1
    )


def g2_torus(a1):
    """beta is the short simple root of G2 and alpha1 is imaginary."""
    return HorosphericalDatum(system("G2xC*"), beta=0, alpha0=1, alpha1=None, a1=a1)


def a2_g2(a1, label="XVIII.8"):
    """beta in A2, alpha0 the long and alpha1 the short root of G2."""
    return HorosphericalDatum(
        system("A2xG2"), beta=0, alpha0=3, alpha1=2, a1=a1, case_label=label
    )


@pytest.mark.parametrize(
    "kwargs, exception",
    [
        ({"group": "A3", "beta": 0, "alpha0": None, "alpha1": 2}, ValueError),
        ({"group": "A3", "beta": 0, "alpha0": 1, "alpha1": None}, ValueError),
        ({"group": "A3", "beta": 0, "alpha0": 1, "alpha1": 1}, ValueError),
        ({"group": "A3", "beta": 0, "alpha0": 1, "alpha1": 3}, ValueError),
        ({"group": "A3", "beta": 0, "alpha0": 1, "alpha1": 2, "a1": -1}, ValueError),
        ({"group": "A1xA2", "beta": 1, "alpha0": 0, "alpha1": 2}, ValueError),
        ({"group": "A3", "beta": 0, "alpha0": 1, "alpha1": 2, "a1": 1.0}, TypeError),
        ({"group": "A3", "beta": True, "alpha0": 1, "alpha1": 2}, TypeError),
    ],
)
def test_datum_validation(kwargs, exception):
    """Invalid root placements and values of a1 are rejected."""

    rs = system(kwargs.pop("group"))
    with pytest.raises(exception):
        HorosphericalDatum(rs, **kwargs)


def test_datum_describe():
    datum = g2_torus(1)

    assert datum.describe() == "G2xC* beta=0:1 alpha0=0:2 alpha1=im a1=1"
    assert datum.imaginary == (False, True)
    assert datum.with_a1(3).a1 == 3
    assert not datum.is_excluded_case
    assert a2_g2(1).is_excluded_case


def test_characters():
    """chi_Y drops imaginary roots and chi_Z is its negative."""

    assert chi_Y(g2_torus(2)) == Weight((2, -1))
    assert chi_Z(g2_torus(2)) == Weight((-2, 1))
    assert chi_Y(a2_g2(3)) == Weight((3, 0, 1, -1))
    assert chi_Y(hirzebruch(4)) == Weight((4,))


@pytest.mark.parametrize(
    "orbit, c, d, prime, A, B",
    [(Orbit.Y, 0, 0, None, 1, 0), (Orbit.Z, 0, 3, 1, 0, 1)],
)
def test_coefficients_g2(orbit, c, d, prime, A, B):
    """The coefficients of the G2 datum with the short root as beta."""

    datum = g2_torus(1)
    cd = cd_coefficients(datum, orbit)

    assert (cd.c, cd.d, cd.alpha_prime) == (c, d, prime)
    assert linkage_AB(datum, orbit) == (A, B, True)


@pytest.mark.parametrize(
    "a1, verdict_y, verdict_z, h1_total",
    [(1, False, True, 1), (2, True, False, 1), (3, False, False, 0)],
)
def test_orbit_analysis_g2(a1, verdict_y, verdict_z, h1_total):
    """The criterion and Bott reduction agree on the G2 datum."""

    datum = g2_torus(a1)
    analysis_y = orbit_analysis(datum, Orbit.Y)
    analysis_z = orbit_analysis(datum, Orbit.Z)

    assert analysis_y.theorem_verdict is verdict_y
    assert analysis_z.theorem_verdict is verdict_z
    assert analysis_y.h1.is_nonzero is verdict_y
    assert analysis_z.h1.is_nonzero is verdict_z
    assert analysis_y.lam == a1 - 1
    assert analysis_z.lam == 2 - a1
    assert rigidity_report(datum).h1_total_dim == h1_total


@pytest.mark.parametrize("a1", range(0, 9))
def test_hirzebruch_family(a1):
    """The tangent cohomology of F_a has h1 = a - 1 for a > 0."""

    report = rigidity_report(hirzebruch(a1))

    assert report.h1_total_dim == max(a1 - 1, 0)
    assert report.h2_total_dim == 0
    assert report.locally_rigid is (a1 <= 1)
    assert report.obstruction_space_trivial
    assert report.analysis_z.h0.dimension(report.datum.rs) == a1 + 1


@pytest.mark.parametrize(
    "a1, status",
    [
        (0, FanoStatus.FANO),
        (1, FanoStatus.FANO),
        (2, FanoStatus.WEAK_FANO),
        (3, FanoStatus.NEITHER),
    ],
)
def test_fano_status_hirzebruch(a1, status):
    """F_a is Fano for a <= 1 and weak Fano for a = 2."""

    assert anticanonical_coefficients(hirzebruch(a1)) == (2, 1)
    assert fano_status(hirzebruch(a1)) is status


@pytest.mark.parametrize(
    "group, alpha1, a1, a_alpha1, status",
    [
        ("G2xA1", 2, 1, 2, FanoStatus.WEAK_FANO),
        ("G2xC*", None, 1, 1, FanoStatus.FANO),
        ("G2xA2", 2, 1, 3, FanoStatus.NEITHER),
        ("G2xA3", 2, 1, 4, FanoStatus.NEITHER),
    ],
)
def test_fano_status_g2(group, alpha1, a1, a_alpha1, status):
    """The anticanonical coefficient of alpha1 grows with the second factor."""

    datum = HorosphericalDatum(system(group), beta=0, alpha0=1, alpha1=alpha1, a1=a1)
    assert anticanonical_coefficients(datum) == (2, a_alpha1)
    assert fano_status(datum) is status


def test_e6_lowered_weight():
    """The lowered weight of the E6 datum with beta = 1 is affine in a1."""

    datum = HorosphericalDatum(system("E6"), beta=0, alpha0=1, alpha1=2, a1=0)
    coords = symbolic_lowered_weight(datum, Orbit.Y)

    assert (
        format_weight(datum.rs, coords)
        == "a1*w[1] - w[2] - w[3] - w[4] - w[5] - 2*w[6]"
    )

    a1 = sympy.Symbol("a1")
    for value in range(0, 11):
        concrete = orbit_analysis(datum.with_a1(value), Orbit.Y)
        assert concrete.lowered == Weight(tuple(c.subs(a1, value) for c in coords))
        assert not concrete.h1.is_nonzero


def test_symbolic_lowered_weight_z():
    """The slope in a1 is negative on Z."""

    coords = symbolic_lowered_weight(g2_torus(0), Orbit.Z)
    a1 = sympy.Symbol("a1")

    assert coords[0] == 2 - a1
    assert orbit_analysis(g2_torus(5), Orbit.Z).lowered == Weight((-3, -2))


def test_excluded_case_label(caplog):
    """The criterion is not applied to the excluded case labels."""

    caplog.set_level(DEBUG)
    datum = a2_g2(1)

    with pytest.raises(NotApplicableError):
        theorem_verdict(datum, Orbit.Y)

    analysis = orbit_analysis(datum, Orbit.Y)
    assert analysis.theorem_verdict is None
    assert any(
        "No rigidity criterion for case XVIII.8" in rec.message
        for rec in caplog.records
    )


def test_large_c_not_applicable():
    """An unlabelled datum with c = 3 is outside the criterion."""

    datum = HorosphericalDatum(system("A1xG2"), beta=0, alpha0=2, alpha1=1, a1=1)

    assert cd_coefficients(datum, Orbit.Z).c == 3
    with pytest.raises(NotApplicableError):
        theorem_verdict(datum, Orbit.Z)

    assert orbit_analysis(datum, Orbit.Z).theorem_verdict is None
    assert orbit_analysis(datum, Orbit.Y).theorem_verdict is not None


@pytest.mark.parametrize(
    "a1, h2_weight, h2_dim",
    [(3, "w[1:1]", 7), (4, "w[0:2] + w[1:1]", 21), (5, "2*w[0:2] + w[1:1]", 42)],
)
def test_obstructed_a2_g2(caplog, a1, h2_weight, h2_dim):
    """The A2 x G2 datum has a nonzero H2 on Y from a1 = 3."""

    datum = a2_g2(a1)
    report = rigidity_report(datum)
    h2 = report.analysis_y.h2

    assert format_weight(datum.rs, h2.highest_weight.coords) == h2_weight
    assert report.h2_total_dim == h2_dim
    assert not report.analysis_z.h2.is_nonzero
    assert report.fano is FanoStatus.NEITHER
    assert (report.a_beta, report.a_alpha1) == (3, 2)
    assert obstruction_verdict(datum) == (False, "nonzero H^2 on orbit Y")
    assert not any(rec.levelno == ERROR for rec in caplog.records)


@pytest.mark.parametrize("a1", [1, 2, 3, 4])
def test_a2_g2_z_orbit(a1):
    """The Z orbit of the A2 x G2 datum has H1 = V(a1 w[beta])."""

    datum = a2_g2(a1)
    h1 = orbit_analysis(datum, Orbit.Z).h1

    assert h1.highest_weight == Weight((a1, 0, 0, 0))


def test_a2_g2_unobstructed_below_three():
    assert obstruction_verdict(a2_g2(2)) == (
        True,
        "at most one nonzero degree per orbit, none in degree 2",
    )


def test_obstruction_reasons():
    assert obstruction_verdict(hirzebruch(2))[1] == "weak Fano"
    assert obstruction_verdict(hirzebruch(5))[1] == (
        "at most one nonzero degree per orbit, none in degree 2"
    )


def test_crosscheck_error(monkeypatch):
    """A disagreement between the criterion and Bott reduction raises."""

    monkeypatch.setattr("hororigid.horo.theorem_verdict", lambda d, orbit: True)

    with pytest.raises(CrossCheckError, match="criterion predicts nonzero H1"):
        orbit_analysis(g2_torus(3), Orbit.Y)

    with pytest.raises(CrossCheckError):
        rigidity_report(g2_torus(3))


def test_primed():
    """Primed data exchange the alphas and toggle the label prime."""

    datum = HorosphericalDatum(
        system("G2xA1"), beta=0, alpha0=1, alpha1=2, a1=1, case_label="XVII.1"
    )
    partner = primed(datum)

    assert (partner.alpha0, partner.alpha1) == (2, 1)
    assert partner.case_label == "XVII.1'"
    assert primed(partner) == datum

    with pytest.raises(ValueError):
        primed(g2_torus(1))


def test_appendix_filters():
    filters = appendix_filters(g2_torus(1), Orbit.Y)
    assert filters.linked and filters.small_ab and filters.beta_extremal


def test_report_output():
    """Reports render as text and as JSON with a fixed key order."""

    report = rigidity_report(g2_torus(1))
    data = simplejson.loads(report.to_json())

    assert list(data)[:6] == ["case", "group", "beta", "alpha0", "alpha1", "a1"]
    assert data["group"] == "G2xC*"
    assert data["alpha1"] == "im"
    assert data["h1_total_dim"] == 1
    assert data["fano"] == "Fano"
    assert data["orbits"]["Y"]["cohomology"] is None
    assert data["orbits"]["Z"]["cohomology"] == {
        "degree": 1,
        "highest_weight": "0",
        "dimension": 1,
    }
    assert data["orbits"]["Z"]["alpha_prime"] == "0:2"

    text = report.to_text().splitlines()
    assert text[0] == "G2xC* beta=0:1 alpha0=0:2 alpha1=im a1=1"
    assert text[2].startswith("  Z: H1 = V(0), dim 1 (A=0, B=1, c=0, d=3")
    assert text[-1].startswith("not rigid, h1 = 1, Fano")


RANDOM_SYSTEMS = [
    system(group)
    for group in ("A4", "B4", "C4", "D5", "E6", "F4", "G2xA2", "A1xG2", "A3xB2")
]


@st.composite
def concrete_data(draw):
    """Data with three concrete roots and beta in the first factor."""

    rs = draw(st.sampled_from(RANDOM_SYSTEMS))
    beta = draw(st.sampled_from(list(rs.component_indices(0))))
    others = [j for j in range(rs.rank) if j != beta]
    alpha0, alpha1 = draw(st.permutations(others))[:2]
    a1 = draw(st.integers(min_value=0, max_value=4))
    return HorosphericalDatum(rs, beta=beta, alpha0=alpha0, alpha1=alpha1, a1=a1)


@PROPERTY_SETTINGS
@given(datum=concrete_data(), orbit=st.sampled_from(list(Orbit)))
def test_longest_levi_element_on_weights(datum, orbit):
    """The longest Levi element on the fundamental weights of the three roots."""

    rs = datum.rs
    parabolic = levi(datum, orbit)
    word = longest_parabolic_word(rs, parabolic.levi_roots)
    removed, other = (
        (datum.alpha0, datum.alpha1)
        if orbit is Orbit.Y
        else (datum.alpha1, datum.alpha0)
    )
    cd = cd_coefficients(datum, orbit)

    def fundamental(j):
        return Weight.fundamental(rs.rank, j)

    assert apply_word(rs, word, fundamental(other)) == (
        cd.c * fundamental(removed)
        + cd.d * fundamental(datum.beta)
        - fundamental(cd.alpha_prime)
    )
    assert apply_word(rs, word, fundamental(removed)) == fundamental(removed)
    assert apply_word(rs, word, fundamental(datum.beta)) == fundamental(datum.beta)


@PROPERTY_SETTINGS
@given(datum=concrete_data(), orbit=st.sampled_from(list(Orbit)))
def test_longest_levi_element_on_coroots(datum, orbit):
    """The longest Levi element sends alpha_j^vee to the largest coroot above it."""

    rs = datum.rs
    removed = datum.alpha0 if orbit is Orbit.Y else datum.alpha1
    word = longest_parabolic_word(rs, levi(datum, orbit).levi_roots)

    candidates = [
        coroot
        for coroot in positive_coroots(rs)
        if coroot[removed] == 1 and coroot[datum.beta] == 0
    ]
    (largest,) = [
        top
        for top in candidates
        if all(partial_order_leq(coroot, top) for coroot in candidates)
    ]

    assert apply_word_coroot(rs, word, Coroot.simple(rs.rank, removed)) == largest


@PROPERTY_SETTINGS
@given(datum=concrete_data())
def test_index_swap_at_zero(datum):
    """At a1 = 0 the Z orbit of a datum is the Y orbit of its swapped datum."""

    datum = datum.with_a1(0)
    partner = primed(datum)

    assert chi_Z(datum) == chi_Y(partner)
    assert levi(datum, Orbit.Z) == levi(partner, Orbit.Y)
    assert bwb_cohomology(datum.rs, levi(datum, Orbit.Z), chi_Z(datum)) == (
        bwb_cohomology(partner.rs, levi(partner, Orbit.Y), chi_Y(partner))
    )
