"""Tests of the root system combinatorics."""

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hororigid.rootsys import (
    ComponentSpec,
    Coroot,
    Root,
    Weight,
    build_root_system,
    format_weight,
    highest_coroot,
    highest_root,
    pairing,
    partial_order_leq,
    positive_coroots,
    positive_roots,
    reflect_coroot,
    reflect_root,
    reflect_weight,
    simple_root_as_weight,
)

from .conftest import PROPERTY_SETTINGS


def simple_system(letter, rank):
    return build_root_system([ComponentSpec.simple(letter, rank)])


@pytest.mark.parametrize(
    "letter, rank, expected",
    [
        ("A", 2, ((2, -1), (-1, 2))),
        ("B", 3, ((2, -1, 0), (-1, 2, -2), (0, -1, 2))),
        ("C", 3, ((2, -1, 0), (-1, 2, -1), (0, -2, 2))),
        (
            "D",
            4,
            ((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, 0), (0, -1, 0, 2)),
        ),
        ("G", 2, ((2, -1), (-3, 2))),
        ("F", 4, ((2, -1, 0, 0), (-1, 2, -2, 0), (0, -1, 2, -1), (0, 0, -1, 2))),
    ],
)
def test_cartan_matrix(letter, rank, expected):
    """Cartan matrices follow the Bourbaki numbering."""
    assert simple_system(letter, rank).cartan == expected


def test_e6_diagram():
    """The E6 branch node is 4, linked to 2, 3 and 5."""

    rs = simple_system("E", 6)
    assert rs.neighbours(3) == frozenset({1, 2, 4})
    assert rs.neighbours(1) == frozenset({3})
    assert all(rs.cartan[i][j] == rs.cartan[j][i] for i in range(6) for j in range(6))


@pytest.mark.parametrize(
    "letter, rank, n_positive",
    [
        ("A", 1, 1),
        ("A", 4, 10),
        ("B", 2, 4),
        ("B", 4, 16),
        ("C", 3, 9),
        ("D", 4, 12),
        ("D", 5, 20),
        ("E", 6, 36),
        ("E", 7, 63),
        ("E", 8, 120),
        ("F", 4, 24),
        ("G", 2, 6),
    ],
)
def test_positive_root_counts(letter, rank, n_positive):
    """Roots and coroots have the same, known, number of positive elements."""

    rs = simple_system(letter, rank)
    assert len(positive_roots(rs)) == n_positive
    assert len(positive_coroots(rs)) == n_positive


@pytest.mark.parametrize(
    "letter, rank, root, coroot",
    [
        ("A", 3, (1, 1, 1), (1, 1, 1)),
        ("B", 3, (1, 2, 2), (2, 2, 1)),
        ("C", 3, (2, 2, 1), (1, 2, 2)),
        ("G", 2, (3, 2), (2, 3)),
        ("E", 8, (2, 3, 4, 6, 5, 4, 3, 2), (2, 3, 4, 6, 5, 4, 3, 2)),
    ],
)
def test_highest_root_and_coroot(letter, rank, root, coroot):
    """The highest root and coroot are the last of the sorted closures."""

    rs = simple_system(letter, rank)
    assert highest_root(rs) == Root(root)
    assert highest_coroot(rs) == Coroot(coroot)


@pytest.mark.parametrize(
    "kind, rank, allow_d3, exception",
    [
        ("A", 0, False, ValueError),
        ("B", 1, False, ValueError),
        ("C", 1, False, ValueError),
        ("D", 3, False, ValueError),
        ("E", 5, False, ValueError),
        ("F", 2, False, ValueError),
        ("H", 2, False, ValueError),
        ("C*", 1, False, ValueError),
        ("A", "2", False, TypeError),
        ("A", True, False, TypeError),
    ],
)
def test_component_spec_errors(kind, rank, allow_d3, exception):
    """Invalid types and ranks are rejected."""

    with pytest.raises(exception):
        ComponentSpec(kind, rank, allow_d3)


def test_component_spec_d3():
    """D3 is only accepted when requested and has the A3 diagram."""

    comp = ComponentSpec("D", 3, allow_d3=True)
    rs = build_root_system([comp])
    assert rs.neighbours(0) == frozenset({1, 2})
    assert len(positive_roots(rs)) == 6


def test_product_system():
    """Rootless factors keep their position without carrying roots."""

    rs = build_root_system(
        [ComponentSpec.simple("A", 1), ComponentSpec.trivial(), ComponentSpec.torus()]
    )

    assert rs.name == "A1x-xC*"
    assert rs.rank == 1
    assert rs.offsets == (0, None, None)
    assert rs.label(0) == "0:1"
    assert rs.locate(0) == (0, 1)
    assert list(rs.component_indices(2)) == []
    assert rs.bourbaki_labels == {(0, 1): 0}

    with pytest.raises(IndexError):
        rs.index(1, 1)

    with pytest.raises(IndexError):
        rs.index(3, 1)


def test_product_block_diagonal():
    """Products of simple factors have block diagonal Cartan matrices."""

    rs = build_root_system([ComponentSpec.simple("A", 2), ComponentSpec.simple("G", 2)])

    assert rs.index(1, 1) == 2
    assert rs.label(3) == "1:2"
    assert rs.cartan[2][3] == -1 and rs.cartan[3][2] == -3
    assert all(rs.cartan[i][j] == 0 for i in (0, 1) for j in (2, 3))
    assert len(positive_roots(rs)) == 9
    assert len(positive_roots(rs, support=rs.component_indices(1))) == 6


def test_rootless_group():
    """A group without simple factors has no root system."""

    with pytest.raises(ValueError):
        build_root_system([ComponentSpec.torus()])


def test_weight_arithmetic():
    """Weights add, subtract and scale coordinatewise."""

    left = Weight((1, -2))
    right = Weight.fundamental(2, 1)

    assert left + right == Weight((1, -1))
    assert left - right == Weight((1, -3))
    assert 2 * left == Weight((2, -4))
    assert -left == Weight((-1, 2))
    assert str(left) == "1,-2"
    assert Weight.rho(2).is_dominant()
    assert (-Weight.rho(2)).is_strictly_antidominant()
    assert left.is_dominant(support=[0])

    with pytest.raises(ValueError):
        left + Weight.zero(3)


def test_root_vectors():
    """Roots and coroots cannot be mixed."""

    root = Root((1, 1))
    assert root.height == 2
    assert root.support == frozenset({0, 1})
    assert (-root).is_negative()
    assert partial_order_leq(Root((1, 0)), root)
    assert not partial_order_leq(root, Root((1, 0)))

    with pytest.raises(TypeError):
        root + Coroot((1, 0))


def test_simple_reflections_g2():
    """Reflections in G2 act through the rows and columns of the Cartan matrix."""

    rs = simple_system("G", 2)

    # alpha_1 is short, so s_1(alpha_2) = alpha_2 + 3 alpha_1
    assert reflect_root(rs, 0, Root((0, 1))) == Root((3, 1))
    assert reflect_root(rs, 1, Root((1, 0))) == Root((1, 1))
    assert reflect_coroot(rs, 0, Coroot((0, 1))) == Coroot((1, 1))
    assert reflect_coroot(rs, 1, Coroot((1, 0))) == Coroot((1, 3))
    assert simple_root_as_weight(rs, 1) == Weight((-3, 2))
    assert reflect_weight(rs, 0, Weight((1, 0))) == Weight((-1, 1))


@pytest.mark.parametrize(
    "coords, expected",
    [
        ((0, 0, 0), "0"),
        ((1, 0, -1), "w[1] - w[3]"),
        ((2, -1, 0), "2*w[1] - w[2]"),
        ((sympy.Symbol("a1"), -1, -2), "a1*w[1] - w[2] - 2*w[3]"),
        ((0, sympy.Symbol("a1") - 1, 1), "(a1 - 1)*w[2] + w[3]"),
        ((-1, 0, 0), "-w[1]"),
    ],
)
def test_format_weight(coords, expected):
    """Weights print over Bourbaki labelled fundamental weights."""
    assert format_weight(simple_system("A", 3), coords) == expected


SYSTEMS = [
    simple_system("A", 3),
    simple_system("B", 3),
    simple_system("C", 3),
    simple_system("D", 4),
    simple_system("G", 2),
    simple_system("F", 4),
]


@PROPERTY_SETTINGS
@given(system=st.sampled_from(SYSTEMS), data=st.data())
def test_reflection_properties(system, data):
    """Simple reflections are involutions that preserve the pairing."""

    coords = data.draw(
        st.lists(
            st.integers(min_value=-6, max_value=6),
            min_size=system.rank,
            max_size=system.rank,
        )
    )
    j = data.draw(st.integers(min_value=0, max_value=system.rank - 1))
    weight = Weight(coords)

    reflected = reflect_weight(system, j, weight)
    assert reflect_weight(system, j, reflected) == weight

    for coroot in positive_coroots(system):
        image = reflect_coroot(system, j, coroot)
        assert pairing(reflected, image) == pairing(weight, coroot)


@PROPERTY_SETTINGS
@given(system=st.sampled_from(SYSTEMS), data=st.data())
def test_reflection_permutes_positive_roots(system, data):
    """A simple reflection permutes the positive roots other than its own."""

    j = data.draw(st.integers(min_value=0, max_value=system.rank - 1))
    simple = Root.simple(system.rank, j)
    others = {root for root in positive_roots(system) if root != simple}

    assert {reflect_root(system, j, root) for root in others} == others
    assert reflect_root(system, j, simple) == -simple
