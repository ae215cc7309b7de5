"""Exact combinatorics of finite root systems.

This module provides the root system data used by the rest of the package: Cartan
matrices with Bourbaki numbering, integer weights and (co)root vectors, pairings,
simple reflections and the positive (co)root closures. Groups are products of simple
components together with optional torus (`C*`) and trivial (`-`) factors, which
carry no simple roots.

The Cartan matrix of a system is stored with entry `cartan[i][j]` equal to
`<alpha_i, alpha_j^vee>`, the pairing of the i-th simple root with the j-th simple
coroot, as in the Bourbaki planches. Row `i` is therefore the simple root `alpha_i`
written in the fundamental weight basis and, for G2 with `alpha_1` short,
`cartan = ((2, -1), (-3, 2))`.

All values are immutable and all arithmetic is exact Python integer arithmetic.
"""

import dataclasses
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import sympy

SIMPLE_LETTERS = ("A", "B", "C", "D", "E", "F", "G")
TORUS = "C*"
TRIVIAL = "-"

MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
"""dict: The minimum canonical rank of each classical series."""

EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

E_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))
"""tuple: Bourbaki numbered edges of the E8 Dynkin diagram, truncated for E6, E7."""

EXCEPTIONAL_CARTAN = {
    ("F", 4): ((2, -1, 0, 0), (-1, 2, -2, 0), (0, -1, 2, -1), (0, 0, -1, 2)),
    ("G", 2): ((2, -1), (-3, 2)),
}
"""dict: Cartan matrices of the doubly and triply laced exceptional types."""


def _classical_cartan(letter: str, rank: int) -> sympy.Matrix:
    """Build the Cartan matrix of a classical type as a sympy matrix."""

    mat = sympy.Matrix(
        rank, rank, lambda i, j: 2 if i == j else -1 if abs(i - j) == 1 else 0
    )
    if letter == "B":
        mat[rank - 2, rank - 1] = -2
    elif letter == "C":
        mat[rank - 1, rank - 2] = -2
    elif letter == "D":
        mat[rank - 2, rank - 1] = 0
        mat[rank - 1, rank - 2] = 0
        mat[rank - 3, rank - 1] = -1
        mat[rank - 1, rank - 3] = -1

    return mat


def _simply_laced_cartan(rank: int, edges: Iterable[tuple[int, int]]) -> sympy.Matrix:
    """Build a simply laced Cartan matrix from 1-based Dynkin edges."""

    mat = 2 * sympy.eye(rank)
    for left, right in edges:
        if left <= rank and right <= rank:
            mat[left - 1, right - 1] = -1
            mat[right - 1, left - 1] = -1

    return mat


@dataclasses.dataclass(frozen=True)
class ComponentSpec:
    """A factor of a reductive group.

    A component is either a simple factor, given by a Cartan letter and a rank, or
    one of the rootless factors: the torus `C*` or the trivial group `-`.

    Args:
        kind: One of the letters A to G, `C*` or `-`
        rank: The rank of a simple factor, zero for rootless factors
        allow_d3: Accept D3, which has the A3 diagram with Bourbaki D numbering

    Raises:
        ValueError: For an unknown kind or a rank not allowed for the type.
    """

    kind: str
    rank: int = 0
    allow_d3: bool = False

    def __post_init__(self) -> None:
        """Validates the type and rank combination."""

        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise TypeError("Component rank is not an integer")

        if self.kind in (TORUS, TRIVIAL):
            if self.rank != 0:
                raise ValueError(f"Rootless factor {self.kind} cannot have a rank")
            return

        if self.kind not in SIMPLE_LETTERS:
            raise ValueError(f"Unknown component type: {self.kind}")

        if self.kind in EXCEPTIONAL_RANKS:
            if self.rank not in EXCEPTIONAL_RANKS[self.kind]:
                raise ValueError(f"No simple type {self.kind}{self.rank}")
            return

        min_rank = MIN_RANK[self.kind]
        if self.kind == "D" and self.allow_d3:
            min_rank = 3
        if self.rank < min_rank:
            raise ValueError(
                f"Type {self.kind} requires rank at least {min_rank}, got {self.rank}"
            )

    @classmethod
    def simple(cls, letter: str, rank: int) -> "ComponentSpec":
        """Create a simple component."""
        return cls(letter, rank)

    @classmethod
    def torus(cls) -> "ComponentSpec":
        """Create a one dimensional torus component."""
        return cls(TORUS)

    @classmethod
    def trivial(cls) -> "ComponentSpec":
        """Create a trivial group component."""
        return cls(TRIVIAL)

    @property
    def is_simple(self) -> bool:
        """Does the component carry simple roots."""
        return self.kind in SIMPLE_LETTERS

    @property
    def n_simple(self) -> int:
        """The number of simple roots in the component."""
        return self.rank if self.is_simple else 0

    @property
    def name(self) -> str:
        """The component in group notation, such as `G2` or `C*`."""
        return f"{self.kind}{self.rank}" if self.is_simple else self.kind

    def cartan(self) -> tuple[tuple[int, ...], ...]:
        """The Cartan matrix of the component, with Bourbaki numbering."""

        if not self.is_simple:
            return ()

        key = (self.kind, self.rank)
        if key in EXCEPTIONAL_CARTAN:
            return EXCEPTIONAL_CARTAN[key]

        if self.kind == "E":
            mat = _simply_laced_cartan(self.rank, E_EDGES)
        else:
            mat = _classical_cartan(self.kind, self.rank)

        return tuple(tuple(int(v) for v in row) for row in mat.tolist())


@dataclasses.dataclass(frozen=True)
class RootSystem:
    """The root datum of a product of simple components and rootless factors.

    Instances should be created with
    [build_root_system][hororigid.rootsys.build_root_system]. Simple roots are
    indexed globally from zero in component order; `offsets` holds the global index
    of the first simple root of each component, or None for rootless components.

    Args:
        components: The ordered group factors
        cartan: The block diagonal Cartan matrix, `cartan[i][j] = <a_i, a_j^vee>`
        offsets: Global index of the first simple root of each component
    """

    components: tuple[ComponentSpec, ...]
    cartan: tuple[tuple[int, ...], ...]
    offsets: tuple[Optional[int], ...]

    @property
    def rank(self) -> int:
        """The number of simple roots."""
        return len(self.cartan)

    @property
    def name(self) -> str:
        """The group in the `x` separated notation, such as `A1x-xC*`."""
        return "x".join(comp.name for comp in self.components)

    @property
    def bourbaki_labels(self) -> dict[tuple[int, int], int]:
        """Map (component, 1-based Bourbaki index) pairs to global indices."""

        return {
            (cdx, local): offset + local - 1
            for cdx, (comp, offset) in enumerate(zip(self.components, self.offsets))
            if offset is not None
            for local in range(1, comp.n_simple + 1)
        }

    @property
    def is_product(self) -> bool:
        """Does the group have more than one factor."""
        return len(self.components) > 1

    def index(self, component: int, local: int) -> int:
        """Find the global index of a Bourbaki numbered simple root.

        Args:
            component: The position of the factor in the group
            local: The 1-based Bourbaki index within the factor

        Raises:
            IndexError: The factor does not exist or has no such simple root.
        """

        if not 0 <= component < len(self.components):
            raise IndexError(f"No component {component} in {self.name}")

        comp = self.components[component]
        offset = self.offsets[component]
        if offset is None or not 1 <= local <= comp.n_simple:
            raise IndexError(f"No simple root {local} in component {comp.name}")

        return offset + local - 1

    def locate(self, j: int) -> tuple[int, int]:
        """Find the component and 1-based Bourbaki index of a global index."""

        self._check_index(j)
        for cdx, (comp, offset) in enumerate(zip(self.components, self.offsets)):
            if offset is not None and offset <= j < offset + comp.n_simple:
                return cdx, j - offset + 1

        raise IndexError(f"Simple root {j} not found")  # pragma: no cover

    def component_indices(self, component: int) -> range:
        """The global indices of the simple roots of one factor."""

        offset = self.offsets[component]
        if offset is None:
            return range(0)
        return range(offset, offset + self.components[component].n_simple)

    def label(self, j: int) -> str:
        """The printed Bourbaki label of a simple root: `j` or `c:j` for products."""

        cdx, local = self.locate(j)
        return f"{cdx}:{local}" if self.is_product else str(local)

    def neighbours(self, j: int) -> frozenset[int]:
        """The simple roots linked to simple root `j` in the Dynkin diagram."""

        self._check_index(j)
        return frozenset(
            k for k in range(self.rank) if k != j and self.cartan[j][k] != 0
        )

    def _check_index(self, j: int) -> None:
        if not 0 <= j < self.rank:
            raise IndexError(f"Simple root index {j} out of range for {self.name}")


def build_root_system(components: Sequence[ComponentSpec]) -> RootSystem:
    """Assemble the root system of a product group.

    The Cartan matrix is block diagonal, with each block in Bourbaki numbering.
    Rootless factors keep their position in the component list but contribute no
    rows.

    Args:
        components: The ordered factors of the group

    Raises:
        ValueError: When no factor is simple.
    """

    components = tuple(components)
    if not any(comp.is_simple for comp in components):
        raise ValueError("A root system needs at least one simple component")

    rank = sum(comp.n_simple for comp in components)
    rows = [[0] * rank for _ in range(rank)]
    offsets: list[Optional[int]] = []

    start = 0
    for comp in components:
        if not comp.is_simple:
            offsets.append(None)
            continue
        offsets.append(start)
        for i, row in enumerate(comp.cartan()):
            rows[start + i][start : start + comp.rank] = row
        start += comp.rank

    return RootSystem(
        components=components,
        cartan=tuple(tuple(row) for row in rows),
        offsets=tuple(offsets),
    )


def _check_length(left: Sequence, right: Sequence) -> None:
    if len(left) != len(right):
        raise ValueError(f"Dimension mismatch: {len(left)} and {len(right)}")


@dataclasses.dataclass(frozen=True)
class Weight:
    """An integral weight in the fundamental weight basis.

    Coordinate `j` is `<lambda, alpha_j^vee>`, the coefficient of the fundamental
    weight `w[j]`.
    """

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        """Coerces the coordinates to a tuple of integers."""
        object.__setattr__(self, "coords", tuple(int(v) for v in self.coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        """The zero weight."""
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, j: int) -> "Weight":
        """The fundamental weight `w[j]`."""
        return cls(tuple(int(k == j) for k in range(rank)))

    @classmethod
    def rho(cls, rank: int) -> "Weight":
        """The half sum of positive roots, equal to the sum of fundamental weights."""
        return cls((1,) * rank)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, j: int) -> int:
        return self.coords[j]

    def __add__(self, other: "Weight") -> "Weight":
        _check_length(self.coords, other.coords)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        _check_length(self.coords, other.coords)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, scalar: int) -> "Weight":
        return Weight(tuple(scalar * a for a in self.coords))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.coords)

    def is_dominant(self, support: Optional[Iterable[int]] = None) -> bool:
        """Are all coordinates, or those in `support`, non-negative."""
        idx = range(len(self.coords)) if support is None else support
        return all(self.coords[j] >= 0 for j in idx)

    def is_strictly_antidominant(self) -> bool:
        """Are all coordinates negative."""
        return all(v < 0 for v in self.coords)


@dataclasses.dataclass(frozen=True)
class RootVector:
    """An integer vector in a basis of simple roots or simple coroots."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        """Coerces the coefficients to a tuple of integers."""
        object.__setattr__(self, "coeffs", tuple(int(v) for v in self.coeffs))

    @classmethod
    def simple(cls, rank: int, j: int):
        """The basis vector for simple root `j`."""
        return cls(tuple(int(k == j) for k in range(rank)))

    def _same_kind(self, other: "RootVector") -> None:
        if type(self) is not type(other):
            raise TypeError(
                f"Cannot combine {type(self).__name__} and {type(other).__name__}"
            )
        _check_length(self.coeffs, other.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j]

    def __add__(self, other):
        self._same_kind(other)
        return type(self)(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._same_kind(other)
        return type(self)(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return type(self)(tuple(-a for a in self.coeffs))

    @property
    def height(self) -> int:
        """The sum of the coefficients."""
        return sum(self.coeffs)

    @property
    def support(self) -> frozenset[int]:
        """The indices with a nonzero coefficient."""
        return frozenset(j for j, v in enumerate(self.coeffs) if v != 0)

    def is_positive(self) -> bool:
        """All coefficients non-negative and at least one positive."""
        return all(v >= 0 for v in self.coeffs) and any(v > 0 for v in self.coeffs)

    def is_negative(self) -> bool:
        """All coefficients non-positive and at least one negative."""
        return (-self).is_positive()


class Root(RootVector):
    """A root in the basis of simple roots."""


class Coroot(RootVector):
    """A coroot in the basis of simple coroots."""


def pairing(weight: Weight, coroot: Coroot) -> int:
    """Pair a weight with a coroot.

    The fundamental weights are dual to the simple coroots, so this is the dot
    product of the coordinate vectors.

    Raises:
        ValueError: The two vectors have different lengths.
    """

    _check_length(weight.coords, coroot.coeffs)
    return sum(a * b for a, b in zip(weight.coords, coroot.coeffs))


def simple_root_as_weight(rs: RootSystem, j: int) -> Weight:
    """Write the simple root `alpha_j` in the fundamental weight basis.

    Coordinate `k` of the result is `<alpha_j, alpha_k^vee>`, so the result is row
    `j` of the Cartan matrix.
    """

    rs._check_index(j)
    return Weight(rs.cartan[j])


def reflect_weight(rs: RootSystem, j: int, weight: Weight) -> Weight:
    """Apply the simple reflection `s_j(l) = l - <l, alpha_j^vee> alpha_j`."""

    _check_length(weight.coords, rs.cartan)
    coef = weight.coords[j]
    if coef == 0:
        return weight

    row = rs.cartan[j]
    return Weight(tuple(v - coef * r for v, r in zip(weight.coords, row)))


def _coroot_bracket(rs: RootSystem, j: int, coeffs: Sequence[int]) -> int:
    # <alpha_j, c> for c in the simple coroot basis
    row = rs.cartan[j]
    return sum(c * r for c, r in zip(coeffs, row))


def _root_bracket(rs: RootSystem, j: int, coeffs: Sequence[int]) -> int:
    # <a, alpha_j^vee> for a in the simple root basis
    return sum(a * rs.cartan[i][j] for i, a in enumerate(coeffs))


def reflect_coroot(rs: RootSystem, j: int, coroot: Coroot) -> Coroot:
    """Apply the simple reflection `s_j(c) = c - <alpha_j, c> alpha_j^vee`."""

    _check_length(coroot.coeffs, rs.cartan)
    coeffs = list(coroot.coeffs)
    coeffs[j] -= _coroot_bracket(rs, j, coeffs)
    return Coroot(tuple(coeffs))


def reflect_root(rs: RootSystem, j: int, root: Root) -> Root:
    """Apply the simple reflection `s_j(a) = a - <a, alpha_j^vee> alpha_j`."""

    _check_length(root.coeffs, rs.cartan)
    coeffs = list(root.coeffs)
    coeffs[j] -= _root_bracket(rs, j, coeffs)
    return Root(tuple(coeffs))


@lru_cache(maxsize=None)
def _positive_closure(
    cartan: tuple[tuple[int, ...], ...], dual: bool
) -> tuple[tuple[int, ...], ...]:
    """Close the simple (co)roots under simple reflections, keeping positives.

    Any positive root other than `alpha_j` is sent to a positive root by `s_j`, so
    the closure is the full positive system.
    """

    rank = len(cartan)

    def bracket(vec: tuple[int, ...], j: int) -> int:
        if dual:
            return sum(v * cartan[j][k] for k, v in enumerate(vec))
        return sum(v * cartan[i][j] for i, v in enumerate(vec))

    simples = [tuple(int(k == j) for k in range(rank)) for j in range(rank)]
    found = set(simples)
    frontier = list(simples)

    while frontier:
        new_vectors = []
        for vec in frontier:
            for j in range(rank):
                coef = bracket(vec, j)
                if coef == 0:
                    continue
                image = list(vec)
                image[j] -= coef
                image_tuple = tuple(image)
                if min(image_tuple) < 0 or image_tuple in found:
                    continue
                found.add(image_tuple)
                new_vectors.append(image_tuple)
        frontier = new_vectors

    return tuple(sorted(found, key=lambda vec: (sum(vec), vec)))


def _restrict(vectors: Iterable[tuple[int, ...]], support: Optional[Iterable[int]]):
    if support is None:
        return list(vectors)
    allowed = frozenset(support)
    return [
        vec
        for vec in vectors
        if all(v == 0 for k, v in enumerate(vec) if k not in allowed)
    ]


def positive_roots(
    rs: RootSystem, support: Optional[Iterable[int]] = None
) -> tuple[Root, ...]:
    """The positive roots, ordered by height.

    Args:
        rs: The root system
        support: Optionally, keep only the roots of the sub-system generated by
            these simple roots
    """

    return tuple(
        Root(vec) for vec in _restrict(_positive_closure(rs.cartan, False), support)
    )


def positive_coroots(
    rs: RootSystem, support: Optional[Iterable[int]] = None
) -> tuple[Coroot, ...]:
    """The positive coroots, ordered by height.

    The coroot closure is the root closure of the transposed Cartan matrix.

    Args:
        rs: The root system
        support: Optionally, keep only the coroots of the sub-system generated by
            these simple coroots
    """

    return tuple(
        Coroot(vec) for vec in _restrict(_positive_closure(rs.cartan, True), support)
    )


def highest_root(rs: RootSystem, component: int = 0) -> Root:
    """The highest root of one simple factor."""
    return positive_roots(rs, rs.component_indices(component))[-1]


def highest_coroot(rs: RootSystem, component: int = 0) -> Coroot:
    """The highest coroot of one simple factor."""
    return positive_coroots(rs, rs.component_indices(component))[-1]


def partial_order_leq(left: RootVector, right: RootVector) -> bool:
    """The dominance order: `right - left` has only non-negative coefficients."""

    left._same_kind(right)
    return all(b - a >= 0 for a, b in zip(left.coeffs, right.coeffs))


def format_weight(rs: RootSystem, coords: Sequence, symbol: str = "w") -> str:
    """Write a weight over the fundamental weights with ASCII labels.

    Coefficients can be integers or sympy expressions, so weights depending on a
    symbolic `a1` print as `a1*w[1] - w[2] - 2*w[6]`.

    Args:
        rs: The root system providing the Bourbaki labels
        coords: The coefficient of each fundamental weight
        symbol: The name used for the fundamental weights
    """

    _check_length(coords, rs.cartan)
    terms = []
    for j, value in enumerate(coords):
        coef = sympy.sympify(value)
        if coef == 0:
            continue

        negative = bool(coef.is_Number and coef < 0)
        size = -coef if negative else coef
        label = f"{symbol}[{rs.label(j)}]"
        if size == 1:
            body = label
        elif size.is_Atom:
            body = f"{size}*{label}"
        else:
            body = f"({size})*{label}"
        terms.append(("-" if negative else "+", body))

    if not terms:
        return "0"

    sign, body = terms[0]
    text = f"-{body}" if sign == "-" else body
    for sign, body in terms[1:]:
        text += f" {sign} {body}"

    return text
