"""The catalog of case families and the reproduction harnesses.

The catalog encodes the families of rank one horospherical varieties of Picard
number two for which the tangent cohomology has been tabulated. Each record
describes a family by a group template, the placements of `beta`, `alpha0` and
`alpha1` and ranges for the free parameters, together with the expected values:

* `table_y` and `table_z`: the expected `A, B, c, d` values for the orbit and the
  value of `a1` at which `lambda = 1`, with `-` marking an empty or uncompared
  cell;
* `nontrivial`: the orbits and values of `a1` with a nonzero `H^1`, written as
  `Y:1` or `Z:>=1`.

Records are stored in the configobj format, so that an override file with the same
layout can replace or extend the built in records. A record looks like:

```ini
[I.3]
group = A{m}
beta = 0:1
alpha0 = 0:{i+1}
alpha1 = 0:{i}
params = m, i
m_range = 3, 9
i_range = 2, m-1
table_y = 0, 1, 1, 1, 1
nontrivial = Y:1
```

The section name is the record id; variants of a family share a `label` (which
defaults to the part of the id before any `/`). Roots are written as
`component:index`, where the index can be an expression in the parameters in
braces, or as `im` for imaginary. Range bounds can refer to earlier parameters.
Records whose group exceeds the requested rank are skipped, and `a1` is swept from
`a1_min` (default 1) up to the requested maximum.

The module provides the reproduction of the list of nontrivial cases
([reproduce_proposition][hororigid.catalog.reproduce_proposition]) and of the
coefficient tables
([reproduce_appendix_table][hororigid.catalog.reproduce_appendix_table]),
as well as a brute force scan over all root placements in small groups
([brute_scan][hororigid.catalog.brute_scan]). Within the catalog and the scanned
ranks these harnesses check the "only in" direction of the case list; they do not
decide whether a scanned datum belongs to the smooth classification.
"""

import dataclasses
import itertools
import re
from functools import lru_cache
from typing import Iterator, Optional

import sympy
from configobj import ConfigObj, flatten_errors, get_extra_values
from tqdm import tqdm
from validate import Validator

from hororigid.groupspec import format_group, normalise_label, parse_group
from hororigid.horo import (
    CrossCheckError,
    HorosphericalDatum,
    Orbit,
    cd_coefficients,
    linkage_AB,
    rigidity_report,
)
from hororigid.logger import LOGGER, log_and_raise, loggerinfo_push_pop, nested
from hororigid.rootsys import (
    EXCEPTIONAL_RANKS,
    MIN_RANK,
    ComponentSpec,
    RootSystem,
    build_root_system,
)

RE_BRACES = re.compile(r"\{([^}]*)\}")
RE_NONTRIVIAL = re.compile(r"^([YZ]):(>=)?(\d+)$")

CATALOG_SPEC = {
    "__many__": {
        "label": "string(default=None)",
        "group": "string()",
        "beta": "string()",
        "alpha0": "string()",
        "alpha1": "string()",
        "params": "force_list(default=list())",
        "a1_min": "integer(min=0, default=1)",
        "table_y": "string_list(min=5, max=5, default=None)",
        "table_z": "string_list(min=5, max=5, default=None)",
        "nontrivial": "force_list(default=list())",
        "__many__": "string_list(min=2, max=2)",
    }
}
"""dict: The configobj specification of a catalog record. Fields not named here
must be parameter ranges."""

BUILTIN_CATALOG = """
[I.3]
group = A{m}
beta = 0:1
alpha0 = 0:{i+1}
alpha1 = 0:{i}
params = m, i
m_range = 3, 9
i_range = 2, m-1
table_y = 0, 1, 1, 1, 1
nontrivial = Y:1

[II.3]
group = B{m}
beta = 0:{m}
alpha0 = 0:{i-1}
alpha1 = 0:{i}
params = m, i
m_range = 3, 9
i_range = 2, m-1
a1_min = 0
table_y = 0, 1, 1, 2, 0
nontrivial = Y:0

[II.5']
group = B{m}
beta = 0:1
alpha0 = 0:{m}
alpha1 = 0:{m-1}
params = m,
m_range = 3, 9
table_y = 0, 1, 2, 1, -

[III.5']
group = C{m}
beta = 0:1
alpha0 = 0:{j+1}
alpha1 = 0:{j}
params = m, j
m_range = 3, 9
j_range = 2, m-1
table_y = 0, 1, 1, 1, 1
nontrivial = Y:1

[IV.2']
group = D{m}
beta = 0:{m}
alpha0 = 0:{m-1}
alpha1 = 0:1
params = m,
m_range = 4, 9
table_y = 0, 1, 1, 1, 1
nontrivial = Y:1

[IV.5]
group = D{m}
beta = 0:1
alpha0 = 0:{m}
alpha1 = 0:{m-1}
params = m,
m_range = 4, 9
table_y = 0, 1, 1, 1, 1
nontrivial = Y:1

[V.1]
group = E6
beta = 0:1
alpha0 = 0:2
alpha1 = 0:3
a1_min = 0

[VIII.2']
group = F4
beta = 0:1
alpha0 = 0:3
alpha1 = 0:2
table_y = 0, 1, 2, -, -

[VIII.5]
group = F4
beta = 0:4
alpha0 = 0:2
alpha1 = 0:3
table_y = 0, 1, 1, 1, 1
nontrivial = Y:1

[VIII.6]
group = F4
beta = 0:4
alpha0 = 0:1
alpha1 = 0:3
a1_min = 0
table_y = 0, 1, 1, 2, 0
nontrivial = Y:0

[IX.1]
group = A{m}xA{n}
beta = 0:1
alpha0 = 0:2
alpha1 = 1:1
params = m, n
m_range = 2, 8
n_range = 1, 8
table_y = 1, 0, 0, 0, 2
nontrivial = Y:2

[IX.1/im]
group = A{m}xC*
beta = 0:1
alpha0 = 0:2
alpha1 = im
params = m,
m_range = 2, 9
table_y = 1, 0, 0, 0, 2
nontrivial = Y:2

[IX.2']
group = A{m}xA{n}
beta = 0:1
alpha0 = 1:1
alpha1 = 0:{m}
params = m, n
m_range = 2, 8
n_range = 1, 8
table_y = 0, 1, 0, 1, 1
nontrivial = Y:1

[IX.2'/im]
group = A{m}x-
beta = 0:1
alpha0 = im
alpha1 = 0:{m}
params = m,
m_range = 2, 9
table_y = 0, 1, 0, 1, 1
nontrivial = Y:1

# IX.5', IX.7 (k = 2), IX.12 and IX.17' share one diagram, so the records match
[IX.5']
group = A{m}xC*
beta = 0:{p+1}
alpha0 = 0:{p+2}
alpha1 = 0:1
params = p, m
p_range = 2, 7
m_range = p+2, 9
table_y = 1, 1, 0, 1, 1
nontrivial = Y:1

# Same diagram as IX.5'
[IX.7]
group = A{m}xC*
beta = 0:{p+1}
alpha0 = 0:{p+2}
alpha1 = 0:1
params = p, m
p_range = 2, 7
m_range = p+2, 9
table_y = 1, 1, 0, 1, 1
nontrivial = Y:1

# Same diagram as IX.5'
[IX.12]
group = A{m}xC*
beta = 0:{p+1}
alpha0 = 0:{p+2}
alpha1 = 0:1
params = p, m
p_range = 2, 7
m_range = p+2, 9
table_y = 1, 1, 0, 1, 1
nontrivial = Y:1

# Same diagram as IX.5'
[IX.17']
group = A{m}xC*
beta = 0:{p+1}
alpha0 = 0:{p+2}
alpha1 = 0:1
params = p, m
p_range = 2, 7
m_range = p+2, 9
table_y = 1, 1, 0, 1, 1
nontrivial = Y:1

[X.15]
group = B{m}xA{n}
beta = 0:{m}
alpha0 = 0:1
alpha1 = 1:1
params = m, n
m_range = 3, 8
n_range = 1, 6
a1_min = 0
table_z = 0, 1, 0, 2, 0
nontrivial = Z:0

[X.15/im]
group = B{m}xC*
beta = 0:{m}
alpha0 = 0:1
alpha1 = im
params = m,
m_range = 3, 9
a1_min = 0
table_z = 0, 1, 0, 2, 0
nontrivial = Z:0

[X.16]
group = B{m}xA{n}
beta = 0:{m}
alpha0 = 0:{m-1}
alpha1 = 1:1
params = m, n
m_range = 3, 8
n_range = 1, 6
table_y = 1, 0, 0, 0, 2
nontrivial = Y:2

[X.16/im]
group = B{m}xC*
beta = 0:{m}
alpha0 = 0:{m-1}
alpha1 = im
params = m,
m_range = 3, 9
table_y = 1, 0, 0, 0, 2
nontrivial = Y:2

# a1 = 0 is not part of this family. beta is the first, short root of C_m and
# alpha0 its neighbour, which gives A = 1; beta on the long root would give A = 2
[XI.1]
group = C{m}xA{n}
beta = 0:1
alpha0 = 0:2
alpha1 = 1:1
params = m, n
m_range = 2, 8
n_range = 1, 6
table_y = 1, 0, 0, 0, 2
nontrivial = Y:2

[XI.1/im]
group = C{m}xC*
beta = 0:1
alpha0 = 0:2
alpha1 = im
params = m,
m_range = 2, 9
table_y = 1, 0, 0, 0, 2
nontrivial = Y:2

[XI.4']
group = C{m}
beta = 0:{p+1}
alpha0 = 0:{p+2}
alpha1 = 0:1
params = p, m
p_range = 2, 7
m_range = p+2, 9
table_y = 1, 1, 0, 1, 1
nontrivial = Y:1

[XI.4]
group = C3
beta = 0:2
alpha0 = 0:1
alpha1 = 0:3
a1_min = 0
table_y = 1, 1, 0, 2, 0
nontrivial = Y:0

[XI.7]
group = C{m}
beta = 0:{m-1}
alpha0 = 0:{m-2}
alpha1 = 0:{m}
params = m,
m_range = 3, 9
a1_min = 0
table_y = 1, 1, 0, 2, 0
nontrivial = Y:0

[XVI.9]
group = F4
beta = 0:3
alpha0 = 0:1
alpha1 = 0:4
a1_min = 0
table_z = 1, 1, 0, 2, 0
nontrivial = Z:0

[XVI.11]
group = F4
beta = 0:3
alpha0 = 0:2
alpha1 = 0:4
table_y = 1, 1, 0, 1, 1
nontrivial = Y:1

# beta is the short root of G2
[XVII.1]
group = G2xA{n}
beta = 0:1
alpha0 = 0:2
alpha1 = 1:1
params = n,
n_range = 1, 7
table_y = 1, 0, 0, 0, 2
table_z = 0, 1, 0, 3, 1
nontrivial = Y:2, Z:1

[XVII.1/im]
group = G2xC*
beta = 0:1
alpha0 = 0:2
alpha1 = im
table_y = 1, 0, 0, 0, 2
table_z = 0, 1, 0, 3, 1
nontrivial = Y:2, Z:1

[XVII.1']
group = G2xA{n}
beta = 0:1
alpha0 = 1:1
alpha1 = 0:2
params = n,
n_range = 1, 7

[XVII.1'/im]
group = G2x-
beta = 0:1
alpha0 = im
alpha1 = 0:2

[XVIII.1]
group = A1xA{n}
beta = 0:1
alpha0 = 1:1
alpha1 = 1:{n}
params = n,
n_range = 2, 8
nontrivial = Y:>=2

[XVIII.2]
group = A1xA{n}
beta = 0:1
alpha0 = 1:{k}
alpha1 = 1:{k+1}
params = n, k
n_range = 4, 8
k_range = 2, n-2
nontrivial = Y:>=2

[XVIII.3]
group = A1xB{n}
beta = 0:1
alpha0 = 1:{n-1}
alpha1 = 1:{n}
params = n,
n_range = 2, 8
nontrivial = Y:>=2

[XVIII.3']
group = A1xB{n}
beta = 0:1
alpha0 = 1:{n}
alpha1 = 1:{n-1}
params = n,
n_range = 2, 8

[XVIII.4]
group = A1xB3
beta = 0:1
alpha0 = 1:1
alpha1 = 1:3
nontrivial = Y:>=2

[XVIII.4']
group = A1xB3
beta = 0:1
alpha0 = 1:3
alpha1 = 1:1

[XVIII.5]
group = A1xC{n}
beta = 0:1
alpha0 = 1:{k+1}
alpha1 = 1:{k}
params = n, k
n_range = 2, 8
k_range = 1, n-1
nontrivial = Y:>=2

[XVIII.5']
group = A1xC{n}
beta = 0:1
alpha0 = 1:{k}
alpha1 = 1:{k+1}
params = n, k
n_range = 2, 8
k_range = 1, n-1

[XVIII.6]
group = A1xD{n}
beta = 0:1
alpha0 = 1:{n-1}
alpha1 = 1:{n}
params = n,
n_range = 4, 8
nontrivial = Y:>=2

[XVIII.7]
group = A1xF4
beta = 0:1
alpha0 = 1:2
alpha1 = 1:3
nontrivial = Y:>=2

[XVIII.7']
group = A1xF4
beta = 0:1
alpha0 = 1:3
alpha1 = 1:2

# alpha0 is the long and alpha1 the short root of the G2 factor
[XVIII.8/A1]
group = A1xG2
beta = 0:1
alpha0 = 1:2
alpha1 = 1:1
nontrivial = Y:>=2, Z:>=1

[XVIII.8/A]
group = A{m}xG2
beta = 0:1
alpha0 = 1:2
alpha1 = 1:1
params = m,
m_range = 2, 7
nontrivial = Z:>=1

[XVIII.8/A-inner]
group = A{m}xG2
beta = 0:{k}
alpha0 = 1:2
alpha1 = 1:1
params = m, k
m_range = 3, 7
k_range = 2, m-1
nontrivial = Z:>=1

[XVIII.8/B]
group = B{m}xG2
beta = 0:1
alpha0 = 1:2
alpha1 = 1:1
params = m,
m_range = 2, 7
nontrivial = Z:>=1

[XVIII.8/C]
group = C{m}xG2
beta = 0:1
alpha0 = 1:2
alpha1 = 1:1
params = m,
m_range = 3, 7
nontrivial = Z:>=1

[XVIII.8/D]
group = D{m}xG2
beta = 0:1
alpha0 = 1:2
alpha1 = 1:1
params = m,
m_range = 4, 7
nontrivial = Z:>=1

[XVIII.8/E6]
group = E6xG2
beta = 0:1
alpha0 = 1:2
alpha1 = 1:1
nontrivial = Z:>=1

[XVIII.8/F4]
group = F4xG2
beta = 0:1
alpha0 = 1:2
alpha1 = 1:1
nontrivial = Z:>=1

[XVIII.8/G2]
group = G2xG2
beta = 0:1
alpha0 = 1:2
alpha1 = 1:1
nontrivial = Z:>=1

[XVIII.8']
group = A{m}xG2
beta = 0:1
alpha0 = 1:1
alpha1 = 1:2
params = m,
m_range = 1, 7

[G0xG1xG2]
group = A1xA{p}xA{q}
beta = 0:1
alpha0 = 1:1
alpha1 = 2:1
params = p, q
p_range = 1, 4
q_range = 1, 4
nontrivial = Y:>=2

[G0xG1xG2/im0]
group = A1x-xA{q}
beta = 0:1
alpha0 = im
alpha1 = 2:1
params = q,
q_range = 1, 8
nontrivial = Y:>=2

[G0xG1xG2/im1]
group = A1xA{p}xC*
beta = 0:1
alpha0 = 1:1
alpha1 = im
params = p,
p_range = 1, 8
nontrivial = Y:>=2

# The Hirzebruch surfaces
[G0xG1xG2/im]
group = A1x-xC*
beta = 0:1
alpha0 = im
alpha1 = im
nontrivial = Y:>=2
"""
"""str: The built in catalog records, in the configobj format."""


def _evaluate(expression: str, values: dict[str, int]) -> int:
    """Evaluate an integer expression in the record parameters."""

    symbols = {name: sympy.Symbol(name) for name in values}
    try:
        result = sympy.sympify(expression, locals=symbols).subs(values)
    except (sympy.SympifyError, TypeError) as excep:
        raise ValueError(f"Cannot evaluate '{expression}': {excep}")

    if not result.is_Integer:
        raise ValueError(f"Expression '{expression}' is not an integer: {result}")
    return int(result)


def _substitute(template: str, values: dict[str, int]) -> str:
    """Replace the braced expressions in a template by their values."""
    return RE_BRACES.sub(lambda m: str(_evaluate(m.group(1), values)), template)


@lru_cache(maxsize=None)
def group_root_system(group: str) -> RootSystem:
    """Build the root system of a group written in the `x` separated notation."""
    return build_root_system(parse_group(group))


@dataclasses.dataclass(frozen=True)
class TableRow:
    """The expected `A`, `B`, `c`, `d` and `a1` values for one orbit.

    None marks a value that is not compared or, for `a1`, an empty cell.
    """

    A: Optional[int]
    B: Optional[int]
    c: Optional[int]
    d: Optional[int]
    a1: Optional[int]

    @classmethod
    def from_strings(cls, cells: list[str]) -> "TableRow":
        """Parse the five cells of a row, with `-` for None."""

        values = []
        for cell in cells:
            cell = cell.strip()
            if cell == "-":
                values.append(None)
            elif re.match(r"^\d+$", cell):
                values.append(int(cell))
            else:
                raise ValueError(f"Bad table cell: '{cell}'")
        return cls(*values)

    def differences(self, computed: "TableRow") -> list[str]:
        """Describe the cells where a computed row differs from this expected row.

        Cells holding None are not compared, except that an empty `a1` cell next
        to a given `d` requires that no value of `a1` gives `lambda = 1`.
        """

        diffs = []
        for field in dataclasses.fields(self):
            expected = getattr(self, field.name)
            found = getattr(computed, field.name)
            compared = expected is not None or (
                field.name == "a1" and self.d is not None
            )
            if compared and expected != found:
                shown = "-" if expected is None else expected
                diffs.append(f"{field.name}={found} (expected {shown})")
        return diffs


@dataclasses.dataclass(frozen=True)
class NontrivialSpec:
    """An orbit with a nonzero `H^1` at `a1`, or at every value from `a1` on."""

    orbit: Orbit
    a1: int
    at_least: bool = False

    @classmethod
    def from_string(cls, text: str) -> "NontrivialSpec":
        """Parse `Y:1` or `Z:>=1`."""

        match = RE_NONTRIVIAL.match(text.strip())
        if match is None:
            raise ValueError(f"Bad nontrivial entry: '{text}'")
        return cls(Orbit(match.group(1)), int(match.group(3)), bool(match.group(2)))

    def matches(self, a1: int) -> bool:
        """Does the entry include this value of `a1`."""
        return a1 >= self.a1 if self.at_least else a1 == self.a1


@dataclasses.dataclass(frozen=True)
class CatalogRecord:
    """A family of data from the case list.

    Args:
        record_id: The unique record name
        label: The case label shared by the variants of a family
        group: The group template, such as `A{m}xA{n}`
        beta: The placement of beta, `component:index`
        alpha0: The placement of alpha0, `component:index` or `im`
        alpha1: The placement of alpha1, `component:index` or `im`
        params: The parameter names, in the order their ranges are evaluated
        ranges: The (low, high) bound expressions for each parameter
        a1_min: The smallest value of a1 in the family
        table_y: The expected table row for orbit Y
        table_z: The expected table row for orbit Z
        nontrivial: The expected nonzero H1 entries
    """

    record_id: str
    label: str
    group: str
    beta: str
    alpha0: str
    alpha1: str
    params: tuple[str, ...] = ()
    ranges: tuple[tuple[str, str], ...] = ()
    a1_min: int = 1
    table_y: Optional[TableRow] = None
    table_z: Optional[TableRow] = None
    nontrivial: tuple[NontrivialSpec, ...] = ()

    @property
    def tables(self) -> dict[Orbit, TableRow]:
        """The table rows present, keyed by orbit."""

        rows = {Orbit.Y: self.table_y, Orbit.Z: self.table_z}
        return {orbit: row for orbit, row in rows.items() if row is not None}

    def parameter_tuples(self) -> Iterator[dict[str, int]]:
        """Yield every admissible assignment of the parameters."""

        def extend(values: dict[str, int], depth: int) -> Iterator[dict[str, int]]:
            if depth == len(self.params):
                yield dict(values)
                return
            low, high = (_evaluate(bound, values) for bound in self.ranges[depth])
            for value in range(low, high + 1):
                values[self.params[depth]] = value
                yield from extend(values, depth + 1)
            values.pop(self.params[depth], None)

        yield from extend({}, 0)

    def _place(self, rs: RootSystem, placement: str, values: dict[str, int]):
        if placement.strip() == "im":
            return None
        component, _, local = _substitute(placement, values).partition(":")
        return rs.index(int(component), int(local))

    def build(self, values: dict[str, int], a1: Optional[int] = None):
        """Build the datum for one parameter assignment.

        Args:
            values: The parameter values
            a1: The value of a1, defaulting to `a1_min`
        """

        rs = group_root_system(_substitute(self.group, values))
        return HorosphericalDatum(
            rs=rs,
            beta=self._place(rs, self.beta, values),
            alpha0=self._place(rs, self.alpha0, values),
            alpha1=self._place(rs, self.alpha1, values),
            a1=self.a1_min if a1 is None else a1,
            case_label=self.label,
        )

    def data(
        self, max_rank: int
    ) -> Iterator[tuple[dict[str, int], HorosphericalDatum]]:
        """Yield the parameter values and datum of each family member in range."""

        for values in self.parameter_tuples():
            datum = self.build(values)
            if datum.rs.rank <= max_rank:
                yield values, datum

    def expected_hits(self, max_a1: int) -> set[tuple[Orbit, int]]:
        """The expected (orbit, a1) pairs with nonzero H1 up to `max_a1`."""

        return {
            (spec.orbit, a1)
            for spec in self.nontrivial
            for a1 in range(self.a1_min, max_a1 + 1)
            if spec.matches(a1)
        }


def _record_from_section(record_id: str, section: dict) -> CatalogRecord:
    """Convert a validated configobj section into a record."""

    params = tuple(p.strip() for p in section["params"] if p.strip())
    known = set(CATALOG_SPEC["__many__"]) - {"__many__"}

    ranges = []
    for name in params:
        key = f"{name}_range"
        if key not in section:
            raise ValueError(f"Record {record_id}: no range for parameter {name}")
        ranges.append(tuple(section[key]))

    for key in section:
        if key not in known and key not in {f"{p}_range" for p in params}:
            raise ValueError(f"Record {record_id}: unknown field {key}")

    label = section["label"] or record_id.split("/")[0]

    record = CatalogRecord(
        record_id=record_id,
        label=normalise_label(label),
        group=section["group"],
        beta=section["beta"],
        alpha0=section["alpha0"],
        alpha1=section["alpha1"],
        params=params,
        ranges=tuple(ranges),
        a1_min=section["a1_min"],
        table_y=None
        if section["table_y"] is None
        else TableRow.from_strings(section["table_y"]),
        table_z=None
        if section["table_z"] is None
        else TableRow.from_strings(section["table_z"]),
        nontrivial=tuple(NontrivialSpec.from_string(n) for n in section["nontrivial"]),
    )

    # Check the placements on the first family member
    first = next(record.parameter_tuples(), None)
    if first is None:
        raise ValueError(f"Record {record_id}: empty parameter ranges")
    record.build(first)

    return record


def parse_catalog(source) -> tuple[CatalogRecord, ...]:
    """Parse catalog records from a file path or a list of lines.

    Raises:
        RuntimeError: The records fail configobj validation.
        ValueError: A record has unknown fields or invalid placements.
    """

    config_obj = ConfigObj(source, configspec=CATALOG_SPEC)
    valid = config_obj.validate(Validator(), preserve_errors=True)

    if isinstance(valid, dict):
        LOGGER.critical("Catalog record issues: ")
        with nested():
            for sec, key, err in flatten_errors(config_obj, valid):
                sec.append(key if key is not None else "")
                LOGGER.critical(f"In record '{'.'.join(sec)}': {err}")
        raise RuntimeError("Catalog failure")

    extra = get_extra_values(config_obj)
    if extra:
        names = [".".join(list(sec) + [name]) for sec, name in extra]
        log_and_raise(
            "Unknown catalog sections: ", ValueError, extra={"join": names}
        )

    records = []
    for record_id in config_obj.sections:
        try:
            records.append(_record_from_section(record_id, config_obj[record_id]))
        except (ValueError, TypeError, IndexError) as excep:
            log_and_raise(f"Invalid catalog record {record_id}: {excep}", ValueError)

    return tuple(records)


def _check_g2_orientation(record: CatalogRecord) -> None:
    """Check that beta is the short root when it lies in a G2 factor."""

    datum = record.build(next(record.parameter_tuples()))
    rs = datum.rs
    component = rs.locate(datum.beta)[0]
    if rs.components[component].kind != "G":
        return

    (other,) = set(rs.component_indices(component)) - {datum.beta}
    if rs.cartan[datum.beta][other] != -1 or rs.cartan[other][datum.beta] != -3:
        log_and_raise(
            f"Catalog record {record.record_id}: beta must be the short G2 root",
            ValueError,
        )


@loggerinfo_push_pop("Loading catalog")
def load_catalog(resources=None) -> tuple[CatalogRecord, ...]:
    """Load the built in catalog and apply any override file.

    Override records replace built in records with the same id, and other
    override records are appended.

    Args:
        resources: A Resources instance, whose `catalog.override` can name an
            override file
    """

    records = {r.record_id: r for r in parse_catalog(BUILTIN_CATALOG.splitlines())}
    LOGGER.info(f"Loaded {len(records)} built in records")

    override = None if resources is None else resources.catalog.override
    if override:
        replaced = 0
        for record in parse_catalog(override):
            replaced += record.record_id in records
            records[record.record_id] = record
        LOGGER.info(f"Override file {override}: {replaced} records replaced")

    for record in records.values():
        _check_g2_orientation(record)

    return tuple(records.values())


def select_records(
    records: tuple[CatalogRecord, ...], only: Optional[str] = None
) -> tuple[CatalogRecord, ...]:
    """Select the records with a case label, or all records."""

    if only is None:
        return records

    label = normalise_label(only)
    selected = tuple(r for r in records if r.label == label)
    if not selected:
        log_and_raise(f"No catalog records with label {label}", LookupError)
    return selected


def find_datum(
    records: tuple[CatalogRecord, ...], label: str, group: str, a1: int
) -> HorosphericalDatum:
    """Find the catalog datum with a case label in a given group.

    Raises:
        LookupError: No family member with that label has that group.
    """

    name = format_group(parse_group(group))
    for record in select_records(records, label):
        for values in record.parameter_tuples():
            datum = record.build(values, a1)
            if datum.rs.name == name:
                return datum

    raise LookupError(f"No datum for case {normalise_label(label)} in group {name}")


@dataclasses.dataclass
class DiffReport:
    """The differences between computed and expected catalog values.

    Reports of the same kind can be combined with `merge`.

    Args:
        kind: Either `proposition` or `table`
        checked: The number of comparisons made
        misses: Expected values that were not found or did not match
        extras: Computed values that were not expected
        crosscheck_failures: Data where the criterion and Bott reduction disagree
        hits: The (label, orbit, a1) values with a nonzero H1
        rows: The (label, orbit) table rows compared
    """

    kind: str
    checked: int = 0
    misses: list[str] = dataclasses.field(default_factory=list)
    extras: list[str] = dataclasses.field(default_factory=list)
    crosscheck_failures: list[str] = dataclasses.field(default_factory=list)
    hits: set[tuple[str, str, int]] = dataclasses.field(default_factory=set)
    rows: set[tuple[str, str]] = dataclasses.field(default_factory=set)

    @property
    def ok(self) -> bool:
        """Are there no differences."""
        return not (self.misses or self.extras or self.crosscheck_failures)

    def merge(self, other: "DiffReport") -> "DiffReport":
        """Combine two reports of the same kind."""

        if self.kind != other.kind:
            raise ValueError(f"Cannot merge {self.kind} and {other.kind} reports")

        return DiffReport(
            kind=self.kind,
            checked=self.checked + other.checked,
            misses=self.misses + other.misses,
            extras=self.extras + other.extras,
            crosscheck_failures=self.crosscheck_failures + other.crosscheck_failures,
            hits=self.hits | other.hits,
            rows=self.rows | other.rows,
        )

    def family_hits(self) -> tuple[int, int]:
        """The number of labels with hits at `a1 = 0` and at `a1 > 0`."""

        zero = {label for label, _, a1 in self.hits if a1 == 0}
        positive = {label for label, _, a1 in self.hits if a1 > 0}
        return len(zero), len(positive)

    def summary(self) -> str:
        """A one line summary."""

        if self.ok:
            status = "OK"
        else:
            status = (
                f"FAILED ({len(self.misses)} misses, {len(self.extras)} extras, "
                f"{len(self.crosscheck_failures)} cross-check failures)"
            )

        if self.kind == "proposition":
            zero, positive = self.family_hits()
            return f"proposition: {status} ({zero} + {positive} family hits)"
        return f"table: {status} ({len(self.rows)} rows)"

    def to_dict(self) -> dict:
        """The report as a dictionary with sorted lists."""

        return {
            "kind": self.kind,
            "ok": self.ok,
            "checked": self.checked,
            "misses": self.misses,
            "extras": self.extras,
            "crosscheck_failures": self.crosscheck_failures,
            "family_hits": list(self.family_hits()),
            "rows": len(self.rows),
        }


def _member_name(record: CatalogRecord, values: dict[str, int]) -> str:
    params = ",".join(f"{k}={v}" for k, v in values.items())
    return f"{record.record_id}[{params}]" if params else record.record_id


@loggerinfo_push_pop("Reproducing the nontrivial case list")
def reproduce_proposition(
    records: tuple[CatalogRecord, ...],
    max_rank: int = 9,
    max_a1: int = 6,
    progress: bool = False,
) -> DiffReport:
    """Compare the computed nonzero H1 cases with the expected ones.

    Every family member up to `max_rank` is evaluated for `a1` from the record
    minimum up to `max_a1`.
    """

    report = DiffReport(kind="proposition")

    for record in tqdm(records, disable=not progress, desc="proposition"):
        expected = record.expected_hits(max_a1)
        for values, datum in record.data(max_rank):
            name = _member_name(record, values)
            found = set()
            for a1 in range(record.a1_min, max_a1 + 1):
                report.checked += 1
                try:
                    result = rigidity_report(datum.with_a1(a1))
                except CrossCheckError as excep:
                    LOGGER.error(excep.message)
                    report.crosscheck_failures.append(excep.message)
                    continue
                for analysis in result.analyses:
                    if analysis.h1.is_nonzero:
                        found.add((analysis.orbit, a1))
                        report.hits.add((record.label, analysis.orbit.value, a1))

            for orbit, a1 in sorted(expected - found, key=lambda x: (x[1], x[0].value)):
                msg = f"{name}: expected nonzero H1 on {orbit.value} at a1={a1}"
                LOGGER.error(msg)
                report.misses.append(msg)
            for orbit, a1 in sorted(found - expected, key=lambda x: (x[1], x[0].value)):
                msg = f"{name}: unexpected nonzero H1 on {orbit.value} at a1={a1}"
                LOGGER.error(msg)
                report.extras.append(msg)

    LOGGER.info(report.summary())
    return report


def _annotation(orbit: Orbit, c: int, d: int) -> Optional[int]:
    """The value of a1 giving `lambda = 1`, or None when no value can."""

    a1 = 2 - d if orbit is Orbit.Y else d - 2
    if c < 2 and a1 >= 0:
        return a1
    return None


@loggerinfo_push_pop("Reproducing the coefficient tables")
def reproduce_appendix_table(
    records: tuple[CatalogRecord, ...], max_rank: int = 9
) -> DiffReport:
    """Compare the computed A, B, c, d and a1 values with the table rows."""

    report = DiffReport(kind="table")

    for record in records:
        for orbit, row in record.tables.items():
            report.rows.add((record.label, orbit.value))
            for values, datum in record.data(max_rank):
                report.checked += 1
                cd = cd_coefficients(datum, orbit)
                A, B, _ = linkage_AB(datum, orbit)
                computed = TableRow(A, B, cd.c, cd.d, _annotation(orbit, cd.c, cd.d))

                diffs = row.differences(computed)
                if diffs:
                    member = _member_name(record, values)
                    msg = f"{member} {orbit.value}: {', '.join(diffs)}"
                    LOGGER.error(msg)
                    report.misses.append(msg)

    LOGGER.info(report.summary())
    return report


def c_value_scan(max_rank: int = 8) -> dict[int, int]:
    """Count the c coefficients over all placements in simple groups.

    All distinct triples of simple roots are used, except for beta at the seventh
    root of E7 and the seventh or eighth roots of E8.

    Returns:
        A dictionary mapping each c value found to its number of occurrences.
    """

    counts: dict[int, int] = {}
    excluded = {("E", 7): {7}, ("E", 8): {7, 8}}

    for comp in simple_components(max_rank):
        rs = build_root_system([comp])
        skip = excluded.get((comp.kind, comp.rank), set())
        for beta, alpha0, alpha1 in itertools.permutations(range(rs.rank), 3):
            if beta + 1 in skip:
                continue
            datum = HorosphericalDatum(rs, beta, alpha0, alpha1)
            for orbit in Orbit:
                c = cd_coefficients(datum, orbit).c
                counts[c] = counts.get(c, 0) + 1

    return counts


def simple_components(max_rank: int) -> list[ComponentSpec]:
    """All simple components of rank at most `max_rank`.

    B2 and C2 are both included, as their numberings differ.
    """

    components = []
    for letter, min_rank in MIN_RANK.items():
        for rank in range(min_rank, max_rank + 1):
            components.append(ComponentSpec.simple(letter, rank))
    for letter, ranks in EXCEPTIONAL_RANKS.items():
        for rank in ranks:
            if rank <= max_rank:
                components.append(ComponentSpec.simple(letter, rank))

    return components


@dataclasses.dataclass(frozen=True)
class ScanConfig:
    """The settings of a brute force scan.

    Args:
        max_rank: The maximum total number of simple roots
        max_a1: The maximum value of a1
        shapes: The group shapes to sweep, from `G0`, `G0xG1` and `G0xG1xG2`
        rank_ceiling: The largest allowed `max_rank`
    """

    max_rank: int = 4
    max_a1: int = 3
    shapes: tuple[str, ...] = ("G0", "G0xG1", "G0xG1xG2")
    rank_ceiling: int = 9

    def __post_init__(self) -> None:
        """Validates the settings."""

        if not 1 <= self.max_rank <= self.rank_ceiling:
            raise ValueError(
                f"max_rank must be between 1 and the ceiling {self.rank_ceiling}"
            )
        if self.max_a1 < 0:
            raise ValueError("max_a1 cannot be negative")
        unknown = set(self.shapes) - {"G0", "G0xG1", "G0xG1xG2"}
        if unknown:
            raise ValueError(f"Unknown scan shapes: {sorted(unknown)}")

    @classmethod
    def from_resources(cls, resources, **overrides) -> "ScanConfig":
        """Create a scan configuration from the `scan` section of a Resources."""

        settings = {
            "max_rank": resources.scan.max_rank,
            "max_a1": resources.scan.max_a1,
            "shapes": tuple(resources.scan.shapes),
            "rank_ceiling": resources.scan.rank_ceiling,
        }
        settings.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**settings)


@dataclasses.dataclass
class ScanReport:
    """The outcome of a brute force scan.

    Args:
        checked: The number of (datum, a1) pairs evaluated
        hits: Descriptions of data with a nonzero H1
        uncatalogued: The hits that are not catalog family members
        disagreements: Data where the criterion and Bott reduction disagree
    """

    checked: int = 0
    hits: list[str] = dataclasses.field(default_factory=list)
    uncatalogued: list[str] = dataclasses.field(default_factory=list)
    disagreements: list[str] = dataclasses.field(default_factory=list)

    @property
    def ok(self) -> bool:
        """Are there no disagreements."""
        return not self.disagreements

    def merge(self, other: "ScanReport") -> "ScanReport":
        """Combine two scan reports."""

        return ScanReport(
            checked=self.checked + other.checked,
            hits=self.hits + other.hits,
            uncatalogued=self.uncatalogued + other.uncatalogued,
            disagreements=self.disagreements + other.disagreements,
        )

    def summary(self) -> str:
        """A one line summary."""
        return (
            f"scan: {self.checked} data checked, {len(self.hits)} with nonzero H1, "
            f"{len(self.uncatalogued)} uncatalogued, "
            f"{len(self.disagreements)} disagreements"
        )

    def to_dict(self) -> dict:
        """The report as a dictionary."""

        return {
            "ok": self.ok,
            "checked": self.checked,
            "hits": len(self.hits),
            "uncatalogued": self.uncatalogued,
            "disagreements": self.disagreements,
        }


def _scan_groups(cfg: ScanConfig) -> Iterator[tuple[ComponentSpec, ...]]:
    """Yield the groups of each requested shape within the rank limit."""

    simple = simple_components(cfg.max_rank)
    trivial, torus = ComponentSpec.trivial(), ComponentSpec.torus()

    def rank(*comps: ComponentSpec) -> int:
        return sum(c.n_simple for c in comps)

    for g0 in simple:
        if "G0" in cfg.shapes and g0.rank >= 3:
            yield (g0,)
        if "G0xG1" in cfg.shapes:
            for g1 in [*simple, trivial, torus]:
                if rank(g0, g1) <= cfg.max_rank:
                    yield (g0, g1)
        if "G0xG1xG2" in cfg.shapes:
            for g1 in [*simple, trivial]:
                for g2 in [*simple, torus]:
                    if rank(g0, g1, g2) <= cfg.max_rank:
                        yield (g0, g1, g2)


def _scan_placements(
    rs: RootSystem,
) -> Iterator[tuple[int, Optional[int], Optional[int]]]:
    """Yield the (beta, alpha0, alpha1) placements of a scanned group.

    Beta lies in the first factor. Alone, all three roots lie in it; with one
    further factor, at least one alpha lies in (or is imaginary for) the second
    factor; with two, alpha0 belongs to the second and alpha1 to the third.
    """

    comps = rs.components
    g0_roots = list(rs.component_indices(0))

    def options(cdx: int, imaginary_kind: str) -> list[Optional[int]]:
        if comps[cdx].kind == imaginary_kind:
            return [None]
        return list(rs.component_indices(cdx))

    if len(comps) == 1:
        yield from itertools.permutations(g0_roots, 3)
        return

    if len(comps) == 3:
        for beta in g0_roots:
            for alpha0 in options(1, "-"):
                for alpha1 in options(2, "C*"):
                    yield beta, alpha0, alpha1
        return

    g1_roots = list(rs.component_indices(1))
    concrete = g0_roots + g1_roots
    alpha0_options: list[Optional[int]] = list(concrete)
    alpha1_options: list[Optional[int]] = list(concrete)
    if comps[1].kind == "-":
        alpha0_options.append(None)
    if comps[1].kind == "C*":
        alpha1_options.append(None)

    for beta in g0_roots:
        for alpha0 in alpha0_options:
            for alpha1 in alpha1_options:
                placed = [j for j in (beta, alpha0, alpha1) if j is not None]
                if len(set(placed)) != len(placed):
                    continue
                touches_g1 = (
                    alpha0 in g1_roots
                    or alpha1 in g1_roots
                    or (alpha0 is None and comps[1].kind == "-")
                    or (alpha1 is None and comps[1].kind == "C*")
                )
                if touches_g1:
                    yield beta, alpha0, alpha1


@loggerinfo_push_pop("Running brute force scan")
def brute_scan(
    cfg: ScanConfig,
    records: Optional[tuple[CatalogRecord, ...]] = None,
    progress: bool = False,
) -> ScanReport:
    """Evaluate every datum of the configured shapes and compare with the catalog.

    Each datum is checked for agreement between the criterion and the direct
    computation. Nonzero H1 hits that are not catalog family members are reported
    for information: such data can lie outside the smooth classification.

    Args:
        cfg: The scan settings
        records: The catalog used to recognise family members
        progress: Show a progress bar
    """

    if records is None:
        records = load_catalog()

    # Catalog members within range, keyed by group and placement
    members: dict[tuple, str] = {}
    for record in records:
        for _, datum in record.data(cfg.max_rank):
            key = (datum.rs.name, datum.beta, datum.alpha0, datum.alpha1)
            members.setdefault(key, record.label)

    report = ScanReport()
    groups = list(_scan_groups(cfg))
    LOGGER.info(f"Scanning {len(groups)} groups up to rank {cfg.max_rank}")

    for comps in tqdm(groups, disable=not progress, desc="scan"):
        rs = build_root_system(comps)
        for beta, alpha0, alpha1 in _scan_placements(rs):
            key = (rs.name, beta, alpha0, alpha1)
            label = members.get(key)
            datum = HorosphericalDatum(rs, beta, alpha0, alpha1, 0, label)
            for a1 in range(cfg.max_a1 + 1):
                report.checked += 1
                current = datum.with_a1(a1)
                try:
                    result = rigidity_report(current)
                except CrossCheckError as excep:
                    LOGGER.error(excep.message)
                    report.disagreements.append(excep.message)
                    continue

                if result.locally_rigid:
                    continue
                report.hits.append(current.describe())
                if label is None:
                    LOGGER.debug(f"Uncatalogued hit: {current.describe()}")
                    report.uncatalogued.append(current.describe())

    if report.uncatalogued:
        LOGGER.warning(
            f"{len(report.uncatalogued)} hits are not catalog family members"
        )
    LOGGER.info(report.summary())
    return report
