"""Parsing of the textual group, root and weight notation.

Groups are written as `x` separated components: a Cartan letter and rank for a
simple factor (`A3`, `G2`), `-` for a trivial factor and `C*` for a torus, so that
`A1x-xC*` is a product of three factors. Simple roots are written as a 1-based
Bourbaki index in the first component (`3`), as `component:index` (`1:2`), or as
`im` for an imaginary root. Weights are comma separated integer coordinates over
the fundamental weights.

All parsers raise [GroupSpecError][hororigid.groupspec.GroupSpecError], naming the
offending token, so that malformed input never reaches the computations.
"""

import re
from typing import Optional

from hororigid.rootsys import TORUS, TRIVIAL, ComponentSpec, RootSystem, Weight

RE_COMPONENT = re.compile(r"^([A-G])(\d+)$|^-$|^C\*$")
RE_ROOT = re.compile(r"^(?:(\d+):)?(\d+)$")
RE_INTEGER = re.compile(r"^[+-]?\d+$")
RE_LABEL = re.compile(
    r"^\(?\s*([IVX]+)\s*\)?\s*\.?\s*\(?\s*(\d+)\s*('?)\s*\)?\s*('?)$"
)
RE_PRIMES = re.compile(r"[′’]")

IMAGINARY = "im"


class GroupSpecError(ValueError):
    """Exception class for malformed group, root or weight notation.

    Attributes:
        message: explanation of the error
    """

    def __init__(self, message="Malformed group specification"):
        self.message = message
        super().__init__(self.message)


def parse_group(text: str) -> tuple[ComponentSpec, ...]:
    """Parse a group such as `A1xG2` into its components.

    Raises:
        GroupSpecError: For an unknown component or an invalid rank.
    """

    text = text.strip()
    if not text:
        raise GroupSpecError("Empty group specification")

    components = []
    for token in text.split("x"):
        token = token.strip()
        match = RE_COMPONENT.match(token)
        if match is None:
            raise GroupSpecError(f"Unknown group component: '{token}'")

        try:
            if token == TRIVIAL:
                components.append(ComponentSpec.trivial())
            elif token == TORUS:
                components.append(ComponentSpec.torus())
            else:
                components.append(
                    ComponentSpec.simple(match.group(1), int(match.group(2)))
                )
        except ValueError as excep:
            raise GroupSpecError(f"Invalid group component '{token}': {excep}")

    if not any(comp.is_simple for comp in components):
        raise GroupSpecError(f"Group '{text}' has no simple component")

    return tuple(components)


def format_group(components: tuple[ComponentSpec, ...]) -> str:
    """Write components in the `x` separated group notation."""
    return "x".join(comp.name for comp in components)


def parse_root(rs: RootSystem, text: str) -> Optional[int]:
    """Parse a simple root into a global index, or None for `im`.

    Raises:
        GroupSpecError: For malformed text or a root that does not exist.
    """

    token = text.strip()
    if token == IMAGINARY:
        return None

    match = RE_ROOT.match(token)
    if match is None:
        raise GroupSpecError(f"Malformed root: '{token}'")

    component = int(match.group(1)) if match.group(1) is not None else 0
    try:
        return rs.index(component, int(match.group(2)))
    except IndexError as excep:
        raise GroupSpecError(f"Unknown root '{token}': {excep}")


def parse_roots(rs: RootSystem, text: str) -> tuple[int, ...]:
    """Parse a comma separated, possibly empty, list of simple roots.

    Raises:
        GroupSpecError: For a malformed or imaginary root.
    """

    roots = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        root = parse_root(rs, token)
        if root is None:
            raise GroupSpecError(f"Imaginary root in a root list: '{token}'")
        roots.append(root)

    return tuple(roots)


def parse_weight(rs: RootSystem, text: str) -> Weight:
    """Parse comma separated weight coordinates, one per simple root.

    Raises:
        GroupSpecError: For a non-integer coordinate or the wrong number of them.
    """

    tokens = [tok.strip() for tok in text.split(",")]
    for token in tokens:
        if not RE_INTEGER.match(token):
            raise GroupSpecError(f"Weight coordinate is not an integer: '{token}'")

    if len(tokens) != rs.rank:
        raise GroupSpecError(
            f"Weight '{text}' has {len(tokens)} coordinates, {rs.name} has rank "
            f"{rs.rank}"
        )

    return Weight(tuple(int(tok) for tok in tokens))


def normalise_label(text: str) -> str:
    """Write a case label in the dotted form, such as `V.1` or `XI.4'`.

    Labels written as `(V)(1)`, `V (1)` or `V.1` are equivalent, and the prime
    marks `′` and `’` are written as `'`. Labels that are not of the roman numeral
    form are returned stripped.
    """

    text = RE_PRIMES.sub("'", text.strip())
    match = RE_LABEL.match(text)
    if match is None:
        return text

    prime = "'" if match.group(3) or match.group(4) else ""
    return f"{match.group(1)}.{match.group(2)}{prime}"
