"""Tangent cohomology of Hirzebruch surfaces from the toric Čech complex.

This script computes `h^i(F_a, T)` for the Hirzebruch surface `F_a` without any of
the Borel-Weil-Bott machinery in the `hororigid` package, as an independent check
on the rigidity report for the datum `A1x-xC*` with beta = 1 and both alphas
imaginary, whose variety is `F_a` with `a = a1`.

The fan of `F_a` has rays `(1, 0)`, `(0, 1)`, `(-1, a)` and `(0, -1)`. The
generalised Euler sequence `0 -> O^2 -> sum_rho O(D_rho) -> T -> 0` and the
vanishing of the higher cohomology of `O` give `h^i(T)` for `i > 0` as the sum of
`h^i(O(D_rho))` over the rays, and `h^0(T)` as that sum less two.

The cohomology of each line bundle is graded by the characters `m` of the torus.
For each character in a bounding box, the Čech complex of the cover by the
maximal cones has a copy of the field for every set of cones on whose
intersection `m` is a section, and the ranks of its differentials are found with
sympy.

    python hirzebruch_tangent_cech.py 2 3 4 5
"""

import argparse
import itertools
import sys
import textwrap
from typing import Sequence

import sympy

Ray = tuple[int, int]


def hirzebruch_fan(a: int) -> tuple[list[Ray], list[tuple[int, int]]]:
    """The rays and maximal cones of the fan of `F_a`."""

    if a < 0:
        raise ValueError("The Hirzebruch index cannot be negative")

    rays = [(1, 0), (0, 1), (-1, a), (0, -1)]
    cones = [(0, 1), (1, 2), (2, 3), (3, 0)]
    return rays, cones


def _dot(m: Sequence[int], ray: Ray) -> int:
    return sum(x * y for x, y in zip(m, ray))


def _is_section(
    m: Sequence[int],
    subset: tuple[int, ...],
    rays: list[Ray],
    cones: list[tuple[int, int]],
    divisor: Sequence[int],
) -> bool:
    face = set.intersection(*(set(cones[i]) for i in subset))
    return all(_dot(m, rays[r]) >= -divisor[r] for r in face)


def character_box(rays: list[Ray], divisor: Sequence[int]) -> list[tuple[int, int]]:
    """A box of characters outside which every graded piece vanishes.

    The corners of the region cut out by the hyperplanes `<m, u> = -a_u` are
    found for each pair of independent rays, and the box is padded by one.
    """

    box = [(0, 0), (0, 0)]
    for (u, a_u), (v, a_v) in itertools.combinations(zip(rays, divisor), 2):
        mat = sympy.Matrix([u, v])
        if mat.det() == 0:
            continue
        corner = mat.LUsolve(sympy.Matrix([-a_u, -a_v]))
        for i, value in enumerate(corner):
            low, high = box[i]
            box[i] = (min(low, sympy.floor(value)), max(high, sympy.ceiling(value)))

    return [(int(low) - 1, int(high) + 1) for low, high in box]


def line_bundle_cohomology(
    rays: list[Ray], cones: list[tuple[int, int]], divisor: Sequence[int]
) -> list[int]:
    """The dimensions `h^0`, `h^1`, `h^2` of `O(D)` with `D = sum a_u D_u`."""

    if len(divisor) != len(rays):
        raise ValueError("The divisor needs one coefficient per ray")

    totals = [0] * (len(cones) + 1)
    index_sets = {
        p: list(itertools.combinations(range(len(cones)), p + 1))
        for p in range(len(cones))
    }

    for m in itertools.product(
        *(range(low, high + 1) for low, high in character_box(rays, divisor))
    ):
        # The Čech cochains: index sets whose cone intersection has m as a section
        cochains = {
            p: [s for s in sets if _is_section(m, s, rays, cones, divisor)]
            for p, sets in index_sets.items()
        }

        ranks = {}
        for p in range(len(cones) - 1):
            source, target = cochains[p], cochains[p + 1]
            if not source or not target:
                ranks[p] = 0
                continue
            column = {s: j for j, s in enumerate(source)}
            diff = sympy.zeros(len(target), len(source))
            for i, row in enumerate(target):
                for k in range(len(row)):
                    face = row[:k] + row[k + 1 :]
                    if face in column:
                        diff[i, column[face]] = (-1) ** k
            ranks[p] = diff.rank()

        for p in range(len(cones)):
            totals[p] += len(cochains[p]) - ranks.get(p, 0) - ranks.get(p - 1, 0)

    if any(totals[3:]):
        raise RuntimeError("Nonzero cohomology above the dimension of the surface")
    return totals[:3]


def tangent_cohomology(a: int) -> tuple[int, int, int]:
    """The dimensions `h^0`, `h^1`, `h^2` of the tangent sheaf of `F_a`."""

    rays, cones = hirzebruch_fan(a)
    sums = [0, 0, 0]
    for rho in range(len(rays)):
        divisor = [int(r == rho) for r in range(len(rays))]
        for i, dim in enumerate(line_bundle_cohomology(rays, cones, divisor)):
            sums[i] += dim

    return sums[0] - 2, sums[1], sums[2]


def main(args_list=None) -> int:
    """Compute tangent cohomology of Hirzebruch surfaces.

    Prints one line with `h^0`, `h^1` and `h^2` of the tangent sheaf for each
    Hirzebruch index given.
    """

    parser = argparse.ArgumentParser(
        description=textwrap.dedent(main.__doc__),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("a", type=int, nargs="+", help="Hirzebruch indices")
    args = parser.parse_args(args=args_list)

    for a in args.a:
        h0, h1, h2 = tangent_cohomology(a)
        sys.stdout.write(f"a={a}: h0={h0}, h1={h1}, h2={h2}\n")

    return 0


if __name__ == "__main__":
    sys.exit(main())
