"""Provide the command line script.

This module provides the `hororigid` command line script, with subcommands for
single cohomology computations, rigidity reports for a single datum, catalog
reproduction and brute force scans.

* _hororigid_cli, exposed as `hororigid`
"""

import argparse
import re
import sys
import textwrap
from typing import Optional

import simplejson

from hororigid.catalog import (
    ScanConfig,
    brute_scan,
    find_datum,
    load_catalog,
    reproduce_appendix_table,
    reproduce_proposition,
    select_records,
)
from hororigid.groupspec import (
    GroupSpecError,
    normalise_label,
    parse_group,
    parse_root,
    parse_roots,
    parse_weight,
)
from hororigid.horo import (
    CrossCheckError,
    HorosphericalDatum,
    Orbit,
    chi_Y,
    chi_Z,
    levi,
    rigidity_report,
)
from hororigid.logger import CONSOLE_HANDLER, COUNTER_HANDLER, LOGGER, reset_log
from hororigid.resources import Resources
from hororigid.rootsys import build_root_system, format_weight
from hororigid.version import __version__
from hororigid.weylbwb import (
    CohomologyResult,
    ParabolicSpec,
    bwb_cohomology,
    line_bundle_cohomology,
)

RE_CHI = re.compile(r"^(?P<label>.+?):a1=(?P<a1>\d+)$")

EXIT_OK = 0
EXIT_DIFF = 1
EXIT_PARSE = 2
EXIT_CROSSCHECK = 3


def _desc_formatter(prog):
    """Bespoke argparse description formatting."""
    return argparse.RawDescriptionHelpFormatter(prog, max_help_position=16)


def _write(text: str) -> None:
    sys.stdout.write(text + "\n")


def _cohomology_dict(rs, result: CohomologyResult) -> dict:
    """A JSON ready description of a cohomology result."""

    if result.highest_weight is None:
        return {"degree": None, "highest_weight": None, "dimension": 0}

    return {
        "degree": result.degree,
        "highest_weight": format_weight(rs, result.highest_weight.coords),
        "dimension": result.dimension(rs),
    }


def _cohomology_text(rs, result: CohomologyResult) -> str:
    if result.highest_weight is None:
        return str(result)
    return f"{result}, dim {result.dimension(rs)}"


def _hororigid_cli(args_list: Optional[list[str]] = None) -> int:
    """Compute tangent cohomology of horospherical varieties.

    This is the command line interface for computing the cohomology of homogeneous
    line bundles on flag varieties and the local rigidity of rank one horospherical
    varieties of Picard number two. The list of subcommands (with aliases) is shown
    below and individual help is available for each of the subcommands:

        hororigid subcommand -h

    Groups are written as `x` separated factors, such as `E6`, `A1xG2` or
    `A1x-xC*`, where `-` is a trivial factor and `C*` a torus. Simple roots use the
    Bourbaki numbering, as `j` for the first factor or `c:j` for factor `c`
    (counting from zero), and `im` marks an imaginary root.

    The exit code is 0 on success, 1 when catalog reproduction finds differences,
    2 for malformed input and 3 when the rigidity criterion and the direct
    computation disagree.

    Args:
        args_list: This is a developer and testing facing argument that is used to
            simulate command line arguments, allowing this function to be called
            directly. For example, `hororigid bwb A2 --weight 1,1` can be replicated
            by calling `_hororigid_cli(['bwb', 'A2', '--weight', '1,1'])`.

    Returns:
        An integer exit code.
    """

    desc = textwrap.dedent(_hororigid_cli.__doc__)
    fmt = _desc_formatter
    parser = argparse.ArgumentParser(
        prog="hororigid",
        description=desc,
        formatter_class=fmt,
        usage="hororigid [-h] [-r RESOURCES] [-q] [--json] SUBCOMMAND ...",
    )

    parser.add_argument(
        "-r",
        "--resources",
        type=str,
        default=None,
        help="Path to a hororigid configuration file",
    )
    parser.add_argument(
        "-q",
        "--quiet",
        action="store_true",
        help="Suppress normal information messages and progress bars.",
    )
    parser.add_argument(
        "--json",
        action="store_true",
        default=False,
        help="Write results as a JSON document.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version="%(prog)s {version}".format(version=__version__),
    )

    subparsers = parser.add_subparsers(dest="subcommand")

    # BWB subcommand
    bwb_desc = """
    Compute the cohomology of a homogeneous bundle on a flag variety G/P. The
    parabolic P is given either by the simple roots of its Levi factor (--levi) or
    by the simple roots removed from it (--minus); the Borel subgroup is --levi "".

    The bundle is given either by a weight with --weight, using the convention
    where a dominant weight on G/B has sections V(weight), or as the normal bundle
    character of a catalog case, such as --chi "(V)(1):a1=0". In the second case
    the orbit is chosen with --orbit and, if no parabolic is given, the parabolic
    of that orbit is used.
    """

    bwb_parser = subparsers.add_parser(
        "bwb",
        description=textwrap.dedent(bwb_desc),
        help="Compute line bundle cohomology on G/P",
        formatter_class=fmt,
        aliases=["b"],
    )
    bwb_parser.add_argument("group", type=str, help="The group, such as A2 or E6")
    parabolic_group = bwb_parser.add_mutually_exclusive_group()
    parabolic_group.add_argument(
        "--levi", type=str, default=None, help="Comma separated Levi simple roots"
    )
    parabolic_group.add_argument(
        "--minus",
        type=str,
        default=None,
        help="Comma separated simple roots removed from the Levi factor",
    )
    bundle_group = bwb_parser.add_mutually_exclusive_group(required=True)
    bundle_group.add_argument(
        "--weight", type=str, default=None, help="Comma separated weight coordinates"
    )
    bundle_group.add_argument(
        "--chi",
        type=str,
        default=None,
        help="A catalog character as LABEL:a1=N, such as '(V)(1):a1=0'",
    )
    bwb_parser.add_argument(
        "--orbit",
        choices=["Y", "Z"],
        default="Y",
        help="The closed orbit used with --chi",
    )

    # REPORT subcommand
    report_desc = """
    Report the tangent cohomology, local rigidity, Fano status and obstruction
    space of a horospherical variety. The datum is given by the roots beta, alpha0
    and alpha1 and the integer a1, or by a catalog case label with --case, in which
    case the roots are taken from the catalog member in the given group.
    """

    report_parser = subparsers.add_parser(
        "report",
        description=textwrap.dedent(report_desc),
        help="Report the rigidity of a single datum",
        formatter_class=fmt,
        aliases=["r"],
    )
    report_parser.add_argument("group", type=str, help="The group, such as A1xG2")
    report_parser.add_argument("--beta", type=str, default=None, help="Root beta")
    report_parser.add_argument("--alpha0", type=str, default=None, help="Root alpha0")
    report_parser.add_argument("--alpha1", type=str, default=None, help="Root alpha1")
    report_parser.add_argument(
        "--a1", type=int, default=0, help="The non-negative integer a1"
    )
    report_parser.add_argument(
        "--case", type=str, default=None, help="A catalog case label, such as XI.4"
    )

    # CATALOG subcommand
    catalog_desc = """
    Reproduce the list of cases with nonzero H1 and the coefficient tables from the
    case catalog. The ranks and values of a1 swept are set in the configuration,
    which can also name a catalog override file.
    """

    catalog_parser = subparsers.add_parser(
        "catalog",
        description=textwrap.dedent(catalog_desc),
        help="Reproduce the catalog results",
        formatter_class=fmt,
        aliases=["c"],
    )
    catalog_parser.add_argument(
        "--check",
        choices=["all", "proposition", "table"],
        default="all",
        help="The reproduction to run",
    )
    catalog_parser.add_argument(
        "--only", type=str, default=None, help="Only check one case label"
    )

    # SCAN subcommand
    scan_desc = """
    Evaluate every placement of beta, alpha0 and alpha1 in the groups of the chosen
    shapes, checking the rigidity criterion against the direct computation. Hits
    with nonzero H1 outside the catalog are reported but do not fail the scan, as
    they can lie outside the smooth classification.
    """

    scan_parser = subparsers.add_parser(
        "scan",
        description=textwrap.dedent(scan_desc),
        help="Run a brute force scan",
        formatter_class=fmt,
        aliases=["s"],
    )
    scan_parser.add_argument(
        "--max-rank", type=int, default=None, help="The maximum number of simple roots"
    )
    scan_parser.add_argument(
        "--max-a1", type=int, default=None, help="The maximum value of a1"
    )
    scan_parser.add_argument(
        "--shapes",
        type=str,
        default=None,
        help="Comma separated group shapes from G0, G0xG1 and G0xG1xG2",
    )

    # ------------------------------------------------------
    # Parser definition complete - now handle the inputs
    # ------------------------------------------------------

    args = parser.parse_args(args=args_list)

    if args.subcommand is None:
        parser.print_usage()
        return EXIT_OK

    if args.quiet:
        # Don't suppress error messages
        CONSOLE_HANDLER.setLevel("ERROR")
    else:
        CONSOLE_HANDLER.setLevel("INFO")

    reset_log()
    resources = Resources(args.resources)
    as_json = args.json or resources.output.format == "json"

    if args.subcommand in ["bwb", "b"]:
        return _run_bwb(parser, args, resources, as_json)

    if args.subcommand in ["report", "r"]:
        return _run_report(parser, args, resources, as_json)

    if args.subcommand in ["catalog", "c"]:
        return _run_catalog(parser, args, resources, as_json)

    return _run_scan(parser, args, resources, as_json)


def _run_bwb(parser, args, resources, as_json: bool) -> int:
    """Handle the bwb subcommand."""

    try:
        rs = build_root_system(parse_group(args.group))

        parabolic = None
        if args.levi is not None:
            parabolic = ParabolicSpec(parse_roots(rs, args.levi))
        elif args.minus is not None:
            parabolic = ParabolicSpec.from_complement(rs, parse_roots(rs, args.minus))

        if args.weight is not None:
            if parabolic is None:
                parabolic = ParabolicSpec()
            weight = parse_weight(rs, args.weight)
            result = line_bundle_cohomology(rs, parabolic, weight)
        else:
            match = RE_CHI.match(args.chi.strip())
            if match is None:
                raise GroupSpecError(f"Malformed character: '{args.chi}'")
            datum = find_datum(
                load_catalog(resources),
                match.group("label"),
                args.group,
                int(match.group("a1")),
            )
            orbit = Orbit(args.orbit)
            weight = chi_Y(datum) if orbit is Orbit.Y else chi_Z(datum)
            if parabolic is None:
                parabolic = levi(datum, orbit)
            result = bwb_cohomology(rs, parabolic, weight)
    except (ValueError, IndexError, LookupError) as excep:
        parser.error(str(excep))

    if as_json:
        levi_labels = [rs.label(j) for j in sorted(parabolic.levi_roots)]
        document = {
            "group": rs.name,
            "levi": levi_labels,
            "weight": format_weight(rs, weight.coords),
            "cohomology": _cohomology_dict(rs, result),
        }
        _write(simplejson.dumps(document, indent=2))
    else:
        _write(_cohomology_text(rs, result))

    return EXIT_OK


def _run_report(parser, args, resources, as_json: bool) -> int:
    """Handle the report subcommand."""

    try:
        roots = (args.beta, args.alpha0, args.alpha1)
        if args.case is not None and all(r is None for r in roots):
            datum = find_datum(load_catalog(resources), args.case, args.group, args.a1)
        elif any(r is None for r in roots):
            raise GroupSpecError("Give --beta, --alpha0 and --alpha1, or --case")
        else:
            rs = build_root_system(parse_group(args.group))
            beta = parse_root(rs, args.beta)
            if beta is None:
                raise GroupSpecError("beta cannot be imaginary")
            datum = HorosphericalDatum(
                rs=rs,
                beta=beta,
                alpha0=parse_root(rs, args.alpha0),
                alpha1=parse_root(rs, args.alpha1),
                a1=args.a1,
                case_label=None if args.case is None else normalise_label(args.case),
            )
    except (ValueError, TypeError, IndexError, LookupError) as excep:
        parser.error(str(excep))

    try:
        report = rigidity_report(datum)
    except CrossCheckError as excep:
        LOGGER.error(excep.message)
        return EXIT_CROSSCHECK

    _write(report.to_json() if as_json else report.to_text())
    return EXIT_OK


def _run_catalog(parser, args, resources, as_json: bool) -> int:
    """Handle the catalog subcommand."""

    try:
        records = select_records(load_catalog(resources), args.only)
    except LookupError as excep:
        parser.error(str(excep))

    reports = []
    if args.check in ("all", "proposition"):
        reports.append(
            reproduce_proposition(
                records,
                max_rank=resources.catalog.max_rank,
                max_a1=resources.catalog.max_a1,
                progress=not args.quiet,
            )
        )
    if args.check in ("all", "table"):
        reports.append(
            reproduce_appendix_table(records, max_rank=resources.catalog.max_rank)
        )

    if as_json:
        document = {report.kind: report.to_dict() for report in reports}
        _write(simplejson.dumps(document, indent=2))
    else:
        _write(", ".join(report.summary() for report in reports))

    if any(report.crosscheck_failures for report in reports):
        return EXIT_CROSSCHECK
    if not all(report.ok for report in reports):
        return EXIT_DIFF
    # Errors logged outside the diff accounting, such as an H2 on a Fano datum
    if COUNTER_HANDLER.problems:
        return EXIT_CROSSCHECK
    return EXIT_OK


def _run_scan(parser, args, resources, as_json: bool) -> int:
    """Handle the scan subcommand."""

    shapes = None
    if args.shapes is not None:
        shapes = tuple(s.strip() for s in args.shapes.split(",") if s.strip())

    try:
        cfg = ScanConfig.from_resources(
            resources, max_rank=args.max_rank, max_a1=args.max_a1, shapes=shapes
        )
    except ValueError as excep:
        parser.error(str(excep))

    report = brute_scan(cfg, load_catalog(resources), progress=not args.quiet)

    if as_json:
        _write(simplejson.dumps(report.to_dict(), indent=2))
    else:
        _write(report.summary())

    if not report.ok or COUNTER_HANDLER.problems:
        return EXIT_CROSSCHECK
    return EXIT_OK
