import argparse

from simplicial_verify.settings import settings

CHECKS = ("cm", "partition", "shell", "balanced", "homology")


def _add_search_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--budget",
        type=float,
        default=settings.budget_seconds,
        metavar="SECONDS",
        help="wall-clock budget for exhaustive searches; overrun exits with 3",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=settings.threads,
        help="worker processes (default from SIMPLICIAL_VERIFY_THREADS)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplicial-verify",
        description=(
            "Decide Cohen-Macaulayness, partitionability and shellability of "
            "simplicial and relative simplicial complexes, with checkable certificates."
        ),
        epilog="Exit codes: 0 holds, 1 refuted, 2 error, 3 search budget exceeded.",
    )
    parser.add_argument("--log-level", default=settings.log_level, help="structlog level on stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    info = commands.add_parser("info", help="print dimension, purity, counts, f- and h-vector")
    info.add_argument("complex", help="complex file or corpus:<name>")

    check = commands.add_parser("check", help="decide one property and write its certificate")
    check.add_argument("which", choices=CHECKS)
    check.add_argument("complex", help="complex file or corpus:<name>")
    check.add_argument(
        "--order",
        help=(
            "shell: comma-separated facet order to verify instead of searching (@file reads it); "
            "exit 1 then means only that this order was rejected"
        ),
    )
    check.add_argument("--out", help="certificate path (default under SIMPLICIAL_VERIFY_OUTPUT_PATH)")
    check.add_argument("--table", action="store_true", help="cm: print the per-face link table")
    _add_search_options(check)

    verify = commands.add_parser("verify", help="re-check a certificate written by `check`")
    verify.add_argument("certificate")
    verify.add_argument("complex", help="complex file or corpus:<name>")
    _add_search_options(verify)

    glue = commands.add_parser("glue", help="glue N copies of X along A")
    glue.add_argument("x", help="complex X")
    glue.add_argument("a", help="subcomplex A of X, in X's vertex names")
    glue.add_argument("copies", type=int)
    glue.add_argument("-o", "--out", help="output path (default under SIMPLICIAL_VERIFY_OUTPUT_PATH)")

    reproduce = commands.add_parser("reproduce", help="run the corpus acceptance checks")
    reproduce.add_argument("--skip-slow", action="store_true", help="skip the long exhaustive searches")
    reproduce.add_argument("--only", help="comma-separated entry names (empty string runs nothing)")
    _add_search_options(reproduce)

    export = commands.add_parser("export", help="write a corpus entry as a complex document")
    export.add_argument("name", help="corpus:<name> or a bare entry name")
    export.add_argument("-o", "--out", help="output path (stdout when omitted)")

    return parser
