"""Exact search, closed-form bounds, counting checks and Monte-Carlo
experiments for 2-colorings avoiding monochromatic progressions."""

from ._core import *  # noqa: F401,F403
from ._core import (
    BudgetError,
    NotApplicable,
    PreconditionError,
    SearchIncomplete,
    run_cli,
)


def main(argv=None):
    """Console entry point mirroring the `ramsey` binary."""
    import sys

    code, out, err = run_cli(list(sys.argv[1:] if argv is None else argv))
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
