"""Two-proposal stable matching with one-sided ties, plus a per-run checker
of the 13/9 approximation analysis."""

from fractions import Fraction

from ._tiematch import (
    Instance,
    Schedule,
    TiematchError,
    blocking_pairs,
    fuzz,
    opt_oracle,
    run,
    tight_instance,
    tight_oracle_bound,
    tight_schedule,
    verify,
)

__all__ = [
    "Instance",
    "Schedule",
    "TiematchError",
    "blocking_pairs",
    "fuzz",
    "opt_oracle",
    "ratio",
    "run",
    "tight_instance",
    "tight_oracle_bound",
    "tight_schedule",
    "verify",
]


def ratio(report):
    """|OPT| / |M| of a verify() report as a Fraction."""
    num, den = report["ratio"]
    return Fraction(num, den)
