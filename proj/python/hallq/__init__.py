"""Exact Hall algebras of free quiver representations over F_q[t]/(t^n)."""

try:
    from ._hallq import (  # installed package layout
        Context,
        FreeRep,
        cli,
        flag_quantities,
        grassmann_count,
        interpolate_word,
        run_acceptance,
    )
except ImportError:  # build-tree layout: extension directory on sys.path
    from _hallq import (
        Context,
        FreeRep,
        cli,
        flag_quantities,
        grassmann_count,
        interpolate_word,
        run_acceptance,
    )

__all__ = [
    "Context",
    "FreeRep",
    "cli",
    "flag_quantities",
    "grassmann_count",
    "interpolate_word",
    "run_acceptance",
]
