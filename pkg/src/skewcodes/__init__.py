"""Exact-arithmetic workbench for skew-polynomial codes and their relatives."""

from . import (aad, bench, gf, grscode, ilbounds, ildec, lrs, metric, netgap,
               qlrs, skew, support)

__version__ = "0.1.0"

__all__ = ["aad", "bench", "gf", "grscode", "ilbounds", "ildec", "lrs",
           "metric", "netgap", "qlrs", "skew", "support"]
