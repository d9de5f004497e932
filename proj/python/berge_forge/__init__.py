"""Exact small extremal numbers for cycles, paths and Berge cycles."""

from ._core import *  # noqa: F401,F403
from ._core import (
    BipartiteGraph,
    Graph,
    TripleSystem,
    decompose,
    evaluate,
    find_berge_cycle,
    is_free,
    solve,
)

__version__ = "0.1.0"
