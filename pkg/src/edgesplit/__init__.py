"""Edge colorings of multigraphs and their splitting into class I parts."""

from __future__ import annotations

from edgesplit.coloring import EdgeColoring, kempe_chain, kempe_swap, validate
from edgesplit.multigraph import Multigraph, build

__all__ = ["EdgeColoring", "Multigraph", "build", "kempe_chain", "kempe_swap", "validate"]
__version__ = "0.1.0"
