"""Exact tools for colouring graphs of bounded circumference with small
monochromatic components."""

from .bounds import h, lower_bound, theorem1_bound
from .colouring import (
    Options,
    PrecolouredClique,
    TraceNode,
    colour_bounded_circumference,
    fragment_colour,
)
from .connectivity import Separation, articulation_points, find_separation, is_three_connected
from .cycles import circumference, has_cycle_at_least, longest_cycle, longest_path_order
from .errors import GraphFormatError, InfeasibleError, PreconditionError
from .graph import Graph, from_edge_list, to_edge_list
from .kernels import BACKEND
from .verify import VerifyReport, monochromatic_components, verify_fragmentation

__version__ = "0.1.0"
