"""Online rainbow coloring with LRUC and an exact offline oracle."""

from .errors import *  # noqa: F401,F403
from .generators import (
    EdgeStream,
    Family,
    make_graph,
    make_random_connected,
    make_random_tree,
    make_stream,
    order_adversarial,
    order_random_connected,
    stream_from_file,
)
from .graph import Edge, Graph
from .harness import RatioReport, run_instance, sweep, verify_theorem
from .lruc import CaseTag, Coloring, LrucState, color_stream, new_colorer
from .oracle import (
    RcResult,
    SearchBudget,
    find_coloring,
    is_rainbow_connected,
    rainbow_witness,
    rc_closed_form,
    rc_exact,
    rc_naive,
)

__version__ = "0.1.0"
