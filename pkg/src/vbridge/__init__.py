"""Bridge-number bounds for virtual and welded knots given as Gauss diagrams."""

from .errors import VBridgeError
from .fox import LaurentMatrix, alexander_matrix, fox_derivative
from .gauss import (
    GaussDiagram,
    bridge_count,
    canonical_key,
    connected_sum,
    delete_chords,
    flip_sign,
    mirror,
    parse_gauss_code,
    random_diagram,
    to_code,
)
from .ideals import IdealGens, elementary_ideal, ideal_equal, is_member, is_trivial, rank_lower_bound
from .laurent import LaurentPoly, parse_laurent
from .parity import gaussian_parity, project, project_star
from .present import (
    GroupPresentation,
    eliminate_conjugation_generators,
    knot_group,
    reduced_group,
    set_v_to_one,
    upper_lower,
)
from .report import InvariantReport, compute_report, revalidate
from .rmoves import MoveInstance, apply_move, enumerate_moves
from .search import SearchBudget, SearchResult, explore

__all__ = [name for name in dir() if not name.startswith("_")]
