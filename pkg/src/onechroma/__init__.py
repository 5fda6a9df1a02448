"""Edge coloring of triangle-free 1-planar graphs: drawings, exact chromatic
index, discharging ledgers, lemma checks and a seeded instance generator."""

from .coloring import (
    ClassVerdict,
    ColorClass,
    CriticalityReport,
    CriticalVerdict,
    EdgeColoring,
    exact_chromatic_index,
    is_critical,
    verify_coloring,
    vizing_color,
)
from .discharge import ChargeLedger, apply_rules, euler_charge_total, initial_charges, negative_elements
from .drawing import (
    CrossingPair,
    CrossRef,
    InvalidDrawingError,
    OnePlanarDrawing,
    PlanarizedGraph,
    ValidationReport,
    f3_count,
    face_degrees,
    fk_count,
    nc_count,
    planarize,
    validate_drawing,
)
from .formats import ParseError, format_coloring, format_edgelist, format_opg, load, parse_edgelist, parse_opg
from .generator import GenerationError, GenSpec, Instance, Mode, add_crossing_pairs, gen_quadrangulation, gen_theorem1_instance
from .graph import Graph, check_size_bounds, is_bipartite, is_triangle_free
from .lemmas import (
    LemmaReport,
    LemmaViolation,
    Verdict,
    check_critical_size,
    check_lemma1,
    check_lemma2,
    check_theorem1,
    check_vizing_adjacency,
    f3_upper_bound,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
