"""Exact classification of measures for the colored circle and line.

Directed color-labeled trees, oriented bisection structures, symbols and
measures, with brute-force checks for every identity relating them.
"""

from .bisection import (
    ObStructure,
    UnorientedBisection,
    enumerate_obs,
    enumerate_unoriented,
    forget_orientation,
    obs_from_tree,
    tree_from_obs,
    validate_obs,
)
from .colors import NEG_INF, POS_INF, ColorSet, Word
from .errors import (
    CapExceededError,
    ColoredCircleError,
    FormatError,
    InvalidStructureError,
    LabelError,
    StructureError,
    SymbolError,
    UnknownColorError,
)
from .line import (
    ExtendedStructure,
    PointedTree,
    enumerate_extended,
    eval_line_measure,
    extended_from_pointed,
    line_symbol,
    pointed_from_extended,
    validate_extended,
)
from .measures import (
    UniversalVector,
    WordClass,
    classify_word,
    eval_closed_form,
    eval_product,
    eval_recursive,
    tree_symbol,
    universal_measure,
    verify_measure_axioms,
)
from .symbols import SigmaSymbol, check_symbol_axioms, obs_from_symbol, symbol_from_obs
from .trees import (
    DirectedLabeledTree,
    canonical_form,
    enumerate_directed_trees,
    geodesic,
    parse_tree,
    points_toward,
)

__version__ = "0.1.0"
