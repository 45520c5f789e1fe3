"""Lexicographically-ordered constrained codes that keep square-isolation
patterns off a three-track TDMR grid."""

from .capacity import capacities, dominant_eigenvalue, build_constraint_adjacency
from .codec import codeword_of, decode_codeword, encode_message, index_of
from .enumeration import (
    CodeParams,
    cardinality,
    clocked_cardinality,
    code_params,
    inner_sum,
    k_eff,
    message_length,
    normalized_rate,
    rate,
)
from .errors import ConstraintViolation, ConvergenceError, FramingError, IndexRangeError, TDLocoError
from .grid import Frame, Grid, read_grid, read_group, scan_sis, write_grid, write_group
from .stream import assemble, bridge_symbol, disassemble
from .symbols import Gf4, Gf8, column_of, contains_forbidden, demap, level_of, remap, symbol_of

__version__ = "0.1.0"
