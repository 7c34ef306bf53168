"""Triangular lights-out: engine, solver, and explorer.

Buttons on a size-n triangular board toggle themselves and their
touching neighbors; everything reduces to linear algebra over GF(2).
This package computes solutions, kernels ("null sequences"), the kernel
dimension table, covering parities, and grows kernel elements onto
larger boards, with a CLI and a JSON HTTP service on top.
"""

from .board import (
    MAX_SIZE,
    SYMMETRIES,
    BoardGeometry,
    Symmetry,
    button_count,
    button_index,
    button_rowcol,
    from_tricoord,
    game_matrix,
    geometry,
    neighbor_indices,
    to_tricoord,
)
from .engine import (
    Configuration,
    PressSet,
    SolveReport,
    apply_symmetry,
    brute_force_solutions,
    dimension_table,
    enumerate_kernel,
    is_solvable,
    kernel_basis,
    kernel_dimension,
    press,
    random_solvable,
    solve_config,
)
from .errors import (
    CoordinateError,
    FormatError,
    KernelPreconditionError,
    OracleRangeError,
    ShapeError,
    SizeError,
    TrilightsError,
    VerificationError,
)
from .gf2 import (
    BitMatrix,
    BitVector,
    EliminationResult,
    active_backend,
    det_parity,
    mat_vec,
    null_space,
    row_reduce,
    solve,
)
from .matchings import (
    Covering,
    count_coverings,
    coverings_parity,
    enumerate_coverings,
    parse_covering,
    validate_covering,
)
from .propagation import (
    Block,
    BlockLayout,
    block_layout,
    layout_dump,
    propagate,
    verify_kernel_membership,
)
from .render import to_svg, to_text

__version__ = "1.0.0"

__all__ = [
    "MAX_SIZE",
    "SYMMETRIES",
    "BoardGeometry",
    "Symmetry",
    "button_count",
    "button_index",
    "button_rowcol",
    "from_tricoord",
    "game_matrix",
    "geometry",
    "neighbor_indices",
    "to_tricoord",
    "Configuration",
    "PressSet",
    "SolveReport",
    "apply_symmetry",
    "brute_force_solutions",
    "dimension_table",
    "enumerate_kernel",
    "is_solvable",
    "kernel_basis",
    "kernel_dimension",
    "press",
    "random_solvable",
    "solve_config",
    "TrilightsError",
    "SizeError",
    "CoordinateError",
    "ShapeError",
    "FormatError",
    "OracleRangeError",
    "KernelPreconditionError",
    "VerificationError",
    "BitMatrix",
    "BitVector",
    "EliminationResult",
    "active_backend",
    "det_parity",
    "mat_vec",
    "null_space",
    "row_reduce",
    "solve",
    "Covering",
    "count_coverings",
    "coverings_parity",
    "enumerate_coverings",
    "parse_covering",
    "validate_covering",
    "Block",
    "BlockLayout",
    "block_layout",
    "layout_dump",
    "propagate",
    "verify_kernel_membership",
    "to_svg",
    "to_text",
    "__version__",
]
