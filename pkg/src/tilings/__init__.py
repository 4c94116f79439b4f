"""Exact tiling algorithms: counting, sampling, certificates, and layouts."""

from .counting import (
    DominoSampler,
    arctic_statistic,
    aztec_count,
    aztec_sample,
    catalan_constant,
    count_domino_tilings,
    dof_per_square,
    kasteleyn_count,
    sample_tiling,
    square_dof_constant,
)
from .dominoes import (
    UNREACHABLE,
    Flip,
    HallViolator,
    apply_flip,
    flip_components,
    flip_distance,
    flip_moves,
    gomory_tiling,
    hall_certificate,
    is_domino_tileable,
    matching_tiling,
)
from .errors import GuardLimitExceeded, PrecisionError
from .exact_cover import (
    Multiplicity,
    SolveOptions,
    canonical_orbits,
    count_canonical,
    count_tilings,
    enumerate_placements,
    find_tiling,
    pentomino_catalog,
    solve_tilings,
    square_point_group,
)
from .lattice import (
    Cell,
    Coloring,
    Lattice,
    Placement,
    Region,
    Symmetry,
    TileShape,
    Tiling,
    block4_coloring,
    build_aztec,
    build_rectangle,
    build_triangle,
    chessboard_coloring,
    domino,
    is_valid_tiling,
    parse_region,
    rectangle_tile,
    remove_cells,
    render_region,
)
from .obstructions import (
    DEFAULT_TRIBONE,
    Obstruction,
    balance_obstruction,
    parity_obstruction,
    placement_color_profiles,
    tribone_tileable,
)
from .rectangles import (
    cube_root_family,
    debruijn_klarner,
    find_similar_guillotine_tiling,
    row_stack_roots,
    similar_rect_square_tileable,
    sum_representable,
    verify_row_stack_layout,
)
from .squared import (
    SquaredLayout,
    is_perfect,
    is_squared_square,
    layout_from_json,
    solve_layout,
    to_smith_network,
    total_resistance,
    validate_kirchhoff,
)

__version__ = "0.1.0"
