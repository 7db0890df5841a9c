"""Exact intersection theory, line-bundle cohomology and Ulrich numerics on rational surfaces."""

from .cohomology import CohomTriple, cohomology, h0_line, h0_oracle
from .errors import (
    ConsistencyError,
    DimensionMismatchError,
    ParityError,
    ParseError,
    PreconditionError,
    SurfaceRangeError,
    UlrichCalcError,
    UnboundedSearchError,
    UnsupportedSurfaceError,
)
from .reports import (
    brill_noether_rho,
    chow_shape,
    dimension_ledger,
    invariant_report,
    lemma_cycles_report,
    lemma_pencil_numbers,
    small_surface_exceptions,
)
from .surface import (
    ChernData,
    DivClass,
    SurfaceModel,
    canonical,
    chern_twist,
    chi_line,
    chi_rank2,
    genus_adj,
    intersect,
    make_surface,
    ulrich_c1_condition,
)
from .ulrich import (
    UlrichVerdict,
    cohomology_table,
    enumerate_ulrich_lines,
    hirzebruch_2n_identity,
    is_ulrich_line,
    lm_numerics,
)
