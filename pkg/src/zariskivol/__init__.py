"""Exact arithmetic for divisor classes on surface intersection lattices.

Zariski decompositions, slope invariants of negative parts, exceptional
chain data, and audited volume lower bounds, all over rationals with no
floating point anywhere.
"""

from .chains import (
    ChainEqualityCase,
    ChainSpec,
    chain_exceptional,
    chain_spec,
    classify_chain_equality,
    foliation_e,
    foliation_negative_part,
    hj_determinant,
)
from .config import (
    LogPairSection,
    Workspace,
    dump_workspace,
    load_workspace,
    parse_workspace,
    workspace_to_data,
)
from .errors import ZariskivolError
from .invariants import (
    EInvariantResult,
    ESlackReport,
    ExceptionalSolution,
    SquareInequality,
    e_of_divisor_pair,
    e_sup,
    e_zero,
    exceptional_solution,
    verify_e_inequality,
    weighted_square_inequality,
)
from .lattice import (
    DivisorClass,
    IntersectionLattice,
    arithmetic_genus,
    as_rational,
    build_lattice,
    divisor,
    pair,
    parse_rational,
)
from .noether import (
    BoundReport,
    CatalogEntry,
    CliffordReport,
    LogPairResult,
    Scenario,
    SurfaceBounds,
    catalog_degree_dminus1,
    clifford_check,
    foliation_bounds,
    log_pair_bounds,
    log_pair_iterate,
    pencil_audit,
    pencil_bound,
    ps_index_bound,
    surface_audit,
    surface_bounds,
    validate_scenario,
)
from .zariski import (
    IdentityReport,
    StarLift,
    ZariskiDecomposition,
    decomposition_identities,
    is_big,
    is_nef_on,
    star_lift,
    volume,
    zariski_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CatalogEntry",
    "ChainEqualityCase",
    "ChainSpec",
    "CliffordReport",
    "DivisorClass",
    "EInvariantResult",
    "ESlackReport",
    "ExceptionalSolution",
    "IdentityReport",
    "IntersectionLattice",
    "LogPairResult",
    "LogPairSection",
    "Scenario",
    "SquareInequality",
    "StarLift",
    "SurfaceBounds",
    "Workspace",
    "ZariskiDecomposition",
    "ZariskivolError",
    "arithmetic_genus",
    "as_rational",
    "build_lattice",
    "catalog_degree_dminus1",
    "chain_exceptional",
    "chain_spec",
    "classify_chain_equality",
    "clifford_check",
    "decomposition_identities",
    "divisor",
    "dump_workspace",
    "e_of_divisor_pair",
    "e_sup",
    "e_zero",
    "exceptional_solution",
    "foliation_bounds",
    "foliation_e",
    "foliation_negative_part",
    "hj_determinant",
    "is_big",
    "is_nef_on",
    "load_workspace",
    "log_pair_bounds",
    "log_pair_iterate",
    "pair",
    "parse_rational",
    "parse_workspace",
    "pencil_audit",
    "pencil_bound",
    "ps_index_bound",
    "star_lift",
    "surface_audit",
    "surface_bounds",
    "validate_scenario",
    "verify_e_inequality",
    "volume",
    "weighted_square_inequality",
    "workspace_to_data",
    "zariski_decompose",
    "__version__",
]
