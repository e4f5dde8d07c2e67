"""Schur expansions of symmetric functions given in the fundamental quasi-symmetric basis."""

from .combinat import (
    ZERO,
    Composition,
    DomainError,
    Partition,
    SignedPartition,
    ValidationError,
    compositions,
    make_composition,
    negate,
    partitions,
    raise_chain,
    raise_part,
    straighten,
    straighten_by_raises,
)
from .expansions import (
    ConversionReport,
    FExpansion,
    F_poly,
    F_to_schur,
    SchurExpansion,
    SparsePolynomial,
    expansion_poly,
    h_poly,
    is_symmetric_poly,
    jacobi_trudi_poly,
    schur_expansion_to_F,
    schur_poly,
    schur_to_F,
    verified_convert,
)
from .parser import Expression, ParseError, parse_expression
from .tableaux import (
    StandardTableau,
    Tableau,
    cancellation_pairing,
    descent_composition,
    descent_data,
    enumerate_syt,
    is_superstandard,
    runs,
    superstandard,
    superstandard_prefix_length,
    theta,
    theta_trace,
    theta_two_run,
    two_run_index,
)

__version__ = "0.1.0"
