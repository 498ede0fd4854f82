"""Power ideals of hyperplane arrangements: Tutte polynomials, inverse systems,
fat points and zonotopal Cox rings, with brute-force oracles for every formula."""

from .arrangement import (
    ArrangementFormatError,
    Flat,
    VectorConfiguration,
    boolean,
    braid,
    corpus,
    example_g,
    example_k_minus_3,
    format_arrangement,
    graphic,
    parse_arrangement,
    parse_family,
    read_arrangement,
    uniform_2_3,
)
from .coxring import (
    LineHyperplaneMatrix,
    MultigradedTable,
    cox_closed_form,
    cox_series,
    cox_table_direct,
    lemma_generating_check,
    line_hyperplane_matrix,
)
from .exactmath import RREF, Series, SeriesBudgetError, rank, rref, series_vars
from .fatpoints import (
    FiltrationSeries,
    fatpoint_ideal_series,
    fatpoint_quotient_closed,
    fatpoint_quotient_corrected,
    fatpoint_quotient_series,
)
from .oracle import (
    annihilation_check,
    apolarity_pair,
    custom_ideal_dims,
    directional_degree_poly,
    flats_ideal_dims,
    lines_ideal_dims,
    spanning_set_dims,
)
from .tutte import (
    TuttePolynomial,
    activities,
    all_activities,
    internal_bases,
    interval_decompose,
    multivariate_tutte_eval,
    tutte,
    tutte_by_activities,
    tutte_deletion_contraction,
    tutte_subset_sum,
)
from .zonotopal import GradedDims, LMonomial, basis_monomials, hilbert_generic, hilbert_series

__version__ = "0.1.0"
