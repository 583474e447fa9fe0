"""Dimensioned citation indices.

A bibliometric indicator engine that computes h-type and Euclidean
citation indices as quantities over the publication unit [P], enforces
dimensional homogeneity whenever indices are combined or compared, and
empirically verifies each index's scaling exponent under portfolio
replication.
"""

from .dimension import (
    DIMENSIONLESS,
    PAPERS,
    PAPERS_CUBED,
    PAPERS_SQUARED,
    Dimension,
    Quantity,
    dim_div,
    dim_mul,
    dim_pow,
    qty_add,
    qty_compare,
)
from .errors import (
    DegenerateSeriesError,
    DomainError,
    EmptyPortfolioError,
    FormatError,
    HeterogeneityError,
    NegativeCountError,
    NonPositivePointError,
    ParseError,
    ScindexError,
    UnknownIndicatorError,
    UnknownSymbolError,
    ZeroVarianceError,
)
from .expressions import (
    DimExpr,
    Power,
    Product,
    Quotient,
    Sum,
    Symbol,
    dimension_of,
    eval_dim_expr,
    format_dim_expr,
    parse_dim_expr,
)
from .indicators import (
    EUCLIDEAN_DIM,
    REGISTRY,
    CitationVector,
    IndicatorDescriptor,
    IndicatorReport,
    compute_all,
    consistency,
    descriptor,
    energy,
    entropy_term,
    euclidean_index,
    exergy,
    g_index,
    h_index,
    mean_impact,
    paper_count,
    registry_names,
    registry_symbols,
    total_citations,
    z_index,
)
from .scaling import (
    DEFAULT_LAMBDAS,
    ExponentEstimate,
    ProbeResult,
    ScaleSeries,
    fit_loglog,
    loglog_fit,
    probe_registry,
    replicate_scale,
    verify_dimension,
)
from .analytics import (
    AnalyticsTable,
    PortfolioSummary,
    pearson_matrix,
    rank_by,
    reconstruct_from_summary,
)
from .svgplot import PlotSeries, emit_loglog_svg
from .tabular import emit_matrix, emit_records, emit_table, parse_input

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # dimension algebra
    "Dimension",
    "Quantity",
    "DIMENSIONLESS",
    "PAPERS",
    "PAPERS_SQUARED",
    "PAPERS_CUBED",
    "EUCLIDEAN_DIM",
    "dim_mul",
    "dim_div",
    "dim_pow",
    "qty_add",
    "qty_compare",
    # expressions
    "DimExpr",
    "Symbol",
    "Sum",
    "Product",
    "Quotient",
    "Power",
    "parse_dim_expr",
    "format_dim_expr",
    "eval_dim_expr",
    "dimension_of",
    # indicators
    "CitationVector",
    "IndicatorDescriptor",
    "IndicatorReport",
    "REGISTRY",
    "registry_names",
    "registry_symbols",
    "descriptor",
    "paper_count",
    "total_citations",
    "mean_impact",
    "h_index",
    "g_index",
    "energy",
    "exergy",
    "entropy_term",
    "consistency",
    "z_index",
    "euclidean_index",
    "compute_all",
    # scaling probe
    "ScaleSeries",
    "ExponentEstimate",
    "ProbeResult",
    "DEFAULT_LAMBDAS",
    "replicate_scale",
    "fit_loglog",
    "loglog_fit",
    "verify_dimension",
    "probe_registry",
    # analytics
    "PortfolioSummary",
    "AnalyticsTable",
    "reconstruct_from_summary",
    "pearson_matrix",
    "rank_by",
    # io
    "parse_input",
    "emit_records",
    "emit_table",
    "emit_matrix",
    "PlotSeries",
    "emit_loglog_svg",
    # errors
    "ScindexError",
    "DomainError",
    "HeterogeneityError",
    "ParseError",
    "UnknownSymbolError",
    "EmptyPortfolioError",
    "NegativeCountError",
    "DegenerateSeriesError",
    "ZeroVarianceError",
    "UnknownIndicatorError",
    "FormatError",
    "NonPositivePointError",
]
