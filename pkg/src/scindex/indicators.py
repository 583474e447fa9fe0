"""Citation-portfolio indicators, each returned as a dimensioned quantity.

Every indicator is defined on the multiset of per-paper citation counts:
:class:`CitationVector` normalizes to non-increasing order, so all
functions here are permutation-invariant by construction.  Count sums
use exact Python integers; only final magnitudes (and genuine ratios)
are doubles.

The indicator ladder runs P (papers, [P]), C (total citations, [P^2]),
and the second-order family X, E, S ([P^3]); the evenness ratio eta is
dimensionless, the h-type indices h, g, z carry [P], and the Euclidean
length of the citation list carries [P^3/2].
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Union

from .dimension import (
    DIMENSIONLESS,
    PAPERS,
    PAPERS_CUBED,
    PAPERS_SQUARED,
    Dimension,
    Quantity,
)
from .errors import EmptyPortfolioError, NegativeCountError, UnknownIndicatorError

__all__ = [
    "CitationVector",
    "Counts",
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
]

EUCLIDEAN_DIM = Dimension(Fraction(3, 2))


class CitationVector:
    """Non-negative per-paper citation counts, held sorted non-increasing.

    Two vectors that are permutations of each other compare equal.  An
    empty vector may be constructed (it represents an empty portfolio)
    but every indicator rejects it.
    """

    __slots__ = ("_counts",)

    def __init__(self, counts: Iterable[int]) -> None:
        values = []
        for c in counts:
            if not isinstance(c, numbers.Integral):
                raise TypeError(f"citation counts must be integers, got {c!r}")
            c = int(c)
            if c < 0:
                raise NegativeCountError(f"negative citation count {c}")
            values.append(c)
        self._counts = tuple(sorted(values, reverse=True))

    @property
    def counts(self) -> tuple[int, ...]:
        return self._counts

    def __len__(self) -> int:
        return len(self._counts)

    def __iter__(self):
        return iter(self._counts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CitationVector):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(self._counts)

    def __repr__(self) -> str:
        return f"CitationVector({list(self._counts)!r})"


Counts = Union[CitationVector, Iterable[int]]


def as_citation_vector(v: Counts) -> CitationVector:
    return v if isinstance(v, CitationVector) else CitationVector(v)


def _nonempty(v: Counts) -> CitationVector:
    vec = as_citation_vector(v)
    if len(vec) == 0:
        raise EmptyPortfolioError("portfolio has no papers")
    return vec


def paper_count(v: Counts) -> Quantity:
    """P: number of papers in the portfolio, dimension [P]."""
    return Quantity(float(len(_nonempty(v))), PAPERS)


def total_citations(v: Counts) -> Quantity:
    """C: sum of citation counts, dimension [P^2]."""
    return Quantity(float(sum(_nonempty(v).counts)), PAPERS_SQUARED)


def mean_impact(v: Counts) -> Quantity:
    """i = C/P: mean citations per paper, dimension [P]."""
    vec = _nonempty(v)
    return Quantity(sum(vec.counts) / len(vec), PAPERS)


def h_index(v: Counts) -> Quantity:
    """h: largest rank whose paper still has at least that many citations."""
    vec = _nonempty(v)
    h = 0
    for rank, c in enumerate(vec.counts, start=1):
        if c < rank:
            break
        h = rank
    return Quantity(float(h), PAPERS)


def g_index(v: Counts) -> Quantity:
    """g: largest rank whose top papers jointly have >= rank^2 citations.

    Capped at P: no fictitious zero-cited papers are appended.
    """
    vec = _nonempty(v)
    g = 0
    running = 0
    for rank, c in enumerate(vec.counts, start=1):
        running += c
        if running >= rank * rank:
            g = rank
    return Quantity(float(g), PAPERS)


def energy(v: Counts) -> Quantity:
    """E: sum of squared citation counts, dimension [P^3]."""
    total = sum(c * c for c in _nonempty(v).counts)
    return Quantity(float(total), PAPERS_CUBED)


def exergy(v: Counts) -> Quantity:
    """X = i^2*P = C^2/P, dimension [P^3]."""
    vec = _nonempty(v)
    total = sum(vec.counts)
    return Quantity((total * total) / len(vec), PAPERS_CUBED)


def entropy_term(v: Counts) -> Quantity:
    """S: squared dispersion of counts about the mean, dimension [P^3].

    Computed as sum((c_k - i)^2), which is non-negative by construction
    and exactly zero on uniform vectors; it equals E - X up to rounding.
    """
    vec = _nonempty(v)
    mean = sum(vec.counts) / len(vec)
    return Quantity(math.fsum((c - mean) ** 2 for c in vec.counts), PAPERS_CUBED)


def consistency(v: Counts) -> Quantity:
    """eta = X/E in (0, 1]: evenness of the citation distribution.

    An all-zero vector has X = E = 0; eta is defined as 1 for it (a
    zero vector is perfectly even, and S = 0 agrees).
    """
    vec = _nonempty(v)
    e = sum(c * c for c in vec.counts)
    if e == 0:
        return Quantity(1.0, DIMENSIONLESS)
    total = sum(vec.counts)
    x = (total * total) / len(vec)
    return Quantity(x / e, DIMENSIONLESS)


def z_index(v: Counts) -> Quantity:
    """z = (eta * i^2 * P)^(1/3), an h-type index of dimension [P]."""
    vec = _nonempty(v)
    eta = consistency(vec).magnitude
    p = len(vec)
    mean = sum(vec.counts) / p
    return Quantity((eta * mean * mean * p) ** (1.0 / 3.0), PAPERS)


def euclidean_index(v: Counts) -> Quantity:
    """Euclidean length of the citation list, sqrt(E), dimension [P^3/2]."""
    vec = _nonempty(v)
    return Quantity(math.sqrt(sum(c * c for c in vec.counts)), EUCLIDEAN_DIM)


@dataclass(frozen=True)
class IndicatorDescriptor:
    """A registered indicator: name, declared dimension, computation.

    ``fit_tolerance`` is the slope gate used by the scaling probe; the
    indices with exact replication scaling sit at 1e-6, g (whose rank
    thresholds interact with replication) at 0.05.
    """

    name: str
    declared_dim: Dimension
    compute: Callable[[Counts], Quantity] = field(compare=False)
    fit_tolerance: float = 1e-6


IndicatorReport = Dict[str, Quantity]

REGISTRY: tuple[IndicatorDescriptor, ...] = (
    IndicatorDescriptor("P", PAPERS, paper_count),
    IndicatorDescriptor("C", PAPERS_SQUARED, total_citations),
    IndicatorDescriptor("i", PAPERS, mean_impact),
    IndicatorDescriptor("h", PAPERS, h_index),
    IndicatorDescriptor("g", PAPERS, g_index, fit_tolerance=0.05),
    IndicatorDescriptor("X", PAPERS_CUBED, exergy),
    IndicatorDescriptor("E", PAPERS_CUBED, energy),
    IndicatorDescriptor("S", PAPERS_CUBED, entropy_term),
    IndicatorDescriptor("eta", DIMENSIONLESS, consistency),
    IndicatorDescriptor("z", PAPERS, z_index),
    IndicatorDescriptor("i_E", EUCLIDEAN_DIM, euclidean_index),
)

_BY_NAME = {d.name: d for d in REGISTRY}


def registry_names() -> tuple[str, ...]:
    return tuple(d.name for d in REGISTRY)


def registry_symbols() -> dict[str, Dimension]:
    """Name -> declared dimension table, for dimension expressions."""
    return {d.name: d.declared_dim for d in REGISTRY}


def descriptor(name: str) -> IndicatorDescriptor:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise UnknownIndicatorError(name) from None


def compute_all(v: Counts) -> IndicatorReport:
    """Every registered indicator for one portfolio, in registry order."""
    vec = _nonempty(v)
    return {d.name: d.compute(vec) for d in REGISTRY}
