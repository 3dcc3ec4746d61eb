"""Squarefree monomial ideals: facet and Stanley-Reisner complexes, quasi
f-ideal types, Hilbert series and Newton complementary duals."""

__version__ = "0.1.0"

from .complexes import (
    FVector,
    SimplicialComplex,
    f_vector,
    facet_complex,
    height,
    is_pure,
    minimal_vertex_covers,
    stanley_reisner_complex,
)
from .core import MonomialIdeal, minimalize, parse_ideal, render, support
from .dual import check_duality_theorem, dual_f_vectors, newton_dual
from .hilbert import (
    HilbertSeries,
    expand_series,
    hilbert_function,
    hilbert_oracle,
    hilbert_series,
)
from .quasi import (
    QuasiType,
    box_down,
    box_up,
    characterize,
    is_f_ideal,
    nonface_counts,
    perfection,
    quasi_type,
)
from .search import SearchSpec, canonical_form, enumerate_quasi, random_ideal
