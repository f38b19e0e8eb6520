"""Abelian complexity of the ordinary paperfolding word."""

from paperfold.word_core import (
    PaperfoldingPrefix,
    letter_at,
    prefix,
    reverse_complement,
    toeplitz_prefix,
)
from paperfold.abelian_oracle import (
    CertificationError,
    ComplexityRecord,
    DeltaSpectrum,
    delta,
    distinct_factor_count,
    rho_oracle,
    window_deltas,
)
from paperfold.regular_eval import (
    LinearRepresentation,
    build_linear_representation,
    kernel_sequence,
    reduce_step,
    rho_linrep,
    rho_rec,
)
from paperfold.growth import a_of_i, b_closed_form, bound_check

__version__ = "0.1.0"

__all__ = [
    "CertificationError",
    "ComplexityRecord",
    "DeltaSpectrum",
    "LinearRepresentation",
    "PaperfoldingPrefix",
    "a_of_i",
    "b_closed_form",
    "bound_check",
    "build_linear_representation",
    "delta",
    "distinct_factor_count",
    "kernel_sequence",
    "letter_at",
    "prefix",
    "reduce_step",
    "reverse_complement",
    "rho_linrep",
    "rho_oracle",
    "rho_rec",
    "toeplitz_prefix",
    "window_deltas",
]
