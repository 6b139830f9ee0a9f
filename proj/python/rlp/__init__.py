"""Reflectionless potentials reconstructed from bound-state spectra."""

from ._core import (
    RlpError,
    Spectrum,
    alternant_product,
    bound_states,
    log_tau,
    merged_amplitudes,
    potential,
    preset,
    preset_spectrum,
    term_count,
    verify,
    wavefunctions,
)

__all__ = [
    "RlpError",
    "Spectrum",
    "alternant_product",
    "bound_states",
    "log_tau",
    "merged_amplitudes",
    "potential",
    "preset",
    "preset_spectrum",
    "term_count",
    "verify",
    "wavefunctions",
]
