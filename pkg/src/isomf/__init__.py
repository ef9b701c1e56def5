"""Exact arithmetic for multiplicative functions written as isobaric polynomial sequences."""

from .catalog import catalog, catalog_mf, family, fibonacci_mf
from .companion import CoreParams, companion_matrix, hook, hook_row, matrix_power, schur_general
from .isobaric import IsobaricPoly, WeightVector, format_isobaric, gfp_poly, glp_poly, wip_poly
from .localmf import (
    LocalMF,
    classify_type,
    convolve,
    degree,
    from_params,
    from_values,
    global_eval,
    inverse,
    recover_params,
)
from .norm import km_norm
from .periodicity import detect_integral_period, period_mod
from .report import CheckReport
from .ring import ModInt, PolyP, format_scalar, parse_scalar
from .roots import conv_power

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "CoreParams",
    "IsobaricPoly",
    "LocalMF",
    "ModInt",
    "PolyP",
    "WeightVector",
    "catalog",
    "catalog_mf",
    "classify_type",
    "companion_matrix",
    "conv_power",
    "convolve",
    "degree",
    "detect_integral_period",
    "family",
    "fibonacci_mf",
    "format_isobaric",
    "format_scalar",
    "from_params",
    "from_values",
    "gfp_poly",
    "glp_poly",
    "global_eval",
    "hook",
    "hook_row",
    "inverse",
    "km_norm",
    "matrix_power",
    "parse_scalar",
    "period_mod",
    "recover_params",
    "schur_general",
    "wip_poly",
]
