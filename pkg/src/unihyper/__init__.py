"""Unified hypergeometric class equations: parameters, operator algebra,
series, contour integrals and hypergeometric polynomials."""

from __future__ import annotations

from .core import (
    NORMAL_FORM_TAGS,
    EquationParams,
    NormalFormReport,
    WeightForm,
    classify_riemann,
    gauss2f1_params,
    hermite_params,
    kummer1f1_params,
    ladder_params,
    params_from_sty,
    params_to_sty,
    twof0_params,
    weight_form,
    zerof1_params,
)
from .errors import *  # noqa: F401,F403
from .polyc import PolyC
from .ratfun import RatFun
from . import gammafn, opalg, poly, quad, serialize, series  # noqa: E402
from .series import eval_classical, f20_general, olver_F, unified_F
from .poly import FamilySpec, classical_poly, closed_form_poly, orthogonality_check

__version__ = "0.1.0"
