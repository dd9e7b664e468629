"""Contour quadrature, integral transforms and named representations."""

from __future__ import annotations

from .contour import (
    Circle,
    ContourSpec,
    HalfLineDE,
    HankelLoop,
    QuadResult,
    Segment,
    TrackedIntegrand,
    default_loop,
    integrate,
    integrate_tracked,
)
from .representations import REPRESENTATIONS, named_representation, psi_loop_radius
from .transforms import (
    boundary_values,
    euler_transform,
    laplace_kernel,
    laplace_transform,
    rodrigues_contour,
)

__all__ = [
    "Circle",
    "ContourSpec",
    "HalfLineDE",
    "HankelLoop",
    "QuadResult",
    "Segment",
    "TrackedIntegrand",
    "default_loop",
    "integrate",
    "integrate_tracked",
    "REPRESENTATIONS",
    "named_representation",
    "psi_loop_radius",
    "boundary_values",
    "euler_transform",
    "laplace_kernel",
    "laplace_transform",
    "rodrigues_contour",
]
