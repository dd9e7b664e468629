"""Euler and Laplace transforms and the contour form of the Rodrigues formula.

Euler transform
    fₙ(z) = ∫_γ (s−z)^{−n−1} ρ₀⁻¹(s) ds,  with  σρ₀′ = κ₀ρ₀.

    It is annihilated by ℋ(σ,κₙ)+ωₙ on the ladder through
    (σ, κ₀, ω₀ = κ₀′/2) provided σ(s)(s−z)^{−n−2}ρ₀⁻¹(s) takes equal values at
    both ends of γ.

Laplace transform (σ″ = 0)
    gₙ(z) = ∫_γ δ₀(s) sⁿ e^{zs} ds,  with  (σ′s+κ₀′)δ₀′ = (σ(0)s+κ₀(0)−σ′)δ₀,

    valid when (σ′s^{n+2}+κ₀′s^{n+1})δ₀(s)e^{zs} takes equal values at both
    ends of γ.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np

from ..core import EquationParams, weight_form
from ..errors import BoundaryTermNonzero, NotApplicable
from ..gammafn import rgamma
from ..polyc import PolyC
from .contour import (
    Circle,
    ContourSpec,
    QuadResult,
    TrackedIntegrand,
    _circle,
    _pieces,
    integrate,
    integrate_tracked,
)

__all__ = [
    "euler_transform",
    "laplace_transform",
    "laplace_kernel",
    "rodrigues_contour",
    "boundary_values",
]

#: Relative size below which a boundary term counts as vanishing.
BOUNDARY_TOL = 1e-10


def _merge(factors) -> list[tuple[complex, complex]]:
    out: list[list] = []
    for r, e in factors:
        r, e = complex(r), complex(e)
        for item in out:
            if abs(item[0] - r) <= 1e-14 * (1 + abs(r)):
                item[1] += e
                break
        else:
            out.append([r, e])
    return [(r, e) for r, e in out if e != 0]


def boundary_values(fn: TrackedIntegrand, contour: ContourSpec, level: int = 7) -> tuple[complex, complex]:
    """Values of ``fn`` at the first and last nodes of ``contour``.

    The branch at the last node is obtained by continuation along the path,
    so ``last − first`` is the boundary contribution of an integration by
    parts.  Closed circles return ``(0, 0)``.
    """
    if isinstance(contour, Circle):
        return 0j, 0j
    pieces = _pieces(contour, level)
    anchor = None
    first = last = None
    for nd in pieces:
        vals = fn.values(nd, anchor)
        anchor = {j: fn.factor_log(j, nd, anchor)[-1] for j in range(len(fn.factors))}
        if first is None:
            first = complex(vals[0])
        last = complex(vals[-1])
    clean = lambda v: 0j if not np.isfinite(v) and abs(v.real) != math.inf else v  # noqa: E731
    return clean(first), clean(last)


def _finish(integral: QuadResult, boundary: TrackedIntegrand, contour, scale: complex, strict: bool) -> QuadResult:
    b0, b1 = boundary_values(boundary, contour)
    bterm = b1 - b0
    value = integral.value * scale
    ok = bool(np.isfinite(bterm)) and abs(bterm) <= BOUNDARY_TOL * max(abs(integral.value), 1e-300)
    res = QuadResult(value, integral.err_estimate * abs(scale), bterm, ok, integral.value)
    if strict and not ok:
        raise BoundaryTermNonzero(f"boundary term {abs(bterm):.3e} does not vanish", result=res)
    return res


def euler_transform(
    sigma: PolyC,
    kappa0: PolyC,
    n: complex,
    contour: ContourSpec,
    z: complex,
    normalized: bool = False,
    strict: bool = False,
) -> QuadResult:
    """Evaluate ``fₙ(z) = ∫(s−z)^{−n−1}ρ₀⁻¹(s)ds`` along ``contour``.

    Parameters
    ----------
    sigma, kappa0 : PolyC
        Define the weight ``ρ₀`` through ``σρ₀′ = κ₀ρ₀`` (unit scale).
    n : complex
        Ladder index; the result solves the equation with ``κₙ = κ₀ + nσ′``.
    contour : ContourSpec
        Must avoid ``s = z`` and the singular points of ``ρ₀⁻¹``.
    normalized : bool
        Divide by ``Γ(n+1)``.
    strict : bool
        Raise :class:`BoundaryTermNonzero` instead of only flagging.

    Returns
    -------
    QuadResult
        ``boundary_term`` is ``σ(s)(s−z)^{−n−2}ρ₀⁻¹(s)`` evaluated between
        the ends of the contour.
    """
    sigma, kappa0 = PolyC.coerce(sigma), PolyC.coerce(kappa0)
    z, n = complex(z), complex(n)
    rho_inv = weight_form(EquationParams(sigma, kappa0)).inverse()
    powers, alog = rho_inv.factors()
    base = [(r, e) for r, e in rho_inv.power_factors]
    integrand = TrackedIntegrand(_merge(base + [(z, -n - 1)]), alog)
    sig_roots = [(r, 1) for r in sigma.roots()] if sigma.degree() > 0 else []
    boundary = TrackedIntegrand(_merge(base + sig_roots + [(z, -n - 2)]), alog, coeff=sigma.lead)
    res = integrate_tracked(integrand, contour)
    scale = rgamma(n + 1) if normalized else 1
    return _finish(res, boundary, contour, scale, strict)


def laplace_kernel(sigma: PolyC, kappa0: PolyC):
    """Closed form of ``δ₀`` as ``(factors, log_of_single_valued_part)``.

    ``σ′ ≠ 0``: ``δ₀ = e^{σ(0)s/σ′}(s+κ₀′/σ′)^{(κ₀(0)−σ′−σ(0)κ₀′/σ′)/σ′}``;
    ``σ′ = 0``: ``δ₀ = exp((σ(0)s²/2 + κ₀(0)s)/κ₀′)``.
    """
    sigma, kappa0 = PolyC.coerce(sigma), PolyC.coerce(kappa0)
    if sigma.degree() > 1:
        raise NotApplicable("the Laplace transform needs σ″ = 0")
    s0, s1 = sigma.coeff(0), sigma.coeff(1)
    k0, k1 = kappa0.coeff(0), kappa0.coeff(1)
    if s1 != 0:
        root = -k1 / s1
        expo = (k0 - s1 - s0 * k1 / s1) / s1
        lin = s0 / s1
        return [(root, expo)], (lambda s: lin * s), root
    if k1 == 0:
        raise NotApplicable("σ′ = κ₀′ = 0: the kernel equation is degenerate")
    return [], (lambda s: (s0 * s * s / 2 + k0 * s) / k1), None


def laplace_transform(
    sigma: PolyC,
    kappa0: PolyC,
    n: complex,
    contour: ContourSpec,
    z: complex,
    strict: bool = False,
) -> QuadResult:
    """Evaluate ``gₙ(z) = ∫δ₀(s)sⁿe^{zs}ds`` along ``contour``.

    Raises
    ------
    NotApplicable
        If ``σ″ ≠ 0``.
    """
    sigma, kappa0 = PolyC.coerce(sigma), PolyC.coerce(kappa0)
    z, n = complex(z), complex(n)
    factors, lin, root = laplace_kernel(sigma, kappa0)
    logg = lambda s: lin(s) + z * s  # noqa: E731
    integrand = TrackedIntegrand(_merge(factors + [(0, n)]), logg)
    s1, k1 = sigma.coeff(1), kappa0.coeff(1)
    if root is not None:
        bfac = _merge([(root, factors[0][1] + 1), (0, n + 1)])
        boundary = TrackedIntegrand(bfac, logg, coeff=s1)
    else:
        boundary = TrackedIntegrand(_merge([(0, n + 1)]), logg, coeff=k1)
    res = integrate_tracked(integrand, contour)
    return _finish(res, boundary, contour, 1, strict)


def rodrigues_contour(sigma: PolyC, kappa: PolyC, n: int, z: complex, radius: Optional[float] = None) -> QuadResult:
    """``Pₙ(z) = ρ⁻¹(z)/(2πi) ∮_{[z⁺]} σⁿ(s)ρ(s)(s−z)^{−n−1} ds``.

    The circle is centered at ``z`` with radius half the distance to the
    nearest singular point of ``ρ`` (or 1 when there is none).
    """
    sigma, kappa = PolyC.coerce(sigma), PolyC.coerce(kappa)
    z = complex(z)
    w = weight_form(EquationParams(sigma, kappa))
    sing = [r for r, _ in w.power_factors]
    if w.exp_pole is not None:
        sing.append(w.exp_pole[0])
    if radius is None:
        radius = 0.5 * min((abs(z - r) for r in sing), default=2.0)
    if radius <= 0:
        raise NotApplicable("z is a singular point of the weight")

    def f(s):
        t = s - z
        out = w.exp_poly(s) - w.exp_poly(z)
        for r, e in w.power_factors:
            out = out + e * np.log1p(t / (z - r))
        if w.exp_pole is not None:
            r, c = w.exp_pole
            out = out + c / (s - r) - c / (z - r)
        return sigma(s) ** n * np.exp(out) * t ** (-n - 1)

    res = integrate(f, Circle(z, radius, points=1024))
    scale = 1 / (2j * math.pi)
    return QuadResult(res.value * scale, res.err_estimate * abs(scale), 0j, True, res.value)
