"""Named integral representations of the classical functions.

Each entry returns the integral rescaled so that it equals the function
value on the right-hand side of the representation (Olver-normalised
where the representation produces ``𝐅``).
"""

from __future__ import annotations

import cmath
import math
from typing import Optional

import numpy as np

from ..elementary import powexp
from ..errors import NotApplicable
from ..gammafn import gamma, rgamma
from .contour import (
    Circle,
    HalfLineDE,
    HankelLoop,
    QuadResult,
    TrackedIntegrand,
    integrate,
    integrate_tracked,
)

__all__ = ["REPRESENTATIONS", "named_representation", "psi_loop_radius"]

REPRESENTATIONS = (
    "Repr2F1Euler",
    "Repr1F1Hankel",
    "Repr1F1Algebraic",
    "Repr2F0",
    "Repr0F1Loop",
    "ReprHermiteLaplace",
    "ReprHermiteEuler",
    "PsiLoop",
    "PsiTildeLoop",
)


def _scaled(res: QuadResult, scale: complex) -> QuadResult:
    return QuadResult(res.value * scale, res.err_estimate * abs(scale), 0j, True, res.value)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise NotApplicable(msg)


def psi_loop_radius(mu: complex, nu: complex, z: complex) -> float:
    """A radius inside the annulus ``|zν| < |u| < 1/|μ|``."""
    lo = abs(complex(z) * nu)
    hi = math.inf if mu == 0 else 1 / abs(mu)
    _need(lo < hi, "empty annulus: need |zν| < 1/|μ|")
    if lo == 0 and hi == math.inf:
        return 1.0
    if lo == 0:
        return 0.5 * hi
    if hi == math.inf:
        return max(2 * lo, 1.0)
    return math.sqrt(lo * hi)


def _psi_loop(a, b, mu, nu, m, z, radius, tilde):
    a, b, mu, nu, z = (complex(v) for v in (a, b, mu, nu, z))
    if tilde:
        # Ψ̃ₘ swaps the roles of (a, μ) and (b, ν)
        a, b, mu, nu = b, a, nu, mu
    r = psi_loop_radius(mu, nu, z) if radius is None else radius

    def f(u):
        u = np.asarray(u, dtype=complex)
        with np.errstate(all="ignore"):
            if mu == 0:
                k1 = np.exp(-a * u)
            else:
                k1 = np.exp(-a / mu * np.log1p(mu * u))
            if nu == 0:
                k2 = np.exp(-b * z / u)
            else:
                k2 = np.exp(-b / nu * np.log1p(nu * z / u))
        return k1 * k2 * u ** (-m - 1)

    res = integrate(f, Circle(0, r, points=2048, phase=0.0))
    return _scaled(res, 1 / (2j * math.pi))


def named_representation(name: str, params: dict, z: complex, radius: Optional[float] = None) -> QuadResult:
    """Evaluate a named integral representation.

    ==================  =====================================================  ==========================
    name                integral                                               returned value
    ==================  =====================================================  ==========================
    Repr2F1Euler        ∫₁^∞ t^{b−c}(t−1)^{c−a−1}(t−z)^{−b} dt                 𝐅(a,b;c;z)
    Repr1F1Hankel       (1/2πi)∫_{]−∞,(0,z)⁺,−∞[} t^{a−c}eᵗ(t−z)^{−a} dt        𝐅(a;c;z)
    Repr1F1Algebraic    ∫₁^∞ e^{z/t}t^{−c}(t−1)^{c−a−1} dt                     𝐅(a;c;z)
    Repr2F0             ∫₀^∞ e^{−1/t}t^{b−a−1}(t−z)^{−b} dt                    F(a,b;−;z)
    Repr0F1Loop         (1/2πi)∫ eᵗe^{z/t}t^{−c} dt, Hankel loop or circle      𝐅(c;z)
    ReprHermiteLaplace  ∫₀^∞ e^{−t²−2tz}t^{a−1} dt                              S(a;z)
    ReprHermiteEuler    −i∫_{]−i∞,z⁻,i∞[} e^{t²}(z−t)^{−a} dt                   S(a;z)
    PsiLoop             (1/2πi)∮(1+μu)^{−a/μ}(1+νz/u)^{−b/ν}u^{−m−1} du        Ψₘ(z)
    PsiTildeLoop        (1/2πi)∮(1+μz/v)^{−a/μ}(1+νv)^{−b/ν}v^{−m−1} dv        Ψ̃ₘ(z)
    ==================  =====================================================  ==========================

    ``Repr0F1Loop`` takes either ``c`` (Hankel loop) or an integer ``m``
    (circle around 0, the Bessel formula, with ``c = 1+m``).  ``radius``
    overrides the circle radius or the Hankel cap radius.

    Raises
    ------
    NotApplicable
        When the half-plane conditions of the representation fail.
    """
    p = {k: (v if k == "m" else complex(v)) for k, v in params.items()}
    z = complex(z)
    if name == "Repr2F1Euler":
        a, b, c = p["a"], p["b"], p["c"]
        _need(a.real > 0 and (c - a).real > 0, "needs Re a > 0 and Re(c−a) > 0")
        _need(not (z.imag == 0 and z.real >= 1), "z must avoid [1, ∞)")
        fn = TrackedIntegrand([(0, b - c), (1, c - a - 1), (z, -b)])
        res = integrate_tracked(fn, HalfLineDE(1, 1))
        return _scaled(res, rgamma(a) * rgamma(c - a))
    if name == "Repr1F1Hankel":
        a, c = p["a"], p["c"]
        loop = HankelLoop((0, z) if z != 0 else (0,), radius=radius)
        fn = TrackedIntegrand([(0, a - c), (z, -a)], lambda t: t)
        res = integrate_tracked(fn, loop)
        return _scaled(res, 1 / (2j * math.pi))
    if name == "Repr1F1Algebraic":
        a, c = p["a"], p["c"]
        _need(a.real > 0 and (c - a).real > 0, "needs Re a > 0 and Re(c−a) > 0")
        fn = TrackedIntegrand([(0, -c), (1, c - a - 1)], lambda t: z / t)
        res = integrate_tracked(fn, HalfLineDE(1, 1))
        return _scaled(res, rgamma(a) * rgamma(c - a))
    if name == "Repr2F0":
        a, b = p["a"], p["b"]
        _need(a.real > 0, "needs Re a > 0")
        _need(not (z.imag == 0 and z.real >= 0), "z must avoid [0, ∞)")
        fn = TrackedIntegrand([(0, b - a - 1), (z, -b)], lambda t: -1 / t)
        res = integrate_tracked(fn, HalfLineDE(0, 1))
        return _scaled(res, rgamma(a))
    if name == "Repr0F1Loop":
        if "m" in p:
            m = int(p["m"])
            r = 1.0 if radius is None else radius
            f = lambda t: np.exp(t + z / t) * t ** (-m - 1)  # noqa: E731
            res = integrate(f, Circle(0, r, points=2048))
        else:
            c = p["c"]
            cap = max(0.3, math.sqrt(abs(z))) if radius is None else radius
            fn = TrackedIntegrand([(0, -c)], lambda t: t + z / t)
            res = integrate_tracked(fn, HankelLoop((0,), radius=cap))
        return _scaled(res, 1 / (2j * math.pi))
    if name == "ReprHermiteLaplace":
        a = p["a"]
        _need(a.real > 0, "needs Re a > 0")
        fn = TrackedIntegrand([(0, a - 1)], lambda t: -t * t - 2 * t * z)
        res = integrate_tracked(fn, HalfLineDE(0, 1))
        return _scaled(res, 2 ** a * rgamma(a))
    if name == "ReprHermiteEuler":
        a = p["a"]
        # vertical line to the left of z: z − t stays in the right half plane
        x0 = z.real - (1.0 if radius is None else radius)
        start = complex(x0, z.imag)
        fn = lambda t: np.exp(t * t - a * np.log(z - t))  # noqa: E731
        up = integrate(fn, HalfLineDE(start, 1j))
        down = integrate(fn, HalfLineDE(start, -1j))
        val = up.value - down.value
        res = QuadResult(val, up.err_estimate + down.err_estimate)
        return _scaled(res, -1j / math.sqrt(math.pi))
    if name in ("PsiLoop", "PsiTildeLoop"):
        return _psi_loop(p["a"], p["b"], p["mu"], p["nu"], int(p.get("m", 0)), z, radius, name == "PsiTildeLoop")
    raise ValueError(f"unknown representation {name!r}")
