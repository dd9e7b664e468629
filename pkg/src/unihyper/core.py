"""Equation parameters, weights, ladders and Riemann-class classification.

A hypergeometric class operator ``σ∂² + τ∂ + η`` is stored in the
``(σ, κ, ω)`` form ``ℋ(σ,κ) + ω`` where

    ℋ(σ,κ) = σ∂² + (σ′+κ)∂ + κ′/2,     τ = κ + σ′,     η = κ′/2 + ω.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from typing import Optional

from .errors import InvalidDegree, NotApplicable
from .polyc import PolyC, quadratic_roots
from .ratfun import RatFun

__all__ = [
    "EquationParams",
    "LadderIndex",
    "WeightForm",
    "NormalFormReport",
    "NORMAL_FORM_TAGS",
    "params_from_sty",
    "params_to_sty",
    "ladder_params",
    "weight_form",
    "classify_riemann",
    "normal_form_triple",
    "gauss2f1_params",
    "kummer1f1_params",
    "twof0_params",
    "zerof1_params",
    "hermite_params",
]

#: Tolerance used to decide that a scalar derived from the coefficients vanishes.
ZERO_TOL = 1e-12

LadderIndex = complex  # a ladder index n; integer or half-integer in most uses


def _check_deg(p: PolyC, bound: int, name: str, nonzero: bool = False) -> None:
    if p.degree() > bound:
        raise InvalidDegree(f"deg {name} = {p.degree()} exceeds {bound}")
    if nonzero and p.is_zero():
        raise InvalidDegree(f"{name} must be nonzero")


@dataclass(frozen=True)
class EquationParams:
    """The triple ``(σ, κ, ω)`` of a hypergeometric class operator.

    Parameters
    ----------
    sigma : PolyC
        Leading coefficient, degree at most 2 and nonzero.
    kappa : PolyC
        Degree at most 1.
    omega : complex
        Scalar shift.
    """

    sigma: PolyC
    kappa: PolyC
    omega: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "sigma", PolyC.coerce(self.sigma))
        object.__setattr__(self, "kappa", PolyC.coerce(self.kappa))
        object.__setattr__(self, "omega", complex(self.omega))
        _check_deg(self.sigma, 2, "sigma", nonzero=True)
        _check_deg(self.kappa, 1, "kappa")

    @property
    def tau(self) -> PolyC:
        return self.kappa + self.sigma.deriv()

    @property
    def eta(self) -> complex:
        return self.kappa.coeff(1) / 2 + self.omega

    @property
    def s2(self) -> complex:
        """σ″ (a constant)."""
        return 2 * self.sigma.coeff(2)

    @property
    def k1(self) -> complex:
        """κ′ (a constant)."""
        return self.kappa.coeff(1)

    @property
    def alpha(self) -> complex:
        """Miller-algebra parameter α = σ″/2."""
        return self.sigma.coeff(2)

    @property
    def beta(self) -> complex:
        """Miller-algebra parameter β = κ′."""
        return self.kappa.coeff(1)

    def isclose(self, other: "EquationParams", rtol: float = 1e-12) -> bool:
        scale = max(1.0, abs(self.omega), abs(other.omega))
        return (
            self.sigma.isclose(other.sigma, rtol)
            and self.kappa.isclose(other.kappa, rtol)
            and abs(self.omega - other.omega) <= rtol * scale
        )

    def scaled(self, c: complex) -> "EquationParams":
        """Parameters of ``c·(ℋ(σ,κ)+ω)``."""
        return EquationParams(self.sigma * c, self.kappa * c, self.omega * c)


def params_from_sty(sigma, tau, eta: complex) -> EquationParams:
    """Convert ``σ∂² + τ∂ + η`` into ``(σ, κ, ω)``.

    Examples
    --------
    >>> p = params_from_sty(PolyC([1]), PolyC([0, -2]), -2 * 0.5)
    >>> p.kappa, p.omega
    (PolyC([0j, (-2+0j)]), 0j)
    """
    sigma, tau = PolyC.coerce(sigma), PolyC.coerce(tau)
    _check_deg(sigma, 2, "sigma", nonzero=True)
    _check_deg(tau, 1, "tau")
    kappa = tau - sigma.deriv()
    omega = complex(eta) - kappa.coeff(1) / 2
    return EquationParams(sigma, kappa, omega)


def params_to_sty(params: EquationParams) -> tuple[PolyC, PolyC, complex]:
    """Inverse of :func:`params_from_sty`."""
    return params.sigma, params.tau, params.eta


def ladder_params(base: EquationParams, n: LadderIndex) -> EquationParams:
    """Shift along the ladder: ``κₙ = nσ′ + κ₀``, ``ωₙ = n²σ″/2 + nκ₀′ + ω₀``."""
    n = complex(n)
    sigma = base.sigma
    kappa = base.kappa + sigma.deriv() * n
    omega = n * n * base.s2 / 2 + n * base.k1 + base.omega
    return EquationParams(sigma, kappa, omega)


# ---------------------------------------------------------------------------
# classical parameter dictionaries


def gauss2f1_params(a: complex, b: complex, c: complex) -> EquationParams:
    """``z(1−z)∂² + (c−(a+b+1)z)∂ − ab``."""
    return EquationParams(
        PolyC([0, 1, -1]), PolyC([c - 1, -(a + b - 1)]), -(a - 0.5) * (b - 0.5) - 0.25
    )


def kummer1f1_params(a: complex, c: complex) -> EquationParams:
    """``z∂² + (c−z)∂ − a``."""
    return EquationParams(PolyC([0, 1]), PolyC([c - 1, -1]), -a + 0.5)


def twof0_params(a: complex, b: complex) -> EquationParams:
    """``z²∂² + (−1+(a+b+1)z)∂ + ab``."""
    return EquationParams(
        PolyC([0, 0, 1]), PolyC([-1, a + b - 1]), (a - 0.5) * (b - 0.5) + 0.25
    )


def zerof1_params(c: complex) -> EquationParams:
    """``z∂² + c∂ − 1``."""
    return EquationParams(PolyC([0, 1]), PolyC([c - 1]), -1)


def hermite_params(a: complex) -> EquationParams:
    """``∂² − 2z∂ − 2a``."""
    return EquationParams(PolyC([1]), PolyC([0, -2]), -2 * a + 1)


# ---------------------------------------------------------------------------
# weights


@dataclass(frozen=True)
class WeightForm:
    """Closed-form weight ``ρ(z) = scale·Π(z−rⱼ)^{eⱼ}·exp(P(z))·exp(c/(z−r₀))``.

    Parameters
    ----------
    power_factors : tuple of (root, exponent)
    exp_poly : PolyC
        Polynomial ``P`` of degree at most 2.
    exp_pole : (root, residue) or None
    scale : complex
        Overall constant, fixed to 1 by :func:`weight_form`.
    """

    power_factors: tuple[tuple[complex, complex], ...] = ()
    exp_poly: PolyC = field(default_factory=PolyC.zero)
    exp_pole: Optional[tuple[complex, complex]] = None
    scale: complex = 1 + 0j

    def __post_init__(self):
        pf = tuple((complex(r), complex(e)) for r, e in self.power_factors if e != 0)
        object.__setattr__(self, "power_factors", pf)
        object.__setattr__(self, "exp_poly", PolyC.coerce(self.exp_poly))
        if self.exp_pole is not None:
            r, c = self.exp_pole
            object.__setattr__(
                self, "exp_pole", None if c == 0 else (complex(r), complex(c))
            )

    @classmethod
    def identity(cls) -> "WeightForm":
        return cls()

    @classmethod
    def power(cls, root: complex, exponent: complex) -> "WeightForm":
        """The weight ``(z − root)^exponent``."""
        return cls(((root, exponent),))

    def is_identity(self) -> bool:
        return (
            not self.power_factors
            and self.exp_poly.degree() <= 0
            and self.exp_pole is None
        )

    def log_derivative(self) -> RatFun:
        """``(log ρ)′`` as a rational function."""
        out = RatFun(self.exp_poly.deriv())
        for r, e in self.power_factors:
            out = out + RatFun(PolyC([e]), PolyC([-r, 1]))
        if self.exp_pole is not None:
            r, c = self.exp_pole
            out = out + RatFun(PolyC([-c]), PolyC([-r, 1]) ** 2)
        return out

    def log(self, z):
        """Principal-branch logarithm (sum of principal logs of the factors)."""
        import numpy as np

        z = np.asarray(z, dtype=complex)
        out = np.log(complex(self.scale)) + self.exp_poly(z)
        for r, e in self.power_factors:
            out = out + e * np.log(z - r)
        if self.exp_pole is not None:
            r, c = self.exp_pole
            out = out + c / (z - r)
        return out

    def __call__(self, z):
        import numpy as np

        val = np.exp(self.log(z))
        return complex(val) if np.ndim(val) == 0 else val

    def inverse(self) -> "WeightForm":
        return WeightForm(
            tuple((r, -e) for r, e in self.power_factors),
            -self.exp_poly,
            None if self.exp_pole is None else (self.exp_pole[0], -self.exp_pole[1]),
            1 / self.scale,
        )

    def __mul__(self, other: "WeightForm") -> "WeightForm":
        pf = list(self.power_factors)
        for r, e in other.power_factors:
            for i, (r2, e2) in enumerate(pf):
                if r2 == r:
                    pf[i] = (r, e + e2)
                    break
            else:
                pf.append((r, e))
        pole = self.exp_pole
        if other.exp_pole is not None:
            if pole is None:
                pole = other.exp_pole
            elif pole[0] == other.exp_pole[0]:
                pole = (pole[0], pole[1] + other.exp_pole[1])
            else:
                raise NotApplicable("weights with exponential poles at different points")
        return WeightForm(tuple(pf), self.exp_poly + other.exp_poly, pole, self.scale * other.scale)

    def factors(self):
        """Multivalued factors as ``(g, exponent)`` pairs plus a single-valued log part.

        Returns
        -------
        powers : list of (callable, complex)
            Each pair means ``g(z)**exponent`` with ``g(z) = z − root``.
        analytic_log : callable
            ``log(scale) + P(z) + c/(z−r₀)``.
        """
        import numpy as np

        powers = [((lambda z, r=r: z - r), e) for r, e in self.power_factors]

        def analytic_log(z):
            z = np.asarray(z, dtype=complex)
            out = np.log(complex(self.scale)) + self.exp_poly(z)
            if self.exp_pole is not None:
                r, c = self.exp_pole
                out = out + c / (z - r)
            return out

        return powers, analytic_log

    def __str__(self) -> str:
        parts = []
        for r, e in self.power_factors:
            base = "z" if r == 0 else f"(z-({r:.6g}))"
            parts.append(f"{base}^({e:.6g})")
        if not self.exp_poly.is_zero():
            parts.append(f"exp({self.exp_poly})")
        if self.exp_pole is not None:
            r, c = self.exp_pole
            parts.append(f"exp(({c:.6g})/(z-({r:.6g})))")
        return "·".join(parts) if parts else "1"


def _sigma_roots(sigma: PolyC) -> list[complex]:
    """Roots of σ sorted by (real, imag); double roots appear twice."""
    rts = sigma.roots()
    return sorted(rts, key=lambda r: (round(r.real, 12), round(r.imag, 12)))


def weight_form(params: EquationParams) -> WeightForm:
    """Solve ``σρ′ = κρ`` in closed form (with unit scale).

    Examples
    --------
    >>> w = weight_form(hermite_params(0.3))
    >>> w.exp_poly
    PolyC([0j, 0j, (-1+0j)])
    """
    sigma, kappa = params.sigma, params.kappa
    d = sigma.degree()
    if d == 0:
        return WeightForm(exp_poly=(kappa / sigma.lead).integ())
    if d == 1:
        s1 = sigma.lead
        r = sigma.roots()[0]
        return WeightForm(
            ((r, kappa(r) / s1),), exp_poly=PolyC([0, kappa.coeff(1) / s1])
        )
    r1, r2 = _sigma_roots(sigma)
    s2 = sigma.lead
    if r1 == r2:
        # κ/σ = κ(r)/(s2 (z−r)²) + κ′/(s2 (z−r))
        return WeightForm(
            ((r1, kappa.coeff(1) / s2),), exp_pole=(r1, -kappa(r1) / s2)
        )
    ds = sigma.deriv()
    return WeightForm(((r1, kappa(r1) / ds(r1)), (r2, kappa(r2) / ds(r2))))


# ---------------------------------------------------------------------------
# classification

NORMAL_FORM_TAGS = (
    "Gauss2F1",
    "TwoF0",
    "Kummer1F1",
    "ZeroF1",
    "Hermite",
    "Airy",
    "EulerI",
    "EulerII",
    "Helmholtz1d",
    "Laplace1d",
)

_PARAM_NAMES = {
    "Gauss2F1": ("a", "b", "c"),
    "TwoF0": ("a", "b"),
    "Kummer1F1": ("a", "c"),
    "ZeroF1": ("c",),
    "Hermite": ("a",),
    "Airy": (),
    "EulerI": ("c",),
    "EulerII": ("c",),
    "Helmholtz1d": (),
    "Laplace1d": (),
}


@dataclass(frozen=True)
class NormalFormReport:
    """Result of :func:`classify_riemann`.

    The normal form is obtained from the input operator ``L`` by

        N(x) = (1/scalar_divisor) · G·L·G⁻¹   with   x = a·z + b,

    where ``(a, b) = affine_map`` and ``G = gauge`` (the identity weight
    whenever the input already belongs to the grounded class and no
    gauging is needed).

    Attributes
    ----------
    type_tag : str
        One of :data:`NORMAL_FORM_TAGS`.
    affine_map : (complex, complex)
    scalar_divisor : complex
    normal_params : dict
        Named parameters of the normal form, e.g. ``{"a":…, "b":…, "c":…}``.
    hypergeometric_class : bool
        False only for the Airy type.
    gauge : WeightForm
        Gauge factor in the original variable.
    """

    type_tag: str
    affine_map: tuple[complex, complex]
    scalar_divisor: complex
    normal_params: dict
    hypergeometric_class: bool = True
    gauge: WeightForm = field(default_factory=WeightForm.identity)

    def normal_triple(self) -> tuple[PolyC, PolyC, PolyC]:
        """``(σ, τ, ξ)`` of the normal form in the new variable."""
        return normal_form_triple(self.type_tag, self.normal_params)


def normal_form_triple(tag: str, params: dict) -> tuple[PolyC, PolyC, PolyC]:
    """Coefficient triple ``(σ, τ, ξ)`` of a tabulated normal form.

    The operator is ``σ∂² + τ∂ + ξ/σ``; in the grounded cases ``ξ = η·σ``.
    """
    p = {k: complex(v) for k, v in params.items()}
    if tag == "Airy":
        return PolyC([1]), PolyC.zero(), PolyC([0, 1])
    if tag == "Gauss2F1":
        s, t, e = PolyC([0, 1, -1]), PolyC([p["c"], -(p["a"] + p["b"] + 1)]), -p["a"] * p["b"]
    elif tag == "TwoF0":
        s, t, e = PolyC([0, 0, 1]), PolyC([-1, p["a"] + p["b"] + 1]), p["a"] * p["b"]
    elif tag == "Kummer1F1":
        s, t, e = PolyC([0, 1]), PolyC([p["c"], -1]), -p["a"]
    elif tag == "ZeroF1":
        s, t, e = PolyC([0, 1]), PolyC([p["c"]]), -1
    elif tag == "Hermite":
        s, t, e = PolyC([1]), PolyC([0, -2]), -2 * p["a"]
    elif tag == "EulerI":
        s, t, e = PolyC([0, 0, 1]), PolyC([0, p["c"]]), 0
    elif tag == "EulerII":
        s, t, e = PolyC([0, 1]), PolyC([p["c"]]), 0
    elif tag == "Helmholtz1d":
        s, t, e = PolyC([1]), PolyC.zero(), 1
    elif tag == "Laplace1d":
        s, t, e = PolyC([1]), PolyC.zero(), 0
    else:
        raise ValueError(f"unknown normal form {tag!r}")
    return s, t, s * e


def _small(x: complex, scale: float) -> bool:
    return abs(x) <= ZERO_TOL * max(scale, 1e-300)


def _min_root(a: complex, b: complex, c: complex) -> complex:
    """Root of ``a λ² + b λ + c`` of smallest modulus (``a`` may vanish)."""
    if a == 0:
        if b == 0:
            raise NotApplicable("degenerate exponent equation")
        return -c / b
    r1, r2 = quadratic_roots(a, b, c)
    return r1 if abs(r1) <= abs(r2) else r2


def _apply_gauge(sigma: PolyC, tau: PolyC, xi: PolyC, g: WeightForm):
    """Triple of ``G·(σ∂² + τ∂ + ξ/σ)·G⁻¹``; returns (τ', ξ'/σ as RatFun)."""
    lg = g.log_derivative()
    s = RatFun(sigma)
    tau_new = RatFun(tau) - s * lg * 2
    free = s * (lg * lg - lg.deriv()) - RatFun(tau) * lg + RatFun(xi, sigma)
    return tau_new, free


def _ground(sigma: PolyC, tau: PolyC, xi: PolyC):
    """Gauge a Riemann-class operator into the grounded class.

    Returns ``(gauge, tau, eta)`` or ``None`` for the Airy type.
    """
    d = sigma.degree()
    t0, t1 = tau.coeff(0), tau.coeff(1)
    if d == 2:
        roots = _sigma_roots(sigma)
        s2 = sigma.lead
        if roots[0] != roots[1]:
            ds = sigma.deriv()
            pf = []
            for r in roots:
                sp = ds(r)
                lam = _min_root(sp, sp - tau(r), xi(r) / sp)
                pf.append((r, lam))
            g = WeightForm(tuple(pf))
        else:
            r = roots[0]
            u_tau = tau.affine(1, r)  # τ(r + u)
            u_xi = xi.affine(1, r)
            x0, x1 = u_xi.coeff(0), u_xi.coeff(1)
            a0 = u_tau.coeff(0)
            nu = _min_root(s2, -a0, x0 / s2)
            denom = 2 * s2 * nu - a0
            rhs = t1 * nu - 2 * s2 * nu - x1 / s2
            if _small(denom, max(abs(a0), abs(s2 * nu), 1.0)):
                if not _small(rhs, max(abs(t1 * nu), abs(x1 / s2), 1.0)):
                    raise NotApplicable(
                        "double-root operator with a ramified irregular point; "
                        "not reducible by power/exponential gauging"
                    )
                lam = 0j
            else:
                lam = rhs / denom
            # exp(−ν/(z−r)) has log-derivative ν/(z−r)²
            g = WeightForm(((r, lam),), exp_pole=(r, -nu))
    elif d == 1:
        s1 = sigma.lead
        r = sigma.roots()[0]
        mu = _min_root(s1, -t1, xi.coeff(2) / s1)
        lam = _min_root(s1, s1 - tau(r), xi(r) / s1)
        g = WeightForm(((r, lam),), exp_poly=PolyC([0, mu]))
    else:
        s0 = sigma.lead
        x2, x1 = xi.coeff(2), xi.coeff(1)
        q2 = (x2 - t1 * t1 / 4) / (s0 * s0)
        q1 = (x1 - t0 * t1 / 2) / (s0 * s0)
        scale = max(abs(x2), abs(t1) ** 2, abs(x1), abs(t0 * t1), 1e-300) / abs(s0) ** 2
        if _small(q2, scale):
            if not _small(q1, scale):
                return None  # Airy
            g = WeightForm(exp_poly=(tau / (2 * s0)).integ())
        else:
            mu2 = _min_root(s0, -t1, x2 / s0)
            mu1 = (t0 * mu2 - x1 / s0) / (2 * s0 * mu2 - t1)
            g = WeightForm(exp_poly=PolyC([0, mu1, mu2 / 2]))
    tau_new, free = _apply_gauge(sigma, tau, xi, g)
    ref = max(sigma.scale(), tau.scale(), xi.scale())
    tau_p = tau_new.as_poly(1e-8, ref)
    free_p = free.as_poly(1e-8, ref)
    sc = max(free_p.scale(), abs(t0), abs(t1), sigma.scale())
    free_p = PolyC([c if abs(c) > 1e-10 * sc else 0 for c in free_p.coefficients])
    tau_p = PolyC([c if abs(c) > 1e-13 * max(tau_p.scale(), sc) else 0 for c in tau_p.coefficients])
    if free_p.degree() > 0:
        raise NotApplicable("gauging failed to ground the operator")
    return g, tau_p, free_p.coeff(0)


def classify_riemann(sigma, tau, xi) -> NormalFormReport:
    """Reduce ``σ∂² + τ∂ + ξ/σ`` to one of the ten tabulated normal forms.

    Parameters
    ----------
    sigma, tau, xi : PolyC or coercible
        Degrees at most 2, 1 and 2; in the grounded case ``ξ = η·σ``.

    Returns
    -------
    NormalFormReport

    Examples
    --------
    >>> classify_riemann(PolyC([1]), PolyC.zero(), PolyC([0, 1])).type_tag
    'Airy'
    >>> rep = classify_riemann(PolyC([4, 0, -1]), PolyC.zero(), PolyC.zero())
    >>> rep.type_tag, rep.affine_map
    ('Gauss2F1', ((0.25+0j), (0.5+0j)))
    """
    sigma, tau, xi = PolyC.coerce(sigma), PolyC.coerce(tau), PolyC.coerce(xi)
    _check_deg(sigma, 2, "sigma", nonzero=True)
    _check_deg(tau, 1, "tau")
    _check_deg(xi, 2, "xi")

    q, r = divmod(xi, sigma)
    scale = max(xi.scale(), sigma.scale() * max(q.scale(), 1e-300))
    grounded = q.degree() <= 0 and r.scale() <= ZERO_TOL * max(scale, 1e-300)
    gauge = WeightForm.identity()
    if grounded:
        eta = q.coeff(0)
    else:
        res = _ground(sigma, tau, xi)
        if res is None:
            return _airy(sigma, tau, xi)
        gauge, tau, eta = res
    return _classify_grounded(sigma, tau, complex(eta), gauge)


def _airy(sigma: PolyC, tau: PolyC, xi: PolyC) -> NormalFormReport:
    s0 = sigma.lead
    t0, t1 = tau.coeff(0), tau.coeff(1)
    q1 = (xi.coeff(1) - t0 * t1 / 2) / (s0 * s0)
    q0 = xi.coeff(0) / (s0 * s0) - (t0 / s0) ** 2 / 4 - t1 / (2 * s0)
    a = complex(q1) ** (1 / 3)
    b = q0 * a / q1
    g = WeightForm(exp_poly=(tau / (2 * s0)).integ())
    return NormalFormReport("Airy", (complex(a), complex(b)), s0 * a * a, {}, False, g)


def _classify_grounded(sigma: PolyC, tau: PolyC, eta: complex, gauge: WeightForm) -> NormalFormReport:
    d = sigma.degree()
    t0, t1 = tau.coeff(0), tau.coeff(1)
    tscale = max(tau.scale(), sigma.scale())

    def rep(tag, map_a, map_b, div, **params):
        names = _PARAM_NAMES[tag]
        vals = {n: complex(params[n]) for n in names}
        return NormalFormReport(tag, (complex(map_a), complex(map_b)), complex(div), vals, True, gauge)

    if d == 2:
        s2 = sigma.lead
        r1, r2 = _sigma_roots(sigma)
        if r1 != r2:
            a_m = 1 / (r2 - r1)
            b_m = -r1 * a_m
            # T(x) = −a_m τ(r1 + (r2−r1)x)/s2 = c − (A+B+1)x
            T = tau.affine(r2 - r1, r1) * (-a_m / s2)
            c = T.coeff(0)
            ssum = -T.coeff(1) - 1
            prod = eta / s2
            A, B = quadratic_roots(1, -ssum, prod)
            A, B = sorted((complex(A), complex(B)), key=lambda v: (v.real, v.imag))
            return rep("Gauss2F1", a_m, b_m, -s2, a=A, b=B, c=c)
        r = r1
        a0 = tau(r)
        if not _small(a0, tscale):
            lam = -a0 / s2
            A, B = quadratic_roots(1, -(t1 / s2 - 1), eta / s2)
            A, B = sorted((complex(A), complex(B)), key=lambda v: (v.real, v.imag))
            return rep("TwoF0", 1 / lam, -r / lam, s2, a=A, b=B)
        c = t1 / s2
        e = eta / s2
        if e != 0 and not _small(e, max(abs(c), 1.0)):
            lam = _min_root(1, 1 - c, e)
            gauge = gauge * WeightForm.power(r, lam)
            c = c - 2 * lam
        return rep("EulerI", 1, -r, s2, c=c)
    if d == 1:
        s1 = sigma.lead
        r = sigma.roots()[0]
        if not _small(t1, tscale):
            lam = -s1 / t1
            return rep("Kummer1F1", 1 / lam, -r / lam, s1 / lam, a=-eta * lam / s1, c=tau(r) / s1)
        if eta != 0 and not _small(eta, tscale):
            lam = -s1 / eta
            return rep("ZeroF1", 1 / lam, -r / lam, s1 / lam, c=t0 / s1)
        return rep("EulerII", 1, -r, s1, c=t0 / s1)
    s0 = sigma.lead
    if not _small(t1, tscale):
        k = cmath.sqrt(-t1 / (2 * s0))
        return rep("Hermite", k, t0 * k / t1, s0 * k * k, a=eta / t1)
    if not _small(t0, tscale):
        gauge = gauge * WeightForm(exp_poly=PolyC([0, t0 / (2 * s0)]))
        eta = eta - t0 * t0 / (4 * s0)
    if eta != 0 and not _small(eta, tscale):
        k = cmath.sqrt(eta / s0)
        return rep("Helmholtz1d", k, 0, s0 * k * k)
    return rep("Laplace1d", 1, 0, s0)
