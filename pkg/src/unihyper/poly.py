"""Hypergeometric class polynomials.

The Rodrigues polynomials ``Pₙ(σ,κ) = (1/n!)ρ⁻¹∂ⁿ(σⁿρ)`` with ``σρ′ = κρ``
are built by the exact recursion

    p₀ = 1,   p_{k+1} = ((n−k)σ′ + κ)p_k + σp_k′,   Pₙ = pₙ/n!,

which unfolds ``ρ⁻¹∂ᵏ(σⁿρ) = σ^{n−k}p_k``.  ``Pₙ`` is annihilated by
``ℋ(σ,κ) − n(n+1)σ″/2 − (n+½)κ′``.

The classical families (Jacobi, Laguerre, Bessel, Hermite) are thin
wrappers with their usual normalisations.  Inner products against the
weight are computed exactly from closed-form moments.
"""

from __future__ import annotations

import csv
from fractions import Fraction
import io
import json
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .core import EquationParams
from .errors import NotApplicable, NoOrthogonalityInterval
from .gammafn import beta as beta_fn
from .gammafn import gamma, pochhammer
from .opalg.identities import hgc_operator
from .polyc import PolyC
from .series import terminating_series_poly

__all__ = [
    "FAMILIES",
    "FamilySpec",
    "MomentTable",
    "rodrigues",
    "classical_poly",
    "jacobi_degree",
    "jacobi_degree_printed",
    "eigen_residual",
    "polynomial_recurrences",
    "RecurrenceReport",
    "generating_expand",
    "GeneratingReport",
    "inner_product_moments",
    "orthogonality_check",
    "OrthogonalityReport",
    "pq1_norm",
    "pq1_norm_printed",
    "family_norm",
    "closed_form_poly",
    "bessel_convention_report",
    "poly_table",
    "table_to_csv",
    "table_to_json",
]

FAMILIES = ("Jacobi", "Laguerre", "BesselPoly", "HermitePoly")
_ALIASES = {"bessel": "BesselPoly", "hermite": "HermitePoly", "jacobi": "Jacobi", "laguerre": "Laguerre"}
_ALIASES.update({f.lower(): f for f in FAMILIES})

#: Tolerance used to decide that a parameter is an integer.
INT_TOL = 1e-12

PolyLike = Union[PolyC, Sequence[complex]]


def _as_int(x: complex) -> Optional[int]:
    x = complex(x)
    r = round(x.real)
    if abs(x - r) <= INT_TOL * max(1.0, abs(r)):
        return int(r)
    return None


@dataclass(frozen=True)
class FamilySpec:
    """A classical polynomial family and its parameters.

    ============  ==========  ====================  ===========================
    family        σ           κ                     weight ρ (σρ′ = κρ)
    ============  ==========  ====================  ===========================
    Jacobi        1−z²        (β−α) − (α+β)z        (1−z)^α (1+z)^β
    Laguerre      z           α − z                 z^α e^{−z}
    BesselPoly    z²          −1 + θz               z^θ e^{1/z}
    HermitePoly   1           −2z                   e^{−z²}
    ============  ==========  ====================  ===========================

    The Jacobi ``κ`` is the one induced by the weight; it is also the one
    appearing in the Jacobi differential operator
    ``(1−x²)∂² + (β−α−(α+β+2)x)∂``.  :attr:`printed_kappa` keeps the
    alternative tabulated form ``α(1−z)+β(1+z)`` for reference only.
    """

    family: str
    alpha: complex = 0.0
    beta: complex = 0.0
    theta: complex = 0.0

    def __post_init__(self):
        name = _ALIASES.get(str(self.family).lower())
        if name is None:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        object.__setattr__(self, "family", name)
        for k in ("alpha", "beta", "theta"):
            v = complex(getattr(self, k))
            object.__setattr__(self, k, v.real if v.imag == 0 else v)

    # -- constructors ------------------------------------------------------------
    @classmethod
    def jacobi(cls, alpha: complex, beta: complex) -> "FamilySpec":
        return cls("Jacobi", alpha=alpha, beta=beta)

    @classmethod
    def laguerre(cls, alpha: complex) -> "FamilySpec":
        return cls("Laguerre", alpha=alpha)

    @classmethod
    def bessel(cls, theta: complex) -> "FamilySpec":
        return cls("BesselPoly", theta=theta)

    @classmethod
    def hermite(cls) -> "FamilySpec":
        return cls("HermitePoly")

    # -- induced data --------------------------------------------------------------
    @property
    def sigma(self) -> PolyC:
        return {
            "Jacobi": PolyC([1, 0, -1]),
            "Laguerre": PolyC([0, 1]),
            "BesselPoly": PolyC([0, 0, 1]),
            "HermitePoly": PolyC([1]),
        }[self.family]

    @property
    def kappa(self) -> PolyC:
        a, b, t = self.alpha, self.beta, self.theta
        return {
            "Jacobi": PolyC([b - a, -(a + b)]),
            "Laguerre": PolyC([a, -1]),
            "BesselPoly": PolyC([-1, t]),
            "HermitePoly": PolyC([0, -2]),
        }[self.family]

    @property
    def printed_kappa(self) -> PolyC:
        """Tabulated Jacobi form ``α(1−z)+β(1+z)`` (inconsistent with the weight)."""
        if self.family != "Jacobi":
            return self.kappa
        a, b = self.alpha, self.beta
        return PolyC([a + b, b - a])

    @property
    def params(self) -> EquationParams:
        return EquationParams(self.sigma, self.kappa)

    @property
    def interval(self) -> Optional[tuple[float, float]]:
        return {
            "Jacobi": (-1.0, 1.0),
            "Laguerre": (0.0, math.inf),
            "BesselPoly": None,
            "HermitePoly": (-math.inf, math.inf),
        }[self.family]

    def prefactor(self, n: int) -> complex:
        """Factor between the family polynomial and ``Pₙ(σ,κ)``."""
        if self.family == "Jacobi":
            return (-0.5) ** n
        if self.family == "HermitePoly":
            return (-1.0) ** n
        return 1.0

    def shifted(self, n: int) -> "FamilySpec":
        """Parameters of the ladder family ``κ₋ₙ = κ − nσ′``."""
        if self.family == "Jacobi":
            return FamilySpec("Jacobi", alpha=self.alpha - n, beta=self.beta - n)
        if self.family == "Laguerre":
            return FamilySpec("Laguerre", alpha=self.alpha - n)
        if self.family == "BesselPoly":
            return FamilySpec("BesselPoly", theta=self.theta - 2 * n)
        return self

    def label(self) -> str:
        if self.family == "Jacobi":
            return f"Jacobi(alpha={self.alpha}, beta={self.beta})"
        if self.family == "Laguerre":
            return f"Laguerre(alpha={self.alpha})"
        if self.family == "BesselPoly":
            return f"BesselPoly(theta={self.theta})"
        return "HermitePoly"

    def check_integrable(self) -> None:
        """Raise unless the weight has finite moments on the real interval.

        Raises
        ------
        NoOrthogonalityInterval
            For the Bessel family.
        NotApplicable
            When ``α ≤ −1`` or ``β ≤ −1`` (real parts).
        """
        if self.family == "BesselPoly":
            raise NoOrthogonalityInterval("Bessel polynomials have no real orthogonality interval")
        if self.family == "Jacobi" and (complex(self.alpha).real <= -1 or complex(self.beta).real <= -1):
            raise NotApplicable("Jacobi weight needs Re α > −1 and Re β > −1")
        if self.family == "Laguerre" and complex(self.alpha).real <= -1:
            raise NotApplicable("Laguerre weight needs Re α > −1")


# ---------------------------------------------------------------------------
# moments


def _fraction(x: complex) -> Optional[Fraction]:
    """Exact binary value of a real parameter, or ``None`` if it is complex."""
    x = complex(x)
    if x.imag != 0 or not math.isfinite(x.real):
        return None
    return Fraction(x.real)


@dataclass
class MomentTable:
    """Closed-form moments ``m_k = ∫ xᵏρ(x)dx`` of a family weight.

    Every moment is ``m₀`` times a rational function of the parameters:

    * Jacobi: ``m₀ = 2^{α+β+1}B(α+1,β+1)`` and, integrating ``(xᵏσρ)′`` by
      parts, ``(k+2+α+β)m_{k+1} = (β−α)m_k + k·m_{k−1}``;
    * Laguerre: ``m_k = Γ(α+k+1) = Γ(α+1)(α+1)_k``;
    * Hermite: ``m_k = Γ((k+1)/2)`` for even ``k``, 0 for odd ``k``.

    For real parameters the ratios ``m_k/m₀`` are kept as exact fractions
    (of the binary values of the parameters), so contractions against them
    are free of cancellation.

    Raises
    ------
    NoOrthogonalityInterval
        For the Bessel family.
    """

    weight: FamilySpec
    _ratios: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        self.weight.check_integrable()
        w = self.weight
        self._exact = all(_fraction(v) is not None for v in (w.alpha, w.beta))
        a, b = complex(w.alpha), complex(w.beta)
        if w.family == "Laguerre":
            self.m0 = complex(gamma(a + 1))
        elif w.family == "HermitePoly":
            self.m0 = complex(math.sqrt(math.pi))
        else:
            self.m0 = 2 ** (a + b + 1) * complex(beta_fn(a + 1, b + 1))

    @property
    def interval(self) -> tuple[float, float]:
        return self.weight.interval

    def _param(self, v):
        return _fraction(v) if self._exact else complex(v)

    def _extend(self, k: int) -> None:
        w = self.weight
        r = self._ratios
        a, b = self._param(w.alpha), self._param(w.beta)
        while len(r) <= k:
            j = len(r)
            if j == 0:
                r.append(Fraction(1) if self._exact else 1 + 0j)
            elif w.family == "Laguerre":
                r.append(r[j - 1] * (a + j))
            elif w.family == "HermitePoly":
                r.append(r[j - 2] * Fraction(j - 1, 2) if j % 2 == 0 else 0 * r[0])
            else:
                prev2 = r[j - 2] if j >= 2 else 0 * r[0]
                r.append(((b - a) * r[j - 1] + (j - 1) * prev2) / (j + 1 + a + b))

    def ratio(self, k: int):
        """``m_k/m₀`` (a :class:`~fractions.Fraction` for real parameters)."""
        if k < 0:
            raise ValueError("moment index must be non-negative")
        self._extend(k)
        return self._ratios[k]

    def moment(self, k: int) -> complex:
        return complex(self.ratio(k)) * self.m0

    def moments(self, count: int) -> list[complex]:
        return [self.moment(k) for k in range(count)]

    def integrate(self, p) -> complex:
        """``∫ p(x)ρ(x)dx`` by contraction with the moments.

        ``p`` is a :class:`PolyC` or a coefficient list (lowest degree first),
        possibly of :class:`~fractions.Fraction`; real coefficients are
        contracted exactly.
        """
        coeffs = p.to_list() if isinstance(p, PolyC) else list(p)
        if not coeffs:
            return 0j
        self._extend(len(coeffs) - 1)
        exact = self._exact and all(isinstance(c, Fraction) or complex(c).imag == 0 for c in coeffs)
        if exact:
            acc = sum(
                (c if isinstance(c, Fraction) else Fraction(complex(c).real)) * r
                for c, r in zip(coeffs, self._ratios)
            )
            return complex(float(acc)) * self.m0
        acc = sum(complex(c) * complex(r) for c, r in zip(coeffs, self._ratios))
        return acc * self.m0


# ---------------------------------------------------------------------------
# construction


def rodrigues(sigma: PolyLike, kappa: PolyLike, n: int) -> PolyC:
    """``Pₙ(σ,κ) = (1/n!)ρ⁻¹∂ⁿ(σⁿρ)`` with ``σρ′ = κρ``.

    Examples
    --------
    >>> rodrigues([1], [0, -2], 2).to_list()
    [(-1+0j), 0j, (2+0j)]
    >>> rodrigues([0, 1], [1, -1], 0).to_list()
    [(1+0j)]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    sigma, kappa = PolyC.coerce(sigma), PolyC.coerce(kappa)
    ds = sigma.deriv()
    p = PolyC.one()
    for k in range(n):
        p = (ds * (n - k) + kappa) * p + sigma * p.deriv()
    return p * (1 / math.factorial(n))


def jacobi_degree(alpha: complex, beta: complex, n: int) -> int:
    """Degree of ``Pₙ^{α,β}`` (``−1`` for the zero polynomial).

    * ``α+β ∉ {−2n,…,−n−1}``: degree ``n``;
    * ``α+β ∈ {−2n,…,−n−1}`` and ``α, β ∈ {−n,…,−1}``: the polynomial vanishes;
    * ``α+β ∈ {−2n,…,−n−1}`` otherwise: degree ``−α−β−n−1``.

    Membership of ``α`` alone does not decide the third case: for ``n = 2``,
    ``α = −1``, ``β = −3`` the polynomial is ``1 − x``.  See
    :func:`jacobi_degree_printed` for the rule that tests ``α`` only.

    Examples
    --------
    >>> jacobi_degree(0.5, -2.5, 1), jacobi_degree(-1, -1, 1), jacobi_degree(-1, -3, 2)
    (0, -1, 1)
    """
    s = _as_int(complex(alpha) + complex(beta))
    if n == 0 or s is None or not (-2 * n <= s <= -n - 1):
        return n
    a, b = _as_int(alpha), _as_int(beta)
    if a is not None and b is not None and -n <= a <= -1 and -n <= b <= -1:
        return -1
    return -s - n - 1


def jacobi_degree_printed(alpha: complex, beta: complex, n: int) -> int:
    """The case list that decides vanishing by ``α ∈ {−n,…,−1}`` alone.

    It agrees with :func:`jacobi_degree` except when exactly one of ``α``,
    ``β`` lies in ``{−n,…,−1}``.
    """
    s = _as_int(complex(alpha) + complex(beta))
    if n == 0 or s is None or not (-2 * n <= s <= -n - 1):
        return n
    a = _as_int(alpha)
    if a is not None and -n <= a <= -1:
        return -1
    return -s - n - 1


def _truncate(p: PolyC, degree: int) -> PolyC:
    if degree < 0:
        return PolyC.zero()
    return PolyC(p.to_list()[: degree + 1])


def classical_poly(spec: FamilySpec, n: int) -> PolyC:
    """The family polynomial of degree index ``n``.

    ===========  ============================================
    Jacobi       ``Pₙ^{α,β} = (−1/2)ⁿ Pₙ(σ,κ)``
    Laguerre     ``Lₙ^α = Pₙ(σ,κ)``
    BesselPoly   ``Bₙ^θ = Pₙ(σ,κ)``
    HermitePoly  ``Hₙ = (−1)ⁿ Pₙ(σ,κ)``  (generating function e^{2tx−t²})
    ===========  ============================================

    For Jacobi the degree rules of :func:`jacobi_degree` are enforced
    exactly: coefficients above the predicted degree, which cancel in exact
    arithmetic, are removed.

    Examples
    --------
    >>> classical_poly(FamilySpec.laguerre(2.0), 1).to_list()
    [(3+0j), (-1+0j)]
    >>> abs(classical_poly(FamilySpec.jacobi(0.5, 0.3), 3)(1.0) - 2.1875) < 1e-13
    True
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    p = rodrigues(spec.sigma, spec.kappa, n) * spec.prefactor(n)
    if spec.family == "Jacobi":
        p = _truncate(p, jacobi_degree(spec.alpha, spec.beta, n))
    return p


# -- exact (rational) polynomial arithmetic for real parameters ---------------------


def _q_add(p: list, q: list) -> list:
    out = [Fraction(0)] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return out


def _q_mul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _q_deriv(p: list) -> list:
    return [k * c for k, c in enumerate(p)][1:]


def _q_rodrigues(sigma: list, kappa: list, n: int) -> list:
    ds = _q_deriv(sigma)
    p = [Fraction(1)]
    for k in range(n):
        p = _q_add(_q_mul(_q_add([(n - k) * c for c in ds], kappa), p), _q_mul(sigma, _q_deriv(p)))
    return [c / math.factorial(n) for c in p]


def _exact_family_poly(spec: FamilySpec, n: int) -> Optional[list]:
    """:func:`classical_poly` in rational arithmetic (``None`` for complex parameters)."""
    if spec.family == "BesselPoly":
        return None
    sig = [Fraction(c.real) for c in spec.sigma.to_list()]
    kap = []
    for c in spec.kappa.to_list():
        f = _fraction(c)
        if f is None:
            return None
        kap.append(f)
    pre = {"Jacobi": Fraction(-1, 2) ** n, "HermitePoly": Fraction(-1) ** n}.get(spec.family, Fraction(1))
    p = [c * pre for c in _q_rodrigues(sig, kap, n)]
    if spec.family == "Jacobi":
        d = jacobi_degree(spec.alpha, spec.beta, n)
        p = p[: d + 1] if d >= 0 else []
    return p



def closed_form_poly(spec: FamilySpec, n: int) -> PolyC:
    """Hypergeometric closed form of the family polynomial.

    * Jacobi: ``(1+α)ₙ/n! · ₂F₁(−n, n+α+β+1; α+1; (1−x)/2)``
    * Laguerre: ``(1+α)ₙ/n! · ₁F₁(−n; 1+α; x)``
    * BesselPoly: ``(−1)ⁿ/n! · ₂F₀(−n, n+θ+1; −; x)``
    * HermitePoly: ``2ⁿ/n! · S(−n; x)``, i.e. ``Σ (−1)ᵏ(2x)^{n−2k}/(k!(n−2k)!)``

    The ₂F₁ and ₁F₁ forms need ``α ∉ {−1,…,−n}`` (their lower parameter).
    """
    a, b, t = spec.alpha, spec.beta, spec.theta
    if spec.family == "Jacobi":
        w = terminating_series_poly([-n, n + a + b + 1], [a + 1], n)
        return w.compose(PolyC([0.5, -0.5])) * (pochhammer(1 + a, n) / math.factorial(n))
    if spec.family == "Laguerre":
        return terminating_series_poly([-n], [a + 1], n) * (pochhammer(1 + a, n) / math.factorial(n))
    if spec.family == "BesselPoly":
        return terminating_series_poly([-n, n + t + 1], [], n) * ((-1) ** n / math.factorial(n))
    coeffs = [0j] * (n + 1)
    for k in range(n // 2 + 1):
        coeffs[n - 2 * k] = (-1) ** k * 2.0 ** (n - 2 * k) / (math.factorial(k) * math.factorial(n - 2 * k))
    return PolyC(coeffs)


def _rel_dist(p: PolyC, q: PolyC) -> float:
    scale = max(p.scale(), q.scale(), 1e-300)
    return (p - q).scale() / scale if not (p - q).is_zero() else 0.0


# ---------------------------------------------------------------------------
# differential equation and recurrences


def _pair(spec_or_pair) -> tuple[PolyC, PolyC, Optional[FamilySpec]]:
    if isinstance(spec_or_pair, FamilySpec):
        return spec_or_pair.sigma, spec_or_pair.kappa, spec_or_pair
    sigma, kappa = spec_or_pair
    return PolyC.coerce(sigma), PolyC.coerce(kappa), None


def eigen_residual(spec_or_pair, n: int) -> float:
    """Residual of ``(ℋ(σ,κ) − n(n+1)σ″/2 − (n+½)κ′)Pₙ = 0``.

    Applies the operator exactly to the polynomial and returns the largest
    coefficient magnitude of the result relative to the polynomial's own
    size, combined (by maximum) with the residual of the eigenvalue-degree
    relation ``n(n−1)σ″/2 + nτ′ + η = 0``.

    Examples
    --------
    >>> eigen_residual(FamilySpec.hermite(), 3)
    0.0
    """
    sigma, kappa, spec = _pair(spec_or_pair)
    p = classical_poly(spec, n) if spec is not None else rodrigues(sigma, kappa, n)
    s2 = 2 * sigma.coeff(2)
    k1 = kappa.coeff(1)
    params = EquationParams(sigma, kappa, -n * (n + 1) * s2 / 2 - (n + 0.5) * k1)
    con1 = n * (n - 1) * s2 / 2 + n * params.tau.coeff(1) + params.eta
    con1_res = abs(con1) / max(1.0, abs(s2) * n * n, abs(k1) * n)
    if p.is_zero():
        return con1_res
    out = hgc_operator(params).apply(p)
    num = out.num if hasattr(out, "num") else out
    res = PolyC.coerce(num).scale() / p.scale() if not PolyC.coerce(num).is_zero() else 0.0
    return max(res, con1_res)


@dataclass(frozen=True)
class RecurrenceReport:
    """Residuals of raising/lowering identities.

    ``residuals`` maps an identity name to the relative coefficient distance
    between its two sides; ``ratios`` holds the fitted constant
    ``lhs/rhs`` when the two sides are proportional (``None`` otherwise).
    """

    family: str
    n: int
    residuals: dict
    ratios: dict

    def max_residual(self, names: Optional[Sequence[str]] = None) -> float:
        keys = names if names is not None else list(self.residuals)
        return max((self.residuals[k] for k in keys), default=0.0)


def _fit_ratio(lhs: PolyC, rhs: PolyC) -> Optional[complex]:
    if rhs.is_zero() or lhs.is_zero():
        return None
    k = int(np.argmax([abs(c) for c in rhs.to_list()]))
    r = lhs.coeff(k) / rhs.coeff(k)
    if _rel_dist(lhs, rhs * r) > 1e-8:
        return None
    return r


def polynomial_recurrences(spec_or_pair, n: int) -> RecurrenceReport:
    """Verify raising and lowering identities as polynomial identities.

    Generic ladder (any ``(σ, κ)``, with ``κ₋ₙ = κ − nσ′``)::

        recur1:  (σ∂ + κ₋ₙ) Pₙ(σ,κ₋ₙ) = (n+1) Pₙ₊₁(σ,κ₋ₙ₋₁)
        recur2:  ∂Pₙ₊₁(σ,κ₋ₙ₋₁) = (nσ″/2 + κ₋ₙ′) Pₙ(σ,κ₋ₙ)

    Family identities (when a :class:`FamilySpec` is given, ``n ≥ 1``)::

        Jacobi   lower: ∂Pₙ^{α,β} = ((α+β+n+1)/2) P_{n−1}^{α+1,β+1}
                 raise: −½((1−x²)∂ + β−α−(α+β)x) Pₙ^{α,β} = (n+1) P_{n+1}^{α−1,β−1}
        Laguerre lower: ∂Lₙ^α = −L_{n−1}^{α+1}
                 raise: (x∂ + α − x) Lₙ^α = (n+1) L_{n+1}^{α−1}
        Bessel   lower: ∂Bₙ^θ = (n+θ+1) B_{n−1}^{θ+2}
                 raise: (z²∂ − 1 + θz) Bₙ^θ = (n+1) B_{n+1}^{θ−2}
        Hermite  lower: ∂Hₙ = 2Hₙ₋₁
                 raise: (−∂ + 2x) Hₙ = (n+1) Hₙ₊₁

    The Bessel pair is stated for the normalisation of
    :func:`classical_poly`; :func:`bessel_convention_report` measures the
    alternative sign conventions.
    """
    sigma, kappa, spec = _pair(spec_or_pair)
    ds = sigma.deriv()
    s2 = 2 * sigma.coeff(2)
    kn = kappa - ds * n
    kn1 = kappa - ds * (n + 1)
    pn = rodrigues(sigma, kn, n)
    pn1 = rodrigues(sigma, kn1, n + 1)
    residuals: dict = {}
    ratios: dict = {}

    def record(name, lhs, rhs):
        residuals[name] = _rel_dist(lhs, rhs)
        ratios[name] = _fit_ratio(lhs, rhs)

    record("recur1", sigma * pn.deriv() + kn * pn, pn1 * (n + 1))
    record("recur2", pn1.deriv(), pn * (n * s2 / 2 + kn.coeff(1)))
    if spec is None or n < 1:
        return RecurrenceReport("generic" if spec is None else spec.family, n, residuals, ratios)

    f = spec.family
    a, b, t = spec.alpha, spec.beta, spec.theta
    P = lambda s, m: classical_poly(s, m)  # noqa: E731
    x = PolyC.x()
    if f == "Jacobi":
        p = P(spec, n)
        record("lower", p.deriv(), P(FamilySpec.jacobi(a + 1, b + 1), n - 1) * ((a + b + n + 1) / 2))
        lhs = (PolyC([1, 0, -1]) * p.deriv() + PolyC([b - a, -(a + b)]) * p) * (-0.5)
        record("raise", lhs, P(FamilySpec.jacobi(a - 1, b - 1), n + 1) * (n + 1))
    elif f == "Laguerre":
        p = P(spec, n)
        record("lower", p.deriv(), -P(FamilySpec.laguerre(a + 1), n - 1))
        record("raise", x * p.deriv() + PolyC([a, -1]) * p, P(FamilySpec.laguerre(a - 1), n + 1) * (n + 1))
    elif f == "BesselPoly":
        p = P(spec, n)
        record("lower", p.deriv(), P(FamilySpec.bessel(t + 2), n - 1) * (n + t + 1))
        record("raise", x * x * p.deriv() + PolyC([-1, t]) * p, P(FamilySpec.bessel(t - 2), n + 1) * (n + 1))
        # forms as printed alongside the Bessel family
        record("lower_printed", p.deriv(), P(FamilySpec.bessel(t + 2), n - 1) * (-(n + t + 1)))
        record(
            "raise_printed", x * x * p.deriv() + PolyC([-1, -t]) * p, P(FamilySpec.bessel(t - 2), n + 1) * (-(n + 1))
        )
    else:
        p = P(spec, n)
        record("lower", p.deriv(), P(spec, n - 1) * 2)
        record("raise", -p.deriv() + x * p * 2, P(spec, n + 1) * (n + 1))
    return RecurrenceReport(f, n, residuals, ratios)


def bessel_convention_report(theta: complex, n: int) -> dict:
    """Compare the Bessel polynomial conventions.

    ``Bₙ`` is :func:`classical_poly` (Rodrigues with ``κ = −1+θz``).  The
    returned ratios ``Bₙ/other`` are ``None`` when the two are not
    proportional.

    * ``"2F0"``: ``(1/n!)₂F₀(−n, n+θ+1; −; z)`` — ratio ``(−1)ⁿ``;
    * ``"laguerre"``: ``(−z)ⁿ L_n^{−θ−2n−1}(−1/z)``;
    * ``"rodrigues_exp_minus"``: ``(1/n!)z^{−θ}e^{1/z}∂ⁿ(e^{−1/z}z^{θ+2n})``,
      i.e. the Rodrigues formula with weight ``z^θe^{−1/z}`` (``κ = 1+θz``).

    ``"equation"`` and ``"equation_half"`` are the relative residuals of
    ``(z²∂² + (−1+(2+θ)z)∂ − c·n(1+θ+n))Bₙ`` with ``c = 1`` and ``c = ½``.
    """
    b = classical_poly(FamilySpec.bessel(theta), n)
    f20 = terminating_series_poly([-n, n + theta + 1], [], n) * (1 / math.factorial(n))
    lag = classical_poly(FamilySpec.laguerre(-theta - 2 * n - 1), n)
    lc = lag.to_list() + [0j] * (n + 1 - len(lag.to_list()))
    lag_form = PolyC([(-1) ** (n + k) * lc[k] for k in range(n, -1, -1)])
    alt = rodrigues(PolyC([0, 0, 1]), PolyC([1, theta]), n)
    out = {}
    for name, q in (("2F0", f20), ("laguerre", lag_form), ("rodrigues_exp_minus", alt)):
        out[name] = {"ratio": _fit_ratio(b, q), "distance": _rel_dist(b, q)}
    x = PolyC.x()
    for name, c in (("equation", 1.0), ("equation_half", 0.5)):
        r = x * x * b.deriv(2) + PolyC([-1, 2 + theta]) * b.deriv() - b * (c * n * (1 + theta + n))
        out[name] = r.scale() / b.scale() if not r.is_zero() else 0.0
    return out


# ---------------------------------------------------------------------------
# generating functions (truncated power series in t with PolyC coefficients)

Series = list  # list[PolyC], index = power of t


def _s_mul(f: Series, g: Series, order: int) -> Series:
    out = [PolyC.zero() for _ in range(order + 1)]
    for i, fi in enumerate(f[: order + 1]):
        if fi.is_zero():
            continue
        for j, gj in enumerate(g[: order + 1 - i]):
            out[i + j] = out[i + j] + fi * gj
    return out


def _s_exp(g: Series, order: int) -> Series:
    """``exp(g)`` for ``g`` with vanishing constant term: ``f′ = g′f``."""
    if not g[0].is_zero():
        raise ValueError("constant term must vanish")
    g = g + [PolyC.zero()] * (order + 1 - len(g))
    f = [PolyC.one()] + [PolyC.zero()] * order
    for m in range(1, order + 1):
        acc = PolyC.zero()
        for k in range(1, m + 1):
            acc = acc + g[k] * f[m - k] * k
        f[m] = acc * (1 / m)
    return f


def _s_binom(u: Series, a: complex, order: int) -> Series:
    """``(1+u)^a`` for ``u`` with vanishing constant term."""
    out = [PolyC.one()] + [PolyC.zero()] * order
    power = [PolyC.one()] + [PolyC.zero()] * order
    c = 1 + 0j
    for k in range(1, order + 1):
        power = _s_mul(power, u, order)
        c *= (complex(a) - k + 1) / k
        if c == 0:
            break
        out = [o + p * c for o, p in zip(out, power)]
    return out


def _family_generating_series(spec: FamilySpec, order: int) -> Series:
    x = PolyC.x()
    zero = PolyC.zero()
    pad = lambda terms: list(terms) + [zero] * (order + 1 - len(terms))  # noqa: E731
    if spec.family == "HermitePoly":
        # e^{2tx − t²}
        return _s_exp(pad([zero, x * 2, PolyC([-1])]), order)
    if spec.family == "Laguerre":
        # e^{−tx}(1+t)^α
        e = _s_exp(pad([zero, -x]), order)
        return _s_mul(e, _s_binom(pad([zero, PolyC.one()]), spec.alpha, order), order)
    if spec.family == "Jacobi":
        # (1+t(1+x))^α (1−t(1−x))^β
        f1 = _s_binom(pad([zero, PolyC([1, 1])]), spec.alpha, order)
        f2 = _s_binom(pad([zero, PolyC([-1, 1])]), spec.beta, order)
        return _s_mul(f1, f2, order)
    # Bessel: (1+tx)^θ exp(−t/(1+tx)),  −t/(1+tx) = −Σ (−x)ᵏ t^{k+1}
    powx = pad([zero] + [-(PolyC([0, -1]) ** k) for k in range(order)])
    return _s_mul(_s_binom(pad([zero, x]), spec.theta, order), _s_exp(powx, order), order)


@dataclass(frozen=True)
class GeneratingReport:
    """Taylor coefficients of a generating function versus the ladder.

    ``expected[n]`` is the ladder polynomial the ``tⁿ`` coefficient should
    equal (Jacobi: ``2ⁿP_n^{α−n,β−n}``; Laguerre: ``L_n^{α−n}``; Bessel:
    ``B_n^{θ−2n}``; Hermite: ``Hₙ``).
    """

    family: str
    coefficients: list
    expected: list
    residuals: list

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)


def generating_expand(spec: FamilySpec, t_order: int) -> GeneratingReport:
    """Expand the family generating function to order ``t^{t_order}``.

    Examples
    --------
    >>> r = generating_expand(FamilySpec.hermite(), 2)
    >>> r.coefficients[2].to_list()
    [(-1+0j), 0j, (2+0j)]
    """
    if t_order < 1:
        raise ValueError("t_order must be at least 1")
    coeffs = _family_generating_series(spec, t_order)
    expected = []
    for n in range(t_order + 1):
        if spec.family == "HermitePoly":
            expected.append(classical_poly(spec, n))
        elif spec.family == "Jacobi":
            expected.append(classical_poly(spec.shifted(n), n) * 2.0**n)
        else:
            expected.append(classical_poly(spec.shifted(n), n))
    res = [_rel_dist(c, e) for c, e in zip(coeffs, expected)]
    return GeneratingReport(spec.family, coeffs, expected, res)


# ---------------------------------------------------------------------------
# inner products and norms

_TABLES: dict = {}


def _table(spec: FamilySpec) -> MomentTable:
    tab = _TABLES.get(spec)
    if tab is None:
        tab = _TABLES[spec] = MomentTable(spec)
    return tab


def inner_product_moments(p: PolyLike, q: PolyLike, spec: FamilySpec) -> complex:
    """``∫ p(x)q(x)ρ(x)dx`` over the family interval, from exact moments.

    No complex conjugation is applied.

    Raises
    ------
    NoOrthogonalityInterval
        For the Bessel family.

    Examples
    --------
    >>> abs(inner_product_moments([0, 1], [0, 1], FamilySpec.jacobi(0, 0)) - 2 / 3) < 1e-15
    True
    """
    return _table(spec).integrate(PolyC.coerce(p) * PolyC.coerce(q))


def _sigma_power_integral(spec: FamilySpec, n: int) -> complex:
    """``∫σⁿρ`` with ``σⁿ`` expanded exactly."""
    sig = [Fraction(c.real) for c in spec.sigma.to_list()]
    p = [Fraction(1)]
    for _ in range(n):
        p = _q_mul(p, sig)
    return _table(spec).integrate(p)


def pq1_norm(spec: FamilySpec, n: int) -> complex:
    """Square norm of the family polynomial from the general formula.

    ``∫Pₙ(σ,κ)²ρ = ((−1)ⁿ/n!) Πⱼ₌ₙ₊₁²ⁿ (κ′ + jσ″/2) ∫σⁿρ``,
    multiplied by the square of the family prefactor.  The product is
    ``∂ⁿPₙ``, the leading coefficient of ``Pₙ`` times ``n!``.
    """
    s2 = 2 * spec.sigma.coeff(2)
    k1 = spec.kappa.coeff(1)
    prod = 1 + 0j
    for j in range(n + 1, 2 * n + 1):
        prod *= k1 + j * s2 / 2
    base = (-1) ** n / math.factorial(n) * prod * _sigma_power_integral(spec, n)
    return base * spec.prefactor(n) ** 2


def pq1_norm_printed(spec: FamilySpec, n: int) -> complex:
    """The tabulated variant ``(1/n!) Πⱼ₌₁ⁿ (−κ′ + jσ″/2) ∫σⁿρ`` (times prefactor²).

    It agrees with :func:`pq1_norm` when ``σ″ = 0`` and differs otherwise.
    """
    s2 = 2 * spec.sigma.coeff(2)
    k1 = spec.kappa.coeff(1)
    prod = 1 + 0j
    for j in range(1, n + 1):
        prod *= -k1 + j * s2 / 2
    return prod / math.factorial(n) * _sigma_power_integral(spec, n) * spec.prefactor(n) ** 2


def family_norm(spec: FamilySpec, n: int) -> complex:
    """Closed-form square norm of the family polynomial.

    * Jacobi: ``2^{α+β+1}Γ(1+α+n)Γ(1+β+n) / ((1+2n+α+β) n! Γ(1+α+β+n))``
    * Laguerre: ``Γ(1+α+n)/n!``
    * Hermite: ``√π 2ⁿ/n!``
    """
    spec.check_integrable()
    a, b = complex(spec.alpha), complex(spec.beta)
    nf = math.factorial(n)
    if spec.family == "Jacobi":
        if n == 0:
            # (1+α+β)Γ(1+α+β) = Γ(2+α+β) stays finite at α+β = −1
            return 2 ** (a + b + 1) * gamma(1 + a) * gamma(1 + b) / gamma(2 + a + b)
        return (
            2 ** (a + b + 1)
            * gamma(1 + a + n)
            * gamma(1 + b + n)
            / ((1 + 2 * n + a + b) * nf * gamma(1 + a + b + n))
        )
    if spec.family == "Laguerre":
        return gamma(1 + a + n) / nf
    return math.sqrt(math.pi) * 2.0**n / nf


@dataclass(frozen=True)
class OrthogonalityReport:
    """Gram matrix of ``P₀ … P_{n_max}`` and its comparison with the norms."""

    family: str
    gram: np.ndarray
    off_diagonal: float
    pq1: list
    pq1_printed: list
    closed_form: list
    pq1_error: float
    closed_form_error: float

    def passed(self, tol: float = 1e-10) -> bool:
        return self.off_diagonal < tol and self.pq1_error < tol and self.closed_form_error < tol


def orthogonality_check(spec: FamilySpec, n_max: int) -> OrthogonalityReport:
    """Gram matrix from exact moments plus norm comparisons.

    For real parameters the polynomials are rebuilt in rational arithmetic
    (from the binary values of the parameters) so the Gram entries carry
    only the rounding of ``m₀``; complex parameters use
    :func:`inner_product_moments` on the floating-point polynomials.

    ``off_diagonal`` is ``max |G_ij|/√|G_ii G_jj|`` over ``i ≠ j``; the two
    errors are the largest relative differences between the diagonal and
    :func:`pq1_norm` / :func:`family_norm`.

    Raises
    ------
    NoOrthogonalityInterval
        For the Bessel family.
    """
    spec.check_integrable()
    exact = [_exact_family_poly(spec, n) for n in range(n_max + 1)]
    g = np.zeros((n_max + 1, n_max + 1), dtype=complex)
    tab = _table(spec)
    for i in range(n_max + 1):
        for j in range(i, n_max + 1):
            if exact[i] is not None:
                # rational coefficients: the contraction is exact up to the final rounding
                g[i, j] = tab.integrate(_q_mul(exact[i], exact[j]))
            else:
                g[i, j] = inner_product_moments(classical_poly(spec, i), classical_poly(spec, j), spec)
            g[j, i] = g[i, j]
    diag = np.abs(np.diag(g))
    off = 0.0
    for i in range(n_max + 1):
        for j in range(n_max + 1):
            if i != j:
                off = max(off, abs(g[i, j]) / math.sqrt(max(diag[i] * diag[j], 1e-300)))
    pq = [pq1_norm(spec, n) for n in range(n_max + 1)]
    pqp = [pq1_norm_printed(spec, n) for n in range(n_max + 1)]
    cf = [family_norm(spec, n) for n in range(n_max + 1)]
    rel = lambda u, v: abs(u - v) / max(abs(v), 1e-300)  # noqa: E731
    return OrthogonalityReport(
        spec.family,
        g,
        off,
        pq,
        pqp,
        cf,
        max(rel(g[n, n], pq[n]) for n in range(n_max + 1)),
        max(rel(g[n, n], cf[n]) for n in range(n_max + 1)),
    )


# ---------------------------------------------------------------------------
# tables


def poly_table(spec: FamilySpec, n_max: int) -> list[dict]:
    """Rows ``{"n", "degree", "coefficients"}`` for ``n = 0 … n_max``."""
    rows = []
    for n in range(n_max + 1):
        p = classical_poly(spec, n)
        rows.append({"n": n, "degree": p.degree() if not p.is_zero() else -1, "coefficients": p.to_list()})
    return rows


def table_to_csv(rows: list[dict]) -> str:
    """CSV with header ``n,degree,c0_re,c0_im,…``; floats formatted ``%.15e``."""
    width = max((len(r["coefficients"]) for r in rows), default=0)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = ["n", "degree"]
    for k in range(width):
        header += [f"c{k}_re", f"c{k}_im"]
    w.writerow(header)
    for r in rows:
        cs = list(r["coefficients"]) + [0j] * (width - len(r["coefficients"]))
        line = [str(r["n"]), str(r["degree"])]
        for c in cs:
            c = complex(c)
            line += ["%.15e" % c.real, "%.15e" % c.imag]
        w.writerow(line)
    return buf.getvalue()


def table_to_json(rows: list[dict], spec: Optional[FamilySpec] = None) -> str:
    """JSON document; complex numbers as ``[re, im]``, floats ``%.15e``."""
    from .serialize import dumps

    doc = {"family": spec.label() if spec is not None else None, "rows": rows}
    return dumps(doc)
