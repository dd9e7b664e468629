"""Operator identities of the hypergeometric class, checked as DiffOp equalities."""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from typing import Optional

from ..core import EquationParams, WeightForm, ladder_params, weight_form
from ..errors import NoExponent, NotApplicable
from ..polyc import PolyC
from .diffop import DiffOp, gauge_conjugate, mobius_substitute

SYMMETRY_KINDS = ("Basic", "Power", "Inversion")

#: Residual below which an operator identity counts as verified.
IDENTITY_TOL = 1e-10


def hgc_operator(params: EquationParams) -> DiffOp:
    """``ℋ(σ,κ) + ω = σ∂² + (σ′+κ)∂ + κ′/2 + ω``.

    Examples
    --------
    >>> from unihyper.core import zerof1_params
    >>> print(hgc_operator(zerof1_params(2.0)))
    z∂^2 + 2∂ - 1
    """
    return DiffOp.from_polys(PolyC([params.eta]), params.tau, params.sigma)


def lowering_op(params: EquationParams, n: complex) -> DiffOp:
    """``σ∂ + κₙ`` built from the ladder at index ``n``."""
    kn = ladder_params(params, n).kappa
    return DiffOp.from_polys(kn, params.sigma)


def casimir_restrict(params: EquationParams, n: complex) -> DiffOp:
    """Casimir operator restricted to ``N = n`` plus ω.

    ``σ∂² + (κ + σ′(n+1))∂ + σ″n(n+1)/2 + κ′(n+½) + ω``.
    """
    n = complex(n)
    s, k = params.sigma, params.kappa
    first = k + s.deriv() * (n + 1)
    const = params.s2 * n * (n + 1) / 2 + params.k1 * (n + 0.5) + params.omega
    return DiffOp.from_polys(PolyC([const]), first, s)


@dataclass(frozen=True)
class SymmetryReport:
    """Outcome of :func:`verify_symmetry`.

    Attributes
    ----------
    kind : str
    transformed_params : EquationParams
        Parameters of the right-hand side (in the new variable for Inversion).
    residual : float
        Relative coefficientwise residual of the operator identity.
    extra : dict
        Kind-specific data; for Inversion ``zeta`` and the residual obtained
        with the alternative (printed) exponent constant.
    """

    kind: str
    transformed_params: EquationParams
    residual: float
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.residual < IDENTITY_TOL


def power_transformed(params: EquationParams) -> EquationParams:
    """``(σ, κ°, ω°)`` with ``κ° = −m + (κ′ − mσ″)z`` and ``ω° = ω − mκ′ + m²σ″/2``."""
    _require_power(params)
    m = params.kappa.coeff(0)
    k1, s2 = params.k1, params.s2
    kappa = PolyC([-m, k1 - m * s2])
    omega = params.omega - m * k1 + m * m * s2 / 2
    return EquationParams(params.sigma, kappa, omega)


def _require_power(params: EquationParams) -> None:
    s = params.sigma
    if abs(s.coeff(0)) > 1e-14 * s.scale() or abs(s.coeff(1) - 1) > 1e-14:
        raise NotApplicable("power symmetry needs σ(0) = 0 and σ′(0) = 1")


def inversion_exponents(params: EquationParams, printed: bool = False, constant: Optional[complex] = None) -> list[complex]:
    """Roots ζ of the exponent equation of the inversion symmetry.

    The default equation is the indicial equation at infinity,

        (σ″/2)ζ² + (σ″/2 + κ′)ζ + κ′/2 + ω = 0,

    which is what makes the inversion identity hold.  With ``printed=True``
    the linear coefficient is ``σ″ + κ′`` instead, and ``constant`` replaces
    ``κ′/2`` (e.g. ``κ(0)/2``); these variants are kept for comparison.
    """
    s2, k1 = params.s2, params.k1
    c0 = (k1 / 2 if constant is None else constant) + params.omega
    a, b = s2 / 2, (s2 if printed else s2 / 2) + k1
    if a == 0:
        if b == 0:
            raise NoExponent("σ″ = κ′ = 0: the exponent equation has no root")
        return [-c0 / b]
    sq = cmath.sqrt(b * b - 4 * a * c0)
    # cancellation-free form, keeping the order (−b+√Δ)/2a, (−b−√Δ)/2a
    plus, minus = -b + sq, -b - sq
    if abs(plus) >= abs(minus):
        return [plus / (2 * a), 2 * c0 / plus if plus != 0 else 0j]
    return [2 * c0 / minus, minus / (2 * a)]


def inversion_transformed(params: EquationParams, zeta: complex, printed: bool = False) -> EquationParams:
    """``(σ^△, κ^△, ω^△)`` in the variable ``w = −1/z``.

    ``σ^△ = (σ″/2)w − σ′(0)w²`` and, by default,

        κ^△ = (κ(0) + (2ζ+1)σ′(0))w − σ″(ζ+½) − κ′
        ω^△ = −σ′(0)(ζ² + ζ + ½) − κ(0)(ζ+½)

    ``printed=True`` gives the alternative
    ``κ^△ = (κ(0)+2(ζ+1)σ′(0))w − σ″(1+ζ) − κ′``,
    ``ω^△ = −σ′(0)(1+ζ)² − κ(0)(ζ+½)``, which does not satisfy the identity.
    """
    s2, k1 = params.s2, params.k1
    sp0 = params.sigma.coeff(1)
    k0 = params.kappa.coeff(0)
    sigma = PolyC([0, s2 / 2, -sp0])
    if printed:
        kappa = PolyC([-s2 * (1 + zeta) - k1, k0 + 2 * (zeta + 1) * sp0])
        omega = -sp0 * (1 + zeta) ** 2 - k0 * (zeta + 0.5)
    else:
        kappa = PolyC([-s2 * (zeta + 0.5) - k1, k0 + (2 * zeta + 1) * sp0])
        omega = -sp0 * (zeta * zeta + zeta + 0.5) - k0 * (zeta + 0.5)
    return EquationParams(sigma, kappa, omega)


def _inversion_lhs(params: EquationParams, zeta: complex) -> DiffOp:
    """``−z^{1−ζ}(ℋ+ω)z^{ζ}`` rewritten in ``w = −1/z``."""
    op = gauge_conjugate(hgc_operator(params), WeightForm.power(0, -zeta))
    op = op.left_mul(PolyC([0, -1]))
    return mobius_substitute(op, (0, -1, 1, 0))


def verify_symmetry(kind: str, params: EquationParams, zeta_index: int = 0) -> SymmetryReport:
    """Check one of the three discrete symmetries as an operator identity.

    Parameters
    ----------
    kind : {"Basic", "Power", "Inversion"}
    params : EquationParams
    zeta_index : int
        Which root of the exponent equation to use for Inversion.

    Raises
    ------
    NotApplicable
        Preconditions of the chosen symmetry fail.
    NoExponent
        Inversion with σ″ = κ′ = 0.
    """
    op = hgc_operator(params)
    if kind == "Basic":
        rho = weight_form(params)
        lhs = gauge_conjugate(op, rho)
        new = EquationParams(params.sigma, -params.kappa, params.omega)
        return SymmetryReport(kind, new, lhs.distance(hgc_operator(new)))
    if kind == "Power":
        _require_power(params)
        m = params.kappa.coeff(0)
        lhs = gauge_conjugate(op, WeightForm.power(0, m))
        new = power_transformed(params)
        return SymmetryReport(kind, new, lhs.distance(hgc_operator(new)), {"m": m})
    if kind == "Inversion":
        s = params.sigma
        if abs(s.coeff(0)) > 1e-14 * s.scale():
            raise NotApplicable("inversion symmetry needs σ(0) = 0")
        if params.s2 == 0 and params.k1 == 0:
            raise NotApplicable("inversion symmetry needs σ″ ≠ 0 or κ′ ≠ 0")
        zetas = inversion_exponents(params)
        zeta = zetas[min(zeta_index, len(zetas) - 1)]
        new = inversion_transformed(params, zeta)
        residual = _inversion_lhs(params, zeta).distance(hgc_operator(new))
        # the printed variants: exponent equation with linear coefficient
        # σ″+κ′ (constant κ′/2 or κ(0)/2) and the printed κ^△, ω^△
        variants = {}
        for label, const in (("printed", None), ("printed_kappa0", params.kappa.coeff(0) / 2)):
            try:
                z2 = inversion_exponents(params, printed=True, constant=const)[0]
            except NoExponent:
                continue
            rhs = hgc_operator(inversion_transformed(params, z2, printed=True))
            variants[label + "_residual"] = _inversion_lhs(params, z2).distance(rhs)
        extra = {"zeta": zeta, "zetas": zetas, **variants}
        return SymmetryReport(kind, new, residual, extra)
    raise ValueError(f"unknown symmetry kind {kind!r}")


@dataclass(frozen=True)
class FactorizationReport:
    """Residuals of the two factorizations and two transmutations at index ``n``."""

    factor_residual_up: float
    factor_residual_down: float
    transmutation_residual_up: float
    transmutation_residual_down: float

    @property
    def passed(self) -> bool:
        return max(self.as_tuple()) < IDENTITY_TOL

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (
            self.factor_residual_up,
            self.factor_residual_down,
            self.transmutation_residual_up,
            self.transmutation_residual_down,
        )


def verify_factorization(params: EquationParams, n: complex) -> FactorizationReport:
    """Check the factorization and transmutation identities at ladder index ``n``.

    With ``ℋₙ = ℋ(σ,κₙ)+ωₙ``:

    * ``ℋₙ = (σ∂+κₙ₊₁)∂ + n(n+1)σ″/2 + (n+½)κ₀′ + ω₀``
    * ``ℋₙ = ∂(σ∂+κₙ) + n(n−1)σ″/2 + (n−½)κ₀′ + ω₀``
    * ``∂ℋₙ = ℋₙ₊₁∂``
    * ``(σ∂+κₙ₊₁)ℋₙ₊₁ = ℋₙ(σ∂+κₙ₊₁)``
    """
    n = complex(n)
    s2, k1, w0 = params.s2, params.k1, params.omega
    hn = hgc_operator(ladder_params(params, n))
    hn1 = hgc_operator(ladder_params(params, n + 1))
    d = DiffOp.d()
    low_n = lowering_op(params, n)
    low_n1 = lowering_op(params, n + 1)
    c_up = n * (n + 1) * s2 / 2 + (n + 0.5) * k1 + w0
    c_down = n * (n - 1) * s2 / 2 + (n - 0.5) * k1 + w0
    r1 = hn.distance(low_n1 @ d + c_up)
    r2 = hn.distance(d @ low_n + c_down)
    r3 = (d @ hn).distance(hn1 @ d)
    r4 = (low_n1 @ hn1).distance(hn @ low_n1)
    return FactorizationReport(r1, r2, r3, r4)


def descending_lowering_product(params: EquationParams, n: int) -> DiffOp:
    """``(σ∂+κ₋₍ₙ₋₁₎)⋯(σ∂+κ₋₁)(σ∂+κ₀)`` (``n`` factors, ``κ₀`` acts first).

    Each factor equals ``σ^{j+1}ρ₀⁻¹∂σ^{−j}ρ₀``, so the product telescopes to
    ``σⁿρ₀⁻¹∂ⁿρ₀``.
    """
    out = DiffOp.identity()
    for j in range(n):
        out = lowering_op(params, -j) @ out
    return out


def rodrigues_operator_residual(params: EquationParams, n: int, test_degree: int = 8) -> float:
    """Compare the lowering product with ``σⁿρ⁻¹∂ⁿρ`` on test polynomials.

    Both sides are applied to ``zᵏ`` for ``k ≤ test_degree``.  The right side
    is ``σⁿ`` times the conjugate ``ρ⁻¹∂ⁿρ = (∂ + κ/σ)ⁿ``.
    """
    lhs = descending_lowering_product(params, n)
    rho = weight_form(params)
    rhs = gauge_conjugate(DiffOp.d(n), rho, invert=True).left_mul(params.sigma**n)
    worst = 0.0
    for k in range(test_degree + 1):
        mono = PolyC([0] * k + [1])
        a = lhs.apply(mono)
        b = rhs.apply(mono)
        worst = max(worst, a.distance(b))
    return worst


def inversion_involution(params: EquationParams, zeta_index: int = 0) -> dict:
    """Apply the inversion symmetry twice.

    The exponent ``ζ`` of the first application is also a root of the
    exponent equation of the transformed parameters, and using it again
    returns ``−(σ, κ, ω)``, i.e. the same equation multiplied by ``−1``.
    Reusing ``ζ`` avoids re-solving the second exponent equation, whose
    roots are ill-conditioned when they nearly coincide.

    Returns
    -------
    dict
        ``first_residual``/``second_residual`` (operator identities),
        ``exponent_residual`` (``ζ`` in the second exponent equation),
        ``zeta``, ``returns_up_to_sign`` and ``returns_exactly``.
    """
    first = verify_symmetry("Inversion", params, zeta_index)
    zeta = first.extra["zeta"]
    mid = first.transformed_params
    back = inversion_transformed(mid, zeta)
    second_residual = _inversion_lhs(mid, zeta).distance(hgc_operator(back))
    a, b, c0 = mid.s2 / 2, mid.s2 / 2 + mid.k1, mid.k1 / 2 + mid.omega
    scale = max(abs(a * zeta * zeta), abs(b * zeta), abs(c0), 1e-300)
    return {
        "first_residual": first.residual,
        "second_residual": second_residual,
        "exponent_residual": abs(a * zeta * zeta + b * zeta + c0) / scale,
        "zeta": zeta,
        "returns_up_to_sign": back.scaled(-1).isclose(params, 1e-10),
        "returns_exactly": back.isclose(params, 1e-10),
    }


def classical_symmetry_maps(a: complex, b: complex, c: complex) -> dict:
    """Per-type parameter maps of the classical equations as operator identities.

    Each entry transforms the operator of one classical type by a gauge
    factor and a change of variable and compares it with the operator of the
    mapped parameters.  Operators are compared up to an overall factor
    ``±1`` (the same equation); the factor found is reported.

    ======================  ==========================================  ==============================
    name                    transformation                              result
    ======================  ==========================================  ==============================
    2F1 basic               z^{c−1}(1−z)^{a+b−c}                        F(1−b,1−a;2−c)
    2F1 power               z^{c−1}                                     F(b+1−c,a+1−c;2−c)
    2F1 inversion           z^{a}, then w = 1/z                         F(a,a−c+1;a−b+1)
    1F1 basic               z^{c−1}e^{−z}, then w = −z                  𝐅(1−a;2−c)
    1F1 power               z^{c−1}                                     𝐅(1+a−c;2−c)
    1F1 inversion           z^{a}, then w = −1/z                        F(a,1+a−c;−)
    2F0 basic               z^{a+b−1}e^{1/z}, then w = −z               F(1−b,1−a;−)
    2F0 inversion           z^{a}, then w = −1/z                        𝐅(a;1+a−b)
    0F1 basic               z^{c−1}                                     𝐅(2−c)
    Hermite basic (±)       e^{−z²}, then w = ∓iz                       S(1−a)
    ======================  ==========================================  ==============================

    Returns
    -------
    dict
        ``name -> (residual, sign)``.
    """
    from ..core import gauss2f1_params, hermite_params, kummer1f1_params, twof0_params, zerof1_params

    a, b, c = complex(a), complex(b), complex(c)
    W = WeightForm
    z, mz = PolyC([0, 1]), PolyC([0, -1])

    def compare(lhs: DiffOp, params: EquationParams):
        rhs = hgc_operator(params)
        plus, minus = lhs.distance(rhs), lhs.distance(rhs * (-1))
        return (plus, 1) if plus <= minus else (minus, -1)

    out = {}
    F = hgc_operator(gauss2f1_params(a, b, c))
    out["2F1 basic"] = compare(gauge_conjugate(F, W(((0, c - 1), (1, a + b - c)))), gauss2f1_params(1 - b, 1 - a, 2 - c))
    out["2F1 power"] = compare(gauge_conjugate(F, W.power(0, c - 1)), gauss2f1_params(b + 1 - c, a + 1 - c, 2 - c))
    lhs = mobius_substitute(gauge_conjugate(F, W.power(0, a)).left_mul(mz), (0, 1, 1, 0))
    out["2F1 inversion"] = compare(lhs, gauss2f1_params(a, a - c + 1, a - b + 1))
    K = hgc_operator(kummer1f1_params(a, c))
    lhs = mobius_substitute(gauge_conjugate(K, W(((0, c - 1),), exp_poly=mz)), (-1, 0, 0, 1))
    out["1F1 basic"] = compare(lhs, kummer1f1_params(1 - a, 2 - c))
    out["1F1 power"] = compare(gauge_conjugate(K, W.power(0, c - 1)), kummer1f1_params(1 + a - c, 2 - c))
    lhs = mobius_substitute(gauge_conjugate(K, W.power(0, a)).left_mul(z), (0, -1, 1, 0))
    out["1F1 inversion"] = compare(lhs, twof0_params(a, 1 + a - c))
    T = hgc_operator(twof0_params(a, b))
    lhs = mobius_substitute(gauge_conjugate(T, W(((0, a + b - 1),), exp_pole=(0, 1))), (-1, 0, 0, 1))
    out["2F0 basic"] = compare(lhs, twof0_params(1 - b, 1 - a))
    lhs = mobius_substitute(gauge_conjugate(T, W.power(0, a)).left_mul(z), (0, -1, 1, 0))
    out["2F0 inversion"] = compare(lhs, kummer1f1_params(a, 1 + a - b))
    out["0F1 basic"] = compare(gauge_conjugate(hgc_operator(zerof1_params(c)), W.power(0, c - 1)), zerof1_params(2 - c))
    S = hgc_operator(hermite_params(a))
    for sgn, label in ((1, "+"), (-1, "-")):
        lhs = mobius_substitute(gauge_conjugate(S, W(exp_poly=PolyC([0, 0, -1]))), (-sgn * 1j, 0, 0, 1))
        out[f"Hermite basic ({label})"] = compare(lhs, hermite_params(1 - a))
    return out
