"""Series and closed-form evaluation.

The unified hypergeometric function is the solution of
``(ℋ(σ,κ)+ω)F = 0`` regular at the singular point ``z = 0`` of ``σ``,
normalised by ``F(0) = 1``:

    F(σ,κ,ω;z) = Σₙ Πⱼ₌₀ⁿ⁻¹ (ω + (j+½)κ′ + j(j+1)σ″/2)
                     / Πⱼ₌₀ⁿ⁻¹ (κ(0) + (j+1)σ′(0))  · (−z)ⁿ/n!.

Olver's normalisation ``𝐅 = F/Γ(1+m)`` with ``m = κ(0)`` (for ``σ′(0)=1``)
is entire in the parameters.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Sequence

import numpy as np

from .core import EquationParams, ladder_params, zerof1_params
from .elementary import powexp
from .errors import (
    AsymptoticOnly,
    BranchCut,
    DomainError,
    NoConvergence,
    NotApplicable,
    PoleError,
    PoleInParameters,
)
from .gammafn import gamma, is_nonpositive_integer, pochhammer, rgamma
from .polyc import PolyC

__all__ = [
    "EvalResult",
    "DegenerateParams",
    "unified_F",
    "unified_coefficients",
    "olver_F",
    "olver_coefficients",
    "eval_classical",
    "terminating_series_poly",
    "f20_general",
    "f20_partial_sum",
    "f20_kummer",
    "powexp",
    "chebyshev_eval",
    "chebyshev_check",
    "chebyshev_candidate",
    "chebyshev_residual",
    "degenerate_proportionality",
    "basic_pair_residuals",
    "CLASSICAL_TAGS",
    "CHEBYSHEV_KINDS",
]

#: Default relative tolerance of the series termination test.
SERIES_TOL = 1e-14
#: Default term budget.
MAX_TERMS = 10000
#: Number of consecutive small terms required to stop.
HYSTERESIS = 3
#: Fraction of the distance to the second root of σ accepted by the series.
RADIUS_FRACTION = 0.95


@dataclass(frozen=True)
class EvalResult:
    """A function value with provenance.

    Attributes
    ----------
    value : complex
    terms_used : int
    truncation_estimate : float
        Magnitude of the first omitted term (series) or the quadrature
        error estimate (integrals).
    method : str
        One of ``"Series"``, ``"Integral"``, ``"ClosedForm"``, ``"Continuation"``.
    """

    value: complex
    terms_used: int
    truncation_estimate: float
    method: str

    def __post_init__(self):
        if self.truncation_estimate < 0:
            raise ValueError("truncation_estimate must be non-negative")
        if self.method == "Series" and self.terms_used < 1:
            raise ValueError("a series uses at least one term")

    def __complex__(self) -> complex:
        return complex(self.value)


# ---------------------------------------------------------------------------
# summation driver


def _falling(n: int, k: int) -> float:
    out = 1.0
    for j in range(k):
        out *= n - j
    return out


def _sum_series(
    coef: Callable[[int, complex], complex],
    c0: complex,
    n0: int,
    z: complex,
    order: int,
    tol: float,
    max_terms: int,
    last: Optional[int] = None,
) -> EvalResult:
    """Sum ``Σ_{n≥n0} cₙ zⁿ`` (or its ``order``-th derivative).

    ``coef(n, cₙ)`` returns ``cₙ₊₁``.  ``last`` is the final index of a
    terminating series.
    """
    z = complex(z)
    total = 0j
    c = complex(c0)
    n = n0
    small = 0
    used = 0

    def term(n, c):
        if n < order:
            return 0j
        k = n - order
        return c * _falling(n, order) * (z ** k if k else 1)

    while True:
        t = term(n, c)
        total += t
        used += 1
        if last is not None and n >= last:
            return EvalResult(total, used, 0.0, "Series")
        c = coef(n, c)
        n += 1
        if n > order or order == 0:
            if abs(t) <= tol * abs(total) and n - n0 > order:
                small += 1
            else:
                small = 0
        if small >= HYSTERESIS:
            return EvalResult(total, used, abs(term(n, c)), "Series")
        if used >= max_terms:
            raise NoConvergence(f"series not converged after {used} terms", best=total)


def _integer_root(q: Sequence[complex], tol: float = 1e-10) -> Optional[int]:
    """Smallest non-negative integer root of the polynomial ``q`` (low→high)."""
    p = PolyC(list(q))
    if p.is_zero():
        return 0
    best = None
    for r in p.roots():
        k = round(r.real)
        if k >= 0 and abs(r - k) <= tol * (1 + abs(r)):
            best = k if best is None else min(best, k)
    return best


def _numerator_poly(params: EquationParams) -> list[complex]:
    """``q(j) = ω + (j+½)κ′ + j(j+1)σ″/2`` as coefficients in ``j``."""
    s2, k1 = params.s2, params.k1
    return [params.omega + k1 / 2, k1 + s2 / 2, s2 / 2]


def _num(params: EquationParams, j: int) -> complex:
    return params.omega + (j + 0.5) * params.k1 + j * (j + 1) * params.s2 / 2


def _check_singular_point(params: EquationParams) -> None:
    sig = params.sigma
    if abs(sig.coeff(0)) > 1e-14 * max(1.0, sig.scale()):
        raise NotApplicable("the series is built at a root of σ: σ(0) must vanish")


def _radius_guard(params: EquationParams, z: complex, s1: complex) -> None:
    s2 = params.s2
    if s2 != 0 and s1 != 0:
        root = -2 * s1 / s2
        if abs(z) >= RADIUS_FRACTION * abs(root):
            raise NoConvergence(
                f"|z| = {abs(z):.4g} is beyond the series guard {RADIUS_FRACTION}·|{root:.4g}|; "
                "use an integral representation instead",
                best=None,
            )


def unified_coefficients(params: EquationParams, count: int) -> list[complex]:
    """First ``count`` Taylor coefficients of ``F(σ,κ,ω;·)`` at 0."""
    _check_singular_point(params)
    s1, k0 = params.sigma.coeff(1), params.kappa.coeff(0)
    out = [1 + 0j]
    for j in range(count - 1):
        num = _num(params, j)
        if num == 0:
            out.extend([0j] * (count - 1 - j))
            break
        den = k0 + (j + 1) * s1
        if den == 0:
            raise PoleInParameters(f"κ(0)+(j+1)σ′(0) vanishes at j = {j}")
        out.append(-out[-1] * num / (den * (j + 1)))
    return out


def unified_F(
    params: EquationParams,
    z: complex,
    tol: float = SERIES_TOL,
    max_terms: int = MAX_TERMS,
    order: int = 0,
) -> EvalResult:
    """The unified hypergeometric function ``F(σ,κ,ω;z)`` by its power series.

    Parameters
    ----------
    params : EquationParams
        Must satisfy ``σ(0) = 0``.
    z : complex
    tol : float
        Stop after three consecutive terms below ``tol·|partial sum|``.
    max_terms : int
    order : int
        Return the ``order``-th derivative (termwise differentiation).

    Raises
    ------
    PoleInParameters
        ``κ(0)+(j+1)σ′(0) = 0`` for a needed ``j``.
    AsymptoticOnly
        ``σ′(0) = 0`` and the series does not terminate.
    NoConvergence
        ``|z|`` beyond ``0.95·|second root of σ|`` or term budget exhausted.

    Examples
    --------
    >>> from unihyper.core import gauss2f1_params
    >>> r = unified_F(gauss2f1_params(1, 1, 2), 0.5)
    >>> abs(r.value - 2 * math.log(2)) < 1e-13
    True
    """
    _check_singular_point(params)
    z = complex(z)
    s1, k0 = params.sigma.coeff(1), params.kappa.coeff(0)
    last = _integer_root(_numerator_poly(params))
    if s1 == 0:
        if last is None:
            raise AsymptoticOnly("σ′(0) = 0: the series diverges; use f20_general")
        if k0 == 0 and last > 0:
            raise PoleInParameters("κ(0) = σ′(0) = 0")
    else:
        jp = -k0 / s1 - 1
        kp = round(jp.real)
        if kp >= 0 and abs(jp - kp) <= 1e-12 * (1 + abs(jp)) and (last is None or kp < last):
            raise PoleInParameters(f"κ(0)+(j+1)σ′(0) vanishes at j = {kp}")
    if last is None:
        _radius_guard(params, z, s1)

    def coef(n, c):
        return -c * _num(params, n) / ((k0 + (n + 1) * s1) * (n + 1))

    return _sum_series(coef, 1, 0, z, order, tol, max_terms, last)


def _normalized(params: EquationParams) -> tuple[EquationParams, complex]:
    """Rescale so that ``σ′(0) = 1``; returns the new params and the factor ``s``.

    With ``x = s·z``: ``σ̃(x) = σ(x/s)``, ``κ̃(x) = κ(x/s)/s``, ``ω̃ = ω/s²``.
    """
    s = params.sigma.coeff(1)
    if s == 0:
        raise NotApplicable("Olver's normalisation needs σ′(0) ≠ 0")
    if s == 1:
        return params, 1 + 0j
    sig = params.sigma
    new = EquationParams(
        PolyC([0, 1, sig.coeff(2) / (s * s)]),
        PolyC([params.kappa.coeff(0) / s, params.kappa.coeff(1) / (s * s)]),
        params.omega / (s * s),
    )
    return new, s


def olver_coefficients(params: EquationParams, count: int) -> tuple[int, list[complex]]:
    """``(n0, [c_{n0}, c_{n0+1}, …])``: Taylor coefficients of ``𝐅`` (σ′(0) = 1)."""
    m = params.kappa.coeff(0)
    n0 = -round(m.real) if is_nonpositive_integer(m, 1e-12) else 0
    c = 1 + 0j
    for j in range(n0):
        c *= -_num(params, j) / (j + 1)
    c *= rgamma(m + n0 + 1) if n0 == 0 else 1.0
    out = [c]
    for n in range(n0, n0 + count - 1):
        out.append(-out[-1] * _num(params, n) / ((m + n + 1) * (n + 1)))
    return n0, out


def olver_F(
    params: EquationParams,
    z: complex,
    tol: float = SERIES_TOL,
    max_terms: int = MAX_TERMS,
    order: int = 0,
) -> EvalResult:
    """Olver-normalised function ``𝐅(σ,κ,ω;z) = F(σ,κ,ω;z)/Γ(1+m)``.

    ``m = κ(0)/σ′(0)``.  Summation starts at ``n = max(0, −m)`` so that
    negative integer ``m`` needs no special treatment.  If ``σ′(0) ≠ 1`` the
    equation is first rescaled by ``x = σ′(0)·z``.

    Examples
    --------
    >>> r = olver_F(zerof1_params(1.5), 1.0)
    >>> abs(r.value - math.sinh(2) / math.sqrt(math.pi)) < 1e-13
    True
    """
    _check_singular_point(params)
    params, s = _normalized(params)
    x = complex(z) * s
    m = params.kappa.coeff(0)
    last = _integer_root(_numerator_poly(params))
    if last is None:
        _radius_guard(params, x, 1)
    n0 = -round(m.real) if is_nonpositive_integer(m, 1e-12) else 0
    if last is not None and last < n0:
        return EvalResult(0j, 1, 0.0, "Series")
    c0 = 1 + 0j
    for j in range(n0):
        c0 *= -_num(params, j) / (j + 1)
    if n0 == 0:
        c0 *= rgamma(m + 1)

    def coef(n, c):
        return -c * _num(params, n) / ((m + n + 1) * (n + 1))

    res = _sum_series(coef, c0, n0, x, order, tol, max_terms, last)
    if order:
        res = EvalResult(res.value * s ** order, res.terms_used, res.truncation_estimate * abs(s) ** order, res.method)
    return res


# ---------------------------------------------------------------------------
# classical series

CLASSICAL_TAGS = (
    "Gauss2F1",
    "Gauss2F1Olver",
    "Kummer1F1",
    "Kummer1F1Olver",
    "ZeroF1",
    "ZeroF1Olver",
    "TwoF0",
    "HermiteS",
)


def _pfq(num: Sequence[complex], den: Optional[complex], z: complex, olver: bool,
         tol: float = SERIES_TOL, max_terms: int = MAX_TERMS) -> EvalResult:
    """``Σ Π(aᵢ)ₙ / (c)ₙ · zⁿ/n!`` (or with ``1/Γ(c+n)`` when ``olver``)."""
    num = [complex(a) for a in num]
    last = None
    for a in num:
        if is_nonpositive_integer(a):
            k = -round(a.real)
            last = k if last is None else min(last, k)
    n0 = 0
    c0 = 1 + 0j
    if den is not None:
        c = complex(den)
        if is_nonpositive_integer(c):
            if olver:
                n0 = 1 - round(c.real)
                if last is not None and last < n0:
                    return EvalResult(0j, 1, 0.0, "Series")
                c0 = 1 + 0j
                for a in num:
                    c0 *= pochhammer(a, n0)
                c0 /= math.factorial(n0)  # Γ(c+n0) = Γ(1) = 1
            elif last is None or last >= 1 - round(c.real):
                raise PoleInParameters(f"(c)ₙ vanishes for c = {c}")
        elif olver:
            c0 = rgamma(c)

    def coef(n, cn):
        r = cn
        for a in num:
            r *= a + n
        if den is not None:
            r /= den + n
        return r / (n + 1)

    return _sum_series(coef, c0, n0, z, 0, tol, max_terms, last)


def terminating_series_poly(num: Sequence[complex], den: Sequence[complex], n: int) -> PolyC:
    """Coefficients of ``Σⱼ₌₀ⁿ Π(aᵢ)ⱼ / Π(cᵢ)ⱼ · wʲ/j!`` as a polynomial in ``w``.

    This is the terminating hypergeometric series when one numerator
    parameter equals ``−n``; the sum is cut at ``j = n`` in every case.

    Raises
    ------
    PoleInParameters
        If a denominator Pochhammer symbol vanishes before ``j = n``.

    Examples
    --------
    >>> terminating_series_poly([-2, 3], [1], 2).to_list()
    [(1+0j), (-6+0j), (6+0j)]
    """
    coeffs = [1 + 0j]
    c = 1 + 0j
    for j in range(n):
        d = (j + 1) + 0j
        for b in den:
            d *= complex(b) + j
        if d == 0:
            raise PoleInParameters(f"denominator parameters {list(den)} hit a pole at j = {j}")
        for a in num:
            c *= complex(a) + j
        c /= d
        coeffs.append(c)
    return PolyC(coeffs)


def eval_classical(type_tag: str, named_params: dict, z: complex) -> EvalResult:
    """Dedicated series of the classical types.

    Parameters
    ----------
    type_tag : str
        One of :data:`CLASSICAL_TAGS`.  ``…Olver`` variants divide by ``Γ(c)``.
    named_params : dict
        ``a, b, c`` as appropriate; ``HermiteS`` takes ``a``.
    z : complex

    Raises
    ------
    DomainError
        ``Gauss2F1`` with ``|z| ≥ 1``; ``HermiteS`` with ``z ∈ (−∞, 0]``.

    Examples
    --------
    >>> r = eval_classical("Kummer1F1", {"a": 2.5, "c": 2.5}, 1.0)
    >>> abs(r.value - math.e) < 1e-14
    True
    """
    p = {k: complex(v) for k, v in named_params.items()}
    z = complex(z)
    if type_tag in ("Gauss2F1", "Gauss2F1Olver"):
        terminating = is_nonpositive_integer(p["a"]) or is_nonpositive_integer(p["b"])
        if abs(z) >= 1 and not terminating:
            raise DomainError("₂F₁ series needs |z| < 1; use the Euler integral representation")
        return _pfq([p["a"], p["b"]], p["c"], z, type_tag.endswith("Olver"))
    if type_tag in ("Kummer1F1", "Kummer1F1Olver"):
        return _pfq([p["a"]], p["c"], z, type_tag.endswith("Olver"))
    if type_tag in ("ZeroF1", "ZeroF1Olver"):
        return _pfq([], p["c"], z, type_tag.endswith("Olver"))
    if type_tag == "TwoF0":
        return f20_general(p["a"], p["b"], z)
    if type_tag == "HermiteS":
        a = p["a"]
        if z.imag == 0 and z.real <= 0:
            raise DomainError("S(a;z) is defined for z ∉ (−∞, 0]")
        inner = f20_general(a / 2, (a + 1) / 2, -1 / (z * z))
        val = cmath.exp(-a * cmath.log(z)) * inner.value
        return EvalResult(val, inner.terms_used, inner.truncation_estimate * abs(val / inner.value) if inner.value else 0.0, inner.method)
    raise ValueError(f"unknown classical type {type_tag!r}")


# ---------------------------------------------------------------------------
# ₂F₀


def f20_partial_sum(a: complex, b: complex, w: complex, n: int) -> complex:
    """``Σ_{j=0}^{n} (a)ⱼ(b)ⱼ wʲ/j!``."""
    total, t = 0j, 1 + 0j
    for j in range(n + 1):
        total += t
        t *= (a + j) * (b + j) * w / (j + 1)
    return total


def f20_kummer(a: complex, b: complex, w: complex) -> complex:
    """``F(a,b;−;w)`` through Kummer's function of the second kind.

    ``F(a,b;−;w) = x^a U(a, 1+a−b, x)`` with ``x = −1/w`` and

        U(a,c,x) = π/sin(πc) · (𝐅(a;c;x)/Γ(a−c+1) − x^{1−c}𝐅(a−c+1;2−c;x)/Γ(a)),

    built from two convergent ₁F₁ series.  It is independent of the
    quadrature used by :func:`f20_general`; ``c = 1+a−b`` must not be an
    integer and ``|w|`` should not be small (the ₁F₁ series cancel).

    Raises
    ------
    NotApplicable
        If ``a − b`` is an integer.
    """
    a, b, w = complex(a), complex(b), complex(w)
    _check_cut(w)
    c = 1 + a - b
    if abs(c - round(c.real)) < 1e-12:
        raise NotApplicable("the connection formula needs a − b ∉ ℤ")
    x = -1 / w
    m1 = eval_classical("Kummer1F1Olver", {"a": a, "c": c}, x).value
    m2 = eval_classical("Kummer1F1Olver", {"a": a - c + 1, "c": 2 - c}, x).value
    u = math.pi / cmath.sin(math.pi * c) * (m1 * rgamma(a - c + 1) - cmath.exp((1 - c) * cmath.log(x)) * m2 * rgamma(a))
    return cmath.exp(a * cmath.log(x)) * u


def _de_nodes(level: int):
    """tanh-sinh nodes on [0,1] and exp-sinh nodes on [1,∞) at a level."""
    h = 2.0 ** -level
    t = np.arange(-math.floor(6.0 / h), math.floor(6.0 / h) + 1) * h
    u = 0.5 * math.pi * np.sinh(t)
    with np.errstate(over="ignore"):
        x1 = 1 / (1 + np.exp(-2 * u))
        w1 = 0.5 * 0.5 * math.pi * np.cosh(t) / np.cosh(u) ** 2 * h
    t2 = np.arange(math.ceil(-6.7 / h), math.floor(4.5 / h) + 1) * h
    u2 = 0.5 * math.pi * np.sinh(t2)
    r = np.exp(u2)
    x2 = 1 + r
    w2 = 0.5 * math.pi * np.cosh(t2) * r * h
    return x1, w1, x2, w2


def _gamma_f20(a: complex, b: complex, w: np.ndarray, tol: float = 1e-14) -> np.ndarray:
    """``∫₀^∞ e^{−t}t^{a−1}(1−wt)^{−b}dt = Γ(a)F(a,b;−;w)`` for ``Re a > 0``.

    The integral over ``[0,1]`` is regularised by subtracting the value of
    the smooth factor at ``t = 0``, so small ``Re a`` is handled accurately.
    Vectorised over ``w``.
    """
    w = np.atleast_1d(np.asarray(w, dtype=complex))[:, None]
    prev = None
    for level in range(3, 11):
        x1, w1, x2, w2 = _de_nodes(level)
        with np.errstate(all="ignore"):
            g1 = np.expm1(-x1 - b * np.log1p(-w * x1))
            p1 = np.sum(w1 * np.exp((a - 1) * np.log(x1)) * g1, axis=1)
            lg2 = (a - 1) * np.log(x2) - x2 - b * np.log1p(-w * x2)
            v2 = np.where(np.isfinite(lg2), np.exp(lg2), 0)
            p2 = np.sum(w2 * v2, axis=1)
        val = p1 + 1 / a + p2
        if prev is not None:
            err = np.max(np.abs(val - prev) / np.maximum(np.abs(val), 1e-300))
            if err < tol or (level >= 6 and err < 1e-12):
                return val
        prev = val
    raise NoConvergence("₂F₀ integral did not converge", best=complex(val[0]))


def _check_cut(w: complex) -> None:
    if w.imag == 0 and w.real > 0:
        raise BranchCut("₂F₀(a,b;−;w) has a cut along w ∈ [0, ∞)")


def f20_general(a: complex, b: complex, w: complex, method: str = "auto", shift: Optional[int] = None) -> EvalResult:
    """``F(a,b;−;w) = lim_{c→∞} F(a,b;c;cw)`` on ``ℂ∖[0,∞)``.

    Parameters
    ----------
    a, b, w : complex
    method : {"auto", "integral", "shift"}
        ``auto`` uses the terminating sum when ``a`` or ``b`` is a
        non-positive integer, the Laplace-type integral when ``Re a > 0`` and
        the index shift otherwise.
    shift : int, optional
        Number of index shifts for ``method="shift"`` (default: the smallest
        ``n ≥ 1`` with ``Re(a+n) > 0``).

    Raises
    ------
    BranchCut
        ``w ∈ [0,∞)`` for a non-terminating function.

    Examples
    --------
    >>> abs(f20_general(-1, 3, 0.25).value - 0.25)
    0.0
    """
    a, b, w = complex(a), complex(b), complex(w)
    for p, q in ((a, b), (b, a)):
        if is_nonpositive_integer(p):
            k = -round(p.real)
            return EvalResult(f20_partial_sum(p, q, w, k), k + 1, 0.0, "Series")
    if w == 0:
        return EvalResult(1 + 0j, 1, 0.0, "Series")
    _check_cut(w)
    if method == "auto":
        method = "integral" if a.real > 0 else "shift"
    if method == "integral":
        if a.real <= 0:
            raise NotApplicable("the integral representation needs Re a > 0")
        val = _gamma_f20(a, b, np.array([w]))[0] * rgamma(a)
        return EvalResult(complex(val), 1, 1e-14 * abs(val), "Integral")
    if method != "shift":
        raise ValueError(f"unknown method {method!r}")
    n = shift
    if n is None:
        n = max(1, math.floor(-a.real) + 1)
    if n < 1 or (a + n).real <= 0:
        raise NotApplicable("the shifted index must satisfy Re(a+n) > 0")
    head = f20_partial_sum(a, b, w, n - 1)
    an, bn = a + n, b + n
    ra = rgamma(an)

    from .quad.contour import Segment, integrate

    def inner(s):
        s = np.asarray(s, dtype=complex)
        return (1 - s) ** (n - 1) * _gamma_f20(an, bn, w * s) * ra

    res = integrate(inner, Segment(0, 1), tol=1e-13)
    coef = w ** n * pochhammer(a, n) * pochhammer(b, n) / math.factorial(n - 1)
    return EvalResult(head + coef * res.value, n, abs(coef) * res.err_estimate, "Continuation")


# ---------------------------------------------------------------------------
# Chebyshev solutions

CHEBYSHEV_KINDS = ("TwoF1Sin", "TwoF1Cos", "ZeroF1Sinh", "ZeroF1Cosh")


@lru_cache(maxsize=64)
def _cheb_kernel(kind: str, k: int):
    """Lambdified ``k``-th derivative of the elementary kernel and its symbols."""
    import sympy as sp

    x, lam = sp.symbols("x lam")
    if kind == "ZeroF1Sinh":
        kern = sp.sinh(2 * sp.sqrt(x)) / sp.sqrt(x)
    elif kind == "ZeroF1Cosh":
        kern = sp.cosh(2 * sp.sqrt(x)) / sp.sqrt(x)
    elif kind == "TwoF1Cos":
        # (w+i√(1−w²))^λ + (w−i√(1−w²))^λ = 2cos(λ arccos w)
        kern = 2 * sp.cos(lam * sp.acos(x)) / sp.sqrt(1 - x ** 2)
    elif kind == "TwoF1Sin":
        # (w+i√(1−w²))^λ − (w−i√(1−w²))^λ = 2i sin(λ arccos w)
        kern = 2 * sp.I * sp.sin(lam * sp.acos(x)) / sp.sqrt(1 - x ** 2)
    else:
        raise ValueError(f"unknown Chebyshev kind {kind!r}")
    d = sp.diff(kern, x, k)
    f = sp.lambdify((x, lam), d, modules=["numpy"])
    return d, (x, lam), f


def _cheb_limit(kind: str, k: int, point: float, lam: complex) -> complex:
    """``k``-th derivative of a removable-singularity kernel at ``point``.

    The kernels are analytic at the branch point, so Cauchy's formula on a
    circle of radius 1/2 gives the derivative to spectral accuracy.
    """
    from .quad.contour import Circle, integrate

    _, _, f0 = _cheb_kernel(kind, 0)

    def integrand(w):
        with np.errstate(all="ignore"):
            return f0(w, np.complex128(lam)) * (w - point) ** (-k - 1)

    res = integrate(integrand, Circle(point, 0.5, points=1024, phase=0.1))
    return math.factorial(k) * res.value / (2j * math.pi)


def chebyshev_eval(kind: str, k: int, extra_params: Optional[dict], z: complex, printed: bool = False) -> EvalResult:
    """Elementary closed forms on the Chebyshev ladders.

    Kinds and the Olver-normalised functions they equal:

    ``ZeroF1Sinh``  ``(1/√π) ∂ᵏ[sinh 2√z/√z] = 𝐅(3/2+k; z)``

    ``ZeroF1Cosh``  ``(z^{½+k}/√π) ∂ᵏ[cosh 2√z/√z] = 𝐅(½−k; z)``

    ``TwoF1Cos``  ``(1−w²)^{½+k}/(2√π(−2)ᵏ) ∂ᵏ[((w+i√(1−w²))^λ+(w−i√(1−w²))^λ)/√(1−w²)]
    = 𝐅(−k+λ, −k−λ; ½−k; (1−w)/2)``

    ``TwoF1Sin``  ``2ᵏ/(i√π(λ−k)_{2k+1}) ∂ᵏ[((w+i√(1−w²))^λ−(w−i√(1−w²))^λ)/√(1−w²)]
    = 𝐅(1+k+λ, 1+k−λ; 3/2+k; (1−w)/2)``

    For the ₂F₁ kinds ``z`` is the variable ``w`` and ``extra_params`` holds
    ``lam``.  Derivatives are taken symbolically and evaluated with
    principal branches.  ``printed=True`` restores the constant ``2^{2k}``
    in front of the sinh form as it is often quoted; it makes the
    identity fail by exactly that factor for ``k ≥ 1``.

    Raises
    ------
    PoleError
        At the branch point for the cosh/cos kernels.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    z = complex(z)
    lam = complex((extra_params or {}).get("lam", 0))
    sqpi = math.sqrt(math.pi)
    if kind in ("ZeroF1Sinh", "ZeroF1Cosh"):
        at_branch = z == 0
        point = 0.0
    elif kind in ("TwoF1Sin", "TwoF1Cos"):
        at_branch = z in (1, -1)
        point = z.real
        if kind == "TwoF1Sin" and z == -1:
            raise PoleError("the TwoF1Sin kernel is singular at w = −1")
    else:
        raise ValueError(f"unknown Chebyshev kind {kind!r}")
    if at_branch:
        if kind in ("ZeroF1Cosh", "TwoF1Cos"):
            raise PoleError(f"the {kind} kernel is singular at {z}")
        deriv = _cheb_limit(kind, k, point, lam)
    else:
        _, _, f = _cheb_kernel(kind, k)
        with np.errstate(all="ignore"):
            deriv = complex(f(np.complex128(z), np.complex128(lam)))
    if kind == "ZeroF1Sinh":
        val = (4 ** k if printed else 1) / sqpi * deriv
    elif kind == "ZeroF1Cosh":
        val = cmath.exp((0.5 + k) * cmath.log(z)) / sqpi * deriv
    elif kind == "TwoF1Cos":
        val = cmath.exp((0.5 + k) * cmath.log(1 - z * z)) / (2 * sqpi * (-2) ** k) * deriv
    else:
        val = 2 ** k / (1j * sqpi * pochhammer(lam - k, 2 * k + 1)) * deriv
    return EvalResult(val, 1, 0.0, "ClosedForm")


def _cheb_target(kind: str, k: int, lam: complex):
    """``(type_tag, params, argument map)`` of the function a kind equals."""
    if kind == "ZeroF1Sinh":
        return "ZeroF1Olver", {"c": 1.5 + k}, lambda z: z
    if kind == "ZeroF1Cosh":
        return "ZeroF1Olver", {"c": 0.5 - k}, lambda z: z
    if kind == "TwoF1Cos":
        return "Gauss2F1Olver", {"a": -k + lam, "b": -k - lam, "c": 0.5 - k}, lambda w: (1 - w) / 2
    return "Gauss2F1Olver", {"a": 1 + k + lam, "b": 1 + k - lam, "c": 1.5 + k}, lambda w: (1 - w) / 2


_PRINTED_PAIRING = {"TwoF1Cos": "TwoF1Sin", "TwoF1Sin": "TwoF1Cos"}


def chebyshev_check(kind: str, k: int, extra_params: Optional[dict], z: complex) -> dict:
    """Compare a closed form with the Olver-normalised series.

    Returns a dict with ``closed``, ``series``, ``ratio`` (the fitted
    constant ``closed/series``) and ``rel_err``.  For the ₂F₁ kinds it also
    reports ``printed_ratio``: the ratio obtained when each closed form is
    matched with the other ₂F₁ function, as the formulas are commonly
    printed.
    """
    lam = complex((extra_params or {}).get("lam", 0))
    closed = chebyshev_eval(kind, k, extra_params, z).value
    tag, p, arg = _cheb_target(kind, k, lam)
    series = eval_classical(tag, p, arg(complex(z))).value
    out = {
        "closed": closed,
        "series": series,
        "ratio": closed / series if series != 0 else complex("nan"),
        "rel_err": abs(closed - series) / max(abs(series), 1e-300),
    }
    if kind in _PRINTED_PAIRING:
        tag2, p2, arg2 = _cheb_target(_PRINTED_PAIRING[kind], k, lam)
        other = eval_classical(tag2, p2, arg2(complex(z))).value
        out["printed_ratio"] = closed / other if other != 0 else complex("nan")
    return out


def _y_increment(sigma: PolyC, z0: complex, z1: complex) -> complex:
    from .quad.contour import Segment, integrate

    if z0 == z1:
        return 0j
    return integrate(lambda x: 1 / np.sqrt(sigma(x) + 0j), Segment(z0, z1), tol=1e-15).value


def chebyshev_candidate(
    sigma: PolyC,
    omega: complex,
    kappa_sign: int = -1,
    func: str = "sin",
    printed: bool = False,
    base: complex = 0,
):
    """Candidate elementary solution on a Chebyshev ladder.

    ``kappa_sign = −1``: ``sin(√ω·y(z))`` for ``ℋ(σ,−σ′/2)+ω+σ″/4``;
    ``kappa_sign = +1``: ``sin(√ω·y(z))/√σ(z)`` for ``ℋ(σ,σ′/2)+ω+σ″/4``,
    where ``y(z) = ∫₀^z dx/√σ(x)``; when that integral diverges (a double
    root of σ at 0) pass another ``base`` point.  ``printed=True`` uses ``ω`` in place of
    ``√ω``.  The returned callable takes ``(z, h)`` and gives the values at
    ``z−h, z, z+h`` with ``y`` obtained from one quadrature to ``z`` plus
    short increments, so second differences are not polluted by
    quadrature noise.
    """
    sigma = PolyC.coerce(sigma)
    freq = complex(omega) if printed else cmath.sqrt(omega)
    trig = {"sin": np.sin, "cos": np.cos}[func]

    def values(z: complex, h: float) -> np.ndarray:
        y0 = _y_increment(sigma, base, z)
        ys = np.array([y0 - _y_increment(sigma, z - h, z), y0, y0 + _y_increment(sigma, z, z + h)])
        zs = np.array([z - h, z, z + h], dtype=complex)
        out = trig(freq * ys)
        if kappa_sign > 0:
            out = out / np.sqrt(sigma(zs) + 0j)
        return out

    return values


def chebyshev_residual(
    sigma: PolyC,
    kappa_sign: int,
    omega: complex,
    solution,
    points: Optional[Sequence[complex]] = None,
    h: float = 1e-4,
) -> float:
    """Max residual of ``(ℋ(σ, ±σ′/2) + ω + σ″/4) f`` by central differences.

    The operator is ``σ∂² + ½σ′∂ + ω`` (sign −1) or
    ``σ∂² + (3/2)σ′∂ + σ″/2 + ω`` (sign +1).

    Parameters
    ----------
    solution : callable
        Either ``f(z)`` or a callable ``(z, h) -> [f(z−h), f(z), f(z+h)]``
        as produced by :func:`chebyshev_candidate`.
    """
    sigma = PolyC.coerce(sigma)
    ds, s2 = sigma.deriv(), 2 * sigma.coeff(2)
    if points is None:
        roots = sigma.roots()
        points = [p for p in (0.15, 0.3, 0.45, 0.6, 0.75) if all(abs(p - r) > 0.1 for r in roots)]
    worst = 0.0
    for z in points:
        z = complex(z)
        try:
            fm, f0, fp = solution(z, h)
        except TypeError:
            fm, f0, fp = solution(z - h), solution(z), solution(z + h)
        d1 = (fp - fm) / (2 * h)
        d2 = (fp - 2 * f0 + fm) / (h * h)
        if kappa_sign < 0:
            r = sigma(z) * d2 + ds(z) / 2 * d1 + omega * f0
        else:
            r = sigma(z) * d2 + 1.5 * ds(z) * d1 + (s2 / 2 + omega) * f0
        worst = max(worst, abs(r))
    return worst


# ---------------------------------------------------------------------------
# degenerate case


def degenerate_proportionality(params: EquationParams, z: complex) -> dict:
    """Check ``𝐅(σ,κ°,ω°;z) = Πⱼ₌₀^{m−1}(ω−κ′(j+½)+σ″j(j+1)/2)·(−z)ᵐ·𝐅(σ,κ,ω;z)``.

    Here ``m = κ(0) ∈ {0,1,2,…}``, ``σ(0) = 0``, ``σ′(0) = 1`` and
    ``κ°(z) = −m + (κ′−mσ″)z``, ``ω° = ω − mκ′ + m²σ″/2``.

    Returns
    -------
    dict
        ``lhs``, ``rhs``, ``max_rel_err``.
    """
    _check_singular_point(params)
    if params.sigma.coeff(1) != 1:
        raise NotApplicable("normalise σ′(0) = 1 first")
    m0 = params.kappa.coeff(0)
    m = round(m0.real)
    if m < 0 or abs(m0 - m) > 1e-12:
        raise NotApplicable("κ(0) must be a non-negative integer")
    s2, k1, om = params.s2, params.k1, params.omega
    power = EquationParams(params.sigma, PolyC([-m, k1 - m * s2]), om - m * k1 + m * m * s2 / 2)
    prod = 1 + 0j
    for j in range(m):
        prod *= om - k1 * (j + 0.5) + s2 * j * (j + 1) / 2
    lhs = olver_F(power, z).value
    rhs = prod * (-complex(z)) ** m * olver_F(params, z).value
    return {"lhs": lhs, "rhs": rhs, "max_rel_err": abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)}


@dataclass(frozen=True)
class DegenerateParams:
    """Parameters ``(a, b, μ, ν, m)`` of the degenerate family.

    ``σ(z) = z(1 − μνz)``, ``κₘ(z) = m + (σ″(m−1)/2 − μb − νa)z``,
    ``ωₘ = (μb+νa)/2 − ab − mμb − σ″(m−1)/4`` and ``ω̃ₘ`` with ``mνa`` in
    place of ``mμb``.
    """

    a: complex
    b: complex
    mu: complex
    nu: complex
    m: int = 0

    @property
    def sigma(self) -> PolyC:
        return PolyC([0, 1, -self.mu * self.nu])

    @property
    def s2(self) -> complex:
        return -2 * complex(self.mu) * self.nu

    def kappa_m(self, m: Optional[int] = None) -> PolyC:
        m = self.m if m is None else m
        return PolyC([m, self.s2 * (m - 1) / 2 - self.mu * self.b - self.nu * self.a])

    def omega_m(self, m: Optional[int] = None) -> complex:
        m = self.m if m is None else m
        a, b, mu, nu = (complex(v) for v in (self.a, self.b, self.mu, self.nu))
        return (mu * b + nu * a) / 2 - a * b - m * mu * b - self.s2 * (m - 1) / 4

    def omega_tilde_m(self, m: Optional[int] = None) -> complex:
        m = self.m if m is None else m
        a, b, mu, nu = (complex(v) for v in (self.a, self.b, self.mu, self.nu))
        return (mu * b + nu * a) / 2 - a * b - m * nu * a - self.s2 * (m - 1) / 4

    def params(self, m: Optional[int] = None) -> EquationParams:
        return EquationParams(self.sigma, self.kappa_m(m), self.omega_m(m))

    def params_tilde(self, m: Optional[int] = None) -> EquationParams:
        return EquationParams(self.sigma, self.kappa_m(m), self.omega_tilde_m(m))

    def sty(self, tilde: bool = False, m: Optional[int] = None) -> tuple[PolyC, PolyC, complex]:
        """``(σ, τ, η)`` of the explicit second-order equation."""
        m = self.m if m is None else m
        mu, nu, a, b = (complex(v) for v in (self.mu, self.nu, self.a, self.b))
        tau = PolyC([m + 1, -(mu * nu * (1 + m) + a * nu + b * mu)])
        eta = -(m * nu * a + a * b) if tilde else -(m * mu * b + a * b)
        return self.sigma, tau, eta

    def kernel(self, u: complex, z: complex) -> complex:
        """``(1+μu)^{−a/μ}(1+νz/u)^{−b/ν}``."""
        return powexp(-self.a, self.mu, u) * powexp(-self.b, self.nu, complex(z) / u)

    def kernel_tilde(self, v: complex, z: complex) -> complex:
        """``(1+μz/v)^{−a/μ}(1+νv)^{−b/ν}``."""
        return powexp(-self.a, self.mu, complex(z) / v) * powexp(-self.b, self.nu, v)

    def psi(self, z: complex, m: Optional[int] = None) -> complex:
        """``Ψₘ(z)`` from the Olver-normalised series.

        ``m ≥ 0``: ``(−1)ᵐ a(a+μ)⋯(a+μ(m−1))·𝐅(σ,κₘ,ωₘ;z)``;
        ``m < 0``: ``z^{−m}Ψ̃₋ₘ(z)``.
        """
        m = self.m if m is None else m
        if m < 0:
            return complex(z) ** (-m) * self.psi_tilde(z, -m)
        pref = 1 + 0j
        for j in range(m):
            pref *= -(self.a + self.mu * j)
        return pref * olver_F(self.params(m), z).value

    def psi_tilde(self, z: complex, m: Optional[int] = None) -> complex:
        """``Ψ̃ₘ(z)``, the counterpart of :meth:`psi` with ``(a,μ) ↔ (b,ν)``."""
        m = self.m if m is None else m
        if m < 0:
            return complex(z) ** (-m) * self.psi(z, -m)
        pref = 1 + 0j
        for j in range(m):
            pref *= -(self.b + self.nu * j)
        return pref * olver_F(self.params_tilde(m), z).value


# ---------------------------------------------------------------------------
# recurrence pairs


def basic_pair_residuals(params: EquationParams, z: complex, n: int = 0) -> dict:
    """Relative residuals of the basic pairs of recurrence relations.

    With ``(κₙ, ωₙ)`` the ladder through ``params`` and ``σ(0) = 0``:

    * ``pair1``: ``∂F(n) = −(ωₙ+½κₙ′)/κₙ₊₁(0) · F(n+1)``
    * ``pair2``: ``(σ∂+κₙ₊₁)F(n+1) = κₙ₊₁(0)·F(n)``
    * ``pair3``: ``∂𝐅(n) = −(ωₙ+½κₙ′)·𝐅(n+1)``
    * ``pair4``: ``(σ∂+κₙ₊₁)𝐅(n+1) = 𝐅(n)``

    Derivatives are exact termwise derivatives of the series.  The Olver
    pairs need ``σ′(0) = 1``.
    """
    z = complex(z)
    pn = ladder_params(params, n)
    pn1 = ladder_params(params, n + 1)
    sig, kap1 = params.sigma, pn1.kappa
    coef = pn.omega + pn.k1 / 2
    k10 = kap1.coeff(0)

    def rel(x, y):
        return abs(x - y) / max(abs(x), abs(y), 1e-300)

    out = {}
    F0, dF0 = unified_F(pn, z).value, unified_F(pn, z, order=1).value
    F1, dF1 = unified_F(pn1, z).value, unified_F(pn1, z, order=1).value
    out["pair1"] = rel(dF0, -coef / k10 * F1)
    out["pair2"] = rel(sig(z) * dF1 + kap1(z) * F1, k10 * F0)
    if params.sigma.coeff(1) == 1:
        G0, dG0 = olver_F(pn, z).value, olver_F(pn, z, order=1).value
        G1, dG1 = olver_F(pn1, z).value, olver_F(pn1, z, order=1).value
        out["pair3"] = rel(dG0, -coef * G1)
        out["pair4"] = rel(sig(z) * dG1 + kap1(z) * G1, G0)
    return out
