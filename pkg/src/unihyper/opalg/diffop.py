"""Differential operators ``Σ aₖ(z) ∂ᵏ`` with rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping

from ..core import WeightForm
from ..errors import SingularMap
from ..polyc import PolyC
from ..ratfun import RatFun

Mobius = tuple[complex, complex, complex, complex]


@dataclass(frozen=True, init=False)
class DiffOp:
    """A differential operator in one variable.

    Parameters
    ----------
    terms : mapping int -> RatFun (or anything coercible to one)
        Coefficient of ``∂ᵏ``.  Zero coefficients are dropped.

    Examples
    --------
    >>> d = DiffOp.d()
    >>> z = DiffOp.mul(PolyC.x())
    >>> (d @ z - z @ d) == DiffOp.identity()
    True
    """

    terms: tuple[tuple[int, RatFun], ...]

    def __init__(self, terms: Mapping[int, object] | None = None):
        items = []
        for k, c in sorted((terms or {}).items()):
            if k < 0:
                raise ValueError("negative derivative order")
            c = RatFun.coerce(c)
            if not c.is_zero():
                items.append((int(k), c))
        object.__setattr__(self, "terms", tuple(items))

    # -- constructors --------------------------------------------------------
    @classmethod
    def identity(cls) -> "DiffOp":
        return cls({0: 1})

    @classmethod
    def zero(cls) -> "DiffOp":
        return cls({})

    @classmethod
    def d(cls, k: int = 1) -> "DiffOp":
        """``∂ᵏ``."""
        return cls({k: 1})

    @classmethod
    def mul(cls, f) -> "DiffOp":
        """Multiplication by ``f``."""
        return cls({0: f})

    @classmethod
    def from_polys(cls, *coeffs) -> "DiffOp":
        """``DiffOp.from_polys(a0, a1, a2)`` is ``a0 + a1∂ + a2∂²``."""
        return cls({k: PolyC.coerce(c) for k, c in enumerate(coeffs)})

    # -- queries -----------------------------------------------------------------
    def as_dict(self) -> dict[int, RatFun]:
        return dict(self.terms)

    def coeff(self, k: int) -> RatFun:
        return self.as_dict().get(k, RatFun(PolyC.zero()))

    def order(self) -> int:
        return self.terms[-1][0] if self.terms else -1

    def is_zero(self) -> bool:
        return not self.terms

    # -- algebra -------------------------------------------------------------------
    def __add__(self, other) -> "DiffOp":
        other = _coerce(other)
        out = self.as_dict()
        for k, c in other.terms:
            out[k] = out[k] + c if k in out else c
        return DiffOp(out)

    __radd__ = __add__

    def __neg__(self) -> "DiffOp":
        return DiffOp({k: -c for k, c in self.terms})

    def __sub__(self, other) -> "DiffOp":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "DiffOp":
        return _coerce(other) - self

    def __mul__(self, scalar) -> "DiffOp":
        """Scalar multiple; use ``@`` for composition."""
        if isinstance(scalar, DiffOp):
            return self @ scalar
        return DiffOp({k: c * complex(scalar) for k, c in self.terms})

    __rmul__ = __mul__

    def __matmul__(self, other) -> "DiffOp":
        return op_compose(self, _coerce(other))

    def __pow__(self, k: int) -> "DiffOp":
        out = DiffOp.identity()
        for _ in range(k):
            out = out @ self
        return out

    def left_mul(self, f) -> "DiffOp":
        """``f·self``."""
        f = RatFun.coerce(f)
        return DiffOp({k: f * c for k, c in self.terms})

    # -- action ------------------------------------------------------------------
    def apply(self, f):
        """Apply to a polynomial or rational function; returns a RatFun."""
        f = RatFun.coerce(f)
        out = RatFun(PolyC.zero())
        deriv = f
        k_done = 0
        for k, c in self.terms:
            while k_done < k:
                deriv = deriv.deriv()
                k_done += 1
            out = out + c * deriv
        return out

    # -- comparison ----------------------------------------------------------------
    def distance(self, other) -> float:
        """Relative coefficientwise distance after cross multiplication."""
        other = _coerce(other)
        a, b = self.as_dict(), other.as_dict()
        worst = 0.0
        scale = 0.0
        for k in set(a) | set(b):
            x = a.get(k, RatFun(PolyC.zero()))
            y = b.get(k, RatFun(PolyC.zero()))
            p = x.num * y.den
            q = y.num * x.den
            scale = max(scale, p.scale(), q.scale())
            worst = max(worst, (p - q).scale())
        return 0.0 if worst == 0 else worst / scale

    def isclose(self, other, rtol: float = 1e-12) -> bool:
        return self.distance(other) <= rtol

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.isclose(other)

    __hash__ = None  # type: ignore[assignment]

    # -- display -------------------------------------------------------------------
    def __str__(self) -> str:
        return pretty(self)

    def __repr__(self) -> str:
        return f"DiffOp({{{', '.join(f'{k}: {c!r}' for k, c in self.terms)}}})"


def _coerce(obj) -> DiffOp:
    if isinstance(obj, DiffOp):
        return obj
    return DiffOp.mul(obj)


def op_compose(a: DiffOp, b: DiffOp) -> DiffOp:
    """Composition ``a∘b`` by the Leibniz rule.

    ``aᵢ∂ⁱ ∘ bⱼ∂ʲ = Σₖ C(i,k) aᵢ bⱼ⁽ᵏ⁾ ∂^{i−k+j}``.
    """
    out: dict[int, RatFun] = {}
    derivs: dict[int, list[RatFun]] = {j: [c] for j, c in b.terms}
    for i, ai in a.terms:
        for j, bj in b.terms:
            ds = derivs[j]
            while len(ds) <= i:
                ds.append(ds[-1].deriv())
            for k in range(i + 1):
                dk = ds[k]
                if dk.is_zero():
                    continue
                term = ai * dk * comb(i, k)
                order = i - k + j
                out[order] = out[order] + term if order in out else term
    return DiffOp(out)


def op_commutator(a: DiffOp, b: DiffOp) -> DiffOp:
    """``[a, b] = a∘b − b∘a``."""
    return op_compose(a, b) - op_compose(b, a)


def gauge_conjugate(op: DiffOp, weight: WeightForm, invert: bool = False) -> DiffOp:
    """Return ``ρ·op·ρ⁻¹`` (or ``ρ⁻¹·op·ρ`` when ``invert``).

    Implemented by the substitution ``∂ ↦ ∂ − (log ρ)′`` (``+`` when inverted).

    Examples
    --------
    >>> g = gauge_conjugate(DiffOp.d(), WeightForm.power(0, 2))
    >>> g == DiffOp({1: 1, 0: RatFun(PolyC([-2]), PolyC([0, 1]))})
    True
    """
    lg = weight.log_derivative()
    shift = DiffOp({1: 1, 0: lg if invert else -lg})
    out = DiffOp.zero()
    power = DiffOp.identity()
    k_done = 0
    for k, c in op.terms:
        while k_done < k:
            power = power @ shift
            k_done += 1
        out = out + power.left_mul(c)
    return out


def mobius_substitute(op: DiffOp, mobius: Mobius) -> DiffOp:
    """Rewrite ``op`` in the variable ``w`` where ``z = (a w + b)/(c w + d)``.

    Examples
    --------
    >>> mobius_substitute(DiffOp.d(), (0, -1, 1, 0)) == DiffOp({1: PolyC([0, 0, 1])})
    True
    """
    a, b, c, d = (complex(x) for x in mobius)
    det = a * d - b * c
    if abs(det) <= 1e-14 * max(abs(a * d), abs(b * c), 1e-300):
        raise SingularMap(f"degenerate Möbius map (ad − bc = {det})")
    num, den = PolyC([b, a]), PolyC([d, c])
    # ∂_z = (c w + d)²/(ad − bc) ∂_w
    dz = DiffOp({1: RatFun(den * den / det)})
    out = DiffOp.zero()
    power = DiffOp.identity()
    k_done = 0
    for k, coef in op.terms:
        while k_done < k:
            power = power @ dz
            k_done += 1
        out = out + power.left_mul(coef.substitute(num, den))
    return out


def inverse_mobius(mobius: Mobius) -> Mobius:
    """Coefficients of the inverse map ``w = (d z − b)/(−c z + a)``."""
    a, b, c, d = mobius
    return (d, -b, -c, a)


def _fmt_coeff(c: RatFun) -> str:
    s = str(c)
    if c.is_poly() and len(c.num) > 1:
        s = f"({s})"
    return s


def pretty(op: DiffOp, var: str = "z") -> str:
    """Render as ``a₂(z)∂² + a₁(z)∂ + a₀(z)`` (highest order first)."""
    if op.is_zero():
        return "0"
    parts = []
    for k, c in reversed(op.terms):
        cs = _fmt_coeff(c).replace("z", var)
        if k == 0:
            parts.append(cs)
            continue
        d = "∂" if k == 1 else f"∂^{k}"
        if cs == "1":
            parts.append(d)
        elif cs == "-1":
            parts.append("-" + d)
        else:
            parts.append(f"{cs}{d}")
    return " + ".join(parts).replace("+ -", "- ")
