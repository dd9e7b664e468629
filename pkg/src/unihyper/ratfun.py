"""Rational functions ``num/den`` with numerically reduced representation.

Common factors are cancelled by matching root clusters of numerator and
denominator.  The denominator is kept monic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyc import PolyC

#: Two root-cluster centres closer than this (relative) are cancelled.
MATCH_TOL = 1e-9
#: Roots closer than this (relative) are grouped into one multiple root.
#: np.roots splits a k-fold root into points ~eps**(1/k) apart, so this has
#: to be much looser than MATCH_TOL; the cluster mean is accurate.
CLUSTER_TOL = 1e-5


def _clusters(roots: list[complex]) -> list[tuple[complex, int]]:
    """Group nearby roots, returning (mean, multiplicity) pairs."""
    remaining = list(roots)
    out = []
    while remaining:
        seed = remaining.pop(0)
        group = [seed]
        changed = True
        while changed:
            changed = False
            for r in list(remaining):
                if any(abs(r - g) <= CLUSTER_TOL * max(1.0, abs(g)) for g in group):
                    group.append(r)
                    remaining.remove(r)
                    changed = True
        out.append((sum(group) / len(group), len(group)))
    return out


def _reduce(num: PolyC, den: PolyC) -> tuple[PolyC, PolyC]:
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero():
        return PolyC.zero(), PolyC.one()
    if den.degree() > 0 and num.degree() > 0:
        dcl = _clusters(den.roots())
        ncl = _clusters(num.roots())
        for c, k in dcl:
            for i, (c2, k2) in enumerate(ncl):
                if abs(c - c2) <= MATCH_TOL * max(1.0, abs(c)):
                    m = min(k, k2)
                    centre = c if k >= k2 else c2
                    for _ in range(m):
                        num = num.deflate(centre)
                        den = den.deflate(centre)
                    ncl[i] = (c2, k2 - m)
                    break
    lead = den.lead
    return num / lead, den / lead


@dataclass(frozen=True, init=False)
class RatFun:
    """Rational function with monic denominator.

    Parameters
    ----------
    num, den : PolyC or coercible
        Numerator and denominator; the pair is reduced on construction unless
        ``reduce=False``.
    """

    num: PolyC
    den: PolyC

    def __init__(self, num, den=None, reduce: bool = True):
        num = PolyC.coerce(num)
        den = PolyC.one() if den is None else PolyC.coerce(den)
        if den.degree() == 0:
            num, den = num / den.lead, PolyC.one()
        elif reduce:
            num, den = _reduce(num, den)
        else:
            lead = den.lead
            num, den = num / lead, den / lead
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def coerce(cls, obj) -> "RatFun":
        if isinstance(obj, RatFun):
            return obj
        return cls(PolyC.coerce(obj))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.degree() == 0

    def as_poly(self, tol: float = 1e-10, scale: float | None = None) -> PolyC:
        """Exact polynomial if the denominator divides the numerator.

        The remainder is compared with ``tol`` times ``scale`` (default: the
        numerator's own scale); pass the scale of the surrounding expression
        when the numerator itself may be pure rounding noise.
        """
        if self.is_poly():
            return self.num
        q, r = divmod(self.num, self.den)
        ref = self.num.scale() if scale is None else scale * self.den.scale()
        if r.scale() > tol * max(ref, 1e-300):
            raise ValueError("rational function is not a polynomial")
        return q

    def __call__(self, z):
        return self.num(z) / self.den(z)

    def _same_den(self, other: "RatFun") -> bool:
        return self.den.coefficients == other.den.coefficients

    def __add__(self, other) -> "RatFun":
        other = RatFun.coerce(other)
        if self._same_den(other):
            return RatFun(self.num + other.num, self.den, reduce=not self.is_poly())
        if other.is_poly():
            return RatFun(self.num + other.num * self.den, self.den, reduce=False)
        if self.is_poly():
            return RatFun(other.num + self.num * other.den, other.den, reduce=False)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den, reduce=False)

    def __sub__(self, other) -> "RatFun":
        return self + (-RatFun.coerce(other))

    def __rsub__(self, other) -> "RatFun":
        return RatFun.coerce(other) - self

    def __mul__(self, other) -> "RatFun":
        if isinstance(other, (int, float, complex)):
            return RatFun(self.num * other, self.den, reduce=False)
        other = RatFun.coerce(other)
        if self.is_poly() and other.is_poly():
            return RatFun(self.num * other.num)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFun":
        if isinstance(other, (int, float, complex)):
            return RatFun(self.num / other, self.den, reduce=False)
        other = RatFun.coerce(other)
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFun":
        return RatFun.coerce(other) / self

    def __pow__(self, k: int) -> "RatFun":
        if k >= 0:
            return RatFun(self.num**k, self.den**k, reduce=False)
        return RatFun(self.den ** (-k), self.num ** (-k))

    def deriv(self) -> "RatFun":
        if self.is_poly():
            return RatFun(self.num.deriv())
        n, d = self.num, self.den
        return RatFun(n.deriv() * d - n * d.deriv(), d * d)

    def substitute(self, num: PolyC, den: PolyC) -> "RatFun":
        """Return ``self(num(w)/den(w))`` as a rational function of ``w``."""
        dn, dd = self.num.degree(), self.den.degree()
        d = max(dn, dd, 0)
        top = self.num.homogenize(num, den, d) if not self.num.is_zero() else PolyC.zero()
        bot = self.den.homogenize(num, den, d)
        return RatFun(top, bot)

    def distance(self, other) -> float:
        """Relative size of ``num_a*den_b - num_b*den_a``."""
        other = RatFun.coerce(other)
        x = self.num * other.den
        y = other.num * self.den
        scale = max(x.scale(), y.scale())
        if scale == 0:
            return 0.0
        return (x - y).scale() / scale

    def __repr__(self) -> str:
        if self.is_poly():
            return f"RatFun({self.num!r})"
        return f"RatFun({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.is_poly():
            return str(self.num)
        return f"({self.num})/({self.den})"
