"""Dense univariate polynomials with complex coefficients.

Coefficients are stored lowest degree first.  Values are immutable; every
arithmetic operation returns a new polynomial.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

import numpy as np

#: Relative tolerance used by :meth:`PolyC.isclose`.
RTOL = 1e-12
#: Discriminant threshold (relative to the squared coefficient scale) below
#: which a quadratic is treated as having a double root.
DOUBLE_ROOT_TOL = 1e-10


def _trim(coeffs: Sequence[complex]) -> tuple[complex, ...]:
    c = [complex(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True, init=False)
class PolyC:
    """Polynomial ``c[0] + c[1] z + ... + c[d] z**d`` over the complex numbers.

    Parameters
    ----------
    coefficients : iterable of complex
        Coefficients, lowest degree first.  Trailing exact zeros are removed,
        so an empty or all-zero list yields the zero polynomial.

    Examples
    --------
    >>> p = PolyC([0, 1, -1])          # z - z**2
    >>> p.degree()
    2
    >>> p(0.5)
    (0.25+0j)
    """

    coefficients: tuple[complex, ...]

    def __init__(self, coefficients: Iterable[complex] = ()):
        object.__setattr__(self, "coefficients", _trim(list(coefficients)))

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls) -> "PolyC":
        return cls(())

    @classmethod
    def one(cls) -> "PolyC":
        return cls((1,))

    @classmethod
    def const(cls, c: complex) -> "PolyC":
        return cls((c,))

    @classmethod
    def x(cls) -> "PolyC":
        """The identity polynomial ``z``."""
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[complex], lead: complex = 1) -> "PolyC":
        p = cls.const(lead)
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @classmethod
    def coerce(cls, obj) -> "PolyC":
        """Turn a scalar, a sequence or a PolyC into a PolyC."""
        if isinstance(obj, PolyC):
            return obj
        if isinstance(obj, (int, float, complex, np.number)):
            return cls.const(obj)
        return cls(obj)

    # -- basic queries ----------------------------------------------------
    def degree(self) -> int:
        """Index of the last nonzero coefficient (``-1`` for the zero polynomial)."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coeff(self, k: int) -> complex:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0j

    @property
    def lead(self) -> complex:
        return self.coefficients[-1] if self.coefficients else 0j

    def scale(self) -> float:
        """Largest coefficient magnitude."""
        return max((abs(c) for c in self.coefficients), default=0.0)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    # -- evaluation ---------------------------------------------------------
    def __call__(self, z):
        """Evaluate by Horner's rule; works for scalars and numpy arrays."""
        if not self.coefficients:
            return 0j * z if isinstance(z, np.ndarray) else 0j
        acc = self.coefficients[-1] + 0 * z
        for c in reversed(self.coefficients[:-1]):
            acc = acc * z + c
        return acc

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other) -> "PolyC":
        other = PolyC.coerce(other)
        n = max(len(self), len(other))
        return PolyC(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "PolyC":
        return PolyC(-c for c in self.coefficients)

    def __sub__(self, other) -> "PolyC":
        return self + (-PolyC.coerce(other))

    def __rsub__(self, other) -> "PolyC":
        return PolyC.coerce(other) - self

    def __mul__(self, other) -> "PolyC":
        if isinstance(other, (int, float, complex, np.number)):
            return PolyC(c * other for c in self.coefficients)
        other = PolyC.coerce(other)
        if self.is_zero() or other.is_zero():
            return PolyC.zero()
        out = [0j] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return PolyC(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "PolyC":
        if isinstance(other, PolyC):
            raise TypeError("use divmod for polynomial division")
        return PolyC(c / other for c in self.coefficients)

    def __pow__(self, k: int) -> "PolyC":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = PolyC.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other: "PolyC"):
        other = PolyC.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        dq = len(rem) - len(other)
        if dq < 0:
            return PolyC.zero(), self
        quot = [0j] * (dq + 1)
        lead = other.lead
        for k in range(dq, -1, -1):
            q = rem[k + len(other) - 1] / lead
            quot[k] = q
            for j, b in enumerate(other.coefficients):
                rem[k + j] -= q * b
        return PolyC(quot), PolyC(rem[: len(other) - 1])

    def deriv(self, k: int = 1) -> "PolyC":
        c = list(self.coefficients)
        for _ in range(k):
            c = [i * c[i] for i in range(1, len(c))]
        return PolyC(c)

    def integ(self) -> "PolyC":
        """Antiderivative vanishing at 0."""
        return PolyC([0] + [c / (i + 1) for i, c in enumerate(self.coefficients)])

    def compose(self, inner: "PolyC") -> "PolyC":
        """Return ``self(inner(z))``."""
        out = PolyC.zero()
        for c in reversed(self.coefficients):
            out = out * inner + c
        return out

    def affine(self, a: complex, b: complex) -> "PolyC":
        """Return ``self(a*z + b)`` with exact binomial expansion."""
        out = [0j] * len(self)
        for k, c in enumerate(self.coefficients):
            for j in range(k + 1):
                out[j] += c * comb(k, j) * a**j * b ** (k - j)
        return PolyC(out)

    def homogenize(self, num: "PolyC", den: "PolyC", degree: int | None = None) -> "PolyC":
        """Return ``den**degree * self(num/den)`` as a polynomial.

        ``degree`` defaults to ``self.degree()``.
        """
        d = self.degree() if degree is None else degree
        out = PolyC.zero()
        for k, c in enumerate(self.coefficients):
            out = out + c * num**k * den ** (d - k)
        return out

    def monic(self) -> "PolyC":
        return self / self.lead

    def deflate(self, root: complex) -> "PolyC":
        """Synthetic division by ``(z - root)``, discarding the remainder."""
        c = self.coefficients
        if len(c) <= 1:
            return PolyC.zero()
        out = [0j] * (len(c) - 1)
        acc = 0j
        for k in range(len(c) - 1, 0, -1):
            acc = acc * root + c[k]
            out[k - 1] = acc
        return PolyC(out)

    # -- comparisons ---------------------------------------------------------
    def isclose(self, other, rtol: float = RTOL, atol: float = 0.0) -> bool:
        return self.distance(other) <= max(rtol, atol)

    def distance(self, other) -> float:
        """Coefficientwise relative distance against the larger scale."""
        other = PolyC.coerce(other)
        scale = max(self.scale(), other.scale())
        if scale == 0:
            return 0.0
        n = max(len(self), len(other))
        return max(abs(self.coeff(k) - other.coeff(k)) for k in range(n)) / scale

    def trimmed(self, tol: float = 1e-14) -> "PolyC":
        """Drop trailing coefficients smaller than ``tol`` times the scale."""
        s = self.scale()
        c = list(self.coefficients)
        while c and abs(c[-1]) <= tol * s:
            c.pop()
        return PolyC(c)

    # -- roots ----------------------------------------------------------------
    def roots(self) -> list[complex]:
        """All roots with multiplicity.

        Linear and quadratic cases use closed forms; a quadratic whose
        discriminant is below ``DOUBLE_ROOT_TOL * scale**2`` returns the
        double root ``-b/(2a)`` twice.
        """
        d = self.degree()
        if d <= 0:
            return []
        c = self.coefficients
        if d == 1:
            return [-c[0] / c[1]]
        if d == 2:
            return list(quadratic_roots(c[2], c[1], c[0]))
        return [complex(r) for r in np.roots(list(reversed(c)))]

    # -- dunder -----------------------------------------------------------------
    def __repr__(self) -> str:
        return f"PolyC({list(self.coefficients)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def to_list(self) -> list[complex]:
        return list(self.coefficients)


def quadratic_roots(a: complex, b: complex, c: complex) -> tuple[complex, complex]:
    """Roots of ``a z**2 + b z + c`` with a cancellation-free formula.

    The double-root branch is taken when the discriminant is tiny relative to
    the coefficient scale.
    """
    scale = max(abs(a), abs(b), abs(c))
    disc = b * b - 4 * a * c
    if abs(disc) < DOUBLE_ROOT_TOL * scale * scale:
        r = -b / (2 * a)
        return r, r
    sq = cmath.sqrt(disc)
    # choose the sign that avoids cancellation
    if (complex(b).conjugate() * sq).real >= 0:
        q = -(b + sq) / 2
    else:
        q = -(b - sq) / 2
    r1 = q / a
    r2 = c / q if q != 0 else -b / a - r1
    return r1, r2


def _fmt_c(c: complex) -> str:
    c = complex(c)
    if c.imag == 0:
        v = c.real
        return f"{v:.12g}"
    if c.real == 0:
        return f"{c.imag:.12g}i"
    return f"({c.real:.12g}{c.imag:+.12g}i)"


def format_poly(p: PolyC, var: str = "z") -> str:
    """Human readable rendering, highest degree first."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree(), -1, -1):
        c = p.coefficients[k]
        if c == 0:
            continue
        if k == 0:
            mono = _fmt_c(c)
        else:
            pw = var if k == 1 else f"{var}^{k}"
            if c == 1:
                mono = pw
            elif c == -1:
                mono = "-" + pw
            else:
                mono = f"{_fmt_c(c)}{pw}"
        parts.append(mono)
    out = " + ".join(parts)
    return out.replace("+ -", "- ")
