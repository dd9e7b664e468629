"""Contours, double-exponential rules and branch-tracked integrands.

Every contour is discretised into nodes ordered along the path.  Each
node carries, besides its position ``s`` and weight ``ds``, the exact
offsets ``s − start`` and ``s − end`` so that factors like ``(s−1)^e``
with a root at an endpoint are evaluated without cancellation.

Multivalued integrands are described by :class:`TrackedIntegrand`:
a product ``c · Π (s−rⱼ)^{eⱼ} · exp(g(s))`` whose logarithms
``log(s−rⱼ)`` are continued along the ordered nodes instead of being
snapped to the principal branch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from ..errors import NoConvergence

__all__ = [
    "Circle",
    "Segment",
    "HalfLineDE",
    "HankelLoop",
    "ContourSpec",
    "QuadResult",
    "TrackedIntegrand",
    "integrate",
    "integrate_tracked",
    "default_loop",
]

#: Relative level-to-level agreement requested from the DE rules.
DE_TOL = 1e-12
#: Finest DE level (step ``2^-DE_MAX_LEVEL``).
DE_MAX_LEVEL = 12
#: Default node budget for circles.
CIRCLE_NODES = 512


@dataclass(frozen=True)
class Circle:
    """Counterclockwise circle ``center + radius·e^{iφ}``, φ from ``phase``."""

    center: complex
    radius: float
    points: int = CIRCLE_NODES
    phase: float = -math.pi

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        if self.points < 16:
            raise ValueError("points must be at least 16")


@dataclass(frozen=True)
class Segment:
    """Straight path from ``start`` to ``end`` (tanh-sinh rule)."""

    start: complex
    end: complex
    points: int = 2 ** 16

    def __post_init__(self):
        if self.start == self.end:
            raise ValueError("degenerate segment")
        if self.points < 16:
            raise ValueError("points must be at least 16")


@dataclass(frozen=True)
class HalfLineDE:
    """Ray ``start + r·direction``, ``r ∈ [0, ∞)`` (exp-sinh rule)."""

    start: complex
    direction: complex
    points: int = 2 ** 16

    def __post_init__(self):
        if self.direction == 0:
            raise ValueError("direction must be nonzero")
        if self.points < 16:
            raise ValueError("points must be at least 16")


@dataclass(frozen=True)
class HankelLoop:
    """Keyhole path ``]−∞, (p…)⁺, −∞[`` around the points ``enclosed``.

    The path comes in from infinity along ``center + r·e^{−iθ}``, follows
    the circular cap ``center + R·e^{iφ}``, φ from −θ to θ, and leaves
    along ``center + r·e^{iθ}``, with θ = ``approach_angle``.  With the
    default θ = 3π/4 the rays lie in the left half plane.

    ``stem_length`` truncates the rays to a finite length when given;
    ``radius`` overrides the automatic cap radius.
    """

    enclosed: tuple = (0j,)
    approach_angle: float = 3 * math.pi / 4
    stem_length: Optional[float] = None
    radius: Optional[float] = None
    points: int = 2 ** 16

    def __post_init__(self):
        object.__setattr__(self, "enclosed", tuple(complex(p) for p in self.enclosed))
        if not self.enclosed:
            raise ValueError("a Hankel loop must enclose at least one point")
        if self.points < 16:
            raise ValueError("points must be at least 16")

    @property
    def center(self) -> complex:
        return sum(self.enclosed) / len(self.enclosed)

    @property
    def cap_radius(self) -> float:
        if self.radius is not None:
            return float(self.radius)
        c = self.center
        spread = max(abs(p - c) for p in self.enclosed)
        return max(0.3 * (1 + abs(c)), 1.5 * spread)


ContourSpec = Circle | Segment | HalfLineDE | HankelLoop


def default_loop(enclosed: Sequence[complex], avoid: Sequence[complex] = (), points: int = CIRCLE_NODES) -> Circle:
    """Circle around ``enclosed`` keeping clear of the points ``avoid``.

    Centered at the centroid with radius 1.5× the largest distance to an
    enclosed point (at least 0.5), then shrunk so that every avoided
    point stays outside by half its distance to the enclosed set.
    """
    enclosed = [complex(p) for p in enclosed]
    c = sum(enclosed) / len(enclosed)
    spread = max(abs(p - c) for p in enclosed)
    r = max(1.5 * spread, 0.5)
    for q in avoid:
        d = abs(complex(q) - c)
        if d <= spread:
            raise ValueError(f"point {q} cannot be separated from the enclosed set")
        r = min(r, spread + 0.5 * (d - spread))
    return Circle(c, r, points)


@dataclass
class QuadResult:
    """Value of a contour integral.

    Attributes
    ----------
    value : complex
    err_estimate : float
        Difference between the last two refinement levels.
    boundary_term : complex
        Endpoint contribution of a transform (zero for closed loops).
    boundary_ok : bool
        Whether ``boundary_term`` is negligible against ``value``.
    raw : complex
        The unscaled integral, when ``value`` carries a normalisation.
    """

    value: complex
    err_estimate: float
    boundary_term: complex = 0j
    boundary_ok: bool = True
    raw: Optional[complex] = None

    def __post_init__(self):
        if self.raw is None:
            self.raw = self.value


# ---------------------------------------------------------------------------
# node generation


@dataclass
class _Nodes:
    s: np.ndarray
    ds: np.ndarray
    off_start: np.ndarray  # s − start (exact for segments and rays)
    off_end: Optional[np.ndarray]  # s − end, or None
    start: complex
    end: Optional[complex]


def _tanh_sinh(a: complex, b: complex, level: int) -> _Nodes:
    h = 2.0 ** -level
    tmax = 6.0
    t = np.arange(-math.floor(tmax / h), math.floor(tmax / h) + 1) * h
    u = 0.5 * math.pi * np.sinh(t)
    with np.errstate(over="ignore"):
        ep, em = np.exp(2 * u), np.exp(-2 * u)
        frac_start = 1 / (1 + em)  # (x−a)/(b−a)
        frac_end = 1 / (1 + ep)  # (b−x)/(b−a)
        sech2 = 1 / np.cosh(u) ** 2
    L = b - a
    dxdt = L * 0.5 * 0.5 * math.pi * np.cosh(t) * sech2
    off_s = L * frac_start
    off_e = -L * frac_end
    s = np.where(frac_start < 0.5, a + off_s, b + off_e)
    return _Nodes(s, dxdt * h, off_s, off_e, a, b)


def _exp_sinh(start: complex, direction: complex, level: int, length: Optional[float] = None) -> _Nodes:
    if length is not None:
        return _tanh_sinh(start, start + direction / abs(direction) * length, level)
    h = 2.0 ** -level
    tlo, thi = -6.7, 5.5
    t = np.arange(math.ceil(tlo / h), math.floor(thi / h) + 1) * h
    u = 0.5 * math.pi * np.sinh(t)
    r = np.exp(u)
    off = direction * r
    ds = direction * 0.5 * math.pi * np.cosh(t) * r * h
    return _Nodes(start + off, ds, off, None, start, None)


def _circle(c: Circle, n: int) -> _Nodes:
    phi = c.phase + 2 * math.pi * np.arange(n) / n
    e = np.exp(1j * phi)
    off = c.radius * e
    ds = 1j * off * (2 * math.pi / n)
    return _Nodes(c.center + off, ds, off, None, c.center + c.radius * np.exp(1j * c.phase), None)


def _reverse(nd: _Nodes) -> _Nodes:
    return _Nodes(nd.s[::-1], -nd.ds[::-1], nd.off_start[::-1],
                  None if nd.off_end is None else nd.off_end[::-1], nd.start, nd.end)


def _hankel_pieces(loop: HankelLoop, level: int) -> list[_Nodes]:
    c = loop.center
    R = loop.cap_radius
    th = loop.approach_angle
    e_in, e_out = complex(math.cos(th), -math.sin(th)), complex(math.cos(th), math.sin(th))
    ray_in = _reverse(_exp_sinh(c + R * e_in, e_in, level, loop.stem_length))
    # cap: tanh-sinh in the angle
    h = 2.0 ** -level
    t = np.arange(-math.floor(4.0 / h), math.floor(4.0 / h) + 1) * h
    u = 0.5 * math.pi * np.sinh(t)
    phi = th * np.tanh(u)
    dphi = th * 0.5 * math.pi * np.cosh(t) / np.cosh(u) ** 2 * h
    s = c + R * np.exp(1j * phi)
    cap = _Nodes(s, 1j * (s - c) * dphi, s - c, None, c + R * e_in, c + R * e_out)
    ray_out = _exp_sinh(c + R * e_out, e_out, level, loop.stem_length)
    return [ray_in, cap, ray_out]


def _pieces(contour: ContourSpec, level: int) -> list[_Nodes]:
    if isinstance(contour, Segment):
        return [_tanh_sinh(complex(contour.start), complex(contour.end), level)]
    if isinstance(contour, HalfLineDE):
        return [_exp_sinh(complex(contour.start), complex(contour.direction), level)]
    if isinstance(contour, HankelLoop):
        return _hankel_pieces(contour, level)
    raise TypeError(f"unsupported contour {contour!r}")


# ---------------------------------------------------------------------------
# integrands


def _same_point(a: complex, b: complex) -> bool:
    return abs(a - b) <= 1e-14 * (1 + abs(a))


@dataclass
class TrackedIntegrand:
    """``coeff · Π (s − rⱼ)^{eⱼ} · exp(logg(s))`` with continued branches.

    Parameters
    ----------
    factors : sequence of (root, exponent)
    logg : callable or None
        Vectorised logarithm of the single-valued part.
    coeff : complex
    """

    factors: Sequence[tuple[complex, complex]] = ()
    logg: Optional[Callable[[np.ndarray], np.ndarray]] = None
    coeff: complex = 1 + 0j

    def log_values(self, nd: _Nodes, anchor: Optional[dict] = None) -> np.ndarray:
        """Continued logarithm of the integrand at the ordered nodes.

        ``anchor`` maps a factor index to the value of ``log(s−r)`` that the
        first node must take (used to chain the pieces of a composite path).
        """
        out = np.zeros(len(nd.s), dtype=complex)
        for j, (r, e) in enumerate(self.factors):
            out += complex(e) * self.factor_log(j, nd, anchor)
        if self.logg is not None:
            out += self.logg(nd.s)
        return out

    def factor_log(self, j: int, nd: _Nodes, anchor: Optional[dict] = None) -> np.ndarray:
        r = complex(self.factors[j][0])
        if _same_point(r, nd.start):
            d = nd.off_start
        elif nd.end is not None and nd.off_end is not None and _same_point(r, nd.end):
            d = nd.off_end
        else:
            d = nd.s - r
        d = d.astype(complex)
        d = d.real + 1j * (d.imag + 0.0)  # drop signed zeros: log(−x) = log x + iπ
        with np.errstate(divide="ignore"):
            L = np.log(d)
        im = np.unwrap(L.imag)
        if anchor is not None and j in anchor:
            im += 2 * math.pi * round((anchor[j].imag - im[0]) / (2 * math.pi))
        return L.real + 1j * im

    def values(self, nd: _Nodes, anchor: Optional[dict] = None) -> np.ndarray:
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            return self.coeff * np.exp(self.log_values(nd, anchor))


def _weighted_sum(vals: np.ndarray, ds: np.ndarray) -> tuple[complex, float]:
    with np.errstate(over="ignore", invalid="ignore"):
        terms = vals * ds
    bad = ~np.isfinite(terms)
    if bad.any():
        # Nodes piled against an endpoint or at infinity may under/overflow
        # to 0·∞; their true contribution is negligible.
        n = len(terms)
        idx = np.nonzero(bad)[0]
        interior = (idx > n // 10) & (idx < n - n // 10)
        if interior.any():
            raise NoConvergence("integrand not finite on the contour", best=complex("nan"))
        terms = np.where(bad, 0, terms)
    # fixed (pairwise) summation order for determinism
    return complex(np.sum(terms)), float(np.sum(np.abs(terms)))


def _eval_pieces(fn, pieces: list[_Nodes], tracked: bool) -> tuple[complex, float]:
    total, l1 = 0j, 0.0
    anchor = None
    for nd in pieces:
        if tracked:
            vals = fn.values(nd, anchor)
            # continue every factor's branch into the next piece
            anchor = {j: fn.factor_log(j, nd, anchor)[-1] for j in range(len(fn.factors))}
        else:
            with np.errstate(all="ignore"):
                vals = np.asarray(fn(nd.s), dtype=complex)
                if vals.shape == ():
                    vals = np.full(len(nd.s), complex(vals))
        v, a = _weighted_sum(vals, nd.ds)
        total += v
        l1 += a
    return total, l1


def _integrate(fn, contour: ContourSpec, tracked: bool, tol: float) -> QuadResult:
    if isinstance(contour, Circle):
        n, prev, l1 = 16, None, 0.0
        while True:
            val, l1 = _eval_pieces(fn, [_circle(contour, n)], tracked)
            if prev is not None:
                err = abs(val - prev)
                if err <= tol * abs(val) or err <= 1e-15 * l1:
                    return QuadResult(val, err)
            if 2 * n > contour.points:
                if prev is None:
                    return QuadResult(val, float("inf"))
                raise NoConvergence(
                    f"circle rule not converged with {n} nodes (last change {abs(val - prev):.2e})",
                    best=val,
                )
            prev, n = val, 2 * n
    prev = None
    for level in range(1, DE_MAX_LEVEL + 1):
        pieces = _pieces(contour, level)
        val, l1 = _eval_pieces(fn, pieces, tracked)
        if prev is not None and level >= 3:
            err = abs(val - prev)
            if err <= tol * abs(val) or err <= 1e-15 * l1:
                return QuadResult(val, err)
        if sum(len(p.s) for p in pieces) > contour.points:
            break
        prev = val
    change = float("nan") if prev is None else abs(val - prev)
    raise NoConvergence(f"double-exponential rule not converged (last change {change:.2e})", best=val)


def integrate(f: Callable, contour: ContourSpec, tol: float = DE_TOL) -> QuadResult:
    """Integrate a vectorised analytic ``f`` along ``contour``.

    Circles use the trapezoidal rule with node doubling; segments and
    rays use tanh-sinh / exp-sinh with level doubling; Hankel loops
    combine two rays and a cap.  ``f`` receives a complex ndarray.

    Examples
    --------
    >>> r = integrate(lambda t: 1 / t, Circle(0, 1))
    >>> abs(r.value - 2j * math.pi) < 1e-12
    True
    """
    return _integrate(f, contour, False, tol)


def integrate_tracked(fn: TrackedIntegrand, contour: ContourSpec, tol: float = DE_TOL) -> QuadResult:
    """Integrate a :class:`TrackedIntegrand` with branch continuation.

    The branch of each factor at the first node is the principal one.
    """
    return _integrate(fn, contour, True, tol)


def endpoint_nodes(contour: ContourSpec, level: int = 8) -> list[_Nodes]:
    """Nodes of the given contour at a fixed level (for endpoint evaluations)."""
    if isinstance(contour, Circle):
        return [_circle(contour, contour.points)]
    return _pieces(contour, level)
