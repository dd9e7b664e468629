"""The power-exponential function."""

from __future__ import annotations

import cmath

from .errors import PoleError

__all__ = ["powexp"]


def powexp(a: complex, mu: complex, u: complex) -> complex:
    """``(1+μu)^{a/μ}`` for ``μ ≠ 0`` and ``e^{au}`` for ``μ = 0``.

    It is the solution of ``(1+μu)f′ = af``, ``f(0) = 1``, and satisfies
    ``powexp(a₁,μ,u)·powexp(a₂,μ,u) = powexp(a₁+a₂,μ,u)``.  The principal
    branch of the power is used.

    Raises
    ------
    PoleError
        At the singular point ``u = −1/μ``.

    Examples
    --------
    >>> abs(powexp(2, 0, 0.5) - cmath.e) < 1e-15
    True
    """
    a, mu, u = complex(a), complex(mu), complex(u)
    if mu == 0:
        return cmath.exp(a * u)
    base = 1 + mu * u
    if base == 0:
        raise PoleError(f"powexp is singular at u = {-1 / mu}")
    x = mu * u
    if abs(x) < 1e-4:
        # log(1+x) without cancellation for small μu
        lg = x * (1 - x * (1 / 2 - x * (1 / 3 - x * (1 / 4 - x / 5))))
    else:
        lg = cmath.log(base)
    return cmath.exp(a / mu * lg)
