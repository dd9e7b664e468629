"""Miller-algebra generators acting on Laurent monomials.

Functions of several variables are stored as sparse polynomials: a dict from
exponent tuples to complex coefficients.  Exponents of the auxiliary
variables (``w``, or ``t`` and ``s``) may be negative; the exponent of ``z``
stays non-negative.

An operator is a linear combination of *words*.  A word is a tuple of
factors written left to right in operator notation, so ``(x₁, x₂, x₃)``
means ``x₁∘x₂∘x₃`` and ``x₃`` acts first.  A factor is an atomic action
(multiply by a variable, by its inverse, or differentiate in it) or a
nested :class:`MonomialOperator`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from ..core import EquationParams
from ..polyc import PolyC

Poly = dict  # exponent tuple -> complex

REDUCED_VARS = ("w", "z")
FULL_VARS = ("t", "s", "z")


@dataclass(frozen=True)
class MonoTerm:
    """A single term ``coeff · Π vᵢ^{eᵢ}``."""

    coeff: complex
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.coeff == 0:
            raise ValueError("MonoTerm coefficient must be nonzero")

    def as_poly(self) -> Poly:
        return {tuple(self.exponents): complex(self.coeff)}


@dataclass(frozen=True)
class Atom:
    """Atomic action: ``kind`` is ``"mul"``, ``"inv"`` or ``"d"`` on variable ``var``."""

    kind: str
    var: int

    def apply(self, f: Poly) -> Poly:
        out: Poly = {}
        v = self.var
        for e, c in f.items():
            if self.kind == "d":
                k = e[v]
                if k == 0:
                    continue
                ne = e[:v] + (k - 1,) + e[v + 1 :]
                c = c * k
            else:
                step = 1 if self.kind == "mul" else -1
                ne = e[:v] + (e[v] + step,) + e[v + 1 :]
            out[ne] = out.get(ne, 0) + c
        return out


Factor = Union[Atom, "MonomialOperator"]


def _add_into(acc: Poly, f: Poly, scale: complex = 1) -> None:
    for e, c in f.items():
        acc[e] = acc.get(e, 0) + scale * c


class MonomialOperator:
    """Finite linear combination of words of atomic actions.

    Parameters
    ----------
    nvars : int
        Number of variables the operator acts on.
    words : iterable of (coefficient, tuple of factors)
    """

    def __init__(self, nvars: int, words: Iterable[tuple[complex, tuple]] = ()):
        self.nvars = nvars
        self.words = tuple((complex(c), tuple(w)) for c, w in words if c != 0)

    # constructors -------------------------------------------------------
    @classmethod
    def scalar(cls, nvars: int, c: complex) -> "MonomialOperator":
        return cls(nvars, [(c, ())])

    @classmethod
    def mul(cls, nvars: int, var: int, power: int = 1) -> "MonomialOperator":
        kind = "mul" if power >= 0 else "inv"
        return cls(nvars, [(1, (Atom(kind, var),) * abs(power))])

    @classmethod
    def d(cls, nvars: int, var: int) -> "MonomialOperator":
        return cls(nvars, [(1, (Atom("d", var),))])

    @classmethod
    def zpoly(cls, nvars: int, p: PolyC, zvar: int) -> "MonomialOperator":
        """Multiplication by a polynomial in ``z``."""
        return cls(nvars, [(c, (Atom("mul", zvar),) * k) for k, c in enumerate(p.coefficients)])

    # algebra -------------------------------------------------------------
    def __add__(self, other) -> "MonomialOperator":
        other = self._coerce(other)
        return MonomialOperator(self.nvars, self.words + other.words)

    __radd__ = __add__

    def __neg__(self) -> "MonomialOperator":
        return MonomialOperator(self.nvars, [(-c, w) for c, w in self.words])

    def __sub__(self, other) -> "MonomialOperator":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "MonomialOperator":
        """Scalar multiple, or composition when ``other`` is an operator."""
        if isinstance(other, MonomialOperator):
            return self @ other
        return MonomialOperator(self.nvars, [(c * other, w) for c, w in self.words])

    __rmul__ = __mul__

    def __matmul__(self, other: "MonomialOperator") -> "MonomialOperator":
        # keep both sides as nested factors: no expansion of words
        return MonomialOperator(self.nvars, [(1, (self, other))])

    def _coerce(self, other) -> "MonomialOperator":
        if isinstance(other, MonomialOperator):
            return other
        return MonomialOperator.scalar(self.nvars, other)

    # action ----------------------------------------------------------------
    def apply(self, f: Poly | MonoTerm) -> Poly:
        """Apply to a sparse polynomial; zero coefficients are dropped."""
        if isinstance(f, MonoTerm):
            f = f.as_poly()
        out: Poly = {}
        for c, word in self.words:
            g = f
            for factor in reversed(word):
                g = factor.apply(g)
                if not g:
                    break
            _add_into(out, g, c)
        return {e: c for e, c in out.items() if c != 0}


def commutator_apply(a: MonomialOperator, b: MonomialOperator, f: Poly) -> Poly:
    """``[a, b] f`` computed as ``a(b f) − b(a f)``."""
    out = dict(a.apply(b.apply(f)))
    _add_into(out, b.apply(a.apply(f)), -1)
    return out


def poly_scale(*fs: Poly) -> float:
    return max((abs(c) for f in fs for c in f.values()), default=0.0)


def algebra_tag(alpha: complex, beta: complex) -> str:
    """Isomorphism class of Miller's algebra ``m_{α,β}``."""
    if alpha != 0:
        return "sl(2,C)+C"
    if beta != 0:
        return "osc(C)"
    return "C^2 x so(2,C) + C"


@dataclass(frozen=True)
class MillerGenerators:
    """``N, A₊, A₋, 𝟙`` for one of the two representations.

    Attributes
    ----------
    representation : {"Reduced", "Full"}
    variables : tuple of str
    algebra_tag : str
    constraint : MonomialOperator or None
        Multiplication by ``σ(z) − ts`` (Full representation only).
    """

    params: EquationParams
    representation: str
    variables: tuple[str, ...]
    N: MonomialOperator
    Aplus: MonomialOperator
    Aminus: MonomialOperator
    One: MonomialOperator
    algebra_tag: str
    constraint: MonomialOperator | None = None

    def casimir(self) -> MonomialOperator:
        """``½(A₋A₊ + A₊A₋) + αN² + βN``."""
        p = self.params
        N, Ap, Am = self.N, self.Aplus, self.Aminus
        return 0.5 * (Am @ Ap) + 0.5 * (Ap @ Am) + p.alpha * (N @ N) + p.beta * N


def miller_generators(params: EquationParams, representation: str = "Reduced") -> MillerGenerators:
    """Build the generators of Miller's algebra for ``(σ, κ)``.

    Reduced (variables ``w, z``)::

        N = w∂_w,   A₊ = w∂_z,   A₋ = w⁻¹(σ∂_z + σ′w∂_w + κ)

    Full (variables ``t, s, z``)::

        N = t∂_t − s∂_s,   A₊ = t∂_z + σ′∂_s,   A₋ = s∂_z + σ′∂_t + κ/t

    Examples
    --------
    >>> from unihyper.core import hermite_params
    >>> miller_generators(hermite_params(0.0)).algebra_tag
    'osc(C)'
    """
    sigma, kappa = params.sigma, params.kappa
    dsig = sigma.deriv()
    tag = algebra_tag(params.alpha, params.beta)
    M = MonomialOperator
    if representation == "Reduced":
        n, W, Z = 2, 0, 1
        w, winv, dw, dz = M.mul(n, W), M.mul(n, W, -1), M.d(n, W), M.d(n, Z)
        N = w @ dw
        Ap = w @ dz
        Am = winv @ (M.zpoly(n, sigma, Z) @ dz + M.zpoly(n, dsig, Z) @ w @ dw + M.zpoly(n, kappa, Z))
        return MillerGenerators(params, "Reduced", REDUCED_VARS, N, Ap, Am, M.scalar(n, 1), tag)
    if representation == "Full":
        n, T, S, Z = 3, 0, 1, 2
        t, s, tinv = M.mul(n, T), M.mul(n, S), M.mul(n, T, -1)
        dt, ds, dz = M.d(n, T), M.d(n, S), M.d(n, Z)
        N = t @ dt - s @ ds
        Ap = t @ dz + M.zpoly(n, dsig, Z) @ ds
        Am = s @ dz + M.zpoly(n, dsig, Z) @ dt + M.zpoly(n, kappa, Z) @ tinv
        constraint = M.zpoly(n, sigma, Z) - t @ s
        return MillerGenerators(
            params, "Full", FULL_VARS, N, Ap, Am, M.scalar(n, 1), tag, constraint
        )
    raise ValueError(f"unknown representation {representation!r}")


def monomial_basis(representation: str, degree_bound: int) -> list[tuple[int, ...]]:
    """Exponent tuples with total absolute degree ≤ ``degree_bound``.

    Auxiliary variables range over negative exponents too; ``z`` does not.
    """
    b = degree_bound
    out = []
    if representation == "Reduced":
        for i in range(-b, b + 1):
            for k in range(0, b + 1 - abs(i)):
                out.append((i, k))
    else:
        for i in range(-b, b + 1):
            for j in range(-b, b + 1):
                for k in range(0, b + 1 - abs(i) - abs(j)):
                    out.append((i, j, k))
    return out


@dataclass(frozen=True)
class CommutationReport:
    """Worst relative residual of every checked relation."""

    residuals: dict
    monomials_checked: int
    algebra_tag: str

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values(), default=0.0)

    @property
    def passed(self) -> bool:
        return self.max_residual < 1e-12


def verify_miller_commutation(gens: MillerGenerators, degree_bound: int = 6) -> CommutationReport:
    """Check the relations of Miller's algebra on every basis monomial.

    Relations: ``[N,A₊]=A₊``, ``[N,A₋]=−A₋``, ``[A₊,A₋]=σ″N+κ′𝟙``, and
    ``[𝒞,X]=0`` for ``X ∈ {N, A₊, A₋}``; in the Full representation also
    ``[X, σ(z)−ts] = 0``.
    """
    p = gens.params
    N, Ap, Am = gens.N, gens.Aplus, gens.Aminus
    C = gens.casimir()
    checks = {
        "[N,A+]-A+": lambda f: _combine(commutator_apply(N, Ap, f), Ap.apply(f), -1),
        "[N,A-]+A-": lambda f: _combine(commutator_apply(N, Am, f), Am.apply(f), 1),
        "[A+,A-]-s''N-k'": lambda f: _combine(
            commutator_apply(Ap, Am, f), (p.s2 * N + p.k1).apply(f), -1
        ),
        "[C,N]": lambda f: (commutator_apply(C, N, f), C.apply(N.apply(f))),
        "[C,A+]": lambda f: (commutator_apply(C, Ap, f), C.apply(Ap.apply(f))),
        "[C,A-]": lambda f: (commutator_apply(C, Am, f), C.apply(Am.apply(f))),
    }
    if gens.constraint is not None:
        V = gens.constraint
        for name, X in (("N", N), ("A+", Ap), ("A-", Am)):
            checks[f"[{name},sigma-ts]"] = lambda f, X=X: (
                commutator_apply(X, V, f),
                X.apply(V.apply(f)),
            )
    worst = {k: 0.0 for k in checks}
    basis = monomial_basis(gens.representation, degree_bound)
    for e in basis:
        f = {e: 1 + 0j}
        for name, check in checks.items():
            diff, ref = check(f)
            scale = max(poly_scale(ref), 1.0)
            worst[name] = max(worst[name], poly_scale(diff) / scale)
    return CommutationReport(worst, len(basis), gens.algebra_tag)


def _combine(lhs: Poly, rhs: Poly, sign: int) -> tuple[Poly, Poly]:
    diff = dict(lhs)
    _add_into(diff, rhs, sign)
    return diff, rhs


def apply_to_terms(op: MonomialOperator, terms: Iterable[MonoTerm]) -> list[MonoTerm]:
    """Apply ``op`` to a sum of MonoTerms and return the result as MonoTerms."""
    f: Poly = {}
    for t in terms:
        _add_into(f, t.as_poly())
    return [MonoTerm(c, e) for e, c in sorted(op.apply(f).items())]


def reduced_casimir_on(gens: MillerGenerators, n: int, F: PolyC) -> PolyC:
    """Apply the Reduced Casimir to ``wⁿF(z)`` and return the ``wⁿ`` coefficient.

    The result is ``(𝒞ⁿ)F`` as a polynomial in ``z``.
    """
    if gens.representation != "Reduced":
        raise ValueError("needs the Reduced representation")
    f = {(n, k): complex(c) for k, c in enumerate(F.coefficients) if c != 0}
    out = gens.casimir().apply(f)
    deg = max((e[1] for e in out), default=-1)
    coeffs = [0j] * (deg + 1)
    for (i, k), c in out.items():
        if i != n:
            raise ArithmeticError("Casimir does not preserve the N-eigenspace")
        coeffs[k] += c
    return PolyC(coeffs)

