"""Contour quadrature, transforms and named representations against mpmath."""

from __future__ import annotations

import cmath
import math

import mpmath as mp
import numpy as np
import pytest

from unihyper import PolyC
from unihyper.errors import BoundaryTermNonzero, NotApplicable
from unihyper.poly import FamilySpec, classical_poly
from unihyper.quad import (
    REPRESENTATIONS,
    Circle,
    HalfLineDE,
    Segment,
    euler_transform,
    integrate,
    laplace_transform,
    named_representation,
    rodrigues_contour,
)
from unihyper.series import DegenerateParams


def rel(x, y):
    return abs(complex(x) - complex(y)) / max(abs(complex(y)), 1e-300)


def test_circle_residue():
    res = integrate(lambda t: 1 / t, Circle(0, 0.7))
    assert abs(res.value - 2j * math.pi) < 1e-13


def test_half_line_gamma():
    res = integrate(lambda t: np.sqrt(t) * np.exp(-t), HalfLineDE(0, 1))
    assert rel(res.value, math.gamma(1.5)) < 1e-12


def test_hankel_reciprocal_gamma():
    """(1/2πi)∫ eᵗt^{−c}dt = 1/Γ(c), the z = 0 case of the ₀F₁ loop."""
    for c in (0.5, 2.3, -1.7 + 0.4j):
        val = named_representation("Repr0F1Loop", {"c": c}, 0).value
        assert rel(val, complex(mp.rgamma(c))) < 1e-12


def test_representation_names():
    assert len(REPRESENTATIONS) == 9


@pytest.mark.parametrize("z", [0.3, -0.8 + 0.4j, 0.6j])
def test_euler_gauss(z):
    a, b, c = 0.6, 1.3 - 0.2j, 1.9
    ref = complex(mp.hyp2f1(a, b, c, z) / mp.gamma(c))
    assert rel(named_representation("Repr2F1Euler", {"a": a, "b": b, "c": c}, z).value, ref) < 1e-10


@pytest.mark.parametrize("name", ["Repr1F1Hankel", "Repr1F1Algebraic"])
@pytest.mark.parametrize("z", [1.4, -2.2 + 0.7j])
def test_kummer_representations(name, z):
    a, c = 0.6, 1.7 + 0.3j
    ref = complex(mp.hyp1f1(a, c, z) / mp.gamma(c))
    assert rel(named_representation(name, {"a": a, "c": c}, z).value, ref) < 1e-10


@pytest.mark.parametrize("z", [-0.7, -0.3 + 0.5j, 0.4 - 0.9j])
def test_f20_representation(z):
    a, b = 0.8, 0.35
    assert rel(named_representation("Repr2F0", {"a": a, "b": b}, z).value, complex(mp.hyp2f0(a, b, z))) < 1e-10


@pytest.mark.parametrize("name", ["ReprHermiteLaplace", "ReprHermiteEuler"])
def test_hermite_representations(name):
    a, z = 0.7, 1.1 - 0.4j
    ref = complex(z ** (-a) * mp.hyp2f0(a / 2, (a + 1) / 2, -1 / z**2))
    assert rel(named_representation(name, {"a": a}, z).value, ref) < 1e-10


@pytest.mark.parametrize("m", [-2, -1, 0, 1, 2])
def test_bessel_circle(m):
    z = 0.8 - 0.3j
    ref = complex(mp.hyp0f1(1 + m, z) / mp.gamma(1 + m)) if m >= 0 else complex(
        mp.rf(1, -m) * 0 + z ** (-m) * mp.hyp0f1(1 - m, z) / mp.gamma(1 - m)
    )
    for r in (0.5, 1.0, 2.0):
        assert rel(named_representation("Repr0F1Loop", {"m": m}, z, radius=r).value, ref) < 1e-10


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_psi_loops(m):
    d = DegenerateParams(0.8, 0.5, 0.4, 0.3)
    z = 0.2 + 0.1j
    p = {"a": 0.8, "b": 0.5, "mu": 0.4, "nu": 0.3, "m": m}
    assert rel(named_representation("PsiLoop", p, z).value, d.psi(z, m)) < 1e-10
    assert rel(named_representation("PsiTildeLoop", p, z).value, d.psi_tilde(z, m)) < 1e-10


def test_representation_preconditions():
    with pytest.raises(NotApplicable):
        named_representation("Repr2F1Euler", {"a": -0.5, "b": 1, "c": 2}, 0.3)
    with pytest.raises(NotApplicable):
        named_representation("Repr2F0", {"a": 0.5, "b": 1}, 0.3)


def test_laplace_transform_gives_kummer():
    """σ = z, κ₀ = c − a − z, n = a − 1 on [0, 1]."""
    a, c, z = 0.7, 1.9, 0.45
    res = laplace_transform(PolyC([0, 1]), PolyC([c - a, -1]), a - 1, Segment(0, 1), z)
    ref = cmath.exp(1j * math.pi * (c - a - 1)) * complex(mp.beta(a, c - a) * mp.hyp1f1(a, c, z))
    assert rel(res.value, ref) < 1e-10
    assert abs(res.boundary_term) < 1e-10


def test_euler_transform_boundary_and_strict_mode():
    sig, k0 = PolyC([0, 1, -1]), PolyC([0.5, -0.2])
    res = euler_transform(sig, k0, 0.4, HalfLineDE(1, 1), 0.3)
    assert res.boundary_ok and abs(res.boundary_term) < 1e-10
    with pytest.raises(BoundaryTermNonzero):
        euler_transform(sig, k0, 0.4, Segment(1.2, 1.6), 0.3, strict=True)
    loose = euler_transform(sig, k0, 0.4, Segment(1.2, 1.6), 0.3)
    assert not loose.boundary_ok


@pytest.mark.parametrize("n", [0, 1, 3, 5])
def test_rodrigues_contour_matches_polynomial(n):
    spec = FamilySpec.jacobi(0.3, 1.2)
    z = 0.25 + 0.1j
    val = rodrigues_contour(spec.sigma, spec.kappa, n, z).value * spec.prefactor(n)
    assert rel(val, classical_poly(spec, n)(z)) < 1e-10
