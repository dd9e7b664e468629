"""Series evaluation against mpmath, ₂F₀, Chebyshev forms, degenerate family."""

from __future__ import annotations

import cmath
import math

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unihyper import EquationParams, PolyC, gauss2f1_params, kummer1f1_params, zerof1_params
from unihyper.errors import BranchCut, DomainError, NotApplicable
from unihyper.series import (
    CHEBYSHEV_KINDS,
    DegenerateParams,
    basic_pair_residuals,
    chebyshev_candidate,
    chebyshev_check,
    chebyshev_residual,
    degenerate_proportionality,
    eval_classical,
    f20_general,
    f20_kummer,
    f20_partial_sum,
    olver_F,
    terminating_series_poly,
    unified_coefficients,
    unified_F,
)

param = st.builds(
    complex,
    st.floats(min_value=-2.5, max_value=2.5, allow_nan=False),
    st.floats(min_value=-1, max_value=1, allow_nan=False),
)
cparam = st.builds(
    complex,
    st.floats(min_value=0.3, max_value=3, allow_nan=False),
    st.floats(min_value=-1, max_value=1, allow_nan=False),
)
disk = st.builds(
    lambda r, t: 0.7 * r * cmath.exp(1j * t),
    st.floats(min_value=0, max_value=1, allow_nan=False),
    st.floats(min_value=0, max_value=2 * math.pi, allow_nan=False),
)
plane = st.builds(
    complex,
    st.floats(min_value=-4, max_value=4, allow_nan=False),
    st.floats(min_value=-4, max_value=4, allow_nan=False),
)


def rel(x, y):
    return abs(complex(x) - complex(y)) / max(abs(complex(y)), 1e-300)


@settings(max_examples=60, deadline=None)
@given(param, param, cparam, disk)
def test_gauss_matches_mpmath(a, b, c, z):
    ref = complex(mp.hyp2f1(a, b, c, z))
    assert rel(eval_classical("Gauss2F1", {"a": a, "b": b, "c": c}, z).value, ref) < 1e-11
    assert rel(unified_F(gauss2f1_params(a, b, c), z).value, ref) < 1e-11


@settings(max_examples=60, deadline=None)
@given(param, cparam, plane)
def test_kummer_matches_mpmath(a, c, z):
    ref = complex(mp.hyp1f1(a, c, z))
    assert rel(eval_classical("Kummer1F1", {"a": a, "c": c}, z).value, ref) < 1e-10
    assert rel(unified_F(kummer1f1_params(a, c), z).value, ref) < 1e-10


@settings(max_examples=60, deadline=None)
@given(cparam, plane)
def test_zerof1_matches_mpmath(c, z):
    ref = complex(mp.hyp0f1(c, z))
    assert rel(eval_classical("ZeroF1", {"c": c}, z).value, ref) < 1e-11
    assert rel(unified_F(zerof1_params(c), z).value, ref) < 1e-11


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_olver_normalisation_at_nonpositive_integer_c(m):
    """𝐅(a;−m;z) = (a)ₘ₊₁ z^{m+1}/(m+1)! · ₁F₁(a+m+1; m+2; z) at the poles of Γ(c)."""
    a, z = 0.7, 0.4 + 0.2j
    ref = complex(mp.rf(a, m + 1) * z ** (m + 1) / mp.factorial(m + 1) * mp.hyp1f1(a + m + 1, m + 2, z))
    assert rel(eval_classical("Kummer1F1Olver", {"a": a, "c": -m}, z).value, ref) < 1e-12
    assert rel(olver_F(kummer1f1_params(a, -m), z).value, ref) < 1e-12


def test_special_values():
    assert rel(unified_F(gauss2f1_params(1, 1, 2), 0.5).value, 2 * math.log(2)) < 1e-12
    assert rel(olver_F(zerof1_params(1.5), 1.0).value, math.sinh(2) / math.sqrt(math.pi)) < 1e-12
    assert rel(eval_classical("Kummer1F1", {"a": 2.5, "c": 2.5}, 1.0).value, math.e) < 1e-14


def test_derivative_orders_match_mpmath():
    p = gauss2f1_params(0.3, 1.2, 2.1)
    z = 0.35 - 0.2j
    for k in (1, 2, 3):
        ref = complex(mp.diff(lambda t: mp.hyp2f1(0.3, 1.2, 2.1, t), z, k))
        assert rel(unified_F(p, z, order=k).value, ref) < 1e-9


def test_unified_coefficients_recurrence():
    a, b, c = 0.3, 1.2, 2.1
    coeffs = unified_coefficients(gauss2f1_params(a, b, c), 6)
    for j, cj in enumerate(coeffs):
        expected = float(mp.rf(a, j) * mp.rf(b, j) / (mp.rf(c, j) * mp.factorial(j)))
        assert rel(cj, expected) < 1e-14


def test_gauss_outside_disk_raises():
    with pytest.raises(DomainError):
        eval_classical("Gauss2F1", {"a": 0.5, "b": 0.5, "c": 1.5}, 1.2)


def test_terminating_series_poly():
    p = terminating_series_poly([-3, 1.5], [2.5], 3)
    x = 0.37
    assert rel(p(x), complex(mp.hyp2f1(-3, 1.5, 2.5, x))) < 1e-14


# ---------------------------------------------------------------------------
# ₂F₀


@settings(max_examples=40, deadline=None)
@given(
    st.floats(min_value=0.1, max_value=2.5),
    st.floats(min_value=-2, max_value=2),
    st.floats(min_value=0.05, max_value=2),
    st.floats(min_value=0.3, max_value=2 * math.pi - 0.3),
)
def test_f20_matches_mpmath(a, b, r, t):
    w = r * cmath.exp(1j * t)
    ref = complex(mp.hyp2f0(a, b, w))
    assert rel(f20_general(a, b, w).value, ref) < 1e-10


@pytest.mark.parametrize("a", [-0.4, -1.3, -2.7 + 0.5j])
def test_f20_shift_for_negative_real_part(a):
    w = -0.6 + 0.4j
    ref = complex(mp.hyp2f0(a, 0.8, w))
    assert rel(f20_general(a, 0.8, w).value, ref) < 1e-10


def test_f20_shift_agrees_with_integral():
    a, b, w = 1.3, 0.4, -0.5 + 0.7j
    ref = f20_general(a, b, w, method="integral").value
    for n in (1, 2, 3):
        assert rel(f20_general(a, b, w, method="shift", shift=n).value, ref) < 1e-10


def test_f20_terminating_is_partial_sum():
    for n in range(5):
        w = 0.7 - 1.1j
        assert f20_general(-n, 2.3, w).value == f20_partial_sum(-n, 2.3, w, n)
        assert rel(f20_general(-n, 2.3, w).value, complex(mp.hyp2f0(-n, 2.3, w))) < 1e-13


def test_f20_cut_raises():
    with pytest.raises(BranchCut):
        f20_general(0.5, 0.5, 0.3)


def test_f20_truncation_error_scaling():
    a, b = 1.5, 0.5
    for n in range(7):
        ratios = []
        for r in (0.2, 0.1, 0.05):
            w = r * cmath.exp(0.75j * math.pi)
            ratios.append(abs(f20_general(a, b, w).value - f20_partial_sum(a, b, w, n)) / r ** (n + 1))
        assert max(ratios) / min(ratios) < 10


def test_f20_kummer_matches_mpmath_and_rejects_integer_difference():
    for a, b, w in ((0.7, 0.4, -0.5 + 0.3j), (-1.3, 0.6, -0.8), (0.3 + 0.2j, 1.1, -0.4 + 0.1j)):
        assert rel(f20_kummer(a, b, w), complex(mp.hyp2f0(a, b, w))) < 1e-12
    with pytest.raises(NotApplicable):
        f20_kummer(1.5, 0.5, -0.5)


def test_hermite_s_matches_definition():
    a, z = 0.7, 1.2 + 0.3j
    ref = complex(z ** (-a) * mp.hyp2f0(a / 2, (a + 1) / 2, -1 / z**2))
    assert rel(eval_classical("HermiteS", {"a": a}, z).value, ref) < 1e-12
    with pytest.raises(DomainError):
        eval_classical("HermiteS", {"a": a}, -1.0)


# ---------------------------------------------------------------------------
# Chebyshev forms


@pytest.mark.parametrize("kind", ["ZeroF1Sinh", "ZeroF1Cosh"])
@pytest.mark.parametrize("k", [0, 1, 2])
def test_zerof1_chebyshev(kind, k):
    z = 1.3 + 0.4j
    assert chebyshev_check(kind, k, None, z)["rel_err"] < 1e-10


def test_zerof1_sinh_against_mpmath():
    z = 0.8
    c = 1.5
    ref = complex(mp.hyp0f1(c, z) / mp.gamma(c))
    assert rel(math.sinh(2 * math.sqrt(z)) / math.sqrt(math.pi * z), ref) < 1e-14
    assert rel(chebyshev_check("ZeroF1Sinh", 0, None, z)["closed"], ref) < 1e-12


@pytest.mark.parametrize("kind", ["TwoF1Cos", "TwoF1Sin"])
@pytest.mark.parametrize("k", [0, 1, 2])
def test_gauss_chebyshev(kind, k):
    res = chebyshev_check(kind, k, {"lam": 0.3 + 0.1j}, 0.35)
    assert res["rel_err"] < 1e-10
    assert abs(res["printed_ratio"] - 1) > 1e-2


def test_chebyshev_kinds():
    assert set(CHEBYSHEV_KINDS) == {"TwoF1Sin", "TwoF1Cos", "ZeroF1Sinh", "ZeroF1Cosh"}


def test_frequency_is_square_root_of_omega():
    sigma = PolyC([1])
    good = chebyshev_residual(sigma, -1, 4, chebyshev_candidate(sigma, 4, -1, "sin"))
    bad = chebyshev_residual(sigma, -1, 4, chebyshev_candidate(sigma, 4, -1, "sin", printed=True))
    assert good < 1e-6
    assert bad > 1e-2


# ---------------------------------------------------------------------------
# degenerate family and recurrence pairs


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_degenerate_proportionality(m):
    p = EquationParams(PolyC([0, 1, -0.3]), PolyC([m, -0.8 + 0.1j]), 0.4 - 0.2j)
    assert degenerate_proportionality(p, 0.3 + 0.1j)["max_rel_err"] < 1e-9


def test_degenerate_rejects_non_integer_kappa0():
    p = EquationParams(PolyC([0, 1, -0.3]), PolyC([0.5, -0.8]), 0.4)
    with pytest.raises(NotApplicable):
        degenerate_proportionality(p, 0.3)


def test_degenerate_laurent_expansion():
    d = DegenerateParams(0.7, 0.4, 0.3, 0.5)
    z, u = 0.3 + 0.1j, 0.9 * cmath.exp(0.4j)
    total = sum(d.psi(z, m) * u**m for m in range(-40, 41))
    assert rel(total, d.kernel(u, z)) < 1e-12


def test_degenerate_duality():
    d = DegenerateParams(0.7, 0.4, 0.3, 0.5)
    z = 0.3 + 0.1j
    for m in range(4):
        assert rel(d.psi(z, -m), z**m * d.psi_tilde(z, m)) < 1e-14


@pytest.mark.parametrize(
    "params",
    [gauss2f1_params(0.3, 1.2, 2.1), kummer1f1_params(0.7 + 0.2j, 1.4), zerof1_params(1.7)],
)
@pytest.mark.parametrize("n", [0, 1, 2])
def test_basic_pairs(params, n):
    res = basic_pair_residuals(params, 0.25 - 0.1j, n)
    assert set(res) == {"pair1", "pair2", "pair3", "pair4"}
    assert max(res.values()) < 1e-9
