"""Classical polynomial families against scipy/mpmath references."""

from __future__ import annotations

import json
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate, special

from unihyper.errors import NoOrthogonalityInterval, NotApplicable
from unihyper.poly import (
    FamilySpec,
    bessel_convention_report,
    classical_poly,
    closed_form_poly,
    generating_expand,
    jacobi_degree,
    jacobi_degree_printed,
    orthogonality_check,
    poly_table,
    polynomial_recurrences,
    pq1_norm,
    pq1_norm_printed,
    table_to_csv,
    table_to_json,
)

XS = np.linspace(-0.9, 0.9, 7)
param = st.floats(-0.9, 3.0, allow_nan=False)


def rel(x, y):
    return abs(complex(x) - complex(y)) / max(abs(complex(y)), 1.0)


@settings(max_examples=30, deadline=None)
@given(param, param, st.integers(0, 8))
def test_jacobi_matches_scipy(a, b, n):
    p = classical_poly(FamilySpec.jacobi(a, b), n)
    for x in XS:
        assert rel(p(x), special.eval_jacobi(n, a, b, x)) < 1e-10


@settings(max_examples=30, deadline=None)
@given(param, st.integers(0, 8))
def test_laguerre_matches_scipy(a, n):
    p = classical_poly(FamilySpec.laguerre(a), n)
    for x in XS + 1.0:
        assert rel(p(x), special.eval_genlaguerre(n, a, x)) < 1e-10


@pytest.mark.parametrize("n", range(8))
def test_hermite_normalisation(n):
    p = classical_poly(FamilySpec.hermite(), n)
    for x in XS:
        assert rel(p(x), special.eval_hermite(n, x) / math.factorial(n)) < 1e-12


@pytest.mark.parametrize("theta", [0.0, 1.5, -0.3])
@pytest.mark.parametrize("n", range(6))
def test_bessel_against_f20(theta, n):
    p = classical_poly(FamilySpec.bessel(theta), n)
    for x in (0.3, -0.7, 0.4 + 0.2j):
        ref = (-1) ** n * complex(mp.hyp2f0(-n, n + theta + 1, x)) / math.factorial(n)
        assert rel(p(x), ref) < 1e-12


@pytest.mark.parametrize(
    "spec",
    [FamilySpec.jacobi(0.3, 1.2), FamilySpec.laguerre(0.7), FamilySpec.bessel(0.4), FamilySpec.hermite()],
    ids=lambda s: s.family,
)
@pytest.mark.parametrize("n", range(7))
def test_closed_form_agrees(spec, n):
    p, q = classical_poly(spec, n), closed_form_poly(spec, n)
    assert max(abs(complex(u) - complex(v)) for u, v in zip(p.to_list(), q.to_list())) < 1e-10 * max(
        1.0, p.scale()
    )


@pytest.mark.parametrize(
    "spec",
    [FamilySpec.jacobi(0.3, 1.2), FamilySpec.laguerre(0.7), FamilySpec.bessel(0.4), FamilySpec.hermite()],
    ids=lambda s: s.family,
)
def test_generating_functions(spec):
    assert generating_expand(spec, 6).max_residual < 1e-12


@pytest.mark.parametrize(
    "spec",
    [FamilySpec.jacobi(0.3, 1.2), FamilySpec.jacobi(-0.5, -0.5), FamilySpec.laguerre(0.7), FamilySpec.hermite()],
    ids=lambda s: s.label(),
)
def test_orthogonality(spec):
    rep = orthogonality_check(spec, 6)
    assert rep.passed(1e-10)


def _quad_norm(spec, n):
    p = classical_poly(spec, n)
    if spec.family == "Jacobi":
        w = lambda x: (1 - x) ** spec.alpha * (1 + x) ** spec.beta  # noqa: E731
        lo, hi = -1, 1
    elif spec.family == "Laguerre":
        w = lambda x: x**spec.alpha * np.exp(-x)  # noqa: E731
        lo, hi = 0, np.inf
    else:
        w = lambda x: np.exp(-x * x)  # noqa: E731
        lo, hi = -np.inf, np.inf
    return integrate.quad(lambda x: abs(p(x)) ** 2 * w(x), lo, hi, limit=200, epsabs=0, epsrel=1e-12)[0]


@pytest.mark.parametrize(
    "spec", [FamilySpec.jacobi(0.3, 1.2), FamilySpec.laguerre(0.7), FamilySpec.hermite()], ids=lambda s: s.family
)
@pytest.mark.parametrize("n", [0, 2, 4])
def test_norms_against_quadrature(spec, n):
    rep = orthogonality_check(spec, n)
    assert rel(rep.gram[n, n], _quad_norm(spec, n)) < 1e-8
    assert rel(pq1_norm(spec, n), _quad_norm(spec, n)) < 1e-8


def test_printed_norm_only_differs_when_sigma_curved():
    jac = FamilySpec.jacobi(0.3, 1.2)
    assert rel(pq1_norm_printed(jac, 3), pq1_norm(jac, 3)) > 1e-3
    for spec in (FamilySpec.laguerre(0.7), FamilySpec.hermite()):
        assert rel(pq1_norm_printed(spec, 3), pq1_norm(spec, 3)) < 1e-12


def test_jacobi_degree_cases():
    assert jacobi_degree(0.3, 0.2, 4) == 4
    assert jacobi_degree(0.5, -2.5, 1) == 0
    assert jacobi_degree(-1, -1, 1) == -1
    assert jacobi_degree(-1, -3, 2) == 1
    assert jacobi_degree_printed(-1, -3, 2) == -1
    assert jacobi_degree_printed(0.5, -2.5, 1) == jacobi_degree(0.5, -2.5, 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_jacobi_degree_matches_exact_rodrigues(n):
    """Scan integer/half-integer parameters; compare with mpmath's Jacobi polynomial."""
    for a2 in range(-2 * n - 1, 3):
        for b2 in range(-2 * n - 1, 3):
            a, b = a2 / 2, b2 / 2
            d = jacobi_degree(a, b, n)
            p = classical_poly(FamilySpec.jacobi(a, b), n)
            assert (p.degree() if not p.is_zero() else -1) <= d
            # values from the explicit finite sum (no division by Γ at poles)
            x = mp.mpf("0.37")
            ref = mp.fsum(
                mp.binomial(n + a, n - k) * mp.binomial(n + b, k) * ((x - 1) / 2) ** k * ((x + 1) / 2) ** (n - k)
                for k in range(n + 1)
            )
            assert abs(complex(p(0.37)) - complex(ref)) < 1e-9 * max(1.0, abs(complex(ref)))


def test_integrability_errors():
    with pytest.raises(NoOrthogonalityInterval):
        orthogonality_check(FamilySpec.bessel(0.5), 3)
    with pytest.raises(NotApplicable):
        orthogonality_check(FamilySpec.jacobi(-1.5, 0.2), 3)


@pytest.mark.parametrize(
    "spec",
    [FamilySpec.jacobi(0.3, 1.2), FamilySpec.laguerre(0.7), FamilySpec.bessel(0.4), FamilySpec.hermite()],
    ids=lambda s: s.family,
)
@pytest.mark.parametrize("n", [1, 3])
def test_recurrences(spec, n):
    rep = polynomial_recurrences(spec, n)
    names = ["recur1", "recur2", "lower", "raise"]
    assert rep.max_residual(names) < 1e-10


def test_bessel_printed_recurrences_differ():
    rep = polynomial_recurrences(FamilySpec.bessel(0.4), 3)
    assert rep.residuals["lower_printed"] > 1e-3


def test_bessel_conventions():
    rep = bessel_convention_report(0.4, 3)
    assert abs(rep["2F0"]["ratio"] - (-1) ** 3) < 1e-12
    assert rep["equation"] < 1e-12
    assert rep["equation_half"] > 1e-3


def test_tables():
    spec = FamilySpec.laguerre(0.5)
    rows = poly_table(spec, 3)
    csv_text = table_to_csv(rows)
    assert csv_text.splitlines()[0].startswith("n,degree,c0_re,c0_im")
    assert len(csv_text.splitlines()) == 5
    doc = json.loads(table_to_json(rows, spec))
    assert doc["family"] == "Laguerre(alpha=0.5)"
    assert [r["degree"] for r in doc["rows"]] == [0, 1, 2, 3]
    assert table_to_json(rows, spec) == table_to_json(poly_table(spec, 3), spec)
