"""Parameters, ladders, weights and normal-form classification."""

from __future__ import annotations

import cmath

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unihyper import (
    NORMAL_FORM_TAGS,
    EquationParams,
    InvalidDegree,
    PolyC,
    WeightForm,
    classify_riemann,
    gauss2f1_params,
    hermite_params,
    kummer1f1_params,
    ladder_params,
    params_from_sty,
    params_to_sty,
    twof0_params,
    weight_form,
    zerof1_params,
)
from unihyper.core import normal_form_triple

small = st.floats(min_value=-2, max_value=2, allow_nan=False, allow_infinity=False)
cplx = st.builds(complex, small, small)


def _params(s0, s1, s2, k0, k1, w):
    return EquationParams(PolyC([s0, s1, s2]), PolyC([k0, k1]), w)


param_strategy = st.builds(_params, cplx, cplx, cplx.filter(lambda v: abs(v) > 0.1), cplx, cplx, cplx)


def test_degree_validation():
    with pytest.raises(InvalidDegree):
        EquationParams(PolyC([0, 0, 0, 1]), PolyC([1]))
    with pytest.raises(InvalidDegree):
        EquationParams(PolyC([1]), PolyC([0, 0, 1]))
    with pytest.raises(InvalidDegree):
        EquationParams(PolyC([0]), PolyC([1]))


def test_tau_eta_relations():
    p = EquationParams(PolyC([0, 1, -1]), PolyC([0.5, -2]), 0.25)
    assert p.tau.isclose(PolyC([1.5, -4]))
    assert p.eta == pytest.approx(-1 + 0.25)
    q = params_from_sty(*params_to_sty(p))
    assert q.isclose(p)


def test_classical_dictionaries_have_expected_tau_eta():
    a, b, c = 0.3, 1.7, 2.2
    s, t, e = params_to_sty(gauss2f1_params(a, b, c))
    assert s.isclose(PolyC([0, 1, -1])) and t.isclose(PolyC([c, -(a + b + 1)]))
    assert e == pytest.approx(-a * b)
    s, t, e = params_to_sty(kummer1f1_params(a, c))
    assert s.isclose(PolyC([0, 1])) and t.isclose(PolyC([c, -1])) and e == pytest.approx(-a)
    s, t, e = params_to_sty(zerof1_params(c))
    assert t.isclose(PolyC([c])) and e == pytest.approx(-1)
    s, t, e = params_to_sty(twof0_params(a, b))
    assert s.isclose(PolyC([0, 0, 1])) and e == pytest.approx(a * b)
    s, t, e = params_to_sty(hermite_params(a))
    assert t.isclose(PolyC([0, -2])) and e == pytest.approx(-2 * a)


def test_ladder_formula():
    p = EquationParams(PolyC([0.2, 1, -0.6]), PolyC([0.4, -1.3]), 0.7)
    for n in (-2, 0, 1, 3, 0.5 + 0.2j):
        q = ladder_params(p, n)
        assert q.kappa.isclose(p.kappa + p.sigma.deriv() * n)
        expected = n * n * p.s2 / 2 + n * p.k1 + p.omega
        assert abs(q.omega - expected) < 1e-14


@settings(max_examples=40, deadline=None)
@given(param_strategy, cplx, cplx)
def test_ladder_composes(p, m, n):
    assert ladder_params(ladder_params(p, m), n).isclose(ladder_params(p, m + n), 1e-10)


@settings(max_examples=30, deadline=None)
@given(param_strategy)
def test_weight_solves_pearson(p):
    """σρ′ = κρ at points away from the singularities."""
    rho = weight_form(p)
    lg = rho.log_derivative()
    for z in (0.31 + 0.47j, -0.7 + 0.2j, 1.3 - 0.9j):
        if abs(p.sigma(z)) < 1e-3:
            continue
        assert abs(p.sigma(z) * lg(z) - p.kappa(z)) <= 1e-8 * max(1.0, abs(p.kappa(z)))


def test_weight_form_algebra():
    w = WeightForm.power(0, 0.5) * WeightForm.power(1, -1.5)
    z = 0.3 + 0.4j
    assert abs(w(z) - z**0.5 * (z - 1) ** -1.5) < 1e-14
    assert abs((w * w.inverse())(z) - 1) < 1e-14


def test_classify_examples():
    rep = classify_riemann(PolyC([0, 1, -1]), PolyC([1.5, -3]), PolyC([0, -2, 2]))
    assert rep.type_tag == "Gauss2F1"
    # a + b + 1 = 3 and ab = 2
    got = sorted((rep.normal_params["a"], rep.normal_params["b"]), key=lambda v: v.imag)
    assert abs(got[0] - (1 - 1j)) < 1e-12 and abs(got[1] - (1 + 1j)) < 1e-12
    assert abs(rep.normal_params["c"] - 1.5) < 1e-12
    airy = classify_riemann(PolyC([1]), PolyC.zero(), PolyC([0, 1]))
    assert airy.type_tag == "Airy" and not airy.hypergeometric_class


@pytest.mark.parametrize("tag", [t for t in NORMAL_FORM_TAGS if t != "Airy"])
def test_normal_forms_classify_to_themselves(tag):
    from unihyper.core import _PARAM_NAMES

    params = {n: 0.7 + 0.2j * (i + 1) for i, n in enumerate(_PARAM_NAMES[tag])}
    rep = classify_riemann(*normal_form_triple(tag, params))
    assert rep.type_tag == tag
    assert rep.hypergeometric_class


def test_scaled_shifted_gauss_recovers_parameters():
    """σ = 4 − z² on [−2, 2] is z ↦ (z+2)/4 applied to x(1−x)."""
    rep = classify_riemann(PolyC([4, 0, -1]), PolyC.zero(), PolyC.zero())
    assert rep.type_tag == "Gauss2F1"
    a, b = rep.affine_map
    assert abs(a - 0.25) < 1e-15 and abs(b - 0.5) < 1e-15
    # τ = 0 forces c = 0 and a + b + 1 = 0
    assert abs(rep.normal_params["c"]) < 1e-12
    assert abs(rep.normal_params["a"] + rep.normal_params["b"] + 1) < 1e-12


def test_kummer_classification_with_scaling():
    lam = 2.5
    # x = z/λ applied to x∂² + (c − x)∂ − a
    rep = classify_riemann(PolyC([0, 1]), PolyC([1.3, -1 / lam]), PolyC([0, -0.4 / lam]))
    assert rep.type_tag == "Kummer1F1"
    assert abs(rep.normal_params["a"] - 0.4) < 1e-12
    assert abs(rep.normal_params["c"] - 1.3) < 1e-12
    assert cmath.isclose(rep.affine_map[0], 1 / lam)
