"""Operator algebra: symmetries, factorizations and Miller-algebra relations."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unihyper import EquationParams, PolyC, RatFun, WeightForm, gauss2f1_params, kummer1f1_params
from unihyper.errors import NotApplicable
from unihyper.opalg import (
    DiffOp,
    classical_symmetry_maps,
    gauge_conjugate,
    hgc_operator,
    inversion_involution,
    miller_generators,
    mobius_substitute,
    op_commutator,
    power_transformed,
    rodrigues_operator_residual,
    verify_factorization,
    verify_miller_commutation,
    verify_symmetry,
)

small = st.floats(min_value=-1.5, max_value=1.5, allow_nan=False, allow_infinity=False)
cplx = st.builds(complex, small, small)


def _grounded(s2, k0, k1, w):
    return EquationParams(PolyC([0, 1, s2]), PolyC([k0, k1]), w)


def _general(s0, s1, s2, k0, k1, w):
    return EquationParams(PolyC([s0, s1, s2]), PolyC([k0, k1]), w)


# σ″ is either exactly zero or bounded away from it: as σ″ → 0 one inversion
# exponent grows like 1/σ″ and the transformed parameters overflow any tolerance
sigma2 = st.one_of(st.just(0j), cplx.filter(lambda v: abs(v) > 0.1))
grounded = st.builds(_grounded, sigma2, cplx, cplx.filter(lambda v: abs(v) > 0.2), cplx)
general = st.builds(_general, cplx, cplx, cplx.filter(lambda v: abs(v) > 0.1), cplx, cplx, cplx)


def test_heisenberg_relation():
    d, z = DiffOp.d(), DiffOp.mul(PolyC.x())
    assert op_commutator(d, z) == DiffOp.identity()


def test_hgc_operator_coefficients():
    p = EquationParams(PolyC([0, 1, -1]), PolyC([0.5, -2]), 0.25)
    op = hgc_operator(p)
    assert op.coeff(2).as_poly().isclose(p.sigma)
    assert op.coeff(1).as_poly().isclose(p.tau)
    assert op.coeff(0).as_poly().isclose(PolyC([p.eta]))


def test_gauge_conjugate_of_derivative():
    g = gauge_conjugate(DiffOp.d(), WeightForm.power(0, 2))
    assert g == DiffOp({1: 1, 0: RatFun(PolyC([-2]), PolyC([0, 1]))})


def test_mobius_inversion_of_derivative():
    assert mobius_substitute(DiffOp.d(), (0, -1, 1, 0)) == DiffOp({1: PolyC([0, 0, 1])})


@settings(max_examples=25, deadline=None)
@given(general)
def test_basic_symmetry(p):
    rep = verify_symmetry("Basic", p)
    assert rep.residual < 1e-10
    back = verify_symmetry("Basic", rep.transformed_params).transformed_params
    assert back.isclose(p, 1e-12)


@settings(max_examples=25, deadline=None)
@given(grounded)
def test_power_symmetry_and_involution(p):
    rep = verify_symmetry("Power", p)
    assert rep.residual < 1e-10
    assert power_transformed(rep.transformed_params).isclose(p, 1e-12)


@settings(max_examples=25, deadline=None)
@given(grounded)
def test_inversion_symmetry(p):
    rep = verify_symmetry("Inversion", p)
    assert rep.residual < 1e-10
    twice = inversion_involution(p)
    assert twice["returns_up_to_sign"]
    assert twice["second_residual"] < 1e-10
    assert twice["exponent_residual"] < 1e-12


def test_power_needs_normalised_sigma():
    with pytest.raises(NotApplicable):
        verify_symmetry("Power", EquationParams(PolyC([1, 1]), PolyC([0, -1])))


def test_inversion_printed_exponent_equation_fails():
    """The alternative exponent equation does not give an identity."""
    for p in (gauss2f1_params(0.3, 1.7, 2.2), kummer1f1_params(0.4, 1.3)):
        rep = verify_symmetry("Inversion", p)
        assert rep.residual < 1e-12
        assert rep.extra["printed_residual"] > 0.1


def test_classical_symmetry_maps():
    maps = classical_symmetry_maps(0.37 + 0.1j, 1.21, 2.63 - 0.2j)
    assert len(maps) == 11
    for name, (res, sign) in maps.items():
        assert res < 1e-12, name
    assert maps["1F1 basic"][1] == -1
    assert maps["2F1 basic"][1] == 1


@settings(max_examples=30, deadline=None)
@given(general, cplx)
def test_factorization_identities(p, n):
    assert verify_factorization(p, n).passed


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_rodrigues_operator_product(n):
    p = EquationParams(PolyC([1, 0, -1]), PolyC([0.3, -1.1]))
    assert rodrigues_operator_residual(p, n) < 1e-10


@pytest.mark.parametrize(
    "params, tag",
    [
        (EquationParams(PolyC([0.2, 1, -0.4]), PolyC([0.3, -1.1]), 0.5), "sl(2,C)+C"),
        (EquationParams(PolyC([1]), PolyC([0, -2])), "osc(C)"),
        (EquationParams(PolyC([0.5, 1]), PolyC([0.7]), 0.1), "C^2 x so(2,C) + C"),
    ],
)
@pytest.mark.parametrize("representation", ["Reduced", "Full"])
def test_miller_relations(params, tag, representation):
    gens = miller_generators(params, representation)
    rep = verify_miller_commutation(gens, 5)
    assert rep.algebra_tag == tag
    assert rep.max_residual < 1e-12
