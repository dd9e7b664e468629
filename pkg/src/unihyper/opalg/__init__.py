"""Differential-operator algebra and the Miller-algebra monomial actions."""

from __future__ import annotations

from .diffop import DiffOp, gauge_conjugate, inverse_mobius, mobius_substitute, op_commutator, op_compose, pretty
from .identities import (
    FactorizationReport,
    SymmetryReport,
    casimir_restrict,
    classical_symmetry_maps,
    inversion_involution,
    power_transformed,
    descending_lowering_product,
    hgc_operator,
    lowering_op,
    rodrigues_operator_residual,
    verify_factorization,
    verify_symmetry,
)
from .monomial import MillerGenerators, MonoTerm, MonomialOperator, miller_generators, verify_miller_commutation

__all__ = [
    "DiffOp",
    "op_compose",
    "op_commutator",
    "gauge_conjugate",
    "mobius_substitute",
    "inverse_mobius",
    "pretty",
    "hgc_operator",
    "lowering_op",
    "casimir_restrict",
    "classical_symmetry_maps",
    "inversion_involution",
    "power_transformed",
    "verify_symmetry",
    "SymmetryReport",
    "verify_factorization",
    "FactorizationReport",
    "descending_lowering_product",
    "rodrigues_operator_residual",
    "MonoTerm",
    "MonomialOperator",
    "MillerGenerators",
    "miller_generators",
    "verify_miller_commutation",
]
