"""Exact chi_y genus, Hirzebruch class and motivic class computations."""

from fractions import Fraction

from ._core import (
    DomainError,
    ParseError,
    RegistryError,
    UnknownDeclarationError,
    blowup_checks,
    characteristic_class,
    chi_y,
    chi_y_terms,
    composition_check,
    dimension,
    euler_char_O,
    euler_char_Omega,
    fgl_axioms,
    fgl_inverse,
    gamma_pb_relation,
    ghrr_check,
    higher_chern_check,
    hodge,
    hodge_terms,
    hypersurface_chi,
    lambda_gamma_identities,
    reform_identity,
    render,
    run_cli,
    series,
    universal_relations,
    vrr_projection,
    yokura_identity,
)

__version__ = "0.1.0"


def chi_y_coefficients(expr, registry_json=None):
    """chi_y as {exponent of y: Fraction}."""
    return {k: Fraction(c) for k, c in chi_y_terms(expr, registry_json)}


def chi_y_at(expr, y, registry_json=None):
    """chi_y evaluated at a rational y (nonzero when negative powers occur)."""
    y = Fraction(y)
    return sum((c * y**k for k, c in chi_y_coefficients(expr, registry_json).items()), Fraction(0))
