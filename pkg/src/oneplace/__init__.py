"""Plane curves with one place at infinity: exact invariants and classification."""

from .algebra import QQ, NumberField, Polynomial, parse_polynomial
from .automorphism import Automorphism, Move
from .curves import (
    NOT_APPLICABLE,
    NOT_QH,
    S1,
    S2,
    S3,
    classify_mu_nu_gap_one,
    family_generator,
    invariant_report,
    is_quasihomogeneous,
    synthesize_automorphism,
    tres,
)
from .diffvals import INFINITE, ParametricCurve, basic_differential, differential_value_data, maximize_gap
from .errors import (
    FieldObstructionError,
    InsufficientTruncationError,
    InvariantViolation,
    MultiplePlacesError,
    OnePlaceError,
    ParseError,
    PreconditionError,
)
from .groebner import groebner, milnor_on_curve, milnor_pencil, quotient_dimension, tjurina_total
from .puiseux import expand_at_infinity, expansion
from .semigroup import characteristic_data, enumerate_gaps, from_generators, semigroup_conductor, theta

__all__ = [
    "INFINITE",
    "NOT_APPLICABLE",
    "NOT_QH",
    "QQ",
    "S1",
    "S2",
    "S3",
    "Automorphism",
    "FieldObstructionError",
    "InsufficientTruncationError",
    "InvariantViolation",
    "Move",
    "MultiplePlacesError",
    "NumberField",
    "OnePlaceError",
    "ParametricCurve",
    "ParseError",
    "Polynomial",
    "PreconditionError",
    "basic_differential",
    "characteristic_data",
    "classify_mu_nu_gap_one",
    "differential_value_data",
    "enumerate_gaps",
    "expand_at_infinity",
    "expansion",
    "family_generator",
    "from_generators",
    "groebner",
    "invariant_report",
    "is_quasihomogeneous",
    "maximize_gap",
    "milnor_on_curve",
    "milnor_pencil",
    "parse_polynomial",
    "quotient_dimension",
    "semigroup_conductor",
    "synthesize_automorphism",
    "theta",
    "tjurina_total",
]
