"""Exact CCS-numbers and xi-invariants of finite fixed-point-free subgroups of U(2)."""

import json
from fractions import Fraction

from ._spherex import (
    Cyc,
    DivisionByZero,
    IrrationalXi,
    ParseError,
    ResourceError,
    SpecError,
    SpherexError,
    SpinError,
    telescoping_identity_check,
)
from . import _spherex as _core

__all__ = [
    "Cyc", "SpherexError", "ParseError", "SpecError", "ResourceError", "SpinError",
    "IrrationalXi", "DivisionByZero", "group_info", "character_table", "invariant_table",
    "classify", "conjecture_scan", "iso_checks", "verify_paper", "xi_closed_form_bd",
    "xi_closed_form_d", "telescoping_identity_check",
]


def group_info(spec):
    return json.loads(_core.group_info(spec))


def character_table(spec):
    return json.loads(_core.character_table(spec))


def invariant_table(spec, spin_character=None):
    """Rows carry c1 per generator, c2 and xi as exact "p/q" strings."""
    return json.loads(_core.invariant_table(spec, spin_character))


def classify(spec, spin_character=None):
    return json.loads(_core.classify(spec, spin_character))


def conjecture_scan(k_max, r_max, threads=0):
    return json.loads(_core.conjecture_scan(k_max, r_max, threads))


def iso_checks():
    return json.loads(_core.iso_checks())


def verify_paper():
    return json.loads(_core.verify_paper())


def xi_closed_form_bd(q, t):
    return Fraction(_core.xi_closed_form_bd(q, t))


def xi_closed_form_d(k, r, t, s):
    return Fraction(_core.xi_closed_form_d(k, r, t, s))
