"""Exact Lefschetz zeta functions of mapping tori and their cross sections."""

from ._core import (
    DegenerateQuotient,
    ParseError,
    ay_stretch_certificate,
    ay_verify_orbit,
    cokernel,
    determinant,
    exact_quotient,
    genus_search,
    largest_real_root,
    min_section_degree,
    sections_with_degree,
    smith_normal_form,
    verify_words,
    zeta,
)

__all__ = [
    "DegenerateQuotient",
    "ParseError",
    "ay_stretch_certificate",
    "ay_verify_orbit",
    "cokernel",
    "determinant",
    "exact_quotient",
    "genus_search",
    "largest_real_root",
    "min_section_degree",
    "sections_with_degree",
    "smith_normal_form",
    "verify_words",
    "zeta",
]
