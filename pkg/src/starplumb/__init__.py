"""Star-shaped negative-definite plumbing graphs, exactly.

Graphs and continued fractions, intersection forms with two
independent definiteness tests, Seifert data conversion, the three
rational-blow-down families, moment-polygon templates with an
independent verifier, and Laufer's rationality certificate.  All
arithmetic is exact rational.
"""

from .families import FamilyTag, generate, recognize
from .graph_core import (
    ContinuedFraction,
    StarPlumbing,
    cf_evaluate,
    cf_expand,
    fraction_from_str,
    fraction_to_str,
    intersection_matrix,
    is_negative_definite_matrix,
    is_negative_definite_star,
    leg_r,
)
from .rationality import fundamental_cycle, is_rational
from .seifert import SeifertData, plumbing_to_seifert, seifert_to_plumbing
from .toric import (
    Check,
    Condition4Error,
    LegTemplate,
    Template,
    TemplateError,
    VerifyReport,
    build_template,
    choose_u_split,
    mobius_step,
    sigma_of,
    tau_sequence,
    template_from_json_dict,
    template_to_json_dict,
    verify_template,
)
from .cli import main, render_svg

__version__ = "0.1.0"

__all__ = [
    "StarPlumbing", "ContinuedFraction", "cf_evaluate", "cf_expand", "leg_r",
    "intersection_matrix", "is_negative_definite_matrix", "is_negative_definite_star",
    "fraction_to_str", "fraction_from_str",
    "SeifertData", "seifert_to_plumbing", "plumbing_to_seifert",
    "FamilyTag", "generate", "recognize",
    "TemplateError", "Condition4Error", "LegTemplate", "Template", "Check",
    "VerifyReport", "tau_sequence", "sigma_of", "mobius_step", "choose_u_split",
    "build_template", "verify_template", "template_to_json_dict", "template_from_json_dict",
    "fundamental_cycle", "is_rational",
    "main", "render_svg",
    "__version__",
]
