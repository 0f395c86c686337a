"""Exact bracket evaluation for colored links and trivalent graphs.

Values live in the ring of Laurent polynomials in x = q^(1/4) with Gaussian
integer coefficients, and its fractions.  Diagrams compile to shadows,
shadows evaluate to brackets by summing admissible colorings, and the order
of vanishing at q = i yields lower bounds for surfaces the link bounds.
"""

from .exactq import (GaussInt, INFINITE_ORDER, OrderValue, QPoly, QRat,
                     ord_at_i, render_canonical)
from .qcombinat import (MultinomialSpec, multinomial, ord_closed_form,
                        quantum_factorial, quantum_int, quantum_multinomial)
from .graphvals import (AdmissibilityError, ColorTriple, OrderBoundReport,
                        TetFrame, circle_eval, is_admissible, is_red,
                        order_bound_check, tet_eval, tet_order,
                        theta_eval)
from .shadowcore import (BoundaryEdge, BoundaryVertex, BracketResult,
                         ColoringEnumeration, InadmissibleColoringError,
                         IncompleteBracketError, InteriorEdge, InteriorVertex,
                         OddSurface, Region, RibbonReport, Shadow,
                         ShadowFormatError, ShadowValidationError,
                         StateBoundReport, UnboundedColoringError, bracket,
                         default_cap, enumerate_colorings, odd_surface,
                         ribbon_report, shadow_from_json, shadow_to_json,
                         state_value, validate_shadow, verify_state_bound)
from .builders import (circle_cone, surface_link_shadow, tet_cone,
                       theta_cone, threaded_knot_shadow)
from .diagram import (CompileError, CompileReport, Crossing, Diagram,
                      DiagramFormatError, Vertex, braid_closure,
                      choose_outer, compile_diagram, compute_faces,
                      diagram_from_json, diagram_to_json, g_edges)
from .skein import kauffman_bracket, loop_delta
from .examples_data import example, example_names

__version__ = "0.1.0"

__all__ = [
    "GaussInt", "INFINITE_ORDER", "OrderValue", "QPoly", "QRat",
    "ord_at_i", "render_canonical",
    "MultinomialSpec", "multinomial", "ord_closed_form",
    "quantum_factorial", "quantum_int", "quantum_multinomial",
    "AdmissibilityError", "ColorTriple", "OrderBoundReport", "TetFrame",
    "circle_eval", "is_admissible", "is_red", "order_bound_check",
    "tet_eval", "tet_order", "theta_eval",
    "BoundaryEdge", "BoundaryVertex", "BracketResult",
    "ColoringEnumeration", "InadmissibleColoringError",
    "IncompleteBracketError", "InteriorEdge", "InteriorVertex",
    "OddSurface", "Region", "RibbonReport", "Shadow",
    "ShadowFormatError", "ShadowValidationError", "StateBoundReport",
    "UnboundedColoringError", "bracket", "default_cap",
    "enumerate_colorings", "odd_surface", "ribbon_report",
    "shadow_from_json", "shadow_to_json", "state_value", "validate_shadow",
    "verify_state_bound",
    "circle_cone", "surface_link_shadow", "tet_cone", "theta_cone",
    "threaded_knot_shadow",
    "CompileError", "CompileReport", "Crossing", "Diagram",
    "DiagramFormatError", "Vertex", "braid_closure", "choose_outer",
    "compile_diagram", "compute_faces", "diagram_from_json",
    "diagram_to_json", "g_edges",
    "kauffman_bracket", "loop_delta",
    "example", "example_names",
    "__version__",
]
