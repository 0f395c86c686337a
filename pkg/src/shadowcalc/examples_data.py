"""A small corpus of named diagrams and shadows.

These back the ``examples`` subcommand and double as test fixtures.  Each
entry produces a JSON document of the advertised kind together with a one
line note on what it is good for.
"""

from __future__ import annotations

from . import builders
from .diagram import Crossing, Diagram, Vertex, braid_closure, diagram_to_json
from .shadowcore import (InteriorEdge, Region, BoundaryEdge, Shadow,
                         shadow_to_json)

__all__ = ["example_names", "example", "EXAMPLES"]


def _kink(over: int) -> Diagram:
    # One crossing, arc a the big loop, arc b the small one.  over=0 is the
    # positive kink (writhe +1), over=1 its mirror.
    return Diagram(
        arcs=("a", "b"),
        crossings=(Crossing(id="x",
                            ends=(("a", 1), ("b", 1), ("b", 0), ("a", 0)),
                            over=over),),
        vertices=(),
        outer_face=("a", "left"),
        holes=(),
        colors=())


def _clasp(over_x: int, over_y: int) -> Diagram:
    # Two strands crossing twice.  Alternating overs give the Hopf link,
    # equal overs cancel by a Reidemeister II move and give the 2-unlink.
    return Diagram(
        arcs=("aE", "aW", "bE", "bW"),
        crossings=(
            Crossing(id="x",
                     ends=(("bE", 1), ("aW", 0), ("bW", 0), ("aE", 1)),
                     over=over_x),
            Crossing(id="y",
                     ends=(("aE", 0), ("bW", 1), ("aW", 1), ("bE", 0)),
                     over=over_y),
        ),
        vertices=(),
        outer_face=("aW", "right"),
        holes=(),
        colors=())


def _theta(colors: dict[str, int] | None = None) -> Diagram:
    return Diagram(
        arcs=("b", "m", "t"),
        crossings=(),
        vertices=(
            Vertex(id="v1", ends=(("b", 0), ("m", 0), ("t", 0))),
            Vertex(id="v2", ends=(("t", 1), ("m", 1), ("b", 1))),
        ),
        outer_face=("t", "left"),
        holes=(),
        colors=tuple(sorted((colors or {}).items())))


def _ladder_shadow() -> Shadow:
    # Disc of color 2 glued twice along a free disc: admissible colorings
    # form the unbounded ladder b = 1, 2, 3, ... so no cap is complete.
    return Shadow(
        regions=(Region(id="A", chi=1, gleam2=0, color=2),
                 Region(id="B", chi=1, gleam2=0, color=None)),
        interior_edges=(InteriorEdge(id="e", kind="circle",
                                     regions=("A", "B", "B")),),
        interior_vertices=(),
        boundary_vertices=(),
        boundary_edges=(BoundaryEdge(id="b", kind="circle",
                                     region="A", color=2),))


def _free_sphere_shadow() -> Shadow:
    # A lone uncolored sphere: nothing pins its color down, so coloring
    # enumeration must refuse rather than truncate silently.
    return Shadow(
        regions=(Region(id="S", chi=2, gleam2=0, color=None),),
        interior_edges=(),
        interior_vertices=(),
        boundary_vertices=(),
        boundary_edges=())


EXAMPLES: dict[str, tuple[str, str]] = {
    "unknot": ("diagram", "round unknot, zero crossings"),
    "kink-positive": ("diagram", "unknot with one positive kink"),
    "kink-negative": ("diagram", "unknot with one negative kink"),
    "hopf": ("diagram", "Hopf link as a clasp"),
    "unlink-2": ("diagram", "2-unlink drawn with two cancelling crossings"),
    "trefoil": ("diagram", "closure of the 2-strand braid s1^3"),
    "figure-eight": ("diagram", "closure of the 3-strand braid s1 s2^-1 s1 s2^-1"),
    "theta": ("diagram", "planar theta graph, all colors 1"),
    "theta-123": ("diagram", "planar theta graph colored 1, 2, 3"),
    "shadow-theta-123": ("shadow", "cone shadow of the colored theta graph"),
    "shadow-threaded-g2": ("shadow",
                           "knot threading the surface of genus 2, color 1"),
    "shadow-ladder": ("shadow",
                      "colorings form an unbounded ladder; never complete"),
    "shadow-free-sphere": ("shadow",
                           "free color on a closed sphere; enumeration refuses"),
}


def example_names() -> tuple[str, ...]:
    return tuple(sorted(EXAMPLES))


def example(name: str) -> dict:
    """Return ``{"kind": ..., "note": ..., "data": ...}`` for a named example."""
    try:
        kind, note = EXAMPLES[name]
    except KeyError:
        raise KeyError(f"no example named {name!r}; "
                       f"choices: {', '.join(example_names())}") from None
    builders_map = {
        "unknot": lambda: braid_closure([], strands=1),
        "kink-positive": lambda: _kink(0),
        "kink-negative": lambda: _kink(1),
        "hopf": lambda: _clasp(1, 1),
        "unlink-2": lambda: _clasp(1, 0),
        "trefoil": lambda: braid_closure([1, 1, 1]),
        "figure-eight": lambda: braid_closure([1, -2, 1, -2]),
        "theta": lambda: _theta(),
        "theta-123": lambda: _theta({"t": 1, "m": 2, "b": 3}),
        "shadow-theta-123": lambda: builders.theta_cone(1, 2, 3),
        "shadow-threaded-g2": lambda: builders.threaded_knot_shadow(2),
        "shadow-ladder": _ladder_shadow,
        "shadow-free-sphere": _free_sphere_shadow,
    }
    obj = builders_map[name]()
    data = diagram_to_json(obj) if kind == "diagram" else shadow_to_json(obj)
    return {"kind": kind, "note": note, "data": data}
