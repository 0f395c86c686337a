"""Ready-made shadows: atomic cones and two parametric families.

The cones realize the closed forms directly, so summing their single state
must reproduce circle_eval, theta_eval, and tet_eval on the nose; tests
hold them to that.  The two families live in more interesting ambient
manifolds:

    threaded_knot_shadow   a knot presented as the boundary of a shadow
                           with g one-handles threaded through it; for
                           g = 0 it collapses to the colored unknot cone
    surface_link_shadow    a link presented as the boundary of one region
                           of prescribed Euler characteristic, one
                           boundary circle per component

Every builder returns a shadow whose validate_shadow report is empty.
"""

from __future__ import annotations

from typing import Sequence

from .graphvals import AdmissibilityError, TetFrame, is_admissible
from .shadowcore import (BoundaryEdge, BoundaryVertex, InteriorEdge,
                         InteriorVertex, Region, Shadow)

__all__ = [
    "circle_cone",
    "theta_cone",
    "tet_cone",
    "threaded_knot_shadow",
    "surface_link_shadow",
]


def _color(c: int) -> int:
    c = int(c)
    if c < 0:
        raise AdmissibilityError(f"negative color {c}")
    return c


def circle_cone(a: int) -> Shadow:
    """Cone over an unknot colored a: one disc region, one boundary circle."""
    a = _color(a)
    return Shadow(
        regions=(Region("D", chi=1, gleam2=0, color=a),),
        boundary_edges=(BoundaryEdge("b", "circle", "D", a),))


def theta_cone(a: int, b: int, c: int) -> Shadow:
    """Cone over a theta graph: three half-discs along one interior arc."""
    colors = tuple(map(_color, (a, b, c)))
    if not is_admissible(colors):
        raise AdmissibilityError(f"inadmissible triple {colors}")
    ids = ("Da", "Db", "Dc")
    return Shadow(
        regions=tuple(Region(rid, chi=1, gleam2=0, color=col)
                      for rid, col in zip(ids, colors)),
        interior_edges=(InteriorEdge("core", "arc", ids),),
        boundary_vertices=(BoundaryVertex("v0", ids), BoundaryVertex("v1", ids)),
        boundary_edges=tuple(BoundaryEdge(f"b{rid}", "arc", rid, col)
                             for rid, col in zip(ids, colors)))


def tet_cone(a: int, b: int, c: int, d: int, e: int, f: int) -> Shadow:
    """Cone over a tetrahedral graph: six half-discs, one interior vertex.

    Edge colors follow the TetFrame convention: opposite pairs are (a,d),
    (b,e), (c,f), and the four triangles are the germ triples of the four
    interior arcs running from the central vertex to the boundary vertices.
    """
    frame = TetFrame(*(_color(v) for v in (a, b, c, d, e, f)))
    if not frame.admissible():
        raise AdmissibilityError(f"inadmissible tetrahedron frame {tuple(frame)}")
    names = ("Da", "Db", "Dc", "Dd", "De", "Df")
    by_slot = dict(zip("abcdef", names))
    triangles = (("a", "b", "c"), ("a", "e", "f"), ("d", "b", "f"), ("d", "e", "c"))
    tri_ids = tuple(tuple(by_slot[s] for s in tri) for tri in triangles)
    return Shadow(
        regions=tuple(Region(rid, chi=1, gleam2=0, color=col)
                      for rid, col in zip(names, frame)),
        interior_edges=tuple(InteriorEdge(f"e{k}", "arc", tri)
                             for k, tri in enumerate(tri_ids)),
        interior_vertices=(InteriorVertex("x", names),),
        boundary_vertices=tuple(BoundaryVertex(f"v{k}", tri)
                                for k, tri in enumerate(tri_ids)),
        boundary_edges=tuple(BoundaryEdge(f"b{rid}", "arc", rid, col)
                             for rid, col in zip(names, frame)))


def threaded_knot_shadow(genus: int, color: int = 1) -> Shadow:
    """A knot bounding a genus-g region with a one-handle disc through each hole.

    The big region R has chi = 1 - 2g and carries the knot; each of the g
    discs D_i meets R along a closed triple line with germs (D_i, R, R).
    The disc colors are free: admissibility forces them into {0, 2, ...,
    2*color}, and the enumeration certificate stays honest about the cap.
    """
    g = int(genus)
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    col = _color(color)
    regions = [Region("R", chi=1 - 2 * g, gleam2=2 * g, color=col)]
    edges = []
    for k in range(g):
        regions.append(Region(f"D{k}", chi=1, gleam2=-2))
        edges.append(InteriorEdge(f"t{k}", "circle", (f"D{k}", "R", "R")))
    return Shadow(
        regions=tuple(regions),
        interior_edges=tuple(edges),
        boundary_edges=(BoundaryEdge("b", "circle", "R", col),))


def surface_link_shadow(chi: int, colors: Sequence[int]) -> Shadow:
    """A link bounding a single region of Euler characteristic chi.

    One boundary circle per entry of colors, all lying on the same region,
    whose fixed color is colors[0]; mismatched entries therefore kill every
    state and the bracket vanishes.  A connected compact surface with
    b boundary circles has chi <= 2 - b, so larger values are rejected.
    """
    cols = [(_color(c)) for c in colors]
    if not cols:
        raise ValueError("a link needs at least one component color")
    chi = int(chi)
    if chi > 2 - len(cols):
        raise ValueError(
            f"no connected surface with {len(cols)} boundary circles "
            f"has Euler characteristic {chi}")
    return Shadow(
        regions=(Region("S", chi=chi, gleam2=0, color=cols[0]),),
        boundary_edges=tuple(BoundaryEdge(f"b{k}", "circle", "S", c)
                             for k, c in enumerate(cols)))
