"""Shadow polyhedra and their colored state sums.

A shadow here is a flat stratified polyhedron with numeric region data,
bounded by a framed graph.  Strata:

    regions            open 2-dimensional pieces; each carries the
                       compactly supported Euler characteristic of the open
                       piece, twice its gleam, and optionally a fixed color
    interior edges     triple lines where three region germs meet, either
                       arcs or circles
    interior vertices  points where four triple lines cross, locally a cone
                       over the 1-skeleton of a tetrahedron; six region
                       germs, recorded so slots (0,3), (1,4), (2,5) are the
                       opposite pairs
    boundary vertices  trivalent graph vertices on the boundary, with three
                       region germs
    boundary edges     edges of the boundary graph, arcs or circles, lying
                       on a single region and carrying the link color

A coloring assigns a nonnegative integer to every region so that the three
germs at every interior edge satisfy the triangle inequalities with even
sum, and agrees with the color of every boundary edge.  The value of one
coloring is a product of unknot, theta, and tetrahedron evaluations tied
together by gleam phases; the bracket is the sum over all colorings, which
is finite exactly when every region is constrained through the fixed ones.

Colorings are enumerated up to a cap, and completeness of the enumeration
is certified rather than assumed: rounding any color above the cap down to
the parity-matching value just below it maps admissible colorings to
admissible colorings, so if no enumerated coloring touches the top two
color values, none exists beyond them either.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactq import INFINITE_ORDER, OrderValue, QPoly, QRat, ord_at_i
from .graphvals import (AdmissibilityError, ColorTriple, TetFrame, circle_eval,
                        is_admissible, is_red, tet_eval, theta_eval)

__all__ = [
    "Region",
    "InteriorEdge",
    "InteriorVertex",
    "BoundaryVertex",
    "BoundaryEdge",
    "Shadow",
    "ShadowFormatError",
    "ShadowValidationError",
    "InadmissibleColoringError",
    "UnboundedColoringError",
    "IncompleteBracketError",
    "shadow_from_json",
    "shadow_to_json",
    "validate_shadow",
    "ColoringEnumeration",
    "enumerate_colorings",
    "state_value",
    "BracketResult",
    "bracket",
    "OddSurface",
    "odd_surface",
    "StateBoundReport",
    "verify_state_bound",
    "RibbonReport",
    "ribbon_report",
]


class ShadowFormatError(ValueError):
    """Malformed shadow description (missing keys, wrong shapes, bad types)."""


class ShadowValidationError(ValueError):
    """A structurally well-formed shadow that violates polyhedron invariants."""

    def __init__(self, issues: Sequence[str]):
        self.issues = tuple(issues)
        super().__init__("; ".join(self.issues))


class InadmissibleColoringError(ValueError):
    """A coloring that breaks a triangle, parity, or boundary constraint."""


class UnboundedColoringError(ValueError):
    """Some region is not tied to any fixed color, so no cap is ever complete."""

    def __init__(self, regions: Sequence[str]):
        self.regions = tuple(sorted(regions))
        super().__init__(
            "regions not constrained through any fixed color: "
            + ", ".join(self.regions))


class IncompleteBracketError(RuntimeError):
    """Asked to draw conclusions from an enumeration that was not certified."""


# ======================================================================
# Data model
# ======================================================================

_EDGE_KINDS = ("arc", "circle")


@dataclass(frozen=True)
class Region:
    id: str
    chi: int
    gleam2: int          # twice the gleam, always an integer
    color: int | None = None


@dataclass(frozen=True)
class InteriorEdge:
    id: str
    kind: str            # "arc" contributes to the state sum, "circle" does not
    regions: tuple[str, str, str]


@dataclass(frozen=True)
class InteriorVertex:
    id: str
    slots: tuple[str, str, str, str, str, str]   # opposite pairs (0,3), (1,4), (2,5)

    def triangles(self) -> tuple[tuple[str, str, str], ...]:
        a, b, c, d, e, f = self.slots
        return ((a, b, c), (a, e, f), (d, b, f), (d, e, c))


@dataclass(frozen=True)
class BoundaryVertex:
    id: str
    regions: tuple[str, str, str]


@dataclass(frozen=True)
class BoundaryEdge:
    id: str
    kind: str
    region: str
    color: int


@dataclass(frozen=True)
class Shadow:
    regions: tuple[Region, ...] = ()
    interior_edges: tuple[InteriorEdge, ...] = ()
    interior_vertices: tuple[InteriorVertex, ...] = ()
    boundary_vertices: tuple[BoundaryVertex, ...] = ()
    boundary_edges: tuple[BoundaryEdge, ...] = ()

    def region_index(self) -> dict[str, Region]:
        return {r.id: r for r in self.regions}


def _forced_colors(shadow: Shadow) -> tuple[dict[str, int], bool]:
    """Region colors forced before enumeration, plus a consistency flag.

    A boundary edge pins its supporting region to the edge color.  A clash
    between two forced values is not an error: it means no admissible
    coloring exists at any cap, so the flag comes back False.
    """
    forced: dict[str, int] = {}
    ok = True
    for r in shadow.regions:
        if r.color is not None:
            forced[r.id] = r.color
    for be in shadow.boundary_edges:
        prev = forced.get(be.region)
        if prev is None:
            forced[be.region] = be.color
        elif prev != be.color:
            ok = False
    return forced, ok


# ======================================================================
# Serialization
# ======================================================================

_TOP_KEYS = ("regions", "interior_edges", "interior_vertices",
             "boundary_vertices", "boundary_edges")


def _want(obj: dict, where: str, required: tuple[str, ...],
          optional: tuple[str, ...] = ()) -> None:
    if not isinstance(obj, dict):
        raise ShadowFormatError(f"{where}: expected an object, got {type(obj).__name__}")
    for key in required:
        if key not in obj:
            raise ShadowFormatError(f"{where}: missing key {key!r}")
    for key in obj:
        if key not in required and key not in optional:
            raise ShadowFormatError(f"{where}: unknown key {key!r}")


def _an_int(value, where: str) -> int:
    # bool is an int subclass; reject it explicitly
    if isinstance(value, bool) or not isinstance(value, int):
        raise ShadowFormatError(f"{where}: expected an integer, got {value!r}")
    return value


def _an_id(value, where: str) -> str:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ShadowFormatError(f"{where}: expected an id, got {value!r}")
    return str(value)


def _a_kind(value, where: str) -> str:
    if value not in _EDGE_KINDS:
        raise ShadowFormatError(f"{where}: kind must be 'arc' or 'circle', got {value!r}")
    return value


def _id_list(value, where: str, count: int) -> tuple[str, ...]:
    if not isinstance(value, (list, tuple)) or len(value) != count:
        raise ShadowFormatError(f"{where}: expected a list of {count} region ids")
    return tuple(_an_id(v, where) for v in value)


def shadow_from_json(data: dict) -> Shadow:
    """Build a Shadow from plain dict data, strictly."""
    _want(data, "shadow", _TOP_KEYS)
    for key in _TOP_KEYS:
        if not isinstance(data[key], list):
            raise ShadowFormatError(f"shadow: {key!r} must be a list")

    regions = []
    for item in data["regions"]:
        _want(item, "region", ("id", "chi", "gleam2"), ("color",))
        color = item.get("color")
        if color is not None:
            color = _an_int(color, "region color")
            if color < 0:
                raise ShadowFormatError(f"region color must be >= 0, got {color}")
        regions.append(Region(
            id=_an_id(item["id"], "region id"),
            chi=_an_int(item["chi"], "region chi"),
            gleam2=_an_int(item["gleam2"], "region gleam2"),
            color=color))

    interior_edges = []
    for item in data["interior_edges"]:
        _want(item, "interior edge", ("id", "kind", "regions"))
        interior_edges.append(InteriorEdge(
            id=_an_id(item["id"], "edge id"),
            kind=_a_kind(item["kind"], "interior edge"),
            regions=_id_list(item["regions"], "interior edge regions", 3)))

    interior_vertices = []
    for item in data["interior_vertices"]:
        _want(item, "interior vertex", ("id", "slots"))
        slots = _id_list(item["slots"], "interior vertex slots", 6)
        interior_vertices.append(InteriorVertex(
            id=_an_id(item["id"], "vertex id"), slots=slots))

    boundary_vertices = []
    for item in data["boundary_vertices"]:
        _want(item, "boundary vertex", ("id", "regions"))
        boundary_vertices.append(BoundaryVertex(
            id=_an_id(item["id"], "boundary vertex id"),
            regions=_id_list(item["regions"], "boundary vertex regions", 3)))

    boundary_edges = []
    for item in data["boundary_edges"]:
        _want(item, "boundary edge", ("id", "kind", "region", "color"))
        color = _an_int(item["color"], "boundary edge color")
        if color < 0:
            raise ShadowFormatError(f"boundary edge color must be >= 0, got {color}")
        boundary_edges.append(BoundaryEdge(
            id=_an_id(item["id"], "boundary edge id"),
            kind=_a_kind(item["kind"], "boundary edge"),
            region=_an_id(item["region"], "boundary edge region"),
            color=color))

    return Shadow(tuple(regions), tuple(interior_edges), tuple(interior_vertices),
                  tuple(boundary_vertices), tuple(boundary_edges))


def shadow_to_json(shadow: Shadow) -> dict:
    """Plain dict form of a shadow; inverse of shadow_from_json."""
    return {
        "regions": [
            {"id": r.id, "chi": r.chi, "gleam2": r.gleam2}
            | ({} if r.color is None else {"color": r.color})
            for r in shadow.regions],
        "interior_edges": [
            {"id": e.id, "kind": e.kind, "regions": list(e.regions)}
            for e in shadow.interior_edges],
        "interior_vertices": [
            {"id": v.id, "slots": list(v.slots)}
            for v in shadow.interior_vertices],
        "boundary_vertices": [
            {"id": v.id, "regions": list(v.regions)}
            for v in shadow.boundary_vertices],
        "boundary_edges": [
            {"id": e.id, "kind": e.kind, "region": e.region, "color": e.color}
            for e in shadow.boundary_edges],
    }


# ======================================================================
# Validation
# ======================================================================

def validate_shadow(shadow: Shadow) -> tuple[str, ...]:
    """Check polyhedron invariants; returns a tuple of problems, empty if sound.

    Checks: unique ids per stratum, all region references resolve, regions
    supporting boundary edges have a fixed color, every vertex germ triple
    (the four triangles of an interior vertex, the triple of a boundary
    vertex) matches the germ multiset of some interior edge, and the germ
    endpoint count balances: interior arcs have two ends, an interior
    vertex absorbs four, a boundary vertex absorbs one.
    """
    issues: list[str] = []
    region_ids = [r.id for r in shadow.regions]
    if len(set(region_ids)) != len(region_ids):
        issues.append("duplicate region ids")
    known = set(region_ids)

    for label, items in (("interior edge", shadow.interior_edges),
                         ("interior vertex", shadow.interior_vertices),
                         ("boundary vertex", shadow.boundary_vertices),
                         ("boundary edge", shadow.boundary_edges)):
        ids = [x.id for x in items]
        if len(set(ids)) != len(ids):
            issues.append(f"duplicate {label} ids")

    def check_refs(what: str, refs: Iterable[str]) -> None:
        for rid in refs:
            if rid not in known:
                issues.append(f"{what} references unknown region {rid!r}")

    for e in shadow.interior_edges:
        check_refs(f"interior edge {e.id!r}", e.regions)
    for v in shadow.interior_vertices:
        check_refs(f"interior vertex {v.id!r}", v.slots)
    for v in shadow.boundary_vertices:
        check_refs(f"boundary vertex {v.id!r}", v.regions)
    for e in shadow.boundary_edges:
        check_refs(f"boundary edge {e.id!r}", (e.region,))

    region_color = {r.id: r.color for r in shadow.regions}
    for e in shadow.boundary_edges:
        if region_color.get(e.region, None) is None and e.region in known:
            issues.append(
                f"boundary edge {e.id!r} lies on region {e.region!r} "
                "which has no fixed color")

    edge_multisets = {tuple(sorted(e.regions)) for e in shadow.interior_edges}
    for v in shadow.interior_vertices:
        for tri in v.triangles():
            if tuple(sorted(tri)) not in edge_multisets:
                issues.append(
                    f"interior vertex {v.id!r} has germ triple {tri} "
                    "matching no interior edge")
    for v in shadow.boundary_vertices:
        if tuple(sorted(v.regions)) not in edge_multisets:
            issues.append(
                f"boundary vertex {v.id!r} has germ triple {v.regions} "
                "matching no interior edge")

    arc_count = sum(1 for e in shadow.interior_edges if e.kind == "arc")
    ends = 4 * len(shadow.interior_vertices) + len(shadow.boundary_vertices)
    if 2 * arc_count != ends:
        issues.append(
            f"edge end count mismatch: {arc_count} interior arcs provide "
            f"{2 * arc_count} ends but vertices absorb {ends}")

    return tuple(issues)


def _require_valid(shadow: Shadow) -> None:
    issues = validate_shadow(shadow)
    if issues:
        raise ShadowValidationError(issues)


# ======================================================================
# Coloring enumeration
# ======================================================================

@dataclass(frozen=True)
class ColoringEnumeration:
    colorings: tuple[dict[str, int], ...]
    complete: bool
    cap: int


def _constraint_triples(shadow: Shadow) -> list[tuple[str, str, str]]:
    triples = [e.regions for e in shadow.interior_edges]
    triples += [v.regions for v in shadow.boundary_vertices]
    for v in shadow.interior_vertices:
        triples += list(v.triangles())
    return triples


def enumerate_colorings(shadow: Shadow, cap: int) -> ColoringEnumeration:
    """All admissible colorings with every free color at most cap.

    The enumeration is complete (no admissible coloring exists with any
    color above cap) exactly when no returned coloring touches cap-1 or
    cap: truncating colors above the cap to the matching parity inside
    the top band preserves admissibility, so anything beyond the cap
    shows up in the band first.  Raises UnboundedColoringError when a
    region has no constraint path to a fixed color, since no finite cap
    could then be complete.
    """
    forced, consistent = _forced_colors(shadow)
    if forced and cap < max(forced.values()) + 2:
        raise ValueError(
            f"cap {cap} is too small: must exceed the largest fixed color "
            f"{max(forced.values())} by at least 2")
    if not consistent:
        # contradictory fixed data admits no coloring at any cap
        return ColoringEnumeration((), True, cap)

    all_ids = sorted(r.id for r in shadow.regions)
    if not all_ids:
        return ColoringEnumeration(({},), True, cap)

    triples = _constraint_triples(shadow)

    # constraint reachability from the fixed regions
    adjacency: dict[str, set[str]] = {rid: set() for rid in all_ids}
    for tri in triples:
        for rid in tri:
            adjacency[rid].update(tri)
    seen = set(forced)
    frontier = sorted(forced)
    order: list[str] = []
    while frontier:
        next_frontier: set[str] = set()
        for rid in frontier:
            for other in adjacency[rid]:
                if other not in seen:
                    seen.add(other)
                    next_frontier.add(other)
                    order.append(other)
        frontier = sorted(next_frontier)
    unreached = [rid for rid in all_ids if rid not in seen]
    if unreached:
        raise UnboundedColoringError(unreached)

    by_region: dict[str, list[tuple[str, str, str]]] = {rid: [] for rid in all_ids}
    for tri in triples:
        for rid in set(tri):
            by_region[rid].append(tri)

    assignment = dict(forced)
    found: list[dict[str, int]] = []

    def candidates(rid: str) -> list[int]:
        best: list[int] | None = None
        for tri in by_region[rid]:
            others = list(tri)
            others.remove(rid)
            a, b = others
            if a == rid or b == rid:
                continue        # region meets this edge twice; full check below
            va, vb = assignment.get(a), assignment.get(b)
            if va is None or vb is None:
                continue
            lo, hi = abs(va - vb), min(va + vb, cap)
            dom = list(range(lo, hi + 1, 2))
            if best is None or len(dom) < len(best):
                best = dom
        if best is None:
            best = list(range(cap + 1))
        return best

    def consistent_at(rid: str) -> bool:
        for tri in by_region[rid]:
            vals = [assignment.get(r) for r in tri]
            if None in vals:
                continue
            if not is_admissible(vals):
                return False
        return True

    def search(pos: int) -> None:
        if pos == len(order):
            found.append(dict(assignment))
            return
        rid = order[pos]
        for c in candidates(rid):
            assignment[rid] = c
            if consistent_at(rid):
                search(pos + 1)
            del assignment[rid]

    # fixed-only constraints (no free region involved) must also hold
    feasible = True
    for tri in triples:
        vals = [forced.get(r) for r in tri]
        if None not in vals and not is_admissible(vals):
            feasible = False
            break

    if feasible:
        search(0)

    found.sort(key=lambda col: tuple(col[rid] for rid in all_ids))
    band = {cap - 1, cap}
    complete = all(band.isdisjoint(col.values()) for col in found)
    return ColoringEnumeration(tuple(found), complete, cap)


# ======================================================================
# State values
# ======================================================================

# i^k as coefficient pairs, indexed by k mod 4
_UNITS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def _gleam_phase(gleam2: int, color: int) -> QPoly:
    """Phase of one region: the framing eigenvalue to the power -gleam.

    For color c the eigenvalue on a 2c-framed ... is (-1)^c A^(c^2+2c);
    with gleam2 = twice the gleam this is i^(gleam2*c) x^(-gleam2*c*(c+2)).
    """
    k = (gleam2 * color) % 4
    return QPoly.monomial(-gleam2 * color * (color + 2), _UNITS[k])


def state_value(shadow: Shadow, coloring: Mapping[str, int]) -> QRat:
    """Exact value of one admissible coloring.

    Raises InadmissibleColoringError when the coloring misses a region,
    breaks an edge or vertex constraint, or contradicts a boundary color.
    """
    colors: dict[str, int] = {}
    for r in shadow.regions:
        c = coloring.get(r.id)
        if c is None or c < 0:
            raise InadmissibleColoringError(f"region {r.id!r} has no color")
        if r.color is not None and r.color != c:
            raise InadmissibleColoringError(
                f"region {r.id!r} is fixed to {r.color} but colored {c}")
        colors[r.id] = c

    def triple(ids: Sequence[str]) -> ColorTriple:
        t = ColorTriple(colors[ids[0]], colors[ids[1]], colors[ids[2]])
        if not is_admissible(t):
            raise InadmissibleColoringError(
                f"germ colors {tuple(t)} at {tuple(ids)} are inadmissible")
        return t

    for be in shadow.boundary_edges:
        if colors[be.region] != be.color:
            raise InadmissibleColoringError(
                f"boundary edge {be.id!r} has color {be.color} but its region "
                f"{be.region!r} is colored {colors[be.region]}")

    num = QPoly.one()
    den = QPoly.one()

    for r in shadow.regions:
        c = colors[r.id]
        if r.chi:
            circ = circle_eval(c)
            if r.chi > 0:
                num = num * circ ** r.chi
            else:
                den = den * circ ** (-r.chi)
        if r.gleam2 and c:
            num = num * _gleam_phase(r.gleam2, c)

    for e in shadow.interior_edges:
        t = triple(e.regions)
        if e.kind == "arc":
            th = theta_eval(t)
            num = num * th.den
            den = den * th.num
    for v in shadow.boundary_vertices:
        th = theta_eval(triple(v.regions))
        num = num * th.num
        den = den * th.den
    for v in shadow.interior_vertices:
        frame = TetFrame(*(colors[s] for s in v.slots))
        try:
            tv = tet_eval(frame)
        except AdmissibilityError as exc:
            raise InadmissibleColoringError(str(exc)) from exc
        num = num * tv.num
        den = den * tv.den
    for be in shadow.boundary_edges:
        if be.kind == "arc":
            circ = circle_eval(be.color)
            den = den * circ

    if den.is_zero:
        raise InadmissibleColoringError("state denominator vanishes identically")
    return QRat(num, den)


# ======================================================================
# The bracket
# ======================================================================

@dataclass(frozen=True)
class BracketResult:
    value: QRat
    ord_i: OrderValue
    states_evaluated: int
    complete: bool
    cap_used: int


def default_cap(shadow: Shadow) -> int:
    forced, _ = _forced_colors(shadow)
    return (max(forced.values()) if forced else 0) + 16


def bracket(shadow: Shadow, cap: int | None = None, threads: int = 1) -> BracketResult:
    """Sum of all admissible state values, with a completeness certificate.

    States are evaluated and summed in a canonical sorted order, so the
    result is deterministic.  threads > 1 evaluates states concurrently
    (useful only when evaluation cost dwarfs interpreter overhead);
    the summation order is unchanged.
    """
    _require_valid(shadow)
    if cap is None:
        cap = default_cap(shadow)
    enum = enumerate_colorings(shadow, cap)
    states = enum.colorings
    if threads > 1 and len(states) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(lambda s: state_value(shadow, s), states))
    else:
        values = [state_value(shadow, s) for s in states]
    total = QRat.zero()
    for v in values:
        total = total + v
    return BracketResult(
        value=total,
        ord_i=ord_at_i(total),
        states_evaluated=len(states),
        complete=enum.complete,
        cap_used=cap)


# ======================================================================
# Odd subsurfaces and order bounds
# ======================================================================

@dataclass(frozen=True)
class OddSurface:
    """The subsurface of a colored shadow spanned by odd strata.

    A region belongs to it when its color is odd; an edge when any of its
    germs is odd (evenness of germ sums then forces exactly two odd germs,
    so the result is a surface); a vertex when any incident germ is odd.
    chi adds the compactly supported Euler characteristics of the member
    strata: regions by their chi, vertices +1, open edge arcs -1, circles 0.
    """

    regions: tuple[str, ...]
    interior_edges: tuple[str, ...]
    interior_vertices: tuple[str, ...]
    boundary_vertices: tuple[str, ...]
    boundary_edges: tuple[str, ...]
    chi: int


def odd_surface(shadow: Shadow, coloring: Mapping[str, int]) -> OddSurface:
    odd = {r.id for r in shadow.regions if coloring[r.id] % 2}
    regions = tuple(sorted(odd))
    chi = sum(r.chi for r in shadow.regions if r.id in odd)

    member_edges = []
    for e in shadow.interior_edges:
        if any(rid in odd for rid in e.regions):
            member_edges.append(e.id)
            if e.kind == "arc":
                chi -= 1
    member_iv = []
    for v in shadow.interior_vertices:
        if any(rid in odd for rid in v.slots):
            member_iv.append(v.id)
            chi += 1
    member_bv = []
    for v in shadow.boundary_vertices:
        if any(rid in odd for rid in v.regions):
            member_bv.append(v.id)
            chi += 1
    member_be = []
    for e in shadow.boundary_edges:
        if e.region in odd:
            member_be.append(e.id)
            if e.kind == "arc":
                chi -= 1

    return OddSurface(regions, tuple(sorted(member_edges)),
                      tuple(sorted(member_iv)), tuple(sorted(member_bv)),
                      tuple(sorted(member_be)), chi)


@dataclass(frozen=True)
class StateBoundReport:
    """One state's exact order at q = i against its topological lower bound.

    The bound is chi(odd surface) - red/2 where red counts boundary
    vertices whose germ triple is red under the coloring.
    """

    ord_i: OrderValue
    chi: int
    red_boundary: int
    bound: Fraction
    holds: bool
    surface: OddSurface


def verify_state_bound(shadow: Shadow, coloring: Mapping[str, int]) -> StateBoundReport:
    value = state_value(shadow, coloring)
    surface = odd_surface(shadow, coloring)
    red = 0
    for v in shadow.boundary_vertices:
        t = ColorTriple(*(coloring[r] for r in v.regions))
        if is_red(t):
            red += 1
    bound = Fraction(surface.chi) - Fraction(red, 2)
    o = ord_at_i(value)
    holds = True if o == INFINITE_ORDER else Fraction(o) >= bound
    return StateBoundReport(o, surface.chi, red, bound, holds, surface)


# ======================================================================
# Ribbon conclusions
# ======================================================================

@dataclass(frozen=True)
class RibbonReport:
    """What the order at q = i says about ribbon surfaces.

    Any ribbon surface bounded by the link has Euler characteristic at most
    ord_i.  A ribbon link with n components bounds n disjoint discs
    (chi = n), so ord_i < n excludes that; for a knot, a genus-g ribbon
    surface has chi = 1 - 2g, giving the genus lower bound.
    """

    components: int
    ord_i: OrderValue
    max_ribbon_euler: OrderValue
    ribbon_excluded: bool
    genus_lower_bound: int | None


def ribbon_report(result: BracketResult, components: int) -> RibbonReport:
    if not result.complete:
        raise IncompleteBracketError(
            "bracket enumeration was not certified complete; "
            "raise the cap before drawing ribbon conclusions")
    if components < 1:
        raise ValueError("a link has at least one component")
    o = result.ord_i
    if o == INFINITE_ORDER:
        return RibbonReport(components, o, o, False, 0 if components == 1 else None)
    excluded = o < components
    genus: int | None = None
    if components == 1:
        genus = max(0, math.ceil(Fraction(1 - o, 2)))
    return RibbonReport(components, o, o, excluded, genus)
