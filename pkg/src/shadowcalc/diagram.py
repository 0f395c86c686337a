"""Planar diagrams of framed links and trivalent graphs, and their shadows.

A diagram is a connected 4-valent/3-valent plane graph: arcs (edges) attach
by their two ends to crossings (four ends, in rotation order, with a
distinguished over strand) and trivalent vertices (three ends, in rotation
order).  An arc attached nowhere is a free loop, allowed only as the whole
diagram.  Faces are recovered from the rotation system; the embedding is
accepted only when V - E + F lands on a sphere.  One face is marked outer
and further faces may be punched out as holes; the diagram then presents
its link in the connected sum of (number of removed faces - 1) copies of
S^2 x S^1, the sphere case being one removed face.

Compilation builds the shadow whose boundary is the diagram's link: one
band per strand of the link graph (an annulus for a closed strand, a disc
for a strand running vertex to vertex), one region per surviving face, a
triple line along every arc separating two surviving faces, and a vertex of
the polyhedron over every crossing and trivalent vertex whose corners all
survive.  Removing a face degenerates the picture along its closure:

    an arc with one surviving side loses its triple line and its band is
    absorbed into the surviving face, an open arc lowering the merged
    region's Euler characteristic by one, a free loop leaving it unchanged;

    a crossing or vertex with exactly one removed corner loses its
    polyhedron vertex, the two remaining triple lines fusing into one that
    passes straight through (their germ triples agree after the merges);

    two or more removed corners at one cell leave nothing to attach the
    strands to, and compilation refuses with advice to isotope the diagram.

Gleams are collected per crossing: each of the four corners receives a half
twist, positive on the two corners that follow the over strand's ends in
rotation order, negative on the other diagonal, and corner contributions
land on whatever region finally contains the corner's face.  Removed corners are
recorded in the report but applied nowhere; each crossing's four
contributions always cancel.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping, Sequence

from .shadowcore import (BoundaryEdge, BoundaryVertex, InteriorEdge,
                         InteriorVertex, Region, Shadow)

__all__ = [
    "DiagramFormatError",
    "CompileError",
    "Crossing",
    "Vertex",
    "Diagram",
    "diagram_from_json",
    "diagram_to_json",
    "FaceSet",
    "compute_faces",
    "GEdge",
    "g_edges",
    "CompileReport",
    "compile_diagram",
    "braid_closure",
    "choose_outer",
]

#: A side of an arc: the arc id and the travel direction (end 0 -> end 1).
Dart = tuple[str, bool]

_SIDES = ("left", "right")


class DiagramFormatError(ValueError):
    """Malformed diagram description."""


class CompileError(ValueError):
    """The diagram cannot be turned into a shadow as drawn."""

    def __init__(self, cell: str, message: str):
        self.cell = cell
        super().__init__(f"{cell}: {message}")


@dataclass(frozen=True)
class Crossing:
    id: str
    ends: tuple[tuple[str, int], ...]   # four (arc, end) in rotation order
    over: int                           # strand through ends[over], ends[over+2]


@dataclass(frozen=True)
class Vertex:
    id: str
    ends: tuple[tuple[str, int], ...]   # three (arc, end) in rotation order


@dataclass(frozen=True)
class Diagram:
    arcs: tuple[str, ...]
    crossings: tuple[Crossing, ...] = ()
    vertices: tuple[Vertex, ...] = ()
    outer_face: tuple[str, str] | None = None     # (arc, side)
    holes: tuple[tuple[str, str], ...] = ()
    colors: tuple[tuple[str, int], ...] = ()      # explicit arc colors

    def color_map(self) -> dict[str, int]:
        return dict(self.colors)


# ----------------------------------------------------------------------
# Parsing
# ----------------------------------------------------------------------

def _an_id(value, where: str) -> str:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise DiagramFormatError(f"{where}: expected an id, got {value!r}")
    return str(value)


def _want(obj, where: str, required: tuple[str, ...],
          optional: tuple[str, ...] = ()) -> None:
    if not isinstance(obj, dict):
        raise DiagramFormatError(f"{where}: expected an object, got {type(obj).__name__}")
    for key in required:
        if key not in obj:
            raise DiagramFormatError(f"{where}: missing key {key!r}")
    for key in obj:
        if key not in required and key not in optional:
            raise DiagramFormatError(f"{where}: unknown key {key!r}")


def _end_ref(obj, where: str) -> tuple[str, int]:
    _want(obj, where, ("arc", "which_end"))
    we = obj["which_end"]
    if we not in (0, 1) or isinstance(we, bool):
        raise DiagramFormatError(f"{where}: which_end must be 0 or 1, got {we!r}")
    return (_an_id(obj["arc"], where), we)


def _face_ref(obj, where: str) -> tuple[str, str]:
    _want(obj, where, ("arc", "side"))
    side = obj["side"]
    if side not in _SIDES:
        raise DiagramFormatError(f"{where}: side must be 'left' or 'right', got {side!r}")
    return (_an_id(obj["arc"], where), side)


def diagram_from_json(data: dict) -> Diagram:
    _want(data, "diagram", ("arcs", "crossings", "vertices"),
          ("outer_face", "holes", "colors"))
    for key in ("arcs", "crossings", "vertices"):
        if not isinstance(data[key], list):
            raise DiagramFormatError(f"diagram: {key!r} must be a list")

    arcs = tuple(_an_id(a, "arc") for a in data["arcs"])
    if len(set(arcs)) != len(arcs):
        raise DiagramFormatError("duplicate arc ids")
    arc_set = set(arcs)

    crossings = []
    for item in data["crossings"]:
        _want(item, "crossing", ("id", "ends", "over"))
        ends = item["ends"]
        if not isinstance(ends, list) or len(ends) != 4:
            raise DiagramFormatError("crossing: ends must list four arc ends")
        over = item["over"]
        if over not in (0, 1) or isinstance(over, bool):
            raise DiagramFormatError(f"crossing: over must be 0 or 1, got {over!r}")
        crossings.append(Crossing(
            id=_an_id(item["id"], "crossing id"),
            ends=tuple(_end_ref(e, "crossing end") for e in ends),
            over=over))

    vertices = []
    for item in data["vertices"]:
        _want(item, "vertex", ("id", "ends"))
        ends = item["ends"]
        if not isinstance(ends, list) or len(ends) != 3:
            raise DiagramFormatError("vertex: ends must list three arc ends")
        vertices.append(Vertex(
            id=_an_id(item["id"], "vertex id"),
            ends=tuple(_end_ref(e, "vertex end") for e in ends)))

    node_ids = [c.id for c in crossings] + [v.id for v in vertices]
    if len(set(node_ids)) != len(node_ids):
        raise DiagramFormatError("duplicate crossing/vertex ids")

    outer = None
    if "outer_face" in data and data["outer_face"] is not None:
        outer = _face_ref(data["outer_face"], "outer_face")
    elif arcs:
        raise DiagramFormatError("a nonempty diagram needs an outer_face")

    holes = tuple(_face_ref(h, "hole") for h in data.get("holes", []))

    colors = []
    raw_colors = data.get("colors", {})
    if not isinstance(raw_colors, dict):
        raise DiagramFormatError("diagram: colors must map arc ids to colors")
    for key in sorted(raw_colors, key=str):
        arc = _an_id(key, "color key")
        if arc not in arc_set:
            raise DiagramFormatError(f"color given for unknown arc {arc!r}")
        value = raw_colors[key]
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise DiagramFormatError(f"color of arc {arc!r} must be an integer >= 0")
        colors.append((arc, value))

    seen_ends: set[tuple[str, int]] = set()
    for node in crossings + vertices:
        for end in node.ends:
            if end[0] not in arc_set:
                raise DiagramFormatError(
                    f"{node.id!r} references unknown arc {end[0]!r}")
            if end in seen_ends:
                raise DiagramFormatError(
                    f"arc end {end!r} is attached twice")
            seen_ends.add(end)
    # an arc is attached at both ends or at neither (a free loop)
    for arc in arcs:
        if ((arc, 0) in seen_ends) != ((arc, 1) in seen_ends):
            raise DiagramFormatError(f"arc {arc!r} has one loose end")

    return Diagram(arcs, tuple(crossings), tuple(vertices),
                   outer, holes, tuple(colors))


def diagram_to_json(diagram: Diagram) -> dict:
    data: dict = {
        "arcs": list(diagram.arcs),
        "crossings": [
            {"id": c.id,
             "ends": [{"arc": a, "which_end": e} for a, e in c.ends],
             "over": c.over}
            for c in diagram.crossings],
        "vertices": [
            {"id": v.id,
             "ends": [{"arc": a, "which_end": e} for a, e in v.ends]}
            for v in diagram.vertices],
    }
    if diagram.outer_face is not None:
        data["outer_face"] = {"arc": diagram.outer_face[0],
                              "side": diagram.outer_face[1]}
    if diagram.holes:
        data["holes"] = [{"arc": a, "side": s} for a, s in diagram.holes]
    if diagram.colors:
        data["colors"] = dict(diagram.colors)
    return data


# ----------------------------------------------------------------------
# Incidence structure
# ----------------------------------------------------------------------

def _attachments(diagram: Diagram):
    """(attach, nodes): where every arc end lives, and each node's data.

    attach maps (arc, which_end) to (node id, slot); nodes maps a node id
    to ("x" or "v", ends tuple).  Raises when an end is used twice or an
    arc has exactly one loose end.
    """
    attach: dict[tuple[str, int], tuple[str, int]] = {}
    nodes: dict[str, tuple[str, tuple[tuple[str, int], ...]]] = {}
    for node, kind in ([(c, "x") for c in diagram.crossings]
                       + [(v, "v") for v in diagram.vertices]):
        nodes[node.id] = (kind, node.ends)
        for slot, end in enumerate(node.ends):
            if end in attach:
                raise DiagramFormatError(
                    f"arc end {end} attached more than once")
            attach[end] = (node.id, slot)
    for arc in diagram.arcs:
        got = ((arc, 0) in attach) + ((arc, 1) in attach)
        if got == 1:
            raise DiagramFormatError(f"arc {arc!r} has one loose end")
    return attach, nodes


def _dart_key(dart: Dart) -> str:
    return dart[0] + ("+" if dart[1] else "-")


def _literal_dart(end: tuple[str, int]) -> Dart:
    # the dart pointing into the node that holds this end
    return (end[0], end[1] == 1)


class FaceSet:
    """Faces of the rotation system, as orbits of darts."""

    def __init__(self, faces: dict[str, tuple[Dart, ...]],
                 face_of: dict[Dart, str]):
        self.faces = faces
        self._face_of = face_of

    def of_dart(self, dart: Dart) -> str:
        return self._face_of[dart]

    def of_side(self, arc: str, side: str) -> str:
        if side not in _SIDES:
            raise DiagramFormatError(f"side must be 'left' or 'right', got {side!r}")
        return self._face_of[(arc, side == "left")]

    def __len__(self) -> int:
        return len(self.faces)


def compute_faces(diagram: Diagram) -> FaceSet:
    """Trace face orbits: after arriving at a slot, leave at the previous one.

    The face of the forward dart of an arc is the arc's 'left' side.  A free
    loop's darts are fixed points, giving its two sides as singleton faces.
    """
    attach, nodes = _attachments(diagram)

    def next_dart(d: Dart) -> Dart:
        arc, fwd = d
        head = attach.get((arc, 1 if fwd else 0))
        if head is None:
            return d
        nid, slot = head
        _, ends = nodes[nid]
        arc2, we2 = ends[(slot - 1) % len(ends)]
        return (arc2, we2 == 0)

    darts = [(arc, fwd) for arc in diagram.arcs for fwd in (True, False)]
    face_of: dict[Dart, str] = {}
    faces: dict[str, tuple[Dart, ...]] = {}
    for start in sorted(darts, key=_dart_key):
        if start in face_of:
            continue
        orbit = [start]
        d = next_dart(start)
        while d != start:
            orbit.append(d)
            d = next_dart(d)
        fid = "f:" + min(_dart_key(d) for d in orbit)
        faces[fid] = tuple(orbit)
        for d in orbit:
            face_of[d] = fid
    return FaceSet(faces, face_of)


@dataclass(frozen=True)
class GEdge:
    """A strand of the link graph: arcs glued through crossings."""

    id: str
    arcs: tuple[str, ...]
    closed: bool
    color: int


def g_edges(diagram: Diagram) -> tuple[GEdge, ...]:
    """Strands of the underlying graph, each with its color.

    Arcs are glued across crossings (slot i continues at slot i+2) and stop
    at trivalent vertices.  Explicit colors of member arcs must agree; an
    uncolored strand defaults to color 1.
    """
    parent = {arc: arc for arc in diagram.arcs}

    def find(a: str) -> str:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: str, b: str) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for c in diagram.crossings:
        union(c.ends[0][0], c.ends[2][0])
        union(c.ends[1][0], c.ends[3][0])

    members: dict[str, list[str]] = {}
    for arc in diagram.arcs:
        members.setdefault(find(arc), []).append(arc)

    vertex_ends: set[tuple[str, int]] = set()
    for v in diagram.vertices:
        vertex_ends.update(v.ends)
    attach, _ = _attachments(diagram)

    explicit = diagram.color_map()
    edges = []
    for root in sorted(members):
        arcs = tuple(sorted(members[root]))
        terminal = sum(1 for arc in arcs for we in (0, 1)
                       if (arc, we) in vertex_ends)
        loose = sum(1 for arc in arcs for we in (0, 1)
                    if (arc, we) not in attach)
        if terminal not in (0, 2):
            raise DiagramFormatError(
                f"strand through {arcs[0]!r} has {terminal} vertex ends")
        closed = terminal == 0
        if loose and (len(arcs) > 1 or terminal):
            raise DiagramFormatError(
                f"strand through {arcs[0]!r} mixes loose and attached ends")
        votes = sorted({explicit[a] for a in arcs if a in explicit})
        if len(votes) > 1:
            raise CompileError(
                arcs[0], f"strand colored inconsistently: {votes}")
        edges.append(GEdge(id=arcs[0], arcs=arcs, closed=closed,
                           color=votes[0] if votes else 1))
    return tuple(edges)


# ----------------------------------------------------------------------
# Compilation
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CompileReport:
    """What happened on the way from a diagram to its shadow.

    merges lists (piece kept, piece absorbed, via arc); gleam_ledger maps
    each crossing to its four (face, sign, applied) corner contributions,
    which always sum to zero; fused lists cells whose triple lines pass
    straight through; region_map sends every band and surviving face label
    to its final region id.
    """

    merges: tuple[tuple[str, str, str], ...]
    gleam_ledger: dict[str, tuple[tuple[str, int, bool], ...]]
    fused: tuple[str, ...]
    region_map: dict[str, str]


class _Pieces:
    """Union-find over region pieces with chi/gleam/color bookkeeping."""

    def __init__(self):
        self.parent: dict[str, str] = {}
        self.chi: dict[str, int] = {}
        self.gleam2: dict[str, int] = {}
        self.band_color: dict[str, int] = {}

    def add(self, label: str, chi: int, color: int | None = None) -> None:
        self.parent[label] = label
        self.chi[label] = chi
        self.gleam2[label] = 0
        if color is not None:
            self.band_color[label] = color

    def find(self, label: str) -> str:
        while self.parent[label] != label:
            self.parent[label] = self.parent[self.parent[label]]
            label = self.parent[label]
        return label

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def compile_diagram(diagram: Diagram) -> tuple[Shadow, CompileReport]:
    """Shadow of the diagram's link, plus the construction report.

    Raises CompileError when the marked faces degenerate the polyhedron
    beyond repair (a strand with both sides removed, a crossing or vertex
    with two or more removed corners) and on strand color clashes.
    """
    if not diagram.arcs:
        return Shadow(), CompileReport((), {}, (), {})

    attach, nodes = _attachments(diagram)
    faces = compute_faces(diagram)
    _check_connected(diagram, attach)
    _check_planar(diagram, attach, faces)

    deleted = _deleted_faces(diagram, faces)
    surviving = {fid for fid in faces.faces if fid not in deleted}

    edges = g_edges(diagram)
    band_of_arc: dict[str, str] = {}
    edge_of_band: dict[str, GEdge] = {}
    pieces = _Pieces()
    for ge in edges:
        label = "band:" + ge.id
        pieces.add(label, chi=0 if ge.closed else 1, color=ge.color)
        edge_of_band[label] = ge
        for arc in ge.arcs:
            band_of_arc[arc] = label
    for fid in sorted(surviving):
        pieces.add(fid, chi=1)

    # -- crossings and vertices: corners, gleams, vertex records ---------

    gleam_ledger: dict[str, tuple[tuple[str, int, bool], ...]] = {}
    glue_pairs: list[tuple[tuple, tuple]] = []
    fused: list[str] = []
    # node id -> six slot piece labels, for cells keeping their vertex
    vertex_slots: dict[str, tuple[str, ...]] = {}
    merged_vertex: set[str] = set()       # trivalent vertices with a removed corner

    for c in diagram.crossings:
        k = c.over
        rot = [c.ends[(k + 1 + i) % 4] for i in range(4)]   # under end first
        corner = [faces.of_dart(_literal_dart(rot[(i + 1) % 4])) for i in range(4)]
        entries = []
        for i in range(4):
            sign = 1 if i % 2 else -1      # over-adjacent diagonal positive
            applied = corner[i] in surviving
            if applied:
                pieces.gleam2[corner[i]] += sign
            entries.append((corner[i], sign, applied))
        gleam_ledger[c.id] = tuple(entries)

        removed = [i for i in range(4) if corner[i] in deleted]
        under = band_of_arc[rot[0][0]]
        over = band_of_arc[rot[1][0]]
        if not removed:
            vertex_slots[c.id] = (under, corner[0], corner[3],
                                  over, corner[2], corner[1])
        elif len(removed) == 1:
            i = removed[0]
            through = (rot[(i + 2) % 4], rot[(i + 3) % 4])
            glue_pairs.append((("end",) + through[0], ("end",) + through[1]))
            fused.append(c.id)
        else:
            raise CompileError(
                c.id, f"{len(removed)} corner faces removed; isotope the diagram")

    for v in diagram.vertices:
        corner = [faces.of_dart(_literal_dart(v.ends[(j + 1) % 3])) for j in range(3)]
        bands = [band_of_arc[arc] for arc, _ in v.ends]
        removed = [j for j in range(3) if corner[j] in deleted]
        if not removed:
            vertex_slots[v.id] = (bands[0], bands[1], bands[2],
                                  corner[1], corner[2], corner[0])
        elif len(removed) == 1:
            third = v.ends[(removed[0] + 2) % 3]
            glue_pairs.append((("end",) + third, ("iv", v.id)))
            fused.append(v.id)
        else:
            raise CompileError(
                v.id, f"{len(removed)} corner faces removed; isotope the diagram")

    # -- arcs: triple lines, or merges where one side is gone ------------

    merges: list[tuple[str, str, str]] = []
    segments: dict[str, dict] = {}

    for arc in diagram.arcs:
        left = faces.of_dart((arc, True))
        right = faces.of_dart((arc, False))
        band = band_of_arc[arc]
        alive = [f for f in (left, right) if f in surviving]
        is_loop = (arc, 0) not in attach
        if not alive:
            raise CompileError(arc, "both side faces removed; isotope the diagram")
        if len(alive) == 1:
            pieces.union(band, alive[0])
            pieces.chi[band] += 0 if is_loop else -1
            merges.append((min(band, alive[0]), max(band, alive[0]), arc))
        else:
            terminals = [] if is_loop else [("end", arc, 0), ("end", arc, 1)]
            segments["a:" + arc] = {
                "germs": (band, left, right),
                "terminals": terminals,
            }

    for v in diagram.vertices:
        bands = tuple(band_of_arc[arc] for arc, _ in v.ends)
        segments["v:" + v.id] = {
            "germs": bands,
            "terminals": [("iv", v.id), ("bv", v.id)],
        }

    # -- chains: fuse triple lines through degenerate cells --------------

    seg_of_terminal: dict[tuple, str] = {}
    for key, seg in segments.items():
        for t in seg["terminals"]:
            seg_of_terminal[t] = key

    chain_parent = {key: key for key in segments}

    def chain_find(key: str) -> str:
        while chain_parent[key] != key:
            chain_parent[key] = chain_parent[chain_parent[key]]
            key = chain_parent[key]
        return key

    glued: set[tuple] = set()
    for t1, t2 in glue_pairs:
        for t in (t1, t2):
            if t not in seg_of_terminal:
                raise CompileError(
                    str(t[1]), "triple line vanished where strands pass through")
        glued.update((t1, t2))
        r1, r2 = chain_find(seg_of_terminal[t1]), chain_find(seg_of_terminal[t2])
        if r1 != r2:
            chain_parent[max(r1, r2)] = min(r1, r2)

    chains: dict[str, list[str]] = {}
    for key in segments:
        chains.setdefault(chain_find(key), []).append(key)

    interior_edges = []
    for root in sorted(chains):
        member_keys = sorted(chains[root])
        eid = "e:" + member_keys[0]
        loose = [t for key in member_keys for t in segments[key]["terminals"]
                 if t not in glued]
        if len(loose) not in (0, 2):
            raise CompileError(eid, "triple line with a stray end")
        kind = "circle" if not loose else "arc"
        germsets = {tuple(sorted(pieces.find(g) for g in segments[key]["germs"]))
                    for key in member_keys}
        if len(germsets) != 1:
            raise CompileError(eid, "fused triple lines disagree on their germs")
        interior_edges.append(InteriorEdge(eid, kind, germsets.pop()))

    # -- assemble final regions ------------------------------------------

    region_map: dict[str, str] = {}
    by_root: dict[str, list[str]] = {}
    for label in pieces.parent:
        by_root.setdefault(pieces.find(label), []).append(label)
    final_regions = []
    for root in by_root:
        group = sorted(by_root[root])
        rid = group[0]
        chi = sum(pieces.chi[lab] for lab in group)
        gleam2 = sum(pieces.gleam2[lab] for lab in group)
        band_labels = [lab for lab in group if lab in pieces.band_color]
        color = pieces.band_color[band_labels[0]] if band_labels else None
        final_regions.append(Region(rid, chi=chi, gleam2=gleam2, color=color))
        for lab in group:
            region_map[lab] = rid

    def resolve(label: str) -> str:
        return region_map[pieces.find(label)]

    interior_vertices = [
        InteriorVertex("x:" + nid, tuple(resolve(lab) for lab in slots))
        for nid, slots in sorted(vertex_slots.items())]

    boundary_vertices = [
        BoundaryVertex("bv:" + v.id,
                       tuple(sorted(resolve(band_of_arc[arc]) for arc, _ in v.ends)))
        for v in diagram.vertices]

    boundary_edges = [
        BoundaryEdge("b:" + ge.id,
                     "circle" if ge.closed else "arc",
                     resolve("band:" + ge.id), ge.color)
        for ge in edges]

    shadow = Shadow(
        regions=tuple(sorted(final_regions, key=lambda r: r.id)),
        interior_edges=tuple(sorted(interior_edges, key=lambda e: e.id)),
        interior_vertices=tuple(sorted(interior_vertices, key=lambda v: v.id)),
        boundary_vertices=tuple(sorted(boundary_vertices, key=lambda v: v.id)),
        boundary_edges=tuple(sorted(boundary_edges, key=lambda e: e.id)))
    report = CompileReport(tuple(merges), gleam_ledger, tuple(sorted(fused)),
                           region_map)
    return shadow, report


def _deleted_faces(diagram: Diagram, faces: FaceSet) -> set[str]:
    refs = [("outer_face", diagram.outer_face)]
    refs += [("hole", h) for h in diagram.holes]
    deleted: set[str] = set()
    for what, ref in refs:
        if ref is None:
            raise DiagramFormatError("a nonempty diagram needs an outer_face")
        fid = faces.of_side(*ref)
        if fid in deleted:
            raise CompileError(fid, f"{what} removes an already removed face")
        deleted.add(fid)
    return deleted


def _check_connected(diagram: Diagram,
                     attach: Mapping[tuple[str, int], tuple[str, int]]) -> None:
    loops = [arc for arc in diagram.arcs
             if (arc, 0) not in attach and (arc, 1) not in attach]
    node_ids = ([c.id for c in diagram.crossings]
                + [v.id for v in diagram.vertices])
    if loops:
        if len(loops) == 1 and len(diagram.arcs) == 1 and not node_ids:
            return
        raise DiagramFormatError(
            "diagram is disconnected (free loop alongside other cells); "
            "join components, e.g. with a pair of opposite crossings")
    if not node_ids:
        return
    parent = {nid: nid for nid in node_ids}

    def find(n: str) -> str:
        while parent[n] != n:
            parent[n] = parent[parent[n]]
            n = parent[n]
        return n

    for arc in diagram.arcs:
        n0, _ = attach[(arc, 0)]
        n1, _ = attach[(arc, 1)]
        r0, r1 = find(n0), find(n1)
        if r0 != r1:
            parent[max(r0, r1)] = min(r0, r1)
    roots = {find(n) for n in node_ids}
    if len(roots) > 1:
        raise DiagramFormatError(
            "diagram is disconnected; join components, e.g. with a pair "
            "of opposite crossings")


def _check_planar(diagram: Diagram,
                  attach: Mapping[tuple[str, int], tuple[str, int]],
                  faces: FaceSet) -> None:
    loops = sum(1 for arc in diagram.arcs
                if (arc, 0) not in attach and (arc, 1) not in attach)
    v = len(diagram.crossings) + len(diagram.vertices) + loops
    e = len(diagram.arcs)
    f = len(faces)
    if v - e + f != 2:
        raise DiagramFormatError(
            f"rotation system is not planar: V - E + F = {v} - {e} + {f} "
            f"= {v - e + f}, expected 2")


# ----------------------------------------------------------------------
# Construction helpers
# ----------------------------------------------------------------------

def choose_outer(diagram: Diagram) -> Diagram:
    """Mark an outer face that compilation will accept.

    Any face works for the link type (the diagram lives on a sphere), but
    compilation refuses a face whose closure meets some crossing or vertex
    in two corners.  Picks the lexicographically first face all of whose
    corner visits hit distinct cells.
    """
    attach, _ = _attachments(diagram)
    faces = compute_faces(diagram)
    for fid in sorted(faces.faces):
        hits: set[str] = set()
        ok = True
        for arc, fwd in faces.faces[fid]:
            head = attach.get((arc, 1 if fwd else 0))
            if head is None:
                continue
            nid = head[0]
            if nid in hits:
                ok = False
                break
            hits.add(nid)
        if ok:
            arc, fwd = faces.faces[fid][0]
            return replace(diagram, outer_face=(arc, "left" if fwd else "right"))
    raise CompileError("outer face", "every face meets some cell twice; "
                                     "isotope the diagram first")


def braid_closure(word: Sequence[int], strands: int | None = None,
                  colors: Mapping[int, int] | None = None) -> Diagram:
    """Plat the closure of a braid word into a diagram.

    Letters are nonzero integers: +i crosses strand i over strand i+1,
    -i crosses it under.  Strands run downward; the four ends of each
    crossing appear in rotation order top-left, bottom-left, bottom-right,
    top-right.  Closure identifies each strand's bottom with its top.
    ``colors`` assigns a color to the component through a given top
    position.  The empty word on one strand is the round unknot.
    """
    if strands is None:
        if not word:
            raise DiagramFormatError("empty braid word needs an explicit strand count")
        strands = max(abs(w) for w in word) + 1
    if strands < 1:
        raise DiagramFormatError("strand count must be positive")
    for w in word:
        if not isinstance(w, int) or isinstance(w, bool) or w == 0:
            raise DiagramFormatError(f"braid letters are nonzero integers, got {w!r}")
        if not 1 <= abs(w) <= strands - 1:
            raise DiagramFormatError(f"letter {w} out of range for {strands} strands")

    top = [f"p{p}.0" for p in range(1, strands + 1)]
    current = list(top)
    seg = [0] * strands
    crossings = []
    for idx, w in enumerate(word):
        i = abs(w) - 1
        seg[i] += 1
        seg[i + 1] += 1
        new_l = f"p{i + 1}.{seg[i]}"
        new_r = f"p{i + 2}.{seg[i + 1]}"
        ends = ((current[i], 1), (new_l, 0), (new_r, 0), (current[i + 1], 1))
        crossings.append(Crossing(id=f"c{idx}", ends=ends, over=0 if w > 0 else 1))
        current[i], current[i + 1] = new_l, new_r

    # Closure: the last arc at each position is the first one come around.
    rename = {current[p]: top[p] for p in range(strands) if current[p] != top[p]}
    arcs = [top[p] for p in range(strands)]
    arcs += [f"p{p + 1}.{k}" for p in range(strands) for k in range(1, seg[p])]
    fixed = []
    for c in crossings:
        ends = tuple((rename.get(a, a), we) for a, we in c.ends)
        fixed.append(Crossing(id=c.id, ends=ends, over=c.over))

    color_list: list[tuple[str, int]] = []
    if colors:
        for pos, col in sorted(colors.items()):
            if not 1 <= pos <= strands:
                raise DiagramFormatError(f"no strand position {pos}")
            color_list.append((top[pos - 1], col))
    diagram = Diagram(arcs=tuple(sorted(arcs)), crossings=tuple(fixed),
                      vertices=(), outer_face=None, holes=(),
                      colors=tuple(color_list))
    return choose_outer(diagram)
