"""Kauffman bracket by brute-force crossing resolution.

Completely independent of shadows: every crossing is smoothed both ways,
loops are counted with a union-find over arc ends, and states are summed
with weight A^(a-b) delta^(loops), where delta = -A^2 - A^(-2), A = x^2,
the empty diagram counts 1 and a single loop counts delta.  This is the
classical normalization against which the shadow route is tested, and it
pins all sign conventions at once.

The cost is 2^n over n crossings; fine for the diagrams this package
ships (a dozen crossings at most), hopeless beyond roughly twenty.
"""

from __future__ import annotations

from functools import lru_cache

from .diagram import Diagram, DiagramFormatError
from .exactq import QPoly

__all__ = ["kauffman_bracket", "loop_delta"]


def loop_delta() -> QPoly:
    """The loop value -A^2 - A^(-2)."""
    return QPoly.from_a({2: -1, -2: -1})


@lru_cache(maxsize=None)
def _delta_power(k: int) -> QPoly:
    if k == 0:
        return QPoly.one()
    return _delta_power(k - 1) * loop_delta()


def kauffman_bracket(diagram: Diagram) -> QPoly:
    """Exact bracket of an uncolored link diagram.

    Vertices and explicit colors are outside this normalization and are
    rejected; use the shadow route for those.
    """
    if diagram.vertices:
        raise DiagramFormatError(
            "skein resolution handles link diagrams only, not graph vertices")
    if any(color != 1 for _, color in diagram.colors):
        raise DiagramFormatError(
            "skein resolution computes the color-1 bracket only")

    arcs = diagram.arcs
    crossings = diagram.crossings
    n = len(crossings)

    index = {}
    for arc in arcs:
        index[(arc, 0)] = len(index)
        index[(arc, 1)] = len(index)

    base_joins = [(index[(arc, 0)], index[(arc, 1)]) for arc in arcs]
    # per crossing: (pairs for the A-smoothing, pairs for the B-smoothing);
    # the A-smoothing joins each over end to the end before it in rotation
    smooth = []
    for c in crossings:
        k = c.over
        a_pairs = []
        b_pairs = []
        for s in (k, k + 2):
            a_pairs.append((index[c.ends[s % 4]], index[c.ends[(s - 1) % 4]]))
            b_pairs.append((index[c.ends[s % 4]], index[c.ends[(s + 1) % 4]]))
        smooth.append((tuple(a_pairs), tuple(b_pairs)))

    size = len(index)
    total = QPoly.zero()
    for state in range(1 << n):
        parent = list(range(size))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        def union(i: int, j: int) -> None:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj

        for i, j in base_joins:
            union(i, j)
        a_count = 0
        for bit, (a_pairs, b_pairs) in enumerate(smooth):
            if state >> bit & 1:
                a_count += 1
                for i, j in a_pairs:
                    union(i, j)
            else:
                for i, j in b_pairs:
                    union(i, j)
        loops = sum(1 for i in range(size) if find(i) == i)
        weight = 2 * a_count - n                  # a - b
        total = total + _delta_power(loops).shifted(2 * weight)
    return total
