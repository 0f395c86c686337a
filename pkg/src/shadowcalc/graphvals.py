"""Closed forms for the colored unknot, theta graph, and tetrahedron.

Colors are nonnegative integers.  A triple of colors meeting at a vertex is
admissible when it satisfies the triangle inequalities and has even sum;
every closed form below is guarded by that condition.

The three evaluations, in the convention where the value of the empty
diagram is 1 and an unknot colored a is circle_eval(a):

    circle:  (-1)^a [a+1]
    theta:   (-1)^s [s+1]! [x]! [y]! [z]! / ([a]! [b]! [c]! [1]!)
             written as a balanced multinomial, with s = (a+b+c)/2 and
             x, y, z the triangle slacks (a+b-c)/2, (b+c-a)/2, (c+a-b)/2
    tet:     interaction multinomial times an alternating sum over an
             internal level z running between the largest triangle half-sum
             and the smallest square half-sum

The tetrahedral sum is evaluated by successive term ratios rather than one
multinomial per level: consecutive terms differ by a ratio of at most eight
quantum integers, so the nested form 1 + r(1 + r(...)) keeps intermediate
numerators and denominators near the size of the final answer.  Tests pit
this against the direct term-by-term formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .exactq import INFINITE_ORDER, OrderValue, QPoly, QRat, ord_at_i
from .qcombinat import multinomial, quantum_int

__all__ = [
    "AdmissibilityError",
    "ColorTriple",
    "TetFrame",
    "is_admissible",
    "is_red",
    "circle_eval",
    "theta_eval",
    "tet_eval",
    "tet_order",
    "OrderBoundReport",
    "order_bound_check",
]


class AdmissibilityError(ValueError):
    """A color assignment violates a triangle or parity constraint."""


class ColorTriple(NamedTuple):
    a: int
    b: int
    c: int

    def halves(self) -> tuple[int, int, int]:
        """Triangle slacks ((a+b-c)/2, (b+c-a)/2, (c+a-b)/2); admissible input only."""
        a, b, c = self
        return ((a + b - c) // 2, (b + c - a) // 2, (c + a - b) // 2)


def _as_triple(colors: Sequence[int]) -> ColorTriple:
    if isinstance(colors, ColorTriple):
        return colors
    a, b, c = colors
    return ColorTriple(int(a), int(b), int(c))


def is_admissible(colors: Sequence[int]) -> bool:
    """Triangle inequalities plus even total."""
    a, b, c = _as_triple(colors)
    if a < 0 or b < 0 or c < 0:
        return False
    if (a + b + c) % 2:
        return False
    return a + b >= c and b + c >= a and c + a >= b


def is_red(colors: Sequence[int]) -> bool:
    """True when at least two of the three triangle slacks are odd.

    Red triples are exactly the admissible triples whose theta value gains
    an extra pole at q = i relative to the generic parity count.
    """
    t = _as_triple(colors)
    if not is_admissible(t):
        raise AdmissibilityError(f"inadmissible triple {tuple(t)}")
    return sum(h % 2 for h in t.halves()) >= 2


class TetFrame(NamedTuple):
    """Edge colors of a tetrahedron; opposite pairs are (a,d), (b,e), (c,f)."""

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def triangles(self) -> tuple[ColorTriple, ColorTriple, ColorTriple, ColorTriple]:
        a, b, c, d, e, f = self
        return (ColorTriple(a, b, c), ColorTriple(a, e, f),
                ColorTriple(d, b, f), ColorTriple(d, e, c))

    def squares(self) -> tuple[int, int, int]:
        """Half-sums over the three quadrilaterals of pairwise opposite edges."""
        a, b, c, d, e, f = self
        return ((a + b + d + e) // 2, (a + c + d + f) // 2, (b + c + e + f) // 2)

    def admissible(self) -> bool:
        return all(is_admissible(t) for t in self.triangles())


@lru_cache(maxsize=None)
def _circle(a: int) -> QPoly:
    value = quantum_int(a + 1)
    return -value if a % 2 else value


def circle_eval(a: int) -> QPoly:
    """Unknot colored a: (-1)^a [a+1].  At a = 1 this is the loop value."""
    a = int(a)
    if a < 0:
        raise AdmissibilityError(f"negative color {a}")
    return _circle(a)


@lru_cache(maxsize=None)
def _theta(a: int, b: int, c: int) -> QRat:
    s = (a + b + c) // 2
    x, y, z = ColorTriple(a, b, c).halves()
    value = multinomial((s + 1, x, y, z), (a, b, c, 1))
    return -value if s % 2 else value


def theta_eval(colors: Sequence[int]) -> QRat:
    """Theta graph with edge colors (a, b, c)."""
    t = _as_triple(colors)
    if not is_admissible(t):
        raise AdmissibilityError(f"inadmissible triple {tuple(t)}")
    return _theta(*t)


@lru_cache(maxsize=None)
def _tet(frame: TetFrame) -> QRat:
    deltas = tuple(sum(t) // 2 for t in frame.triangles())
    squares = frame.squares()
    z_lo = max(deltas)
    z_hi = min(squares)
    # admissibility of all four triangles forces every square to dominate
    # every triangle, so the level range is never empty
    assert z_lo <= z_hi, frame

    interactions = [sq - d for sq in squares for d in deltas]
    prefactor = multinomial(interactions, frame)

    # alternating sum over levels, innermost-first:
    #   S(z_hi) = 1,  S(z) = 1 + ratio(z) * S(z+1),  sum = t(z_lo) * S(z_lo)
    # where ratio(z) = t(z+1)/t(z) for the signed level term t(z).  The
    # chain is accumulated as a raw numerator/denominator pair; one QRat at
    # the end reduces it once instead of at every level.
    s_num = QPoly.one()
    s_den = QPoly.one()
    for z in range(z_hi - 1, z_lo - 1, -1):
        num = quantum_int(z + 2)
        for sq in squares:
            num = num * quantum_int(sq - z)
        den = QPoly.one()
        for d in deltas:
            den = den * quantum_int(z + 1 - d)
        lifted = den * s_den
        s_num, s_den = lifted - num * s_num, lifted
    total = QRat(s_num, s_den)

    first = multinomial(
        (z_lo + 1,),
        tuple(z_lo - d for d in deltas) + tuple(sq - z_lo for sq in squares) + (1,))
    if z_lo % 2:
        first = -first
    return prefactor * first * total


def tet_eval(frame: Sequence[int]) -> QRat:
    """Tetrahedron with edge colors (a, b, c, d, e, f), opposite pairs
    (a,d), (b,e), (c,f)."""
    if not isinstance(frame, TetFrame):
        frame = TetFrame(*(int(v) for v in frame))
    if not frame.admissible():
        raise AdmissibilityError(f"inadmissible tetrahedron frame {tuple(frame)}")
    return _tet(frame)


def tet_order(frame: Sequence[int]) -> OrderValue:
    """Order at q = i of the tetrahedron value, without the full value.

    x^4 - i is prime over the Gaussian integers, so order is additive over
    products: the quantum-factorial parts follow the floor counting laws
    and only the alternating level sum needs an actual division count.
    Agrees with ord_at_i(tet_eval(frame)) exactly; tests pin this down.
    """
    if not isinstance(frame, TetFrame):
        frame = TetFrame(*(int(v) for v in frame))
    if not frame.admissible():
        raise AdmissibilityError(f"inadmissible tetrahedron frame {tuple(frame)}")
    deltas = tuple(sum(t) // 2 for t in frame.triangles())
    squares = frame.squares()
    z_lo = max(deltas)
    z_hi = min(squares)

    def halves(values: Iterable[int]) -> int:
        return sum(v // 2 for v in values)

    interactions = [sq - d for sq in squares for d in deltas]
    o = halves(interactions) - halves(frame)
    firsts = [z_lo - d for d in deltas] + [sq - z_lo for sq in squares]
    o += (z_lo + 1) // 2 - halves(firsts)

    s_num = QPoly.one()
    s_den = QPoly.one()
    s_den_ord = 0
    for z in range(z_hi - 1, z_lo - 1, -1):
        num = quantum_int(z + 2)
        for sq in squares:
            num = num * quantum_int(sq - z)
        den = QPoly.one()
        for d in deltas:
            den = den * quantum_int(z + 1 - d)
            s_den_ord += (z + 1 - d) % 2 == 0
        lifted = den * s_den
        s_num, s_den = lifted - num * s_num, lifted
    if s_num.is_zero:
        return INFINITE_ORDER
    count, _ = s_num.i_multiplicity()
    return o + count - s_den_ord


# ----------------------------------------------------------------------
# Order bounds at q = i
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class OrderBoundReport:
    """Exact order at q = i for one closed form, against its counting bound.

    The bound is odd_part - red_count/2, where odd_part is 1 when any color
    is odd (the odd subsurface of the cone is a disc) and red_count counts
    red vertex triples.  Equality is expected for the circle and the theta;
    for the tetrahedron only the inequality is claimed.
    """

    kind: str
    colors: tuple[int, ...]
    ord_i: OrderValue
    bound: Fraction
    red_count: int
    equality_expected: bool
    holds: bool


def order_bound_check(kind: str, colors: Sequence[int] | int) -> OrderBoundReport:
    if kind == "circle":
        a = colors if isinstance(colors, int) else tuple(colors)[0]
        tup = (int(a),)
        value: QRat | QPoly = circle_eval(tup[0])
        red = 0
    elif kind == "theta":
        t = _as_triple(colors)
        tup = tuple(t)
        value = theta_eval(t)
        red = 2 if is_red(t) else 0
    elif kind == "tet":
        frame = TetFrame(*(int(v) for v in colors))
        tup = tuple(frame)
        value = None
        red = sum(1 for t in frame.triangles() if is_red(t))
    else:
        raise ValueError(f"unknown closed form kind: {kind!r}")

    odd_part = 1 if any(c % 2 for c in tup) else 0
    bound = Fraction(odd_part) - Fraction(red, 2)
    ord_i = tet_order(frame) if value is None else ord_at_i(value)
    equality_expected = kind != "tet"
    if ord_i == INFINITE_ORDER:
        holds = True
    elif equality_expected:
        holds = Fraction(ord_i) == bound
    else:
        holds = Fraction(ord_i) >= bound
    return OrderBoundReport(kind, tup, ord_i, bound, red, equality_expected, holds)
