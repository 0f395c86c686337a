"""Quantum integers, factorials, and generalized multinomial coefficients.

The balanced convention is used throughout:

    [n] = q^(-n+1) + q^(-n+3) + ... + q^(n-1),

so [0] = 0, [1] = 1, [2] = q + q^-1, and [n](1) = n.  A generalized
multinomial is a ratio of products of quantum factorials

    [m_1]! ... [m_s]! / ([n_1]! ... [n_t]!)        with sum m_i = sum n_j.

The balance condition keeps the ratio symmetric under q -> q^-1 and pins
down its vanishing order at q = i entry by entry; it is enforced at
construction time.

Evaluation never expands full factorials.  Tops and bottoms are matched
largest against largest and each matched pair (m, n) contributes only the
range product [n+1][n+2]...[m] (or its reciprocal), which keeps the degrees
of intermediate polynomials close to the degree of the final answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .exactq import INFINITE_ORDER, OrderValue, QPoly, QRat

__all__ = [
    "quantum_int",
    "quantum_factorial",
    "MultinomialSpec",
    "quantum_multinomial",
    "multinomial",
    "ord_closed_form",
]


@lru_cache(maxsize=None)
def quantum_int(n: int) -> QPoly:
    """The quantum integer [n] as a Laurent polynomial on the q-grid."""
    if n < 0:
        raise ValueError(f"quantum integers are indexed by n >= 0, got {n}")
    # exponents in x = q^(1/4): 4k for k = -n+1, -n+3, ..., n-1
    return QPoly._raw({4 * k: (1, 0) for k in range(-n + 1, n, 2)})


@lru_cache(maxsize=None)
def quantum_factorial(n: int) -> QPoly:
    """[n]! = [1][2]...[n], with [0]! = 1."""
    if n < 0:
        raise ValueError(f"quantum factorials are indexed by n >= 0, got {n}")
    if n == 0:
        return QPoly.one()
    return quantum_factorial(n - 1) * quantum_int(n)


@lru_cache(maxsize=None)
def _range_product(lo: int, hi: int) -> QPoly:
    # product of [k] for lo <= k <= hi; empty range gives 1
    if lo > hi:
        return QPoly.one()
    if lo == hi:
        return quantum_int(lo)
    return _range_product(lo, hi - 1) * quantum_int(hi)


@dataclass(frozen=True)
class MultinomialSpec:
    """Tops and bottoms of a generalized multinomial, balanced by construction."""

    tops: tuple[int, ...]
    bottoms: tuple[int, ...]

    def __init__(self, tops: Iterable[int], bottoms: Iterable[int]):
        tops = tuple(int(m) for m in tops)
        bottoms = tuple(int(n) for n in bottoms)
        if any(m < 0 for m in tops) or any(n < 0 for n in bottoms):
            raise ValueError(f"negative multinomial entry in {tops} / {bottoms}")
        if sum(tops) != sum(bottoms):
            raise ValueError(
                f"unbalanced multinomial: sum{tops} = {sum(tops)} "
                f"but sum{bottoms} = {sum(bottoms)}")
        object.__setattr__(self, "tops", tops)
        object.__setattr__(self, "bottoms", bottoms)


def quantum_multinomial(spec: MultinomialSpec) -> QRat:
    """Evaluate a generalized multinomial exactly."""
    tops = sorted(spec.tops, reverse=True)
    bottoms = sorted(spec.bottoms, reverse=True)
    # pad with 0 ([0]! = 1) so pairing is total
    if len(tops) < len(bottoms):
        tops += [0] * (len(bottoms) - len(tops))
    elif len(bottoms) < len(tops):
        bottoms += [0] * (len(tops) - len(bottoms))
    num = QPoly.one()
    den = QPoly.one()
    for m, n in zip(tops, bottoms):
        if m > n:
            num = num * _range_product(n + 1, m)
        elif n > m:
            den = den * _range_product(m + 1, n)
    return QRat(num, den)


def multinomial(tops: Iterable[int], bottoms: Iterable[int]) -> QRat:
    return quantum_multinomial(MultinomialSpec(tops, bottoms))


def ord_closed_form(kind: str, value) -> OrderValue:
    """Order of vanishing at q = i, by the counting laws.

    [n] vanishes at q = i exactly when n is even and nonzero (simple zero),
    so ord [n]! counts the even integers up to n, and a balanced multinomial
    adds these up entrywise.  Kinds: "int", "factorial", "multinomial".
    """
    if kind == "int":
        n = int(value)
        if n < 0:
            raise ValueError(f"quantum integers are indexed by n >= 0, got {n}")
        if n == 0:
            return INFINITE_ORDER
        return 1 if n % 2 == 0 else 0
    if kind == "factorial":
        n = int(value)
        if n < 0:
            raise ValueError(f"quantum factorials are indexed by n >= 0, got {n}")
        return n // 2
    if kind == "multinomial":
        spec = value if isinstance(value, MultinomialSpec) else MultinomialSpec(*value)
        return sum(m // 2 for m in spec.tops) - sum(n // 2 for n in spec.bottoms)
    raise ValueError(f"unknown closed form kind: {kind!r}")
