"""Exact arithmetic for quantum-integer calculus at roots of unity.

Everything in this package ultimately reduces to computations in the ring
Z[i][x, x^-1] of Laurent polynomials in one variable x with Gaussian integer
coefficients, and in its fraction field.  The variable is a fixed fourth
root of the quantum parameter,

    x = q^(1/4),        so  q = x^4  and  A = q^(1/2) = x^2,

which makes every exponent that occurs (integer and quarter-integer powers
of q alike) an integer power of x.

The distinguished evaluation point is q = i.  Over Z[i] the polynomial
x^4 - i is monic and irreducible (its roots are primitive 16th roots of
unity), so the order of vanishing of a rational function at q = i is the
multiplicity of x^4 - i in its numerator minus the multiplicity in its
denominator.  Multiplicities are extracted by repeated exact synthetic
division; no floating point and no gcd computations are involved.
"""

from __future__ import annotations

import math
from typing import Iterator, Mapping, NamedTuple, Union

__all__ = [
    "GaussInt",
    "QPoly",
    "QRat",
    "INFINITE_ORDER",
    "OrderValue",
    "ord_at_i",
    "render_canonical",
]

#: Order of vanishing of the zero function (compares correctly with ints).
INFINITE_ORDER = math.inf

#: An order of vanishing: an integer, or INFINITE_ORDER for the zero function.
OrderValue = Union[int, float]


# ======================================================================
# Gaussian integers
# ======================================================================

class GaussInt(NamedTuple):
    """A Gaussian integer re + im*i, with exact ring arithmetic."""

    re: int
    im: int

    def __add__(self, other: GaussInt | int) -> GaussInt:
        o = _as_gauss(other)
        return GaussInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: GaussInt | int) -> GaussInt:
        o = _as_gauss(other)
        return GaussInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: GaussInt | int) -> GaussInt:
        return _as_gauss(other).__sub__(self)

    def __mul__(self, other: GaussInt | int) -> GaussInt:
        o = _as_gauss(other)
        return GaussInt(self.re * o.re - self.im * o.im,
                        self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self) -> GaussInt:
        return GaussInt(-self.re, -self.im)

    def __pow__(self, n: int) -> GaussInt:
        if n < 0:
            raise ValueError("negative powers of Gaussian integers are not integral")
        result = GaussInt(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def conjugate(self) -> GaussInt:
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def exact_div(self, other: GaussInt | int) -> GaussInt | None:
        """Return self / other if other divides self exactly, else None."""
        o = _as_gauss(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian integer")
        t = self * o.conjugate()
        if t.re % n or t.im % n:
            return None
        return GaussInt(t.re // n, t.im // n)

    def __str__(self) -> str:
        return _format_gauss(self.re, self.im)


def _as_gauss(value: GaussInt | int) -> GaussInt:
    if isinstance(value, GaussInt):
        return value
    if isinstance(value, int):
        return GaussInt(value, 0)
    raise TypeError(f"cannot interpret {value!r} as a Gaussian integer")


GAUSS_ZERO = GaussInt(0, 0)
GAUSS_ONE = GaussInt(1, 0)

#: term dict of the constant polynomial 1, for cheap triviality checks
_ONE_TERMS = {0: (1, 0)}
GAUSS_I = GaussInt(0, 1)

# i^k for k = 0..3, as plain coefficient pairs.
_I_POWERS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def _coeff_pair(value) -> tuple[int, int]:
    if isinstance(value, tuple):
        re, im = value
        return int(re), int(im)
    if isinstance(value, int):
        return value, 0
    raise TypeError(f"cannot interpret {value!r} as a coefficient")


# ======================================================================
# Laurent polynomials in x = q^(1/4)
# ======================================================================

class QPoly:
    """A Laurent polynomial in x = q^(1/4) with Gaussian integer coefficients.

    Stored sparsely as a map exponent -> coefficient; zero coefficients are
    never kept, so the zero polynomial has an empty term map and equality is
    plain map equality.  Instances are immutable: every operation returns a
    fresh polynomial.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, GaussInt | tuple[int, int] | int] | None = None):
        clean: dict[int, tuple[int, int]] = {}
        if terms:
            for exp, coeff in terms.items():
                re, im = _coeff_pair(coeff)
                if re or im:
                    clean[int(exp)] = (re, im)
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict[int, tuple[int, int]]) -> QPoly:
        # trusted constructor: terms already normalized
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> QPoly:
        return cls._raw({})

    @classmethod
    def one(cls) -> QPoly:
        return cls._raw({0: (1, 0)})

    @classmethod
    def monomial(cls, exp: int, coeff: GaussInt | tuple[int, int] | int = 1) -> QPoly:
        re, im = _coeff_pair(coeff)
        if re == 0 and im == 0:
            return cls.zero()
        return cls._raw({int(exp): (re, im)})

    @classmethod
    def from_q(cls, q_terms: Mapping[int, GaussInt | tuple[int, int] | int]) -> QPoly:
        """Build from integer powers of q (exponents are scaled by 4)."""
        return cls({4 * e: c for e, c in q_terms.items()})

    @classmethod
    def from_a(cls, a_terms: Mapping[int, GaussInt | tuple[int, int] | int]) -> QPoly:
        """Build from integer powers of A = q^(1/2) (exponents scaled by 2)."""
        return cls({2 * e: c for e, c in a_terms.items()})

    # -- inspection -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def terms(self) -> Iterator[tuple[int, GaussInt]]:
        """Yield (exponent, coefficient) pairs by increasing exponent."""
        for exp in sorted(self._terms):
            re, im = self._terms[exp]
            yield exp, GaussInt(re, im)

    def coefficient(self, exp: int) -> GaussInt:
        re, im = self._terms.get(exp, (0, 0))
        return GaussInt(re, im)

    def __len__(self) -> int:
        return len(self._terms)

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no exponents")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no exponents")
        return max(self._terms)

    def on_q_grid(self) -> bool:
        """True when every exponent is a multiple of 4, i.e. an integer power of q."""
        return all(e % 4 == 0 for e in self._terms)

    def coefficient_sum(self) -> GaussInt:
        """The value at x = 1 (hence at q = 1)."""
        re = sum(c[0] for c in self._terms.values())
        im = sum(c[1] for c in self._terms.values())
        return GaussInt(re, im)

    def eval_at_q_i(self) -> GaussInt:
        """Exact value at q = i, defined only on the q-grid."""
        if not self.on_q_grid():
            raise ValueError("polynomial has fractional q-exponents; no canonical value at q = i")
        re = im = 0
        for exp, (cr, ci) in self._terms.items():
            ur, ui = _I_POWERS[(exp // 4) % 4]
            re += cr * ur - ci * ui
            im += cr * ui + ci * ur
        return GaussInt(re, im)

    # -- ring operations -------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self._terms == other._terms
        if isinstance(other, (int, GaussInt)):
            re, im = _coeff_pair(other if isinstance(other, int) else tuple(other))
            if re == 0 and im == 0:
                return not self._terms
            return self._terms == {0: (re, im)}
        return NotImplemented

    __hash__ = None  # mutable-looking container semantics; not hashable

    def __neg__(self) -> QPoly:
        return QPoly._raw({e: (-r, -i) for e, (r, i) in self._terms.items()})

    def __add__(self, other: QPoly | GaussInt | int) -> QPoly:
        o = _as_poly(other)
        if not self._terms:
            return o
        if not o._terms:
            return self
        out = dict(self._terms)
        for e, (r2, i2) in o._terms.items():
            r1, i1 = out.get(e, (0, 0))
            r, i = r1 + r2, i1 + i2
            if r or i:
                out[e] = (r, i)
            elif e in out:
                del out[e]
        return QPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other: QPoly | GaussInt | int) -> QPoly:
        return self + (-_as_poly(other))

    def __rsub__(self, other: QPoly | GaussInt | int) -> QPoly:
        return _as_poly(other) + (-self)

    def __mul__(self, other: QPoly | GaussInt | int) -> QPoly:
        o = _as_poly(other)
        a, b = self._terms, o._terms
        if not a or not b:
            return QPoly.zero()
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, tuple[int, int]] = {}
        items = list(b.items())
        for e1, (r1, i1) in a.items():
            if i1 == 0:
                # real coefficient fast path; the bulk of quantum arithmetic
                for e2, (r2, i2) in items:
                    e = e1 + e2
                    cr, ci = out.get(e, (0, 0))
                    out[e] = (cr + r1 * r2, ci + r1 * i2)
            else:
                for e2, (r2, i2) in items:
                    e = e1 + e2
                    cr, ci = out.get(e, (0, 0))
                    out[e] = (cr + r1 * r2 - i1 * i2, ci + r1 * i2 + i1 * r2)
        return QPoly._raw({e: c for e, c in out.items() if c != (0, 0)})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QPoly:
        if n < 0:
            raise ValueError("negative powers leave the polynomial ring; use QRat")
        result = QPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k: int) -> QPoly:
        """Multiply by the unit x^k."""
        if k == 0:
            return self
        return QPoly._raw({e + k: c for e, c in self._terms.items()})

    def scaled(self, coeff: GaussInt | int) -> QPoly:
        return self * _as_poly(coeff)

    # -- the factor x^4 - i ----------------------------------------------

    def _div_x4_minus_i(self) -> QPoly | None:
        """Exact quotient by the monic polynomial x^4 - i, or None.

        Synthetic division run on a dense window: Laurent units x^k are
        coprime to x^4 - i, so divisibility is unaffected by the shift.
        """
        if not self._terms:
            return QPoly.zero()
        lo = min(self._terms)
        hi = max(self._terms)
        if hi - lo < 4:
            return None
        span = hi - lo + 1
        re = [0] * span
        im = [0] * span
        for e, (r, i) in self._terms.items():
            re[e - lo] = r
            im[e - lo] = i
        q_re = [0] * (span - 4)
        q_im = [0] * (span - 4)
        for k in range(span - 1, 3, -1):
            r, i = re[k], im[k]
            if r or i:
                q_re[k - 4] = r
                q_im[k - 4] = i
                # remainder picks up i * c at position k - 4
                re[k - 4] -= i
                im[k - 4] += r
        if any(re[:4]) or any(im[:4]):
            return None
        terms = {lo + j: (q_re[j], q_im[j])
                 for j in range(span - 4) if q_re[j] or q_im[j]}
        return QPoly._raw(terms)

    def exact_div(self, other: QPoly) -> QPoly | None:
        """Exact quotient self / other over Gaussian integers, or None.

        Laurent long division from the top term; any step whose leading
        coefficient ratio falls outside the Gaussian integers, or a nonzero
        final remainder, reports failure instead of rounding.
        """
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return QPoly.zero()
        s_lo = self.min_exp()
        o_lo, o_hi = other.min_exp(), other.max_exp()
        if self.max_exp() - s_lo < o_hi - o_lo:
            return None
        l_re, l_im = other._terms[o_hi]
        l_norm = l_re * l_re + l_im * l_im
        rem = dict(self._terms)
        quot: dict[int, tuple[int, int]] = {}
        while rem:
            hi = max(rem)
            qe = hi - o_hi
            if qe < s_lo - o_lo:
                return None
            h_re, h_im = rem[hi]
            t_re = h_re * l_re + h_im * l_im
            t_im = h_im * l_re - h_re * l_im
            if t_re % l_norm or t_im % l_norm:
                return None
            c_re = t_re // l_norm
            c_im = t_im // l_norm
            quot[qe] = (c_re, c_im)
            for e, (r, i) in other._terms.items():
                te = e + qe
                rr, ii = rem.get(te, (0, 0))
                nr = rr - (c_re * r - c_im * i)
                ni = ii - (c_re * i + c_im * r)
                if nr or ni:
                    rem[te] = (nr, ni)
                elif te in rem:
                    del rem[te]
        return QPoly._raw(quot)

    def i_multiplicity(self) -> tuple[int, QPoly]:
        """Multiplicity of x^4 - i in self, plus the exact cofactor.

        Raises ValueError on the zero polynomial (infinite multiplicity).
        """
        if not self._terms:
            raise ValueError("the zero polynomial vanishes to every order")
        count = 0
        current = self
        while True:
            quotient = current._div_x4_minus_i()
            if quotient is None:
                return count, current
            count += 1
            current = quotient

    # -- display ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"QPoly({self._terms!r})"

    def __str__(self) -> str:
        return _format_poly(self, q_mode=self.on_q_grid())


def _as_poly(value: QPoly | GaussInt | int) -> QPoly:
    if isinstance(value, QPoly):
        return value
    if isinstance(value, (int, GaussInt)):
        re, im = _coeff_pair(value if isinstance(value, int) else tuple(value))
        if re == 0 and im == 0:
            return QPoly.zero()
        return QPoly._raw({0: (re, im)})
    raise TypeError(f"cannot interpret {value!r} as a Laurent polynomial")


# ======================================================================
# The fraction field
# ======================================================================

class QRat:
    """A quotient of two QPoly values with a nonzero denominator.

    No gcd reduction is attempted: representatives are kept as built, up to
    stripping a common unit monomial x^k so exponents stay centred.  Equality
    is decided exactly by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = QPoly.one() if den is None else _as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("denominator is the zero function")
        if num.is_zero:
            den = QPoly.one()
        else:
            shift = min(num.min_exp(), den.min_exp())
            if shift:
                num = num.shifted(-shift)
                den = den.shifted(-shift)
            if den._terms != _ONE_TERMS:
                quotient = num.exact_div(den)
                if quotient is not None:
                    num = quotient
                    den = QPoly.one()
        self.num = num
        self.den = den

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> QRat:
        return cls(QPoly.zero())

    @classmethod
    def one(cls) -> QRat:
        return cls(QPoly.one())

    # -- inspection ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def as_poly(self) -> QPoly | None:
        """Return the numerator when the denominator is trivial, else None."""
        if self.den == QPoly.one():
            return self.num
        return None

    # -- field operations ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (QRat, QPoly, GaussInt, int)):
            o = _as_rat(other)
            if self.num._terms == o.num._terms and self.den._terms == o.den._terms:
                return True
            return self.num * o.den == o.num * self.den
        return NotImplemented

    __hash__ = None

    def __neg__(self) -> QRat:
        return QRat(-self.num, self.den)

    def __add__(self, other) -> QRat:
        o = _as_rat(other)
        if self.den._terms == o.den._terms:
            return QRat(self.num + o.num, self.den)
        return QRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other) -> QRat:
        return self + (-_as_rat(other))

    def __rsub__(self, other) -> QRat:
        return _as_rat(other) + (-self)

    def __mul__(self, other) -> QRat:
        o = _as_rat(other)
        return QRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> QRat:
        o = _as_rat(other)
        if o.num.is_zero:
            raise ZeroDivisionError("division by the zero function")
        return QRat(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> QRat:
        return _as_rat(other).__truediv__(self)

    def reciprocal(self) -> QRat:
        if self.num.is_zero:
            raise ZeroDivisionError("the zero function has no reciprocal")
        return QRat(self.den, self.num)

    def __pow__(self, n: int) -> QRat:
        if n < 0:
            return self.reciprocal() ** (-n)
        return QRat(self.num ** n, self.den ** n)

    def __repr__(self) -> str:
        return f"QRat({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        return render_canonical(self)


def _as_rat(value: QRat | QPoly | GaussInt | int) -> QRat:
    if isinstance(value, QRat):
        return value
    return QRat(_as_poly(value))


# ======================================================================
# Vanishing order at q = i
# ======================================================================

def ord_at_i(value: QRat | QPoly | GaussInt | int) -> OrderValue:
    """Exact order of vanishing at q = i (negative for a pole).

    Defined as the multiplicity of x^4 - i in the numerator minus the
    multiplicity in the denominator; the zero function returns
    INFINITE_ORDER.  Independent of the chosen representative since
    multiplicities are additive.
    """
    f = _as_rat(value)
    if f.num.is_zero:
        return INFINITE_ORDER
    m_num, _ = f.num.i_multiplicity()
    m_den, _ = f.den.i_multiplicity()
    return m_num - m_den


# ======================================================================
# Canonical rendering
# ======================================================================

def _format_gauss(re: int, im: int) -> str:
    if im == 0:
        return str(re)
    if re == 0:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return f"{im}i"
    sign = "+" if im > 0 else "-"
    mag = abs(im)
    istr = "i" if mag == 1 else f"{mag}i"
    return f"({re}{sign}{istr})"


def _format_term(exp: int, re: int, im: int, q_mode: bool) -> tuple[str, str]:
    """Return (sign, body) with sign in {'+', '-'}; mixed coefficients are '+'."""
    if q_mode:
        e = exp // 4
        var = "q"
    else:
        e = exp
        var = "x"
    if e == 0:
        vstr = ""
    elif e == 1:
        vstr = var
    else:
        vstr = f"{var}^{e}"

    if im == 0:
        sign = "-" if re < 0 else "+"
        mag = abs(re)
        coeff = "" if (mag == 1 and vstr) else str(mag)
    elif re == 0:
        sign = "-" if im < 0 else "+"
        mag = abs(im)
        coeff = "i" if mag == 1 else f"{mag}i"
    else:
        sign = "+"
        coeff = _format_gauss(re, im)

    if coeff and vstr:
        return sign, f"{coeff}*{vstr}" if coeff[-1] == "i" else f"{coeff}{vstr}"
    return sign, coeff or vstr


def _format_poly(p: QPoly, q_mode: bool) -> str:
    if p.is_zero:
        return "0"
    pieces: list[str] = []
    for exp in sorted(p._terms, reverse=True):
        re, im = p._terms[exp]
        sign, body = _format_term(exp, re, im, q_mode)
        if not pieces:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


def _canonical_unit(c: tuple[int, int]) -> GaussInt:
    """The unit u in {1, i, -1, -i} placing u*c in the sector re > 0, im >= 0."""
    re, im = c
    for unit in (GAUSS_ONE, GAUSS_I, GaussInt(-1, 0), GaussInt(0, -1)):
        r = re * unit.re - im * unit.im
        i = re * unit.im + im * unit.re
        if r > 0 and i >= 0:
            return unit
    # only c = 0 has no canonical rotation, and callers never pass it
    raise ValueError("zero coefficient has no canonical unit")


def render_canonical(value: QRat | QPoly | GaussInt | int) -> str:
    """Deterministic text form of an exact value.

    The fraction is first normalized: a common unit monomial and all common
    powers of x^4 - i are stripped, and both parts are scaled by the unit
    that puts the denominator's leading coefficient in a fixed sector, so
    representatives differing by such factors print identically.  Output is
    in the variable q when every exponent lands on the q-grid, otherwise in
    x with a legend fixing x = q^(1/4).
    """
    f = _as_rat(value)
    if f.num.is_zero:
        return "0"
    num, den = f.num, f.den
    m_num, _ = num.i_multiplicity()
    m_den, _ = den.i_multiplicity()
    common = min(m_num, m_den)
    if common:
        num, den = _strip_common_i_powers(num, den, common)
    shift = min(num.min_exp(), den.min_exp())
    if shift:
        num = num.shifted(-shift)
        den = den.shifted(-shift)
    unit = _canonical_unit(den._terms[den.max_exp()])
    if unit != GAUSS_ONE:
        num = num.scaled(unit)
        den = den.scaled(unit)
    # A unit monomial denominator folds into the numerator as a Laurent shift.
    if len(den._terms) == 1 and den._terms[den.max_exp()] == (1, 0):
        num = num.shifted(-den.max_exp())
        den = QPoly.one()
    q_mode = num.on_q_grid() and den.on_q_grid()
    num_str = _format_poly(num, q_mode)
    if den == QPoly.one():
        text = num_str
    else:
        den_str = _format_poly(den, q_mode)
        text = f"({num_str})/({den_str})"
    if not q_mode:
        text += "  [x = q^(1/4)]"
    return text


def _strip_common_i_powers(num: QPoly, den: QPoly, count: int) -> tuple[QPoly, QPoly]:
    for _ in range(count):
        num = num._div_x4_minus_i()
        den = den._div_x4_minus_i()
    return num, den
