"""Exact coefficient arithmetic.

Three scalar kinds are provided, all immutable and exact:

* Gaussian rationals ``GaussianRational`` (the field Q(i)), with plain
  ``fractions.Fraction`` playing the role of Q;
* p-adic numbers ``PAdic`` with capped relative precision (a value is a
  unit times p^v, known modulo p^(v+N));
* truncated power series ``TruncatedPowerSeries`` over either of the
  above, a_0 + a_1*xi + ... + a_{M-1}*xi^{M-1} + O(xi^M), with the
  evaluation map ``theta`` (xi -> 0).

A ``FieldPair`` records which subfield linear algebra is done over: the
twistor computations use Q inside Q(i) (coordinates split into real and
imaginary parts), the complex projective line uses Q(i) itself.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union

from .errors import DivisionByZero, NotAUnit, PrecisionExhausted

Rat = Fraction


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    im = getattr(x, "im", None)
    if im is not None and im == 0:
        return x.re  # a Gaussian rational that happens to be real
    raise TypeError(f"cannot interpret {x!r} as a rational")


@dataclass(frozen=True)
class GaussianRational:
    """An element a + b*i of Q(i), a and b exact rationals."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(as_fraction(x), Fraction(0))

    def __add__(self, other):
        o = GaussianRational.of(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianRational.of(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.of(other) - self

    def __mul__(self, other):
        o = GaussianRational.of(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.of(other)
        n2 = o.norm_squared
        if n2 == 0:
            raise DivisionByZero("division by zero in Q(i)")
        return self * GaussianRational(o.re / n2, -o.im / n2)

    def __rtruediv__(self, other):
        return GaussianRational.of(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    @property
    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    @property
    def norm_squared(self) -> Fraction:
        """|z|^2 = re^2 + im^2, always an exact rational."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        return GaussianRational(Fraction(1), Fraction(0)) / self

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        imag = f"{abs(self.im)}*i" if abs(self.im) != 1 else "i"
        if self.re == 0:
            return imag if self.im > 0 else "-" + imag
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{imag}"

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


GAUSSIAN_ZERO = GaussianRational(Fraction(0), Fraction(0))
GAUSSIAN_ONE = GaussianRational(Fraction(1), Fraction(0))
GAUSSIAN_I = GaussianRational(Fraction(0), Fraction(1))

_IMAG_TERM = _re.compile(r"^([+-]?)(?:(\d+(?:/\d+)?)\*?)?i(?:/(\d+))?$")
_REAL_TERM = _re.compile(r"^([+-]?\d+(?:/\d+)?)$")


def parse_gaussian(text: str) -> GaussianRational:
    """Parse "a/b", "a/b+c/d*i", "i/2", "-i", "3-2*i" into an exact Q(i) value."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty Gaussian rational")
    # split into top-level terms at +/- signs (keeping the sign)
    terms, cur = [], ""
    for idx, ch in enumerate(s):
        if ch in "+-" and idx > 0 and s[idx - 1] not in "+-*/":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    re_part, im_part = Fraction(0), Fraction(0)
    for term in terms:
        m = _IMAG_TERM.match(term)
        if m:
            sign = -1 if m.group(1) == "-" else 1
            mag = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            if m.group(3):
                mag /= int(m.group(3))
            im_part += sign * mag
            continue
        m = _REAL_TERM.match(term)
        if m:
            re_part += Fraction(m.group(1))
            continue
        raise ValueError(f"cannot parse Gaussian rational term {term!r} in {text!r}")
    return GaussianRational(re_part, im_part)


@dataclass(frozen=True)
class FieldPair:
    """A coefficient field pair k0 inside k1 = k0(i).

    ``split`` selects how a k1 scalar is written in k0 coordinates: the
    pair (Q, Q(i)) splits z into (re, im); the trivial pair (Q(i), Q(i))
    keeps z as a single coordinate. Everything downstream (kernels,
    ranks, dimensions) is k0-linear algebra.
    """

    name: str
    split: bool

    @property
    def coord_count(self) -> int:
        return 2 if self.split else 1

    def coords(self, z: GaussianRational):
        if self.split:
            return (z.re, z.im)
        return (z,)

    def base_zero(self):
        return Fraction(0) if self.split else GAUSSIAN_ZERO

    def base_one(self):
        return Fraction(1) if self.split else GAUSSIAN_ONE

    def to_extension(self, c) -> GaussianRational:
        return GaussianRational.of(c)


#: Q sitting inside Q(i): the "real inside complex" pair of the twistor line.
REAL_IN_GAUSSIAN = FieldPair("Q<Q(i)", split=True)
#: Q(i) over itself: the coefficient pair of the complex projective line.
GAUSSIAN_PAIR = FieldPair("Q(i)", split=False)


# ---------------------------------------------------------------------------
# p-adic numbers with capped relative precision
# ---------------------------------------------------------------------------


class PAdic:
    """u * p^v known modulo p^(v+n), u a unit modulo p.

    Zeros come in two flavours: the exact zero, and the inexact zero
    O(p^m) produced by cancellation, whose valuation is unknown.
    Arithmetic never reports digits beyond what the operands certify.
    """

    __slots__ = ("p", "v", "unit", "n")

    def __init__(self, p: int, v, unit, n: int):
        self.p = p
        self.v = v
        self.unit = unit
        self.n = n

    # -- constructors -------------------------------------------------

    @classmethod
    def exact_zero(cls, p: int) -> "PAdic":
        return cls(p, None, None, 0)

    @classmethod
    def inexact_zero(cls, p: int, abs_prec: int) -> "PAdic":
        return cls(p, abs_prec, None, 0)

    @classmethod
    def from_int(cls, value: int, p: int, prec: int) -> "PAdic":
        if value == 0:
            return cls.exact_zero(p)
        v = 0
        while value % p == 0:
            value //= p
            v += 1
        return cls(p, v, value % p**prec, prec)

    @classmethod
    def from_fraction(cls, value: Fraction, p: int, prec: int) -> "PAdic":
        value = as_fraction(value)
        return cls.from_int(value.numerator, p, prec) / cls.from_int(
            value.denominator, p, prec
        )

    # -- structure ----------------------------------------------------

    @property
    def is_exact_zero(self) -> bool:
        return self.unit is None and self.v is None

    @property
    def is_zero(self) -> bool:
        """No certified nonzero digit (exact or inexact zero)."""
        return self.unit is None

    @property
    def abs_prec(self):
        """Exponent m such that the value is known modulo p^m (None = exact)."""
        if self.is_exact_zero:
            return None
        if self.unit is None:
            return self.v
        return self.v + self.n

    def digits(self):
        """The n base-p digits of the unit part, lowest first."""
        if self.unit is None:
            return []
        u, out = self.unit, []
        for _ in range(self.n):
            out.append(u % self.p)
            u //= self.p
        return out

    # -- arithmetic ---------------------------------------------------

    def _check(self, other) -> "PAdic":
        if isinstance(other, int):
            other = PAdic.from_int(other, self.p, max(self.n, 1))
        if not isinstance(other, PAdic):
            raise TypeError("p-adic arithmetic requires both operands p-adic")
        if self.p != other.p:
            raise ValueError(f"prime mismatch: {self.p} vs {other.p}")
        return other

    @classmethod
    def _normalize(cls, p: int, p_pow_num: int, v_shift: int, abs_prec: int) -> "PAdic":
        """Build from an integer numerator * p^v_shift known mod p^abs_prec."""
        m = abs_prec - v_shift
        if m <= 0:
            return cls.inexact_zero(p, abs_prec)
        val = p_pow_num % p**m
        if val == 0:
            return cls.inexact_zero(p, abs_prec)
        v = 0
        while val % p == 0:
            val //= p
            v += 1
        n = m - v
        return cls(p, v + v_shift, val % p**n, n)

    def __add__(self, other):
        other = self._check(other)
        if self.is_exact_zero:
            return other
        if other.is_exact_zero:
            return self
        ap = min(self.abs_prec, other.abs_prec)
        shift = min(self.v, other.v)
        total = 0
        for x in (self, other):
            if x.unit is not None:
                total += x.unit * x.p ** (x.v - shift)
        return PAdic._normalize(self.p, total, shift, ap)

    def __neg__(self):
        if self.unit is None:
            return self
        return PAdic(self.p, self.v, (-self.unit) % self.p**self.n, self.n)

    def __sub__(self, other):
        other = self._check(other)
        return self + (-other)

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        if self.is_exact_zero or other.is_exact_zero:
            return PAdic.exact_zero(self.p)
        if self.unit is None or other.unit is None:
            # O(p^a) * (u*p^v + ...) = O(p^(a+v)); for two inexact zeros the bounds add
            return PAdic.inexact_zero(self.p, self.v + other.v)
        n = min(self.n, other.n)
        return PAdic(
            self.p, self.v + other.v, (self.unit * other.unit) % self.p**n, n
        )

    def __truediv__(self, other):
        other = self._check(other)
        if other.is_exact_zero:
            raise DivisionByZero("p-adic division by exact zero")
        if other.unit is None:
            raise PrecisionExhausted(
                "divisor is an inexact zero: valuation unknown, no certified digits"
            )
        if self.is_exact_zero:
            return self
        if self.unit is None:
            return PAdic.inexact_zero(self.p, self.v - other.v)
        n = min(self.n, other.n)
        inv = pow(other.unit, -1, self.p**n)
        return PAdic(self.p, self.v - other.v, (self.unit * inv) % self.p**n, n)

    def __rmul__(self, other):
        return self * other

    __radd__ = __add__

    def __eq__(self, other):
        """Indistinguishable at the coarser of the two precisions."""
        if isinstance(other, int):
            other = PAdic.from_int(other, self.p, max(self.n, 1) + abs(self.v or 0) + 1)
        if not isinstance(other, PAdic):
            return NotImplemented
        if self.p != other.p:
            return False
        diff = self - other
        return diff.unit is None

    def __hash__(self):
        raise TypeError("PAdic values compare up to precision and are unhashable")

    def __str__(self):
        if self.is_exact_zero:
            return "0"
        if self.unit is None:
            return f"O({self.p}^{self.v})"
        terms = []
        for j, d in enumerate(self.digits()):
            if d == 0:
                continue
            e = self.v + j
            if e == 0:
                terms.append(f"{d}")
            elif e == 1:
                terms.append(f"{d}*{self.p}")
            else:
                terms.append(f"{d}*{self.p}^{e}")
        terms.append(f"O({self.p}^{self.abs_prec})")
        return " + ".join(terms)

    def __repr__(self):
        return f"PAdic({self})"


# ---------------------------------------------------------------------------
# generic scalar helpers
# ---------------------------------------------------------------------------

Scalar = Union[Fraction, GaussianRational, PAdic]


def is_zero_scalar(c) -> bool:
    """Certified-exact zero test (an inexact p-adic zero is not 'zero')."""
    if isinstance(c, PAdic):
        return c.is_exact_zero
    if isinstance(c, GaussianRational):
        return not c
    return c == 0


def is_unit_scalar(c) -> bool:
    if isinstance(c, PAdic):
        return c.unit is not None
    return not is_zero_scalar(c)


def scalar_arith(x, y, op: str):
    """Dispatch {add, sub, mul, div} on any scalar kind. Exact."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if not isinstance(x, PAdic) and is_zero_scalar(y):
            raise DivisionByZero("scalar division by zero")
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def format_scalar(c) -> str:
    return str(c)


# ---------------------------------------------------------------------------
# truncated power series
# ---------------------------------------------------------------------------


class TruncatedPowerSeries:
    """a_0 + a_1*xi + ... + a_{M-1}*xi^{M-1} + O(xi^M) over an exact field.

    The order M is carried per value and shrinks under binary operations
    (min rule), so every stored coefficient is exact.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs)
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        if len(coeffs) < order:
            zero = coeffs[0] * 0 if coeffs else Fraction(0)
            coeffs += [zero] * (order - len(coeffs))
        self.coeffs = tuple(coeffs[:order])
        self.order = order

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedPowerSeries":
        return cls([c], order)

    @classmethod
    def variable(cls, one, order: int) -> "TruncatedPowerSeries":
        """The series xi, with 1 represented by ``one`` of the target field."""
        return cls([one * 0, one], order)

    # -- ring structure ---------------------------------------------------

    @property
    def zero_coeff(self):
        return self.coeffs[0] * 0

    def _binop_order(self, other):
        return min(self.order, other.order)

    def __add__(self, other):
        other = self._coerce(other)
        m = self._binop_order(other)
        return TruncatedPowerSeries(
            [self.coeffs[j] + other.coeffs[j] for j in range(m)], m
        )

    def __sub__(self, other):
        other = self._coerce(other)
        m = self._binop_order(other)
        return TruncatedPowerSeries(
            [self.coeffs[j] - other.coeffs[j] for j in range(m)], m
        )

    def __neg__(self):
        return TruncatedPowerSeries([-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if not isinstance(other, TruncatedPowerSeries):
            return TruncatedPowerSeries(
                [c * other for c in self.coeffs], self.order
            )
        m = self._binop_order(other)
        out = [self.zero_coeff for _ in range(m)]
        for j, a in enumerate(self.coeffs[:m]):
            if is_zero_scalar(a):
                continue
            for k, b in enumerate(other.coeffs[: m - j]):
                out[j + k] = out[j + k] + a * b
        return TruncatedPowerSeries(out, m)

    def __rmul__(self, other):
        return self * other

    def _coerce(self, other) -> "TruncatedPowerSeries":
        if isinstance(other, TruncatedPowerSeries):
            return other
        return TruncatedPowerSeries.constant(self.zero_coeff + other, self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedPowerSeries):
            other = self._coerce(other)
        m = min(self.order, other.order)
        return all(self.coeffs[j] == other.coeffs[j] for j in range(m))

    def __hash__(self):
        raise TypeError("TruncatedPowerSeries compares up to order and is unhashable")

    # -- series operations ------------------------------------------------

    def inverse(self) -> "TruncatedPowerSeries":
        """Multiplicative inverse; requires the constant term to be a unit."""
        a0 = self.coeffs[0]
        if not is_unit_scalar(a0):
            raise NotAUnit("constant term is not a unit")
        one = a0 / a0
        inv0 = one / a0
        out = [inv0]
        for m in range(1, self.order):
            acc = self.zero_coeff
            for k in range(1, m + 1):
                acc = acc + self.coeffs[k] * out[m - k]
            out.append(-inv0 * acc)
        return TruncatedPowerSeries(out, self.order)

    def valuation(self):
        """xi-adic valuation of the tracked part; None if all tracked coefficients vanish."""
        for j, c in enumerate(self.coeffs):
            if not is_zero_scalar(c):
                return j
        return None

    def shift_up(self, k: int) -> "TruncatedPowerSeries":
        """Multiply by the exact monomial xi^k (order grows by k)."""
        return TruncatedPowerSeries(
            [self.zero_coeff] * k + list(self.coeffs), self.order + k
        )

    def shift_down(self, k: int) -> "TruncatedPowerSeries":
        """Divide by xi^k; the first k coefficients must vanish."""
        if any(not is_zero_scalar(c) for c in self.coeffs[:k]):
            raise ValueError("series not divisible by xi^k")
        return TruncatedPowerSeries(list(self.coeffs[k:]), self.order - k)

    def truncate(self, order: int) -> "TruncatedPowerSeries":
        return TruncatedPowerSeries(list(self.coeffs[:order]), min(order, self.order))

    def compose(self, inner: "TruncatedPowerSeries") -> "TruncatedPowerSeries":
        """self(inner(x)); ``inner`` must have zero constant term."""
        if not is_zero_scalar(inner.coeffs[0]):
            raise ValueError("composition requires inner constant term 0")
        m = min(inner.order, self.order * max(inner.valuation() or 1, 1))
        inner_t = inner.truncate(m)
        acc = TruncatedPowerSeries.constant(self.zero_coeff, m)
        for c in reversed(self.coeffs):
            acc = acc * inner_t + c
        return acc.truncate(m)

    def reversion(self) -> "TruncatedPowerSeries":
        """The compositional inverse g with self(g(x)) = x + O(x^order).

        Requires zero constant term and unit linear coefficient.
        """
        if not is_zero_scalar(self.coeffs[0]):
            raise ValueError("reversion requires zero constant term")
        if self.order < 2 or not is_unit_scalar(self.coeffs[1]):
            if self.order < 2:
                # nothing to determine at order 1
                return TruncatedPowerSeries([self.zero_coeff], 1)
            raise NotAUnit("reversion requires a unit linear coefficient")
        one = self.coeffs[1] / self.coeffs[1]
        g = [self.zero_coeff, one / self.coeffs[1]]
        for m in range(2, self.order):
            trial = TruncatedPowerSeries(g + [self.zero_coeff], m + 1)
            err = self.compose(trial).coeffs[m]
            g.append(-err / self.coeffs[1])
        return TruncatedPowerSeries(g, self.order)

    def __str__(self):
        parts = []
        for j, c in enumerate(self.coeffs):
            if is_zero_scalar(c):
                continue
            cs = str(c)
            if any(op in cs[1:] for op in "+-") or "*" in cs:
                cs = f"({cs})"
            if j == 0:
                parts.append(cs)
            elif j == 1:
                parts.append(f"{cs}*xi" if cs != "1" else "xi")
            else:
                parts.append(f"{cs}*xi^{j}" if cs != "1" else f"xi^{j}")
        parts.append(f"O(xi^{self.order})")
        return " + ".join(parts)

    def __repr__(self):
        return f"TruncatedPowerSeries({self})"

    def to_json(self):
        return {"coeffs": [str(c) for c in self.coeffs], "order": self.order}


def tps_mul(f: TruncatedPowerSeries, g: TruncatedPowerSeries) -> TruncatedPowerSeries:
    return f * g


def tps_inv(f: TruncatedPowerSeries) -> TruncatedPowerSeries:
    return f.inverse()


def theta(f: TruncatedPowerSeries):
    """Evaluation at xi = 0; a ring map whose kernel is (xi)."""
    return f.coeffs[0]


def rational_tps(coeffs, order: int) -> TruncatedPowerSeries:
    return TruncatedPowerSeries([as_fraction(c) for c in coeffs], order)


def gaussian_tps(coeffs, order: int) -> TruncatedPowerSeries:
    return TruncatedPowerSeries([GaussianRational.of(c) for c in coeffs], order)


def primitive_integer_poly(coeffs) -> list[int]:
    """Clear denominators and divide by the content; [] stays []."""
    fracs = [as_fraction(c) for c in coeffs]
    if all(c == 0 for c in fracs):
        return [0] * len(fracs)
    denom = 1
    for c in fracs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in fracs]
    content = 0
    for c in ints:
        content = gcd(content, abs(c))
    return [c // content for c in ints]
