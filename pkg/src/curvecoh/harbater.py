"""The ring of integer Laurent series converging beyond radius r.

Elements of Z((T))_{>r} (0 < r < 1) are Laurent series with integer
coefficients that converge absolutely on a disc of radius r' for some
r' > r. Two representations are supported, both with fully certified
radius accounting:

* ``RationalFn`` -- num/den with den(0) != 0; the series expansion comes
  from the denominator recurrence, the radius from exact root data
  (denominator degree <= 2) or a classical Cauchy-type bound;
* ``CertifiedSeries`` -- a finite Laurent tail, explicitly known head
  coefficients a_0..a_K, and an envelope |a_k| <= C*(k+m+1)^e * s^-k
  valid for every k, which certifies convergence on |T| < s. The
  polynomial degree e is 0 for user input (the plain geometric bound)
  and grows under multiplication so that products keep the radius
  min(s_f, s_g).

Strictness matters: membership in Z((T))_{>r} requires the certified
radius to exceed r; an element with a pole exactly at modulus r is out.

Evaluation at a point x with |x| <= r is the continuous ring map T -> x;
its kernel is principal, generated by the primitive integer polynomial
vanishing at x (``kernel_generator``), and ``divide_exact`` witnesses
divisibility of kernel elements by the generator. ``local_completion``
expands elements in powers of xi = g(T) around the point, producing the
truncated power series base ring used by the degree-zero pipeline.

Quotients of divisions may pick up rational (non-integer) coefficients;
every element carries an ``is_integral`` flag rather than guessing a
normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    NotDivisible,
    NotMemberError,
    NotSimpleRoot,
    PoleAtPoint,
    RadiusNotCertified,
)
from .scalars import (
    GAUSSIAN_ZERO,
    GaussianRational,
    TruncatedPowerSeries,
    as_fraction,
    gaussian_tps,
    primitive_integer_poly,
)

# ---------------------------------------------------------------------------
# dense polynomials over Q (ascending coefficient lists)
# ---------------------------------------------------------------------------


def ptrim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def padd(a, b):
    n = max(len(a), len(b))
    return ptrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def pneg(a):
    return [-c for c in a]


def psub(a, b):
    return padd(a, pneg(b))


def pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return ptrim(out)


def pscale(a, c):
    return ptrim([x * c for x in a])


def pdivmod(a, b):
    """Exact polynomial division over Q: a = q*b + r with deg r < deg b."""
    b = ptrim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(ptrim(a))
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = c
        for i, cb in enumerate(b):
            a[d + i] -= c * cb
        a = ptrim(a)
        if not a:
            break
    return ptrim(q), a


def pgcd(a, b):
    a, b = ptrim(a), ptrim(b)
    while b:
        a, b = b, pdivmod(a, b)[1]
    if a:
        a = pscale(a, 1 / a[-1])
    return a


def peval(p, x):
    """Horner evaluation; x may be a Fraction or a GaussianRational."""
    acc = x * 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def pderiv(p):
    return ptrim([c * k for k, c in enumerate(p)][1:])


def ptaylor(p, x):
    """Coefficients of p(x + d) as a polynomial in d (repeated synthetic division)."""
    work = [c * (x * 0 + 1) for c in p]
    out = []
    for _ in range(len(p)):
        new = []
        carry = x * 0
        for c in reversed(work):
            carry = c + carry * x
            new.append(carry)
        new.reverse()
        out.append(new[0])  # remainder = value of the current quotient at x
        work = new[1:]
        if not work:
            break
    return out


def poly_str(p) -> str:
    p = ptrim(list(p))
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        mono = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
        if not mono:
            term = str(c)
        elif c == 1:
            term = mono
        elif c == -1:
            term = f"-{mono}"
        else:
            term = f"{c}*{mono}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


def poly_parse(text: str):
    """Parse "9*T^2 - 1", "3T-1", "T^3 - 7" into an ascending Q-coefficient list."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial")
    terms, cur = [], ""
    for idx, ch in enumerate(s):
        if ch in "+-" and idx > 0 and s[idx - 1] not in "+-*/^":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    coeffs: dict[int, Fraction] = {}
    for term in terms:
        sign = Fraction(1)
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:]
        if "T" in term:
            coeff_s, _, rest = term.partition("T")
            coeff_s = coeff_s.rstrip("*")
            coeff = Fraction(coeff_s) if coeff_s else Fraction(1)
            k = int(rest[1:]) if rest.startswith("^") else (1 if not rest else None)
            if k is None:
                raise ValueError(f"bad polynomial term {term!r}")
        else:
            coeff, k = Fraction(term), 0
        coeffs[k] = coeffs.get(k, Fraction(0)) + sign * coeff
    out = [Fraction(0)] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return ptrim(out)


def _is_integral_poly(p) -> bool:
    return all(as_fraction(c).denominator == 1 for c in p)


def _sqrt_lower(m2: Fraction) -> Fraction:
    """A rational lower bound for sqrt(m2) (exact when m2 is a perfect square)."""
    if m2 <= 0:
        return Fraction(0)
    return Fraction(math.isqrt(m2.numerator * m2.denominator), m2.denominator)


def _abs_upper(z: GaussianRational) -> Fraction:
    """A rational upper bound for |z|."""
    return abs(z.re) + abs(z.im)


# ---------------------------------------------------------------------------
# radius certificates
# ---------------------------------------------------------------------------


@dataclass
class RadiusCertificate:
    """Certified lower bound on the convergence radius.

    ``s`` is a rational lower bound; when ``modulus_squared`` is set the
    nearest singularity's modulus is known exactly as sqrt of it, and
    strict comparisons are done on squares. ``s = None`` means entire.
    """

    s: Fraction | None
    method: str  # exact-roots | classical-bound | tail-bound
    modulus_squared: Fraction | None = None
    witness: object = None

    def exceeds(self, r: Fraction) -> bool:
        """radius > r, decided exactly."""
        if self.s is None:
            return True
        if self.modulus_squared is not None:
            return self.modulus_squared > r * r
        return self.s > r

    def certainly_at_most(self, r: Fraction) -> bool:
        """True when the true radius is known to be <= r."""
        return self.modulus_squared is not None and self.modulus_squared <= r * r

    def __str__(self):
        if self.s is None:
            return f"radius oo ({self.method})"
        if self.modulus_squared is not None:
            return f"radius^2 = {self.modulus_squared} ({self.method})"
        return f"radius >= {self.s} ({self.method})"


@dataclass
class Membership:
    status: str  # member | not_member | unknown
    certificate: RadiusCertificate
    witness: object = None

    @property
    def is_member(self) -> bool:
        return self.status == "member"


@dataclass
class Interval:
    """center +- radius in Q(i), radius a certified rational bound."""

    center: GaussianRational
    radius: Fraction

    def __add__(self, other):
        other = _as_interval(other)
        return Interval(self.center + other.center, self.radius + other.radius)

    def __mul__(self, other):
        other = _as_interval(other)
        rad = (
            _abs_upper(self.center) * other.radius
            + _abs_upper(other.center) * self.radius
            + self.radius * other.radius
        )
        return Interval(self.center * other.center, rad)

    def contains(self, value) -> bool:
        diff = self.center - GaussianRational.of(value)
        return diff.norm_squared <= self.radius * self.radius

    def overlaps(self, other: "Interval") -> bool:
        diff = self.center - other.center
        reach = self.radius + other.radius
        return diff.norm_squared <= reach * reach

    def __str__(self):
        return f"{self.center} +- {self.radius}"


def _as_interval(x) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval(GaussianRational.of(x), Fraction(0))


# ---------------------------------------------------------------------------
# element representations
# ---------------------------------------------------------------------------


class RationalFn:
    """num/den over Q with den(0) != 0, gcd-reduced, den(0) normalized to 1."""

    __slots__ = ("num", "den", "is_integral")

    def __init__(self, num, den=(1,)):
        num = [as_fraction(c) for c in ptrim(list(num))]
        den = [as_fraction(c) for c in ptrim(list(den))]
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = [Fraction(1)]
        g = pgcd(num, den) if num else []
        if len(g) > 1:
            num = pdivmod(num, g)[0]
            den = pdivmod(den, g)[0]
        if den[0] == 0:
            raise ValueError("denominator vanishes at T = 0; not a power series")
        d0 = den[0]
        num = pscale(num, 1 / d0)
        den = pscale(den, 1 / d0)
        self.num = tuple(num)
        self.den = tuple(den)
        self.is_integral = _is_integral_poly(num) and _is_integral_poly(den)

    @classmethod
    def from_poly(cls, p) -> "RationalFn":
        return cls(p, [1])

    @classmethod
    def constant(cls, c) -> "RationalFn":
        return cls([as_fraction(c)], [1])

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "RationalFn":
        if isinstance(other, RationalFn):
            return other
        return RationalFn.constant(other)

    def __add__(self, other):
        o = self._coerce(other)
        return RationalFn(
            padd(pmul(self.num, o.den), pmul(o.num, self.den)), pmul(self.den, o.den)
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return RationalFn(
            psub(pmul(self.num, o.den), pmul(o.num, self.den)), pmul(self.den, o.den)
        )

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return RationalFn(pmul(self.num, o.num), pmul(self.den, o.den))

    __rmul__ = __mul__

    def __neg__(self):
        return RationalFn(pneg(self.num), self.den)

    def __eq__(self, other):
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- series view ----------------------------------------------------------

    def series_prefix(self, count: int):
        """First ``count`` Taylor coefficients via the denominator recurrence."""
        out = []
        for k in range(count):
            acc = self.num[k] if k < len(self.num) else Fraction(0)
            for j in range(1, min(k, len(self.den) - 1) + 1):
                acc -= self.den[j] * out[k - j]
            out.append(acc)  # den[0] == 1
        return out

    def evaluate(self, x: GaussianRational):
        x = GaussianRational.of(x)
        dv = peval(list(self.den), x)
        if not dv:
            raise PoleAtPoint(f"denominator vanishes at {x}")
        return peval(list(self.num), x) / dv

    def __str__(self):
        if self.den == (1,):
            return poly_str(self.num)
        return f"{poly_str(self.num)} / {poly_str(self.den)}"

    def __repr__(self):
        return f"RationalFn({self})"


class CertifiedSeries:
    """Known coefficients a_{-m}..a_K plus the envelope |a_k| <= C*(k+m+1)^e*s^-k."""

    __slots__ = ("offset", "coeffs", "C", "s", "poly_deg", "is_integral")

    def __init__(self, coeffs, offset: int = 0, C=1, s=1, poly_deg: int = 0):
        """``coeffs[j]`` is the coefficient of T^(j - offset).

        (C, s) is the declared tail bound |a_k| <= C*(k+offset+1)^poly_deg*s^-k
        for k beyond the known head; the constructor raises C as needed so
        the envelope also dominates every known coefficient.
        """
        self.offset = offset
        self.coeffs = tuple(as_fraction(c) for c in coeffs)
        s = as_fraction(s)
        if s <= 0:
            raise ValueError("tail bound radius s must be positive")
        C = as_fraction(C)
        for j, c in enumerate(self.coeffs):
            k = j - offset
            need = abs(c) * s**k / Fraction(k + offset + 1) ** poly_deg
            if need > C:
                C = need
        self.C = C
        self.s = s
        self.poly_deg = poly_deg
        self.is_integral = _is_integral_poly(self.coeffs)

    @property
    def head_top(self) -> int:
        """Largest exponent with a known coefficient."""
        return len(self.coeffs) - 1 - self.offset

    def coefficient(self, k: int):
        j = k + self.offset
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        if k > self.head_top:
            raise ValueError(f"coefficient at T^{k} only bounded, not known")
        return Fraction(0)

    def series_prefix(self, count: int):
        if count - 1 > self.head_top:
            raise ValueError("prefix longer than the known head")
        return [self.coefficient(k) for k in range(count)]

    def _envelope_at(self, k: int) -> Fraction:
        return self.C * Fraction(k + self.offset + 1) ** self.poly_deg * self.s ** (-k)

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, CertifiedSeries):
            other = CertifiedSeries([as_fraction(other)], 0, C=abs(as_fraction(other)) or 1, s=self.s)
        m = max(self.offset, other.offset)
        top = min(self.head_top, other.head_top)
        coeffs = []
        for k in range(-m, top + 1):
            a = self.coefficient(k) if -self.offset <= k <= self.head_top else Fraction(0)
            b = other.coefficient(k) if -other.offset <= k <= other.head_top else Fraction(0)
            coeffs.append(a + b)
        s = min(self.s, other.s)
        e = max(self.poly_deg, other.poly_deg)
        # rebase both envelopes to (s, e, m); (k+m+1) >= (k+offset+1) so the
        # polynomial factor only grows, and s <= s_i only weakens the decay
        C = self.C + other.C
        return CertifiedSeries(coeffs, m, C=C, s=s, poly_deg=e)

    __radd__ = __add__

    def __neg__(self):
        return CertifiedSeries(
            [-c for c in self.coeffs], self.offset, self.C, self.s, self.poly_deg
        )

    def __sub__(self, other):
        if not isinstance(other, CertifiedSeries):
            other = CertifiedSeries([as_fraction(other)], 0, C=abs(as_fraction(other)) or 1, s=self.s)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, CertifiedSeries):
            c = as_fraction(other)
            return CertifiedSeries(
                [x * c for x in self.coeffs],
                self.offset,
                self.C * max(abs(c), Fraction(1)),
                self.s,
                self.poly_deg,
            )
        m = self.offset + other.offset
        top = min(self.head_top - other.offset, other.head_top - self.offset)
        coeffs = []
        for k in range(-m, top + 1):
            acc = Fraction(0)
            for i in range(-self.offset, self.head_top + 1):
                j = k - i
                if -other.offset <= j <= other.head_top:
                    acc += self.coefficient(i) * other.coefficient(j)
            coeffs.append(acc)
        # sum over i+j=k of the two envelopes: at most (k+m+1) terms, each at
        # most C1*C2*(k+m+1)^(e1+e2)*s^-k with s = min(s1, s2)
        return CertifiedSeries(
            coeffs,
            m,
            C=self.C * other.C,
            s=min(self.s, other.s),
            poly_deg=self.poly_deg + other.poly_deg + 1,
        )

    __rmul__ = __mul__

    def __str__(self):
        tail = (
            ",".join(
                f"{j - self.offset}:{self.coeffs[j]}" for j in range(self.offset)
            )
            or "-"
        )
        head = " ".join(str(c) for c in self.coeffs[self.offset :])
        extra = f" deg {self.poly_deg}" if self.poly_deg else ""
        return f"{tail} ; {head} ; bound {self.C} {self.s}{extra}"

    def __repr__(self):
        return f"CertifiedSeries({self})"


HarbaterElement = (RationalFn, CertifiedSeries)


def parse_element(text: str):
    """Parse the element grammar: "poly / poly" or "tail ; heads ; bound C s"."""
    if ";" in text:
        tail_s, head_s, bound_s = (part.strip() for part in text.split(";"))
        tail = {}
        if tail_s != "-":
            for item in tail_s.split(","):
                e, c = item.split(":")
                tail[int(e)] = Fraction(c)
        heads = [Fraction(c) for c in head_s.split()]
        parts = bound_s.split()
        if parts[0] != "bound":
            raise ValueError(f"expected 'bound C s', got {bound_s!r}")
        C, s = Fraction(parts[1]), Fraction(parts[2])
        offset = -min(tail) if tail else 0
        coeffs = [Fraction(0)] * (offset + len(heads))
        for e, c in tail.items():
            coeffs[e + offset] = c
        for j, c in enumerate(heads):
            coeffs[offset + j] = c
        return CertifiedSeries(coeffs, offset, C=C, s=s)
    if " / " in text:
        num_s, den_s = text.split(" / ", 1)
        return RationalFn(poly_parse(num_s), poly_parse(den_s))
    return RationalFn.from_poly(poly_parse(text))


# ---------------------------------------------------------------------------
# radius and membership
# ---------------------------------------------------------------------------


def _quadratic_root_data(den):
    """(modulus_squared of nearest root, witness) for deg <= 2, or None."""
    den = ptrim(list(den))
    deg = len(den) - 1
    if deg == 1:
        root = -den[0] / den[1]
        return root * root, root
    if deg == 2:
        c0, c1, c2 = den
        disc = c1 * c1 - 4 * c0 * c2
        if disc < 0:
            # conjugate pair, |root|^2 = c0/c2 exactly
            m2 = c0 / c2
            sq = _sqrt_lower(-disc)
            witness = None
            if sq * sq == -disc:
                witness = GaussianRational(-c1 / (2 * c2), sq / (2 * c2))
            return m2, witness
        sq = _sqrt_lower(disc)
        if sq * sq == disc:
            r1 = (-c1 + sq) / (2 * c2)
            r2 = (-c1 - sq) / (2 * c2)
            near = r1 if abs(r1) <= abs(r2) else r2
            return near * near, near
        return None  # real irrational pair: fall back to the classical bound
    return None


def radius_lower_bound(e) -> RadiusCertificate:
    """Certified lower bound for the convergence radius of an element."""
    if isinstance(e, CertifiedSeries):
        return RadiusCertificate(s=e.s, method="tail-bound")
    den = ptrim(list(e.den))
    if len(den) == 1:
        return RadiusCertificate(s=None, method="exact-roots")
    data = _quadratic_root_data(den)
    if data is not None:
        m2, witness = data
        return RadiusCertificate(
            s=_sqrt_lower(m2), method="exact-roots", modulus_squared=m2, witness=witness
        )
    top = max(abs(c) for c in den[1:])
    s = abs(den[0]) / (abs(den[0]) + top)
    return RadiusCertificate(s=s, method="classical-bound")


def membership(e, r) -> Membership:
    """Decide membership in Z((T))_{>r}: certified radius strictly above r."""
    r = as_fraction(r)
    if not 0 < r < 1:
        raise ValueError("membership requires 0 < r < 1")
    cert = radius_lower_bound(e)
    if cert.exceeds(r):
        return Membership("member", cert)
    if cert.certainly_at_most(r):
        return Membership("not_member", cert, witness=cert.witness)
    return Membership("unknown", cert)


def evaluate(e, x, r):
    """The continuous ring map T -> x, |x| <= r.

    Exact for RationalFn; an Interval (exact head plus a certified tail
    bound) for CertifiedSeries.
    """
    x = GaussianRational.of(x)
    r = as_fraction(r)
    if x.norm_squared > r * r:
        raise ValueError(f"|x| > r: {x} outside the evaluation disc of radius {r}")
    if isinstance(e, RationalFn):
        if not peval(list(e.den), x):
            raise PoleAtPoint(f"pole at T = {x}")
        if not membership(e, r).is_member:
            raise NotMemberError(f"element not certified in Z((T))_>{r}")
        return e.evaluate(x)
    if e.offset > 0 and not x:
        raise PoleAtPoint("Laurent tail evaluated at T = 0")
    if not membership(e, r).is_member:
        raise NotMemberError(f"element not certified in Z((T))_>{r}")
    acc = GAUSSIAN_ZERO
    for k in range(-e.offset, e.head_top + 1):
        c = e.coefficient(k)
        if c == 0:
            continue
        if k >= 0:
            term = GaussianRational.of(1)
            for _ in range(k):
                term = term * x
        else:
            term = GaussianRational.of(1)
            for _ in range(-k):
                term = term / x
        acc = acc + term * c
    # tail: sum_{k>K} C (k+m+1)^e rho^k with rho >= |x|/s rational, rho < 1
    m2 = x.norm_squared / (e.s * e.s)
    rho = (1 + m2) / 2 if m2 < 1 else None
    if m2 == 0:
        rho = Fraction(0)
    if rho is None or rho >= 1:
        raise NotMemberError("cannot bound the tail at this point")
    K = e.head_top
    ee = e.poly_deg
    tail = (
        e.C
        * Fraction(K + e.offset + 2) ** ee
        * Fraction(math.factorial(ee))
        * rho ** (K + 1)
        / (1 - rho) ** (ee + 1)
    )
    return Interval(acc, tail)


# ---------------------------------------------------------------------------
# the principal kernel and division
# ---------------------------------------------------------------------------


def kernel_generator(x) -> list:
    """Primitive integer polynomial generating the kernel of T -> x.

    Linear b*T - a for rational x = a/b; the primitive integer quadratic
    b^2*T^2 - 2*b*Re(a)*T + |a|^2 for properly Gaussian x = a/b.
    """
    x = GaussianRational.of(x)
    if x.im == 0:
        fr = x.re
        return [-fr.numerator, fr.denominator]
    b = math.lcm(x.re.denominator, x.im.denominator)
    p, q = x.re * b, x.im * b
    return primitive_integer_poly([p * p + q * q, -2 * b * p, Fraction(b * b)])


def _roots_of(g):
    """Exact roots of an integer polynomial of degree <= 2, or None."""
    g = ptrim([as_fraction(c) for c in g])
    deg = len(g) - 1
    if deg == 1:
        return [GaussianRational.of(-g[0] / g[1])]
    if deg == 2:
        c0, c1, c2 = g
        disc = c1 * c1 - 4 * c0 * c2
        sq = _sqrt_lower(abs(disc))
        if sq * sq != abs(disc):
            return None
        if disc < 0:
            re, im = -c1 / (2 * c2), sq / (2 * c2)
            return [GaussianRational(re, im), GaussianRational(re, -im)]
        return [
            GaussianRational.of((-c1 + sq) / (2 * c2)),
            GaussianRational.of((-c1 - sq) / (2 * c2)),
        ]
    return None


def _inverse_envelope(g):
    """(C, s) with |coefficients of 1/g| <= C*s^-k, exact rationals, or None.

    Supported: linear denominators (rational root) and quadratics with a
    conjugate root pair whose modulus and imaginary part are rational.
    """
    g = ptrim([as_fraction(c) for c in g])
    deg = len(g) - 1
    if deg == 0:
        return Fraction(1) / abs(g[0]), None
    if deg == 1:
        s = abs(g[0] / g[1])
        return Fraction(1) / abs(g[0]), s
    if deg == 2:
        c0, c1, c2 = g
        disc = c1 * c1 - 4 * c0 * c2
        if disc >= 0:
            roots = _roots_of(g)
            if roots is None:
                return None
            mods = [abs(r.re) for r in roots]
            if 0 in mods:
                return None
            s = min(mods)
            # partial fractions 1/g = A/(T-r1) + B/(T-r2)
            r1, r2 = roots[0].re, roots[1].re
            if r1 == r2:
                return None
            A = 1 / (c2 * (r1 - r2))
            return abs(A) / abs(r1) + abs(A) / abs(r2), s
        m2 = c0 / c2
        s = _sqrt_lower(m2)
        if s * s != m2:
            return None
        im2 = -disc / (4 * c2 * c2)
        im = _sqrt_lower(im2)
        if im * im != im2:
            return None
        amod = 1 / (2 * abs(c2) * im)
        return 2 * amod / s, s
    return None


def divide_exact(f, g, r, verify_window: int = 50):
    """Quotient q with f = q * g, for g an integer polynomial kernel generator.

    Divisibility is decided exactly (polynomial remainder for RationalFn,
    known-head long division for CertifiedSeries); the round trip q*g = f
    is re-verified on ``verify_window`` coefficients. Quotients may have
    rational coefficients; they carry is_integral flags.
    """
    g = ptrim([as_fraction(c) for c in g])
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if isinstance(f, RationalFn):
        q_num, rem = pdivmod(list(f.num), g)
        if rem:
            roots = _roots_of(g)
            detail = ""
            if roots:
                vals = []
                for root in roots:
                    if peval(list(f.den), root):
                        vals.append(str(f.evaluate(root)))
                if vals:
                    detail = f" (values at roots: {', '.join(vals)})"
            raise NotDivisible(f"{f} is not divisible by {poly_str(g)}{detail}")
        common = pgcd(list(f.den), g)
        if len(common) > 1:
            raise NotDivisible(f"{f} has a pole at a root of {poly_str(g)}")
        q = RationalFn(q_num, list(f.den))
        _verify_roundtrip(q, g, f, verify_window)
        return q
    # CertifiedSeries: strip any pure T-power factor of g (T is invertible
    # in the Laurent ring, so this just shifts the window), then long-divide
    shift = 0
    g_full = list(g)
    while g and g[0] == 0:
        g = g[1:]
        shift += 1
    offset = f.offset + shift
    C_shift = f.C / f.s**shift
    env = _inverse_envelope(g)
    if env is None:
        raise RadiusNotCertified(
            f"no exact coefficient envelope for 1/({poly_str(g)})"
        )
    C_inv, s_inv = env
    coeffs = list(f.coeffs)
    out = []
    for k in range(len(coeffs)):
        acc = coeffs[k]
        for j in range(1, min(k, len(g) - 1) + 1):
            acc -= g[j] * out[k - j]
        out.append(acc / g[0])
    s = min(f.s, s_inv) if s_inv is not None else f.s
    q = CertifiedSeries(
        out, offset, C=C_shift * C_inv, s=s, poly_deg=f.poly_deg + 1
    )
    back = q * CertifiedSeries(
        g_full, 0, C=max(abs(c) for c in g_full), s=1
    )
    top = min(back.head_top, f.head_top, verify_window - f.offset)
    for k in range(-f.offset, top + 1):
        if back.coefficient(k) != f.coefficient(k):
            raise NotDivisible(f"round trip failed at coefficient T^{k}")
    return q


def _verify_roundtrip(q: RationalFn, g, f: RationalFn, window: int):
    prod = q * RationalFn.from_poly(g)
    a = prod.series_prefix(window)
    b = f.series_prefix(window)
    if a != b:
        raise NotDivisible("round trip q*g != f on the verification window")


# ---------------------------------------------------------------------------
# local completion at a point
# ---------------------------------------------------------------------------


@dataclass
class LocalCompletion:
    """The xi-adic completion at a point x: A = Q(i)[[xi]] mod xi^M, xi = g(T)."""

    x: GaussianRational
    r: Fraction
    M: int
    g: list
    delta_of_xi: TruncatedPowerSeries  # T - x as a series in xi

    def theta(self, e):
        """Evaluation at the point (reduction modulo xi)."""
        return evaluate(e, self.x, self.r)

    def expand(self, e: RationalFn) -> TruncatedPowerSeries:
        """Taylor expansion of a rational function in powers of xi = g(T)."""
        if not isinstance(e, RationalFn):
            raise TypeError("local expansion is defined for RationalFn elements")
        num = self._poly_in_xi(e.num)
        den = self._poly_in_xi(e.den)
        if not den.coeffs[0]:
            raise PoleAtPoint(f"pole at the completion point {self.x}")
        return num * den.inverse()

    def _poly_in_xi(self, p) -> TruncatedPowerSeries:
        taylor = ptaylor([GaussianRational.of(c) for c in p], self.x)
        series = TruncatedPowerSeries(
            [GaussianRational.of(c) for c in taylor], self.M
        )
        return series.compose(self.delta_of_xi)

    def base_presentation(self, f: TruncatedPowerSeries | None = None):
        """Package as a two-periodic presentation (default Bott coefficient 1)."""
        from .periodic import two_periodic_presentation

        if f is None:
            f = gaussian_tps([1], self.M)
        if f.order != self.M:
            raise ValueError("Bott coefficient must live in A = k[[xi]] mod xi^M")
        return two_periodic_presentation(f)

    def to_json(self) -> dict:
        return {
            "x": str(self.x),
            "r": str(self.r),
            "M": self.M,
            "xi": poly_str(self.g),
            "delta_of_xi": str(self.delta_of_xi),
        }


def local_completion(x, r, M: int) -> LocalCompletion:
    """Complete at the point x (|x| <= r): xi = g(T), theta = evaluation at x.

    The change of variable T = x + delta is inverted by series reversion
    of xi = g(x + delta), which needs the root to be simple.
    """
    x = GaussianRational.of(x)
    r = as_fraction(r)
    if x.norm_squared > r * r:
        raise ValueError(f"|x| > r for completion point {x}")
    if M < 1:
        raise ValueError("M must be >= 1")
    g = kernel_generator(x)
    gprime = peval([GaussianRational.of(c) for c in pderiv(g)], x)
    if not gprime:
        raise NotSimpleRoot(f"kernel generator has a multiple root at {x}")
    taylor = ptaylor([GaussianRational.of(c) for c in g], x)
    xi_of_delta = TruncatedPowerSeries(
        [GaussianRational.of(c) for c in taylor], M + 1
    )
    return LocalCompletion(
        x=x, r=r, M=M, g=g, delta_of_xi=xi_of_delta.reversion()
    )
