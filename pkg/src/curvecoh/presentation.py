"""Graded presentations of the algebra of sections regular away from infinity.

An ``AffinePresentation`` lists a k0-basis b_0, b_1, ... with degrees, a
multiplication table with structure constants in k0, and an embedding of
each basis element into the Laurent field k1((t^-1)) as an exact window.
Two presentations are built in:

* ``p1_presentation`` -- the coordinate algebra k1[t] of the complex
  projective line minus infinity, basis {t^i}, over the trivial pair
  (k0 = k1 = Q(i));
* ``twistor_presentation`` -- the real form Q[u,v]/(u^2+v^2+1) of the
  twistor projective line, reduced basis {u^i, u^i*v}, over (Q, Q(i)),
  embedded by u = (t - t^-1)/2, v = -(i/2)(t + t^-1).

The ``leading_exact`` flag declares that pole_order(embed(b)) equals
degree(b) and that leading coefficients of equal-degree basis elements
are k0-linearly independent; this is what turns the downstream linear
algebra into certified computations, and it is checked, not assumed
(``verify_leading_exact``).

User presentations load from a small text format, see ``load_presentation``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import EmbeddingNotRingMap
from .linalg import rank
from .scalars import (
    GAUSSIAN_PAIR,
    REAL_IN_GAUSSIAN,
    FieldPair,
    GaussianRational,
    as_fraction,
    parse_gaussian,
)
from .series import LaurentWindow, gaussian_window


class AffinePresentation:
    def __init__(
        self,
        name: str,
        pair: FieldPair,
        degree_fn,
        indices_of_degree_fn,
        embed_fn,
        mul_fn,
        label_fn,
        leading_exact: bool = False,
        max_degree: int | None = None,
    ):
        self.name = name
        self.pair = pair
        self.leading_exact = leading_exact
        self.max_degree = max_degree
        self._degree = degree_fn
        self._indices_of_degree = indices_of_degree_fn
        self._embed = embed_fn
        self._mul = mul_fn
        self._label = label_fn
        self._embed_cache: dict[int, LaurentWindow] = {}

    # -- basis bookkeeping -------------------------------------------------

    def degree_of(self, i: int) -> int:
        return self._degree(i)

    def label(self, i: int) -> str:
        return self._label(i)

    def indices_of_degree(self, d: int) -> list[int]:
        if self.max_degree is not None and d > self.max_degree:
            return []
        return list(self._indices_of_degree(d))

    def basis_up_to(self, D: int) -> list[int]:
        """All basis indices of degree <= D, ordered by (degree, index)."""
        if D < 0:
            return []
        out = []
        for d in range(D + 1):
            out.extend(self.indices_of_degree(d))
        return out

    def embed_basis(self, i: int) -> LaurentWindow:
        if i not in self._embed_cache:
            self._embed_cache[i] = self._embed(i)
        return self._embed_cache[i]

    def mul_basis(self, i: int, j: int) -> dict:
        """Structure constants of b_i * b_j as {index: k0 coefficient}."""
        return self._mul(i, j)

    # -- elements ------------------------------------------------------------

    def embed_element(self, coeffs: dict) -> LaurentWindow:
        """k0-linear extension of the embedding; exact window."""
        acc = LaurentWindow.zero()
        for i, c in coeffs.items():
            acc = acc + self.embed_basis(i).scale(self.pair.to_extension(c))
        return acc

    def mul_elements(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for i, ca in a.items():
            for j, cb in b.items():
                for k, s in self.mul_basis(i, j).items():
                    out[k] = out.get(k, ca * 0) + ca * cb * s
        return {k: c for k, c in out.items() if c != 0}

    def element_label(self, coeffs: dict) -> str:
        parts = []
        for i in sorted(coeffs):
            c = coeffs[i]
            if c == 0:
                continue
            cs = str(c)
            parts.append(self.label(i) if cs == "1" else f"{cs}*{self.label(i)}")
        return " + ".join(parts) if parts else "0"

    # -- verification ----------------------------------------------------------

    def verify_ring_map(self, max_degree: int = 6) -> None:
        """Check embed(b_i)*embed(b_j) == embed(b_i * b_j) up to the degree bound."""
        basis = self.basis_up_to(max_degree)
        for i in basis:
            for j in basis:
                if self.degree_of(i) + self.degree_of(j) > max_degree:
                    continue
                lhs = self.embed_basis(i) * self.embed_basis(j)
                rhs = self.embed_element(self.mul_basis(i, j))
                if not lhs.agrees_with(rhs):
                    raise EmbeddingNotRingMap(
                        f"{self.name}: embed({self.label(i)})*embed({self.label(j)}) "
                        f"!= embed of the product: {lhs} vs {rhs}"
                    )

    def verify_leading_exact(self, max_degree: int = 6) -> None:
        """Check both leading_exact conditions degree by degree."""
        for d in range(max_degree + 1):
            idxs = self.indices_of_degree(d)
            rows = []
            for i in idxs:
                w = self.embed_basis(i)
                if w.pole_order() != d:
                    raise EmbeddingNotRingMap(
                        f"{self.name}: pole_order(embed({self.label(i)})) != degree {d}"
                    )
                rows.append(list(self.pair.coords(w.coeffs[d])))
            if rows and rank(rows, self.pair.base_zero()) != len(rows):
                raise EmbeddingNotRingMap(
                    f"{self.name}: leading coefficients in degree {d} are k0-dependent"
                )


# ---------------------------------------------------------------------------
# built-in presentations
# ---------------------------------------------------------------------------


def p1_presentation() -> AffinePresentation:
    """The complex projective line: basis {t^i}, embed(t^i) = t^i."""

    def label(i):
        return "1" if i == 0 else ("t" if i == 1 else f"t^{i}")

    return AffinePresentation(
        name="p1",
        pair=GAUSSIAN_PAIR,
        degree_fn=lambda i: i,
        indices_of_degree_fn=lambda d: [d],
        embed_fn=lambda i: gaussian_window({i: 1}),
        mul_fn=lambda i, j: {i + j: GaussianRational.of(1)},
        label_fn=label,
        leading_exact=True,
    )


def _twistor_decode(i: int):
    """index -> (power of u, has v factor); degree = power + has_v."""
    if i == 0:
        return 0, False
    if i % 2 == 1:
        return (i + 1) // 2, False
    return i // 2 - 1, True


def _twistor_encode(p: int, has_v: bool) -> int:
    if not has_v:
        return 0 if p == 0 else 2 * p - 1
    return 2 * (p + 1)


def twistor_presentation() -> AffinePresentation:
    """The twistor projective line Q[u,v]/(u^2+v^2+1), reduced basis {u^i, u^i v}.

    The relation eliminates v^2, so every product of basis elements is a
    short integer combination of basis elements, and the leading window
    coefficients (1/2)^d and -i*(1/2)^d in each degree are Q-independent.
    """
    u = gaussian_window({1: Fraction(1, 2), -1: Fraction(-1, 2)})
    v = gaussian_window(
        {
            1: GaussianRational(Fraction(0), Fraction(-1, 2)),
            -1: GaussianRational(Fraction(0), Fraction(-1, 2)),
        }
    )
    cache: dict[int, LaurentWindow] = {}

    def embed(i):
        if i in cache:
            return cache[i]
        p, has_v = _twistor_decode(i)
        w = u.power(p)
        if has_v:
            w = w * v
        cache[i] = w
        return w

    def degree(i):
        p, has_v = _twistor_decode(i)
        return p + (1 if has_v else 0)

    def indices_of_degree(d):
        if d == 0:
            return [0]
        return [_twistor_encode(d, False), _twistor_encode(d - 1, True)]

    def mul(i, j):
        pi, fi = _twistor_decode(i)
        pj, fj = _twistor_decode(j)
        p = pi + pj
        if not (fi and fj):
            return {_twistor_encode(p, fi or fj): Fraction(1)}
        # v^2 = -1 - u^2
        return {
            _twistor_encode(p, False): Fraction(-1),
            _twistor_encode(p + 2, False): Fraction(-1),
        }

    def label(i):
        p, has_v = _twistor_decode(i)
        if p == 0:
            return "v" if has_v else "1"
        up = "u" if p == 1 else f"u^{p}"
        return f"{up}*v" if has_v else up

    return AffinePresentation(
        name="twistor",
        pair=REAL_IN_GAUSSIAN,
        degree_fn=degree,
        indices_of_degree_fn=indices_of_degree,
        embed_fn=embed,
        mul_fn=mul,
        label_fn=label,
        leading_exact=True,
    )


def embed_element(pres: AffinePresentation, coeffs: dict) -> LaurentWindow:
    return pres.embed_element(coeffs)


def basis_up_to(pres: AffinePresentation, D: int) -> list[int]:
    return pres.basis_up_to(D)


# ---------------------------------------------------------------------------
# declarative text format
# ---------------------------------------------------------------------------
#
#   fields rational gaussian      (or: fields gaussian gaussian)
#   flags leading_exact
#   basis <symbol> <degree>
#   mul <sym> <sym> = <coeff>*<sym> + <coeff>*<sym> + ...
#   embed <sym> = <coeff>*t^<exp> + ...
#
# Coefficients are rationals "a/b" or Gaussians "a/b+c/d*i"; terms are
# separated by " + " (the spaces matter, Gaussian coefficients contain
# bare '+'). Lines starting with '#' are comments. Products not listed
# default to commutativity (mul b a is looked up when mul a b is absent);
# everything else must be explicit.


def _parse_term(term: str):
    if "*" in term:
        coeff, sym = term.split("*", 1)
    else:
        coeff, sym = "1", term
    return coeff.strip(), sym.strip()


def load_presentation(text: str, name: str = "user", verify_degree: int = 6) -> AffinePresentation:
    """Parse the declarative text format and verify the declared flags."""
    pair = None
    leading_exact = False
    symbols: list[str] = []
    degrees: dict[str, int] = {}
    mul_table: dict[tuple[str, str], dict[str, object]] = {}
    embeds: dict[str, LaurentWindow] = {}

    def coeff_of(s: str, gaussian: bool):
        return parse_gaussian(s) if gaussian else as_fraction(s)

    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split(None, 1)
        body = rest[0] if rest else ""
        if head == "fields":
            k0, k1 = body.split()
            if (k0, k1) == ("rational", "gaussian"):
                pair = REAL_IN_GAUSSIAN
            elif (k0, k1) == ("gaussian", "gaussian"):
                pair = GAUSSIAN_PAIR
            else:
                raise ValueError(f"unsupported field pair {k0} {k1}")
        elif head == "flags":
            leading_exact = "leading_exact" in body.split()
        elif head == "basis":
            sym, deg = body.split()
            symbols.append(sym)
            degrees[sym] = int(deg)
        elif head == "mul":
            lhs, rhs = body.split("=", 1)
            a, b = lhs.split()
            entry = {}
            for term in rhs.strip().split(" + "):
                coeff, sym = _parse_term(term)
                if sym not in degrees:
                    raise ValueError(f"mul result references unknown symbol {sym!r}")
                entry[sym] = coeff
            mul_table[(a, b)] = entry
        elif head == "embed":
            sym, rhs = body.split("=", 1)
            sym = sym.strip()
            terms = {}
            for term in rhs.strip().split(" + "):
                coeff, mono = _parse_term(term)
                if mono == "t":
                    e = 1
                elif mono.startswith("t^"):
                    e = int(mono[2:])
                elif mono == "1":
                    e = 0
                else:
                    raise ValueError(f"bad embed monomial {mono!r}")
                terms[e] = parse_gaussian(coeff)
            embeds[sym] = LaurentWindow(terms, None)
        else:
            raise ValueError(f"unknown directive {head!r}")

    if pair is None:
        raise ValueError("missing 'fields' line")
    missing = [s for s in symbols if s not in embeds]
    if missing:
        raise ValueError(f"missing embeddings for {missing}")

    index = {s: i for i, s in enumerate(symbols)}
    by_degree: dict[int, list[int]] = {}
    for s in symbols:
        by_degree.setdefault(degrees[s], []).append(index[s])

    def mul(i, j):
        key = (symbols[i], symbols[j])
        entry = mul_table.get(key) or mul_table.get((key[1], key[0]))
        if entry is None:
            raise ValueError(f"no product rule for {key[0]} * {key[1]}")
        zero = pair.base_zero()
        return {index[s]: zero + coeff_of(c, not pair.split) for s, c in entry.items()}

    pres = AffinePresentation(
        name=name,
        pair=pair,
        degree_fn=lambda i: degrees[symbols[i]],
        indices_of_degree_fn=lambda d: sorted(by_degree.get(d, [])),
        embed_fn=lambda i: embeds[symbols[i]],
        mul_fn=mul,
        label_fn=lambda i: symbols[i],
        leading_exact=leading_exact,
        max_degree=max(degrees.values()) if degrees else 0,
    )
    cap = min(verify_degree, pres.max_degree)
    pres.verify_ring_map(cap)
    if leading_exact:
        pres.verify_leading_exact(cap)
    return pres
