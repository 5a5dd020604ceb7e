"""Cohomology of the line bundles O(n) by finite exact linear algebra.

H^0(X, O(n)) is the fiber of the gluing square: elements of the affine
algebra whose Laurent expansion at infinity lies in Fil_n (pole order at
most n). H^1(X, O(n)) is the cokernel: the Laurent field modulo the
affine algebra plus Fil_n. Both are computed over the presentation's
base field k0, truncating the affine algebra at a degree cutoff D.

When the presentation is ``leading_exact`` the truncation is provably
enough (an element of degree <= D cannot hide a pole above D), so the
results carry ``certified=True``. Without the flag the H^1 dimension is
re-computed at D, D+1, D+2 and must stabilize; results are then reported
uncertified.

Bases are unique: kernel and cokernel representatives are put in reduced
echelon form with pivot columns ordered by decreasing t-exponent (ties
broken by basis index), which makes the t-adic filtration degree of each
basis vector its pivot exponent and graded pieces a pivot count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CutoffTooSmall, EmbeddingNotRingMap, IndeterminateTop, NotStabilized
from .linalg import kernel_basis, rank, rref
from .presentation import AffinePresentation
from .scalars import GAUSSIAN_I, GAUSSIAN_ONE, GaussianRational
from .series import MINUS_INFINITY, LaurentWindow


@dataclass
class CohomologyResult:
    """One line bundle's worth of cohomology data.

    ``h0_basis`` holds k0-coefficient vectors over the affine basis,
    ``h1_basis`` holds window representatives of cokernel classes, and
    the graded maps record t-adic filtration pivot counts.
    """

    n: int
    h0_basis: list | None = None
    h0_windows: list | None = None
    h0_graded: dict | None = None
    h1_basis: list | None = None
    h1_graded: dict | None = None
    certified: bool = False
    cutoff_used: int = 0
    window_bottom: int | None = None
    labels: list | None = None

    @property
    def h0_dim(self):
        return None if self.h0_basis is None else len(self.h0_basis)

    @property
    def h1_dim(self):
        return None if self.h1_basis is None else len(self.h1_basis)

    @property
    def dims(self):
        return (self.h0_dim, self.h1_dim)

    @property
    def graded(self) -> dict:
        """m -> (dim gr_m H^0, dim gr_m H^1), only nonzero entries."""
        out: dict = {}
        for m, g in (self.h0_graded or {}).items():
            out[m] = (g, 0)
        for m, g in (self.h1_graded or {}).items():
            g0, _ = out.get(m, (0, 0))
            out[m] = (g0, g)
        return dict(sorted(out.items()))

    def to_json(self) -> dict:
        data = {
            "n": self.n,
            "h0": self.h0_dim,
            "h1": self.h1_dim,
            "gr": {str(m): g0 + g1 for m, (g0, g1) in self.graded.items()},
            "gr_h0": {str(m): g for m, g in sorted((self.h0_graded or {}).items())},
            "gr_h1": {str(m): g for m, g in sorted((self.h1_graded or {}).items())},
            "certified": self.certified,
            "cutoff": self.cutoff_used,
        }
        if self.window_bottom is not None:
            data["window_bottom"] = self.window_bottom
        if self.h0_basis is not None and self.labels is not None:
            data["h0_basis"] = [
                {self.labels[i]: str(c) for i, c in sorted(vec.items())}
                for vec in self.h0_basis
            ]
        if self.h1_basis is not None:
            data["h1_basis"] = [str(w) for w in self.h1_basis]
        return data


def default_cutoff(n: int) -> int:
    return max(n, 0) + 4


def resolved_default_cutoff(pres: AffinePresentation, n: int) -> int:
    """The default degree cutoff, capped for degree-bounded presentations.

    H^1 stabilization recomputes at D+1 and D+2, so a presentation that
    only declares degrees up to max_degree supports D <= max_degree - 2.
    """
    D = default_cutoff(n)
    if pres.max_degree is not None:
        D = min(D, max(pres.max_degree - 2, max(n, 0)))
    return D


def _coords_at(pair, window: LaurentWindow, exponents) -> list:
    row = []
    for e in exponents:
        c = window.coefficient(e)
        row.extend(pair.coords(GaussianRational.of(c)))
    return row


def _column_exponents(top: int, bottom: int, coord_count: int):
    """(exponent, part) columns ordered by decreasing exponent."""
    return [(e, p) for e in range(top, bottom - 1, -1) for p in range(coord_count)]


def _h0_kernel(pair, windows, fil_bound: int, top: int):
    """Kernel vectors of the 'coefficients above fil_bound' map."""
    nbasis = len(windows)
    zero, one = pair.base_zero(), pair.base_one()
    exps = list(range(fil_bound + 1, top + 1))
    rows = []
    for e in exps:
        for p in range(pair.coord_count):
            rows.append([pair.coords(GaussianRational.of(w.coefficient(e)))[p] for w in windows])
    return kernel_basis(rows, nbasis, zero, one)


def _echelonize_h0(pair, vectors, windows, fil_bound: int):
    """Canonical basis: RREF over window columns (t-exponent descending).

    Returns (basis vectors, element windows, pivot exponents).
    """
    if not vectors:
        return [], [], []
    zero = pair.base_zero()
    elem_windows = []
    lows = []
    for vec in vectors:
        w = LaurentWindow.zero()
        for i, c in enumerate(vec):
            w = w + windows[i].scale(pair.to_extension(c))
        elem_windows.append(w)
        if w.coeffs:
            lows.append(min(w.coeffs))
        if w.cutoff is not None:
            lows.append(w.cutoff)
    low = min(lows) if lows else 0
    cols = _column_exponents(fil_bound, low, pair.coord_count)
    aug = []
    for vec, w in zip(vectors, elem_windows):
        aug.append(_coords_at(pair, w, [e for e, p in cols][:: pair.coord_count]) + list(vec))
    reduced, pivots = rref(aug, zero)
    ncols_win = len(cols)
    out_vecs, out_wins, out_pivots = [], [], []
    for row, pc in zip(reduced, pivots):
        vec = {i: c for i, c in enumerate(row[ncols_win:]) if c != 0}
        # rescale so the first affine coordinate (basis order) is 1; the
        # subspace stays in reduced form, the elements read naturally
        lead = vec[min(vec)]
        vec = {i: c / lead for i, c in vec.items()}
        w = LaurentWindow.zero()
        for i, c in vec.items():
            w = w + windows[i].scale(pair.to_extension(c))
        out_vecs.append(vec)
        out_wins.append(w)
        out_pivots.append(cols[pc][0] if pc < ncols_win else None)
    return out_vecs, out_wins, out_pivots


def _graded_from_pivots(pivots) -> dict:
    out: dict = {}
    for m in pivots:
        if m is None:
            continue
        out[m] = out.get(m, 0) + 1
    return dict(sorted(out.items()))


def _require_known(windows, down_to: int):
    for w in windows:
        if w.cutoff is not None and w.cutoff > down_to:
            raise IndeterminateTop(
                f"embedding window only known above O(t^{w.cutoff - 1}), "
                f"need coefficients down to t^{down_to}"
            )


def h0(pres: AffinePresentation, n: int, D: int | None = None) -> CohomologyResult:
    """Global sections of O(n): affine elements with pole order <= n at infinity."""
    if D is None:
        D = resolved_default_cutoff(pres, n)
    if D < max(n, 0):
        raise CutoffTooSmall(f"h0 cutoff D={D} < max(n, 0) = {max(n, 0)}")
    basis = pres.basis_up_to(D)
    windows = [pres.embed_basis(i) for i in basis]
    tops = [w.pole_order() for w in windows]
    top = int(max([t for t in tops if t != MINUS_INFINITY], default=n))
    _require_known(windows, n + 1)
    kernel = _h0_kernel(pres.pair, windows, n, top)
    vecs, wins, pivots = _echelonize_h0(pres.pair, kernel, windows, n)
    result = CohomologyResult(
        n=n,
        h0_basis=[{basis[i]: c for i, c in vec.items()} for vec in vecs],
        h0_windows=wins,
        h0_graded=_graded_from_pivots(pivots),
        certified=pres.leading_exact,
        cutoff_used=D,
        labels={i: pres.label(i) for i in basis},
    )
    return result


def _h1_at(pres: AffinePresentation, n: int, D: int):
    """(dimension, free columns) of the cokernel at affine cutoff D.

    The quotient target is span{t^m : n < m <= D} (so a degree-bounded
    presentation whose image stops growing is caught by stabilization).
    """
    pair = pres.pair
    basis = pres.basis_up_to(D)
    windows = [pres.embed_basis(i) for i in basis]
    top = max(D, n)
    _require_known(windows, n + 1)
    cols = _column_exponents(top, n + 1, pair.coord_count)
    exps = [e for e, p in cols][:: pair.coord_count]
    rows = [_coords_at(pair, w, exps) for w in windows]
    reduced, pivots = rref(rows, pair.base_zero())
    free = [cols[c] for c in range(len(cols)) if c not in set(pivots)]
    return len(free), free


def h1(
    pres: AffinePresentation,
    n: int,
    D: int | None = None,
    window_bottom: int | None = None,
) -> CohomologyResult:
    """First cohomology of O(n): Laurent tail classes modulo the affine algebra.

    Representatives are pure monomial classes t^m (and i*t^m for a split
    coefficient pair) at the free columns of the image echelon, reduced
    modulo the image by construction.
    """
    if D is None:
        D = resolved_default_cutoff(pres, n)
    if window_bottom is None:
        window_bottom = n
    if window_bottom > n:
        raise ValueError(f"window_bottom {window_bottom} must be <= n = {n}")
    if D < max(n, 0):
        raise CutoffTooSmall(f"h1 cutoff D={D} < max(n, 0) = {max(n, 0)}")
    if pres.max_degree is not None and D + 2 > pres.max_degree:
        raise CutoffTooSmall(
            f"presentation declares degrees up to {pres.max_degree}; "
            f"h1 stabilization needs D + 2 <= {pres.max_degree}, got D={D}"
        )
    dims_free = [_h1_at(pres, n, D + k) for k in range(3)]
    dims = [d for d, _ in dims_free]
    stable = dims[0] == dims[1] == dims[2]
    if not stable:
        raise NotStabilized(
            f"h1 dimension still changing at cutoffs {D}..{D + 2}: {dims}"
        )
    free = dims_free[0][1]
    units = [GAUSSIAN_ONE, GAUSSIAN_I]
    reps = [LaurentWindow.monomial(e, units[p]) for e, p in free]
    result = CohomologyResult(
        n=n,
        h1_basis=reps,
        h1_graded=_graded_from_pivots([e for e, p in free]),
        certified=pres.leading_exact,
        cutoff_used=D,
        window_bottom=window_bottom,
    )
    return result


def compute(
    pres: AffinePresentation,
    n: int,
    D: int | None = None,
    window_bottom: int | None = None,
) -> CohomologyResult:
    """Both cohomology groups of O(n) in one result."""
    r0 = h0(pres, n, D)
    r1 = h1(pres, n, D, window_bottom)
    return CohomologyResult(
        n=n,
        h0_basis=r0.h0_basis,
        h0_windows=r0.h0_windows,
        h0_graded=r0.h0_graded,
        h1_basis=r1.h1_basis,
        h1_graded=r1.h1_graded,
        certified=r0.certified and r1.certified,
        cutoff_used=r0.cutoff_used,
        window_bottom=r1.window_bottom,
        labels=r0.labels,
    )


def graded_pieces(res: CohomologyResult) -> dict:
    """The filtration's graded dimensions m -> (gr_m H^0, gr_m H^1).

    Requires a certified result; the per-degree dimensions always sum to
    the total dimensions by construction (pivot counts).
    """
    if not res.certified:
        raise NotStabilized("graded pieces require a certified result")
    graded = res.graded
    if res.h0_basis is not None:
        assert sum(g0 for g0, _ in graded.values()) == res.h0_dim
    if res.h1_basis is not None:
        assert sum(g1 for _, g1 in graded.values()) == res.h1_dim
    return graded


def euler_characteristic(pres: AffinePresentation, n: int, D: int | None = None) -> int:
    """dim H^0 - dim H^1; linear in n for the built-in curves."""
    res = compute(pres, n, D)
    if not res.certified:
        raise NotStabilized("euler characteristic requires certified dimensions")
    return res.h0_dim - res.h1_dim


# ---------------------------------------------------------------------------
# assembling a curve from an affine presentation and a formal-disc model
# ---------------------------------------------------------------------------


class _FormalEmbedding:
    """An affine presentation re-embedded into a filtered formal-disc model."""

    def __init__(self, pres, model, embed_fn):
        self.pres = pres
        self.model = model
        self._embed = embed_fn
        self._cache: dict[int, LaurentWindow] = {}

    def window(self, i: int) -> LaurentWindow:
        if i not in self._cache:
            self._cache[i] = self._embed(i)
        return self._cache[i]

    def verify_ring_map(self, max_degree: int = 4) -> None:
        pres = self.pres
        for i in pres.basis_up_to(max_degree):
            for j in pres.basis_up_to(max_degree):
                if pres.degree_of(i) + pres.degree_of(j) > max_degree:
                    continue
                lhs = self.window(i) * self.window(j)
                rhs = LaurentWindow.zero()
                for k, c in pres.mul_basis(i, j).items():
                    rhs = rhs + self.window(k).scale(pres.pair.to_extension(c))
                if not lhs.agrees_with(rhs):
                    raise EmbeddingNotRingMap(
                        f"formal embedding is not a ring map on "
                        f"{pres.label(i)} * {pres.label(j)}"
                    )


def curve_from_parts(
    pres: AffinePresentation,
    model,
    embedding,
    n: int,
    D: int | None = None,
) -> CohomologyResult:
    """Cohomology of O(n) with Fil_n taken from a formal-disc model.

    ``embedding`` maps basis indices to windows in the model's carrier;
    it is checked to be a ring map on basis products up to degree 4. For
    a model with jump_index 1 this reproduces the direct computation.
    """
    if D is None:
        D = resolved_default_cutoff(pres, n)
    if D < max(n, 0):
        raise CutoffTooSmall(f"cutoff D={D} < max(n, 0) = {max(n, 0)}")
    if pres.max_degree is not None and D + 2 > pres.max_degree:
        raise CutoffTooSmall(
            f"presentation declares degrees up to {pres.max_degree}; "
            f"stabilization needs D + 2 <= {pres.max_degree}, got D={D}"
        )
    fe = _FormalEmbedding(pres, model, embedding)
    fe.verify_ring_map(4)
    pair = pres.pair
    fil_bound = model.fil_pole_bound(n)

    basis = pres.basis_up_to(D)
    windows = [fe.window(i) for i in basis]
    _require_known(windows, fil_bound + 1)
    tops = [w.pole_order() for w in windows]
    top = int(max([t for t in tops if t != MINUS_INFINITY], default=fil_bound))

    # certification: degree-d elements must peak at pole d*jump with
    # independent leading coefficients (the leading_exact property,
    # verified numerically in the carrier)
    certified = True
    for d in range(D + 1):
        idxs = pres.indices_of_degree(d)
        if not idxs:
            continue
        rows = []
        for i in idxs:
            w = fe.window(i)
            if w.pole_order() != d * model.jump_index:
                certified = False
                break
            rows.append(list(pair.coords(GaussianRational.of(w.coeffs[d * model.jump_index]))))
        else:
            if rank(rows, pair.base_zero()) != len(rows):
                certified = False
        if not certified:
            break

    kernel = _h0_kernel(pair, windows, fil_bound, top)
    vecs, wins, pivots = _echelonize_h0(pair, kernel, windows, fil_bound)

    # cokernel at D, D+1, D+2 with the model filtration; the target window
    # is span{t^m : fil_bound < m <= (D+k) * jump} in carrier exponents
    runs = []
    for k in range(3):
        bb = pres.basis_up_to(D + k)
        ww = [fe.window(i) for i in bb]
        _require_known(ww, fil_bound + 1)
        tp = max((D + k) * model.jump_index, fil_bound)
        cols = _column_exponents(tp, fil_bound + 1, pair.coord_count)
        exps = [e for e, p in cols][:: pair.coord_count]
        rows = [_coords_at(pair, w, exps) for w in ww]
        reduced, piv = rref(rows, pair.base_zero())
        free = [cols[c] for c in range(len(cols)) if c not in set(piv)]
        runs.append(free)
    if not (len(runs[0]) == len(runs[1]) == len(runs[2])):
        raise NotStabilized(
            f"assembled h1 dimension not stable at cutoffs {D}..{D + 2}"
        )
    free = runs[0]
    units = [GAUSSIAN_ONE, GAUSSIAN_I]
    reps = [LaurentWindow.monomial(e, units[p]) for e, p in free]

    return CohomologyResult(
        n=n,
        h0_basis=[{basis[i]: c for i, c in vec.items()} for vec in vecs],
        h0_windows=wins,
        h0_graded=_graded_from_pivots(pivots),
        h1_basis=reps,
        h1_graded=_graded_from_pivots([e for e, p in free]),
        certified=certified,
        cutoff_used=D,
        window_bottom=n,
        labels={i: pres.label(i) for i in basis},
    )


def p1_formal_embedding(model):
    """t^k -> t^k in the model carrier (t = inverse of the local parameter)."""

    def embed(i: int) -> LaurentWindow:
        return LaurentWindow.monomial(i, GAUSSIAN_ONE)

    return embed


def twistor_formal_embedding(model):
    """u -> (t - t^-1)/2, v -> -(i/2)(t + t^-1) in the model carrier."""
    from fractions import Fraction

    from .presentation import _twistor_decode
    from .series import gaussian_window

    u = gaussian_window({1: Fraction(1, 2), -1: Fraction(-1, 2)})
    v = gaussian_window(
        {
            1: GaussianRational(Fraction(0), Fraction(-1, 2)),
            -1: GaussianRational(Fraction(0), Fraction(-1, 2)),
        }
    )

    def embed(i: int) -> LaurentWindow:
        p, has_v = _twistor_decode(i)
        w = u.power(p)
        if has_v:
            w = w * v
        return w

    return embed
