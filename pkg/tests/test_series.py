"""Laurent windows: precision rules, pole order, the filtration."""

import random
from fractions import Fraction

import pytest

from curvecoh.errors import IndeterminateTop, ZeroInverse
from curvecoh.scalars import GaussianRational
from curvecoh.series import (
    MINUS_INFINITY,
    FiltrationLevel,
    LaurentWindow,
    fil_member,
    gaussian_window,
    pole_order,
    series_inv,
    series_mul,
)

SEED = 911


def naive_poly_mul(a: dict, b: dict) -> dict:
    """Independent oracle: dict convolution for exact Laurent polynomials."""
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + c1 * c2
    return {e: c for e, c in out.items() if c != 0}


def test_mul_polynomials_exact():
    a = gaussian_window({1: 1, 0: 1})
    b = gaussian_window({1: 1, 0: -1})
    prod = series_mul(a, b)
    assert prod.is_exact
    assert prod == gaussian_window({2: 1, 0: -1})


def test_t_times_t_inverse():
    assert series_mul(gaussian_window({1: 1}), gaussian_window({-1: 1})) == gaussian_window({0: 1})


def test_uv_image_product():
    # u = (t - t^-1)/2, v = -(i/2)(t + t^-1); oracle by hand expansion
    u = {1: Fraction(1, 2), -1: Fraction(-1, 2)}
    v = {1: Fraction(-1, 2), -1: Fraction(-1, 2)}  # imaginary parts
    expect = naive_poly_mul(u, v)  # imaginary part of the product is u*v values
    w = series_mul(
        gaussian_window({e: GaussianRational(c, Fraction(0)) for e, c in u.items()}),
        gaussian_window({e: GaussianRational(Fraction(0), c) for e, c in v.items()}),
    )
    assert w == gaussian_window(
        {e: GaussianRational(Fraction(0), c) for e, c in expect.items()}
    )
    assert w == gaussian_window({2: GaussianRational(Fraction(0), Fraction(-1, 4)),
                                 -2: GaussianRational(Fraction(0), Fraction(1, 4))})


def test_mul_cutoff_rule():
    a = LaurentWindow({2: Fraction(1), 0: Fraction(3)}, cutoff=0)      # + O(t^-1)
    b = LaurentWindow({1: Fraction(1), -1: Fraction(2)}, cutoff=-1)    # + O(t^-2)
    prod = a * b
    # rule: cutoff = max(cutoff_a + top_b, cutoff_b + top_a)
    assert prod.cutoff == max(0 + 1, -1 + 2)
    assert prod.coefficient(3) == 1


def test_inverse_examples():
    t = gaussian_window({1: 1})
    assert series_inv(t, -5) == gaussian_window({-1: 1})
    geom = series_inv(gaussian_window({0: 1, -1: -1}), -3)
    assert geom.cutoff == -3
    for e in (0, -1, -2, -3):
        assert geom.coefficient(e) == 1
    inv = series_inv(gaussian_window({1: 1, 0: -1}), -2)
    assert inv.coefficient(-1) == 1 and inv.coefficient(-2) == 1
    # round trip within the guaranteed window
    assert (inv * gaussian_window({1: 1, 0: -1})).coefficient(0) == 1


def test_inverse_round_trip_random():
    rng = random.Random(SEED)
    one = gaussian_window({0: 1})
    for _ in range(200):
        coeffs = {e: Fraction(rng.randint(-4, 4)) for e in range(rng.randint(-2, 1), rng.randint(2, 4))}
        coeffs[max(coeffs) + 1] = Fraction(rng.randint(1, 4))
        a = gaussian_window(coeffs)
        prec = -rng.randint(2, 6)
        inv = series_inv(a, prec)
        prod = a * inv
        assert prod.agrees_with(one)
        assert pole_order(inv) == -pole_order(a)


def test_inverse_errors():
    with pytest.raises(ZeroInverse):
        series_inv(LaurentWindow.zero(), -2)
    with pytest.raises(IndeterminateTop):
        series_inv(LaurentWindow({}, cutoff=0), -2)


def test_pole_order():
    assert pole_order(gaussian_window({3: 1, 1: 1})) == 3
    assert pole_order(LaurentWindow.zero()) == MINUS_INFINITY
    v_minus = gaussian_window({-1: -1})
    assert pole_order(v_minus) == -1
    with pytest.raises(IndeterminateTop):
        pole_order(LaurentWindow({}, cutoff=-4))


def test_fil_member():
    t2 = gaussian_window({2: 1})
    assert fil_member(t2, 2)
    assert not fil_member(t2, 1)
    u_minus_iv = gaussian_window({-1: -1})  # the image of u - i*v
    assert fil_member(u_minus_iv, 0)
    assert FiltrationLevel(0).contains(u_minus_iv)


def test_ring_laws_random_windows():
    rng = random.Random(SEED + 1)

    def rand_window():
        lo = rng.randint(-4, 0)
        hi = rng.randint(0, 4)
        coeffs = {e: Fraction(rng.randint(-3, 3)) for e in range(lo, hi + 1)}
        cutoff = None if rng.random() < 0.5 else lo
        if cutoff is not None:
            coeffs = {e: c for e, c in coeffs.items() if e >= cutoff}
        return LaurentWindow(coeffs, cutoff)

    for _ in range(200):
        a, b, c = rand_window(), rand_window(), rand_window()
        assert ((a * b) * c).agrees_with(a * (b * c))
        assert (a * (b + c)).agrees_with(a * b + a * c)
        assert (a + b).agrees_with(b + a)


def test_pole_order_is_valuation():
    rng = random.Random(SEED + 2)
    for _ in range(200):
        a = gaussian_window({rng.randint(-3, 3): rng.randint(1, 5)})
        b = gaussian_window({rng.randint(-3, 3): rng.randint(1, 5)})
        assert pole_order(a * b) == pole_order(a) + pole_order(b)
        s = a + b
        if s.coeffs:
            assert pole_order(s) <= max(pole_order(a), pole_order(b))
        if pole_order(a) != pole_order(b):
            assert pole_order(s) == max(pole_order(a), pole_order(b))


def test_fil_multiplicative_random():
    rng = random.Random(SEED + 3)
    for _ in range(200):
        n, m = rng.randint(-3, 3), rng.randint(-3, 3)
        a = gaussian_window({e: 1 for e in range(rng.randint(-5, n), n + 1)})
        b = gaussian_window({e: 1 for e in range(rng.randint(-5, m), m + 1)})
        assert fil_member(a, n) and fil_member(b, m)
        assert fil_member(a * b, n + m)


def test_str_and_json():
    w = LaurentWindow({2: Fraction(3), 0: Fraction(-1, 2)}, cutoff=-1)
    assert str(w) == "3*t^2 + -1/2 + O(t^-2)"
    data = w.to_json()
    assert data["cutoff"] == -1
    back = LaurentWindow.from_json(data)
    assert back == LaurentWindow({2: GaussianRational.of(3), 0: GaussianRational.of(Fraction(-1, 2))}, cutoff=-1)
    assert str(LaurentWindow.zero()) == "0"
