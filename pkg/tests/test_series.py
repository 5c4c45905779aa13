"""Truncated power series: arithmetic, composition, reversion, rational powers."""

import math

import numpy as np
import pytest

from elliptic_sl2.errors import DomainError
from elliptic_sl2.series import (
    TruncatedSeries,
    arctanh_series,
    cosh_series,
    exp_series,
    sinh_series,
    tanh_series,
)


def series(*coeffs):
    return TruncatedSeries(np.array(coeffs, dtype=complex))


def test_identity_and_constant():
    u = TruncatedSeries.identity(4)
    assert u.order == 4
    assert u.coeffs[1] == 1.0 and u.coeffs[0] == 0.0
    c = TruncatedSeries.constant(2.5, 3)
    assert c.coeffs[0] == 2.5
    assert np.all(c.coeffs[1:] == 0.0)


def test_mul_truncates_to_min_order():
    a = series(1, 1, 1)          # order 2
    b = series(1, -1, 0, 0, 0)   # order 4
    prod = a * b
    assert prod.order == 2
    # (1 + u + u^2)(1 - u) = 1 + 0 u + 0 u^2 - u^3 -> truncated
    assert np.allclose(prod.coeffs, [1, 0, 0])


def test_scalar_ops():
    a = series(0, 1, 2)
    assert np.allclose((2.0 * a).coeffs, [0, 2, 4])
    assert np.allclose((a - 1.0).coeffs, [-1, 1, 2])
    assert np.allclose((1.0 - a).coeffs, [1, -1, -2])


def test_compose_requires_zero_constant_inner():
    outer = series(1, 1, 1)
    with pytest.raises(DomainError):
        outer.compose(series(1, 1, 0))


def test_compose_matches_polynomial_identity():
    # (1 + v)^2 at v = u + u^2: 1 + 2u + 3u^2 + 2u^3 + u^4
    outer = series(1, 2, 1, 0, 0)
    inner = series(0, 1, 1, 0, 0)
    got = outer.compose(inner)
    assert np.allclose(got.coeffs, [1, 2, 3, 2, 1])


def test_revert_arcsin_gives_sin():
    n = 11
    u = TruncatedSeries.identity(n)
    integrand = (1.0 - u * u).pow_rational(-0.5)
    arcsin = np.zeros(n + 1, dtype=complex)
    arcsin[1:] = integrand.coeffs[:-1] / np.arange(1, n + 1)
    sin = TruncatedSeries(arcsin).revert()
    for i in range(n + 1):
        expect = 0.0
        if i % 2 == 1:
            expect = (-1) ** (i // 2) / math.factorial(i)
        assert abs(sin.coeffs[i] - expect) < 1e-15


def test_revert_roundtrip_random_series():
    rng = np.random.default_rng(42)
    for _ in range(25):
        n = int(rng.integers(3, 12))
        coeffs = rng.standard_normal(n + 1) + 1j * rng.standard_normal(n + 1)
        coeffs[0] = 0.0
        coeffs[1] = 1.0 + abs(coeffs[1])  # keep the linear term well away from 0
        s = TruncatedSeries(coeffs)
        t = s.revert()
        back = s.compose(t)
        ident = TruncatedSeries.identity(n)
        assert np.max(np.abs(back.coeffs - ident.coeffs)) < 1e-12
        assert np.max(np.abs(t.revert().coeffs - s.coeffs)) < 1e-10


def test_revert_rejects_bad_series():
    with pytest.raises(DomainError):
        series(1, 1).revert()
    with pytest.raises(DomainError):
        series(0, 0, 1).revert()


def test_pow_rational_square_root_squares_back():
    rng = np.random.default_rng(7)
    coeffs = rng.standard_normal(9)
    coeffs[0] = 1.0
    s = TruncatedSeries(coeffs.astype(complex))
    r = s.pow_rational(0.5)
    assert np.max(np.abs((r * r).coeffs - s.coeffs)) < 1e-12


def test_pow_rational_inverse():
    s = series(1, 3, -2, 1, 5)
    inv = s.pow_rational(-1)
    prod = s * inv
    assert abs(prod.coeffs[0] - 1.0) < 1e-15
    assert np.max(np.abs(prod.coeffs[1:])) < 1e-13


def test_pow_rational_requires_unit_constant():
    with pytest.raises(DomainError):
        series(2, 1).pow_rational(0.5)


def test_deriv_and_eval():
    s = series(1, 0, 3, -4)  # 1 + 3u^2 - 4u^3
    d = s.deriv()
    assert np.allclose(d.coeffs, [0, 6, -12])
    z = 0.3 + 0.1j
    assert abs(s.eval(z) - (1 + 3 * z ** 2 - 4 * z ** 3)) < 1e-15


def test_parity_is_exact_under_products():
    # odd * odd -> even with odd slots exactly zero, no tolerance
    rng = np.random.default_rng(3)
    coeffs = np.zeros(13, dtype=complex)
    coeffs[1::2] = rng.standard_normal(6)
    odd = TruncatedSeries(coeffs)
    even = odd * odd
    assert np.all(even.coeffs[1::2] == 0.0)


def test_elementary_builders():
    n = 12
    e = exp_series(n)
    for i in range(n + 1):
        assert abs(e.coeffs[i] - 1.0 / math.factorial(i)) < 1e-16
    s, c = sinh_series(n), cosh_series(n)
    assert np.all(s.coeffs[0::2] == 0.0)
    assert np.all(c.coeffs[1::2] == 0.0)
    # cosh^2 - sinh^2 = 1 exactly through the truncation
    diff = c * c - s * s
    assert abs(diff.coeffs[0] - 1.0) < 1e-15
    assert np.max(np.abs(diff.coeffs[1:])) < 1e-15


def test_tanh_and_arctanh_are_mutually_inverse():
    n = 11
    t = tanh_series(n)
    expect = [0, 1, 0, -1 / 3, 0, 2 / 15, 0, -17 / 315]
    assert np.max(np.abs(t.coeffs[: len(expect)] - expect)) < 1e-14
    comp = arctanh_series(n).compose(t)
    ident = TruncatedSeries.identity(n)
    assert np.max(np.abs(comp.coeffs - ident.coeffs)) < 1e-13


def test_json_roundtrip():
    s = series(0, 1 + 2j, -0.5)
    back = TruncatedSeries.from_json(s.to_json())
    assert np.array_equal(back.coeffs, s.coeffs)
