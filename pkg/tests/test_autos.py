"""Discrete symmetries: sign involution, half and full period shifts,
scalar half-period identities, the exact induced maps."""

import math

import numpy as np
import pytest

from elliptic_sl2.autos import (
    ELL_2K_IKP,
    ELL_IKP,
    UH_HALF,
    half_period_shift_uh,
    highest_weight_shift_error,
    inversion_symbolic_report,
    period_shift_elliptic,
    scalar_shift_identities,
    sign_involution,
)
from elliptic_sl2.deform import (
    DeformParams,
    build_elliptic_triplet,
    build_jordanian_triplet,
    invert_map,
    relation_residuals,
)
from elliptic_sl2.errors import DomainError
from elliptic_sl2.liealg import build_spin, frobenius


def worst_residual(report):
    return max(v for k, v in report.items()
               if isinstance(v, float) and k not in ("epsilon",))


def test_sign_involution_preserves_relations_and_squares_to_id():
    t = build_elliptic_triplet(build_spin(1.5), DeformParams(h=0.7, k=0.6))
    s = sign_involution(t)
    assert worst_residual(relation_residuals(s)) < 1e-12
    ss = sign_involution(s)
    assert np.array_equal(ss.Xhat, t.Xhat)
    assert np.array_equal(ss.Yhat, t.Yhat)
    assert np.array_equal(ss.J0, t.J0)


def test_half_period_shift_hyperbolic():
    h = 0.9
    t = build_jordanian_triplet(build_spin(1.5), h)
    s = half_period_shift_uh(t)
    assert s.shift_q == 1
    assert worst_residual(relation_residuals(s)) < 1e-12
    # the highest-weight vector sees exactly the offset eigenvalue
    assert highest_weight_shift_error(s) == 0.0
    assert s.Xhat[0, 0] == 1j * math.pi / h


def test_two_half_shifts_make_a_full_period():
    h = 0.7
    r = build_spin(2.0)
    t = build_jordanian_triplet(r, h)
    s2 = half_period_shift_uh(half_period_shift_uh(t))
    assert s2.shift_q == 2
    jp, jm = invert_map(s2)
    assert frobenius(jp - r.Jp) < 1e-12
    assert frobenius(jm - r.Jm) < 1e-12


def test_half_shift_guards():
    t_ell = build_elliptic_triplet(build_spin(1.0), DeformParams(h=0.7, k=0.5))
    with pytest.raises(DomainError):
        half_period_shift_uh(t_ell)
    t_uh = build_jordanian_triplet(build_spin(1.0), 0.7)
    s = half_period_shift_uh(t_uh)
    with pytest.raises(DomainError):
        invert_map(s)  # odd number of half shifts has no inverse image
    with pytest.raises(DomainError):
        sign_involution(s)


@pytest.mark.parametrize("spec", [ELL_IKP, ELL_2K_IKP])
def test_elliptic_period_shifts(spec):
    t = build_elliptic_triplet(build_spin(1.5), DeformParams(h=0.7, k=0.6))
    image, report = period_shift_elliptic(t, spec)
    assert report["kind"] == spec.kind
    assert report["epsilon"] == spec.epsilon
    assert worst_residual(report) < 1e-10
    assert image.shift_b == 1
    assert image.shift_a == spec.du_a


def test_elliptic_shift_twice_restores_parity():
    t = build_elliptic_triplet(build_spin(1.0), DeformParams(h=0.7, k=0.6))
    once, _ = period_shift_elliptic(t, ELL_IKP)
    twice, report = period_shift_elliptic(once, ELL_IKP)
    assert twice.shift_b == 2
    assert np.array_equal(twice.Yhat, t.Yhat)
    assert worst_residual(report) < 1e-10


def test_elliptic_shift_guards():
    t_uh = build_jordanian_triplet(build_spin(1.0), 0.7)
    with pytest.raises(DomainError):
        period_shift_elliptic(t_uh, ELL_IKP)  # k**2 = 1 has no real period pair
    t = build_elliptic_triplet(build_spin(1.0), DeformParams(h=0.7, k=0.6))
    s = half_period_shift_uh(build_jordanian_triplet(build_spin(1.0), 0.7))
    with pytest.raises(DomainError):
        period_shift_elliptic(s, ELL_IKP)
    with pytest.raises(DomainError):
        period_shift_elliptic(t, UH_HALF)


@pytest.mark.parametrize("k", [0.3, 0.6, 0.9])
def test_scalar_half_period_identities(k):
    report = scalar_shift_identities(k, n_samples=40)
    assert max(report["max_gaps"].values()) < 1e-9
    assert report["epsilon_branches"] == {"ell-iKp": +1, "ell-2KiKp": -1}


def test_scalar_identities_are_seed_deterministic():
    a = scalar_shift_identities(0.5, n_samples=10, seed=123)
    b = scalar_shift_identities(0.5, n_samples=10, seed=123)
    assert a == b


@pytest.mark.parametrize("eps", [+1, -1])
def test_induced_inversion_map_is_exact(eps):
    report = inversion_symbolic_report(0.7, 0.6, eps)
    assert report["all_zero"] is True
    assert len(report["samples"]) >= 3
    for row in report["samples"]:
        assert row["automorphism"] is True
        assert row["involution"] is True
