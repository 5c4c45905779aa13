"""Spin modules and matrix helpers."""

import numpy as np
import pytest

from elliptic_sl2.errors import DomainError
from elliptic_sl2.liealg import (
    build_spin,
    commutator,
    coproduct_classical,
    frobenius,
    kron,
    mat_apply_series,
    matrix_from_json,
    matrix_to_json,
)
from elliptic_sl2.series import TruncatedSeries


def test_spin_half_matrices_exact():
    r = build_spin(0.5)
    assert r.dim == 2
    assert np.array_equal(r.Jp, np.array([[0, 1], [0, 0]], dtype=complex))
    assert np.array_equal(r.Jm, np.array([[0, 0], [1, 0]], dtype=complex))
    assert np.array_equal(r.J0, np.diag([0.5, -0.5]).astype(complex))


@pytest.mark.parametrize("j", [0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5])
def test_commutation_relations(j):
    r = build_spin(j)
    assert frobenius(commutator(r.Jp, r.Jm) - 2 * r.J0) < 1e-13
    assert frobenius(commutator(r.J0, r.Jp) - r.Jp) < 1e-13
    assert frobenius(commutator(r.J0, r.Jm) + r.Jm) < 1e-13


@pytest.mark.parametrize("j", [0.5, 1.0, 2.5])
def test_classical_casimir(j):
    r = build_spin(j)
    c = r.Jm @ r.Jp + r.J0 @ r.J0 + r.J0
    assert frobenius(c - j * (j + 1) * np.eye(r.dim)) < 1e-13


def test_raising_is_strictly_upper_triangular_and_nilpotent():
    r = build_spin(2.0)
    assert np.all(np.tril(r.Jp) == 0.0)
    power = np.linalg.matrix_power(r.Jp, r.dim)
    assert np.array_equal(power, np.zeros_like(power))
    assert np.any(np.linalg.matrix_power(r.Jp, r.dim - 1) != 0.0)


def test_build_spin_rejects_bad_labels():
    with pytest.raises(DomainError):
        build_spin(0.3)
    with pytest.raises(DomainError):
        build_spin(-1.0)


def test_mat_apply_series_is_polynomial_evaluation():
    r = build_spin(1.0)
    s = TruncatedSeries(np.array([2.0, 0.0, 1.0], dtype=complex))  # 2 + u^2
    got = mat_apply_series(s, r.Jp)
    expect = 2 * np.eye(3) + r.Jp @ r.Jp
    assert np.max(np.abs(got - expect)) == 0.0


def test_classical_coproduct_satisfies_relations():
    r1, r2 = build_spin(0.5), build_spin(1.0)
    djp, djm, dj0 = coproduct_classical(r1, r2)
    assert frobenius(commutator(djp, djm) - 2 * dj0) < 1e-13
    assert frobenius(commutator(dj0, djp) - djp) < 1e-13
    d = r1.dim * r2.dim
    assert djp.shape == (d, d)
    assert np.max(np.abs(kron(np.eye(r1.dim), r2.Jp)
                         + kron(r1.Jp, np.eye(r2.dim)) - djp)) == 0.0


def test_matrix_json_roundtrip():
    rng = np.random.default_rng(1)
    m = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    back = matrix_from_json(matrix_to_json(m))
    assert np.array_equal(back, m)


def test_matrix_from_json_validates_entry_count():
    with pytest.raises(DomainError):
        matrix_from_json({"dim": 2, "entries": [[0.0, 0.0]] * 3})
