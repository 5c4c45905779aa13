"""Finite-dimensional sl(2) machinery: spin matrices and nilpotent calculus.

Basis order is m = j, j-1, ..., -j, so the raising operator is strictly
upper triangular and every power series applied to it is a finite sum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "SpinRep",
    "build_spin",
    "commutator",
    "mat_apply_series",
    "kron",
    "coproduct_classical",
    "matrix_to_json",
    "matrix_from_json",
    "frobenius",
]


@dataclass(frozen=True)
class SpinRep:
    """Spin-j generator triple on the (2j+1)-dimensional module."""

    j: float
    dim: int
    Jp: np.ndarray
    Jm: np.ndarray
    J0: np.ndarray


def build_spin(j):
    """Spin-j matrices with [J0, J+-] = +-J+-, [J+, J-] = 2 J0."""
    two_j = round(2 * float(j))
    if two_j < 0 or abs(2 * float(j) - two_j) > 0:
        raise DomainError(f"spin must be a non-negative half-integer, got {j}")
    j = two_j / 2.0
    dim = two_j + 1
    m = j - np.arange(dim)  # descending magnetic quantum numbers
    Jp = np.zeros((dim, dim), dtype=complex)
    for col in range(1, dim):
        # raising coefficient sqrt((j-m)(j+m+1)) acting on column m = j-col
        Jp[col - 1, col] = np.sqrt((j - m[col]) * (j + m[col] + 1.0))
    Jm = Jp.T.copy()
    J0 = np.diag(m.astype(complex))
    return SpinRep(j=j, dim=dim, Jp=Jp, Jm=Jm, J0=J0)


def commutator(a, b):
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError("commutator needs two square matrices of equal dimension")
    return a @ b - b @ a


def mat_apply_series(s, mat):
    """Horner evaluation sum c_i M**i; exact when M is nilpotent and the
    series order reaches the nilpotency index minus one."""
    mat = np.asarray(mat, dtype=complex)
    dim = mat.shape[0]
    acc = complex(s.coeffs[s.order]) * np.eye(dim, dtype=complex)
    for i in range(s.order - 1, -1, -1):
        acc = acc @ mat + complex(s.coeffs[i]) * np.eye(dim, dtype=complex)
    return acc


def kron(a, b):
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def coproduct_classical(r1, r2):
    """Primitive tensor generators J_i x 1 + 1 x J_i on the product module."""
    e1 = np.eye(r1.dim, dtype=complex)
    e2 = np.eye(r2.dim, dtype=complex)
    djp = kron(r1.Jp, e2) + kron(e1, r2.Jp)
    djm = kron(r1.Jm, e2) + kron(e1, r2.Jm)
    dj0 = kron(r1.J0, e2) + kron(e1, r2.J0)
    return djp, djm, dj0


def frobenius(a):
    return float(np.linalg.norm(np.asarray(a), "fro"))


def matrix_to_json(mat):
    mat = np.asarray(mat, dtype=complex)
    return {
        "dim": mat.shape[0],
        "entries": [[float(z.real), float(z.imag)] for z in mat.reshape(-1)],
    }


def matrix_from_json(obj):
    dim = obj["dim"]
    entries = [complex(re, im) for re, im in obj["entries"]]
    if len(entries) != dim * dim:
        raise DomainError("matrix JSON entry count disagrees with dim")
    return np.array(entries, dtype=complex).reshape(dim, dim)
