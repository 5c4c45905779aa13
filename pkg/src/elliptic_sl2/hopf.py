"""Two coproducts induced on the deformed generators, as concrete matrices.

The first transports the primitive (cocommutative) coproduct of the
undeformed generators through the nonlinear map: build J_i x 1 + 1 x J_i on
the product module and deform that.  The second transports the twisted
coproduct of the hyperbolic algebra,

    DX  = X x 1 + 1 x X,
    DY  = Y x e^{hX} + e^{-hX} x Y,
    DJ0 = J0 x e^{hX} + e^{-hX} x J0,

through the tanh -> arcsn change of coordinates.  All exponentials are
finite polynomials because X is nilpotent on every spin module.

Everything is a matrix on the tensor-product module; series orders are set
to 2(j1+j2)+1 so each application is exact, never truncated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .deform import (
    DeformParams,
    build_jordanian_triplet,
    deform_generators,
    lift_generators,
    relations_on_generators,
    _asn,
    _odd_rescaled,
    _sncndn,
)
from .errors import DomainError
from .liealg import SpinRep, coproduct_classical, frobenius, kron, mat_apply_series
from .series import TruncatedSeries, arctanh_series, exp_series, tanh_series

__all__ = [
    "CoproductTriple",
    "delta1",
    "delta_uh",
    "delta2",
    "verify_coproduct",
    "cocommutativity_gap",
    "coassociativity_uh",
    "coassociativity_delta1",
]


@dataclass(frozen=True)
class CoproductTriple:
    """Coproduct images of the generator triple on a two-factor module."""

    DX: np.ndarray
    DY: np.ndarray
    DJ0: np.ndarray
    params: DeformParams
    r1: SpinRep
    r2: SpinRep
    source: str  # "delta1" | "delta_uh" | "delta2"

    @property
    def order(self):
        return self.r1.dim + self.r2.dim - 1


def _pair_order(r1, r2):
    return r1.dim + r2.dim - 1


def _exp_nilpotent(mat, order):
    return mat_apply_series(exp_series(order), mat)


def delta1(params, r1, r2):
    """Deform the primitive coproduct of the undeformed generators."""
    djp, djm, dj0 = coproduct_classical(r1, r2)
    order = _pair_order(r1, r2)
    dx, dy = deform_generators(djp, djm, params, order)
    return CoproductTriple(DX=dx, DY=dy, DJ0=dj0, params=params,
                           r1=r1, r2=r2, source="delta1")


def delta_uh(h, r1, r2):
    """Twisted coproduct of the hyperbolic (k**2 = 1) algebra."""
    t1 = build_jordanian_triplet(r1, h)
    t2 = build_jordanian_triplet(r2, h)
    e1 = np.eye(r1.dim, dtype=complex)
    e2 = np.eye(r2.dim, dtype=complex)
    ep2 = _exp_nilpotent(complex(h) * t2.Xhat, r2.dim)
    em1 = _exp_nilpotent(-complex(h) * t1.Xhat, r1.dim)
    dx = kron(t1.Xhat, e2) + kron(e1, t2.Xhat)
    dy = kron(t1.Yhat, ep2) + kron(em1, t2.Yhat)
    dj0 = kron(r1.J0, ep2) + kron(em1, r2.J0)
    return CoproductTriple(DX=dx, DY=dy, DJ0=dj0, params=DeformParams(h=h, k=1.0),
                           r1=r1, r2=r2, source="delta_uh")


def delta2(params, r1, r2):
    """Lift the twisted hyperbolic coproduct to modulus k."""
    base = delta_uh(params.h, r1, r2)
    order = _pair_order(r1, r2)
    dx, dy = lift_generators(base.DX, base.DY, params, order)
    return CoproductTriple(DX=dx, DY=dy, DJ0=base.DJ0, params=params,
                           r1=r1, r2=r2, source="delta2")


# -- re-expressed raising images ----------------------------------------------


def delta1_x_from_factor_sn(params, r1, r2):
    """The delta1 raising image computed the long way round: apply sn on each
    factor, add primitively, and send the sum back through arcsn."""
    order = _pair_order(r1, r2)
    k, h = params.k, params.h
    e1 = np.eye(r1.dim, dtype=complex)
    e2 = np.eye(r2.dim, dtype=complex)
    per_factor = []
    for rep in (r1, r2):
        t_x, _ = deform_generators(rep.Jp, rep.Jm, params, rep.dim)
        sn, _, _ = _sncndn(k, rep.dim)
        per_factor.append(_odd_rescaled(sn, t_x, h))
    summed = kron(per_factor[0], e2) + kron(e1, per_factor[1])
    return _odd_rescaled(_asn(k, order), summed, h)


def delta2_x_from_factor_sn(params, r1, r2):
    """The delta2 raising image via per-factor arctanh(sn(.)) pullbacks."""
    order = _pair_order(r1, r2)
    k, h = params.k, params.h
    e1 = np.eye(r1.dim, dtype=complex)
    e2 = np.eye(r2.dim, dtype=complex)
    per_factor = []
    for rep in (r1, r2):
        t_x, _ = deform_generators(rep.Jp, rep.Jm, params, rep.dim)
        sn, _, _ = _sncndn(k, rep.dim)
        pulled = arctanh_series(rep.dim).compose(sn)
        per_factor.append(_odd_rescaled(pulled, t_x, h))
    summed = kron(per_factor[0], e2) + kron(e1, per_factor[1])
    through = _asn(k, order).compose(tanh_series(order))
    return _odd_rescaled(through, summed, h)


# -- verification ---------------------------------------------------------------


def _swap_matrix(d1, d2):
    p = np.zeros((d1 * d2, d1 * d2), dtype=complex)
    for i1 in range(d1):
        for i2 in range(d2):
            p[i2 * d1 + i1, i1 * d2 + i2] = 1.0
    return p


def _rebuild(ct, r1, r2):
    if ct.source == "delta1":
        return delta1(ct.params, r1, r2)
    if ct.source == "delta_uh":
        return delta_uh(ct.params.h, r1, r2)
    if ct.source == "delta2":
        return delta2(ct.params, r1, r2)
    raise DomainError(f"unknown coproduct source {ct.source!r}")


def cocommutativity_gap(ct):
    """Norm of Delta - tau(Delta) per generator, tau the factor swap."""
    p = _swap_matrix(ct.r1.dim, ct.r2.dim)
    swapped = _rebuild(ct, ct.r2, ct.r1)
    gaps = {}
    for name, a, b in (("X", ct.DX, swapped.DX), ("Y", ct.DY, swapped.DY),
                       ("J0", ct.DJ0, swapped.DJ0)):
        gaps[name] = frobenius(p @ a @ p.T - b)
    gaps["max"] = max(gaps.values())
    return gaps


def verify_coproduct(ct):
    """Residuals of the defining relations for the coproduct images, the
    re-expressed raising-image consistency check, and the cocommutativity
    gap (informational; only delta1 is expected to be cocommutative)."""
    out = relations_on_generators(ct.DX, ct.DY, ct.DJ0, ct.params, ct.order)
    if ct.source == "delta1":
        alt = delta1_x_from_factor_sn(ct.params, ct.r1, ct.r2)
        out["eq48_vs_eq39"] = frobenius(alt - ct.DX) / max(1.0, frobenius(ct.DX))
    elif ct.source == "delta2":
        alt = delta2_x_from_factor_sn(ct.params, ct.r1, ct.r2)
        out["eq49_vs_eq45"] = frobenius(alt - ct.DX) / max(1.0, frobenius(ct.DX))
    out["cocommutativity_gap"] = cocommutativity_gap(ct)["max"]
    return out


def coassociativity_uh(h, r1, r2, r3):
    """Gap between (Delta x id) Delta and (id x Delta) Delta for the twisted
    coproduct, per generator, on a three-factor module."""
    h = complex(h)
    t = [build_jordanian_triplet(r, h) for r in (r1, r2, r3)]
    eye = [np.eye(r.dim, dtype=complex) for r in (r1, r2, r3)]
    d12 = delta_uh(h, r1, r2)
    d23 = delta_uh(h, r2, r3)
    order12 = _pair_order(r1, r2)
    order23 = _pair_order(r2, r3)

    # left association: expand the first slot of Delta
    ep3 = _exp_nilpotent(h * t[2].Xhat, r3.dim)
    em12 = _exp_nilpotent(-h * d12.DX, order12)
    left = {
        "X": kron(d12.DX, eye[2]) + kron(kron(eye[0], eye[1]), t[2].Xhat),
        "Y": kron(d12.DY, ep3) + kron(em12, t[2].Yhat),
        "J0": kron(d12.DJ0, ep3) + kron(em12, r3.J0),
    }
    # right association: expand the second slot
    ep23 = _exp_nilpotent(h * d23.DX, order23)
    em1 = _exp_nilpotent(-h * t[0].Xhat, r1.dim)
    right = {
        "X": kron(t[0].Xhat, kron(eye[1], eye[2])) + kron(eye[0], d23.DX),
        "Y": kron(t[0].Yhat, ep23) + kron(em1, d23.DY),
        "J0": kron(r1.J0, ep23) + kron(em1, d23.DJ0),
    }
    gaps = {name: frobenius(left[name] - right[name]) /
            max(1.0, frobenius(left[name])) for name in ("X", "Y", "J0")}
    gaps["max"] = max(gaps.values())
    return gaps


def coassociativity_delta1(params, r1, r2, r3):
    """Same gap for the deformed primitive coproduct: both association orders
    are functions of the threefold primitive sums, computed independently."""
    order = r1.dim + r2.dim + r3.dim - 2
    eye = [np.eye(r.dim, dtype=complex) for r in (r1, r2, r3)]
    djp12, djm12, _ = coproduct_classical(r1, r2)
    djp23, djm23, _ = coproduct_classical(r2, r3)
    left_jp = kron(djp12, eye[2]) + kron(kron(eye[0], eye[1]), r3.Jp)
    left_jm = kron(djm12, eye[2]) + kron(kron(eye[0], eye[1]), r3.Jm)
    right_jp = kron(r1.Jp, kron(eye[1], eye[2])) + kron(eye[0], djp23)
    right_jm = kron(r1.Jm, kron(eye[1], eye[2])) + kron(eye[0], djm23)
    lx, ly = deform_generators(left_jp, left_jm, params, order)
    rx, ry = deform_generators(right_jp, right_jm, params, order)
    gaps = {
        "X": frobenius(lx - rx) / max(1.0, frobenius(lx)),
        "Y": frobenius(ly - ry) / max(1.0, frobenius(ly)),
    }
    gaps["max"] = max(gaps.values())
    return gaps
