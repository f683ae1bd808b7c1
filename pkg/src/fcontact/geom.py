"""Coordinate-chart manifold models and Levi-Civita / curvature machinery.

A :class:`ManifoldModel` bundles the metric, the rank-``2n`` structure tensor
``f``, the ``s`` structure vector fields ``xi_alpha`` and dual one-forms
``eta_alpha`` as *field evaluators*: callables mapping a coordinate array to
componentwise values.  Evaluators must accept coordinates that are
:class:`~fcontact.jets.Jet` scalars, which is how every derivative in this
package is obtained.

Sign conventions (pinned operationally by the test suite):

* curvature operator ``R(X, Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z -
  nabla_[X,Y] Z``; in coordinates ``R(e_i, e_j)e_k = R^l_kij e_l`` with
  ``R^l_kij = d_i Gamma^l_jk - d_j Gamma^l_ik + Gamma^l_im Gamma^m_jk -
  Gamma^l_jm Gamma^m_ik``,
* ``Ric(X, Y) = trace(Z -> R(Z, X)Y)`` and ``g(QX, Y) = Ric(X, Y)``.

Under these choices the built-in S-structure fits ``kappa = +1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Callable

import numpy as np

from . import jets
from .errors import DegenerateMetricError

Point = np.ndarray
FieldEvaluator = Callable[[np.ndarray], np.ndarray]


class Convention(str, enum.Enum):
    """Exterior-derivative factor a model satisfies ``F = d eta`` under.

    ``PLAIN``: ``(d eta)_ij = d_i eta_j - d_j eta_i``.  ``HALF``: half of that.
    """

    HALF = "half"
    PLAIN = "plain"


@dataclass(frozen=True)
class ManifoldModel:
    """Chart description of a (2n+s)-dimensional metric f-manifold.

    Immutable and safely shareable: every operation in this package is a pure
    function of ``(model, point)``, so evaluation may be parallelized over
    points; reductions in the library itself are ordered and deterministic
    for a fixed seed.
    """

    n: int
    s: int
    metric_field: FieldEvaluator
    f_field: FieldEvaluator
    xi_fields: tuple[FieldEvaluator, ...]
    eta_fields: tuple[FieldEvaluator, ...]
    domain_box: np.ndarray = field(repr=False)  # (dim, 2) sampling intervals
    d_convention: Convention = Convention.HALF
    label: str = ""

    @property
    def dim(self) -> int:
        return 2 * self.n + self.s

    def with_label(self, label: str) -> "ManifoldModel":
        return replace(self, label=label)


# ---------------------------------------------------------------------------
# Per-point evaluation frame
# ---------------------------------------------------------------------------


class PointFrame:
    """All field values and derivatives of a model at one point, lazily.

    Evaluates every field once on jet-seeded coordinates and exposes float
    arrays.  Derivative indices always come last: ``dg[i, j, k] = d_k g_ij``,
    ``d2g[i, j, k, l] = d_k d_l g_ij``, ``df[i, j, k] = d_k f^i_j``.
    """

    def __init__(self, model: ManifoldModel, point: Point):
        self.model = model
        self.point = np.asarray(point, dtype=float)
        self._x = jets.variables(self.point)

    # -- raw field data ----------------------------------------------------

    @cached_property
    def _g_raw(self):
        return self.model.metric_field(self._x)

    @cached_property
    def g(self):
        return jets.tensor_value(self._g_raw)

    @cached_property
    def dg(self):
        return jets.tensor_jacobian(self._g_raw, self.model.dim)

    @cached_property
    def d2g(self):
        return jets.tensor_hessian(self._g_raw, self.model.dim)

    @cached_property
    def ginv(self):
        try:
            return np.linalg.inv(self.g)
        except np.linalg.LinAlgError as exc:
            raise DegenerateMetricError(self.point) from exc

    @cached_property
    def _f_raw(self):
        return self.model.f_field(self._x)

    @cached_property
    def f(self):
        return jets.tensor_value(self._f_raw)

    @cached_property
    def df(self):
        return jets.tensor_jacobian(self._f_raw, self.model.dim)

    @cached_property
    def _xi_raw(self):
        return [xi(self._x) for xi in self.model.xi_fields]

    @cached_property
    def xi(self):
        return np.stack([jets.tensor_value(v) for v in self._xi_raw])

    @cached_property
    def dxi(self):
        return np.stack([jets.tensor_jacobian(v, self.model.dim) for v in self._xi_raw])

    @cached_property
    def _eta_raw(self):
        return [eta(self._x) for eta in self.model.eta_fields]

    @cached_property
    def eta(self):
        return np.stack([jets.tensor_value(v) for v in self._eta_raw])

    @cached_property
    def deta(self):
        return np.stack([jets.tensor_jacobian(v, self.model.dim) for v in self._eta_raw])

    # -- connection and curvature ------------------------------------------

    @cached_property
    def gamma(self):
        """Christoffel symbols ``gamma[k, i, j] = Gamma^k_ij``."""
        dg = self.dg
        # Gamma^k_ij = 1/2 g^kl (d_i g_jl + d_j g_il - d_l g_ij)
        bracket = (
            np.einsum("jli->lij", dg)
            + np.einsum("ilj->lij", dg)
            - np.einsum("ijl->lij", dg)
        )
        return 0.5 * np.einsum("kl,lij->kij", self.ginv, bracket)

    @cached_property
    def dgamma(self):
        """``dgamma[k, i, j, m] = d_m Gamma^k_ij``."""
        dg, d2g, ginv = self.dg, self.d2g, self.ginv
        # d_m g^kl = -g^ka (d_m g_ab) g^bl
        dginv = -np.einsum("ka,abm,bl->klm", ginv, dg, ginv)
        bracket = (
            np.einsum("jli->lij", dg)
            + np.einsum("ilj->lij", dg)
            - np.einsum("ijl->lij", dg)
        )
        dbracket = (
            np.einsum("jlim->lijm", d2g)
            + np.einsum("iljm->lijm", d2g)
            - np.einsum("ijlm->lijm", d2g)
        )
        return 0.5 * (
            np.einsum("klm,lij->kijm", dginv, bracket)
            + np.einsum("kl,lijm->kijm", ginv, dbracket)
        )

    @cached_property
    def riemann31(self):
        """``riemann31[l, k, i, j]`` = component ``l`` of ``R(e_i, e_j)e_k``."""
        gamma, dgamma = self.gamma, self.dgamma
        return (
            np.einsum("ljki->lkij", dgamma)
            - np.einsum("likj->lkij", dgamma)
            + np.einsum("lim,mjk->lkij", gamma, gamma)
            - np.einsum("ljm,mik->lkij", gamma, gamma)
        )

    @cached_property
    def riemann40(self):
        """``riemann40[i, j, k, l] = g(R(e_i, e_j)e_k, e_l)``."""
        return np.einsum("ml,mkij->ijkl", self.g, self.riemann31)

    @cached_property
    def ricci(self):
        """``ricci[a, b] = trace(Z -> R(Z, e_a)e_b)``."""
        return np.einsum("mbma->ab", self.riemann31)

    @cached_property
    def ricci_op(self):
        return self.ginv @ self.ricci

    @cached_property
    def nabla_f(self):
        """Covariant derivative ``nabla_f[k, b, a]`` = comp. k of ``(nabla_a f)e_b``."""
        return (
            self.df
            + np.einsum("kam,mb->kba", self.gamma, self.f)
            - np.einsum("mab,km->kba", self.gamma, self.f)
        )

    def curvature_operator(self, X, Y, Z):
        """The vector ``R(X, Y)Z`` at this point."""
        return np.einsum("lkij,i,j,k->l", self.riemann31, X, Y, Z)

    def inner(self, u, v):
        return float(u @ self.g @ v)


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConnectionCoefficients:
    """Levi-Civita connection coefficients at a point, ``gamma[k, i, j]``."""

    gamma: np.ndarray


@dataclass(frozen=True)
class CurvatureData:
    """Riemann tensor (3,1) and (4,0) forms plus the Ricci operator."""

    riemann31: np.ndarray
    riemann40: np.ndarray
    ricci_op: np.ndarray


def christoffel(model: ManifoldModel, p: Point) -> ConnectionCoefficients:
    """Levi-Civita connection from the metric's first derivatives."""
    return ConnectionCoefficients(gamma=PointFrame(model, p).gamma)


def riemann(model: ManifoldModel, p: Point) -> CurvatureData:
    """Curvature tensor and Ricci operator at ``p``."""
    frame = PointFrame(model, p)
    return CurvatureData(frame.riemann31, frame.riemann40, frame.ricci_op)


def lie_bracket(field_a: FieldEvaluator, field_b: FieldEvaluator, p: Point) -> np.ndarray:
    """``[A, B]^i = A^j d_j B^i - B^j d_j A^i`` at ``p``."""
    p = np.asarray(p, dtype=float)
    dim = p.shape[0]
    x = jets.variables(p)
    a_raw, b_raw = field_a(x), field_b(x)
    a, b = jets.tensor_value(a_raw), jets.tensor_value(b_raw)
    da = jets.tensor_jacobian(a_raw, dim)  # da[i, j] = d_j A^i
    db = jets.tensor_jacobian(b_raw, dim)
    return db @ a - da @ b


def exterior_derivative_1form(
    model: ManifoldModel, eta_index: int, p: Point, convention: Convention
) -> np.ndarray:
    """``d eta`` of the eta_index-th structure one-form, as an antisymmetric matrix."""
    frame = PointFrame(model, p)
    deta = frame.deta[eta_index]  # deta[i, j] = d_j eta_i
    d = deta.T - deta  # (d eta)_ij = d_i eta_j - d_j eta_i
    if convention is Convention.HALF:
        d = 0.5 * d
    return d


def sample_points(model: ManifoldModel, count: int, seed) -> list[Point]:
    """Deterministic uniform samples from the model's domain box."""
    box = np.asarray(model.domain_box, dtype=float)
    if box.ndim != 2 or box.shape != (model.dim, 2) or np.any(box[:, 1] <= box[:, 0]):
        raise ValueError(f"empty or malformed domain box: {box!r}")
    rng = as_rng(seed)
    draws = rng.uniform(box[:, 0], box[:, 1], size=(count, model.dim))
    return [draws[i] for i in range(count)]


def as_rng(seed) -> np.random.Generator:
    """Accept an int seed or a ready Generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def metric_compatibility_residual(model: ManifoldModel, p: Point) -> float:
    """Max component of ``nabla g`` (zero for the Levi-Civita connection)."""
    frame = PointFrame(model, p)
    nabla_g = (
        np.einsum("ijk->kij", frame.dg)
        - np.einsum("lki,lj->kij", frame.gamma, frame.g)
        - np.einsum("lkj,il->kij", frame.gamma, frame.g)
    )
    return float(np.max(np.abs(nabla_g)))


def riemann_symmetry_residuals(model: ManifoldModel, p: Point) -> dict[str, float]:
    """Antisymmetries, pair symmetry and the first Bianchi identity of R."""
    R = PointFrame(model, p).riemann40
    return {
        "antisym_xy": float(np.max(np.abs(R + np.einsum("jikl->ijkl", R)))),
        "antisym_zw": float(np.max(np.abs(R + np.einsum("ijlk->ijkl", R)))),
        "pair": float(np.max(np.abs(R - np.einsum("klij->ijkl", R)))),
        "bianchi1": float(
            np.max(np.abs(R + np.einsum("jkil->ijkl", R) + np.einsum("kijl->ijkl", R)))
        ),
    }
