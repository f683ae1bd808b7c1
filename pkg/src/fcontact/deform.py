"""D-homothetic deformations and their closed-form (kappa, mu, H) laws.

A D-homothetic deformation of constant ``a > 0`` replaces

    f -> f,   xi_alpha -> xi_alpha / a,   eta_alpha -> a eta_alpha,
    g -> a g + a (a - 1) sum eta_alpha (x) eta_alpha,

and maps metric f-manifolds to metric f-manifolds.  Deforming a model whose
curvature annihilates the structure fields (``R(X, Y) xi_alpha = 0``, i.e.
kappa = mu = 0) yields a (kappa, mu)-nullity structure with

    kappa = (a^2 - 1) / a^2,   mu = 2 (a - 1) / a,
    H = -s (kappa + mu) = -s (3 a^2 - 2 a - 1) / a^2,

and ``mu = kappa + 1`` exactly when ``a = 1/2``.

Deformed models are lazy wrappers around the base model's field evaluators,
so jet payloads (hence exact second derivatives of the deformed metric) flow
through unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import NotApplicableError
from .geom import Convention, ManifoldModel


@dataclass(frozen=True)
class DeformationParams:
    """Constant of a D-homothetic deformation; ``a = 1`` is the identity."""

    a: float

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError(f"deformation constant must be positive, got {self.a}")


def d_deform(model: ManifoldModel, params: DeformationParams | float) -> ManifoldModel:
    """Return the D-homothetically deformed model (lazy field composition)."""
    a = params.a if isinstance(params, DeformationParams) else float(params)
    if not a > 0:
        raise ValueError(f"deformation constant must be positive, got {a}")

    base_metric = model.metric_field
    base_etas = model.eta_fields
    base_xis = model.xi_fields

    def metric(x):
        g = base_metric(x)
        etas = [np.asarray(eta(x)) for eta in base_etas]
        extra = sum(np.outer(e, e) for e in etas)
        return a * np.asarray(g) + (a * (a - 1.0)) * extra

    def make_xi(xi):
        return lambda x: (1.0 / a) * np.asarray(xi(x))

    def make_eta(eta):
        return lambda x: a * np.asarray(eta(x))

    return replace(
        model,
        metric_field=metric,
        xi_fields=tuple(make_xi(xi) for xi in base_xis),
        eta_fields=tuple(make_eta(eta) for eta in base_etas),
        label=f"{model.label}:deformed:{a:g}" if model.label else f"deformed:{a:g}",
    )


@dataclass(frozen=True)
class DeformedNullityPrediction:
    """Closed-form (kappa, mu, H) of a deformed flat-structure model."""

    kappa: float
    mu: float
    h_sectional: float
    is_space_form_case: bool   # mu = kappa + 1, i.e. a = 1/2

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.kappa, self.mu, self.h_sectional)


def predict_deformed_nullity(params: DeformationParams | float, s: int) -> DeformedNullityPrediction:
    """Predicted (kappa, mu, H) when the base model satisfies R(X, Y)xi = 0."""
    a = params.a if isinstance(params, DeformationParams) else float(params)
    if not a > 0:
        raise ValueError(f"deformation constant must be positive, got {a}")
    kappa = (a**2 - 1.0) / a**2
    mu = 2.0 * (a - 1.0) / a
    h = -s * (3.0 * a**2 - 2.0 * a - 1.0) / a**2
    return DeformedNullityPrediction(
        kappa=kappa,
        mu=mu,
        h_sectional=h,
        is_space_form_case=abs(a - 0.5) < 1e-12,
    )


def convention_normalize(model: ManifoldModel) -> ManifoldModel:
    """Rescale a PLAIN-convention model into an equivalent HALF one.

    ``eta' = 2 eta``, ``xi' = xi / 2``, ``g' = g + 3 sum eta (x) eta``,
    ``f' = f``; the result satisfies the f-manifold axioms and ``F = d eta``
    under the HALF convention.
    """
    if model.d_convention is not Convention.PLAIN:
        raise NotApplicableError("model already uses the HALF convention")

    base_metric = model.metric_field
    base_etas = model.eta_fields

    def metric(x):
        g = base_metric(x)
        etas = [np.asarray(eta(x)) for eta in base_etas]
        extra = sum(np.outer(e, e) for e in etas)
        return np.asarray(g) + 3.0 * extra

    def make_xi(xi):
        return lambda x: 0.5 * np.asarray(xi(x))

    def make_eta(eta):
        return lambda x: 2.0 * np.asarray(eta(x))

    return replace(
        model,
        metric_field=metric,
        xi_fields=tuple(make_xi(xi) for xi in model.xi_fields),
        eta_fields=tuple(make_eta(eta) for eta in base_etas),
        d_convention=Convention.HALF,
        label=f"{model.label}:normalized" if model.label else "normalized",
    )
