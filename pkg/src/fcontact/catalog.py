"""Closed-form built-in manifolds used as ground truth by every check.

Two base families:

* ``s-space-form:n,s`` -- the standard S-structure on R^(2n+s) with
  coordinates (x_1..x_n, y_1..y_n, z_1..z_s):
  ``eta_alpha = 1/2 (dz_alpha - sum_i y_i dx_i)``, ``xi_alpha = 2 d/dz_alpha``,
  ``g = sum eta_alpha (x) eta_alpha + 1/4 sum_i (dx_i^2 + dy_i^2)``,
  ``f(dx_i) = -dy_i``, ``f(dy_i) = dx_i + y_i sum_alpha dz_alpha``,
  ``f(dz_alpha) = 0``.  Normal, h = 0, kappa = 1, constant f-sectional
  curvature -3s.  Convention: HALF.

* ``flat-contact-r3`` -- the flat structure on Euclidean R^3 with
  ``eta = cos(2z) dx + sin(2z) dy``, ``xi`` its metric dual, and f mapping the
  orthonormal frame {xi, e, d/dz} by ``f xi = 0``, ``f e = d/dz``,
  ``f d/dz = -e`` where ``e = -sin(2z) dx + cos(2z) dy``.  Curvature vanishes
  identically, so kappa = mu = 0; h has eigenvalues {0, +1, -1}.  Convention:
  HALF (the rotation rate 2 is what makes the h-eigenvalues +-sqrt(1 - kappa)
  and the deformation laws come out exactly).

``build_flat_contact_r3_plain`` provides the rotation-rate-1 sibling, which
satisfies ``F = d eta`` under the PLAIN convention instead.  It is a valid
metric f-contact model and the natural input for
:func:`fcontact.deform.convention_normalize`, but it is not normalized the
way the nullity theory expects (its h-eigenvalues are +-1/2), so it is not a
catalog entry.

Deformed entries use keys like ``flat-contact-r3:deformed:0.5``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import jets
from .deform import d_deform, predict_deformed_nullity
from .errors import UnknownManifoldError
from .geom import Convention, ManifoldModel


@dataclass(frozen=True)
class ExpectedFit:
    """Known (kappa, mu, H) of a catalog entry; None marks 'unconstrained/measured'."""

    kappa: float | None
    mu: float | None
    h_sectional: float | None
    note: str = ""


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    model: ManifoldModel
    n: int
    s: int
    expected: ExpectedFit | None
    d_convention: Convention


def _default_box(dim: int) -> np.ndarray:
    return np.tile(np.array([-1.0, 1.0]), (dim, 1))


def build_s_space_form(n: int, s: int) -> ManifoldModel:
    """The standard S-structure on R^(2n+s); h = 0 and kappa fits to 1."""
    if n < 1 or s < 1:
        raise ValueError("need n >= 1 and s >= 1")
    dim = 2 * n + s

    def eta_alpha(alpha):
        def eta(x):
            out = np.zeros(dim, dtype=object)
            for i in range(n):
                out[i] = -0.5 * x[n + i]
            out[2 * n + alpha] = 0.5
            return out

        return eta

    def xi_alpha(alpha):
        def xi(x):
            out = np.zeros(dim, dtype=object)
            out[2 * n + alpha] = 2.0
            return out

        return xi

    etas = tuple(eta_alpha(a) for a in range(s))
    xis = tuple(xi_alpha(a) for a in range(s))

    base_diag = np.diag([0.25] * (2 * n) + [0.0] * s)

    def metric(x):
        out = sum(np.outer(e(x), e(x)) for e in etas)
        return out + base_diag

    def f_field(x):
        out = np.zeros((dim, dim), dtype=object)
        for i in range(n):
            out[n + i, i] = -1.0             # f(dx_i) = -dy_i
            out[i, n + i] = 1.0              # f(dy_i) = dx_i + y_i sum_a dz_a
            for a in range(s):
                out[2 * n + a, n + i] = x[n + i]
        return out

    return ManifoldModel(
        n=n,
        s=s,
        metric_field=metric,
        f_field=f_field,
        xi_fields=xis,
        eta_fields=etas,
        domain_box=_default_box(dim),
        d_convention=Convention.HALF,
        label=f"s-space-form:{n},{s}",
    )


def _flat_contact_r3(rate: float, convention: Convention, label: str) -> ManifoldModel:
    def eta(x):
        return np.array([jets.cos(rate * x[2]), jets.sin(rate * x[2]), 0.0], dtype=object)

    def xi(x):
        return np.array([jets.cos(rate * x[2]), jets.sin(rate * x[2]), 0.0], dtype=object)

    def metric(x):
        return np.eye(3)

    def f_field(x):
        c, s_ = jets.cos(rate * x[2]), jets.sin(rate * x[2])
        out = np.zeros((3, 3), dtype=object)
        out[2, 0] = -s_       # f(dx) = -sin(rz) dz
        out[2, 1] = c         # f(dy) =  cos(rz) dz
        out[0, 2] = s_        # f(dz) = sin(rz) dx - cos(rz) dy
        out[1, 2] = -c
        return out

    return ManifoldModel(
        n=1,
        s=1,
        metric_field=metric,
        f_field=f_field,
        xi_fields=(xi,),
        eta_fields=(eta,),
        domain_box=_default_box(3),
        d_convention=convention,
        label=label,
    )


def build_flat_contact_r3() -> ManifoldModel:
    """Flat metric f-contact structure on R^3 (kappa = mu = 0, HALF)."""
    return _flat_contact_r3(2.0, Convention.HALF, "flat-contact-r3")


def build_flat_contact_r3_plain() -> ManifoldModel:
    """Rotation-rate-1 flat structure satisfying F = d eta under PLAIN."""
    return _flat_contact_r3(1.0, Convention.PLAIN, "flat-contact-r3-plain")


def _base_entry(key: str) -> CatalogEntry:
    if key == "flat-contact-r3":
        model = build_flat_contact_r3()
        return CatalogEntry(
            key=key,
            model=model,
            n=1,
            s=1,
            expected=ExpectedFit(0.0, 0.0, 0.0, note="curvature vanishes identically"),
            d_convention=model.d_convention,
        )
    if key.startswith("s-space-form:"):
        try:
            n_str, s_str = key.split(":", 1)[1].split(",")
            n, s = int(n_str), int(s_str)
        except ValueError as exc:
            raise UnknownManifoldError(key) from exc
        if n < 1 or s < 1:
            raise UnknownManifoldError(key)
        model = build_s_space_form(n, s)
        return CatalogEntry(
            key=key,
            model=model,
            n=n,
            s=s,
            expected=ExpectedFit(
                1.0, None, -3.0 * s, note="normal structure; mu unconstrained since h = 0"
            ),
            d_convention=model.d_convention,
        )
    raise UnknownManifoldError(key)


def catalog_get(key: str) -> CatalogEntry:
    """Resolve a catalog key, including ``...:deformed:a`` suffixes."""
    if ":deformed:" in key:
        base_key, a_str = key.rsplit(":deformed:", 1)
        try:
            a = float(a_str)
        except ValueError as exc:
            raise UnknownManifoldError(key) from exc
        if not a > 0:
            raise UnknownManifoldError(key)
        base = _base_entry(base_key)
        model = d_deform(base.model, a)
        if base_key == "flat-contact-r3":
            pred = predict_deformed_nullity(a, base.s)
            expected = ExpectedFit(
                pred.kappa,
                pred.mu,
                pred.h_sectional,
                note="closed-form deformation of the flat structure",
            )
        else:
            expected = ExpectedFit(
                1.0, None, None, note="deformation preserves the normal structure; H measured"
            )
        return CatalogEntry(
            key=key,
            model=model,
            n=base.n,
            s=base.s,
            expected=expected,
            d_convention=model.d_convention,
        )
    return _base_entry(key)


def catalog_list() -> list[CatalogEntry]:
    """The base entries every test suite starts from."""
    return [
        catalog_get("flat-contact-r3"),
        catalog_get("s-space-form:1,1"),
        catalog_get("s-space-form:2,2"),
    ]
