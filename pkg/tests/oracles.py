"""Finite-difference oracles, independent of the jet-algebra code paths.

These exist only for tests: they recompute connection data from plain float
evaluations of the metric with central differences, so an error in the jet
algebra cannot hide in both routes.
"""

import numpy as np

from fcontact import jets


def metric_values(model, p):
    return jets.tensor_value(model.metric_field(np.asarray(p, dtype=float)))


def fd_metric_jacobian(model, p, step=1e-5):
    dim = model.dim
    dg = np.zeros((dim, dim, dim))
    p = np.asarray(p, dtype=float)
    for k in range(dim):
        e = np.zeros(dim)
        e[k] = step
        dg[:, :, k] = (metric_values(model, p + e) - metric_values(model, p - e)) / (2 * step)
    return dg


def fd_christoffel(model, p, step=1e-5):
    """Central-difference Levi-Civita coefficients gamma[k, i, j]."""
    g = metric_values(model, p)
    ginv = np.linalg.inv(g)
    dg = fd_metric_jacobian(model, p, step)
    bracket = (
        np.einsum("jli->lij", dg)
        + np.einsum("ilj->lij", dg)
        - np.einsum("ijl->lij", dg)
    )
    return 0.5 * np.einsum("kl,lij->kij", ginv, bracket)


def fd_dgamma(model, p, step=1e-4):
    """Central differences of the exact-jet Christoffel symbols."""
    from fcontact.geom import PointFrame

    dim = model.dim
    p = np.asarray(p, dtype=float)
    out = np.zeros((dim, dim, dim, dim))
    for m in range(dim):
        e = np.zeros(dim)
        e[m] = step
        gp = PointFrame(model, p + e).gamma
        gm = PointFrame(model, p - e).gamma
        out[:, :, :, m] = (gp - gm) / (2 * step)
    return out
