"""Hinge bending and edge strain energies with analytic gradients."""

from __future__ import annotations

import numpy as np

__all__ = ["dihedral_angles", "bending_energy", "strain_energy", "edge_strains", "scatter_add"]


def scatter_add(n, index, values):
    """``out[index[i]] += values[i]`` for (m, 3) values; faster than ``np.add.at``."""
    out = np.empty((n, 3))
    for k in range(3):
        out[:, k] = np.bincount(index, weights=values[:, k], minlength=n)
    return out


def _cross(a, b):
    out = np.empty_like(a)
    out[:, 0] = a[:, 1] * b[:, 2] - a[:, 2] * b[:, 1]
    out[:, 1] = a[:, 2] * b[:, 0] - a[:, 0] * b[:, 2]
    out[:, 2] = a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]
    return out


def _dot(a, b):
    return a[:, 0] * b[:, 0] + a[:, 1] * b[:, 1] + a[:, 2] * b[:, 2]


def _hinge_terms(X, hinges):
    x1 = X[hinges[:, 0]]
    x2 = X[hinges[:, 1]]
    x3 = X[hinges[:, 2]]
    x4 = X[hinges[:, 3]]
    e = x4 - x3
    elen = np.sqrt(_dot(e, e))
    n1 = _cross(x1 - x3, x1 - x4)
    n2 = _cross(x2 - x4, x2 - x3)
    n1sq = _dot(n1, n1)
    n2sq = _dot(n2, n2)
    n1u = n1 / np.sqrt(n1sq)[:, None]
    n2u = n2 / np.sqrt(n2sq)[:, None]
    eu = e / elen[:, None]
    sin = _dot(_cross(n1u, n2u), eu)
    cos = _dot(n1u, n2u)
    theta = np.arctan2(sin, cos)
    return theta, (x1, x2, x3, x4, e, elen, n1, n2, n1sq, n2sq, eu)


def dihedral_angles(X, hinges) -> np.ndarray:
    """Signed fold angle across each hinge; zero when flat."""
    if len(hinges) == 0:
        return np.zeros(0)
    return _hinge_terms(X, hinges)[0]


def bending_energy(X, hinges, grad=False):
    """Sum of squared fold angles over interior edges."""
    if len(hinges) == 0:
        return (0.0, np.zeros_like(X)) if grad else 0.0
    theta, (x1, x2, x3, x4, e, elen, n1, n2, n1sq, n2sq, eu) = _hinge_terms(X, hinges)
    E = float((theta * theta).sum())
    if not grad:
        return E
    a1 = n1 / n1sq[:, None]
    a2 = n2 / n2sq[:, None]
    u1 = -elen[:, None] * a1
    u2 = -elen[:, None] * a2
    u3 = -(_dot(x1 - x4, eu)[:, None] * a1 + _dot(x2 - x4, eu)[:, None] * a2)
    u4 = _dot(x1 - x3, eu)[:, None] * a1 + _dot(x2 - x3, eu)[:, None] * a2
    w = (2.0 * theta)[:, None]
    idx = hinges.T.ravel()
    vals = np.concatenate([w * u1, w * u2, w * u3, w * u4])
    return E, scatter_add(len(X), idx, vals)


def edge_strains(X, edges, rest) -> np.ndarray:
    d = X[edges[:, 1]] - X[edges[:, 0]]
    return (np.linalg.norm(d, axis=1) - rest) / rest


def strain_energy(X, edges, rest, grad=False):
    """Sum of squared relative edge-length errors."""
    d = X[edges[:, 1]] - X[edges[:, 0]]
    L = np.linalg.norm(d, axis=1)
    eps = (L - rest) / rest
    E = float((eps * eps).sum())
    if not grad:
        return E
    coef = (2.0 * eps / (rest * L))[:, None] * d
    idx = np.concatenate([edges[:, 1], edges[:, 0]])
    return E, scatter_add(len(X), idx, np.concatenate([coef, -coef]))
