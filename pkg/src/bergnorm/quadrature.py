"""Gauss-Jacobi quadrature on (0,1) for the weighted measures of this package.

A rule with parameters (alpha, beta) integrates

    integral_0^1 t^alpha (1-t)^beta f(t) dt  ~=  sum_i w_i f(t_i)

exactly for polynomials f up to degree 2*order - 1.  Both endpoint
exponents live in the weight, so integrands with t^(mu-1) or (1-t)^sigma
singularities are handled by folding those exponents into the rule
analytically instead of sampling them.

Construction is the classical recurrence-coefficient route: the symmetric
tridiagonal Jacobi matrix of the weight's orthogonal polynomials is
assembled from the known three-term recurrence, its eigendecomposition
(LAPACK's tridiagonal solver) gives nodes as eigenvalues and weights from
the first components of the eigenvectors, and the standard [-1,1] rule is
then mapped affinely onto (0,1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .specfun import beta_fn

__all__ = ["JacobiRule", "QuadratureError", "integrate_weighted", "make_jacobi_rule"]

DEFAULT_ORDER = 64
IDENTITY_CHECK_ORDER = 128


class QuadratureError(RuntimeError):
    """Rule construction produced something unusable (solver failure,
    non-increasing nodes, or a non-positive weight)."""


@dataclass(frozen=True)
class JacobiRule:
    """An immutable Gauss-Jacobi rule on (0,1).

    ``alpha`` is the exponent on t, ``beta`` the exponent on (1-t); the
    weights already include the full weight function, so plain dot products
    against sampled integrand values perform the weighted integral.
    """

    alpha: float
    beta: float
    order: int
    nodes: np.ndarray
    weights: np.ndarray

    @property
    def total_mass(self) -> float:
        """sum of weights = B(alpha+1, beta+1), the weight's total measure."""
        return float(self.weights.sum())

    def integrate(self, values) -> float:
        """Dot the weights against integrand values sampled at the nodes."""
        values = np.asarray(values, dtype=float)
        if values.shape != self.nodes.shape:
            raise ValueError(
                f"expected {self.nodes.shape[0]} sampled values, got shape {values.shape}")
        return float(self.weights @ values)


def _recurrence(order: int, a_exp: float, b_exp: float):
    """Three-term recurrence coefficients for the monic Jacobi polynomials
    with weight (1-x)^a_exp (1+x)^b_exp on [-1,1].

    Returns (diag, offdiag) of the symmetric Jacobi matrix plus the zeroth
    moment of the weight.
    """
    A, B = a_exp, b_exp
    k = np.arange(order, dtype=float)
    s = 2.0 * k + A + B
    diag = np.empty(order)
    diag[0] = (B - A) / (A + B + 2.0)
    if order > 1:
        diag[1:] = (B * B - A * A) / (s[1:] * (s[1:] + 2.0))
    off = np.empty(max(order - 1, 0))
    if order > 1:
        # k = 1 separately: the generic expression has a removable 0/0 when
        # A + B + 1 = 0
        off[0] = math.sqrt(4.0 * (1.0 + A) * (1.0 + B)
                           / ((2.0 + A + B) ** 2 * (3.0 + A + B)))
    if order > 2:
        kk = k[2:]
        sk = s[2:]
        num = 4.0 * kk * (kk + A) * (kk + B) * (kk + A + B)
        den = sk * sk * (sk + 1.0) * (sk - 1.0)
        off[1:] = np.sqrt(num / den)
    mu0 = 2.0 ** (A + B + 1.0) * beta_fn(B + 1.0, A + 1.0)
    return diag, off, mu0


@lru_cache(maxsize=256)
def make_jacobi_rule(order: int, alpha: float, beta: float) -> JacobiRule:
    """Build (and cache) the order-point rule for weight t^alpha (1-t)^beta."""
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"order must be a positive integer, got {order!r}")
    if not (alpha > -1.0 and beta > -1.0):
        raise ValueError(
            f"integrability requires alpha, beta > -1, got ({alpha!r}, {beta!r})")
    # on [-1,1] the (1-x) exponent pairs with the (1-t) factor and the
    # (1+x) exponent with the t factor
    diag, off, mu0 = _recurrence(order, beta, alpha)
    try:
        eigvals, eigvecs = eigh_tridiagonal(diag, off)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - defensive
        raise QuadratureError(f"tridiagonal eigensolver failed: {exc}") from exc
    nodes = 0.5 * (eigvals + 1.0)
    weights = mu0 * eigvecs[0, :] ** 2 * 2.0 ** (-(alpha + beta + 1.0))
    if np.any(np.diff(nodes) <= 0.0):
        raise QuadratureError("quadrature nodes are not strictly increasing")
    if np.any(weights <= 0.0) or not np.all(np.isfinite(weights)):
        raise QuadratureError("quadrature weights must be positive and finite")
    if nodes[0] <= 0.0 or nodes[-1] >= 1.0:
        raise QuadratureError("quadrature nodes left the open interval (0,1)")
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return JacobiRule(alpha=alpha, beta=beta, order=order, nodes=nodes, weights=weights)


def integrate_weighted(f, mu: float, sigma: float = 0.0,
                       order: int = DEFAULT_ORDER) -> float:
    """integral_0^1 f(t) * mu * t^(mu-1) * (1-t)^sigma dt by Gauss-Jacobi.

    The measure's density (including the leading factor mu) is carried by
    the rule; ``f`` is sampled at the nodes and should accept a vector (a
    scalar-only callable is mapped over the nodes as a fallback).
    """
    if not mu > 0.0:
        raise ValueError(f"mu must be positive, got {mu!r}")
    rule = make_jacobi_rule(order, mu - 1.0, sigma)
    try:
        values = np.asarray(f(rule.nodes), dtype=float)
        if values.shape != rule.nodes.shape:
            raise TypeError
    except TypeError:
        values = np.array([float(f(t)) for t in rule.nodes])
    return mu * rule.integrate(values)
