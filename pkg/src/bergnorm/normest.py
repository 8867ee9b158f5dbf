"""Independent numerical routes to the operator norm of F.

Four routes, none of which trusts the closed form it is checking:

* the L^1 route: the norm on L^1 is the supremum over t of the kernel's
  column mass integral K(s,t) dmu(s), scanned over an endpoint-refined
  grid by two methods (direct quadrature and a hypergeometric reduction)
  and closed at t -> 1 by Gauss summation;

* the Schur route: with the test function phi(t) = (1-t)^(-1/(pq)), both
  Schur quotients reduce to explicit hypergeometric profiles whose suprema
  reproduce the closed-form norm from above;

* the extremal-family route: a two-parameter family of unit-norm function
  pairs whose bilinear forms against the operator are computable in closed
  form and climb to the norm from below as the family degenerates;

* the discrete route: a Nystrom matrix with the measure-weighted p-norm
  power method (singular values for p = 2), converging to the norm from
  below as the order grows.

``norm_report`` bundles all applicable routes for one (mu, sigma, p) into
a NormReport record.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import svdvals

from .intop import (
    DiscretizedOperator,
    LebesgueExponent,
    OperatorParams,
    UnboundedOperatorError,
    boundedness_margin,
    discretize,
    norm_formula,
)
from .quadrature import IDENTITY_CHECK_ORDER, make_jacobi_rule
from .specfun import (
    ConvergenceError,
    beta_fn,
    diag_sup,
    hyp2f1_at_one,
    hyp2f1_grid,
    log_gamma,
)

__all__ = [
    "ColumnMassProfile",
    "ExtremalFamily",
    "NormReport",
    "SchurProfile",
    "bilinear_form_closed",
    "bilinear_form_numeric",
    "column_mass_closed",
    "column_mass_quadrature",
    "family_on_path",
    "l1_norm_numeric",
    "l1_profile",
    "l2_opnorm_svd",
    "lower_bound_sweep",
    "lp_opnorm_numeric",
    "make_extremal_family",
    "norm_report",
    "schur_check",
    "schur_profile",
    "supremum_grid",
    "weighted_p_norm",
]

# quadrature cross-checks stop here; closer to 1 the integrands' near-pole
# at s = 1/t is too sharp for a fixed-order rule and only the analytic
# route remains trustworthy
QUAD_ROUTE_CUTOFF = 1.0 - 2.0 ** -6


def _as_exponent(p) -> LebesgueExponent:
    return p if isinstance(p, LebesgueExponent) else LebesgueExponent(float(p))


def supremum_grid(grid_size: int = 64, k_max: int = 40) -> np.ndarray:
    """Chebyshev-spaced points of (0,1) plus geometric refinement 1 - 2^-k.

    The profiles being scanned increase toward the right endpoint, so the
    grid packs points there down to 1 - 2^-k_max.
    """
    if grid_size < 1 or k_max < 1:
        raise ValueError("grid_size and k_max must be positive")
    j = np.arange(1, grid_size + 1, dtype=float)
    cheb = 0.5 * (1.0 - np.cos(np.pi * j / (grid_size + 1.0)))
    geo = 1.0 - 2.0 ** -np.arange(1.0, k_max + 1.0)
    return np.unique(np.concatenate([cheb, geo]))


def weighted_p_norm(values, weights, p) -> float:
    """Discrete L^p norm (sum_i w_i |v_i|^p)^(1/p); max |v_i| at p = inf."""
    exp = _as_exponent(p)
    values = np.asarray(values, dtype=float)
    weights = np.asarray(weights, dtype=float)
    if exp.is_infinite:
        return float(np.max(np.abs(values)))
    return float((weights @ np.abs(values) ** exp.p) ** exp.inv)


# ----------------------------------------------------------------------
# L^1 route: column masses
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ColumnMassProfile:
    """The L^1 column-mass scan for one parameter pair.

    ``closed_route`` evaluates the reduced hypergeometric form of the
    column integral on the full grid; ``quadrature_route`` integrates the
    kernel directly on the sub-grid where a fixed-order rule still
    resolves the integrand.  ``endpoint_limit`` is the t -> 1 value by
    Gauss summation, which is also the supremum (the profile increases).
    """

    params: OperatorParams
    t_grid: np.ndarray
    closed_route: np.ndarray
    quadrature_grid: np.ndarray
    quadrature_route: np.ndarray
    endpoint_limit: float
    supremum: float

    @property
    def route_disagreement(self) -> float:
        """Max relative gap between the two routes on the shared sub-grid."""
        closed_sub = self.closed_route[: self.quadrature_grid.size]
        return float(np.max(np.abs(self.quadrature_route - closed_sub)
                            / np.abs(closed_sub)))


def column_mass_closed(params: OperatorParams, t) -> np.ndarray:
    """Column mass integral K(s,t) dmu(s) via its hypergeometric reduction.

    Term-by-term integration gives (1-t)^sigma 2F1(lam,lam;mu+1;t), whose
    Euler transform collapses the prefactor:
    2F1(mu+1-lam, mu+1-lam; mu+1; t).
    """
    t = np.atleast_1d(np.asarray(t, dtype=float))
    a = params.mu + 1.0 - params.lam
    return hyp2f1_grid(a, a, params.mu + 1.0, t)


def column_mass_quadrature(params: OperatorParams, t,
                           order: int = IDENTITY_CHECK_ORDER) -> np.ndarray:
    """Column mass by direct quadrature in s, independent of any reduction."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    rule = make_jacobi_rule(order, params.mu - 1.0, 0.0)
    z = np.outer(t, rule.nodes)
    fgrid = hyp2f1_grid(params.lam, params.lam, params.mu, z)
    return (1.0 - t) ** params.sigma * (params.mu * fgrid @ rule.weights)


def l1_profile(params: OperatorParams, grid_size: int = 64,
               order: int = IDENTITY_CHECK_ORDER) -> ColumnMassProfile:
    """Scan the column masses; raises when the supremum is infinite."""
    a = params.mu + 1.0 - params.lam
    sup = diag_sup(a, params.mu + 1.0)
    if not sup.bounded:
        raise UnboundedOperatorError(
            f"L^1 column masses diverge at t -> 1 (sigma = {params.sigma} <= 0), "
            f"{sup.kind} growth",
            growth=sup.kind, margin=params.sigma)
    grid = supremum_grid(grid_size)
    closed = column_mass_closed(params, grid)
    quad_grid = grid[grid <= QUAD_ROUTE_CUTOFF]
    quad = column_mass_quadrature(params, quad_grid, order)
    endpoint = sup.value  # Gauss summation of the reduced 2F1 at t = 1
    supremum = max(float(np.max(closed)), float(np.max(quad)), endpoint)
    return ColumnMassProfile(params=params, t_grid=grid, closed_route=closed,
                             quadrature_grid=quad_grid, quadrature_route=quad,
                             endpoint_limit=endpoint, supremum=supremum)


def l1_norm_numeric(params: OperatorParams, grid_size: int = 64) -> float:
    """Numerical L^1 operator norm: the column-mass supremum."""
    return l1_profile(params, grid_size).supremum


# ----------------------------------------------------------------------
# Schur route: both quotients of the (1-t)^(-1/(pq)) test function
# ----------------------------------------------------------------------

def _check_schur_domain(params: OperatorParams, exp: LebesgueExponent):
    if exp.is_one or exp.is_infinite:
        raise ValueError("the Schur route needs 1 < p < infinity")
    margin = boundedness_margin(params, exp)
    if margin <= 0.0:
        raise UnboundedOperatorError(
            f"Schur test undefined: sigma <= 1/p - 1 (margin {margin})",
            growth="logarithmic" if margin == 0.0 else "power", margin=margin)


def schur_ratio_right_closed(params: OperatorParams, p, s) -> np.ndarray:
    """Right Schur quotient, reduced analytically.

    integral K(s,t) phi(t)^q dmu(t) / phi(s)^q
        = mu Gamma(mu) Gamma(sigma+1-1/p) / Gamma(2 lam - 1/p)
          * 2F1(lam - 1/p, lam - 1/p; 2 lam - 1/p; s),

    increasing in s with limit exactly the closed-form norm.
    """
    exp = _as_exponent(p)
    _check_schur_domain(params, exp)
    s = np.atleast_1d(np.asarray(s, dtype=float))
    inv = exp.inv
    c = 2.0 * params.lam - inv
    front = math.exp(log_gamma(params.mu) + math.log(params.mu)
                     + log_gamma(params.sigma + 1.0 - inv) - log_gamma(c))
    return front * hyp2f1_grid(params.lam - inv, params.lam - inv, c, s)


def schur_ratio_left_closed(params: OperatorParams, p, t) -> np.ndarray:
    """Left Schur quotient, reduced analytically.

    integral K(s,t) phi(s)^p dmu(s) / phi(t)^p
        = mu B(mu, 1/p) 2F1(mu + 1/p - lam, mu + 1/p - lam; mu + 1/p; t),

    increasing in t with the same limit as the right quotient.
    """
    exp = _as_exponent(p)
    _check_schur_domain(params, exp)
    t = np.atleast_1d(np.asarray(t, dtype=float))
    inv = exp.inv
    a = params.mu + inv - params.lam
    front = params.mu * beta_fn(params.mu, inv)
    return front * hyp2f1_grid(a, a, params.mu + inv, t)


def schur_ratio_right_quadrature(params: OperatorParams, p, s,
                                 order: int = IDENTITY_CHECK_ORDER) -> np.ndarray:
    """Right quotient by direct quadrature; phi^q = (1-t)^(-1/p) is folded
    into the rule's weight exponent, never sampled."""
    exp = _as_exponent(p)
    _check_schur_domain(params, exp)
    s = np.atleast_1d(np.asarray(s, dtype=float))
    inv = exp.inv
    rule = make_jacobi_rule(order, params.mu - 1.0, params.sigma - inv)
    z = np.outer(s, rule.nodes)
    fgrid = hyp2f1_grid(params.lam, params.lam, params.mu, z)
    integral = params.mu * fgrid @ rule.weights
    return integral * (1.0 - s) ** inv


def schur_ratio_left_quadrature(params: OperatorParams, p, t,
                                order: int = IDENTITY_CHECK_ORDER) -> np.ndarray:
    """Left quotient by direct quadrature with phi^p = (1-s)^(-1/q) folded
    into the weight."""
    exp = _as_exponent(p)
    _check_schur_domain(params, exp)
    t = np.atleast_1d(np.asarray(t, dtype=float))
    inv_q = exp.conjugate.inv
    rule = make_jacobi_rule(order, params.mu - 1.0, -inv_q)
    z = np.outer(t, rule.nodes)
    fgrid = hyp2f1_grid(params.lam, params.lam, params.mu, z)
    integral = params.mu * fgrid @ rule.weights
    return integral * (1.0 - t) ** (params.sigma + inv_q)


@dataclass(frozen=True)
class SchurProfile:
    """Both Schur quotients on the supremum grid, by both routes."""

    params: OperatorParams
    p: LebesgueExponent
    grid: np.ndarray
    right_closed: np.ndarray
    left_closed: np.ndarray
    quadrature_grid: np.ndarray
    right_quadrature: np.ndarray
    left_quadrature: np.ndarray
    upper_bound: float  # common s -> 1 limit of both quotients

    @property
    def max_ratio_right(self) -> float:
        return float(max(np.max(self.right_closed), np.max(self.right_quadrature)))

    @property
    def max_ratio_left(self) -> float:
        return float(max(np.max(self.left_closed), np.max(self.left_quadrature)))

    @property
    def route_disagreement(self) -> float:
        n = self.quadrature_grid.size
        right = np.max(np.abs(self.right_quadrature - self.right_closed[:n])
                       / np.abs(self.right_closed[:n]))
        left = np.max(np.abs(self.left_quadrature - self.left_closed[:n])
                      / np.abs(self.left_closed[:n]))
        return float(max(right, left))


def schur_profile(params: OperatorParams, p, grid_size: int = 64,
                  order: int = IDENTITY_CHECK_ORDER) -> SchurProfile:
    exp = _as_exponent(p)
    _check_schur_domain(params, exp)
    grid = supremum_grid(grid_size)
    quad_grid = grid[grid <= QUAD_ROUTE_CUTOFF]
    inv = exp.inv
    # both quotients share the Gauss-summation limit, which is the norm
    limit = math.exp(log_gamma(params.mu + 1.0) - 2.0 * log_gamma(params.lam)
                     + log_gamma(inv) + log_gamma(params.sigma + 1.0 - inv))
    return SchurProfile(
        params=params, p=exp, grid=grid,
        right_closed=schur_ratio_right_closed(params, exp, grid),
        left_closed=schur_ratio_left_closed(params, exp, grid),
        quadrature_grid=quad_grid,
        right_quadrature=schur_ratio_right_quadrature(params, exp, quad_grid, order),
        left_quadrature=schur_ratio_left_quadrature(params, exp, quad_grid, order),
        upper_bound=limit)


def schur_check(params: OperatorParams, p, grid_size: int = 64) -> tuple[float, float]:
    """Maxima of the two Schur quotients over the supremum grid."""
    prof = schur_profile(params, p, grid_size)
    return prof.max_ratio_right, prof.max_ratio_left


# ----------------------------------------------------------------------
# extremal-family route: certified lower bounds
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ExtremalFamily:
    """The unit-norm test pair Phi, Psi of the lower-bound construction.

    Phi(t) = C t^(theta/p) (1-t)^(theta_tilde/p) normalized in L^p;
    Psi(s) = C_tilde s^(vartheta/q) (1-s)^(vartheta_tilde/q) normalized in
    L^q.  ``vartheta`` is identically 0 and ``vartheta_tilde`` is tied to
    theta by (theta - p)/(p - 1), which is exactly the coupling that keeps
    the bilinear form in closed form.
    """

    p: LebesgueExponent
    theta: float
    theta_tilde: float
    C: float
    C_tilde: float
    vartheta: float = 0.0
    vartheta_tilde: float = field(init=False)

    def __post_init__(self):
        if self.p.is_one or self.p.is_infinite:
            raise ValueError("the extremal family needs 1 < p < infinity")
        if not self.theta > 1.0:
            raise ValueError(f"theta must exceed 1, got {self.theta!r}")
        if not self.theta_tilde > -1.0:
            raise ValueError(f"theta_tilde must exceed -1, got {self.theta_tilde!r}")
        object.__setattr__(self, "vartheta_tilde",
                           (self.theta - self.p.p) / (self.p.p - 1.0))

    def phi_values(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        return self.C * t ** (self.theta / self.p.p) \
            * (1.0 - t) ** (self.theta_tilde / self.p.p)

    def psi_values(self, s: np.ndarray) -> np.ndarray:
        s = np.asarray(s, dtype=float)
        return self.C_tilde * (1.0 - s) ** (self.vartheta_tilde / self.p.q)


def make_extremal_family(params: OperatorParams, p, theta: float,
                         theta_tilde: float) -> ExtremalFamily:
    """Build the family with its normalizers, all in log domain.

    C^p = 1 / (mu B(theta + mu, theta_tilde + 1)) makes ||Phi||_p = 1, and
    C_tilde^q = 1 / (mu B(mu, vartheta_tilde + 1)) makes ||Psi||_q = 1.
    """
    exp = _as_exponent(p)
    if exp.is_one or exp.is_infinite:
        raise ValueError("the extremal family needs 1 < p < infinity")
    if not theta > 1.0:
        raise ValueError(f"theta must exceed 1, got {theta!r}")
    if not theta_tilde > -1.0:
        raise ValueError(f"theta_tilde must exceed -1, got {theta_tilde!r}")
    mu = params.mu
    vt = (theta - exp.p) / (exp.p - 1.0)
    log_c = -(math.log(mu) + log_gamma(theta + mu) + log_gamma(theta_tilde + 1.0)
              - log_gamma(theta + mu + theta_tilde + 1.0)) / exp.p
    log_ct = -(math.log(mu) + log_gamma(mu) + log_gamma(vt + 1.0)
               - log_gamma(mu + vt + 1.0)) / exp.q
    return ExtremalFamily(p=exp, theta=theta, theta_tilde=theta_tilde,
                          C=math.exp(log_c), C_tilde=math.exp(log_ct))


def family_on_path(params: OperatorParams, p, eta: float) -> ExtremalFamily:
    """The degeneration path theta = 1 + (p-1) eta, theta_tilde = eta - 1.

    As eta -> 0+ the bilinear form of the family climbs to the operator
    norm; eta must be positive.
    """
    exp = _as_exponent(p)
    if not eta > 0.0:
        raise ValueError(f"eta must be positive, got {eta!r}")
    return make_extremal_family(params, exp, 1.0 + (exp.p - 1.0) * eta, eta - 1.0)


def bilinear_form_closed(params: OperatorParams, fam: ExtremalFamily) -> float:
    """Closed form of the pairing <F Phi, Psi> over the mu-measure.

    Integrating in s first (the vartheta_tilde coupling makes the total
    t-exponent match the resulting hypergeometric c-parameter) gives

        mu C C_tilde Gamma(mu+1) Gamma(theta/p) Gamma(theta_tilde/p+sigma+1)
        * Gamma(g) / Gamma(g + lam)^2,      g = (theta + theta_tilde)/p,

    every factor evaluated in log domain.
    """
    exp = fam.p
    if boundedness_margin(params, exp) <= 0.0:
        raise UnboundedOperatorError(
            "bilinear closed form requires sigma > 1/p - 1",
            margin=boundedness_margin(params, exp))
    g = (fam.theta + fam.theta_tilde) / exp.p
    log_val = (math.log(params.mu) + math.log(fam.C) + math.log(fam.C_tilde)
               + log_gamma(params.mu + 1.0)
               + log_gamma(fam.theta / exp.p)
               + log_gamma(fam.theta_tilde / exp.p + params.sigma + 1.0)
               + log_gamma(g) - 2.0 * log_gamma(g + params.lam))
    return math.exp(log_val)


def bilinear_form_numeric(params: OperatorParams, fam: ExtremalFamily,
                          order: int = IDENTITY_CHECK_ORDER) -> float:
    """The same pairing by honest double quadrature.

    A plain tensor rule stalls here: the kernel behaves like
    (1 - s t)^-(sigma+1) along the diagonal, so the mass of the double
    integral piles up at the corner s = t = 1 faster than any fixed
    Gauss-Jacobi grid can follow.  Instead we factor that ridge out of the
    kernel (Euler transform, leaving a factor bounded up to the corner),
    substitute u = 1 - t, v = 1 - s, and split the square along v = u.  On
    each triangle the scaling v = u w turns every endpoint power -- the
    pair weights *and* the ridge -- into exact Jacobi exponents, and only
    smooth factors are sampled.  An order-halving self-check still guards
    against breakdown (e.g. mu < 1, whose corner singularity is not
    absorbed); failure raises rather than silently degrading.
    """
    exp = fam.p
    mu, lam, sigma = params.mu, params.lam, params.sigma
    a_t = mu - 1.0 + fam.theta / exp.p          # t exponent of the pair weight
    b_t = sigma + fam.theta_tilde / exp.p       # (1-t) exponent
    a_s = mu - 1.0
    b_s = fam.vartheta_tilde / exp.q
    a_u = b_t + b_s - sigma                     # ridge-corrected corner exponent

    def triangle(n: int, outer_beta: float, inner_alpha: float,
                 sampled_exp: float) -> float:
        # outer variable u (distance to the corner), inner scaling w = v/u
        rule_u = make_jacobi_rule(n, a_u, outer_beta)
        rule_w = make_jacobi_rule(n, inner_alpha, 0.0)
        u = rule_u.nodes[:, None]
        w = rule_w.nodes[None, :]
        z = (1.0 - u) * (1.0 - u * w)
        grid = hyp2f1_grid(mu - lam, mu - lam, mu, z)
        sampled = ((1.0 - u * w) ** sampled_exp
                   * (1.0 + w - u * w) ** (-(sigma + 1.0)) * grid)
        return float(rule_u.weights @ sampled @ rule_w.weights)

    def value_at(n: int) -> float:
        lower = triangle(n, a_t, b_s, a_s)      # v <= u, i.e. 1-s <= 1-t
        upper = triangle(n, a_s, b_t, a_t)      # u <= v
        return mu ** 2 * fam.C * fam.C_tilde * (lower + upper)

    coarse = value_at(order // 2)
    fine = value_at(order)
    if abs(fine - coarse) > 1e-6 * max(1.0, abs(fine)):
        from .quadrature import QuadratureError

        raise QuadratureError(
            f"bilinear double quadrature not converged at order {order}: "
            f"{coarse!r} vs {fine!r}")
    return fine


def lower_bound_sweep(params: OperatorParams, p, eta_sequence) -> list[tuple[float, float]]:
    """Closed-form bilinear values along the degeneration path.

    Returns (eta, value) pairs in the order given; each value is a
    certified lower bound on the norm (Cauchy-Schwarz/Hoelder against the
    unit-norm pair), increasing toward it as eta decreases.
    """
    etas = [float(e) for e in eta_sequence]
    if any(e <= 0.0 for e in etas):
        raise ValueError("eta values must be positive")
    out = []
    for eta in etas:
        fam = family_on_path(params, p, eta)
        out.append((eta, bilinear_form_closed(params, fam)))
    return out


# ----------------------------------------------------------------------
# discrete route: weighted p-norm power method
# ----------------------------------------------------------------------

_POWER_TOL = 1e-10
_POWER_MAXITER = 10_000
_POWER_RESTARTS = 5


def _weight_conjugated(disc: DiscretizedOperator, p: float):
    """Similarity transform B = D A D^{-1} with D = diag(w^(1/p)) that turns
    the measure-weighted p-norm into the plain vector p-norm."""
    d = disc.measure_weights ** (1.0 / p)
    return (d[:, None] * disc.matrix) / d[None, :]


def l2_opnorm_svd(disc: DiscretizedOperator) -> float:
    """Largest singular value of the weight-symmetrized matrix: the
    discrete L^2 operator norm."""
    return float(svdvals(_weight_conjugated(disc, 2.0))[0])


def lp_opnorm_numeric(disc: DiscretizedOperator, restarts: int = _POWER_RESTARTS,
                      seed: int = 0, maxiter: int = _POWER_MAXITER,
                      tol: float = _POWER_TOL) -> float:
    """Discrete L^p -> L^p operator norm by the duality-map power method.

    Iterates x <- J_q(B^T J_p(B x)) on the weight-conjugated matrix, where
    J_r(v) = sign(v) |v|^(r-1), tracking the Rayleigh-type quotient
    ||B x||_p / ||x||_p to relative stagnation ``tol``; the best quotient
    over ``restarts`` random starts is returned.  This approaches the true
    norm from below (it maximizes over the iterated subspace only).
    """
    exp = disc.p
    if exp.is_one or exp.is_infinite:
        raise ValueError("power method covers 1 < p < infinity only "
                         "(use l1_norm_numeric for p = 1)")
    p, q = exp.p, exp.q
    b = _weight_conjugated(disc, p)
    bt = b.T.copy()
    rng = np.random.default_rng(seed)

    def dual_map(v, r):
        return np.sign(v) * np.abs(v) ** (r - 1.0)

    best = 0.0
    for _ in range(max(restarts, 1)):
        x = rng.uniform(0.1, 1.0, size=b.shape[1])
        x /= np.linalg.norm(x, p)
        gamma_prev = -1.0
        for _ in range(maxiter):
            y = b @ x
            gamma = float(np.linalg.norm(y, p))
            if abs(gamma - gamma_prev) <= tol * max(gamma, 1e-300):
                break
            gamma_prev = gamma
            z = bt @ dual_map(y, p)
            x = dual_map(z, q)
            nx = np.linalg.norm(x, p)
            if nx == 0.0:
                break
            x /= nx
        else:
            raise ConvergenceError(
                f"p-norm power method did not stagnate in {maxiter} iterations")
        best = max(best, gamma)
    return best


# ----------------------------------------------------------------------
# consolidated report
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class NormReport:
    """All routes for one (mu, sigma, p), with their gaps to the closed form.

    In the unbounded regime ``closed_form`` is +inf, the route fields that
    need boundedness are NaN, and ``divergence_flagged`` records whether
    the discrete estimates were seen growing with the order (the numeric
    signature of an unbounded operator).
    """

    params: OperatorParams
    p: LebesgueExponent
    closed_form: float
    schur_max_ratio_right: float
    schur_max_ratio_left: float
    sweep_best_lower: float
    nystrom_estimate: float
    rel_gap_lower: float
    rel_gap_nystrom: float
    unbounded: bool = False
    growth: str | None = None
    divergence_flagged: bool = False

    def to_dict(self) -> dict:
        return {
            "mu": self.params.mu,
            "sigma": self.params.sigma,
            "lam": self.params.lam,
            "p": self.p.p,
            "closed_form": self.closed_form,
            "schur_max_ratio_right": self.schur_max_ratio_right,
            "schur_max_ratio_left": self.schur_max_ratio_left,
            "sweep_best_lower": self.sweep_best_lower,
            "nystrom_estimate": self.nystrom_estimate,
            "rel_gap_lower": self.rel_gap_lower,
            "rel_gap_nystrom": self.rel_gap_nystrom,
            "unbounded": self.unbounded,
            "growth": self.growth,
            "divergence_flagged": self.divergence_flagged,
        }


_DIVERGENCE_PROBE_ORDERS = (64, 128, 256)


def norm_report(params: OperatorParams, p, order: int = 128,
                grid_size: int = 64, eta_min: float = 1e-4,
                seed: int = 0) -> NormReport:
    """Assemble every applicable route for one parameter set.

    Bounded, 1 < p < infinity: Schur maxima, the eta-sweep lower bound,
    and the Nystrom estimate.  p = 1: the column-mass supremum plays the
    numeric role and the Schur/sweep fields are NaN.  Unbounded: the
    discrete estimates are probed across increasing orders and flagged
    when they grow instead of stabilizing.
    """
    exp = _as_exponent(p)
    nan = math.nan
    try:
        closed = norm_formula(params, exp)
    except UnboundedOperatorError as err:
        estimates = []
        for n in _DIVERGENCE_PROBE_ORDERS:
            disc = discretize(params, exp, n)
            if exp.is_infinite:
                # sup norm of the discrete image of the constant one
                estimates.append(float(np.max(disc.matrix.sum(axis=1))))
            elif exp.is_one:
                # largest discrete column mass relative to its own weight
                col = disc.measure_weights @ disc.matrix
                estimates.append(float(np.max(col / disc.measure_weights)))
            else:
                estimates.append(lp_opnorm_numeric(disc, seed=seed))
        flagged = estimates[-1] > estimates[0] * 1.02
        return NormReport(params=params, p=exp, closed_form=math.inf,
                          schur_max_ratio_right=nan, schur_max_ratio_left=nan,
                          sweep_best_lower=nan, nystrom_estimate=estimates[-1],
                          rel_gap_lower=nan, rel_gap_nystrom=nan,
                          unbounded=True, growth=err.growth,
                          divergence_flagged=flagged)
    if exp.is_one:
        est = l1_norm_numeric(params, grid_size)
        return NormReport(params=params, p=exp, closed_form=closed,
                          schur_max_ratio_right=nan, schur_max_ratio_left=nan,
                          sweep_best_lower=nan, nystrom_estimate=est,
                          rel_gap_lower=nan,
                          rel_gap_nystrom=(closed - est) / closed)
    right, left = schur_check(params, exp, grid_size)
    n_decades = max(1, round(-math.log10(eta_min)) - 1)
    etas = [10.0 ** -k for k in range(1, n_decades + 1)]
    if etas[-1] > eta_min:
        etas.append(eta_min)
    sweep = lower_bound_sweep(params, exp, etas)
    best_lower = max(v for _, v in sweep)
    est = lp_opnorm_numeric(discretize(params, exp, order), seed=seed)
    return NormReport(params=params, p=exp, closed_form=closed,
                      schur_max_ratio_right=right, schur_max_ratio_left=left,
                      sweep_best_lower=best_lower, nystrom_estimate=est,
                      rel_gap_lower=(closed - best_lower) / closed,
                      rel_gap_nystrom=(closed - est) / closed)
