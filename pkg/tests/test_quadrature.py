"""Tests for the Gauss-Jacobi rules on (0,1)."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bergnorm.quadrature import (
    QuadratureError,
    integrate_weighted,
    make_jacobi_rule,
)
from bergnorm.specfun import HypArgs, beta_fn, hyp2f1


def test_total_mass_matches_beta_function():
    for order, alpha, beta in [(4, 0.0, 0.0), (64, 0.5, -0.5), (64, 2.0, 1.0),
                               (128, -0.9, 3.3), (1, 0.2, 0.2)]:
        rule = make_jacobi_rule(order, alpha, beta)
        assert rule.total_mass == pytest.approx(beta_fn(alpha + 1.0, beta + 1.0),
                                                rel=5e-15)


def test_nodes_inside_open_interval_and_sorted():
    rule = make_jacobi_rule(96, -0.5, 2.0)
    assert rule.nodes[0] > 0.0 and rule.nodes[-1] < 1.0
    assert np.all(np.diff(rule.nodes) > 0.0)
    assert np.all(rule.weights > 0.0)


def test_polynomial_exactness_to_degree_2n_minus_1():
    # order-n Gauss rules integrate monomials t^d exactly through d = 2n-1:
    # integral t^(alpha+d) (1-t)^beta dt = B(alpha+d+1, beta+1)
    rule = make_jacobi_rule(6, 1.3, 0.7)
    for d in range(12):
        got = float(rule.weights @ rule.nodes ** d)
        want = beta_fn(1.3 + d + 1.0, 0.7 + 1.0)
        assert got == pytest.approx(want, rel=1e-13)


def test_endpoint_singularities_live_in_the_weight():
    # integral_0^1 t^(-1/2) (1-t)^(-1/2) dt = pi, with f identically 1 --
    # no sampled value ever touches the singular factors
    rule = make_jacobi_rule(8, -0.5, -0.5)
    assert rule.total_mass == pytest.approx(math.pi, rel=1e-14)


def test_legendre_special_case():
    rule = make_jacobi_rule(20, 0.0, 0.0)
    got = float(rule.weights @ np.cos(rule.nodes))
    assert got == pytest.approx(math.sin(1.0), rel=1e-14)


def test_integrate_weighted_normalization():
    # the measure mu t^(mu-1) dt has total mass exactly 1 when sigma = 0
    for mu in (0.5, 1.0, 2.0, 3.7):
        got = integrate_weighted(lambda t: np.ones_like(t), mu, 0.0, 16)
        assert got == pytest.approx(1.0, rel=1e-14)


def test_integrate_weighted_euler_formula_route():
    # 2F1 via its integral representation:
    # F(a,b;c;z) = 1/B(b,c-b) int t^(b-1) (1-t)^(c-b-1) (1-zt)^(-a) dt
    a, b, c, z = 1.7, 0.8, 2.1, 0.6
    rule = make_jacobi_rule(128, b - 1.0, c - b - 1.0)
    got = float(rule.weights @ (1.0 - z * rule.nodes) ** (-a)) / beta_fn(b, c - b)
    assert got == pytest.approx(hyp2f1(HypArgs(a, b, c, z)), rel=1e-12)


def test_integrate_weighted_scalar_fallback():
    # a callable that only understands scalars still works
    got = integrate_weighted(lambda t: math.exp(t), 1.0, 0.0, 32)
    assert got == pytest.approx(math.e - 1.0, rel=1e-13)


def test_parameter_validation():
    with pytest.raises(ValueError):
        make_jacobi_rule(0, 0.0, 0.0)
    with pytest.raises(ValueError):
        make_jacobi_rule(8, -1.0, 0.0)
    with pytest.raises(ValueError):
        make_jacobi_rule(8, 0.0, -1.5)
    with pytest.raises(ValueError):
        integrate_weighted(lambda t: t, 0.0)
    with pytest.raises(ValueError):
        integrate_weighted(lambda t: t, -2.0)


def test_rules_are_cached_and_frozen():
    r1 = make_jacobi_rule(32, 0.5, 1.5)
    r2 = make_jacobi_rule(32, 0.5, 1.5)
    assert r1 is r2
    with pytest.raises(ValueError):
        r1.nodes[0] = 0.5  # read-only array


def test_integrate_shape_check():
    rule = make_jacobi_rule(16, 0.0, 0.0)
    with pytest.raises(ValueError):
        rule.integrate(np.ones(15))


@given(st.floats(min_value=-0.9, max_value=3.0),
       st.floats(min_value=-0.9, max_value=3.0),
       st.floats(min_value=-2.0, max_value=2.0))
@settings(max_examples=40, deadline=None)
def test_order_doubling_stability(alpha, beta, coeff):
    # doubling the order must not move the integral of a smooth function:
    # the degree-of-exactness argument makes both virtually exact
    f = lambda t: np.exp(coeff * t)
    r1 = make_jacobi_rule(64, alpha, beta)
    r2 = make_jacobi_rule(128, alpha, beta)
    i1 = float(r1.weights @ f(r1.nodes))
    i2 = float(r2.weights @ f(r2.nodes))
    assert i1 == pytest.approx(i2, rel=1e-10, abs=1e-300)


@given(st.floats(min_value=0.2, max_value=4.0),
       st.floats(min_value=-0.5, max_value=3.0))
@settings(max_examples=40, deadline=None)
def test_integrate_weighted_first_moment(mu, sigma):
    # integral t * mu t^(mu-1) (1-t)^sigma dt = mu B(mu+1, sigma+1)
    got = integrate_weighted(lambda t: t, mu, sigma, 32)
    want = mu * beta_fn(mu + 1.0, sigma + 1.0)
    assert got == pytest.approx(want, rel=1e-12)
