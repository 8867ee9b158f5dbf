"""Exact operator norms of a hypergeometric-kernel integral operator.

The package evaluates the operator

    (F phi)(s) = mu * integral_0^1 (1-t)^sigma 2F1(lam,lam;mu;s*t) phi(t) t^(mu-1) dt,

with lam = (mu+sigma+1)/2, on the weighted spaces L^p((0,1), mu t^(mu-1) dt),
and cross-checks its closed-form operator norm by independent numerical
routes (Schur-test majorants, extremal-family lower bounds, discretized
power iteration).  A second layer transfers the interval results to the
maximal Bergman projection and the Berezin transform on the unit ball.
"""

__version__ = "0.1.0"

__all__ = ["__version__"]
