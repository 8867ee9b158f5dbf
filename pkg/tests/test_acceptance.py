"""End-to-end acceptance gate: ten numbered criteria, one test and one
printed pass/fail line each.

Every criterion pits a closed form against at least one independently
computed numeric route at a stated tolerance.  The lines are printed
outside pytest's capture so the verdict is visible in any run log.

Criterion 6 contains a sub-assertion (the order-256 discrete estimate
landing inside [0.90*pi, pi]) that the implementation cannot meet: the
Nystrom spectrum converges to the norm like 1/log(order) because the
kernel's diagonal supremum diverges logarithmically, and at order 256 the
estimate sits at 0.8632*pi (order 512: 0.8808*pi; reaching 0.90*pi needs
order around 2000).  The test states the requirement faithfully and is
expected to fail; every other assertion in it passes.
"""

import math

import numpy as np
import pytest

from bergnorm.ball import (
    BallParams,
    berezin_apply_disc,
    berezin_norm,
    bloch_constants,
    c_sigma,
    radial_apply,
    tilde_apply_disc,
    tilde_norm_formula,
)
from bergnorm.cli import (
    beta_average_check,
    euler_integral_check,
    euler_transform_check,
    value_at_one_check,
)
from bergnorm.intop import (
    OperatorParams,
    UnboundedOperatorError,
    discretize,
    norm_formula,
)
from bergnorm.normest import (
    bilinear_form_closed,
    bilinear_form_numeric,
    family_on_path,
    l1_norm_numeric,
    l2_opnorm_svd,
    lp_opnorm_numeric,
    make_extremal_family,
    norm_report,
    schur_check,
)
from bergnorm.specfun import log_gamma

DRAWS = 120
SEED = 2026


def _announce(capsys, num: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"[acceptance {num:02d}] {'PASS' if ok else 'FAIL'} {detail}")


def test_criterion_01_identity_suite(capsys):
    """Four hypergeometric identities, each on 120 randomized draws."""
    rng = np.random.default_rng(SEED)
    results = {
        "euler-integral": euler_integral_check(rng, DRAWS, 128),
        "euler-transform": euler_transform_check(rng, DRAWS),
        "beta-average": beta_average_check(rng, DRAWS, 128),
        "value-at-one": value_at_one_check(rng, DRAWS, 256),
    }
    worst = max(results.values())
    _announce(capsys, 1, worst < 1e-7,
              f"identity suite: 4 identities x {DRAWS} draws, "
              f"worst rel err {worst:.2e} (tol 1e-7)")
    for name, err in results.items():
        assert err < 1e-7, f"{name}: worst relative error {err:.3e}"


def test_criterion_02_l1_norm(capsys):
    """Column-mass supremum vs the closed L^1 norm; divergence at sigma=0."""
    worst = 0.0
    for mu in (1.0, 2.0, 3.0):
        for sigma in (0.5, 1.0, 2.0):
            params = OperatorParams(mu=mu, sigma=sigma)
            lam = params.lam
            closed = math.exp(log_gamma(mu + 1.0) + log_gamma(sigma)
                              - 2.0 * log_gamma(lam))
            numeric = l1_norm_numeric(params)
            worst = max(worst, abs(numeric - closed) / closed)
    detections = []
    for mu in (1.0, 2.0, 3.0):
        params = OperatorParams(mu=mu, sigma=0.0)
        with pytest.raises(UnboundedOperatorError) as err:
            norm_formula(params, 1.0)
        report = norm_report(params, 1.0)
        detections.append(err.value.growth == "logarithmic"
                          and report.divergence_flagged)
    ok = worst < 1e-6 and all(detections)
    _announce(capsys, 2, ok,
              f"L1 norm: 3x3 grid worst rel err {worst:.2e} (tol 1e-6); "
              f"sigma=0 divergence detected+logarithmic at mu=1,2,3: "
              f"{all(detections)}")
    assert worst < 1e-6
    assert all(detections)


def test_criterion_03_schur_suite(capsys):
    """Both Schur ratios bounded by and approaching the closed constant."""
    worst_excess = 0.0
    worst_gap = 0.0
    for mu in (1.0, 2.0, 3.0):
        for sigma in (0.5, 1.0, 2.0):
            for p in (4.0 / 3.0, 2.0, 4.0):
                params = OperatorParams(mu=mu, sigma=sigma)
                closed = norm_formula(params, p)
                right, left = schur_check(params, p)
                for value in (right, left):
                    worst_excess = max(worst_excess, (value - closed) / closed)
                    worst_gap = max(worst_gap, (closed - value) / closed)
    ok = worst_excess <= 1e-6 and worst_gap <= 1e-2
    _announce(capsys, 3, ok,
              f"Schur suite: 27 combos, worst excess {worst_excess:.2e} "
              f"(tol 1e-6), worst shortfall {worst_gap:.2e} (tol 1e-2)")
    assert worst_excess <= 1e-6
    assert worst_gap <= 1e-2


# fractions of the exact norm recovered at eta = 1e-4, frozen from the
# oracle sweep that fixed these thresholds
_SWEEP_CASES = [
    # (mu, sigma, p, threshold, frozen fraction)
    (1.0, 0.0, 2.0, 0.999, 0.999911),
    (2.0, 0.5, 2.0, 0.99, 0.999891),
    (1.0, 1.0, 2.0, 0.99, 0.999889),
    (3.0, 2.0, 2.0, 0.99, 0.999861),
    (1.0, 0.5, 4.0 / 3.0, 0.99, 0.999954),
    (2.0, 1.0, 3.0, 0.99, 0.999772),
]


def test_criterion_04_lower_bound_sweep(capsys):
    """The extremal-family bilinear form recovers the norm along the path."""
    outcomes = []
    for mu, sigma, p, threshold, frozen in _SWEEP_CASES:
        params = OperatorParams(mu=mu, sigma=sigma)
        fam = family_on_path(params, p, 1e-4)
        fraction = bilinear_form_closed(params, fam) / norm_formula(params, p)
        outcomes.append((fraction, threshold, frozen))
    ok = all(f >= t and abs(f - z) < 1e-4 for f, t, z in outcomes)
    flagship = outcomes[0][0]
    _announce(capsys, 4, ok,
              f"lower-bound sweep at eta=1e-4: flagship fraction "
              f"{flagship:.6f} (>= 0.999), five others all >= 0.99")
    for (fraction, threshold, frozen), case in zip(outcomes, _SWEEP_CASES):
        assert fraction >= threshold, f"case {case[:3]}: {fraction:.6f}"
        assert abs(fraction - frozen) < 1e-4, f"case {case[:3]} drifted"


def test_criterion_05_closed_numeric_twin(capsys):
    """Closed bilinear value vs independent double quadrature, 60 draws."""
    rng = np.random.default_rng(42)
    worst = 0.0
    for _ in range(60):
        mu = rng.uniform(0.5, 3.0)
        sigma = rng.uniform(0.0, 2.0)
        p = rng.uniform(1.2, 4.0)
        theta = rng.uniform(1.05, 3.0)
        theta_tilde = rng.uniform(-0.9, 1.5)
        params = OperatorParams(mu=mu, sigma=sigma)
        fam = make_extremal_family(params, p, theta, theta_tilde)
        closed = bilinear_form_closed(params, fam)
        numeric = bilinear_form_numeric(params, fam, order=192)
        worst = max(worst, abs(closed - numeric) / abs(closed))
    _announce(capsys, 5, worst < 1e-7,
              f"closed/numeric bilinear twin: 60 draws, worst rel err "
              f"{worst:.2e} (tol 1e-7)")
    assert worst < 1e-7


# deterministic power-method estimates for (mu=1, sigma=0, p=2), frozen
_POWER_ESTIMATES = {64: 2.5599901159, 128: 2.6443166899,
                    256: 2.7119779576, 512: 2.7669691859}


def test_criterion_06_discretized_p_norm(capsys):
    """Discrete estimates: monotone, svd-consistent, and (unmet) the
    order-256 window [0.90*pi, pi]; see the module docstring."""
    params = OperatorParams(mu=1.0, sigma=0.0)
    estimates = {}
    for order in (64, 128, 256, 512):
        disc = discretize(params, 2.0, order)
        estimates[order] = lp_opnorm_numeric(disc, seed=0)
        if order == 256:
            svd_gap = abs(estimates[order] - l2_opnorm_svd(disc))
    orders = sorted(estimates)
    nondecreasing = all(estimates[a] <= estimates[b] + 1e-6
                        for a, b in zip(orders, orders[1:]))
    est256 = estimates[256]
    in_window = 0.90 * math.pi <= est256 <= math.pi
    _announce(capsys, 6, nondecreasing and svd_gap < 1e-8 and in_window,
              f"discrete p-norm: nondecreasing={nondecreasing}, "
              f"svd gap {svd_gap:.1e} (tol 1e-8), order-256 estimate "
              f"{est256:.4f} = {est256 / math.pi:.4f}*pi vs window "
              f"[0.90*pi, pi] -> {'inside' if in_window else 'below'}")
    for order, frozen in _POWER_ESTIMATES.items():
        assert estimates[order] == pytest.approx(frozen, rel=1e-6)
    assert nondecreasing
    assert svd_gap < 1e-8
    assert est256 <= math.pi
    assert est256 >= 0.90 * math.pi, (
        f"order-256 estimate {est256:.6f} = {est256 / math.pi:.4f}*pi is "
        "below 0.90*pi: the discrete spectrum closes its gap like "
        "1/log(order) (0.8417*pi at 128, 0.8632*pi at 256, 0.8808*pi at "
        "512), so this window needs order ~2000")


def test_criterion_07_ball_bridge(capsys):
    """tilde norm = c_sigma * interval norm on a 4x4x4 grid, plus the two
    printed disc values."""
    worst = 0.0
    for n in (1, 2, 3, 4):
        for sigma in (0.0, 0.5, 1.0, 2.5):
            for p in (1.25, 2.0, 3.0, 5.0):
                bp = BallParams(n=n, sigma=sigma)
                tilde = tilde_norm_formula(bp, p)
                bridge = c_sigma(n, sigma) * norm_formula(bp.interval_params, p)
                worst = max(worst, abs(tilde - bridge) / tilde)
    pi_val = tilde_norm_formula(BallParams(1, 0.0), 2.0)
    disc_val = tilde_norm_formula(BallParams(1, 1.0), 1.0)
    ok = (worst < 1e-12
          and abs(pi_val - math.pi) < 1e-12
          and abs(disc_val - 8.0 / math.pi) < 1e-12)
    _announce(capsys, 7, ok,
              f"ball bridge: 64 combos worst rel dev {worst:.2e} "
              f"(tol 1e-12); (1,0,2) = pi and (1,1,1) = 8/pi confirmed")
    assert worst < 1e-12
    assert pi_val == pytest.approx(math.pi, abs=1e-12)
    assert disc_val == pytest.approx(8.0 / math.pi, abs=1e-12)


def test_criterion_08_berezin_norms(capsys):
    """Product formula vs double factorials, the sup limit, and the p->1
    blowup rate."""
    worst_df = 0.0
    for n in range(1, 11):
        odd = math.prod(range(1, 2 * n + 2, 2))    # (2n+1)!!
        even = math.prod(range(2, 2 * n + 1, 2))   # (2n)!!
        target = odd / even * math.pi / 2.0
        worst_df = max(worst_df,
                       abs(berezin_norm(n, 2.0) - target) / target)
    sup_exact = all(berezin_norm(n, math.inf) == 1.0 for n in range(1, 11))
    worst_asym = max(abs(berezin_norm(n, 1.001) / ((n + 1.0) / 0.001) - 1.0)
                     for n in (1, 2, 3))
    ok = worst_df < 1e-12 and sup_exact and worst_asym < 5e-3
    _announce(capsys, 8, ok,
              f"berezin norms: double-factorial rel dev {worst_df:.2e} "
              f"(tol 1e-12), p=inf exactly 1: {sup_exact}, p=1.001 "
              f"asymptote dev {worst_asym:.2e} (tol 5e-3)")
    assert worst_df < 1e-12
    assert sup_exact
    assert worst_asym < 5e-3


_DISC_POINTS = (0.0 + 0.0j, 0.3 + 0.0j, 0.5 + 0.2j, 0.6j, -0.7 + 0.0j,
                0.45 - 0.45j, 0.9 + 0.0j, 0.9j, -0.63 - 0.63j)


def test_criterion_09_disc_cross_checks(capsys):
    """Direct polar quadrature: probability, harmonic fixed points, and
    agreement with the radial reduction."""
    worst_one = max(abs(berezin_apply_disc(lambda w: 1.0, z) - 1.0)
                    for z in _DISC_POINTS)
    worst_harm = max(abs(berezin_apply_disc(lambda w: np.real(w), z) - z.real)
                     for z in (0.0 + 0.0j, 0.3 + 0.0j, 0.6j))
    profile = lambda s: np.exp(-s) + 0.25 * s
    f = lambda w: profile(np.abs(w) ** 2)
    worst_radial = 0.0
    for sigma in (0.0, 1.0, 2.0):
        bp = BallParams(n=1, sigma=sigma)
        for r in (0.0, 0.4, 0.8):
            direct = tilde_apply_disc(sigma, f, complex(r, 0.0))
            reduced = radial_apply(bp, profile, r * r)
            worst_radial = max(worst_radial, abs(direct - reduced))
    ok = worst_one < 1e-8 and worst_harm < 1e-6 and worst_radial < 1e-6
    _announce(capsys, 9, ok,
              f"disc cross-checks: constant {worst_one:.1e} (tol 1e-8), "
              f"harmonic {worst_harm:.1e} (tol 1e-6), radial-vs-polar "
              f"{worst_radial:.1e} (tol 1e-6)")
    assert worst_one < 1e-8
    assert worst_harm < 1e-6
    assert worst_radial < 1e-6


def test_criterion_10_bloch_constants(capsys):
    """The unweighted disc projection into the Bloch space."""
    consts = bloch_constants(BallParams(1, 0.0))
    dev = max(abs(consts.beta_norm - 8.0 / math.pi),
              abs(consts.full_norm - (1.0 + 8.0 / math.pi)))
    _announce(capsys, 10, dev < 1e-12,
              f"Bloch constants: 8/pi and 1+8/pi to {dev:.1e} (tol 1e-12)")
    assert dev < 1e-12
