"""Scalar special functions used throughout the package.

Everything here is self-contained double-precision code: a fixed-coefficient
Lanczos log-gamma, a shift-plus-asymptotic digamma, Pochhammer symbols, the
Euler beta function, and a Gauss hypergeometric evaluator 2F1(a,b;c;z) for
real parameters and z in [0,1].

The 2F1 evaluator picks between three routes:

  * the raw power series (z <= 0.7, or whenever it terminates),
  * the Euler transform (1-z)^(c-a-b) * 2F1(c-a,c-b;c;z) when z > 0.7 and
    the transform improves the convergence exponent c-a-b,
  * a connection-formula evaluation in powers of w = 1-z when z is within
    _NEAR_ONE_W of 1, where both series above need ~1/(1-z) terms and blow
    past the term cap.  The connection route handles the generic
    (non-integer c-a-b) case and the logarithmic (integer) case.

Series termination: a term below 1e-16 of the partial sum three times in a
row, with a hard cap of 100000 terms; exceeding the cap raises
ConvergenceError.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ConvergenceError",
    "DivergenceError",
    "HypArgs",
    "SupResult",
    "beta_fn",
    "diag_sup",
    "digamma",
    "hyp2f1",
    "hyp2f1_at_one",
    "hyp2f1_grid",
    "log_gamma",
    "pochhammer",
]

_SERIES_RTOL = 1e-16
_SERIES_CONSEC = 3
_SERIES_CAP = 100_000
_RAW_SERIES_Z = 0.7
_NEAR_ONE_W = 5e-3      # switch to connection formulas when 1-z is below this
_INT_SNAP = 1e-6        # treat c-a-b this close to an integer as the log case
_POCH_LOG_SWITCH = 32   # product path below this k (exact recurrence), log path above

# 14-term Lanczos coefficients (g = 671/128); relative error < 2e-15 on the
# positive real axis, which is what the reflection step below leans on.
_LANCZOS_G = 671.0 / 128.0
_LANCZOS_COF = (
    57.1562356658629235, -59.5979603554754912, 14.1360979747417471,
    -0.491913816097620199, 0.339946499848118887e-4, 0.465236289270485756e-4,
    -0.983744753048795646e-4, 0.158088703224912494e-3, -0.210264441724104883e-3,
    0.217439618115212643e-3, -0.164318106536763890e-3, 0.844182239838527433e-4,
    -0.261908384015814087e-4, 0.368991826595316234e-5,
)
_LANCZOS_C0 = 0.999999999999997092
_SQRT_2PI = 2.5066282746310005


class ConvergenceError(RuntimeError):
    """A series or iteration failed to converge within its budget."""


class DivergenceError(ValueError):
    """A quantity that is genuinely infinite was requested.

    Carries a growth classification so callers can report *how* the
    divergence happens: ``growth`` is "logarithmic" or "power", and for the
    power class ``exponent`` is the (negative) exponent of (1-r).
    """

    def __init__(self, message, growth=None, coefficient=None, exponent=None):
        super().__init__(message)
        self.growth = growth
        self.coefficient = coefficient
        self.exponent = exponent


def _lanczos_positive(x: float) -> float:
    # Valid for x > 0; callers handle reflection.
    tmp = x + _LANCZOS_G
    tmp = (x + 0.5) * math.log(tmp) - tmp
    ser = _LANCZOS_C0
    y = x
    for c in _LANCZOS_COF:
        y += 1.0
        ser += c / y
    return tmp + math.log(_SQRT_2PI * ser / x)


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0.

    Fixed-coefficient Lanczos shift; arguments below 1/2 go through the
    reflection formula Gamma(x)Gamma(1-x) = pi/sin(pi*x) so the rational
    part is only ever evaluated at arguments >= 1/2.
    """
    if not x > 0.0:
        raise ValueError(f"log_gamma requires x > 0, got {x!r}")
    if x < 0.5:
        return math.log(math.pi / math.sin(math.pi * x)) - _lanczos_positive(1.0 - x)
    return _lanczos_positive(x)


def _log_gamma_signed(x: float) -> tuple[float, float]:
    """(log|Gamma(x)|, sign of Gamma(x)) for any non-pole real x.

    Returns sign 0.0 at the poles (x a non-positive integer), which makes
    1/Gamma factors vanish cleanly in connection coefficients.
    """
    if x > 0.0:
        return log_gamma(x), 1.0
    if x == math.floor(x):
        return math.inf, 0.0
    # reflection: Gamma(x) = pi / (sin(pi x) * Gamma(1-x)), and 1-x > 1 > 0
    s = math.sin(math.pi * x)
    return math.log(math.pi / abs(s)) - _lanczos_positive(1.0 - x), math.copysign(1.0, s)


def gamma_ratio_log(num: tuple[float, ...], den: tuple[float, ...]) -> float:
    """exp(sum log Gamma(num) - sum log Gamma(den)) with signs carried through."""
    total, sign = 0.0, 1.0
    for x in num:
        lg, s = _log_gamma_signed(x)
        if s == 0.0:
            raise ValueError(f"Gamma pole at {x} in numerator")
        total += lg
        sign *= s
    for x in den:
        lg, s = _log_gamma_signed(x)
        if s == 0.0:
            return 0.0  # 1/Gamma(pole) = 0
        total -= lg
        sign *= s
    return sign * math.exp(total)


def digamma(x: float) -> float:
    """psi(x) = d/dx log Gamma(x), for real non-pole x.

    Recurrence pushes the argument above 8, then a Bernoulli-number
    asymptotic series; negative arguments use the reflection
    psi(x) = psi(1-x) - pi/tan(pi*x).
    """
    if x <= 0.0:
        if x == math.floor(x):
            raise ValueError(f"digamma pole at {x}")
        return digamma(1.0 - x) - math.pi / math.tan(math.pi * x)
    acc = 0.0
    while x < 8.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    # Bernoulli tail: 1/12, -1/120, 1/252, -1/240, 1/132, -691/32760, 1/12
    tail = inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 * (
        1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0 - inv2 / 12.0))))))
    return acc + math.log(x) - 0.5 / x - tail


def pochhammer(q: float, k: int) -> float:
    """Rising factorial (q)_k = q (q+1) ... (q+k-1), with (q)_0 = 1.

    Small k (and every non-positive q) use the literal left-to-right
    product, so the recurrence (q)_{k+1} = (q)_k * (q+k) holds exactly in
    floating point on that path.  Large positive q+k go through log-gamma.
    """
    if k < 0 or k != int(k):
        raise ValueError(f"pochhammer order must be a non-negative integer, got {k!r}")
    k = int(k)
    if k == 0:
        return 1.0
    if q > 0.0 and k > _POCH_LOG_SWITCH:
        return math.exp(log_gamma(q + k) - log_gamma(q))
    out = 1.0
    for i in range(k):
        out *= q + i
    return out


def beta_fn(a: float, b: float) -> float:
    """Euler beta B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), a,b > 0, via logs."""
    if not (a > 0.0 and b > 0.0):
        raise ValueError(f"beta_fn requires positive arguments, got ({a!r}, {b!r})")
    return math.exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b))


@dataclass(frozen=True)
class HypArgs:
    """Argument bundle for 2F1(a,b;c;z) with the domain this package needs.

    Real parameters, z in [0,1]; c must not be a non-positive integer, and
    z = 1 is only admitted when c-a-b > 0 (otherwise the function has no
    finite value there).
    """

    a: float
    b: float
    c: float
    z: float

    def __post_init__(self):
        if self.c <= 0.0 and self.c == math.floor(self.c):
            raise ValueError(f"2F1 parameter c must not be a non-positive integer, got {self.c!r}")
        if not 0.0 <= self.z <= 1.0:
            raise ValueError(f"2F1 argument z must lie in [0,1], got {self.z!r}")
        if self.z == 1.0 and self.c - self.a - self.b <= 0.0:
            d = self.c - self.a - self.b
            raise DivergenceError(
                f"2F1 diverges at z=1 when c-a-b = {d} <= 0",
                growth="logarithmic" if d == 0.0 else "power",
                exponent=d if d < 0.0 else None,
            )


def _is_nonpos_int(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def _series(a: float, b: float, c: float, z: float) -> float:
    """Raw defining series; c may be any real that never hits a zero factor."""
    term = 1.0
    total = 1.0
    small = 0
    for k in range(_SERIES_CAP):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
        if term == 0.0:
            return total
        if abs(term) < _SERIES_RTOL * abs(total):
            small += 1
            if small >= _SERIES_CONSEC:
                return total
        else:
            small = 0
    raise ConvergenceError(
        f"2F1 series exceeded {_SERIES_CAP} terms at (a={a}, b={b}, c={c}, z={z})")


def hyp2f1_at_one(a: float, b: float, c: float) -> float:
    """Gauss summation: 2F1(a,b;c;1) = G(c)G(c-a-b)/(G(c-a)G(c-b)), c-a-b>0."""
    d = c - a - b
    if d <= 0.0:
        raise DivergenceError(
            f"2F1(a,b;c;1) requires c-a-b > 0, got {d}",
            growth="logarithmic" if d == 0.0 else "power",
            exponent=d if d < 0.0 else None,
        )
    return gamma_ratio_log((c, d), (c - a, c - b))


def _near_one(a: float, b: float, c: float, z: float) -> float:
    """Evaluate 2F1 in powers of w = 1-z via connection formulas.

    Normalizes first so the effective exponent d = c-a-b is positive
    (applying the Euler transform when it is negative), then uses the
    generic two-series connection formula, or its logarithmic limit when d
    sits (numerically) on a non-negative integer.
    """
    w = 1.0 - z
    d = c - a - b
    prefactor_log = 0.0
    if d < 0.0:
        prefactor_log = d * math.log(w)
        a, b = c - a, c - b
        d = -d
    m = round(d)
    if abs(d - m) > _INT_SNAP:
        # generic case: two analytic series in w
        s1 = gamma_ratio_log((c, d), (c - a, c - b))
        s2 = gamma_ratio_log((c, -d), (a, b))
        val = (s1 * _series(a, b, 1.0 - d, w)
               + s2 * math.exp(d * math.log(w)) * _series(c - a, c - b, 1.0 + d, w))
        return math.exp(prefactor_log) * val
    # logarithmic case, c = a + b + m with integer m >= 0
    m = int(m)
    logw = math.log(w)
    if m == 0:
        front = gamma_ratio_log((c,), (a, b))
        total = 0.0
        term = 1.0  # (a)_n (b)_n / (n!)^2 * w^n
        for n in range(_SERIES_CAP):
            bracket = 2.0 * digamma(n + 1.0) - digamma(a + n) - digamma(b + n) - logw
            total += term * bracket
            term *= (a + n) * (b + n) / ((n + 1.0) * (n + 1.0)) * w
            if abs(term) < _SERIES_RTOL * abs(total) and n > 2:
                break
        return math.exp(prefactor_log) * front * total
    finite = 0.0
    term = 1.0  # (a)_n (b)_n / (n! (1-m)_n) * w^n
    for n in range(m):
        finite += term
        if n + 1 < m:
            term *= (a + n) * (b + n) / ((n + 1.0) * (1.0 - m + n)) * w
    first = gamma_ratio_log((float(m), c), (a + m, b + m)) * finite
    ga, sa = _log_gamma_signed(a)
    gb, sb = _log_gamma_signed(b)
    if sa == 0.0 or sb == 0.0:
        second = 0.0  # 1/Gamma pole kills the logarithmic branch
    else:
        front = sa * sb * math.exp(log_gamma(c) - ga - gb + m * logw)
        total = 0.0
        term = 1.0 / math.exp(log_gamma(m + 1.0))  # (a+m)_n (b+m)_n / (n! (n+m)!) * w^n
        for n in range(_SERIES_CAP):
            bracket = (logw - digamma(n + 1.0) - digamma(n + m + 1.0)
                       + digamma(a + n + m) + digamma(b + n + m))
            total += term * bracket
            term *= (a + m + n) * (b + m + n) / ((n + 1.0) * (n + m + 1.0)) * w
            if abs(term * logw) < _SERIES_RTOL * abs(total) and n > 2:
                break
        second = -((-1.0) ** m) * front * total
    return math.exp(prefactor_log) * (first + second)


def _hyp2f1(a: float, b: float, c: float, z: float) -> float:
    """Strategy dispatcher; assumes the HypArgs domain has been validated."""
    if z == 0.0:
        return 1.0
    if _is_nonpos_int(a) or _is_nonpos_int(b):
        return _series(a, b, c, z)  # terminating polynomial
    if z == 1.0:
        return hyp2f1_at_one(a, b, c)
    if z <= _RAW_SERIES_Z:
        return _series(a, b, c, z)
    d = c - a - b
    if d < 0.0 and (_is_nonpos_int(c - a) or _is_nonpos_int(c - b)):
        # transform side terminates: exact, any z
        return (1.0 - z) ** d * _series(c - a, c - b, c, z)
    if 1.0 - z < _NEAR_ONE_W:
        return _near_one(a, b, c, z)
    if d < 0.0:
        # Euler transform raises the convergence exponent to -d > 0
        return (1.0 - z) ** d * _series(c - a, c - b, c, z)
    return _series(a, b, c, z)


def hyp2f1(args: HypArgs) -> float:
    """Gauss hypergeometric 2F1 on the validated HypArgs domain."""
    return _hyp2f1(args.a, args.b, args.c, args.z)


def _series_vec(a: float, b: float, c: float, z: np.ndarray) -> np.ndarray:
    """Chunked, masked vector version of the raw series (shared parameters)."""
    out = np.ones_like(z)
    term = np.ones_like(z)
    small = np.zeros(z.shape, dtype=np.int64)
    active = np.arange(z.size)
    zf = z.ravel()
    outf = out.ravel()
    termf = term.ravel()
    smallf = small.ravel()
    k = 0
    while active.size:
        for _ in range(64):
            ratio = (a + k) * (b + k) / ((c + k) * (k + 1))
            termf[active] *= ratio * zf[active]
            outf[active] += termf[active]
            k += 1
        t = np.abs(termf[active])
        tiny = t < _SERIES_RTOL * np.abs(outf[active])
        smallf[active] = np.where(tiny, smallf[active] + 64, 0)
        active = active[smallf[active] < _SERIES_CONSEC]
        if k >= _SERIES_CAP and active.size:
            raise ConvergenceError(
                f"2F1 series exceeded {_SERIES_CAP} terms on a grid; worst z = "
                f"{zf[active].max()} at (a={a}, b={b}, c={c})")
    return out


def hyp2f1_grid(a: float, b: float, c: float, z: np.ndarray) -> np.ndarray:
    """2F1(a,b;c;z) over an array of arguments in [0,1), shared parameters.

    Same route selection as the scalar evaluator; the handful of entries in
    the near-one window fall back to scalar connection-formula calls.
    """
    z = np.asarray(z, dtype=float)
    if z.size and (z.min() < 0.0 or z.max() >= 1.0):
        raise ValueError("hyp2f1_grid needs 0 <= z < 1")
    out = np.empty_like(z)
    d = c - a - b
    if _is_nonpos_int(a) or _is_nonpos_int(b):
        return _series_vec(a, b, c, z)
    low = z <= _RAW_SERIES_Z
    if np.any(low):
        out[low] = _series_vec(a, b, c, z[low])
    high = ~low
    if not np.any(high):
        return out
    transform_terminates = d < 0.0 and (_is_nonpos_int(c - a) or _is_nonpos_int(c - b))
    near = high & (1.0 - z < _NEAR_ONE_W)
    if transform_terminates:
        near &= False  # the transformed series is exact arbitrarily close to 1
    mid = high & ~near
    if np.any(mid):
        zm = z[mid]
        if d < 0.0:
            out[mid] = (1.0 - zm) ** d * _series_vec(c - a, c - b, c, zm)
        else:
            out[mid] = _series_vec(a, b, c, zm)
    if np.any(near):
        out[near] = np.array([_near_one(a, b, c, zz) for zz in z[near]])
    return out


@dataclass(frozen=True)
class SupResult:
    """Classification of sup over r in (0,1) of 2F1(x,x;y;r).

    kind "bounded": value is the (finite) supremum, attained at r -> 1.
    kind "logarithmic": grows like value * log(1/(1-r)).
    kind "power": grows like value * (1-r)**exponent with exponent < 0.
    """

    kind: str
    value: float
    exponent: float | None = None

    @property
    def bounded(self) -> bool:
        return self.kind == "bounded"


def diag_sup(x: float, y: float) -> SupResult:
    """Boundedness trichotomy for 2F1(x,x;y;r) on (0,1), keyed by y - 2x.

    The series has non-negative coefficients (the numerator parameters are
    equal, so each coefficient is a square over a positive factor), hence
    the function is nondecreasing and its sup is the r -> 1 limit.
    """
    if y <= 0.0:
        raise ValueError(f"diag_sup requires y > 0, got {y!r}")
    gap = y - 2.0 * x
    if gap > 0.0:
        return SupResult("bounded", gamma_ratio_log((y, gap), (y - x, y - x)))
    if gap == 0.0:
        return SupResult("logarithmic", gamma_ratio_log((2.0 * x,), (x, x)))
    return SupResult("power", gamma_ratio_log((y, -gap), (x, x)), exponent=gap)
