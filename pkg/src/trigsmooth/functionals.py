"""The smoothness-class functional in its four equivalent forms, and membership
tests against a majorant.

All four forms sample the same object at scale 1/n:

- integral form: (int_0^d t^{-r*th-1} w^th dt + d^{l*th} int_d^1 t^{-(r+l)*th-1} w^th dt)^{1/th},
  evaluated at d = 1/(n+1) on the harmonic partition [1/(nu+1), 1/nu] with the
  modulus frozen at w(1/nu) on each cell;
- series form over moduli: (sum_{nu>n} w(1/nu)^th nu^{r*th-1}
  + n^{-l*th} sum_{nu<=n} w(1/nu)^th nu^{(r+l)*th-1})^{1/th};
- coefficient form for monotone series: the same shape with w(1/nu) replaced by
  a_nu nu^{1-1/p};
- coefficient form for lacunary series and the dyadic best-approximation form.

Infinite sums are truncated with a fitted power-law remainder added back; when the
remainder is a non-trivial fraction of the partial sum a TruncationWarning (carrying
the fraction) is emitted rather than silently biasing the value.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import zeta as hurwitz_zeta

from .approximation import best_approx, power_sum_tail
from .core import ClassParams, CosineSeries, FunctionalCurve, MajorantPhi
from .errors import DomainError, TagError, TruncationWarning
from .function_model import (
    DEFAULT_H_SAMPLES,
    ModulusRequest,
    auto_grid_size,
    modulus,
    modulus_p2_exact,
)

#: smallest truncation range used by the omega-based forms
MIN_NU_MAX = 1024
#: least-squares slope threshold of the boundedness verdict
DEFAULT_SLOPE_TOL = 0.02
#: remainder / partial-sum fraction above which a TruncationWarning is emitted
TRUNCATION_WARN_FRACTION = 0.01


class ModulusTable:
    """Cached evaluations of w(1/nu) for one (series, k, p) triple.

    Uses the closed-form Parseval path at p = 2 and the quadrature grid path
    otherwise; ``path`` records which one, for reproducibility.
    """

    def __init__(self, series: CosineSeries, k: int, p: float,
                 h_samples: int = DEFAULT_H_SAMPLES, grid_n: int | None = None):
        self.series = series
        self.k = int(k)
        self.p = float(p)
        self.h_samples = int(h_samples)
        self.path = "p2_exact" if p == 2.0 else "grid"
        self._grid_n = grid_n if grid_n is not None else auto_grid_size(series)
        self._cache: dict[int, float] = {}

    def omega_at(self, nu: int) -> float:
        """w(1/nu) for a positive integer nu."""
        got = self._cache.get(nu)
        if got is not None:
            return got
        t = 1.0 / nu
        if self.path == "p2_exact":
            val = modulus_p2_exact(self.series, self.k, t, self.h_samples)
        else:
            req = ModulusRequest(k=self.k, t=t, p=self.p, h_samples=self.h_samples)
            val = modulus(self.series, req, self._grid_n)
        self._cache[nu] = val
        return val

    def omega_upto(self, nu_max: int) -> np.ndarray:
        """Array of w(1/nu) for nu = 1..nu_max."""
        return np.array([self.omega_at(nu) for nu in range(1, nu_max + 1)])


def _power_law_remainder(nus: np.ndarray, terms: np.ndarray) -> tuple[float, float]:
    """Estimate sum of the term sequence beyond nus[-1] from a log-log fit.

    Returns (remainder, fitted_decay_exponent).  A finite-rank tail (trailing
    zeros) gives remainder 0; a fitted exponent too close to 1 gives inf,
    signalling that the truncated series cannot be extrapolated convergently.
    """
    if terms.size == 0 or terms[-1] == 0.0:
        return 0.0, math.inf
    window = (nus >= nus[-1] // 2) & (terms > 0)
    if int(window.sum()) < 4:
        window = terms > 0
    if int(window.sum()) < 2:
        return 0.0, math.inf
    slope = np.polyfit(np.log(nus[window]), np.log(terms[window]), 1)[0]
    q = -float(slope)
    if q <= 1.02:
        return math.inf, q
    last_nu = float(nus[-1])
    scale = float(terms[-1]) * last_nu ** q
    return float(scale * hurwitz_zeta(q, last_nu + 1.0)), q


def _warn_truncation(remainder: float, partial: float, nu_max: int) -> None:
    if remainder == 0.0:
        return
    if not math.isfinite(remainder):
        warnings.warn(TruncationWarning(
            f"tail beyond nu_max={nu_max} does not decay fast enough to extrapolate; "
            "the truncated value diverges", fraction=math.inf))
        return
    if partial > 0 and remainder > TRUNCATION_WARN_FRACTION * partial:
        frac = remainder / partial
        warnings.warn(TruncationWarning(
            f"extrapolated tail is {frac:.2%} of the partial sum (nu_max={nu_max})",
            fraction=frac))


def _delta_to_n(delta: float) -> int:
    n_float = 1.0 / delta - 1.0
    n = int(round(n_float))
    if n < 1 or abs(n_float - n) > 1e-9 * max(1.0, abs(n_float)):
        raise DomainError(f"delta must equal 1/(n+1) for an integer n >= 1, got {delta}")
    return n


def _segment_weights(nus: np.ndarray, a: float) -> np.ndarray:
    """int over [1/(nu+1), 1/nu] of t^(-a-1) dt = ((nu+1)^a - nu^a) / a."""
    return ((nus + 1.0) ** a - nus ** a) / a


def integral_form(series: CosineSeries, params: ClassParams, delta: float,
                  quad_points: int | None = None, table: ModulusTable | None = None) -> float:
    """Integral form of the class functional at delta = 1/(n+1).

    Both integrals are evaluated on the harmonic partition with the modulus frozen
    at w(1/nu) per cell; the singular integral is truncated at quad_points cells
    with a power-law extrapolation of the remainder.
    """
    n = _delta_to_n(delta)
    th, r, lam = params.theta, params.r, params.lam
    nu_max = quad_points if quad_points is not None else max(4 * n, MIN_NU_MAX)
    if nu_max < 4 * n:
        raise DomainError(f"quad_points must be at least 4n = {4 * n}")
    if table is None:
        table = ModulusTable(series, params.k, params.p)
    omega = table.omega_upto(nu_max)

    nus_tail = np.arange(n + 1, nu_max + 1, dtype=float)
    tail_terms = omega[n:] ** th * _segment_weights(nus_tail, r * th)
    partial = float(np.sum(tail_terms))
    remainder, _ = _power_law_remainder(nus_tail, tail_terms)
    _warn_truncation(remainder, partial, nu_max)

    nus_head = np.arange(1, n + 1, dtype=float)
    head = float(np.sum(omega[:n] ** th * _segment_weights(nus_head, (r + lam) * th)))

    total = partial + remainder + delta ** (lam * th) * head
    return float(total ** (1.0 / th))


def series_form(series: CosineSeries, params: ClassParams, n: int,
                nu_max: int | None = None, table: ModulusTable | None = None) -> float:
    """Series form over moduli of the class functional at scale 1/n."""
    if n < 1:
        raise DomainError("n must be >= 1")
    th, r, lam = params.theta, params.r, params.lam
    nu_max = nu_max if nu_max is not None else max(4 * n, MIN_NU_MAX)
    if nu_max < 4 * n:
        raise DomainError(f"nu_max must be at least 4n = {4 * n}")
    if table is None:
        table = ModulusTable(series, params.k, params.p)
    omega = table.omega_upto(nu_max)

    nus_tail = np.arange(n + 1, nu_max + 1, dtype=float)
    tail_terms = omega[n:] ** th * nus_tail ** (r * th - 1.0)
    partial = float(np.sum(tail_terms))
    remainder, _ = _power_law_remainder(nus_tail, tail_terms)
    _warn_truncation(remainder, partial, nu_max)

    nus_head = np.arange(1, n + 1, dtype=float)
    head = float(np.sum(omega[:n] ** th * nus_head ** ((r + lam) * th - 1.0)))

    total = partial + remainder + float(n) ** (-lam * th) * head
    return float(total ** (1.0 / th))


def monotone_coefficient_form(series: CosineSeries, params: ClassParams, n: int) -> float:
    """Coefficient form of the class functional for monotone series.

    (sum_{nu>n} a_nu^th nu^{r*th + th - th/p - 1}
     + n^{-l*th} sum_{nu<=n} a_nu^th nu^{(r+l)*th + th - th/p - 1})^{1/th},
    with the tail summed in closed form when an analytic power-law tail is present.
    """
    if series.tag != "monotone":
        raise TagError(f"coefficient form requires tag 'monotone', got {series.tag!r}")
    if n < 1:
        raise DomainError("n must be >= 1")
    th, r, lam, p = params.theta, params.r, params.lam, params.p
    e_tail = r * th + th - th / p - 1.0
    e_head = (r + lam) * th + th - th / p - 1.0

    head_coeffs = series.coeffs_upto(n)
    nus_head = np.arange(1, n + 1, dtype=float)
    head = float(np.sum(head_coeffs ** th * nus_head ** e_head))

    tail = 0.0
    if n + 1 <= series.n_stored:
        nus_tail = np.arange(n + 1, series.n_stored + 1, dtype=float)
        tail += float(np.sum(series.coeffs[n:] ** th * nus_tail ** e_tail))
    if series.tail is not None:
        t = series.tail
        q = t.s * th - e_tail
        start = max(n + 1, series.n_stored + 1)
        if q <= 1.0:
            warnings.warn(TruncationWarning(
                f"coefficient tail exponent {q} <= 1: the functional diverges",
                fraction=math.inf))
            return math.inf
        tail += power_sum_tail(t.c ** th, q, start)

    return float((tail + float(n) ** (-lam * th) * head) ** (1.0 / th))


def lacunary_coefficient_form(series: CosineSeries, params: ClassParams, m: int) -> float:
    """Coefficient form for lacunary series, reduced to a sum over levels.

    The frequency-indexed sums collapse to the levels mu with 2**mu > m (tail)
    and 2**mu <= m (head), since all other coefficients vanish.
    """
    if series.tag != "lacunary":
        raise TagError(f"lacunary form requires tag 'lacunary', got {series.tag!r}")
    if m < 1:
        raise DomainError("m must be >= 1")
    th, r, lam = params.theta, params.r, params.lam
    a_mu = series.lacunary_view()
    if a_mu.size == 0:
        return 0.0
    mus = np.arange(a_mu.size, dtype=float)
    freqs = 2.0 ** mus
    in_head = freqs <= m
    head = float(np.sum(a_mu[in_head] ** th * 2.0 ** (mus[in_head] * (r + lam) * th)))
    tail = float(np.sum(a_mu[~in_head] ** th * 2.0 ** (mus[~in_head] * r * th)))
    return float((tail + float(m) ** (-lam * th) * head) ** (1.0 / th))


def dyadic_approx_form(series: CosineSeries, params: ClassParams, n: int,
                       max_level: int | None = None,
                       e_values: np.ndarray | None = None) -> float:
    """Dyadic best-approximation form of the class functional at level n.

    (sum_{mu>n} 2^{mu*r*th} E_{2^mu}^th
     + 2^{-n*l*th} sum_{mu<=n} 2^{mu*(r+l)*th} E_{2^mu}^th)^{1/th},
    truncated at max_level with a geometric extrapolation of the tail from the
    empirical decay of the E-curve.
    """
    if n < 0:
        raise DomainError("level n must be >= 0")
    th, r, lam, p = params.theta, params.r, params.lam, params.p
    if max_level is None:
        spectrum_level = max(series.max_freq, 1).bit_length()
        max_level = max(n + 8, spectrum_level + 1)
    if max_level <= n:
        raise DomainError("max_level must exceed the requested level n")
    if e_values is None:
        e_values = np.array([best_approx(series, 2 ** mu, p).value
                             for mu in range(max_level + 1)])
    elif e_values.size < max_level + 1:
        raise DomainError("e_values must cover levels 0..max_level")

    mus = np.arange(max_level + 1, dtype=float)
    tail_terms = 2.0 ** (mus[n + 1:] * r * th) * e_values[n + 1:] ** th
    partial = float(np.sum(tail_terms))

    remainder = 0.0
    if tail_terms.size and tail_terms[-1] > 0.0:
        if tail_terms.size >= 2 and tail_terms[-2] > 0.0:
            rho = float(tail_terms[-1] / tail_terms[-2])
        else:
            rho = 1.0
        if rho >= 0.999:
            remainder = math.inf
        else:
            remainder = float(tail_terms[-1]) * rho / (1.0 - rho)
    _warn_truncation(remainder, partial, 2 ** max_level)

    head = float(np.sum(2.0 ** (mus[: n + 1] * (r + lam) * th) * e_values[: n + 1] ** th))
    total = partial + remainder + 2.0 ** (-n * lam * th) * head
    return float(total ** (1.0 / th))


VERDICT_BOUNDED = "bounded"
VERDICT_UNBOUNDED = "unbounded-trend"
VERDICT_DIVERGENT = "divergent"


@dataclass(frozen=True)
class MembershipReport:
    """Outcome of testing value(n) <= C * phi(1/n) along a curve.

    sup_ratio is the smallest empirical C on the sampled range; the verdict comes
    from the least-squares slope of log(ratio) against log(n) over the last half
    of the curve (bounded iff the slope does not exceed slope_tol).
    """

    curve: FunctionalCurve | None
    phi: MajorantPhi
    per_n_ratios: np.ndarray
    sup_ratio: float
    tail_slope: float
    verdict: str


def membership_test(curve: FunctionalCurve, phi: MajorantPhi,
                    slope_tol: float = DEFAULT_SLOPE_TOL) -> MembershipReport:
    """Decide boundedness of curve values against the majorant phi(1/n)."""
    if len(curve) == 0:
        raise DomainError("membership test needs a non-empty curve")
    ratios = curve.ratio_against(phi)
    sup_ratio = float(ratios.max())
    start = curve.ns.size // 2
    tail_ns = curve.ns[start:].astype(float)
    tail_ratios = ratios[start:]
    pos = tail_ratios > 0
    if int(pos.sum()) >= 2:
        slope = float(np.polyfit(np.log(tail_ns[pos]), np.log(tail_ratios[pos]), 1)[0])
    else:
        slope = 0.0
    verdict = VERDICT_BOUNDED if slope <= slope_tol else VERDICT_UNBOUNDED
    return MembershipReport(curve=curve, phi=phi, per_n_ratios=ratios,
                            sup_ratio=sup_ratio, tail_slope=slope, verdict=verdict)


def membership_of_values(ns, values, phi: MajorantPhi, label: str = "",
                         params: ClassParams | None = None,
                         slope_tol: float = DEFAULT_SLOPE_TOL) -> MembershipReport:
    """Membership test tolerating divergent (non-finite) functional values."""
    values = np.asarray(values, dtype=float)
    ns = np.asarray(ns, dtype=np.int64)
    if not np.all(np.isfinite(values)):
        finite = np.isfinite(values)
        ratios = np.full(values.shape, math.inf)
        if finite.any():
            sub = FunctionalCurve(ns[finite], values[finite], label=label, params=params)
            ratios[finite] = sub.ratio_against(phi)
        return MembershipReport(curve=None, phi=phi, per_n_ratios=ratios,
                                sup_ratio=math.inf, tail_slope=math.inf,
                                verdict=VERDICT_DIVERGENT)
    curve = FunctionalCurve(ns, values, label=label, params=params)
    return membership_test(curve, phi, slope_tol=slope_tol)


@dataclass(frozen=True)
class LacunaryLogPowerProfile:
    """Normalised tail/head profiles of the lacunary sequence
    a_mu = 2^{-mu r} (mu+1)^{-(alpha + 1/theta)}.

    t1(n) = n^alpha * (sum_{mu>n} a_mu^th 2^{mu r th})^{1/th} and
    t2(n) = n^{alpha+1/th} * (2^{-n l th} sum_{mu<=n} a_mu^th 2^{mu (r+l) th})^{1/th}
    are both bounded above and below; d holds the coefficient-form values at m = 2^n.
    """

    ns: np.ndarray
    t1: np.ndarray
    t2: np.ndarray
    d_ms: np.ndarray
    d_values: np.ndarray


def lacunary_log_power_profile(r: float, alpha: float, theta: float, lam: float,
                               n_values) -> LacunaryLogPowerProfile:
    """Exact level-space evaluation of the log-corrected lacunary sequence profiles.

    The weight a_mu^th 2^{mu r th} collapses to (mu+1)^{-(alpha th + 1)}, so the
    tail sums have the closed Hurwitz-zeta form and no truncation is involved.
    """
    for name, val in (("r", r), ("alpha", alpha), ("theta", theta), ("lambda", lam)):
        if not (math.isfinite(val) and val > 0):
            raise DomainError(f"{name} must be positive, got {val}")
    ns = np.asarray(sorted(int(n) for n in n_values), dtype=np.int64)
    if ns.size == 0 or ns[0] < 1:
        raise DomainError("n values must be positive integers")
    if ns.max() > 61:
        raise DomainError("levels above 61 overflow the 2**n curve index")
    q = alpha * theta + 1.0
    t1 = np.empty(ns.size)
    t2 = np.empty(ns.size)
    d_values = np.empty(ns.size)
    for i, n in enumerate(ns):
        tail = float(hurwitz_zeta(q, n + 2.0))
        mus = np.arange(0, n + 1, dtype=float)
        head = float(np.sum((mus + 1.0) ** (-q) * 2.0 ** (mus * lam * theta)))
        attenuated = 2.0 ** (-float(n) * lam * theta) * head
        t1[i] = float(n) ** alpha * tail ** (1.0 / theta)
        t2[i] = float(n) ** (alpha + 1.0 / theta) * attenuated ** (1.0 / theta)
        d_values[i] = (tail + attenuated) ** (1.0 / theta)
    d_ms = (2 ** ns.astype(object)).astype(np.int64)
    return LacunaryLogPowerProfile(ns=ns, t1=t1, t2=t2, d_ms=d_ms, d_values=d_values)
