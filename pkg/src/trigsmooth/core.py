"""Domain types: cosine series, class parameters, majorant catalog, grids, curves.

Conventions used throughout the package:

- a cosine series is sum_{nu>=1} a_nu cos(nu x); there is no constant term;
- L_p norms on [0, 2*pi) carry no 1/(2*pi) normalisation, so ||cos||_2 = sqrt(pi);
- a "lacunary" series is supported on the frequencies 1, 2, 4, 8, ... and can be
  viewed either by frequency nu or by level mu with nu = 2**mu (level 0 is cos x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConstraintViolation, DivideByZeroError, DomainError, TagError

TAGS = ("general", "monotone", "lacunary")
PHI_KINDS = ("power", "constant", "inv_log", "tabulated")

#: Largest frequency for which coefficient arrays are materialised densely.
DENSE_FREQ_CAP = 2**22


@dataclass(frozen=True)
class PowerLawTail:
    """Analytic continuation a_nu = c * nu**(-s) for nu beyond the stored range.

    s > 1/2 keeps the tail square-summable, so the extended series stays in L_2.
    """

    c: float
    s: float

    def __post_init__(self):
        if not (math.isfinite(self.c) and self.c >= 0):
            raise ConstraintViolation("tail amplitude c must be finite and >= 0")
        if not (math.isfinite(self.s) and self.s > 0.5):
            raise ConstraintViolation(f"tail exponent s must exceed 1/2, got {self.s}")

    def coeff(self, nu: int) -> float:
        return self.c * float(nu) ** (-self.s)

    def coeffs(self, nus: np.ndarray) -> np.ndarray:
        return self.c * np.asarray(nus, dtype=float) ** (-self.s)


def _is_pow2(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class CosineSeries:
    """Finite stored coefficients a_1..a_N of a cosine series, plus an optional tail.

    ``coeffs[i]`` is the coefficient of cos((i+1) x).  The tail model, when present,
    describes coefficients beyond the stored range; it participates in coefficient-side
    computations (Parseval tails, coefficient functionals) but is never synthesised.
    """

    coeffs: np.ndarray
    tag: str = "general"
    tail: PowerLawTail | None = None

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=float, copy=True)
        if coeffs.ndim != 1:
            raise ConstraintViolation("coeffs must be one-dimensional")
        if coeffs.size and not np.all(np.isfinite(coeffs)):
            raise ConstraintViolation("coefficients must all be finite")
        if self.tag not in TAGS:
            raise ConstraintViolation(f"unknown tag {self.tag!r}, expected one of {TAGS}")
        if self.tag in ("monotone", "lacunary") and coeffs.size and coeffs.min() < 0:
            raise ConstraintViolation(f"{self.tag} series requires non-negative coefficients")
        if self.tag == "monotone" and np.any(np.diff(coeffs) > 0):
            raise ConstraintViolation("monotone series requires non-increasing coefficients")
        if self.tag == "lacunary":
            nus = np.arange(1, coeffs.size + 1)
            off_support = (nus & (nus - 1)) != 0
            if np.any(coeffs[off_support] != 0):
                raise ConstraintViolation("lacunary series must vanish off powers of two")
            if self.tail is not None:
                raise ConstraintViolation("a dense power-law tail is incompatible with lacunarity")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def n_stored(self) -> int:
        return int(self.coeffs.size)

    @property
    def max_freq(self) -> int:
        """Largest stored frequency with a nonzero coefficient (0 for the zero series)."""
        nz = np.flatnonzero(self.coeffs)
        return int(nz[-1] + 1) if nz.size else 0

    def support(self) -> tuple[np.ndarray, np.ndarray]:
        """(frequencies, coefficients) of the nonzero stored part."""
        nz = np.flatnonzero(self.coeffs)
        return nz + 1, self.coeffs[nz]

    def coeff(self, nu: int) -> float:
        """a_nu, consulting the tail model beyond the stored range."""
        if nu < 1:
            raise DomainError("frequencies start at nu = 1")
        if nu <= self.n_stored:
            return float(self.coeffs[nu - 1])
        if self.tail is not None:
            return self.tail.coeff(nu)
        return 0.0

    def coeffs_upto(self, n: int) -> np.ndarray:
        """Dense a_1..a_n, extending via the tail model when n exceeds storage."""
        if n > DENSE_FREQ_CAP:
            raise DomainError(f"dense extension capped at {DENSE_FREQ_CAP} frequencies")
        if n <= self.n_stored:
            return self.coeffs[:n]
        out = np.zeros(n)
        out[: self.n_stored] = self.coeffs
        if self.tail is not None:
            nus = np.arange(self.n_stored + 1, n + 1)
            out[self.n_stored:] = self.tail.coeffs(nus)
        return out

    def lacunary_view(self) -> np.ndarray:
        """Level-indexed coefficients a_mu (frequency 2**mu) of a lacunary series."""
        if self.tag != "lacunary":
            raise TagError(f"lacunary view requires tag 'lacunary', got {self.tag!r}")
        if self.n_stored == 0:
            return np.zeros(0)
        levels = int(math.floor(math.log2(self.n_stored))) + 1
        freqs = 2 ** np.arange(levels)
        return self.coeffs[freqs - 1]

    def scaled(self, c: float) -> "CosineSeries":
        if c < 0:
            raise DomainError("scaling that preserves the tag requires c >= 0")
        tail = PowerLawTail(c * self.tail.c, self.tail.s) if self.tail is not None else None
        return CosineSeries(c * self.coeffs, tag=self.tag, tail=tail)


def power_law_series(s: float, n_terms: int, c: float = 1.0, with_tail: bool = True) -> CosineSeries:
    """Monotone series a_nu = c * nu**(-s), stored to n_terms, optionally with analytic tail."""
    nus = np.arange(1, n_terms + 1, dtype=float)
    tail = PowerLawTail(c, s) if with_tail else None
    return CosineSeries(c * nus ** (-s), tag="monotone", tail=tail)


def lacunary_series(mu_coeffs) -> CosineSeries:
    """Lacunary series from level-indexed coefficients a_mu, materialised densely."""
    mu_coeffs = np.asarray(mu_coeffs, dtype=float)
    if mu_coeffs.size == 0:
        return CosineSeries(np.zeros(0), tag="lacunary")
    top = 2 ** (mu_coeffs.size - 1)
    if top > DENSE_FREQ_CAP:
        raise DomainError(
            f"{mu_coeffs.size} levels need frequency {top} > dense cap {DENSE_FREQ_CAP}"
        )
    dense = np.zeros(top)
    dense[2 ** np.arange(mu_coeffs.size) - 1] = mu_coeffs
    return CosineSeries(dense, tag="lacunary")


def lacunary_geometric_series(ratio: float, levels: int) -> CosineSeries:
    """Lacunary series with a_mu = ratio**mu for mu = 0..levels-1."""
    if not (0 < ratio < 1):
        raise DomainError("geometric ratio must lie in (0, 1)")
    return lacunary_series(ratio ** np.arange(levels, dtype=float))


def random_bandlimited_series(rng: np.random.Generator, max_freq: int = 64) -> CosineSeries:
    """General-tag series with i.i.d. uniform coefficients on frequencies 1..max_freq."""
    return CosineSeries(rng.random(max_freq), tag="general")


@dataclass(frozen=True)
class ClassParams:
    """Smoothness-class parameters (p, theta, r, lambda, k) with k > r + lambda."""

    p: float
    theta: float
    r: float
    lam: float
    k: int

    def __post_init__(self):
        validate_params(self.p, self.theta, self.r, self.lam, self.k, _construct=False)


def validate_params(p: float, theta: float, r: float, lam: float, k: int,
                    _construct: bool = True) -> ClassParams | None:
    """Check the class-parameter constraints; return a ClassParams on success."""
    if not (isinstance(k, (int, np.integer)) and not isinstance(k, bool)):
        raise ConstraintViolation(f"k must be an integer, got {k!r}")
    for name, val in (("p", p), ("theta", theta), ("r", r), ("lambda", lam)):
        if not (isinstance(val, (int, float, np.floating, np.integer)) and math.isfinite(val)):
            raise ConstraintViolation(f"{name} must be a finite real, got {val!r}")
    if not (1.0 < p < math.inf):
        raise ConstraintViolation(f"p must lie in (1, inf), got {p}")
    if theta <= 0 or r <= 0 or lam <= 0:
        raise ConstraintViolation("theta, r and lambda must be positive")
    if k < 1:
        raise ConstraintViolation(f"k must be a positive integer, got {k}")
    if not (k > r + lam):
        raise ConstraintViolation(f"need k > r + lambda, got k={k} <= {r + lam}")
    if _construct:
        return ClassParams(float(p), float(theta), float(r), float(lam), int(k))
    return None


_INV_E = 1.0 / math.e


@dataclass(frozen=True)
class MajorantPhi:
    """Majorant from the closed catalog {delta**alpha, 1, (ln 1/delta)**(-alpha), tabulated}.

    The inverse-log kind is clamped to 1 on [1/e, 1) so it stays bounded and
    quasi-monotone on all of (0, 1).
    """

    kind: str
    alpha: float | None = None
    table: tuple[np.ndarray, np.ndarray] | None = None

    def __post_init__(self):
        if self.kind not in PHI_KINDS:
            raise ConstraintViolation(f"unknown majorant kind {self.kind!r}")
        if self.kind in ("power", "inv_log"):
            if self.alpha is None or not (math.isfinite(self.alpha) and self.alpha > 0):
                raise ConstraintViolation(f"kind {self.kind!r} needs alpha > 0")
        if self.kind == "tabulated":
            if self.table is None:
                raise ConstraintViolation("tabulated majorant needs a (deltas, values) table")
            deltas = np.asarray(self.table[0], dtype=float)
            values = np.asarray(self.table[1], dtype=float)
            if deltas.shape != values.shape or deltas.ndim != 1 or deltas.size < 2:
                raise ConstraintViolation("table must be two equal-length 1-D arrays")
            if np.any(np.diff(deltas) <= 0) or deltas[0] <= 0 or deltas[-1] >= 1:
                raise ConstraintViolation("table abscissae must increase strictly inside (0, 1)")
            if np.any(values < 0) or not np.any(values > 0):
                raise ConstraintViolation("table values must be non-negative and not all zero")
            deltas.setflags(write=False)
            values.setflags(write=False)
            object.__setattr__(self, "table", (deltas, values))

    @classmethod
    def power(cls, alpha: float) -> "MajorantPhi":
        return cls("power", alpha=alpha)

    @classmethod
    def constant(cls) -> "MajorantPhi":
        return cls("constant")

    @classmethod
    def inv_log(cls, alpha: float) -> "MajorantPhi":
        return cls("inv_log", alpha=alpha)

    @classmethod
    def tabulated(cls, deltas, values) -> "MajorantPhi":
        return cls("tabulated", table=(np.asarray(deltas, float), np.asarray(values, float)))

    def __call__(self, delta: float) -> float:
        return phi_eval(self, delta)

    def label(self) -> str:
        if self.kind in ("power", "inv_log"):
            return f"{self.kind}({self.alpha:g})"
        return self.kind


def phi_eval(phi: MajorantPhi, delta: float) -> float:
    """Evaluate the majorant at a point of (0, 1)."""
    if not (0.0 < delta < 1.0):
        raise DomainError(f"majorant argument must lie in (0, 1), got {delta}")
    if phi.kind == "power":
        return delta ** phi.alpha
    if phi.kind == "constant":
        return 1.0
    if phi.kind == "inv_log":
        if delta >= _INV_E:
            return 1.0
        return math.log(1.0 / delta) ** (-phi.alpha)
    deltas, values = phi.table
    if delta < deltas[0] or delta > deltas[-1]:
        raise DomainError(f"delta={delta} outside table range [{deltas[0]}, {deltas[-1]}]")
    return float(np.interp(delta, deltas, values))


def phi_values(phi: MajorantPhi, deltas: np.ndarray) -> np.ndarray:
    return np.array([phi_eval(phi, float(d)) for d in np.asarray(deltas, dtype=float)])


@dataclass(frozen=True)
class PhiCheckReport:
    c1: float
    c2: float
    passed: bool


def phi_property_check(phi: MajorantPhi, grid_size: int = 256,
                       delta_min: float = 1e-8, delta_max: float = 0.999) -> PhiCheckReport:
    """Smallest empirical quasi-monotonicity (C1) and doubling (C2) constants on a grid.

    C1 is the largest phi(d1)/phi(d2) over grid pairs d1 <= d2; C2 the largest
    phi(2 d)/phi(d) over grid points d <= 1/2.  Both are computed on a geometric
    delta-grid of the requested size.
    """
    if grid_size < 16:
        raise DomainError("grid_size must be at least 16")
    if phi.kind == "tabulated":
        deltas_tab = phi.table[0]
        delta_min = max(delta_min, float(deltas_tab[0]))
        delta_max = min(delta_max, float(deltas_tab[-1]))
    grid = np.geomspace(delta_min, delta_max, grid_size)
    vals = phi_values(phi, grid)

    # quasi-monotonicity: divide each value by the running minimum to its right
    suffix_min = np.minimum.accumulate(vals[::-1])[::-1]
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = np.where(suffix_min > 0, vals / suffix_min, np.inf)
        ratios = np.where((vals == 0) & (suffix_min == 0), 1.0, ratios)
    c1 = float(np.max(ratios)) if ratios.size else 1.0

    doubling_pts = grid[(grid <= 0.5) & (2 * grid < delta_max)]
    if phi.kind == "tabulated":
        doubling_pts = doubling_pts[2 * doubling_pts <= phi.table[0][-1]]
    c2 = 1.0
    for d in doubling_pts:
        lo, hi = phi_eval(phi, float(d)), phi_eval(phi, float(2 * d))
        c2 = max(c2, hi / lo if lo > 0 else (math.inf if hi > 0 else 1.0))
    return PhiCheckReport(c1=c1, c2=c2, passed=math.isfinite(c1) and math.isfinite(c2))


@dataclass(frozen=True)
class GridFunction:
    """Uniform samples of a 2*pi-periodic function at x_j = 2*pi*j/N."""

    samples: np.ndarray

    def __post_init__(self):
        samples = np.array(self.samples, dtype=float, copy=True)
        if samples.ndim != 1:
            raise ConstraintViolation("samples must be one-dimensional")
        n = samples.size
        if n < 8 or not _is_pow2(n):
            raise ConstraintViolation(f"grid size must be a power of two >= 8, got {n}")
        if not np.all(np.isfinite(samples)):
            raise ConstraintViolation("samples must be finite")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    @property
    def size(self) -> int:
        return int(self.samples.size)

    def x(self) -> np.ndarray:
        n = self.samples.size
        return 2.0 * math.pi * np.arange(n) / n


@dataclass(frozen=True)
class FunctionalCurve:
    """Sampled map n -> value for one of the class functionals."""

    ns: np.ndarray
    values: np.ndarray
    label: str = ""
    params: ClassParams | None = None

    def __post_init__(self):
        ns = np.array(self.ns, dtype=np.int64, copy=True)
        values = np.array(self.values, dtype=float, copy=True)
        if ns.ndim != 1 or values.ndim != 1 or ns.size != values.size:
            raise ConstraintViolation("ns and values must be 1-D of equal length")
        if ns.size == 0:
            raise ConstraintViolation("a functional curve needs at least one entry")
        if ns[0] < 1 or np.any(np.diff(ns) <= 0):
            raise ConstraintViolation("n values must be positive and strictly increasing")
        if not np.all(np.isfinite(values)) or np.any(values < 0):
            raise ConstraintViolation("curve values must be finite and non-negative")
        ns.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "ns", ns)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return int(self.ns.size)

    @property
    def entries(self) -> list[tuple[int, float]]:
        return [(int(n), float(v)) for n, v in zip(self.ns, self.values)]

    def ratio_against(self, phi: MajorantPhi) -> np.ndarray:
        """value(n) / phi(1/n) per entry."""
        phis = phi_values(phi, 1.0 / self.ns.astype(float))
        if np.any(phis == 0):
            raise DivideByZeroError("majorant vanishes at a curve point")
        return self.values / phis
