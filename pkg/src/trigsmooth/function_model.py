"""Synthesis of cosine series on grids, L_p quadrature norms, finite differences,
and the modulus of smoothness.

The k-th difference with step h acts on the harmonic cos(nu x) through the complex
multiplier (e^{i nu h} - 1)^k, whose modulus is (2 |sin(nu h / 2)|)^k.  All grid
evaluation goes through that multiplier applied to the exact coefficients (never
through sample interpolation), so the only quadrature error left downstream is the
rectangle rule itself, which is exact for bandlimited integrands at p = 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.fft

from .core import CosineSeries, GridFunction
from .errors import AliasError, ConstraintViolation, DomainError

TWO_PI = 2.0 * math.pi

#: default spatial grid for quadrature (power of two)
DEFAULT_GRID_N = 4096
#: default number of shift samples on [0, t], both endpoints included
DEFAULT_H_SAMPLES = 257


@dataclass(frozen=True)
class ModulusRequest:
    """Order, step bound, exponent and shift resolution for one modulus evaluation."""

    k: int
    t: float
    p: float
    h_samples: int = DEFAULT_H_SAMPLES

    def __post_init__(self):
        if not (isinstance(self.k, (int, np.integer)) and self.k >= 1):
            raise ConstraintViolation(f"difference order k must be a positive integer, got {self.k}")
        # t = 0 is allowed as the degenerate endpoint (the modulus is then 0)
        if not (0.0 <= self.t <= math.pi):
            raise ConstraintViolation(f"step bound t must lie in [0, pi], got {self.t}")
        if not (1.0 < self.p < math.inf):
            raise ConstraintViolation(f"exponent p must lie in (1, inf), got {self.p}")
        if self.h_samples < 16:
            raise ConstraintViolation("h_samples must be at least 16")


def _check_grid_size(n: int) -> None:
    if n < 8 or (n & (n - 1)) != 0:
        raise DomainError(f"grid size must be a power of two >= 8, got {n}")


def _series_spectrum(series: CosineSeries, n: int) -> np.ndarray:
    """rfft-layout spectrum of the stored part: bin nu holds N * a_nu / 2."""
    spec = np.zeros(n // 2 + 1, dtype=complex)
    freqs, amps = series.support()
    spec[freqs] = 0.5 * n * amps
    return spec


def auto_grid_size(series: CosineSeries, minimum: int = DEFAULT_GRID_N) -> int:
    """Smallest power of two >= minimum that holds the stored harmonics alias-free."""
    need = 2 * series.max_freq + 1
    n = max(minimum, 8)
    while n < need:
        n *= 2
    return n


def synthesize(series: CosineSeries, n: int) -> GridFunction:
    """Sample the stored part of the series at x_j = 2*pi*j/n.

    The analytic tail model is deliberately not synthesised; it only feeds
    coefficient-side computations.  Raises AliasError when n <= 2 * max stored
    frequency, since then the samples would alias.
    """
    _check_grid_size(n)
    if series.max_freq > 0 and n <= 2 * series.max_freq:
        raise AliasError(
            f"grid size {n} cannot hold frequency {series.max_freq} (need n > {2 * series.max_freq})"
        )
    if series.max_freq == 0:
        return GridFunction(np.zeros(n))
    return GridFunction(np.fft.irfft(_series_spectrum(series, n), n=n))


def lp_norm(f: GridFunction, p: float) -> float:
    """Rectangle-rule L_p([0, 2*pi)) norm: (2*pi/N * sum |f_j|^p)^(1/p).

    Exact for trigonometric polynomials of degree d at p = 2 whenever N > 2d.
    """
    if not (1.0 < p < math.inf):
        raise DomainError(f"exponent p must lie in (1, inf), got {p}")
    s = np.sum(np.abs(f.samples) ** p)
    return float((TWO_PI / f.size * s) ** (1.0 / p))


def _difference_multiplier(n: int, h: float, k: int) -> np.ndarray:
    m = np.arange(n // 2 + 1)
    return (np.exp(1j * m * h) - 1.0) ** k


def difference(f: GridFunction, h: float, k: int, series: CosineSeries | None = None) -> GridFunction:
    """k-th finite difference x -> sum_j (-1)^(k-j) C(k,j) f(x + j h) on the grid.

    When the originating series is supplied, the shifted values are resynthesised
    exactly from its coefficients; otherwise the grid is Fourier-interpolated.
    """
    if not (isinstance(k, (int, np.integer)) and k >= 1):
        raise DomainError(f"difference order k must be a positive integer, got {k}")
    n = f.size
    if series is not None:
        spec = _series_spectrum(series, n)
    else:
        spec = np.fft.rfft(f.samples)
    out = np.fft.irfft(spec * _difference_multiplier(n, h, k), n=n)
    return GridFunction(out)


def shift_grid(t: float, h_samples: int) -> np.ndarray:
    """Uniform shift samples on [0, t], both endpoints included."""
    return np.linspace(0.0, t, h_samples)


def modulus(series: CosineSeries, req: ModulusRequest, n: int = DEFAULT_GRID_N) -> float:
    """Grid modulus of smoothness: max over the shift grid of the L_p difference norm.

    Only h >= 0 is scanned; the norm of the k-th difference is even in h.
    """
    if req.t == 0.0:
        return 0.0
    _check_grid_size(n)
    if series.max_freq > 0 and n <= 2 * series.max_freq:
        raise AliasError(
            f"grid size {n} cannot hold frequency {series.max_freq} (need n > {2 * series.max_freq})"
        )
    if series.max_freq == 0:
        return 0.0
    freqs, amps = series.support()
    spec_vals = 0.5 * n * amps
    hs = shift_grid(req.t, req.h_samples)
    h_chunk = max(8, 2**23 // n)
    best = 0.0
    for lo in range(0, hs.size, h_chunk):
        chunk = hs[lo: lo + h_chunk]
        mult = (np.exp(1j * np.outer(chunk, freqs.astype(float))) - 1.0) ** req.k
        spec = np.zeros((chunk.size, n // 2 + 1), dtype=complex)
        spec[:, freqs] = mult * spec_vals
        # batch transform; workers only split the batch axis, values are unchanged
        diffs = scipy.fft.irfft(spec, n=n, axis=-1, workers=-1)
        if req.p == 2.0:
            sums = np.einsum("ij,ij->i", diffs, diffs)
        else:
            sums = np.sum(np.abs(diffs) ** req.p, axis=-1)
        norms = (TWO_PI / n * sums) ** (1.0 / req.p)
        best = max(best, float(norms.max()))
    return best


def modulus_p2_exact(series: CosineSeries, k: int, t: float,
                     h_samples: int = DEFAULT_H_SAMPLES) -> float:
    """Closed-form p = 2 modulus via Parseval, no spatial grid.

    sup over the shift grid of sqrt(pi * sum_nu a_nu^2 (2 sin(nu h / 2))^(2k)).
    Serves as the oracle for the grid modulus at p = 2.
    """
    if not (isinstance(k, (int, np.integer)) and k >= 1):
        raise DomainError(f"difference order k must be a positive integer, got {k}")
    if not (0.0 <= t <= math.pi):
        raise DomainError(f"step bound t must lie in [0, pi], got {t}")
    if t == 0.0:
        return 0.0
    freqs, amps = series.support()
    if freqs.size == 0:
        return 0.0
    hs = shift_grid(t, h_samples)
    # (2 sin(nu h / 2))^(2k), built in place: the sin form avoids the cancellation
    # of 2 - 2 cos(nu h) at small arguments
    arg = np.multiply.outer(hs, 0.5 * freqs)
    np.sin(arg, out=arg)
    np.multiply(arg, arg, out=arg)
    arg *= 4.0
    if k > 1:
        base = arg.copy()
        for _ in range(k - 1):
            arg *= base
    vals = arg @ (amps * amps)
    return float(math.sqrt(math.pi * vals.max()))
