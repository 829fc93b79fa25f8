"""Two-mode squeezing of oscillator states as Schmidt series.

Squeezing chi_n(x) chi_0(y) through the symmetric coordinate squeeze

    x' = cosh(eta) x - sinh(eta) y,   y' = cosh(eta) y - sinh(eta) x

entangles the modes into

    chi_n(x') chi_0(y') = sum_k A_k(n) chi_{n+k}(x) chi_k(y),
    A_k(n) = cosh(eta)^-(n+1) sqrt((n+k)!/(n! k!)) tanh(eta)^k.

The module computes the coefficients in closed form and, independently,
by two-dimensional Gauss-Hermite quadrature, and sums the series with a
certified tail bound so partial sums can be compared pointwise against
the squeezed Gaussian itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import oscillator_basis as basis
from .errors import CutoffError, DomainError

# sup_x |chi_j(x)| <= pi^(-1/4), so any product of two factors is below this.
_CHI_PAIR_SUP = 1.0 / math.sqrt(math.pi)

_ETA_MAX = 25.0  # beyond this tanh(eta) == 1 at double precision


@dataclass(frozen=True)
class SqueezeParam:
    """Squeeze rapidity with its hyperbolic functions cached."""

    eta: float
    tanh: float = field(init=False)
    cosh: float = field(init=False)

    def __post_init__(self):
        if not math.isfinite(self.eta) or abs(self.eta) > _ETA_MAX:
            raise DomainError(f"rapidity must be finite with |eta| <= {_ETA_MAX}, got {self.eta!r}")
        object.__setattr__(self, "tanh", math.tanh(self.eta))
        object.__setattr__(self, "cosh", math.cosh(self.eta))


def as_rapidity(eta) -> float:
    """Accept a float or a SqueezeParam and return the validated rapidity."""
    if isinstance(eta, SqueezeParam):
        return eta.eta
    return SqueezeParam(float(eta)).eta


@dataclass(frozen=True)
class SchmidtSeries:
    """Truncated Schmidt coefficients A_0..A_K with a probability tail bound."""

    n: int
    eta: float
    coeffs: np.ndarray
    cutoff: int
    tail_bound: float


def squeezed_wavefunction(n: int, eta, x, y):
    """chi_n(x') chi_0(y') for the squeezed coordinates of rapidity eta."""
    eta = as_rapidity(eta)
    c, s = math.cosh(eta), math.sinh(eta)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    xp = c * x - s * y
    yp = c * y - s * x
    value = basis.chi(n, xp) * basis.chi(0, yp)
    return float(value) if np.ndim(value) == 0 else value


def coefficient(n: int, k: int, eta) -> float:
    """Closed-form Schmidt coefficient A_k(n).

    Log-domain for large indices, exact binomials below 20!; a negative
    rapidity enters through A_k(n, -eta) = (-1)^k A_k(n, eta).
    """
    if n != int(n) or n < 0 or k != int(k) or k < 0:
        raise DomainError("n and k must be non-negative integers")
    n, k = int(n), int(k)
    eta = as_rapidity(eta)
    sign = (-1.0) ** k if eta < 0 else 1.0
    eta = abs(eta)
    if eta == 0.0:
        return 1.0 if k == 0 else 0.0
    t, c = math.tanh(eta), math.cosh(eta)
    if n + k < 20:
        return sign * math.sqrt(math.comb(n + k, k)) * t**k / c ** (n + 1)
    log_binom = 0.5 * (math.lgamma(n + k + 1) - math.lgamma(n + 1) - math.lgamma(k + 1))
    return sign * math.exp(log_binom + k * math.log(t) - (n + 1) * math.log(c))


def coefficient_by_quadrature(n: int, k: int, eta, order: int = basis.DEFAULT_QUAD_ORDER) -> float:
    """A_k(n) as the overlap integral of the squeezed state with chi_{n+k} chi_k.

    The integrand is polynomial times a correlated Gaussian; rotating to
    normal coordinates u = (x+y)/sqrt2, v = (x-y)/sqrt2 makes the Gaussian
    diagonal with scales cosh(eta) e^{-+eta}, so a scaled Gauss-Hermite grid
    integrates it exactly up to the rule's degree.
    """
    if n != int(n) or n < 0 or k != int(k) or k < 0:
        raise DomainError("n and k must be non-negative integers")
    n, k = int(n), int(k)
    if n + k > 40:
        raise DomainError(f"n + k = {n + k} exceeds the quadrature degree budget of 40")
    eta = as_rapidity(eta)
    c, s = math.cosh(eta), math.sinh(eta)
    rule = basis.quadrature(order)
    # With u~ = u sqrt(cosh e^-eta), v~ = v sqrt(cosh e^eta) the combined
    # Gaussian (x^2 + y^2 + x'^2 + y'^2)/2 equals u~^2 + v~^2 exactly, so
    # only the bare polynomials remain under the quadrature weights.
    u = rule.nodes[:, None] / math.sqrt(c * math.exp(-eta))
    v = rule.nodes[None, :] / math.sqrt(c * math.exp(eta))
    x = (u + v) / math.sqrt(2.0)
    y = (u - v) / math.sqrt(2.0)
    xp = c * x - s * y
    poly = (
        basis.chi_batch_bare(n + k, x)[n + k]
        * basis.chi_batch_bare(k, y)[k]
        * basis.chi_batch_bare(n, xp)[n]
        * (np.pi**-0.25)
    )
    w2 = rule.weights[:, None] * rule.weights[None, :]
    return float(np.sum(w2 * poly) / c)


def schmidt_series(n: int, eta, tol: float = 1e-12, kmax: int | None = None) -> SchmidtSeries:
    """Coefficients A_0..A_K with K chosen so the amplitude tail stays below tol.

    The cutoff starts from the geometric estimate
    K0 = ceil(log(tol (1 - t^2)) / (2 log t)), t = tanh|eta|, and is then
    extended until A_K sup|chi chi| r / (1 - r) <= tol with the ratio bound
    r = t sqrt((n+K+1)/(K+1)); the plain geometric seed undershoots the
    pointwise tolerance once t is close to one.
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    if n != int(n) or n < 0:
        raise DomainError("n must be a non-negative integer")
    n = int(n)
    bound = basis.N_MAX if kmax is None else min(int(kmax), basis.N_MAX)
    eta = as_rapidity(eta)
    t = math.tanh(abs(eta))
    if t == 0.0:
        return SchmidtSeries(n=n, eta=eta, coeffs=np.array([1.0]), cutoff=0, tail_bound=0.0)
    k0 = max(math.ceil(math.log(tol * (1.0 - t * t)) / (2.0 * math.log(t))), 8)
    coeffs = [coefficient(n, k, eta) for k in range(k0 + 1)]
    k = k0
    while True:
        r = t * math.sqrt((n + k + 1.0) / (k + 1.0))
        if r < 1.0 and abs(coeffs[k]) * _CHI_PAIR_SUP * r / (1.0 - r) <= tol:
            break
        k += 1
        if k + n > bound:
            raise CutoffError(
                f"series cutoff for n={n}, eta={eta}, tol={tol} exceeds the basis bound {bound}"
            )
        coeffs.append(coefficient(n, k, eta))
    amps = np.array(coeffs)
    probs = amps * amps
    rho = t * t * (n + k + 2.0) / (k + 2.0)
    tail = float(probs[-1] * rho / (1.0 - rho)) if rho < 1.0 else float("inf")
    return SchmidtSeries(n=n, eta=eta, coeffs=amps, cutoff=k, tail_bound=tail)


def series_sum(n: int, eta, x, y, tol: float = 1e-10, kmax: int | None = None):
    """Partial sum sum_k A_k(n) chi_{n+k}(x) chi_k(y), accurate to tol pointwise."""
    scalar = np.ndim(x) == 0 and np.ndim(y) == 0
    ser = schmidt_series(n, eta, tol, kmax)
    x, y = np.broadcast_arrays(np.atleast_1d(np.asarray(x, float)), np.atleast_1d(np.asarray(y, float)))
    cx = basis.chi_batch(int(n) + ser.cutoff, x.ravel())
    cy = basis.chi_batch(ser.cutoff, y.ravel())
    total = np.einsum("k,kp,kp->p", ser.coeffs, cx[int(n) :], cy).reshape(x.shape)
    return float(total.ravel()[0]) if scalar else total


def normalization_check(n: int, eta) -> float:
    """sum_k A_k(n)^2, accumulated to the machine tail (contract: equals 1)."""
    eta = as_rapidity(eta)
    t = math.tanh(abs(eta))
    if t == 0.0:
        return 1.0
    total = 0.0
    k = 0
    while True:
        a = coefficient(n, k, eta)
        total += a * a
        if k > 8 and a * a < 1e-18 * total:
            return total
        k += 1
        if k > 200_000:  # pragma: no cover - |eta| <= 25 keeps tails short
            return total


def unnormalized_series_ratio(eta) -> float:
    """Norm of sum_k tanh^k chi_k chi_k relative to the normalized series.

    The bare exponential of the two-mode raising bilinear produces the
    series without its 1/cosh prefactor; its norm sqrt(sum t^{2k}) is
    cosh(eta), computed here by direct summation.
    """
    eta = as_rapidity(eta)
    t = math.tanh(abs(eta))
    if t == 0.0:
        return 1.0
    total, term, k = 0.0, 1.0, 0
    while term > 1e-18 * max(total, 1.0):
        total += term
        term *= t * t
        k += 1
    return math.sqrt(total)


@dataclass(frozen=True)
class EigenvalueResidual:
    """Finite-difference residual of the squeeze-invariant eigenvalue relation."""

    value: float
    eigenvalue: int
    spacing: float
    warning: str | None = None


def eigenvalue_residual(
    n: int,
    eta,
    m: int = 0,
    half_width: float = 5.0,
    spacing: float = 0.01,
    stencil_order: int = 4,
) -> EigenvalueResidual:
    """max |D psi - (n - m) psi| for D = ((x^2 - dxx) - (y^2 - dyy)) / 2.

    psi = chi_n(x') chi_m(y') with squeezed coordinates of rapidity eta;
    the eigenvalue n - m is squeeze-invariant, so the residual measures
    only the finite-difference error, O(spacing^stencil_order).
    """
    if stencil_order not in (2, 4):
        raise DomainError("stencil_order must be 2 or 4")
    eta = as_rapidity(eta)
    npts = int(round(2.0 * half_width / spacing)) + 1
    if npts < 2 * stencil_order + 1:
        raise DomainError("grid too small for the requested stencil")
    axis = -half_width + spacing * np.arange(npts)
    X, Y = np.meshgrid(axis, axis, indexing="ij")
    c, s = math.cosh(eta), math.sinh(eta)
    psi = basis.chi(int(n), c * X - s * Y) * basis.chi(int(m), c * Y - s * X)

    h2 = spacing * spacing
    if stencil_order == 2:
        lo, hi = 1, npts - 1
        dxx = (psi[:-2, lo:hi] - 2.0 * psi[1:-1, lo:hi] + psi[2:, lo:hi]) / h2
        dyy = (psi[lo:hi, :-2] - 2.0 * psi[lo:hi, 1:-1] + psi[lo:hi, 2:]) / h2
        inner = psi[1:-1, 1:-1]
        Xi, Yi = X[1:-1, 1:-1], Y[1:-1, 1:-1]
    else:
        lo, hi = 2, npts - 2
        dxx = (
            -psi[:-4, lo:hi]
            + 16.0 * psi[1:-3, lo:hi]
            - 30.0 * psi[2:-2, lo:hi]
            + 16.0 * psi[3:-1, lo:hi]
            - psi[4:, lo:hi]
        ) / (12.0 * h2)
        dyy = (
            -psi[lo:hi, :-4]
            + 16.0 * psi[lo:hi, 1:-3]
            - 30.0 * psi[lo:hi, 2:-2]
            + 16.0 * psi[lo:hi, 3:-1]
            - psi[lo:hi, 4:]
        ) / (12.0 * h2)
        inner = psi[2:-2, 2:-2]
        Xi, Yi = X[2:-2, 2:-2], Y[2:-2, 2:-2]

    applied = 0.5 * ((Xi * Xi * inner - dxx) - (Yi * Yi * inner - dyy))
    residual = float(np.abs(applied - (int(n) - int(m)) * inner).max())
    warn = None
    scale = math.exp(abs(eta))
    if spacing * scale > 0.05:
        warn = f"spacing {spacing} may be too coarse for squeeze scale e^|eta| = {scale:.3f}"
    return EigenvalueResidual(value=residual, eigenvalue=int(n) - int(m), spacing=spacing, warning=warn)
