"""Reduced state of one squeezed mode when the other is never measured.

Tracing the unobserved mode out of the pure two-mode state leaves a
mixed state that is diagonal in the number basis with probabilities

    p_k = cosh(eta)^-2(n+1) binom(n+k, k) tanh(eta)^2k.

For n = 0 this is exactly a thermal oscillator distribution, which is
what lets the squeeze rapidity double as a temperature: matching
(1 - q) q^k against (1 - e^{-1/T}) e^{-k/T} gives tanh(eta)^2 = e^{-1/T}.
The von Neumann entropy is computed both from the probabilities and from
the closed forms, which the tests require to agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

import numpy as np

from .entangled_series import as_rapidity
from .errors import DomainError


@dataclass(frozen=True)
class ReducedDensity:
    """Schmidt probabilities of the reduced state, with a tail bound."""

    n: int
    eta: float
    probs: np.ndarray
    cutoff: int
    tail_bound: float


@dataclass(frozen=True)
class ThermoPoint:
    beta_sq: float
    entropy: float
    temperature: float


def _log_probs(n: int, eta: float, kmax: int) -> np.ndarray:
    """log p_k for k = 0..kmax (eta > 0)."""
    q = math.tanh(eta) ** 2
    k = np.arange(kmax + 1, dtype=float)
    log_binom = (
        np.array([math.lgamma(n + kk + 1) for kk in range(kmax + 1)])
        - math.lgamma(n + 1)
        - np.array([math.lgamma(kk + 1) for kk in range(kmax + 1)])
    )
    return (n + 1) * math.log(1.0 - q) + log_binom + k * math.log(q)


def _prob_cutoff(n: int, eta: float, tol: float) -> int:
    """Smallest K with a certified probability tail below tol."""
    q = math.tanh(eta) ** 2
    k = max(32, int(math.ceil((math.log(tol) + (n + 1) * math.log1p(-q)) / math.log(q))) if q > 0 else 0)
    while True:
        rho = q * (n + k + 1.0) / (k + 1.0)
        log_pk = (n + 1) * math.log1p(-q) + (
            math.lgamma(n + k + 1) - math.lgamma(n + 1) - math.lgamma(k + 1)
        ) + k * math.log(q)
        if rho < 1.0 and math.exp(log_pk) * rho / (1.0 - rho) <= tol:
            return k
        k = int(1.5 * k) + 8


def reduced_density(n: int, eta, tol: float = 1e-14) -> ReducedDensity:
    """Probabilities p_k with sum within tol of one."""
    if tol <= 0:
        raise DomainError("tol must be positive")
    if n != int(n) or n < 0:
        raise DomainError("n must be a non-negative integer")
    n = int(n)
    eta = abs(as_rapidity(eta))
    if eta == 0.0:
        return ReducedDensity(n=n, eta=eta, probs=np.array([1.0]), cutoff=0, tail_bound=0.0)
    kmax = _prob_cutoff(n, eta, tol)
    probs = np.exp(_log_probs(n, eta, kmax))
    q = math.tanh(eta) ** 2
    rho = q * (n + kmax + 1.0) / (kmax + 1.0)
    return ReducedDensity(n=n, eta=eta, probs=probs, cutoff=kmax, tail_bound=float(probs[-1] * rho / (1.0 - rho)))


def purity(n: int, eta) -> float:
    """Tr rho^2 = sum p_k^2; equals 1/cosh(2 eta) when n = 0."""
    eta = abs(as_rapidity(eta))
    if eta == 0.0:
        return 1.0
    rho = reduced_density(n, eta, tol=1e-18)
    return float(np.sum(rho.probs**2))


def entropy(n: int, eta) -> float:
    """Von Neumann entropy -sum p_k ln p_k in nats (0 ln 0 = 0)."""
    eta = abs(as_rapidity(eta))
    if eta == 0.0:
        return 0.0
    kmax = _prob_cutoff(int(n), eta, 1e-20)
    log_p = _log_probs(int(n), eta, kmax)
    p = np.exp(log_p)
    return float(-np.sum(p * log_p))


def entropy_closed_form(n: int, eta) -> float:
    """The two-term closed form: squeeze part minus the binomial-weight sum.

    S = 2(n+1) [cosh^2 ln cosh - sinh^2 ln sinh]
        - cosh^-2(n+1) sum_k binom(n+k, k) ln binom(n+k, k) tanh^2k;
    the second term vanishes for n = 0.
    """
    n = int(n)
    eta = abs(as_rapidity(eta))
    if eta == 0.0:
        return 0.0
    c, s = math.cosh(eta), math.sinh(eta)
    lead = 2.0 * (n + 1) * (c * c * math.log(c) - s * s * math.log(s))
    if n == 0:
        return lead
    q = math.tanh(eta) ** 2
    kmax = _prob_cutoff(n, eta, 1e-20)
    k = np.arange(kmax + 1)
    log_binom = np.array(
        [math.lgamma(n + kk + 1) - math.lgamma(n + 1) - math.lgamma(kk + 1) for kk in k]
    )
    weight_sum = float(np.sum(np.exp(log_binom + k * math.log(q)) * log_binom))
    return lead - weight_sum / c ** (2 * (n + 1))


def position_density(eta, x, r):
    """Reduced coordinate-space density matrix rho(x, r) for n = 0."""
    eta = as_rapidity(eta)
    c2 = math.cosh(2.0 * eta)
    x = np.asarray(x, dtype=float)
    r = np.asarray(r, dtype=float)
    value = (1.0 / math.sqrt(math.pi * c2)) * np.exp(
        -0.25 * ((x + r) ** 2 / c2 + (x - r) ** 2 * c2)
    )
    return float(value) if np.ndim(value) == 0 else value


def width(eta) -> float:
    """Spread sqrt(cosh 2 eta) of the diagonal density rho(x, x)."""
    return math.sqrt(math.cosh(2.0 * as_rapidity(eta)))


def temperature(eta) -> float:
    """Entanglement temperature T = -1 / ln(tanh^2 eta), extended by 0 at eta = 0."""
    eta = abs(as_rapidity(eta))
    if eta == 0.0:
        return 0.0
    return -1.0 / math.log(math.tanh(eta) ** 2)


def eta_for_temperature(T: float) -> float:
    """Inverse of temperature: eta = atanh(e^{-1/(2T)})."""
    if T < 0:
        raise DomainError("temperature must be non-negative")
    if T == 0.0:
        return 0.0
    return math.atanh(math.exp(-1.0 / (2.0 * T)))


def thermo_curve(beta_sq_grid: Iterable[float]) -> list[ThermoPoint]:
    """Entropy and temperature along a grid of beta^2 = tanh(eta)^2 values."""
    points = []
    for q in beta_sq_grid:
        q = float(q)
        if not 0.0 <= q < 1.0:
            raise DomainError(f"beta_sq must lie in [0, 1), got {q}")
        eta = math.atanh(math.sqrt(q))
        points.append(ThermoPoint(beta_sq=q, entropy=entropy(0, eta), temperature=temperature(eta)))
    return points


def write_thermo_csv(points: Sequence[ThermoPoint], stream: TextIO) -> None:
    """Fixed-format CSV: header beta_sq,entropy_nats,temperature, 12 significant digits."""
    stream.write("beta_sq,entropy_nats,temperature\n")
    for p in points:
        stream.write(f"{p.beta_sq:.12g},{p.entropy:.12g},{p.temperature:.12g}\n")
