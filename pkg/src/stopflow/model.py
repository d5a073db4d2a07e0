"""Problem constants for the geometric-Brownian real option.

State dynamics dX = mu*X dt + sigma*X dW, running profit x**theta,
flat stopping reward kappa, discount rho and entropy temperature lam.
Everything downstream (closed forms, policy iteration, simulation)
consumes the quantities defined here:

* the characteristic roots alpha_-, alpha_+ of
  0.5*sigma^2*a*(a-1) + mu*a - rho = 0,
* the resolvent constant P with E int e^{-rho t} X_t^theta dt = P x^theta,
* the power profit x**theta and its resolvent P x**theta.

All functions are pure and accept numpy arrays where a state argument
is documented as ``x``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import ParameterError

__all__ = [
    "ModelParams",
    "Grid",
    "validate",
    "char_roots",
    "resolvent_constant",
    "profit",
    "resolvent",
    "resolvent_prime",
    "resolvent_prime_x",
]


@dataclass(frozen=True)
class ModelParams:
    """Constants of the real-option model.

    mu     drift (1/time), may be negative
    sigma  volatility (1/sqrt(time)), > 0
    rho    discount rate (1/time), > 0
    kappa  stopping reward level, > 0
    lam    entropy temperature, >= 0 (config/CLI key: ``lambda``)
    theta  profit exponent, in (0, 1)
    """

    mu: float
    sigma: float
    rho: float
    kappa: float
    lam: float
    theta: float

    def with_lam(self, lam: float) -> "ModelParams":
        return replace(self, lam=lam)


def validate(params: ModelParams) -> ModelParams:
    """Return ``params`` unchanged iff every admissibility condition holds.

    Raises ParameterError listing *all* violated inequalities.  The
    resolvent condition rho > theta*(mu + sigma^2*(theta-1)/2) is implied
    by rho > mu > 0 (or rho > 0 >= mu) but is checked explicitly so the
    failure message names the actual divergence.
    """
    p = params
    failures = []
    if not p.sigma > 0.0:
        failures.append(f"sigma <= 0 (sigma={p.sigma})")
    if not p.rho > 0.0:
        failures.append(f"rho <= 0 (rho={p.rho})")
    if not p.kappa > 0.0:
        failures.append(f"kappa <= 0 (kappa={p.kappa})")
    if not p.lam >= 0.0:
        failures.append(f"lambda < 0 (lambda={p.lam})")
    if not 0.0 < p.theta < 1.0:
        failures.append(f"theta outside (0,1) (theta={p.theta})")
    if not p.rho > p.mu:
        failures.append(f"rho <= mu (rho={p.rho}, mu={p.mu})")
    growth = p.theta * (p.mu + 0.5 * p.sigma**2 * (p.theta - 1.0))
    if not p.rho > growth:
        failures.append(
            "resolvent divergence: rho <= theta*(mu + sigma^2*(theta-1)/2) "
            f"(rho={p.rho}, bound={growth})"
        )
    if failures:
        raise ParameterError(failures)
    return params


def char_roots(params: ModelParams) -> tuple[float, float]:
    """Roots (alpha_minus, alpha_plus) of 0.5*sigma^2*a*(a-1) + mu*a - rho = 0.

    Computed with the cancellation-free quadratic formula: the large
    root comes from q = -(b + sign(b)*sqrt(disc))/2, the other from the
    product of roots c/a.  For rho > 0 the discriminant is positive and
    alpha_minus < 0 < 1 < alpha_plus (the upper bound needs rho > mu).
    """
    a = 0.5 * params.sigma**2
    b = params.mu - 0.5 * params.sigma**2
    c = -params.rho
    disc = b * b - 4.0 * a * c
    if disc <= 0.0:
        raise ParameterError([f"characteristic discriminant <= 0 (disc={disc})"])
    sq = math.sqrt(disc)
    q = -0.5 * (b + math.copysign(sq, b)) if b != 0.0 else -0.5 * sq
    r1 = q / a
    r2 = c / q
    alpha_minus, alpha_plus = (r1, r2) if r1 < r2 else (r2, r1)
    return alpha_minus, alpha_plus


def resolvent_constant(params: ModelParams) -> float:
    """The constant P = 1/(rho + 0.5*sigma^2*theta*(1-theta) - theta*mu).

    E int_0^inf e^{-rho t} (X_t^x)^theta dt = P * x^theta; positive for
    every validated parameter set.
    """
    denom = params.rho + 0.5 * params.sigma**2 * params.theta * (1.0 - params.theta) - params.theta * params.mu
    return 1.0 / denom


def profit(params: ModelParams, x):
    """Running profit x**theta; rejects negative states."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0):
        raise ParameterError([f"profit requires x >= 0 (min x={x.min()})"])
    out = np.power(x, params.theta)
    return float(out) if out.ndim == 0 else out


def resolvent(params: ModelParams, x):
    """Discounted lifetime profit P * x**theta."""
    return resolvent_constant(params) * profit(params, x)


def resolvent_prime(params: ModelParams, x):
    """d/dx of the resolvent: theta*P*x**(theta-1).

    Diverges at x = 0; returns +inf there as a documented sentinel.
    Callers that need the product x * H'(x) should use
    :func:`resolvent_prime_x`, which is 0 at the origin.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0):
        raise ParameterError([f"resolvent_prime requires x >= 0 (min x={x.min()})"])
    c = params.theta * resolvent_constant(params)
    with np.errstate(divide="ignore"):
        out = c * np.power(x, params.theta - 1.0)
    out = np.where(x > 0.0, out, np.inf)
    return float(out) if out.ndim == 0 else out


def resolvent_prime_x(params: ModelParams, x):
    """x * H'(x) = theta*P*x**theta, continuous (0 at the origin)."""
    return params.theta * resolvent(params, x)


@dataclass(frozen=True)
class Grid:
    """Uniform rectangular grid: x-nodes on [0, x_max], y-nodes on (0, 1]."""

    x_max: float
    delta_x: float
    delta_y: float
    x_nodes: np.ndarray
    y_nodes: np.ndarray

    @classmethod
    def make(cls, x_max: float, delta_x: float, delta_y: float) -> "Grid":
        failures = []
        if not x_max > 0.0:
            failures.append(f"x_max <= 0 (x_max={x_max})")
        if not 0.0 < delta_x <= x_max:
            failures.append(f"delta_x outside (0, x_max] (delta_x={delta_x})")
        if not 0.0 < delta_y <= 1.0:
            failures.append(f"delta_y outside (0, 1] (delta_y={delta_y})")
        if failures:
            raise ParameterError(failures)
        nx = int(round(x_max / delta_x))
        ny = int(round(1.0 / delta_y))
        x_nodes = np.linspace(0.0, nx * delta_x, nx + 1)
        y_nodes = np.linspace(delta_y, ny * delta_y, ny)
        return cls(x_max=float(nx * delta_x), delta_x=float(delta_x),
                   delta_y=float(delta_y), x_nodes=x_nodes, y_nodes=y_nodes)
