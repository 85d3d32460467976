"""Linear dispersion relation of gravity water waves on finite depth.

All quantities are nondimensional.  The three kernels are

    c(h)      = sqrt(tanh(h))            phase speed of the carrier wave
    Omega(phi, h) = sqrt(phi * tanh(h * phi))   wave frequency at wavenumber phi
    t(phi, h) = sqrt(phi / tanh(h * phi))        companion ratio, t * Omega = phi

together with the flat-water eigenvalue branches

    omega^sigma(j + mu, h) = c(h) * (j + mu) - sigma * Omega(j + mu, h)

labelled by a mode index j and a signature sigma = +-1.

Everything here is a pure scalar function of floats: no caching, no global
state, safe to call concurrently.  Double precision throughout; Omega and t
are accurate to a few ulps, which downstream consumers budget against.
"""

from __future__ import annotations

import math

__all__ = [
    "phase_speed",
    "omega_disp",
    "t_ratio",
    "eigenvalue_branch",
]

# Below this value of |h*phi| the ratio phi/tanh(h*phi) is evaluated by its
# Taylor series; both branches agree to ~1e-16 at the crossover.
_SERIES_THRESHOLD = 1e-4


def _check_depth(h: float) -> float:
    h = float(h)
    if not math.isfinite(h) or h <= 0.0:
        raise ValueError(f"depth must be a positive finite real, got {h!r}")
    return h


def _check_finite(x: float, name: str) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"{name} must be finite, got {x!r}")
    return x


def phase_speed(h: float) -> float:
    """Phase speed c(h) = sqrt(tanh(h)) of the unit-wavenumber carrier.

    Strictly increasing in h, with values in (0, 1); approaches 1 like
    1 - exp(-2h) in deep water.
    """
    h = _check_depth(h)
    return math.sqrt(math.tanh(h))


def omega_disp(phi: float, h: float) -> float:
    """Frequency Omega(phi, h) = sqrt(phi * tanh(h * phi)).

    Even in phi and exactly zero at phi = 0; strictly increasing in both
    arguments for phi >= 0.
    """
    h = _check_depth(h)
    phi = _check_finite(phi, "phi")
    x = abs(phi)          # phi * tanh(h*phi) is even; abs makes that exact
    return math.sqrt(x * math.tanh(h * x))


def t_ratio(phi: float, h: float) -> float:
    """Companion ratio t(phi, h) = sqrt(phi / tanh(h * phi)).

    Satisfies t * Omega = phi.  The removable singularity at phi -> 0+ is
    handled by the series x/tanh(x) = 1 + x^2/3 - x^4/45 + ..., giving the
    limit 1/sqrt(h).
    """
    h = _check_depth(h)
    phi = _check_finite(phi, "phi")
    if phi < 0.0:
        raise ValueError(f"phi must be nonnegative, got {phi!r}")
    x = h * phi
    if x < _SERIES_THRESHOLD:
        ratio = (1.0 + x * x / 3.0 - x ** 4 / 45.0) / h
    else:
        ratio = phi / math.tanh(x)
    return math.sqrt(ratio)


def eigenvalue_branch(j: int, sigma: int, mu: float, h: float) -> float:
    """Imaginary part of the flat-water eigenvalue branch (j, sigma) at mu.

    Returns omega^sigma(j + mu, h) = c(h)*(j + mu) - sigma*Omega(j + mu, h).
    The branches obey the reflection omega^+(-phi, h) = -omega^-(phi, h).
    """
    if sigma not in (1, -1):
        raise ValueError(f"sigma must be +1 or -1, got {sigma!r}")
    h = _check_depth(h)
    mu = _check_finite(mu, "mu")
    phi = j + mu
    return phase_speed(h) * phi - sigma * omega_disp(phi, h)
