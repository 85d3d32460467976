"""Critical Floquet wavenumber where two flat-water eigenvalue branches collide.

For each integer p >= 2 and depth h > 0 the branch of signature -1 at mode 0
meets the branch of signature +1 at mode p for exactly one positive Floquet
wavenumber phi*.  Eliminating the common frequency, phi* is the unique
positive root of the strictly increasing residual

    f(phi) = Omega(phi, h) + Omega(phi + p, h) - p * c(h).

The collision frequency omega* = c*phi* + Omega(phi*, h) is the ordinate of
the branching point from which the p-th instability isola bifurcates.  The
pairing (mode 0, signature -1) with (mode p, signature +1) is adopted as the
definition of the p-th resonance; it reproduces the deep-water limits
phi* -> (p-1)^2/4 and all downstream expansions, which is the validation
available from the source material.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .dispersion import _check_depth, omega_disp, phase_speed, t_ratio
from .errors import SolverError

__all__ = [
    "ResonanceData",
    "resonance_residual",
    "solve_wavenumber",
    "build_resonance_data",
    "omega_star",
]

DEFAULT_TOL = 1e-13

# Geometric bracket expansion: each step divides the lower end by 4 or
# doubles the upper end.  The root collapses toward 0 like h^2 in shallow
# water, so ~200 steps covers any h in [1e-3, 1e3] with huge margin.
_MAX_EXPANSIONS = 200


def _check_index(p: int) -> int:
    if int(p) != p or p < 2:
        raise ValueError(f"isola index p must be an integer >= 2, got {p!r}")
    return int(p)


def resonance_residual(phi: float, p: int, h: float) -> float:
    """Collision residual f(phi) = Omega(phi) + Omega(phi+p) - p*c(h).

    Strictly increasing in phi > 0 (sum of increasing frequencies minus a
    constant), negative at 0+ and unbounded above, hence a single root.
    """
    p = _check_index(p)
    h = _check_depth(h)
    if phi <= 0.0:
        raise ValueError(f"phi must be positive, got {phi!r}")
    return omega_disp(phi, h) + omega_disp(phi + p, h) - p * phase_speed(h)


def solve_wavenumber(p: int, h: float, tol: float = DEFAULT_TOL) -> float:
    """Solve f(phi*) = 0 for the critical wavenumber phi*(p, h).

    Starts from a bracket centered on the deep-water limit (p-1)^2/4,
    expands it geometrically toward 0+ or +infinity until the residual
    changes sign, then refines with Brent's method.  The returned phi*
    satisfies |f(phi*)| <= tol.

    Raises
    ------
    SolverError
        If no sign change is found after the documented maximum number of
        expansions (pathological depths far outside [1e-3, 1e3]).
    """
    p = _check_index(p)
    h = _check_depth(h)
    if not tol >= 1e-15:
        raise ValueError(f"tol must be >= 1e-15, got {tol!r}")

    center = (p - 1) ** 2 / 4.0
    lo = max(center - 0.5, 0.0625)
    hi = center + 0.5

    f = lambda phi: resonance_residual(phi, p, h)

    expansions = 0
    while f(lo) > 0.0:
        lo /= 4.0
        expansions += 1
        if expansions > _MAX_EXPANSIONS:
            raise SolverError(
                f"no sign change toward 0+ for p={p}, h={h}", bracket=(lo, hi)
            )
    while f(hi) < 0.0:
        hi *= 2.0
        expansions += 1
        if expansions > _MAX_EXPANSIONS:
            raise SolverError(
                f"no sign change toward +inf for p={p}, h={h}", bracket=(lo, hi)
            )

    phi_star = brentq(f, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    residual = f(phi_star)
    if abs(residual) > tol:
        raise SolverError(
            f"residual {residual:.3e} above tol {tol:.3e} at phi={phi_star!r}",
            bracket=(lo, hi),
        )
    return phi_star


@dataclass(frozen=True)
class ResonanceData:
    """Everything the instability-coefficient formulas need at one (p, h).

    Omega[j] and t[j] are the dispersion kernels evaluated at j + phi*
    for j = 0..p; omega_star is the collision frequency, reachable from
    either colliding branch (the residual records how well they agree).
    phi* mod 1 is the Brillouin-zone representative of the collision.
    """

    p: int
    h: float
    phi_star: float
    omega_star: float
    Omega: np.ndarray = field(repr=False)
    t: np.ndarray = field(repr=False)
    residual: float = 0.0

    @property
    def brillouin_mu(self) -> float:
        return self.phi_star % 1.0


def build_resonance_data(p: int, h: float, tol: float = DEFAULT_TOL) -> ResonanceData:
    """Solve for phi* and tabulate Omega_j, t_j, omega* for j = 0..p."""
    p = _check_index(p)
    h = _check_depth(h)
    phi_star = solve_wavenumber(p, h, tol)
    Omega = np.array([omega_disp(j + phi_star, h) for j in range(p + 1)])
    t = np.array([t_ratio(j + phi_star, h) for j in range(p + 1)])
    c = phase_speed(h)
    return ResonanceData(
        p=p,
        h=h,
        phi_star=phi_star,
        omega_star=float(c * phi_star + Omega[0]),
        Omega=Omega,
        t=t,
        residual=float(Omega[0] + Omega[p] - p * c),
    )


def omega_star(p: int, h: float, tol: float = DEFAULT_TOL) -> float:
    """Collision frequency omega*(p, h) = c*phi* + Omega(phi*, h)."""
    phi_star = solve_wavenumber(p, h, tol)
    return phase_speed(h) * phi_star + omega_disp(phi_star, h)
