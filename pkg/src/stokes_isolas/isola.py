"""Leading-order geometry of one instability isola.

Truncated parametric model of the p-th isola: with beta1 computed by
:mod:`stokes_isolas.beta` and the externally supplied band/shape functions
T1 > 0 and E in (0, 1) (no closed form is computed here), the discriminant
of the colliding eigenvalue pair reduces to

    D(nu) = 4*beta1^2*eps^(2p) - T1^2*nu^2,    nu = mu - mu0,

positive strictly inside the instability band, zero at its endpoints
mu0 -+ 2*|beta1|*eps^p/T1, negative outside.  Inside the band the pair has
real part +-sqrt(D)/2 (maximal growth |beta1|*eps^p at the center); outside
it is purely imaginary; at the endpoints the two eigenvalues recollide on
the imaginary axis.  The isola itself is approximated by the ellipse

    x^2 + E^2*(y - y0)^2 = beta1^2*eps^(2p).

All remainder terms of the source expansions are truncated to zero, so
every output is a leading-order model with error O(eps^(p+1)); the center
ordinate y0 and band center mu0 default to the collision frequency and
critical wavenumber (their exact positions are O(eps^2)-close).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "IsolaParams",
    "IsolaGeometry",
    "discriminant",
    "band_endpoints",
    "eigenvalue_pair",
    "ellipse_points",
    "isola_geometry",
]


@dataclass(frozen=True)
class IsolaParams:
    """Inputs of the truncated isola model at one (p, h, eps).

    beta1 normally comes from :func:`stokes_isolas.beta.beta1`; T1 and E
    must be supplied by the caller.  y0 and mu0 default (via
    :meth:`from_depth`) to the collision frequency and critical wavenumber.
    """

    p: int
    h: float
    eps: float
    beta1: float
    T1: float
    E: float
    y0: float
    mu0: float

    def __post_init__(self):
        if self.p < 2:
            raise ValueError(f"p must be >= 2, got {self.p!r}")
        if not self.eps > 0:
            raise ValueError(f"eps must be positive, got {self.eps!r}")
        if not self.T1 > 0:
            raise ValueError(f"T1 must be positive, got {self.T1!r}")
        if not 0.0 < self.E < 1.0:
            raise ValueError(f"E must lie in (0, 1), got {self.E!r}")

    @classmethod
    def from_depth(cls, p, h, eps, T1, E, y0=None, mu0=None):
        """Fill beta1, y0, mu0 from the resonance and coefficient modules."""
        from .beta import beta1 as _beta1
        from .resonance import omega_star, solve_wavenumber

        phi = solve_wavenumber(p, h)
        return cls(
            p=p,
            h=h,
            eps=eps,
            beta1=_beta1(p, h),
            T1=T1,
            E=E,
            y0=omega_star(p, h) if y0 is None else y0,
            mu0=phi if mu0 is None else mu0,
        )

    @property
    def max_growth(self) -> float:
        """Largest real part on the isola, |beta1| * eps^p."""
        return abs(self.beta1) * self.eps**self.p

    @property
    def half_width(self) -> float:
        """Half-width of the Floquet instability band, 2*|beta1|*eps^p/T1."""
        return 2.0 * self.max_growth / self.T1


def discriminant(nu: float, params: IsolaParams) -> float:
    """D(nu) = 4*beta1^2*eps^(2p) - T1^2*nu^2 around the band center."""
    g = params.max_growth
    return 4.0 * g * g - (params.T1 * nu) ** 2


def band_endpoints(params: IsolaParams) -> tuple[float, float]:
    """(mu_low, mu_high); both equal mu0 when beta1 = 0 (closed band)."""
    w = params.half_width
    return params.mu0 - w, params.mu0 + w


def eigenvalue_pair(mu: float, params: IsolaParams) -> tuple[complex, complex]:
    """The colliding eigenvalue pair at Floquet exponent mu.

    Inside the band: y0*i +- sqrt(D)/2 (nonzero real part); outside:
    purely imaginary, y0*i +- i*sqrt(|D|); continuous across the endpoints
    where both eigenvalues equal y0*i.
    """
    D = discriminant(mu - params.mu0, params)
    if D > 0.0:
        half = 0.5 * math.sqrt(D)
        return complex(half, params.y0), complex(-half, params.y0)
    root = math.sqrt(-D)
    return complex(0.0, params.y0 + root), complex(0.0, params.y0 - root)


def ellipse_points(params: IsolaParams, n: int) -> np.ndarray:
    """n samples (x, y) of the approximating ellipse, in sample order.

    Satisfies x^2 + E^2*(y - y0)^2 = beta1^2*eps^(2p) to rounding; for even
    n the sample set is symmetric under x -> -x.  Extreme points are
    (+-max_growth, y0) and (0, y0 +- max_growth/E).
    """
    if n < 8:
        raise ValueError(f"need n >= 8 samples, got {n!r}")
    g = params.max_growth
    theta = 2.0 * math.pi * np.arange(n) / n
    pts = np.empty((n, 2))
    pts[:, 0] = g * np.cos(theta)
    pts[:, 1] = params.y0 + (g / params.E) * np.sin(theta)
    return pts


@dataclass(frozen=True)
class IsolaGeometry:
    """Band endpoints, growth, and sampled isola curve for one parameter set."""

    mu_low: float
    mu_high: float
    max_growth: float
    ellipse: np.ndarray = field(repr=False)
    band_open: bool

    @property
    def band_width(self) -> float:
        return self.mu_high - self.mu_low


def isola_geometry(params: IsolaParams, n: int = 256) -> IsolaGeometry:
    """Assemble the leading-order geometry (degenerate when beta1 = 0)."""
    mu_low, mu_high = band_endpoints(params)
    return IsolaGeometry(
        mu_low=mu_low,
        mu_high=mu_high,
        max_growth=params.max_growth,
        ellipse=ellipse_points(params, n),
        band_open=params.beta1 != 0.0,
    )
