"""Leading-order geometry of one instability isola.

With beta1 computed from the depth and the externally supplied band/shape
functions T1 and E (no closed form for them here), the truncated model
gives the Floquet instability band, the eigenvalue pair across it, and the
approximating ellipse in the spectral plane.  The real part is largest at
the band center (|beta1| eps^p), the pair recollides on the imaginary axis
at the band endpoints, and the whole isola shrinks like eps^p.
"""

from stokes_isolas import (
    IsolaParams,
    band_endpoints,
    eigenvalue_pair,
    isola_geometry,
)

params = IsolaParams.from_depth(p=2, h=3.0, eps=0.05, T1=1.0, E=0.5)
print("parameters (T1, E supplied; the rest computed from p, h, eps):")
for name in ("p", "h", "eps", "beta1", "T1", "E", "y0", "mu0"):
    print(f"  {name:<6} = {getattr(params, name)}")
print()

lo, hi = band_endpoints(params)
print(f"instability band: mu in ({lo:.12f}, {hi:.12f})")
print(f"  half-width 2|beta1| eps^p / T1 = {params.half_width:.6e}")
print(f"  maximal growth |beta1| eps^p   = {params.max_growth:.6e}")
print()

print("eigenvalue pair across the band (x = growth rate, y = frequency):")
for frac in (-1.25, -1.0, -0.5, 0.0, 0.5, 1.0, 1.25):
    mu = params.mu0 + frac * params.half_width
    lam_p, lam_m = eigenvalue_pair(mu, params)
    where = "inside " if abs(frac) < 1 else ("endpoint" if abs(frac) == 1 else "outside")
    print(f"  mu0 {frac:+5.2f}w [{where}]  lambda+ = {lam_p.real:+.3e} + {lam_p.imag:.9f}i")
print()

print("isola ellipse x^2 + E^2 (y - y0)^2 = (|beta1| eps^p)^2, 8 of 64 samples:")
geo = isola_geometry(params, 64)
for x, y in geo.ellipse[::8]:
    print(f"  ({x:+.6e}, {y:.12f})")
print()

print("size scaling with amplitude (width ~ eps^p):")
for eps in (0.025, 0.05, 0.1):
    scaled = IsolaParams.from_depth(p=2, h=3.0, eps=eps, T1=1.0, E=0.5)
    g = isola_geometry(scaled, 16)
    print(f"  eps = {eps:<6} band width = {g.band_width:.6e}  max growth = {g.max_growth:.6e}")
print()
print("all outputs are the leading-order truncation: corrections are")
print("O(eps^(p+1)) and the supplied T1, E carry their own definitions.")
