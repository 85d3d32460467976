"""Dispersion kernels and branch collisions.

The flat-water eigenvalue branches omega^sigma(j + mu, h) cross each other
at special Floquet wavenumbers.  For each integer p >= 2 the branch of
signature -1 at mode 0 meets the branch of signature +1 at mode p exactly
once: that collision seeds the p-th instability isola.  This script solves
the collision condition over a range of depths and shows the wavenumber
settling onto its deep-water limit (p-1)^2/4 along the known two-term
expansion.
"""

from stokes_isolas import (
    build_resonance_data,
    eigenvalue_branch,
    omega_disp,
    phase_speed,
    wavenumber_asymptote,
)

print("dispersion at depth h = 2:")
print(f"  phase speed c(2)        = {phase_speed(2.0):.12f}")
for phi in (0.25, 1.0, 2.25):
    print(f"  Omega({phi:4}, 2)         = {omega_disp(phi, 2.0):.12f}")
print()

print("critical wavenumber phi*(p, h) and collision frequency omega*(p, h):")
print(f"{'p':>3} {'h':>6} {'phi*':>18} {'two-term expansion':>18} {'omega*':>18} {'residual':>10}")
for p in (2, 3, 4):
    for h in (1.0, 3.0, 6.0, 10.0):
        rd = build_resonance_data(p, h)
        asym = wavenumber_asymptote(p, h)
        print(
            f"{p:>3} {h:>6} {rd.phi_star:>18.12f} {asym:>18.12f} "
            f"{rd.omega_star:>18.12f} {rd.residual:>10.1e}"
        )
print()

print("the two branches really do meet at phi* (p = 3, h = 2):")
rd = build_resonance_data(3, 2.0)
for offset in (-0.05, 0.0, +0.05):
    mu = rd.phi_star + offset
    lower = eigenvalue_branch(0, -1, mu, 2.0)
    upper = eigenvalue_branch(3, +1, mu, 2.0)
    marker = "  <-- collision" if offset == 0.0 else ""
    print(f"  mu = phi* {offset:+.2f}:  branch(0,-) = {lower:.9f}   branch(3,+) = {upper:.9f}{marker}")
