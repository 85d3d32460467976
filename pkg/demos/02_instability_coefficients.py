"""Instability coefficients and their critical depths.

The size of the p-th isola is |beta1(p, h)| * eps^p to leading order, so
the sign and zeros of beta1 as a function of depth decide where the
leading-order prediction lives and where it degenerates.  This script
tabulates beta1 for p = 2, 3, 4, prints the term breakdown at one depth
(27 summands for p = 4, almost all of which cancel in deep water), and
then locates the critical depths where beta1 vanishes.
"""

from stokes_isolas import beta1_breakdown, beta_scan, find_beta_zeros

print("coefficient curves (blue-curve data of the plots):")
print(f"{'h':>6} {'beta1(2,h)':>15} {'beta1(3,h)':>15} {'beta1(4,h)':>15}")
for h in (0.3, 0.6, 1.0, 1.5, 2.0, 3.0, 5.0, 8.0):
    row = [beta_scan(p, [h])[0].beta1 for p in (2, 3, 4)]
    print(f"{h:>6} {row[0]:>15.6e} {row[1]:>15.6e} {row[2]:>15.6e}")
print()

print("term breakdown at p = 4, h = 3 (prefix +/- is the sign in the total):")
bd = beta1_breakdown(4, 3.0)
for tid, value in bd.terms.items():
    print(f"  {'+' if tid.sign > 0 else '-'} {tid.label:<24} {value:+.12e}")
print(f"  {'':26}{'-' * 20}")
print(f"  total          {bd.total:+.12e}")
print(f"  largest term   {max(abs(v) for v in bd.terms.values()):.3e}")
print(f"  cancellation floor (8 ulps of largest term): {bd.cancellation_floor:.3e}")
print()

print("group sums at p = 4, h = 3 (families of paths, already signed):")
print(f"  {'b0':<16} {bd.b0:+.12e}")
for name, value in bd.group_sums.items():
    print(f"  {name:<16} {value:+.12e}")
print()

print("critical depths (zeros of beta1):")
for p, lo, hi, n in ((2, 0.5, 5.0, 2000), (3, 0.3, 3.0, 2000), (4, 0.3, 3.0, 4000)):
    zeros = find_beta_zeros(p, lo, hi, n, 1e-10)
    print(f"  p = {p}: {[round(z, 8) for z in zeros]}")
print()
print("at the critical depths the leading-order isola closes and higher")
print("corrections decide; away from them beta1 != 0 guarantees the isola.")
