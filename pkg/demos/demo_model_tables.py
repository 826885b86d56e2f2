#!/usr/bin/env python3
"""Walk through the structure of a (p,p') band model.

Bands, parities, interfacial heights, the continued fraction of p'/p and
everything built from it: zones, Takahashi lengths, truncated Takahashi
lengths, string lengths, and the sets T and T'.
"""

from fbpaths import Model, continued_fraction, format_model_tables

P, PP = 11, 38

print(format_model_tables(P, PP))
print()

model = Model(P, PP)
tak = continued_fraction(P, PP)

print("Zones: index j lives in zone k when t_k < j <= t_{k+1}.")
for j in range(tak.t + 2):
    print(f"  j={j}: zone {tak.zone_of(j)}, kappa_j={tak.kappa[j] if j <= tak.t else '-'}")
print()

print("Takahashi membership (the fermionic forms need a, b in T or T'):")
for a in (1, 4, 5, 10, 28, 37):
    kind, sigma = tak.membership(a)
    if kind is None:
        print(f"  a={a}: neither")
    else:
        print(f"  a={a}: in {kind} with sigma={sigma} (kappa_sigma = {tak.kappa[sigma]})")
print()

print("The lowest bands repeat a smaller model ((z_n, y_n) sits inside):")
zn, yn = tak.z_of(tak.n), tak.y_of(tak.n)
sub = Model(zn, yn)
strip = "".join("#" if b else "." for b in model.band_parities()[: yn - 2])
substrip = "".join("#" if b else "." for b in sub.band_parities())
print(f"  bands 1..{yn - 2} of ({P},{PP}):  {strip}")
print(f"  bands 1..{yn - 2} of ({zn},{yn}):   {substrip}")
