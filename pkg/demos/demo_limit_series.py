#!/usr/bin/env python3
"""Finite-size characters stabilize onto the infinite character series.

As the path length grows, the low-degree coefficients of the finitized
character freeze; the frozen values match the truncated alternating series
divided by the partition generating function.
"""

from fbpaths import Model, chi, groundstate_label, rocha_caridi_truncated

for p, pp in [(2, 5), (3, 5), (3, 7)]:
    a, b, c = 1, 2, 1
    r = groundstate_label(p, pp, b, c)
    m = Model(p, pp)
    print(f"({p},{pp}), a={a}, b={b}, c={c}  ->  character label (r,s) = ({r},{a})")
    for L in (13, 15, 17):
        N = L // 4
        finite = chi(m, a, b, c, L).truncate(N)
        series = rocha_caridi_truncated(p, pp, r, a, N)
        status = "==" if finite == series else "!="
        print(f"  L={L:>2}, compared through degree {N}: chi(L) {status} series  ({finite})")
    print()
