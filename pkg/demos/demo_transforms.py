#!/usr/bin/env python3
"""The transform calculus, one step at a time.

Dilation blows a path up into the (p, p'+p) model, insertion stacks k
particles (adjacent scoring pairs) at the start, and each particle move
shifts a pair one vertex to the right, raising the weight by exactly one.
The composite is uniquely reversible.
"""

from fbpaths import (
    b1, b2, b3, b_transform, d_transform, decompose, path_stats,
    weight_wtilde, wings_path,
)

h = wings_path(3, 8, (2, 3, 4, 5, 4, 5, 6, 7, 6, 5, 6, 5, 4, 3, 4), e=0, f=1)
print(f"base path in (3,8): a={h.a}, b={h.b}, L={h.L}, wtilde={weight_wtilde(h)}")

h0 = b1(h)
print(f"after dilation   -> ({h0.model.p},{h0.model.pp}): a={h0.a}, b={h0.b}, "
      f"L={h0.L}, wtilde={weight_wtilde(h0)}, m={path_stats(h0).m}")

h2 = b2(h0, 2)
print(f"after 2 insertions: L={h2.L}, wtilde={weight_wtilde(h2)}, "
      f"m={path_stats(h2).m}")
print(f"  heights: {h2.heights}")

trace = []
h3 = b3(h2, (3, 1), k=2, trace=trace)
print(f"after moves (3,1): L={h3.L}, wtilde={weight_wtilde(h3)} "
      f"(+{weight_wtilde(h3) - weight_wtilde(h2)} = |lambda|)")
print(f"  heights: {h3.heights}")
print("  move trace (vertex index, segment directions before>after):")
for step in trace:
    print(f"    {step}")

base, k, lam = decompose(h3)
print(f"decompose recovers: k={k}, lambda={lam}, base heights={base.heights}")
assert base.heights == h.heights and (k, lam) == (2, (3, 1))

back = b_transform(h, 2, (3, 1))
assert back.heights == h3.heights
print("compose(decompose) round trip: OK")
print()

hd = d_transform(h)
print(f"parity flip: ({hd.model.p},{hd.model.pp}), wings "
      f"(e,f)=({hd.boundary.e},{hd.boundary.f})")
print(f"  wtilde + flipped wtilde = {weight_wtilde(h) + weight_wtilde(hd)} "
      f"= (L^2 - alpha^2)/4 = {(h.L ** 2 - (h.b - h.a) ** 2) // 4}")
