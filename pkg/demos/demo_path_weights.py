#!/usr/bin/env python3
"""Weigh a path vertex by vertex, both boundary conventions.

The running example is the length-14 path in the (3,8) model from height 2
to height 4 with post-segment endpoint 3; its weight is 24 and its scoring
vertices sit at i = 3,4,5,7,8,13,14.
"""

from fbpaths import (
    classify_vertex, path_stats, postseg_path, striking_sequence,
    weight_from_striking, weight_wt, weight_wtilde, wings_path,
)

HEIGHTS = (2, 3, 4, 5, 4, 5, 6, 7, 6, 5, 6, 5, 4, 3, 4)

h = postseg_path(3, 8, HEIGHTS, c=3)
print("heights:", HEIGHTS, " c = 3")
print(f"wt(h) = {weight_wt(h)}")
print()
print(" i  shape          band   scoring")
for i in range(1, h.L + 1):
    shape, parity, scoring = classify_vertex(h, i)
    mark = "  *" if scoring else ""
    print(f"{i:>2}  {shape:<14} {parity:<6} {mark}")
print()

# the same heights under wings: pre/post segment directions instead of c
for e in (0, 1):
    hw = wings_path(3, 8, HEIGHTS, e=e, f=1)
    ss = striking_sequence(hw)
    st = path_stats(hw)
    print(f"wings e={e}, f=1:")
    print(f"  striking columns: {ss.columns}  tags (e,f,d)=({ss.e},{ss.f},{ss.d})")
    print(f"  wtilde = {weight_wtilde(hw)}  (from the striking formula: "
          f"{weight_from_striking(ss)})")
    print(f"  m = {st.m}, alpha = {st.alpha}, beta = {st.beta}")
    print()

# the seed family: the single zigzag in the one-band model
for L in (0, 2, 4, 6, 8):
    zig = wings_path(1, 3, [1 + i % 2 for i in range(L + 1)], e=0, f=0)
    print(f"(1,3) zigzag L={L}: wtilde = {weight_wtilde(zig)} = (L/2)^2")
