"""Shared sweep helpers for the test suite."""

from itertools import product
from math import gcd

from fbpaths import Model, Path, Wings, iter_height_seqs


def coprime_pairs(ppmax, ppmin=3):
    out = []
    for pp in range(ppmin, ppmax + 1):
        for p in range(1, pp):
            if gcd(p, pp) == 1:
                out.append((p, pp))
    return out


def winged_paths(p, pp, lmax, require_delta_a=False, require_delta_b=False):
    """Yield every winged path of the model with L <= lmax."""
    model = Model(p, pp)
    for a, b in product(range(1, pp), repeat=2):
        for e, f in product((0, 1), (0, 1)):
            if require_delta_a and model.delta(a, e) != 0:
                continue
            if require_delta_b and model.delta(b, f) != 0:
                continue
            for L in range((a + b) % 2, lmax + 1, 2):
                for hs in iter_height_seqs(model, a, b, L):
                    yield Path(model, hs, Wings(e, f))
