"""The (p,p') band model and the continued-fraction / Takahashi data.

A model is a grid of p'-2 horizontal bands; band h sits between heights h
and h+1 and is odd exactly when floor(h p/p') != floor((h+1) p/p').  The
continued fraction of p'/p organizes the model into zones and produces the
Takahashi lengths, truncated Takahashi lengths and string lengths that the
fermionic character sums are written in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd


@dataclass(frozen=True)
class Model:
    """A (p, p') band model: 0 < p < p', gcd(p, p') = 1."""

    p: int
    pp: int

    def __post_init__(self):
        if not 0 < self.p < self.pp:
            raise ValueError(f"need 0 < p < p', got ({self.p}, {self.pp})")
        if gcd(self.p, self.pp) != 1:
            raise ValueError(f"p and p' must be coprime, got ({self.p}, {self.pp})")

    @property
    def num_bands(self) -> int:
        return self.pp - 2

    def floor_mult(self, a: int) -> int:
        """floor(a p / p')."""
        return a * self.p // self.pp

    def band_parity(self, h: int) -> int:
        """1 if band h (between heights h and h+1) is odd, 0 if even."""
        if not 1 <= h <= self.pp - 2:
            raise ValueError(f"band index {h} outside 1..{self.pp - 2}")
        return 1 if self.floor_mult(h) != self.floor_mult(h + 1) else 0

    def band_parities(self) -> tuple[int, ...]:
        """Parities of bands 1..p'-2 (index 0 is band 1)."""
        f = [a * self.p // self.pp for a in range(self.pp + 1)]
        return tuple(1 if f[h] != f[h + 1] else 0 for h in range(1, self.pp - 1))

    def odd_band_position(self, r: int) -> int:
        """Band index of the r-th odd band, 1 <= r < p."""
        if not 1 <= r < self.p:
            raise ValueError(f"odd band index {r} outside 1..{self.p - 1}")
        return r * self.pp // self.p

    def is_interfacial(self, a: int) -> bool:
        """True when height a lies between an odd and an even band."""
        if not 2 <= a <= self.pp - 2:
            raise ValueError(f"interfacial predicate defined on 2..{self.pp - 2}, got {a}")
        return self.floor_mult(a + 1) == self.floor_mult(a - 1) + 1

    def interfacial_heights(self) -> tuple[int, ...]:
        return tuple(a for a in range(2, self.pp - 1) if self.is_interfacial(a))

    def delta(self, a: int, e: int) -> int:
        """Parity of the band holding a pre/post segment at height a, direction e.

        0 when floor((a + (-1)^e) p/p') = floor(a p/p'), else 1.
        """
        if e not in (0, 1):
            raise ValueError("e must be 0 or 1")
        return 0 if self.floor_mult(a + (-1) ** e) == self.floor_mult(a) else 1

    def dual(self) -> Model:
        """The (p'-p, p') model: every band parity flipped."""
        return Model(self.pp - self.p, self.pp)


@dataclass(frozen=True)
class TakahashiData:
    """Continued fraction of p'/p and everything built from it.

    cf = (c_0, ..., c_n) with c_n >= 2; n is the height, t = sum(cf) - 2 the
    rank.  t_bounds[k] = t_k = -1 + c_0 + ... + c_{k-1} for 0 <= k <= n+1.
    y and z are indexed -1..n+1 (use y_of/z_of).  kappa, kappa_tilde and ell
    are indexed 0..t; the Takahashi set T keeps kappa_0..kappa_{t-1}, and
    T' = {p' - s : s in T} mirrors it from the top (kappa_t lands in T').
    """

    p: int
    pp: int
    cf: tuple[int, ...]
    n: int
    t: int
    t_bounds: tuple[int, ...]
    _y: tuple[int, ...] = field(repr=False)
    _z: tuple[int, ...] = field(repr=False)
    kappa: tuple[int, ...]
    kappa_tilde: tuple[int, ...]
    ell: tuple[int, ...]
    T: frozenset[int]
    T_prime: frozenset[int]

    def y_of(self, k: int) -> int:
        """y_k for -1 <= k <= n+1."""
        return self._y[k + 1]

    def z_of(self, k: int) -> int:
        """z_k for -1 <= k <= n+1."""
        return self._z[k + 1]

    def zone_of(self, j: int) -> int:
        """The unique k with t_k < j <= t_{k+1} (0 <= j <= t+1)."""
        if not 0 <= j <= self.t_bounds[self.n + 1]:
            raise ValueError(f"index {j} outside 0..{self.t_bounds[self.n + 1]}")
        for k in range(self.n + 1):
            if self.t_bounds[k] < j <= self.t_bounds[k + 1]:
                return k
        raise AssertionError("zone bounds do not cover index")

    def membership(self, a: int, prefer_t_prime: bool = False) -> tuple[str | None, int]:
        """Classify height a against the Takahashi sets.

        Returns ("T", sigma) with kappa_sigma = a, ("T'", sigma) with
        kappa_sigma = p' - a, or (None, -1).  When a lies in both (only
        possible for n = 0), T wins unless prefer_t_prime is set.
        """
        in_t = a in self.T
        in_tp = a in self.T_prime
        if in_t and in_tp and prefer_t_prime:
            in_t = False
        if in_t:
            return "T", self.kappa.index(a)
        if in_tp:
            return "T'", self.kappa.index(self.pp - a)
        return None, -1


def continued_fraction_digits(p: int, pp: int) -> tuple[int, ...]:
    """Continued fraction (c_0, ..., c_n) of pp/p, normalized so c_n >= 2."""
    if gcd(p, pp) != 1 or not 0 < p < pp:
        raise ValueError(f"need coprime 0 < p < p', got ({p}, {pp})")
    cf = []
    a, b = pp, p
    while b:
        cf.append(a // b)
        a, b = b, a % b
    if len(cf) > 1 and cf[-1] == 1:  # canonical Euclid never ends in 1, but be safe
        cf[-2] += 1
        cf.pop()
    return tuple(cf)


@lru_cache(maxsize=None)
def continued_fraction(p: int, pp: int) -> TakahashiData:
    """Build the full Takahashi data for the (p, p') model."""
    cf = continued_fraction_digits(p, pp)
    n = len(cf) - 1
    t = sum(cf) - 2
    t_bounds = tuple(-1 + sum(cf[:k]) for k in range(n + 2))

    y = [0, 1]  # y_{-1}, y_0
    z = [1, 0]
    for k in range(1, n + 2):
        y.append(cf[k - 1] * y[-1] + y[-2])
        z.append(cf[k - 1] * z[-1] + z[-2])

    def zone(j: int) -> int:
        for k in range(n + 1):
            if t_bounds[k] < j <= t_bounds[k + 1]:
                return k
        raise AssertionError

    kappa, kappa_t, ell = [], [], []
    for j in range(t + 1):
        k = zone(j)
        kappa.append(y[k] + (j - t_bounds[k]) * y[k + 1])
        kappa_t.append(z[k] + (j - t_bounds[k]) * z[k + 1])
        ell.append(y[k] + (j - t_bounds[k] - 1) * y[k + 1])

    T = frozenset(kappa[:t])
    T_prime = frozenset(pp - s for s in kappa[:t])

    data = TakahashiData(
        p=p, pp=pp, cf=cf, n=n, t=t, t_bounds=t_bounds,
        _y=tuple(y), _z=tuple(z),
        kappa=tuple(kappa), kappa_tilde=tuple(kappa_t), ell=tuple(ell),
        T=T, T_prime=T_prime,
    )
    assert data.y_of(n + 1) == pp and data.z_of(n + 1) == p
    return data


def submodel_parity_check(model: Model) -> bool:
    """Check that bands 1..y_n-2 of (p,p') match the (z_n, y_n) model.

    The range is vacuous when y_n - 2 < 1 (in particular for n = 0).
    """
    tak = continued_fraction(model.p, model.pp)
    yn, zn = tak.y_of(tak.n), tak.z_of(tak.n)
    if yn - 2 < 1:
        return True
    sub = Model(zn, yn)
    return all(model.band_parity(s) == sub.band_parity(s) for s in range(1, yn - 1))


def format_model_tables(p: int, pp: int) -> str:
    """Human-readable dump of the band strip and Takahashi tables."""
    model = Model(p, pp)
    tak = continued_fraction(p, pp)
    n, t = tak.n, tak.t
    lines = [f"(p, p') = ({p}, {pp})"]
    strip = "".join("#" if o else "." for o in model.band_parities())
    lines.append(f"bands 1..{pp - 2} (#=odd, .=even): {strip}")
    inter = model.interfacial_heights()
    lines.append("interfacial heights: " + (", ".join(map(str, inter)) if inter else "none"))
    lines.append(f"cf = ({', '.join(map(str, tak.cf))})")
    lines.append(f"n = {n}, t = {t}")
    tk = ", ".join(f"t_{k}={tak.t_bounds[k]}" for k in range(1, n + 2))
    lines.append(f"({tk})")
    lines.append("(y_-1,...,y_%d) = (%s)" % (n + 1, ", ".join(str(tak.y_of(k)) for k in range(-1, n + 2))))
    lines.append("(z_-1,...,z_%d) = (%s)" % (n + 1, ", ".join(str(tak.z_of(k)) for k in range(-1, n + 2))))
    lines.append("(kappa_0,...,kappa_%d) = (%s)" % (t - 1, ", ".join(map(str, tak.kappa[:t]))))
    lines.append("(l_1,...,l_%d) = (%s)" % (t, ", ".join(map(str, tak.ell[1:]))))
    lines.append("(kappatilde_0,...,kappatilde_%d) = (%s)" % (t - 1, ", ".join(map(str, tak.kappa_tilde[:t]))))
    lines.append("T  = {%s}" % ", ".join(map(str, sorted(tak.T))))
    lines.append("T' = {%s}" % ", ".join(map(str, sorted(tak.T_prime))))
    if n == 0:
        lines.append("note: n = 0, T and T' overlap; membership prefers T")
    return "\n".join(lines)
