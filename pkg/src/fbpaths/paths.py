"""Weighted lattice paths in a (p,p') band model.

A path is a height sequence h_0..h_L with unit steps, weighted vertex by
vertex: a vertex is scoring when its shape parity matches the band it sits
in (straight vertices score in odd bands, peaks score in even bands), and a
scoring vertex contributes one of its 45-degree coordinates x or y.  Two
boundary conventions exist: a post-segment endpoint c (so the final vertex
is classified against the band between b and c), or wings (e, f) fixing the
directions of a pre-segment and post-segment, under which the final vertex
scores exactly when it is a peak.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .model import Model
from .qpoly import QPoly

STRAIGHT_UP = "straight-up"
STRAIGHT_DOWN = "straight-down"
PEAK_UP = "peak-up"
PEAK_DOWN = "peak-down"


@dataclass(frozen=True)
class PostSeg:
    """Post-segment boundary: the path continues from (L, b) to (L+1, c)."""
    c: int


@dataclass(frozen=True)
class Wings:
    """Pre/post segment directions: e=0 pre-segment SE, e=1 NE; f=0 post NE, f=1 SE."""
    e: int
    f: int


@dataclass(frozen=True)
class Path:
    model: Model
    heights: tuple[int, ...]
    boundary: PostSeg | Wings

    def __post_init__(self):
        hs = self.heights
        if len(hs) < 1:
            raise ValueError("a path needs at least h_0")
        pp = self.model.pp
        for h in hs:
            if not 1 <= h <= pp - 1:
                raise ValueError(f"height {h} outside 1..{pp - 1}")
        for i in range(len(hs) - 1):
            if abs(hs[i + 1] - hs[i]) != 1:
                raise ValueError(f"step h_{i}->h_{i + 1} is not +-1")
        if isinstance(self.boundary, PostSeg):
            c = self.boundary.c
            if abs(c - hs[-1]) != 1:
                raise ValueError(f"post-segment endpoint c={c} is not b+-1")
            if not 1 <= c <= pp - 1:
                raise ValueError(f"c={c} outside 1..{pp - 1}")
        else:
            if self.boundary.e not in (0, 1) or self.boundary.f not in (0, 1):
                raise ValueError("wings e, f must be 0 or 1")

    @property
    def a(self) -> int:
        return self.heights[0]

    @property
    def b(self) -> int:
        return self.heights[-1]

    @property
    def L(self) -> int:
        return len(self.heights) - 1

    def attains(self, s: int) -> bool:
        return s in self.heights


def wings_path(p: int, pp: int, heights, e: int, f: int) -> Path:
    return Path(Model(p, pp), tuple(heights), Wings(e, f))


def postseg_path(p: int, pp: int, heights, c: int) -> Path:
    return Path(Model(p, pp), tuple(heights), PostSeg(c))


# -- vertex classification ---------------------------------------------------

def _parity_table(model: Model) -> tuple[int, ...]:
    """par[h] = parity of band h, with out-of-grid bands 0 and p'-1 even."""
    f = [a * model.p // model.pp for a in range(model.pp + 1)]
    par = [0] * model.pp
    for h in range(1, model.pp - 1):
        par[h] = 1 if f[h] != f[h + 1] else 0
    return tuple(par)


_parity_table = lru_cache(maxsize=None)(_parity_table)


def _virtual_next(path: Path) -> int:
    """h_{L+1}: the post-segment endpoint, or b + (-1)^f under wings."""
    if isinstance(path.boundary, PostSeg):
        return path.boundary.c
    return path.b + (1 if path.boundary.f == 0 else -1)


def classify_vertex(path: Path, i: int) -> tuple[str, str, bool]:
    """(shape, band parity, scoring) of the i-th vertex, 0 <= i <= L.

    Under a post-segment boundary the 0th vertex has no pre-segment and
    cannot be classified.  Under wings the L-th vertex is scoring exactly
    when it is a peak, whatever the band parity.
    """
    hs = path.heights
    L = path.L
    if not 0 <= i <= L:
        raise ValueError(f"vertex index {i} outside 0..{L}")
    wings = isinstance(path.boundary, Wings)
    if i == 0:
        if not wings:
            raise ValueError("0th vertex of a post-segment path has no pre-segment")
        in_up = path.boundary.e == 1
    else:
        in_up = hs[i] > hs[i - 1]
    nxt = hs[i + 1] if i < L else _virtual_next(path)
    out_up = nxt > hs[i]
    shape = (STRAIGHT_UP if out_up else PEAK_UP) if in_up else (PEAK_DOWN if out_up else STRAIGHT_DOWN)
    band = hs[i] if out_up else hs[i] - 1
    odd = _parity_table(path.model)[band]
    if wings and i == L:
        scoring = in_up != out_up
    else:
        scoring = (in_up == out_up) == bool(odd)
    return shape, ("odd" if odd else "even"), scoring


def _wt_postseg(par, heights, c: int, L: int) -> int:
    a = heights[0]
    total = 0
    for i in range(1, L + 1):
        h = heights[i]
        in_up = h > heights[i - 1]
        nxt = heights[i + 1] if i < L else c
        out_up = nxt > h
        if (in_up == out_up) == bool(par[h if out_up else h - 1]):
            d = h - a
            total += (i - d) // 2 if in_up else (i + d) // 2
    return total


def _wtilde_and_m(par, heights, e: int, f: int, L: int) -> tuple[int, int]:
    """(weight under the wing rule, number of non-scoring vertices)."""
    a = heights[0]
    if L == 0:
        return 0, abs(f - e)
    total = 0
    nonscoring = 0
    # vertex 0: no weight, counts for m
    in_up = e == 1
    out_up = heights[1] > heights[0]
    if (in_up == out_up) != bool(par[heights[0] if out_up else heights[0] - 1]):
        nonscoring += 1
    for i in range(1, L):
        h = heights[i]
        in_up = h > heights[i - 1]
        out_up = heights[i + 1] > h
        if (in_up == out_up) == bool(par[h if out_up else h - 1]):
            d = h - a
            total += (i - d) // 2 if in_up else (i + d) // 2
        else:
            nonscoring += 1
    # vertex L: scoring iff peak; weight x for peak-up, y for peak-down
    in_up = heights[L] > heights[L - 1]
    out_up = f == 0
    if in_up != out_up:
        d = heights[L] - a
        total += (L - d) // 2 if in_up else (L + d) // 2
    else:
        nonscoring += 1
    return total, nonscoring


def weight_wt(path: Path) -> int:
    """Path weight under the post-segment convention."""
    if not isinstance(path.boundary, PostSeg):
        raise ValueError("weight_wt needs a post-segment path")
    return _wt_postseg(_parity_table(path.model), path.heights, path.boundary.c, path.L)


def weight_wtilde(path: Path) -> int:
    """Path weight under the wing convention (f-dependent rule at the last vertex)."""
    if not isinstance(path.boundary, Wings):
        raise ValueError("weight_wtilde needs a winged path")
    w, _ = _wtilde_and_m(_parity_table(path.model), path.heights,
                         path.boundary.e, path.boundary.f, path.L)
    return w


# -- striking sequence -------------------------------------------------------

@dataclass(frozen=True)
class StrikingSequence:
    """Run-length decomposition of a winged path into straight lines.

    columns[i] = (a_i, b_i): non-scoring and scoring vertex counts of the
    i-th line (its first vertex belongs to the previous line, its last to
    itself).  The 0th vertex belongs to no line.  d = 0 when the first line
    points NE, 1 when SE.
    """
    columns: tuple[tuple[int, int], ...]
    e: int
    f: int
    d: int

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(a + b for a, b in self.columns)


def striking_sequence(path: Path) -> StrikingSequence:
    if not isinstance(path.boundary, Wings):
        raise ValueError("striking sequences are defined for winged paths")
    e, f = path.boundary.e, path.boundary.f
    hs = path.heights
    L = path.L
    if L == 0:
        return StrikingSequence((), e, f, f)  # direction convention h_1 = h_0 + (-1)^f
    par = _parity_table(path.model)
    d = 0 if hs[1] > hs[0] else 1
    scoring = [False] * (L + 1)
    for i in range(1, L):
        in_up = hs[i] > hs[i - 1]
        out_up = hs[i + 1] > hs[i]
        scoring[i] = (in_up == out_up) == bool(par[hs[i] if out_up else hs[i] - 1])
    scoring[L] = (hs[L] > hs[L - 1]) != (f == 0)
    cols = []
    start = 0  # first segment index of the current line
    i = 1
    while i <= L:
        j = i
        while j < L and (hs[j + 1] - hs[j]) == (hs[i] - hs[i - 1]):
            j += 1
        # line covers segments start..j-1, i.e. vertices start+1..j
        b_count = sum(1 for v in range(start + 1, j + 1) if scoring[v])
        w = j - start
        cols.append((w - b_count, b_count))
        start = j
        i = j + 1
    return StrikingSequence(tuple(cols), e, f, d)


def weight_from_striking(ss: StrikingSequence) -> int:
    """Alternating partial-sum formula: sum_i b_i (w_{i-1} + w_{i-3} + ...)."""
    w = ss.widths
    total = 0
    for i in range(1, len(w) + 1):
        b_i = ss.columns[i - 1][1]
        total += b_i * sum(w[j - 1] for j in range(i - 1, 0, -2))
    return total


def rebuild_heights(widths, d: int, h0: int) -> tuple[int, ...]:
    """Reconstruct the height sequence from line widths, first direction, start."""
    step = 1 if d == 0 else -1
    hs = [h0]
    for w in widths:
        for _ in range(w):
            hs.append(hs[-1] + step)
        step = -step
    return tuple(hs)


def rebuild_path(ss: StrikingSequence, model: Model, h0: int) -> Path:
    return Path(model, rebuild_heights(ss.widths, ss.d, h0), Wings(ss.e, ss.f))


# -- path parameters ---------------------------------------------------------

@dataclass(frozen=True)
class PathStats:
    m: int
    alpha: int
    beta: int
    pi: int
    d: int


def path_stats(path: Path) -> PathStats:
    """m, alpha, beta, pi, d computed from the striking sequence."""
    if not isinstance(path.boundary, Wings):
        raise ValueError("path statistics are defined for winged paths")
    e, f = path.boundary.e, path.boundary.f
    hs = path.heights
    par = _parity_table(path.model)
    if path.L == 0:
        h1 = hs[0] + (1 if f == 0 else -1)
        pi = par[min(hs[0], h1)]
        return PathStats(m=abs(f - e), alpha=0, beta=f - e, pi=pi, d=f)
    ss = striking_sequence(path)
    d = ss.d
    pi = par[min(hs[0], hs[1])]
    sgn = 1 if d == 0 else -1
    w = ss.widths
    bs = tuple(b for _, b in ss.columns)
    alt_w = sum(w[0::2]) - sum(w[1::2])
    alt_b = sum(bs[0::2]) - sum(bs[1::2])
    m = (e + d + pi) % 2 + sum(a for a, _ in ss.columns)
    alpha = sgn * alt_w
    if (e + d + pi) % 2 == 0:
        beta = sgn * alt_b
    else:
        beta = sgn * alt_b + (1 if e == 0 else -1)
    return PathStats(m=m, alpha=alpha, beta=beta, pi=pi, d=d)


def alpha_ab(a: int, b: int) -> int:
    return b - a


def beta_closed_form(model: Model, a: int, b: int, e: int, f: int) -> int:
    """floor(bp/p') - floor(ap/p') + f - e."""
    return model.floor_mult(b) - model.floor_mult(a) + f - e


# -- enumeration -------------------------------------------------------------

def iter_height_seqs(model: Model, a: int, b: int, L: int):
    """Yield every height tuple h_0..h_L from a to b (depth-first, pruned)."""
    pp = model.pp
    if not (1 <= a <= pp - 1 and 1 <= b <= pp - 1) or L < 0:
        return
    if (L + a - b) % 2 or abs(b - a) > L:
        return
    cur = [a] * (L + 1)

    def rec(i: int, h: int):
        if i == L:
            yield tuple(cur)
            return
        rem = L - i - 1
        for nh in (h - 1, h + 1):
            if 1 <= nh <= pp - 1 and abs(b - nh) <= rem:
                cur[i + 1] = nh
                yield from rec(i + 1, nh)

    yield from rec(0, a)


@lru_cache(maxsize=None)
def count_paths(p: int, pp: int, a: int, b: int, L: int) -> int:
    """Independent step-count oracle: number of unit-step paths a -> b in L steps."""
    if not (1 <= a <= pp - 1 and 1 <= b <= pp - 1) or L < 0:
        return 0
    if L == 0:
        return 1 if a == b else 0
    return sum(count_paths(p, pp, nh, b, L - 1) for nh in (a - 1, a + 1) if 1 <= nh <= pp - 1)


def enumerate_paths(model: Model, a: int, b: int, boundary: PostSeg | Wings,
                    L: int, required=None) -> list[Path]:
    """All paths with the given endpoints/boundary; with `required`, only those
    attaining every height in the set.  Impossible parity gives an empty list."""
    req = frozenset(required) if required else None
    out = []
    for hs in iter_height_seqs(model, a, b, L):
        if req and not req.issubset(hs):
            continue
        out.append(Path(model, hs, boundary))
    return out


# -- generating functions ----------------------------------------------------

def chi(model: Model, a: int, b: int, c: int, L: int, attain=None) -> QPoly:
    """Sum of q^wt(h) over post-segment paths a -> b with endpoint c."""
    if abs(c - b) != 1 or not 1 <= c <= model.pp - 1:
        raise ValueError(f"need c = b +- 1 within the grid, got b={b}, c={c}")
    par = _parity_table(model)
    req = frozenset(attain) if attain else None
    counts: dict[int, int] = {}
    for hs in iter_height_seqs(model, a, b, L):
        if req and not req.issubset(hs):
            continue
        w = _wt_postseg(par, hs, c, L)
        counts[w] = counts.get(w, 0) + 1
    return QPoly({4 * w: n for w, n in counts.items()})


@lru_cache(maxsize=None)
def _chi_tilde_by_m(p: int, pp: int, a: int, b: int, e: int, f: int, L: int,
                    attain: frozenset[int] | None = None) -> dict[int, QPoly]:
    model = Model(p, pp)
    par = _parity_table(model)
    acc: dict[int, dict[int, int]] = {}
    for hs in iter_height_seqs(model, a, b, L):
        if attain and not attain.issubset(hs):
            continue
        w, m = _wtilde_and_m(par, hs, e, f, L)
        acc.setdefault(m, {})
        acc[m][w] = acc[m].get(w, 0) + 1
    return {m: QPoly({4 * w: n for w, n in cs.items()}) for m, cs in acc.items()}


def chi_tilde_by_m(model: Model, a: int, b: int, e: int, f: int, L: int,
                   attain=None) -> dict[int, QPoly]:
    """Winged generating functions split by the non-scoring count m."""
    req = frozenset(attain) if attain else None
    return _chi_tilde_by_m(model.p, model.pp, a, b, e, f, L, req)


def chi_tilde(model: Model, a: int, b: int, e: int, f: int, L: int,
              m: int | None = None, attain=None) -> QPoly:
    """Sum of q^wtilde(h) over winged paths, optionally restricted to m(h) = m."""
    table = chi_tilde_by_m(model, a, b, e, f, L, attain=attain)
    if m is not None:
        return table.get(m, QPoly.zero())
    out = QPoly.zero()
    for poly in table.values():
        out = out + poly
    return out


def chi_tilde_restricted(model: Model, a: int, b: int, e: int, f: int, L: int,
                         m: int | None = None, S=None) -> QPoly:
    """As chi_tilde but over paths attaining every height of the interfacial set S."""
    S = frozenset(S or ())
    for s in S:
        if not model.is_interfacial(s):
            raise ValueError(f"height {s} is not interfacial in ({model.p},{model.pp})")
    return chi_tilde(model, a, b, e, f, L, m=m, attain=S)


# -- JSON interchange --------------------------------------------------------

def path_to_json(path: Path) -> dict:
    d = {"p": path.model.p, "pp": path.model.pp, "heights": list(path.heights)}
    if isinstance(path.boundary, PostSeg):
        d["boundary"] = {"c": path.boundary.c}
    else:
        d["boundary"] = {"e": path.boundary.e, "f": path.boundary.f}
    return d


def path_from_json(d: dict) -> Path:
    try:
        model = Model(int(d["p"]), int(d["pp"]))
        heights = tuple(int(h) for h in d["heights"])
        bd = d["boundary"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed path JSON: missing {exc}") from exc
    if "c" in bd:
        boundary: PostSeg | Wings = PostSeg(int(bd["c"]))
    elif "e" in bd and "f" in bd:
        boundary = Wings(int(bd["e"]), int(bd["f"]))
    else:
        raise ValueError("boundary must carry either c or both e and f")
    return Path(model, heights, boundary)
