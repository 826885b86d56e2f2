"""Path transforms between band models and their bijection verifiers.

The building blocks: path dilation into the (p, p'+p) model, insertion of k
particles (adjacent pairs of scoring vertices), particle motion indexed by a
partition, the parity-flip map onto the (p'-p, p') model, and single-unit
extension/truncation at either end.  Every transform works on explicit
height lists; striking-sequence identities are only used as test oracles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import Model
from .paths import (
    Path, Wings, _parity_table, _wtilde_and_m, chi_tilde, path_stats,
    rebuild_heights, striking_sequence,
)
from .qpoly import QPoly, gaussian


class TransformError(ValueError):
    """A transform was applied outside its domain."""


def _require_wings(path: Path) -> Wings:
    if not isinstance(path.boundary, Wings):
        raise TransformError("transforms act on winged paths")
    return path.boundary


# -- scoring flags (wing convention) -----------------------------------------

def _scoring_flags(model: Model, heights, e: int, f: int) -> list[bool]:
    """Scoring status of vertices 0..L; vertex L scores exactly when a peak."""
    par = _parity_table(model)
    L = len(heights) - 1
    if L == 0:
        return [(e == 1) != (f == 0)]
    flags = [False] * (L + 1)
    in_up = e == 1
    out_up = heights[1] > heights[0]
    flags[0] = (in_up == out_up) == bool(par[heights[0] if out_up else heights[0] - 1])
    for i in range(1, L):
        in_up = heights[i] > heights[i - 1]
        out_up = heights[i + 1] > heights[i]
        flags[i] = (in_up == out_up) == bool(par[heights[i] if out_up else heights[i] - 1])
    flags[L] = (heights[L] > heights[L - 1]) != (f == 0)
    return flags


def _wtilde(model: Model, heights, e: int, f: int) -> int:
    w, _ = _wtilde_and_m(_parity_table(model), tuple(heights), e, f, len(heights) - 1)
    return w


def _m_count(model: Model, heights, e: int, f: int) -> int:
    _, m = _wtilde_and_m(_parity_table(model), tuple(heights), e, f, len(heights) - 1)
    return m


# -- path dilation -----------------------------------------------------------

def b1(path: Path) -> Path:
    """Dilate into the (p, p'+p) model.

    Every scoring vertex gets a straight vertex inserted before it (with a
    small correction on the first line when the 0th vertex is non-scoring);
    undefined for L = 0 with e != f.
    """
    wings = _require_wings(path)
    e, f = wings.e, wings.f
    model = path.model
    big = Model(model.p, model.pp + model.p)
    a_new = path.a + model.floor_mult(path.a) + e
    if path.L == 0:
        if e != f:
            raise TransformError("dilation is undefined for L = 0 with e != f")
        return Path(big, (a_new,), Wings(e, f))
    ss = striking_sequence(path)
    st = path_stats(path)
    widths = list(ss.widths)
    bs = [b for _, b in ss.columns]
    new_widths = [w + b for w, b in zip(widths, bs)]
    if (e + ss.d + st.pi) % 2 == 1:
        new_widths[0] = widths[0] + bs[0] + 2 * st.pi - 1
    return Path(big, rebuild_heights(new_widths, ss.d, a_new), Wings(e, f))


def b1_inverse(path0: Path) -> Path:
    """Undo dilation: map a dilated path in (p, p') back to (p, p'-p)."""
    wings = _require_wings(path0)
    e, f = wings.e, wings.f
    model = path0.model
    if model.pp <= 2 * model.p:
        raise TransformError("inverse dilation needs p' > 2p")
    small = Model(model.p, model.pp - model.p)
    a = path0.a - model.floor_mult(path0.a) - e
    if not 1 <= a <= small.pp - 1:
        raise TransformError("path is not in the image of a dilation")
    if path0.L == 0:
        if e == f:
            return Path(small, (a,), Wings(e, f))
        # the image of the single segment whose far vertex is non-scoring:
        # the first line collapsed to width w_1 + b_1 - 1 = 0
        step = 1 if f == 0 else -1
        if not 1 <= a + step <= small.pp - 1:
            raise TransformError("point path with e != f is not a dilation image")
        return Path(small, (a, a + step), Wings(e, f))
    ss = striking_sequence(path0)
    flags = _scoring_flags(model, path0.heights, e, f)
    widths = list(ss.widths)
    bs = [b for _, b in ss.columns]
    # one straight vertex was inserted before every scoring vertex, except on
    # the first line when the 0th vertex changed character under dilation
    small_widths = [w - b for w, b in zip(widths, bs)]
    small_bs = bs[:]
    if not flags[0]:
        small_widths[0] += 1  # preimage had e+d+pi odd with pi = 0
    elif path0.L >= 2 and flags[1] and (path0.heights[1] - path0.heights[0]) == (path0.heights[2] - path0.heights[1]):
        # scoring pair at vertices 0,1 with a straight 1st vertex: pi was 1
        small_bs[0] -= 1
    if any(w <= 0 for w in small_widths) or any(b < 0 or b > w for w, b in zip(small_widths, small_bs)):
        raise TransformError("path is not in the image of a dilation")
    try:
        return Path(small, rebuild_heights(small_widths, ss.d, a), Wings(e, f))
    except ValueError as exc:
        raise TransformError("path is not in the image of a dilation") from exc


# -- particle insertion ------------------------------------------------------

def b2(path: Path, k: int) -> Path:
    """Insert k particles at the startpoint (pairs of opposite unit segments)."""
    wings = _require_wings(path)
    e, f = wings.e, wings.f
    model = path.model
    if k < 0:
        raise TransformError("particle count must be >= 0")
    if k == 0:
        return path
    if model.pp <= 2 * model.p:
        raise TransformError("particle insertion needs p' > 2p")
    if model.delta(path.a, e) != 0:
        raise TransformError("particle insertion needs the pre-segment in an even band")
    h0 = path.a
    step = 1 if e == 0 else -1
    if not 1 <= h0 + step <= model.pp - 1:
        raise TransformError("particle insertion leaves the grid")
    heights = tuple([h0, h0 + step] * k) + path.heights
    return Path(model, heights, Wings(e, f))


# -- particle moves ----------------------------------------------------------

def _candidate_windows(heights, lo: int, hi: int, pp: int):
    """All +-1-step refills of positions lo..hi (0 < lo, hi < L), anchored."""
    fixed_left = heights[lo - 1]
    fixed_right = heights[hi + 1]

    def rec(pos: int, prev: int, acc: tuple[int, ...]):
        if pos > hi:
            if abs(fixed_right - prev) == 1:
                yield acc
            return
        for nh in (prev - 1, prev + 1):
            if 1 <= nh <= pp - 1:
                yield from rec(pos + 1, nh, acc + (nh,))

    yield from rec(lo, fixed_left, ())


def _rewrite_window(model: Model, heights: list[int], e: int, f: int,
                    w0: int, after: tuple[bool, bool, bool], dw: int) -> list[int]:
    """Re-route the three vertices w0..w0+2 so their scoring pattern becomes
    `after`, the weight changes by exactly dw, and m is preserved.

    The endpoints of the enclosing four segments stay put (h_0 and h_L are
    always pinned); there must be exactly one such re-routing.
    """
    L = len(heights) - 1
    lo = max(w0, 1)
    hi = min(w0 + 2, L - 1)
    if lo > hi:
        raise TransformError("no movable vertex in the window")
    old_w = _wtilde(model, heights, e, f)
    old_m = _m_count(model, heights, e, f)
    found = None
    for cand in _candidate_windows(heights, lo, hi, model.pp):
        new_heights = heights[:lo] + list(cand) + heights[hi + 1:]
        if new_heights == heights:
            continue
        flags = _scoring_flags(model, new_heights, e, f)
        if tuple(flags[w0:w0 + 3]) != after:
            continue
        if _wtilde(model, new_heights, e, f) - old_w != dw:
            continue
        if _m_count(model, new_heights, e, f) != old_m:
            continue
        if found is not None:
            raise AssertionError("ambiguous particle move")
        found = new_heights
    if found is None:
        raise TransformError("particle move is blocked")
    return found


def _dir_string(heights, i0: int, i1: int) -> str:
    return "".join("+" if heights[i + 1] > heights[i] else "-"
                   for i in range(max(i0, 0), min(i1, len(heights) - 1)))


def move_particle_once(model: Model, heights: list[int], e: int, f: int,
                       v: int, trace: list | None = None) -> tuple[list[int], int]:
    """Move the particle whose scoring pair starts at vertex v one step right.

    When the pair abuts further scoring vertices, the moving pair relabels to
    the last two of the scoring run (particles are indistinguishable, so the
    excitation slides along the run); refuses at the path end.  Returns the
    new heights and the new pair start v+1.
    """
    L = len(heights) - 1
    flags = _scoring_flags(model, heights, e, f)
    if not (v + 1 <= L and flags[v] and flags[v + 1]):
        raise TransformError(f"no scoring pair at vertices ({v},{v + 1})")
    while v + 2 <= L and flags[v + 2]:
        v += 1
    if v + 2 > L:
        raise TransformError("particle at the path end cannot move right")
    before = _dir_string(heights, v - 1, v + 3)
    new_heights = _rewrite_window(model, heights, e, f, v, (False, True, True), +1)
    if trace is not None:
        trace.append({"from_index": v, "move": before + ">" + _dir_string(new_heights, v - 1, v + 3)})
    return new_heights, v + 1


def reverse_particle_move(model: Model, heights: list[int], e: int, f: int,
                          v: int) -> tuple[list[int], int]:
    """Move the scoring pair starting at vertex v one step left (inverse move)."""
    L = len(heights) - 1
    flags = _scoring_flags(model, heights, e, f)
    if not (v + 1 <= L and flags[v] and flags[v + 1]):
        raise TransformError(f"no scoring pair at vertices ({v},{v + 1})")
    if v - 1 < 0 or flags[v - 1]:
        raise TransformError("reverse move needs a non-scoring vertex on the left")
    new_heights = _rewrite_window(model, heights, e, f, v - 1, (True, True, False), -1)
    return new_heights, v - 1


def b3(path: Path, lam, k: int | None = None, trace: list | None = None) -> Path:
    """Move the i-th rightmost inserted particle lam[i-1] steps to the right.

    Expects the k inserted particles stacked at the start (the b2 image);
    lam must be a partition with at most k parts and lam[0] <= m(path).
    """
    wings = _require_wings(path)
    e, f = wings.e, wings.f
    model = path.model
    lam = tuple(lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or any(x < 0 for x in lam):
        raise TransformError("lambda must be a weakly decreasing partition")
    if k is None:
        k = len(lam)
    if len(lam) > k:
        raise TransformError(f"lambda has more than k={k} parts")
    if not lam or all(x == 0 for x in lam):
        return path
    if model.pp <= 2 * model.p:
        raise TransformError("particle moves need p' > 2p")
    if model.delta(path.a, e) != 0 or model.delta(path.b, f) != 0:
        raise TransformError("particle moves need even pre- and post-segment bands")
    if lam[0] > _m_count(model, path.heights, e, f):
        raise TransformError("lambda_1 exceeds the number of non-scoring vertices")
    heights = list(path.heights)
    for i, steps in enumerate(lam):
        v = 2 * (k - 1 - i)
        for _ in range(steps):
            heights, v = move_particle_once(model, heights, e, f, v, trace=trace)
    return Path(model, tuple(heights), Wings(e, f))


def b_transform(path: Path, k: int, lam, trace: list | None = None) -> Path:
    """Dilation, then k particle insertions, then moves indexed by lam."""
    return b3(b2(b1(path), k), lam, k=k, trace=trace)


# -- parity-flip map ---------------------------------------------------------

def d_transform(path: Path) -> Path:
    """Same heights in the (p'-p, p') model, both wings flipped."""
    wings = _require_wings(path)
    return Path(path.model.dual(), path.heights, Wings(1 - wings.e, 1 - wings.f))


def bd_transform(path: Path, k: int, lam, trace: list | None = None) -> Path:
    """Parity flip followed by the full dilation/insertion/move composite."""
    if path.model.pp <= 2 * path.model.p:
        raise TransformError("the flip-then-dilate pair needs p' > 2p on the input model")
    return b_transform(d_transform(path), k, lam, trace=trace)


# -- unique decomposition ----------------------------------------------------

def _vertex_is_straight(heights, f: int, i: int) -> bool:
    """Both segments through vertex i point the same way (the last segment of
    the path continues into the post-segment direction given by f)."""
    L = len(heights) - 1
    into = heights[i] - heights[i - 1]
    out = (heights[i + 1] - heights[i]) if i < L else (1 if f == 0 else -1)
    return into == out


def decompose(path: Path, direction: str = "B") -> tuple[Path, int, tuple[int, ...]]:
    """Invert the composite transform: recover the unique (h, k, lambda).

    Scoring pairs are walked leftward (undoing moves) and parked at vertices
    (0,1), (2,3), ...; when the base path had its pre-segment in an odd band,
    dilation leaves one extra parked pair whose second vertex is straight (the
    non-particle artifact), which is excluded from the particle count k.
    direction "B" undoes dilation+insertion+moves; "BD" additionally undoes
    the leading parity flip (so the returned path lives in the flipped model).
    """
    wings = _require_wings(path)
    e, f = wings.e, wings.f
    model = path.model
    if direction not in ("B", "BD"):
        raise TransformError("direction must be 'B' or 'BD'")
    if model.pp <= 2 * model.p:
        raise TransformError("decomposition needs p' > 2p")
    if model.delta(path.a, e) != 0 or model.delta(path.b, f) != 0:
        raise TransformError("decomposition needs even pre- and post-segment bands")
    heights = list(path.heights)
    L = path.L
    mu: list[int] = []
    j = 0
    while True:
        flags = _scoring_flags(model, heights, e, f)
        v = None
        for cand in range(2 * j, L):
            if flags[cand] and flags[cand + 1]:
                v = cand
                break
        if v is None:
            break
        if 2 * (j + 1) > L:
            raise TransformError("path is not in the image of the composite transform")
        moves = 0
        while v > 2 * j:
            flags = _scoring_flags(model, heights, e, f)
            if flags[v - 1]:
                v -= 1  # relabel: the pair slides left over a scoring vertex
            else:
                heights, v = reverse_particle_move(model, heights, e, f, v)
                moves += 1
        mu.append(moves)
        j += 1
    k = j
    if k and _vertex_is_straight(heights, f, 2 * k - 1):
        k -= 1  # last parked pair is the dilation artifact, not a particle
    lam = tuple(x for x in reversed(mu) if x)  # canonical partition: positive parts
    if len(lam) > k:
        raise TransformError("path is not in the image of the composite transform")
    core = heights[2 * k:]
    if k:
        stacked = heights[:2 * k + 1]
        if any(stacked[i] != path.a for i in range(0, 2 * k + 1, 2)) or \
           any(abs(stacked[i] - path.a) != 1 for i in range(1, 2 * k, 2)):
            raise TransformError("reversed particles did not stack at the startpoint")
    h0 = Path(model, tuple(core), Wings(e, f))
    base = b1_inverse(h0)
    return (d_transform(base) if direction == "BD" else base), k, lam


# -- extension and truncation -------------------------------------------------

def extend_left(path: Path) -> Path:
    """Prepend the pre-segment as a real segment; flips e."""
    wings = _require_wings(path)
    e = wings.e
    model = path.model
    if model.delta(path.a, e) != 0:
        raise TransformError("left extension needs the pre-segment in an even band")
    a_new = path.a + (1 if e == 0 else -1)
    if not 1 <= a_new <= model.pp - 1:
        raise TransformError("left extension leaves the grid")
    return Path(model, (a_new,) + path.heights, Wings(1 - e, wings.f))


def extend_right(path: Path) -> Path:
    """Append the post-segment as a real segment; flips f."""
    wings = _require_wings(path)
    f = wings.f
    model = path.model
    if model.delta(path.b, f) != 0:
        raise TransformError("right extension needs the post-segment in an even band")
    b_new = path.b + (1 if f == 0 else -1)
    if not 1 <= b_new <= model.pp - 1:
        raise TransformError("right extension leaves the grid")
    return Path(model, path.heights + (b_new,), Wings(wings.e, 1 - f))


def truncate_left(path: Path) -> Path:
    """Drop the first segment; defined at the extreme heights when p' > 2p."""
    wings = _require_wings(path)
    e = wings.e
    model = path.model
    if model.pp <= 2 * model.p:
        raise TransformError("left truncation needs p' > 2p")
    if not ((path.a == 1 and e == 0) or (path.a == model.pp - 1 and e == 1)):
        raise TransformError("left truncation needs a = 1 with e = 0, or a = p'-1 with e = 1")
    if path.L < 1:
        raise TransformError("nothing to truncate")
    return Path(model, path.heights[1:], Wings(1 - e, wings.f))


def truncate_right(path: Path) -> Path:
    """Drop the last segment; defined at the extreme heights when p' > 2p."""
    wings = _require_wings(path)
    f = wings.f
    model = path.model
    if model.pp <= 2 * model.p:
        raise TransformError("right truncation needs p' > 2p")
    if not ((path.b == 1 and f == 0) or (path.b == model.pp - 1 and f == 1)):
        raise TransformError("right truncation needs b = 1 with f = 0, or b = p'-1 with f = 1")
    if path.L < 1:
        raise TransformError("nothing to truncate")
    return Path(model, path.heights[:-1], Wings(wings.e, 1 - f))


# -- generating-function identity verifiers -----------------------------------

@dataclass
class BijectionReport:
    params: dict
    equal: bool
    lhs: QPoly
    rhs: QPoly
    mismatch: tuple[int, int, int] | None = field(default=None)

    def __bool__(self) -> bool:
        return self.equal


def _first_mismatch(lhs: QPoly, rhs: QPoly):
    exps = sorted(set(lhs.terms) | set(rhs.terms))
    for ex in exps:
        cl, cr = lhs.terms.get(ex, 0), rhs.terms.get(ex, 0)
        if cl != cr:
            return ex, cl, cr
    return None


def _report(params: dict, lhs: QPoly, rhs: QPoly) -> BijectionReport:
    mm = _first_mismatch(lhs, rhs)
    return BijectionReport(params=params, equal=mm is None, lhs=lhs, rhs=rhs, mismatch=mm)


def _check_restriction_set(model: Model, S, a: int, b: int) -> frozenset[int]:
    S = frozenset(S or ())
    for s in S:
        if not model.is_interfacial(s):
            raise TransformError(f"{s} is not interfacial in ({model.p},{model.pp})")
        if s == a or s == b:
            raise TransformError("the restriction set must avoid the endpoints")
    return S


def verify_b_bijection(p: int, pp: int, a: int, b: int, e: int, f: int,
                       m0: int, m1: int, S=None) -> BijectionReport:
    """Check the dilation identity between (p, p') and (p, p'+p) exactly.

    Left side: paths of length m0 with m = m1 in the bigger model, by
    enumeration.  Right side: Gaussian-weighted sum of length-m1 counts in
    the smaller model, shifted by the quadratic prefactor.
    """
    model = Model(p, pp)
    if model.delta(a, e) != 0:
        raise TransformError("the dilation identity needs delta(a, e) = 0")
    S = _check_restriction_set(model, S, a, b)
    S_big = frozenset(s + model.floor_mult(s + 1) for s in S)
    a_new = a + e + model.floor_mult(a)
    b_new = b + f + model.floor_mult(b)
    big = Model(p, pp + p)
    lhs = chi_tilde(big, a_new, b_new, e, f, L=m0, m=m1, attain=S_big)
    beta = model.floor_mult(b) - model.floor_mult(a) + f - e
    rhs = QPoly.zero()
    for m in range(m0 % 2, m1 + 2, 2):
        piece = chi_tilde(model, a, b, e, f, L=m1, m=m, attain=S)
        if piece:
            rhs = rhs + gaussian((m0 + m) // 2, m1) * piece
    rhs = rhs.shift((m0 - m1) ** 2 - beta ** 2)
    params = {"p": p, "pp": pp, "a": a, "b": b, "e": e, "f": f,
              "m0": m0, "m1": m1, "S": sorted(S)}
    return _report(params, lhs, rhs)


def verify_bd_bijection(p: int, pp: int, a: int, b: int, e: int, f: int,
                        m0: int, m1: int, S=None) -> BijectionReport:
    """Check the flip-then-dilate identity between (p'-p, p') and (p, p'+p).

    Needs p < p' < 2p; the inner generating function enters at q -> 1/q.
    """
    if not p < pp < 2 * p:
        raise TransformError("the flip-then-dilate identity needs p < p' < 2p")
    model = Model(p, pp)
    dual = model.dual()
    if dual.delta(a, e) != 0:
        raise TransformError("needs delta(a, e) = 0 in the flipped model")
    S = _check_restriction_set(model, S, a, b)
    S_big = frozenset(s + model.floor_mult(s + 1) for s in S)
    a_new = a + 1 - e + model.floor_mult(a)
    b_new = b + 1 - f + model.floor_mult(b)
    big = Model(p, pp + p)
    lhs = chi_tilde(big, a_new, b_new, 1 - e, 1 - f, L=m0, m=m1, attain=S_big)
    alpha = b - a
    beta = model.floor_mult(b) - model.floor_mult(a) + (1 - f) - (1 - e)
    rhs = QPoly.zero()
    for m in range((m0 - m1) % 2, m1 + 2, 2):
        piece = chi_tilde(dual, a, b, e, f, L=m1, m=m, attain=S)
        if piece:
            rhs = rhs + gaussian((m0 + m1 - m) // 2, m1) * piece.invert_q()
    rhs = rhs.shift(m1 ** 2 + (m0 - m1) ** 2 - alpha ** 2 - beta ** 2)
    params = {"p": p, "pp": pp, "a": a, "b": b, "e": e, "f": f,
              "m0": m0, "m1": m1, "S": sorted(S)}
    return _report(params, lhs, rhs)
