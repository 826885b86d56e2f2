"""Closed forms for the path generating functions.

Three independent routes to the same polynomial: brute-force enumeration
(module paths), the alternating-sign double sum with Gaussian factors, and
two constant-sign quadratic-exponent sums driven by the Takahashi data (one
with classical Gaussians plus a smaller-model tail, one with modified
Gaussians and no tail).  The mn-system ties the summation vectors of the
constant-sign forms to particle counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .model import Model, TakahashiData, continued_fraction
from .qpoly import QPoly, gaussian, gaussian_modified
from .paths import chi  # noqa: F401  (re-exported convenience for sweep drivers)


# -- alternating-sign (bosonic) form ------------------------------------------

def groundstate_label(p: int, pp: int, b: int, c: int) -> int:
    """r = floor(p c / p') + (b - c + 1)/2."""
    return p * c // pp + (b - c + 1) // 2


def bosonic(p: int, pp: int, a: int, b: int, c: int, L: int) -> QPoly:
    """Alternating double sum with Gaussian factors; equals the enumeration."""
    model = Model(p, pp)
    if not (1 <= a <= pp - 1 and 1 <= b <= pp - 1 and 1 <= c <= pp - 1):
        raise ValueError("heights a, b, c must lie in 1..p'-1")
    if abs(b - c) != 1:
        raise ValueError("need c = b +- 1")
    if L < 0 or (L + a - b) % 2:
        return QPoly.zero()
    r = groundstate_label(p, pp, b, c)
    base = (L + a - b) // 2
    out = QPoly.zero()
    # positive sum: Gaussian lower index base - p'*lam must lie in 0..L
    for lam in range(-((L - base) // pp), base // pp + 1):
        ex = lam * lam * p * pp + lam * (pp * r - p * a)
        out = out + gaussian(L, base - pp * lam).shift(4 * ex)
    # negative sum: lower index base - p'*lam - a in 0..L
    lo = -((L - base + a) // pp)
    hi = (base - a) // pp
    for lam in range(lo, hi + 1):
        ex = (lam * p + r) * (lam * pp + a)
        out = out - gaussian(L, base - pp * lam - a).shift(4 * ex)
    return out


def partition_series(N: int) -> QPoly:
    """1/(q)_infinity expanded to degree N: the partition-counting series."""
    ways = [0] * (N + 1)
    ways[0] = 1
    for part in range(1, N + 1):
        for n in range(part, N + 1):
            ways[n] += ways[n - part]
    return QPoly({4 * n: w for n, w in enumerate(ways) if w})


def rocha_caridi_truncated(p: int, pp: int, r: int, s: int, N: int) -> QPoly:
    """The character series 1/(q)_inf * sum_lam (...) expanded to degree N."""
    if N < 0:
        raise ValueError("truncation degree must be >= 0")
    series = QPoly.zero()
    span = N + pp + abs(r) + abs(s) + 3  # quadratic exponents exceed N beyond this
    for lam in range(-span, span + 1):
        e1 = lam * lam * p * pp + lam * (pp * r - p * s)
        if e1 <= N:
            series = series + QPoly.q_int(e1)
        e2 = (lam * p + r) * (lam * pp + s)
        if e2 <= N:
            series = series - QPoly.q_int(e2)
    return (partition_series(N) * series).truncate(N)


# -- endpoint-to-post-segment convention --------------------------------------

def c_from_b_info(p: int, pp: int, b: int) -> tuple[int, bool]:
    """The post-segment endpoint for a given b, and whether b+-1 both work.

    Small b (within the first zone) pairs with b-1, mirrored at the top; in
    between, b is interfacial and either choice gives the same polynomial
    (we pick b+1).
    """
    tak = continued_fraction(p, pp)
    thr = tak.t_bounds[1] if pp > 2 * p else tak.t_bounds[2]
    if b == 1:
        return 2, False
    if 1 < b <= thr:
        return b - 1, False
    if b == pp - 1:
        return pp - 2, False
    if pp - thr <= b < pp - 1:
        return b + 1, False
    return b + 1, True


def c_from_b(p: int, pp: int, b: int) -> int:
    return c_from_b_info(p, pp, b)[0]


# -- the constant-sign system --------------------------------------------------

@dataclass(frozen=True)
class GammaTrace:
    """The three iterated sequences (index j = 0..t) and their intermediates."""
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    gamma: tuple[int, ...]
    alpha_dd: tuple[int, ...]   # alpha''_j
    beta_p: tuple[int, ...]     # beta'_j
    gamma_dd: tuple[int, ...]   # gamma''_j


@dataclass(frozen=True)
class FermionicSystem:
    tak: TakahashiData
    a: int
    b: int
    kind_L: str
    kind_R: str
    sigma_L: int
    sigma_R: int
    k_L: int
    k_R: int
    u_L: tuple[int, ...]        # components 1..t at index j-1
    u_R: tuple[int, ...]
    delta_L: tuple[int, ...]
    delta_R: tuple[int, ...]
    C: tuple[tuple[int, ...], ...]       # t x t, rows and columns 0..t-1
    C_hat: tuple[tuple[int, ...], ...]   # rows 1..t (stored 0-based), columns 0..t-1
    Q: tuple[int, ...]          # Q_0..Q_{t-1} for u = u_L + u_R
    trace: GammaTrace
    gamma: int

    @property
    def t(self) -> int:
        return self.tak.t


def _takahashi_vectors(tak: TakahashiData, kind: str, sigma: int):
    # e_0 is the zero vector (components run 1..t), so index-0 hits drop out
    t = tak.t
    boundaries = [tak.t_bounds[k] for k in range(1, tak.n + 1)]
    u = [0] * t
    delta = [0] * t
    if sigma >= 1:
        u[sigma - 1] += 1
    for tk in boundaries:
        if tk >= 1 and sigma <= tk < t:
            u[tk - 1] -= 1
    if kind == "T":
        if sigma >= 1:
            delta[sigma - 1] -= 1
        for tk in boundaries:
            if tk >= 1 and sigma <= tk < t:
                delta[tk - 1] += 1
    else:
        u[t - 1] += 1
        delta[t - 1] -= 1
        if sigma >= 1:
            delta[sigma - 1] += 1
        for tk in boundaries:
            if tk >= 1 and sigma <= tk < t:
                delta[tk - 1] -= 1
    return tuple(u), tuple(delta)


def _c_matrices(tak: TakahashiData):
    t = tak.t
    boundary = {tak.t_bounds[k] for k in range(1, tak.n + 1)}

    def row(i: int) -> tuple[int, ...]:
        r = [0] * t
        if i in boundary:
            vals = {i - 1: -1, i: 1, i + 1: 1}
        else:
            vals = {i - 1: -1, i: 2, i + 1: -1}
        for j, v in vals.items():
            if 0 <= j <= t - 1:
                r[j] = v
        return tuple(r)

    C = tuple(row(i) for i in range(t))
    C_hat = tuple(row(i) for i in range(1, t + 1))
    return C, C_hat


def _solve_parity(C_hat, u: tuple[int, ...]) -> tuple[int, ...]:
    """Integer back-substitution for C_hat x = u, reduced mod 2.

    Row i of C_hat (equation i = 1..t) has its lowest column at i-1 with
    entry -1, so x fills in from the top equation downward.
    """
    t = len(u)
    x = [0] * t
    for i in range(t, 0, -1):
        s = u[i - 1]
        row = C_hat[i - 1]
        for j in range(i, t):
            s -= row[j] * x[j]
        x[i - 1] = -s  # coefficient of x_{i-1} is -1
    return tuple(v % 2 for v in x)


def _gamma_iteration(tak: TakahashiData, delta_L, delta_R) -> GammaTrace:
    t = tak.t
    boundary = {tak.t_bounds[k] for k in range(1, tak.n + 1)}
    alpha = [0] * (t + 1)
    beta = [0] * (t + 1)
    gamma = [0] * (t + 1)
    alpha_dd = [0] * (t + 1)
    beta_p = [0] * (t + 1)
    gamma_dd = [0] * (t + 1)
    for j in range(t, 0, -1):
        bp = beta[j] + delta_L[j - 1] - delta_R[j - 1]
        gp = gamma[j] + 2 * alpha[j] * delta_R[j - 1]
        add = alpha[j] + bp
        gdd = gp - bp * bp
        beta_p[j - 1] = bp
        alpha_dd[j - 1] = add
        gamma_dd[j - 1] = gdd
        if (j - 1) in boundary:
            alpha[j - 1], beta[j - 1], gamma[j - 1] = add, add - bp, -add * add - gdd
        else:
            alpha[j - 1], beta[j - 1], gamma[j - 1] = add, bp, gdd
    return GammaTrace(tuple(alpha), tuple(beta), tuple(gamma),
                      tuple(alpha_dd), tuple(beta_p), tuple(gamma_dd))


@lru_cache(maxsize=None)
def build_system(p: int, pp: int, a: int, b: int,
                 prefer_t_prime: bool = False) -> FermionicSystem:
    """Assemble every ingredient of the constant-sign sums for endpoints a, b."""
    tak = continued_fraction(p, pp)
    kind_L, sigma_L = tak.membership(a, prefer_t_prime)
    kind_R, sigma_R = tak.membership(b, prefer_t_prime)
    if kind_L is None or kind_R is None:
        bad = a if kind_L is None else b
        raise ValueError(f"height {bad} is not a Takahashi length (or complement) in ({p},{pp})")
    u_L, delta_L = _takahashi_vectors(tak, kind_L, sigma_L)
    u_R, delta_R = _takahashi_vectors(tak, kind_R, sigma_R)
    C, C_hat = _c_matrices(tak)
    u_sum = tuple(x + y for x, y in zip(u_L, u_R))
    Q = _solve_parity(C_hat, u_sum)
    trace = _gamma_iteration(tak, delta_L, delta_R)
    return FermionicSystem(
        tak=tak, a=a, b=b, kind_L=kind_L, kind_R=kind_R,
        sigma_L=sigma_L, sigma_R=sigma_R,
        k_L=tak.zone_of(sigma_L) if sigma_L > tak.t_bounds[0] else 0,
        k_R=tak.zone_of(sigma_R) if sigma_R > tak.t_bounds[0] else 0,
        u_L=u_L, u_R=u_R, delta_L=delta_L, delta_R=delta_R,
        C=C, C_hat=C_hat, Q=Q, trace=trace, gamma=trace.gamma[0],
    )


def flat_sharp(u: tuple[int, ...], tak: TakahashiData, variant: str,
               k_offset: int = 0) -> tuple[int, ...]:
    """Zone-parity mask of a t-vector, giving components 1..t-1.

    "flat" zeroes components in zones congruent to k_offset mod 2, "sharp"
    keeps exactly those.
    """
    if variant not in ("flat", "sharp"):
        raise ValueError("variant must be 'flat' or 'sharp'")
    out = []
    for j in range(1, tak.t):
        same = tak.zone_of(j) % 2 == k_offset % 2
        keep = (variant == "sharp") == same
        out.append(u[j - 1] if keep else 0)
    return tuple(out)


# -- the fermionic sums --------------------------------------------------------

@dataclass(frozen=True)
class MnSolution:
    m_hat: tuple[int, ...]   # (L, m_1, ..., m_{t-1})
    n: tuple[int, ...]       # (n_1, ..., n_t)


def _c_hat_m(system: FermionicSystem, m_hat: tuple[int, ...], j: int) -> int:
    """(C_hat m_hat)_j for 1 <= j <= t, with m_t = 0."""
    row = system.C_hat[j - 1]
    s = sum(row[i] * m_hat[i] for i in range(len(m_hat)) if row[i])
    return s


def _n_vector(system: FermionicSystem, m_hat: tuple[int, ...]) -> tuple[int, ...]:
    """n = (u - C_hat m_hat)/2; raises if the parities are inconsistent."""
    t = system.t
    u = tuple(x + y for x, y in zip(system.u_L, system.u_R))
    n = []
    for j in range(1, t + 1):
        v = u[j - 1] - _c_hat_m(system, m_hat, j)
        if v % 2:
            raise ValueError("non-integral particle count: parity mismatch")
        n.append(v // 2)
    return tuple(n)


def _iter_admissible_m(system: FermionicSystem, L: int):
    """All m_hat = (L, m_1, ..., m_{t-1}) with the right parities and the
    support bound m_{i+1} <= m_i + 1 (terms beyond it sum to zero)."""
    t = system.t
    Q = system.Q
    if L % 2 != Q[0]:
        return
    def rec(prefix: tuple[int, ...]):
        i = len(prefix) - 1
        if i == t - 1:
            yield prefix
            return
        top = prefix[-1] + 1
        for nxt in range(Q[i + 1], top + 1, 2):
            yield from rec(prefix + (nxt,))
    yield from rec((L,))


def _exponent_quarter(system: FermionicSystem, m_hat: tuple[int, ...]) -> int:
    """m_hat^T C m_hat - L^2 - 2 (u_L^flat + u_R^sharp).m + gamma, in quarter units."""
    t = system.t
    C = system.C
    quad = 0
    for i in range(t):
        mi = m_hat[i]
        if mi:
            row = C[i]
            quad += mi * sum(row[j] * m_hat[j] for j in range(t) if row[j])
    tak = system.tak
    w = [fl + sh for fl, sh in zip(flat_sharp(system.u_L, tak, "flat"),
                                   flat_sharp(system.u_R, tak, "sharp"))]
    lin = sum(w[j - 1] * m_hat[j] for j in range(1, t))
    return quad - m_hat[0] ** 2 - 2 * lin + system.gamma


def fermionic_terms(system: FermionicSystem, L: int, modified: bool):
    """Nonzero summands: a list of (m_hat, n, term polynomial)."""
    t = system.t
    out = []
    for m_hat in _iter_admissible_m(system, L):
        n = _n_vector(system, m_hat)
        if modified:
            if any(n[j - 1] < 0 and m_hat[j] > 0 for j in range(1, t)):
                continue
        else:
            if any(n[j - 1] < 0 for j in range(1, t)):
                continue
        if n[t - 1] < 0:
            continue  # cannot happen for m >= 0; kept as a guard
        gauss = gaussian_modified if modified else gaussian
        prod = QPoly.one()
        for j in range(1, t):
            prod = prod * gauss(m_hat[j] + n[j - 1], m_hat[j])
            if not prod:
                break
        if not prod:
            continue
        term = prod.shift(_exponent_quarter(system, m_hat))
        out.append((m_hat, n, term))
    return out


def mn_solutions(system: FermionicSystem, L: int) -> list[MnSolution]:
    """All (m_hat, n) with every n_i a non-negative integer and m >= 0."""
    if L < 0:
        return []
    sols = []
    for m_hat in _iter_admissible_m(system, L):
        n = _n_vector(system, m_hat)
        if all(v >= 0 for v in n):
            sols.append(MnSolution(m_hat, n))
    return sols


def _sub_character(zn: int, yn: int, a: int, b: int, c_outer: int, L: int) -> QPoly:
    """The smaller-model tail, with the post-segment endpoint pulled inside."""
    if yn == 2:
        # the (1,2) grid carries only the empty path
        return QPoly.one() if (L == 0 and a == 1 and b == 1) else QPoly.zero()
    c = c_outer if 1 <= c_outer <= yn - 1 else b - 1
    return bosonic(zn, yn, a, b, c, L)


def _fermionic(p: int, pp: int, a: int, b: int, L: int, modified: bool,
               prefer_t_prime: bool = False) -> QPoly:
    if L < 0 or (L + a - b) % 2:
        return QPoly.zero()
    system = build_system(p, pp, a, b, prefer_t_prime)
    total = QPoly.zero()
    for _, _, term in fermionic_terms(system, L, modified):
        total = total + term
    if not modified:
        tak = system.tak
        yn, zn = tak.y_of(tak.n), tak.z_of(tak.n)
        c = c_from_b(p, pp, b)
        if a < yn and b < yn:
            total = total + _sub_character(zn, yn, a, b, c, L)
        elif a > pp - yn and b > pp - yn:
            total = total + _sub_character(zn, yn, pp - a, pp - b, pp - c, L)
    if not total.has_integer_exponents():
        raise AssertionError("fermionic sum produced fractional exponents")
    return total


def fermionic_classical(p: int, pp: int, a: int, b: int, L: int,
                        prefer_t_prime: bool = False) -> QPoly:
    """Constant-sign sum with classical Gaussians plus the smaller-model tail."""
    return _fermionic(p, pp, a, b, L, modified=False, prefer_t_prime=prefer_t_prime)


def fermionic_modified(p: int, pp: int, a: int, b: int, L: int,
                       prefer_t_prime: bool = False) -> QPoly:
    """Constant-sign sum with modified Gaussians; no tail term."""
    return _fermionic(p, pp, a, b, L, modified=True, prefer_t_prime=prefer_t_prime)
