"""Exact sparse Laurent polynomials in q, with exponents kept in quarter units.

Everything downstream (path weights, Gaussian polynomials, character sums)
is exact integer arithmetic.  Exponents are stored pre-scaled by 4, so the
stored key k stands for q^(k/4); prefactors like q^(1/4)(...) that show up
in the fermionic sums never force rational arithmetic.  A polynomial whose
stored exponents are all divisible by 4 is in "integer-exponent" form, and
that is asserted whenever a polynomial leaves the library (JSON).
"""

from __future__ import annotations

from functools import lru_cache


class QPoly:
    """Sparse Laurent polynomial over the integers.

    ``terms`` maps quarter-exponent -> nonzero coefficient.  Instances are
    treated as immutable: all arithmetic returns new objects, and equality
    is term-map equality (canonical form has no zero coefficients).
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> QPoly:
        return QPoly()

    @staticmethod
    def one() -> QPoly:
        return QPoly({0: 1})

    @staticmethod
    def monomial(coeff: int, quarter_exp: int = 0) -> QPoly:
        """coeff * q^(quarter_exp/4)."""
        return QPoly({quarter_exp: coeff})

    @staticmethod
    def q_int(exp: int = 1, coeff: int = 1) -> QPoly:
        """coeff * q^exp with an ordinary integer exponent."""
        return QPoly({4 * exp: coeff})

    # -- basic queries -----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPoly.monomial(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None  # mutable dict inside; not hashable

    def min_quarter_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self.terms)

    def max_quarter_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    def coeff(self, exp: int) -> int:
        """Coefficient of q^exp (integer exponent)."""
        return self.terms.get(4 * exp, 0)

    def coeff_quarter(self, quarter_exp: int) -> int:
        return self.terms.get(quarter_exp, 0)

    def has_integer_exponents(self) -> bool:
        return all(e % 4 == 0 for e in self.terms)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: QPoly | int) -> QPoly:
        if isinstance(other, int):
            other = QPoly.monomial(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        res = QPoly.__new__(QPoly)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        res = QPoly.__new__(QPoly)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other: QPoly | int) -> QPoly:
        if isinstance(other, int):
            other = QPoly.monomial(other)
        return self + (-other)

    def __rsub__(self, other: int) -> QPoly:
        return QPoly.monomial(other) - self

    def __mul__(self, other: QPoly | int) -> QPoly:
        if isinstance(other, int):
            if other == 0:
                return QPoly()
            res = QPoly.__new__(QPoly)
            res.terms = {e: other * c for e, c in self.terms.items()}
            return res
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        res = QPoly.__new__(QPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def shift(self, quarter_exp: int) -> QPoly:
        """Multiply by q^(quarter_exp/4): add quarter_exp to every exponent."""
        res = QPoly.__new__(QPoly)
        res.terms = {e + quarter_exp: c for e, c in self.terms.items()}
        return res

    def invert_q(self) -> QPoly:
        """Substitute q -> 1/q (negate every exponent)."""
        res = QPoly.__new__(QPoly)
        res.terms = {-e: c for e, c in self.terms.items()}
        return res

    def truncate(self, max_degree: int) -> QPoly:
        """Drop every term of degree above max_degree (integer degree)."""
        cut = 4 * max_degree
        res = QPoly.__new__(QPoly)
        res.terms = {e: c for e, c in self.terms.items() if e <= cut}
        return res

    # -- display / serialization -------------------------------------------

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                bits.append(str(c))
                continue
            if e % 4 == 0:
                pw = "q" if e == 4 else f"q^{e // 4}"
            else:
                pw = f"q^({e}/4)"
            if c == 1:
                bits.append(pw)
            elif c == -1:
                bits.append(f"-{pw}")
            else:
                bits.append(f"{c}*{pw}")
        out = bits[0]
        for b in bits[1:]:
            out += " - " + b[1:] if b.startswith("-") else " + " + b
        return out

    def to_json_dict(self) -> dict[str, str]:
        """Integer-exponent JSON form: {"exponent": "coefficient"}, ascending.

        Quarter exponents never escape the library; raises if any stored
        exponent is not divisible by 4.
        """
        if not self.has_integer_exponents():
            raise ValueError("polynomial has fractional exponents; cannot serialize")
        return {str(e // 4): str(c) for e, c in sorted(self.terms.items())}

    @staticmethod
    def from_json_dict(d: dict[str, str]) -> QPoly:
        return QPoly({4 * int(e): int(c) for e, c in d.items()})


# -- spec-level operation aliases -------------------------------------------

def add(p: QPoly, r: QPoly) -> QPoly:
    return p + r


def mul(p: QPoly, r: QPoly) -> QPoly:
    return p * r


def shift(p: QPoly, quarter_exp: int) -> QPoly:
    return p.shift(quarter_exp)


def invert_q(p: QPoly) -> QPoly:
    return p.invert_q()


def truncate(p: QPoly, max_degree: int) -> QPoly:
    return p.truncate(max_degree)


# -- exact division ----------------------------------------------------------

def div_exact(num: QPoly, den: QPoly) -> QPoly:
    """Exact Laurent division; raises ValueError if den does not divide num.

    Works from the lowest exponent upward, so the denominator only needs an
    invertible-looking lowest coefficient step by step (each step must divide
    exactly over the integers).
    """
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    if not num:
        return QPoly()
    nv = num.min_quarter_exp()
    dv = den.min_quarter_exp()
    d = {e - dv: c for e, c in den.terms.items()}
    dmax = max(d)
    rem = {e - nv: c for e, c in num.terms.items()}
    top = max(rem)
    lead = d[0]
    quot: dict[int, int] = {}
    while rem:
        k = min(rem)
        if k > top - dmax:
            raise ValueError("inexact polynomial division")
        c = rem[k]
        if c % lead:
            raise ValueError("inexact polynomial division")
        f = c // lead
        quot[k] = f
        for de, dc in d.items():
            e = k + de
            s = rem.get(e, 0) - f * dc
            if s:
                rem[e] = s
            elif e in rem:
                del rem[e]
    return QPoly(quot).shift(nv - dv)


# -- q-Pochhammer and Gaussian polynomials -----------------------------------

def pochhammer(z_power: int, n: int) -> QPoly:
    """(z)_n = prod_{i=0}^{n-1} (1 - z q^i) with z = q^z_power."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    out = QPoly.one()
    for i in range(n):
        out = out * (QPoly.one() - QPoly.q_int(z_power + i))
    return out


@lru_cache(maxsize=None)
def _poch_q(n: int) -> QPoly:
    """(q)_n, cached."""
    return pochhammer(1, n)


@lru_cache(maxsize=None)
def gaussian(a: int, b: int) -> QPoly:
    """Classical Gaussian polynomial [a over b]: (q)_a / ((q)_{a-b} (q)_b).

    Zero unless 0 <= b <= a; always a polynomial with integer exponents.
    """
    if not 0 <= b <= a:
        return QPoly.zero()
    return div_exact(_poch_q(a), _poch_q(a - b) * _poch_q(b))


@lru_cache(maxsize=None)
def gaussian_modified(a: int, b: int) -> QPoly:
    """Modified Gaussian polynomial [a over b]': (q^{a-b+1})_b / (q)_b for b >= 0.

    Agrees with gaussian(a, b) except when a < 0 <= b, where the literal
    product can survive: [-1 over 0]' = 1, and for a <= -2 the value is a
    genuine Laurent polynomial.
    """
    if b < 0:
        return QPoly.zero()
    return div_exact(pochhammer(a - b + 1, b), _poch_q(b))


def box_partition_oracle(k: int, m: int) -> QPoly:
    """Sum of q^|lam| over partitions with at most k parts, each part <= m.

    Brute-force generation; the independent cross-check for gaussian(m+k, m).
    """
    if k < 0 or m < 0:
        raise ValueError("box_partition_oracle needs k, m >= 0")
    counts: dict[int, int] = {}

    def gen(parts_left: int, part_max: int, total: int) -> None:
        counts[total] = counts.get(total, 0) + 1
        if parts_left == 0:
            return
        for x in range(1, part_max + 1):
            gen(parts_left - 1, x, total + x)

    gen(k, m, 0)
    return QPoly({4 * w: c for w, c in counts.items()})


def partitions_in_box(k: int, m: int):
    """Yield every partition with at most k parts, parts <= m (as tuples)."""
    def gen(prefix: tuple[int, ...], parts_left: int, part_max: int):
        yield prefix
        if parts_left == 0:
            return
        for x in range(1, part_max + 1):
            yield from gen(prefix + (x,), parts_left - 1, x)

    yield from gen((), k, m)
