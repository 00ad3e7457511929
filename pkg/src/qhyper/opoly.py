"""Polynomials in one commuting (possibly invertible) variable X over Q(q),
used for the symbolic calculus of q-binomial operators (X; c choose n),
the brace operators {X; c over n, r}, and the symmetric brackets [Z; c over n].

The binomial-operator identities are statements inside the commutative
subalgebra generated by a single element, so one commuting variable is a
faithful (and cheap) model.
"""

from __future__ import annotations

from functools import lru_cache

from .rings import LaurentPoly, RatFunc, RF_ONE, RF_ZERO
from .qnum import binom2, q_binom_gauss, q_int, q_factorial_sym


class OpPoly:
    """Laurent polynomial in X with RatFunc coefficients (dict exp -> coeff)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for e, c in coeffs.items():
                c = _rf(c)
                if not c.is_zero():
                    self.coeffs[e] = c

    @staticmethod
    def const(c):
        return OpPoly({0: _rf(c)})

    @staticmethod
    def x_power(k, coeff=1):
        return OpPoly({k: _rf(coeff)})

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return max(self.coeffs) if self.coeffs else -1

    def __eq__(self, other):
        if isinstance(other, int):
            other = OpPoly.const(other)
        return isinstance(other, OpPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if not isinstance(other, OpPoly):
            other = OpPoly.const(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, RF_ZERO) + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        r = OpPoly.__new__(OpPoly)
        r.coeffs = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = OpPoly.__new__(OpPoly)
        r.coeffs = {e: -c for e, c in self.coeffs.items()}
        return r

    def __sub__(self, other):
        if not isinstance(other, OpPoly):
            other = OpPoly.const(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, OpPoly):
            return self.scale(other)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, RF_ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        r = OpPoly.__new__(OpPoly)
        r.coeffs = out
        return r

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = _rf(c)
        if c.is_zero():
            return OpPoly()
        r = OpPoly.__new__(OpPoly)
        r.coeffs = {e: c * v for e, v in self.coeffs.items()}
        return r

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for e in sorted(self.coeffs, reverse=True):
            bits.append("(%s)*X^%d" % (self.coeffs[e], e))
        return " + ".join(bits)

    __repr__ = __str__


def _rf(c):
    if isinstance(c, RatFunc):
        return c
    if isinstance(c, (int, LaurentPoly)):
        return RatFunc(c) if isinstance(c, LaurentPoly) else RatFunc.const(c)
    raise TypeError(repr(c))


X = OpPoly({1: RF_ONE})
ONE = OpPoly({0: RF_ONE})


@lru_cache(maxsize=None)
def binom_op(c, n):
    """(X; c choose n) = prod_{s=1..n} (q^(c+1-s) X - 1)/(q^s - 1).

    Degree exactly n in X; n < 0 yields 0 by convention (empty families in
    the brace recursions rely on this).
    """
    if n < 0:
        return OpPoly()
    if n == 0:
        return ONE
    factor = OpPoly({1: RatFunc(LaurentPoly.q_power(c + 1 - n)),
                     0: RatFunc.const(-1)})
    factor = factor.scale(RatFunc.const(1)
                          / RatFunc(q_int(n) * LaurentPoly({1: 1, 0: -1})))
    return binom_op(c, n - 1) * factor


@lru_cache(maxsize=None)
def brace_op(c, n, r):
    """{X; c over n, r} = sum_{s=0..r} q^C(s+1,2) (r s)_q (X; c+s choose n-r).

    Zero when r < 0 or r > n (the inner binomial collapses).
    """
    if r < 0:
        return OpPoly()
    out = OpPoly()
    for s in range(r + 1):
        coeff = LaurentPoly.q_power(binom2(s + 1)) * q_binom_gauss(r, s)
        out = out + binom_op(c + s, n - r).scale(RatFunc(coeff))
    return out


def sym_bracket_op(c, n):
    """[Z; c over n] = prod_{s=1..n} (q^(c+1-s) Z - q^(s-1-c) Z^-1)/(q^s - q^-s).

    Z is treated as a single invertible commuting variable (Laurent in X).
    """
    out = ONE
    for s in range(1, n + 1):
        den = RatFunc(LaurentPoly({s: 1, -s: -1}))
        factor = OpPoly({1: RatFunc(LaurentPoly.q_power(c + 1 - s)),
                         -1: RatFunc(LaurentPoly.q_power(s - 1 - c, -1))})
        out = out * factor.scale(RatFunc.const(1) / den)
    return out


def monic_poch(n):
    """(x; n) = Pi_n (x; 0 choose n) = prod_{s=1..n} (q^(1-s) x - 1)."""
    out = ONE
    for s in range(1, n + 1):
        out = out * OpPoly({1: RatFunc(LaurentPoly.q_power(1 - s)),
                            0: RatFunc.const(-1)})
    return out


def divided_power_scalar(r, s):
    """Scalar content of X^(r) X^(s) = [r+s s]_q X^(r+s): returns the pair
    ([r]_q! [s]_q! [r+s s]_q, [r+s]_q!) whose equality is relation (1.2)."""
    from .qnum import q_binom_sym
    lhs = q_factorial_sym(r) * q_factorial_sym(s) * q_binom_sym(r + s, s)
    rhs = q_factorial_sym(r + s)
    return lhs, rhs
