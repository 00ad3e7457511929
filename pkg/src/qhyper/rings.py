"""Exact coefficient arithmetic: integer Laurent polynomials in q, reduced
fractions of integer polynomials (the field Q(q)), and the cyclotomic
quotient rings Z[q]/(Phi_l(q)).

Everything here is immutable after construction and uses Python's
arbitrary-precision integers; there is no floating point anywhere.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd as _int_gcd


# ---------------------------------------------------------------------------
# dense integer polynomials in q, represented as tuples of coefficients
# (index = exponent, no trailing zeros)
# ---------------------------------------------------------------------------

def _ptrim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _ptrim(out)


def _pneg(a):
    return tuple(-x for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _ptrim(out)


def _pdivmod(a, b):
    """Division with remainder in Q[q]; exact when inputs allow.

    Raises ValueError unless every division of leading coefficients is exact
    over Z, which is all this module ever needs (monic-ish divisors or exact
    quotients).
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    lb = b[-1]
    while len(_ptrim(a)) >= len(b):
        a = list(_ptrim(a))
        k = len(a) - len(b)
        la = a[-1]
        if la % lb != 0:
            raise ValueError("non-exact polynomial division over Z")
        f = la // lb
        q[k] = f
        for i, y in enumerate(b):
            a[k + i] -= f * y
    return _ptrim(q), _ptrim(a)


def _pcontent(a):
    g = 0
    for x in a:
        g = _int_gcd(g, abs(x))
    return g


def _pprimitive(a):
    g = _pcontent(a)
    if g in (0, 1):
        return a, max(g, 1)
    return tuple(x // g for x in a), g


def _pgcd(a, b):
    """gcd in Z[q] (primitive, positive leading coefficient)."""
    ca = _pcontent(a)
    cb = _pcontent(b)
    a, _ = _pprimitive(a)
    b, _ = _pprimitive(b)
    # subresultant-free PRS on primitive parts; degrees here stay tiny
    while b:
        # pseudo-remainder: lb^(da-db+1) * a mod b
        d = len(a) - len(b)
        if d < 0:
            a, b = b, a
            continue
        lb = b[-1]
        r = list(a)
        for _ in range(d + 1):
            r = [x * lb for x in r]
            r = list(_ptrim(r))
            if len(r) >= len(b):
                k = len(r) - len(b)
                f = r[-1] // b[-1]
                for i, y in enumerate(b):
                    r[k + i] -= f * y
                r = list(_ptrim(r))
            if len(r) < len(b):
                break
        a, b = b, _pprimitive(tuple(r))[0]
    a, _ = _pprimitive(a)
    g = _int_gcd(ca, cb)
    if a and a[-1] < 0:
        a = _pneg(a)
    return _pmul(a, (max(g, 1),)) if g > 1 else (a if a else ((g,) if g else ()))


def _pstr(c):
    if not c:
        return "0"
    parts = []
    for e in range(len(c) - 1, -1, -1):
        x = c[e]
        if x == 0:
            continue
        parts.append(_term_str(x, e, bool(parts)))
    return "".join(parts)


def _term_str(coef, exp, has_prev):
    sign = " - " if coef < 0 else (" + " if has_prev else "")
    a = abs(coef)
    if exp == 0:
        body = str(a)
    else:
        var = "q" if exp == 1 else "q^%d" % exp
        body = var if a == 1 else "%d*%s" % (a, var)
    return sign + body


# ---------------------------------------------------------------------------
# LaurentPoly: the ring Z[q, q^-1]
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Sparse Laurent polynomial in q with integer coefficients.

    Stored as a dict exponent -> nonzero coefficient; this canonical sparse
    form makes equality structural.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {e: c for e, c in terms.items() if c != 0}

    # -- constructors -------------------------------------------------------

    @staticmethod
    def const(n):
        return LaurentPoly({0: n} if n else {})

    @staticmethod
    def q_power(k, coeff=1):
        return LaurentPoly({k: coeff} if coeff else {})

    @staticmethod
    def from_dense(c, shift=0):
        return LaurentPoly({i + shift: x for i, x in enumerate(c) if x})

    # -- structure ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {0: 1}

    def min_exp(self):
        return min(self.terms) if self.terms else 0

    def max_exp(self):
        return max(self.terms) if self.terms else 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.const(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            r = LaurentPoly.__new__(LaurentPoly)
            r.terms = {e: c * other for e, c in self.terms.items()}
            return r
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.terms) == 1:
                (e, c), = self.terms.items()
                if c == 1:
                    return LaurentPoly.q_power(e * n)
                if c == -1:
                    return LaurentPoly.q_power(e * n, (-1) ** n)
            raise ValueError("negative power of non-unit Laurent polynomial")
        r = LaurentPoly.const(1)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    # -- substitutions ------------------------------------------------------

    def subs_q_power(self, k):
        """q -> q^k (k may be negative, e.g. -1 gives the bar involution)."""
        return LaurentPoly({e * k: c for e, c in self.terms.items()})

    def eval_at_one(self):
        return sum(self.terms.values())

    # -- conversions --------------------------------------------------------

    def to_dense(self):
        """Return (coeff tuple, shift) with terms[e] = coeffs[e - shift]."""
        if not self.terms:
            return (), 0
        lo = self.min_exp()
        hi = self.max_exp()
        out = [0] * (hi - lo + 1)
        for e, c in self.terms.items():
            out[e - lo] = c
        return tuple(out), lo

    def to_json(self):
        return [[e, str(c)] for e, c in sorted(self.terms.items())]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            sign = ("-" if not parts else " - ") if c < 0 else \
                ("" if not parts else " + ")
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                var = "q" if e == 1 else "q^%d" % e
                body = var if a == 1 else "%d*%s" % (a, var)
            parts.append(sign + body)
        return "".join(parts)

    __repr__ = __str__


L_ZERO = LaurentPoly()
L_ONE = LaurentPoly.const(1)


def laurent_arith(x, y, op):
    """Dispatch add/sub/mul on LaurentPoly values (CLI surface)."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError("unknown op %r" % (op,))


# ---------------------------------------------------------------------------
# RatFunc: the field Q(q), kept as (Laurent numerator) / (Z[q] denominator)
# ---------------------------------------------------------------------------

class RatFunc:
    """Reduced fraction num/den with num in Z[q,q^-1] and den in Z[q].

    Canonical form: den has positive leading coefficient, is not divisible
    by q, gcd(num, den) = 1 in Z[q] (including integer content).  A value
    lies in Z[q,q^-1] exactly when den == 1, which makes the integrality
    test O(1) after reduction.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        if isinstance(num, int):
            num = LaurentPoly.const(num)
        if isinstance(den, LaurentPoly):
            dense, shift = den.to_dense()
            num = num * LaurentPoly.q_power(-shift)
            den = dense
        den = _ptrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _reduce(num, den)

    @staticmethod
    def _raw(num, den):
        r = RatFunc.__new__(RatFunc)
        r.num, r.den = num, den
        return r

    @staticmethod
    def from_laurent(p):
        return RatFunc._raw(p, (1,))

    @staticmethod
    def const(n):
        return RatFunc._raw(LaurentPoly.const(n), (1,))

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.den == (1,) and self.num.is_one()

    def is_laurent(self):
        return self.den == (1,)

    def to_laurent(self):
        if self.den != (1,):
            raise ValueError("not in Z[q,q^-1]: %s" % self)
        return self.num

    def __eq__(self, other):
        if isinstance(other, int):
            return self.den == (1,) and self.num == other
        if isinstance(other, LaurentPoly):
            return self.den == (1,) and self.num == other
        return (isinstance(other, RatFunc) and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _coerce(other)
        if self.den == (1,) and other.den == (1,):
            return RatFunc._raw(self.num + other.num, (1,))
        num = self.num * LaurentPoly.from_dense(other.den) + \
            other.num * LaurentPoly.from_dense(self.den)
        return RatFunc(num, _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if self.den == (1,) and other.den == (1,):
            return RatFunc._raw(self.num * other.num, (1,))
        return RatFunc(self.num * other.num, _pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        dense, shift = self.num.to_dense()
        num = LaurentPoly.from_dense(self.den) * LaurentPoly.q_power(-shift)
        if dense[-1] < 0:
            dense = _pneg(dense)
            num = -num
        return RatFunc(num, dense)

    def __truediv__(self, other):
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        r = RatFunc.const(1)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def subs_q_power(self, k):
        den = LaurentPoly.from_dense(self.den).subs_q_power(k)
        return RatFunc(self.num.subs_q_power(k), den)

    def __str__(self):
        if self.den == (1,):
            return str(self.num)
        return "(%s)/(%s)" % (self.num, _pstr(self.den))

    __repr__ = __str__


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RatFunc._raw(x, (1,))
    if isinstance(x, int):
        return RatFunc.const(x)
    raise TypeError("cannot coerce %r" % (x,))


def _reduce(num, den):
    """Reduce to canonical form; num Laurent, den in Z[q] with q nmid den."""
    # strip q-powers out of the denominator
    k = 0
    while den and den[0] == 0:
        den = den[1:]
        k += 1
    if k:
        num = num * LaurentPoly.q_power(-k)
    if num.is_zero():
        return num, (1,)
    dense, shift = num.to_dense()
    g = _pgcd(dense, den)
    if g != (1,):
        dense, _ = _pdivmod(dense, g)
        den, _ = _pdivmod(den, g)
    if den[-1] < 0:
        dense = _pneg(dense)
        den = _pneg(den)
    return LaurentPoly.from_dense(dense, shift), den


RF_ZERO = RatFunc.const(0)
RF_ONE = RatFunc.const(1)


def q_minus_qinv():
    return LaurentPoly({1: 1, -1: -1})


def ratfunc_is_integral(x):
    """Exact test for membership in Z[q,q^-1]; returns (flag, witness)."""
    if x.is_laurent():
        return True, x.to_laurent()
    return False, None


def laurent_div_exact(x, d):
    """x / d when the quotient lies in Z[q,q^-1], else None.

    d must be monic up to a sign and a power of q (true of every divided
    power and binomial denominator in this package), so the division runs
    over the integers with no fractions."""
    if x.is_zero():
        return x
    xd, xs = x.to_dense()
    dd, ds = d.to_dense()
    if not dd:
        raise ZeroDivisionError("division by zero")
    sign = 1
    if dd[-1] == -1:
        dd = _pneg(dd)
        sign = -1
    elif dd[-1] != 1:
        return None
    rem = list(xd)
    quot = [0] * max(0, len(rem) - len(dd) + 1)
    while True:
        rem = list(_ptrim(rem))
        if len(rem) < len(dd):
            break
        k = len(rem) - len(dd)
        f = rem[-1]
        quot[k] = f
        for i, y in enumerate(dd):
            rem[k + i] -= f * y
    if _ptrim(rem):
        return None
    out = LaurentPoly.from_dense(quot, xs - ds)
    return out * sign if sign < 0 else out


# ---------------------------------------------------------------------------
# cyclotomic polynomials and the rings Z_eps = Z[q]/(Phi_l)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_poly(ell):
    """The ell-th cyclotomic polynomial as a dense coefficient tuple.

    Only odd ell is accepted: the root-of-unity arguments downstream all
    assume the order is odd.
    """
    if ell < 1 or ell % 2 == 0:
        raise ValueError("order must be a positive odd integer, got %r" % ell)
    return _cyclotomic(ell)


@lru_cache(maxsize=None)
def _cyclotomic(n):
    # Phi_n = (q^n - 1) / prod_{d | n, d < n} Phi_d
    num = tuple([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            num, rem = _pdivmod(num, _cyclotomic(d))
            assert rem == ()
    return num


class CycloElem:
    """Residue class mod Phi_ell(q): an element of Z_eps, eps = class of q."""

    __slots__ = ("order", "residue")

    def __init__(self, order, residue=()):
        if order < 1 or order % 2 == 0:
            raise ValueError("order must be a positive odd integer")
        self.order = order
        phi = cyclotomic_poly(order)
        residue = _ptrim(residue)
        if len(residue) >= len(phi):
            _, residue = _pdivmod_q(residue, phi)
        self.residue = residue

    @staticmethod
    def const(order, n):
        return CycloElem(order, (n,))

    @staticmethod
    def eps(order, k=1):
        """eps^k, with negative k resolved through eps^ell = 1."""
        k %= order
        return CycloElem(order, tuple([0] * k + [1]))

    def is_zero(self):
        return self.residue == ()

    def is_one(self):
        return self.residue == (1,)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == CycloElem.const(self.order, other)
        return (isinstance(other, CycloElem) and self.order == other.order
                and self.residue == other.residue)

    def __hash__(self):
        return hash((self.order, self.residue))

    def _check(self, other):
        if isinstance(other, int):
            other = CycloElem.const(self.order, other)
        if self.order != other.order:
            raise ValueError("mixed cyclotomic orders %d and %d"
                             % (self.order, other.order))
        return other

    def __add__(self, other):
        other = self._check(other)
        return CycloElem(self.order, _padd(self.residue, other.residue))

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.order, _pneg(self.residue))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        return CycloElem(self.order, _pmul(self.residue, other.residue))

    __rmul__ = __mul__

    def __pow__(self, n):
        r = CycloElem.const(self.order, 1)
        b = self
        if n < 0:
            raise ValueError("use explicit inverses in Z_eps")
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def lift(self):
        """A Laurent representative of the class (degree < deg Phi_ell)."""
        return LaurentPoly.from_dense(self.residue)

    def __str__(self):
        return "%s (mod Phi_%d)" % (_pstr(self.residue), self.order)

    __repr__ = __str__


def _pdivmod_q(a, b):
    """Division with remainder where only the remainder is needed and the
    divisor is monic (cyclotomics are)."""
    assert b and b[-1] == 1
    a = list(a)
    while len(_ptrim(a)) >= len(b):
        a = list(_ptrim(a))
        k = len(a) - len(b)
        f = a[-1]
        for i, y in enumerate(b):
            a[k + i] -= f * y
    return None, _ptrim(a)


def reduce_mod_cyclotomic(x, ell):
    """Canonical image of x in Z_eps.

    Negative powers of q are cleared first through q^-1 = q^(ell-1) mod
    (q^ell - 1), legitimate because Phi_ell divides q^ell - 1.
    """
    if ell < 1 or ell % 2 == 0:
        raise ValueError("order must be a positive odd integer")
    folded = [0] * ell
    for e, c in x.terms.items():
        folded[e % ell] += c
    return CycloElem(ell, tuple(folded))
