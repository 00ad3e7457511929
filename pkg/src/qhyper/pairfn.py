"""Independent realization of the evaluation pairing as honest linear
functionals on the enveloping algebra: the coordinate functions act through
the defining two-dimensional representation, the dual-side generators are
assembled from them by convolution (with triangular convolution inverses
for the invertible letters), and products of functionals are convolved
through the enveloping coproduct.

This is the oracle route for the closed-form pairing table: no exponent in
it is assumed, everything is computed.  It is deliberately slower than the
closed form and only used by verification code.
"""

from __future__ import annotations

from functools import lru_cache

from .algebras import FqGL2, FqM2, Hg, UqGL2
from .pbw import PBWElement
from .rings import LaurentPoly, RatFunc, q_minus_qinv

_ZERO = RatFunc.const(0)
_ONE = RatFunc.const(1)
_iF, _iG1, _iG2, _iE = (UqGL2.index[n] for n in ("F", "G1", "G2", "E"))


def _q(k):
    return RatFunc(LaurentPoly.q_power(k))


def _mat_mul(A, B):
    return [[A[i][0] * B[0][j] + A[i][1] * B[1][j] for j in range(2)]
            for i in range(2)]


_I2 = [[_ONE, _ZERO], [_ZERO, _ONE]]


def _mat_pow(A, n):
    if n < 0:
        A = [[A[0][0].inverse(), _ZERO], [_ZERO, A[1][1].inverse()]]
        n = -n
    R = _I2
    for _ in range(n):
        R = _mat_mul(R, A)
    return R


_RHO = {
    "E": [[_ZERO, _ONE], [_ZERO, _ZERO]],
    "F": [[_ZERO, _ZERO], [_ONE, _ZERO]],
    "G1": [[_q(1), _ZERO], [_ZERO, _ONE]],
    "G2": [[_ONE, _ZERO], [_ZERO, _q(1)]],
}


@lru_cache(maxsize=None)
def _rho_word(word):
    R = _I2
    for pos, exp in word:
        R = _mat_mul(R, _mat_pow(_RHO[UqGL2.gens[pos].name], exp))
    return tuple(tuple(r) for r in R)


def _eps_word(word):
    exps = dict(word)
    if exps.get(_iF, 0) or exps.get(_iE, 0):
        return _ZERO
    return _ONE


@lru_cache(maxsize=None)
def _delta_word(word):
    from .duality import coproduct_u
    du = coproduct_u(PBWElement(UqGL2, {word: _ONE}))
    return tuple((lw, rw, c) for (lw, rw), c in du.terms.items())


def _bideg(word):
    exps = dict(word)
    return exps.get(_iF, 0) + exps.get(_iE, 0)


def func_coeff(name):
    """The matrix-coefficient functionals of the defining representation."""
    i, j = {"a": (0, 0), "b": (0, 1), "c": (1, 0), "d": (1, 1)}[name]
    return lambda w: _rho_word(w)[i][j]


def _make_inverse(f):
    """Convolution inverse, solved triangularly by divided-power bidegree;
    valid whenever f is nonzero on the torus part (true for our letters)."""
    cache = {}

    def inv(w):
        if w in cache:
            return cache[w]
        acc = _ZERO
        lead = None
        for lw, rw, c in _delta_word(w):
            if _bideg(lw) == 0 and rw == w:
                lead = (c, f(lw))
            elif _bideg(lw) > 0:
                v = f(lw)
                if not v.is_zero():
                    acc = acc + c * v * inv(rw)
        c0, v0 = lead
        out = (_eps_word(w) - acc) / (c0 * v0)
        cache[w] = out
        return out

    return inv


def _conv2(x, y, w):
    total = _ZERO
    for lw, rw, c in _delta_word(w):
        v = x(lw)
        if not v.is_zero():
            total = total + c * v * y(rw)
    return total


_func_a = func_coeff("a")
_func_b = func_coeff("b")
_func_c = func_coeff("c")
_func_d = func_coeff("d")
_func_dinv = _make_inverse(_func_d)
_QQINV = RatFunc.const(1) / RatFunc(q_minus_qinv())


@lru_cache(maxsize=None)
def _func_E(w):
    return _conv2(_func_dinv, _func_c, w) * _QQINV


@lru_cache(maxsize=None)
def _func_F(w):
    return -_conv2(_func_b, _func_dinv, w) * _QQINV


@lru_cache(maxsize=None)
def _func_L1(w):
    inner = lambda w2: _conv2(_func_dinv, _func_c, w2)
    return _func_a(w) - _conv2(_func_b, inner, w)


_func_L1inv = _make_inverse(_func_L1)

_FUNCS = {
    "Lam1": _func_L1, "Lam1inv": _func_L1inv,
    "Lam2": _func_d, "Lam2inv": _func_dinv,
    "E": _func_E, "F": _func_F,
}


@lru_cache(maxsize=None)
def _conv_letters(letters, word):
    if not letters:
        return _eps_word(word)
    if len(letters) == 1:
        return _FUNCS[letters[0]](word)
    total = _ZERO
    for lw, rw, c in _delta_word(word):
        v = _FUNCS[letters[0]](lw)
        if not v.is_zero():
            total = total + c * v * _conv_letters(letters[1:], rw)
    return total


def _h_letters(word):
    out = []
    for pos, exp in word:
        name = Hg.gens[pos].name
        if name in ("Lam1", "Lam2"):
            out += [name if exp > 0 else name + "inv"] * abs(exp)
        else:
            out += [name] * exp
    return tuple(out)


def functional_pair(h, u):
    """<h, u> for a dual-side element h and an enveloping element u, via
    the convolution realization."""
    total = _ZERO
    for hw, hc in h.terms.items():
        letters = _h_letters(hw)
        for uw, uc in u.terms.items():
            v = _conv_letters(letters, uw)
            if not v.is_zero():
                total = total + hc * uc * v
    return total


@lru_cache(maxsize=None)
def _mc_letters(letters, word):
    if not letters:
        return _eps_word(word)
    if len(letters) == 1:
        return func_coeff(letters[0])(word)
    total = _ZERO
    for lw, rw, c in _delta_word(word):
        v = func_coeff(letters[0])(lw)
        if not v.is_zero():
            total = total + c * v * _mc_letters(letters[1:], rw)
    return total


def matrix_coefficient_pair(f, u):
    """<f, u> for a coordinate-ring element without the determinant inverse,
    evaluated as matrix coefficients of the defining representation."""
    if f.pres not in (FqM2, FqGL2):
        raise ValueError("matrix-coefficient pairing lives on M2/GL2")
    total = _ZERO
    dinv_idx = f.pres.index.get("Dinv")
    for word, coeff in f.terms.items():
        letters = []
        for pos, exp in word:
            name = f.pres.gens[pos].name
            if name == "Dinv":
                raise ValueError("clear the determinant inverse first")
            letters += [name] * exp
        for uw, uc in u.terms.items():
            v = _mc_letters(tuple(letters), uw)
            if not v.is_zero():
                total = total + coeff * uc * v
    return total
