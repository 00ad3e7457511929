"""Scalar q-quantities: q-integers, factorials, Gaussian and symmetric
binomials, double factorials.

Conventions: (n)_q = (q^n - 1)/(q - 1) also for negative n (a Laurent
polynomial), empty products are 1, and Gaussian binomials with a negative
upper argument use the closed form
(-n s)_q = (-1)^s q^(-n*s - C(s,2)) (n+s-1 s)_q.
"""

from __future__ import annotations

from functools import lru_cache

from .rings import L_ONE, L_ZERO, LaurentPoly, RatFunc


def binom2(n):
    """Ordinary binomial coefficient C(n, 2) for n in Z."""
    return n * (n - 1) // 2


def q_int(n):
    """(n)_q = 1 + q + ... + q^(n-1); for n < 0 this is -(q^n + ... + q^-1)."""
    if n >= 0:
        return LaurentPoly({e: 1 for e in range(n)})
    return LaurentPoly({e: -1 for e in range(n, 0)})


def q_int_sym(n):
    """[n]_q = (q^n - q^-n)/(q - q^-1) = q^(1-n) + q^(3-n) + ... + q^(n-1)."""
    if n < 0:
        return -q_int_sym(-n)
    return LaurentPoly({1 - n + 2 * e: 1 for e in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n):
    if n < 0:
        raise ValueError("factorial of negative integer")
    if n == 0:
        return L_ONE
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_factorial_sym(n):
    if n < 0:
        raise ValueError("factorial of negative integer")
    if n == 0:
        return L_ONE
    return q_factorial_sym(n - 1) * q_int_sym(n)


@lru_cache(maxsize=None)
def q_binom_gauss(n, s):
    """Gaussian binomial (n s)_q for n in Z, s in N."""
    if s < 0:
        raise ValueError("lower argument must be nonnegative")
    if n < 0:
        sign = -1 if s % 2 else 1
        return (q_binom_gauss(-n + s - 1, s)
                * LaurentPoly.q_power(n * s - binom2(s), sign))
    if s > n:
        return L_ZERO
    if s == 0 or s == n:
        return L_ONE
    # Pascal: (n s) = (n-1 s-1) + q^s (n-1 s)
    return (q_binom_gauss(n - 1, s - 1)
            + LaurentPoly.q_power(s) * q_binom_gauss(n - 1, s))


def q_binom_gauss_at(n, s, k):
    """(n s) evaluated with q -> q^k, e.g. k=2 gives the q^2-binomial."""
    return q_binom_gauss(n, s).subs_q_power(k)


def q_binom_sym(n, s):
    """Symmetric binomial [n s]_q = q^(-s(n-s)) (n s)_{q^2}."""
    if s < 0 or n < 0:
        raise ValueError("symmetric binomial needs n, s >= 0")
    if s > n:
        return L_ZERO
    return q_binom_gauss_at(n, s, 2) * LaurentPoly.q_power(-s * (n - s))


def q_double_factorial_even(k):
    """(2k)_q!! = (2)_q (4)_q ... (2k)_q, with the empty product at k = 0."""
    out = L_ONE
    for r in range(1, k + 1):
        out = out * q_int(2 * r)
    return out


def q_double_factorial_odd(k):
    """(2k-1)_q!! = (1)_q (3)_q ... (2k-1)_q, with the empty product at k = 0."""
    out = L_ONE
    for r in range(1, k + 1):
        out = out * q_int(2 * r - 1)
    return out


def pochhammer_minus(x, n):
    """(x; n)_q = prod_{s=1..n} (x q^(1-s) - 1) for a Laurent scalar x."""
    out = L_ONE
    for s in range(1, n + 1):
        out = out * (x * LaurentPoly.q_power(1 - s) - L_ONE)
    return out


def pochhammer_plus(x, n):
    """<x; n>_q = prod_{s=1..n} (x q^(1-s) + 1) for a Laurent scalar x."""
    out = L_ONE
    for s in range(1, n + 1):
        out = out * (x * LaurentPoly.q_power(1 - s) + L_ONE)
    return out


def pi_factor(k):
    """Pi_k = (q-1)^k (k)_q! = prod_{s=1..k} (q^s - 1)."""
    out = L_ONE
    for s in range(1, k + 1):
        out = out * LaurentPoly({s: 1, 0: -1})
    return out


def inv_sym_factorial(n):
    """1/[n]_q! as a RatFunc."""
    return RatFunc.const(1) / RatFunc.from_laurent(q_factorial_sym(n))
