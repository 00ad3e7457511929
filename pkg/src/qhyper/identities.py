"""Machine verification of the scalar and one-variable operator identities:
the eight displayed q-binomial relations, the divided-power relation,
the triangular power/falling-product transform, the three auxiliary
miscellanea identities, and the alternating-sum recursion with its
closed form.

Each suite returns a report dict listing every (identity, parameters,
status) case; any failure flips the aggregate "passed" flag.
"""

from __future__ import annotations

from .rings import L_ONE, LaurentPoly, RatFunc
from .qnum import (binom2, pi_factor, pochhammer_minus, pochhammer_plus,
                   q_binom_gauss, q_binom_gauss_at, q_binom_sym,
                   q_double_factorial_odd, q_factorial, q_factorial_sym,
                   q_int)
from .opoly import ONE, OpPoly, X, binom_op, brace_op, monic_poch


def _report(suite, bounds, cases):
    failures = [c for c in cases if c["status"] != "pass"]
    return {
        "suite": suite,
        "bounds": bounds,
        "checked": len(cases),
        "cases": cases,
        "failures": failures,
        "passed": not failures,
    }


def _case(identity, params, ok):
    return {"identity": identity, "params": params,
            "status": "pass" if ok else "fail"}


class IdentityFailure(AssertionError):
    pass


def _require(report, strict):
    if strict and not report["passed"]:
        bad = report["failures"][0]
        raise IdentityFailure("%s failed at %r" % (bad["identity"], bad["params"]))
    return report


# ---------------------------------------------------------------------------
# the eight displayed binomial-operator relations
# ---------------------------------------------------------------------------

def verify_relations_1_1(n_max=6, t_max=6, s_max=6, m_max=6, c_max=4,
                         strict=False):
    cases = []
    c_range = range(-c_max, c_max + 1)

    # factor product: prod (q^s - 1) (X;c n) = prod (q^(1-s+c) X - 1)
    for c in c_range:
        for n in range(n_max + 1):
            lhs = binom_op(c, n).scale(RatFunc(pi_factor(n)))
            rhs = ONE
            for s in range(1, n + 1):
                rhs = rhs * OpPoly({1: RatFunc(LaurentPoly.q_power(1 - s + c)),
                                    0: RatFunc.const(-1)})
            cases.append(_case("binom-factor-product", {"c": c, "n": n},
                               lhs == rhs))

    # composition: (X;c t)(X;c-t s) = (t+s t)_q (X;c t+s)
    for c in c_range:
        for t in range(t_max + 1):
            for s in range(s_max + 1):
                lhs = binom_op(c, t) * binom_op(c - t, s)
                rhs = binom_op(c, t + s).scale(RatFunc(q_binom_gauss(t + s, t)))
                cases.append(_case("binom-compose", {"c": c, "t": t, "s": s},
                                   lhs == rhs))

    # shifted Pascal: (X;c+1 t) - q^t (X;c t) = (X;c t-1)
    for c in c_range:
        for t in range(1, t_max + 1):
            lhs = binom_op(c + 1, t) - binom_op(c, t).scale(
                RatFunc(LaurentPoly.q_power(t)))
            cases.append(_case("binom-pascal-q", {"c": c, "t": t},
                               lhs == binom_op(c, t - 1)))

    # same-letter commutation (structural in one commuting variable)
    for c in c_range[:3]:
        for s in c_range[:3]:
            for m in range(min(m_max, 3) + 1):
                for n in range(min(n_max, 3) + 1):
                    ok = binom_op(c, m) * binom_op(s, n) == \
                        binom_op(s, n) * binom_op(c, m)
                    cases.append(_case("binom-commute",
                                       {"c": c, "s": s, "m": m, "n": n}, ok))

    # base-shift expansion, c >= 0:
    # (X;c t) = sum_{p<=c,t} q^((c-p)(t-p)) (c p)_q (X;0 t-p)
    for c in range(c_max + 1):
        for t in range(t_max + 1):
            rhs = OpPoly()
            for p in range(min(c, t) + 1):
                coeff = LaurentPoly.q_power((c - p) * (t - p)) * q_binom_gauss(c, p)
                rhs = rhs + binom_op(0, t - p).scale(RatFunc(coeff))
            cases.append(_case("binom-shift-expand", {"c": c, "t": t},
                               binom_op(c, t) == rhs))

    # zero case
    for c in c_range:
        cases.append(_case("binom-zero", {"c": c}, binom_op(c, 0) == ONE))

    # negative base-shift expansion:
    # (X;-c t) = sum_p (-1)^p q^(-t(c+p)+p(p+1)/2) (p+c-1 p)_q (X;0 t-p)
    for c in range(c_max + 1):
        for t in range(t_max + 1):
            rhs = OpPoly()
            for p in range(t + 1):
                sign = -1 if p % 2 else 1
                coeff = (LaurentPoly.q_power(-t * (c + p) + p * (p + 1) // 2, sign)
                         * q_binom_gauss(p + c - 1, p))
                rhs = rhs + binom_op(0, t - p).scale(RatFunc(coeff))
            cases.append(_case("binom-neg-shift-expand", {"c": c, "t": t},
                               binom_op(-c, t) == rhs))

    # plain Pascal: (X;c+1 t) - (X;c t) = q^(c-t+1) (1 + (q-1)(X;0 1)) (X;c t-1)
    for c in c_range:
        for t in range(1, t_max + 1):
            lhs = binom_op(c + 1, t) - binom_op(c, t)
            mid = ONE + binom_op(0, 1).scale(RatFunc(LaurentPoly({1: 1, 0: -1})))
            rhs = (mid * binom_op(c, t - 1)).scale(
                RatFunc(LaurentPoly.q_power(c - t + 1)))
            cases.append(_case("binom-pascal-plain", {"c": c, "t": t},
                               lhs == rhs))

    return _require(_report("rel-1-1", {"n": n_max, "t": t_max, "s": s_max,
                                        "m": m_max, "c": c_max}, cases), strict)


def verify_relations_1_2(r_max=6, s_max=6, strict=False):
    """X^(r) X^(s) = [r+s s]_q X^(r+s), checked at scalar level."""
    cases = []
    for r in range(r_max + 1):
        for s in range(s_max + 1):
            lhs = q_factorial_sym(r) * q_factorial_sym(s) * q_binom_sym(r + s, s)
            ok = lhs == q_factorial_sym(r + s)
            cases.append(_case("divided-power-product", {"r": r, "s": s}, ok))
    return _require(_report("rel-1-2", {"r": r_max, "s": s_max}, cases), strict)


# ---------------------------------------------------------------------------
# triangular transform between powers and the monic products (x; k)
# ---------------------------------------------------------------------------

def poch_to_powers_row(n):
    """Coefficients of (x;n) in powers: (x;n) = sum_k (-1)^(n-k) q^(-C(k,2))
    (n k)_{q^-1} x^k."""
    return [LaurentPoly.q_power(-binom2(k), (-1) ** ((n - k) % 2))
            * q_binom_gauss_at(n, k, -1) for k in range(n + 1)]


def powers_to_poch_row(n):
    """Coefficients of x^n over the (x;k): x^n = sum_k q^C(k,2) (n k)_q (x;k)."""
    return [LaurentPoly.q_power(binom2(k)) * q_binom_gauss(n, k)
            for k in range(n + 1)]


def lemma_4_1_expand(n, strict=False):
    """Both closed-form expansions, checked against the direct product and
    against each other (the two triangular matrices are mutually inverse)."""
    cases = []
    down = [poch_to_powers_row(k) for k in range(n + 1)]
    up = [powers_to_poch_row(k) for k in range(n + 1)]

    for k in range(n + 1):
        direct = monic_poch(k)
        closed = OpPoly({j: RatFunc(down[k][j]) for j in range(k + 1)})
        cases.append(_case("poch-expansion", {"n": k}, direct == closed))

    for k in range(n + 1):
        acc = OpPoly()
        for j in range(k + 1):
            acc = acc + monic_poch(j).scale(RatFunc(up[k][j]))
        cases.append(_case("power-expansion", {"n": k},
                           acc == OpPoly({k: RatFunc.const(1)})))

    # round trip: the composite matrix is the identity
    for i in range(n + 1):
        for j in range(n + 1):
            acc = LaurentPoly()
            for k in range(min(i, n) + 1):
                if j <= k <= i:
                    acc = acc + up[i][k] * down[k][j]
            expect = L_ONE if i == j else LaurentPoly()
            cases.append(_case("round-trip", {"i": i, "j": j}, acc == expect))

    report = _report("lemma-4-1", {"n": n}, cases)
    report["tables"] = {
        "poch_in_powers": [[c.to_json() for c in row] for row in down],
        "powers_in_poch": [[c.to_json() for c in row] for row in up],
    }
    return _require(report, strict)


# ---------------------------------------------------------------------------
# miscellanea identities
# ---------------------------------------------------------------------------

def lemma_4_5_verify(part, m_max=5, j_max=5, s_max=5, n_max=8, k_max=8,
                     strict=False):
    cases = []
    if part == "a":
        # q^j {x;s over m,j} (q^(s-m+2j) x - 1) + (q^2j - 1) {x;s over m,j-1}
        #   = (q^(m+1) - 1) {x;s over m+1,j}
        for s in range(-s_max, s_max + 1):
            for m in range(m_max + 1):
                for j in range(j_max + 1):
                    factor = OpPoly({1: RatFunc(LaurentPoly.q_power(s - m + 2 * j)),
                                     0: RatFunc.const(-1)})
                    lhs = (brace_op(s, m, j) * factor).scale(
                        RatFunc(LaurentPoly.q_power(j)))
                    lhs = lhs + brace_op(s, m, j - 1).scale(
                        RatFunc(LaurentPoly({2 * j: 1, 0: -1})))
                    rhs = brace_op(s, m + 1, j).scale(
                        RatFunc(LaurentPoly({m + 1: 1, 0: -1})))
                    cases.append(_case("lemma-4-5-a", {"s": s, "m": m, "j": j},
                                       lhs == rhs))
    elif part == "b":
        # q^C(s,2) (n s)_q = sum_{j=1..s} (-1)^(j-1) q^C(s-j,2) (n j)_q (n-j s-j)_q
        for n in range(n_max + 1):
            for s in range(1, n_max + 1):
                lhs = LaurentPoly.q_power(binom2(s)) * q_binom_gauss(n, s)
                rhs = LaurentPoly()
                for j in range(1, s + 1):
                    sign = 1 if (j - 1) % 2 == 0 else -1
                    rhs = rhs + (LaurentPoly.q_power(binom2(s - j), sign)
                                 * q_binom_gauss(n, j)
                                 * q_binom_gauss(n - j, s - j))
                cases.append(_case("lemma-4-5-b", {"n": n, "s": s}, lhs == rhs))
    elif part == "c":
        # sum_j (-1)^j q^C(j,2) (n-j k-j)_{q^2} (n j)_q
        #   = q^(k^2) (q-1)^k (n 2k)_q (2k-1)_q!!
        for n in range(n_max + 1):
            for k in range(min(n, k_max) + 1):
                lhs = LaurentPoly()
                for j in range(k + 1):
                    sign = -1 if j % 2 else 1
                    lhs = lhs + (LaurentPoly.q_power(binom2(j), sign)
                                 * q_binom_gauss_at(n - j, k - j, 2)
                                 * q_binom_gauss(n, j))
                rhs = (LaurentPoly.q_power(k * k)
                       * (LaurentPoly({1: 1, 0: -1}) ** k)
                       * q_binom_gauss(n, 2 * k)
                       * q_double_factorial_odd(k))
                cases.append(_case("lemma-4-5-c", {"n": n, "k": k}, lhs == rhs))
    else:
        raise ValueError("part must be 'a', 'b' or 'c'")
    return _require(_report("lemma-4-5-%s" % part,
                            {"m": m_max, "j": j_max, "s": s_max,
                             "n": n_max, "k": k_max}, cases), strict)


# ---------------------------------------------------------------------------
# the alternating-sum recursion and its closed form
# ---------------------------------------------------------------------------

def r_sum(n, k, t):
    """Defining alternating sum: R^n_{k,t} = sum_{j=0..k} (-1)^(k-j)
    q^C(k-j,2) (k j)_q <q^(n-k+j); t+j> <q^(k+t); k-j>."""
    out = LaurentPoly()
    for j in range(k + 1):
        sign = -1 if (k - j) % 2 else 1
        term = (LaurentPoly.q_power(binom2(k - j), sign)
                * q_binom_gauss(k, j)
                * pochhammer_plus(LaurentPoly.q_power(n - k + j), t + j)
                * pochhammer_plus(LaurentPoly.q_power(k + t), k - j))
        out = out + term
    return out


def r_closed(n, k, t):
    """Closed form: q^(k(k+t)) <q^(n-k); t> (q^(n-k-t); k)."""
    return (LaurentPoly.q_power(k * (k + t))
            * pochhammer_plus(LaurentPoly.q_power(n - k), t)
            * pochhammer_minus(LaurentPoly.q_power(n - k - t), k))


def r_recursion_verify(n_max=6, k_max=6, t_max=4, strict=False):
    cases = []
    # closed form matches the defining sum
    for n in range(n_max + 1):
        for k in range(min(n, k_max) + 1):
            for t in range(t_max + 1):
                cases.append(_case("r-closed-form", {"n": n, "k": k, "t": t},
                                   r_sum(n, k, t) == r_closed(n, k, t)))
    # recursion R^n_{k+1,t} = -q^k (q^(k+t+1) + 1) R^(n-1)_{k,t} + R^n_{k,t+1}
    for n in range(1, n_max + 1):
        for k in range(min(n - 1, k_max - 1) + 1):
            for t in range(t_max + 1):
                lhs = r_sum(n, k + 1, t)
                rhs = (r_sum(n - 1, k, t)
                       * LaurentPoly.q_power(k, -1)
                       * LaurentPoly({k + t + 1: 1, 0: 1})
                       + r_sum(n, k, t + 1))
                cases.append(_case("r-recursion", {"n": n, "k": k, "t": t},
                                   lhs == rhs))
    # the t = 0 instance is the alternating-sum identity used for part (c)
    for n in range(n_max + 1):
        for k in range(min(n, k_max) + 1):
            lhs = r_sum(n, k, 0)
            rhs = LaurentPoly.q_power(k * k) * pochhammer_minus(
                LaurentPoly.q_power(n - k), k)
            cases.append(_case("r-at-t0", {"n": n, "k": k}, lhs == rhs))
    return _require(_report("r-recursion", {"n": n_max, "k": k_max, "t": t_max},
                            cases), strict)
