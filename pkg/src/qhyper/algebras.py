"""Bundled presentations: the quantized 2x2 coordinate rings, the quantum
enveloping algebras, the dual-side q-commuting algebras, and the classical
(q = 1) hyperalgebra targets, together with the quotient maps between them
and the integrality predicate for the unrestricted enveloping form.
"""

from __future__ import annotations

from .rings import LaurentPoly, RatFunc, q_minus_qinv
from .pbw import Gen, PBWElement, Presentation, StraighteningError, q_swap_rule


def _rf_q(k):
    return RatFunc(LaurentPoly.q_power(k))


# ---------------------------------------------------------------------------
# quantized coordinate rings of 2x2 matrices
# ---------------------------------------------------------------------------

def _manin_rules():
    qq = q_minus_qinv()
    return {
        (1, 0): q_swap_rule(1, 0, +1),                 # a b = q b a
        (2, 0): q_swap_rule(2, 0, -1),                 # b d = q d b
        (3, 0): q_swap_rule(3, 0, 0),                  # b c = c b
        (3, 1): q_swap_rule(3, 1, -1),                 # a c = q c a
        (3, 2): q_swap_rule(3, 2, +1),                 # c d = q d c
        # d a = a d - (q - q^-1) b c
        (2, 1): lambda sj, si: [
            (RatFunc.const(1), ((1, 1), (2, 1))),
            (RatFunc(-qq), ((0, 1), (3, 1))),
        ],
    }


def _sl2_reduce(x):
    """Eliminate mixed a,d powers through a d = 1 + q b c, keeping the
    basis convention that at most one of the a,d exponents is nonzero."""
    pres = x.pres
    terms = dict(x.terms)
    ia, id_, = pres.index["a"], pres.index["d"]
    ib, ic = pres.index["b"], pres.index["c"]
    while True:
        target = None
        for word in terms:
            exps = dict(word)
            if exps.get(ia, 0) > 0 and exps.get(id_, 0) > 0:
                target = word
                break
        if target is None:
            break
        coeff = terms.pop(target)
        exps = dict(target)
        al, de = exps[ia], exps[id_]
        be, ka = exps.get(ib, 0), exps.get(ic, 0)

        def _word(b, a, d, c):
            w = []
            if b:
                w.append((ib, b))
            if a:
                w.append((ia, a))
            if d:
                w.append((id_, d))
            if c:
                w.append((ic, c))
            return tuple(w)

        for w, c in ((_word(be, al - 1, de - 1, ka), coeff),
                     (_word(be + 1, al - 1, de - 1, ka + 1),
                      coeff * _rf_q(al + de - 1))):
            s = terms.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(w, None)
            else:
                terms[w] = s
    return PBWElement(pres, terms)


FqM2 = Presentation("FqM2", [Gen("b"), Gen("a"), Gen("d"), Gen("c")],
                    _manin_rules())

_gl2_rules = _manin_rules()
_gl2_rules.update({(4, i): q_swap_rule(4, i, 0) for i in range(4)})
FqGL2 = Presentation(
    "FqGL2",
    [Gen("b"), Gen("a"), Gen("d"), Gen("c"), Gen("Dinv")],
    _gl2_rules)

FqSL2 = Presentation("FqSL2", [Gen("b"), Gen("a"), Gen("d"), Gen("c")],
                     _manin_rules(), post_reduce=_sl2_reduce)


def quantum_determinant(pres):
    """D_q = a d - q b c in the given coordinate-ring presentation."""
    return (pres.element_from_word([("a", 1), ("d", 1)])
            - pres.element_from_word([("b", 1), ("c", 1)]).scale(_rf_q(1)))


# ---------------------------------------------------------------------------
# quantum enveloping algebras (normal order F < G1 < G2 < E resp. F < K < E,
# matching the integral-basis shape on the enveloping side)
# ---------------------------------------------------------------------------

def _uqgl2_rules():
    inv = RatFunc.const(1) / RatFunc(q_minus_qinv())

    def ef(sj, si):
        return [
            (RatFunc.const(1), ((0, 1), (3, 1))),
            (inv, ((1, 1), (2, -1))),
            (-inv, ((1, -1), (2, 1))),
        ]

    return {
        (1, 0): q_swap_rule(1, 0, -1),   # G1 F = q^-1 F G1
        (2, 0): q_swap_rule(2, 0, +1),   # G2 F = q F G2
        (2, 1): q_swap_rule(2, 1, 0),
        (3, 1): q_swap_rule(3, 1, -1),   # E G1 = q^-1 G1 E
        (3, 2): q_swap_rule(3, 2, +1),   # E G2 = q G2 E
        (3, 0): ef,                      # E F = F E + (G1 G2^-1 - G1^-1 G2)/(q - q^-1)
    }


def _uqsl2_rules():
    inv = RatFunc.const(1) / RatFunc(q_minus_qinv())

    def ef(sj, si):
        return [
            (RatFunc.const(1), ((0, 1), (2, 1))),
            (inv, ((1, 1),)),
            (-inv, ((1, -1),)),
        ]

    return {
        (1, 0): q_swap_rule(1, 0, -2),   # K F = q^-2 F K
        (2, 1): q_swap_rule(2, 1, -2),   # E K = q^-2 K E
        (2, 0): ef,
    }


UqGL2 = Presentation(
    "UqGL2",
    [Gen("F"), Gen("G1", invertible=True), Gen("G2", invertible=True),
     Gen("E")],
    _uqgl2_rules())

UqSL2 = Presentation(
    "UqSL2", [Gen("F"), Gen("K", invertible=True), Gen("E")], _uqsl2_rules())


def _uqsl2_quot_rules():
    # genuine quotient of the gl2 form by (G1 G2 - 1): here K is the common
    # image of G1 and G2^-1, a square root of the Drinfeld-Jimbo K
    inv = RatFunc.const(1) / RatFunc(q_minus_qinv())

    def ef(sj, si):
        return [
            (RatFunc.const(1), ((0, 1), (2, 1))),
            (inv, ((1, 2),)),
            (-inv, ((1, -2),)),
        ]

    return {
        (1, 0): q_swap_rule(1, 0, -1),   # K F = q^-1 F K
        (2, 1): q_swap_rule(2, 1, -1),   # E K = q^-1 K E
        (2, 0): ef,                      # E F = F E + (K^2 - K^-2)/(q - q^-1)
    }


UqSL2Quot = Presentation(
    "UqSL2-quot", [Gen("F"), Gen("K", invertible=True), Gen("E")],
    _uqsl2_quot_rules())


def _uqgl2_rules_efirst():
    inv = RatFunc.const(1) / RatFunc(q_minus_qinv())

    def fe(sj, si):
        return [
            (RatFunc.const(1), ((0, 1), (3, 1))),
            (-inv, ((1, 1), (2, -1))),
            (inv, ((1, -1), (2, 1))),
        ]

    return {
        (1, 0): q_swap_rule(1, 0, +1),   # G1 E = q E G1
        (2, 0): q_swap_rule(2, 0, -1),   # G2 E = q^-1 E G2
        (2, 1): q_swap_rule(2, 1, 0),
        (3, 1): q_swap_rule(3, 1, +1),   # F G1 = q G1 F
        (3, 2): q_swap_rule(3, 2, -1),   # F G2 = q^-1 G2 F
        (3, 0): fe,                      # F E = E F - (G1 G2^-1 - G1^-1 G2)/(q - q^-1)
    }


def _uqsl2_rules_efirst():
    inv = RatFunc.const(1) / RatFunc(q_minus_qinv())

    def fe(sj, si):
        return [
            (RatFunc.const(1), ((0, 1), (2, 1))),
            (-inv, ((1, 1),)),
            (inv, ((1, -1),)),
        ]

    return {
        (1, 0): q_swap_rule(1, 0, +2),   # K E = q^2 E K
        (2, 1): q_swap_rule(2, 1, +2),   # F K = q^2 K F
        (2, 0): fe,
    }


# permuted-order twins (divided powers of E leftmost), used by the pairing
UqGL2E = Presentation(
    "UqGL2-Efirst",
    [Gen("E"), Gen("G1", invertible=True), Gen("G2", invertible=True),
     Gen("F")],
    _uqgl2_rules_efirst())

UqSL2E = Presentation(
    "UqSL2-Efirst", [Gen("E"), Gen("K", invertible=True), Gen("F")],
    _uqsl2_rules_efirst())


def to_e_first(x):
    """Re-express an enveloping element over the E-leftmost PBW order."""
    if x.pres is UqGL2:
        target = UqGL2E
    elif x.pres is UqSL2:
        target = UqSL2E
    else:
        raise StraighteningError("expected a Drinfeld-Jimbo-order element")
    out = target.zero()
    for word, coeff in x.terms.items():
        pairs = [(x.pres.gens[p].name, e) for p, e in word]
        out = out + target.element_from_word(pairs, coeff)
    return out


# ---------------------------------------------------------------------------
# dual-side q-commuting algebras (normal order E < Lam1 < Lam2 < F resp.
# E < L < F, matching the dual PBW basis shape)
# ---------------------------------------------------------------------------

Hg = Presentation(
    "Hg",
    [Gen("E"), Gen("Lam1", invertible=True), Gen("Lam2", invertible=True),
     Gen("F")],
    {
        (1, 0): q_swap_rule(1, 0, +1),   # Lam1 E = q E Lam1
        (2, 0): q_swap_rule(2, 0, -1),   # Lam2 E = q^-1 E Lam2
        (2, 1): q_swap_rule(2, 1, 0),
        (3, 0): q_swap_rule(3, 0, 0),    # F E = E F
        (3, 1): q_swap_rule(3, 1, -1),   # F Lam1 = q^-1 Lam1 F
        (3, 2): q_swap_rule(3, 2, +1),   # F Lam2 = q Lam2 F
    })

Hs = Presentation(
    "Hs", [Gen("E"), Gen("L", invertible=True), Gen("F")],
    {
        (1, 0): q_swap_rule(1, 0, +1),   # L E = q E L
        (2, 0): q_swap_rule(2, 0, 0),
        (2, 1): q_swap_rule(2, 1, -1),   # F L = q^-1 L F
    })


# ---------------------------------------------------------------------------
# classical q = 1 hyperalgebra targets (power-monomial level); straightening
# is the shift action [g, f] = f, [g, e] = e of the dual Lie bialgebra
# ---------------------------------------------------------------------------

U1gl2star = Presentation(
    "U1gl2star", [Gen("f"), Gen("g1"), Gen("g2"), Gen("e")],
    {
        (1, 0): lambda sj, si: [(RatFunc.const(1), ((0, 1), (1, 1))),
                                (RatFunc.const(1), ((0, 1),))],
        (2, 0): lambda sj, si: [(RatFunc.const(1), ((0, 1), (2, 1))),
                                (RatFunc.const(-1), ((0, 1),))],
        (2, 1): q_swap_rule(2, 1, 0),
        (3, 0): q_swap_rule(3, 0, 0),
        (3, 1): lambda sj, si: [(RatFunc.const(1), ((1, 1), (3, 1))),
                                (RatFunc.const(-1), ((3, 1),))],
        (3, 2): lambda sj, si: [(RatFunc.const(1), ((2, 1), (3, 1))),
                                (RatFunc.const(1), ((3, 1),))],
    })

U1sl2star = Presentation(
    "U1sl2star", [Gen("f"), Gen("h"), Gen("e")],
    {
        (1, 0): lambda sj, si: [(RatFunc.const(1), ((0, 1), (1, 1))),
                                (RatFunc.const(1), ((0, 1),))],
        (2, 0): q_swap_rule(2, 0, 0),
        (2, 1): lambda sj, si: [(RatFunc.const(1), ((1, 1), (2, 1))),
                                (RatFunc.const(-1), ((2, 1),))],
    })


PRESENTATIONS = {
    "FqM2": FqM2, "FqGL2": FqGL2, "FqSL2": FqSL2,
    "UqGL2": UqGL2, "UqSL2": UqSL2, "UqSL2-quot": UqSL2Quot,
    "UqGL2-Efirst": UqGL2E, "UqSL2-Efirst": UqSL2E,
    "Hg": Hg, "Hs": Hs,
    "U1gl2star": U1gl2star, "U1sl2star": U1sl2star,
}

ALGEBRA_IDS = tuple(PRESENTATIONS) + ("calUqGL2-check", "hg", "hs")


def presentation_of(algebra_id):
    try:
        return PRESENTATIONS[algebra_id]
    except KeyError:
        if algebra_id in ("hg", "hs"):
            from .hstar import HPresentation
            return HPresentation(algebra_id)
        raise StraighteningError("unknown algebra id %r" % (algebra_id,))


# ---------------------------------------------------------------------------
# quotient maps
# ---------------------------------------------------------------------------

def sl2_from_gl2(x):
    """Quotient substitution G1 -> K, G2 -> K^-1 (enveloping side) or
    Lam1 -> L, Lam2 -> L^-1 (dual side), renormalized in the target.

    On the enveloping side the target is the quotient by (G1 G2 - 1), whose
    K is a square root of the Drinfeld-Jimbo one; substituting into the
    Drinfeld-Jimbo presentation itself would not preserve the relation
    G1 F = q^-1 F G1.
    """
    if x.pres is UqGL2:
        target, lo, hi, merged = UqSL2Quot, 1, 2, "K"
    elif x.pres is Hg:
        target, lo, hi, merged = Hs, 1, 2, "L"
    else:
        raise StraighteningError("quotient defined on UqGL2 and Hg elements")
    out = target.zero()
    for word, coeff in x.terms.items():
        pairs = []
        for pos, exp in word:
            name = x.pres.gens[pos].name
            if pos == lo:
                pairs.append((merged, exp))
            elif pos == hi:
                pairs.append((merged, -exp))
            else:
                pairs.append((name, exp))
        out = out + target.element_from_word(pairs, coeff)
    return out


def project_to_sl2_rational(x):
    """Coordinate-ring projection setting D_q = 1 (and so Dinv -> 1)."""
    if x.pres not in (FqM2, FqGL2):
        raise StraighteningError("projection defined on FqM2/FqGL2 elements")
    out = FqSL2.zero()
    for word, coeff in x.terms.items():
        pairs = [(x.pres.gens[p].name, e) for p, e in word
                 if x.pres.gens[p].name != "Dinv"]
        out = out + FqSL2.element_from_word(pairs, coeff)
    return out


def gl2_from_m2(x):
    """Inclusion of the determinant-free coordinate ring."""
    if x.pres is not FqM2:
        raise StraighteningError("inclusion defined on FqM2 elements")
    return PBWElement(FqGL2, dict(x.terms))


def m2_part(x, nu):
    """The coefficient of Dinv^nu of a GL2 element, as an M2 element."""
    idx = FqGL2.index["Dinv"]
    out = {}
    for word, coeff in x.terms.items():
        exps = dict(word)
        if exps.pop(idx, 0) == nu:
            out[tuple(sorted(exps.items()))] = coeff
    return PBWElement(FqM2, out)


def gl2_equal(x, y):
    """Equality in the localized ring: clear Dinv from both sides and
    compare determinant-homogenized numerators."""
    if x.pres is not FqGL2 or y.pres is not FqGL2:
        raise StraighteningError("gl2_equal expects FqGL2 elements")
    idx = FqGL2.index["Dinv"]
    nmax = 0
    for el in (x, y):
        for word in el.terms:
            nmax = max(nmax, dict(word).get(idx, 0))
    dq = quantum_determinant(FqGL2)

    def clear(el):
        out = FqGL2.zero()
        powers = {0: FqGL2.one()}
        for word, coeff in el.terms.items():
            exps = dict(word)
            nu = exps.pop(idx, 0)
            k = nmax - nu
            if k not in powers:
                powers[k] = dq ** k
            mono = PBWElement(FqGL2, {tuple(sorted(exps.items())): coeff})
            out = out + mono * powers[k]
        return out

    return clear(x) == clear(y)


# ---------------------------------------------------------------------------
# integrality in the unrestricted enveloping form: membership in the span of
# the rescaled PBW monomials Fbar^phi G1^g1 G2^g2 Ebar^eta over Z[q,q^-1]
# ---------------------------------------------------------------------------

def u_integral_coefficients(x):
    """Coefficients of x in the rescaled (Fbar, Ebar) basis, as RatFuncs."""
    if x.pres is UqGL2:
        f_pos, e_pos = UqGL2.index["F"], UqGL2.index["E"]
    elif x.pres is UqSL2:
        f_pos, e_pos = UqSL2.index["F"], UqSL2.index["E"]
    else:
        raise StraighteningError("integrality test is for UqGL2/UqSL2")
    qq = RatFunc(q_minus_qinv())
    out = {}
    for word, coeff in x.terms.items():
        exps = dict(word)
        scale = exps.get(f_pos, 0) + exps.get(e_pos, 0)
        out[word] = coeff / qq ** scale
    return out


def u_integrality_check(x):
    """True iff x lies in the unrestricted integral form, plus a witness or
    offending coefficient."""
    coeffs = u_integral_coefficients(x)
    for word, c in coeffs.items():
        if not c.is_laurent():
            return False, {"word": x.word_names(word), "coefficient": str(c)}
    return True, {w: c.to_laurent() for w, c in coeffs.items()}
