"""Generic noncommutative straightening engine.

A Presentation fixes an ordered list of generators (some invertible) and a
straightening rule for every descending adjacent pair at unit-exponent
granularity; normalize() rewrites any word into the unique linear
combination of ascending monomials, and mul() extends this bilinearly.

Rule sets are supplied complete and only verified (check_confluence), never
completed: this is deliberately not a Groebner-Shirshov engine.
"""

from __future__ import annotations

from .rings import LaurentPoly, RatFunc, RF_ONE


class StraighteningError(ValueError):
    pass


class Gen:
    __slots__ = ("name", "invertible")

    def __init__(self, name, invertible=False):
        self.name = name
        self.invertible = invertible

    def __repr__(self):
        return self.name


def q_swap_rule(j, i, factor_exp):
    """Rule g_j g_i -> q^factor_exp * g_i g_j, extended to all exponent signs
    of invertible letters (the q-power flips with each sign)."""
    def rule(sj, si):
        return [(RatFunc(LaurentPoly.q_power(factor_exp * sj * si)),
                 ((i, si), (j, sj)))]
    return rule


class Presentation:
    """Ordered generators plus one straightening rule per descending pair.

    rules maps (j, i) with j > i (positions in the order) to a callable
    (sj, si) -> list of (coeff, word-template); a template is a pair whose
    entries are tuples in positions {i: exponent} form described below.
    Concretely rule(sj, si) returns [(coeff, word)] where word is a tuple of
    (position, exponent) pairs in strictly ascending position order, and
    g_j^sj g_i^si equals the sum of coeff * word.
    """

    def __init__(self, pid, gens, rules, post_reduce=None):
        self.id = pid
        self.gens = tuple(gens)
        self.index = {g.name: i for i, g in enumerate(self.gens)}
        self._rules = rules
        self.post_reduce = post_reduce
        self._append_cache = {}

    # -- element constructors ------------------------------------------------

    def zero(self):
        return PBWElement(self, {})

    def one(self):
        return PBWElement(self, {(): RF_ONE})

    def gen(self, name, exp=1):
        i = self.index[name]
        if exp == 0:
            return self.one()
        if exp < 0 and not self.gens[i].invertible:
            raise StraighteningError(
                "negative exponent on non-invertible generator %s" % name)
        return PBWElement(self, {((i, exp),): RF_ONE})

    def monomial(self, pairs, coeff=RF_ONE):
        """Normal-form monomial from (name, exp) pairs in basis order."""
        word = []
        for name, exp in pairs:
            if exp == 0:
                continue
            i = self.index[name]
            if word and word[-1][0] >= i:
                raise StraighteningError("pairs not in ascending order")
            if exp < 0 and not self.gens[i].invertible:
                raise StraighteningError(
                    "negative exponent on non-invertible generator %s" % name)
            word.append((i, exp))
        return PBWElement(self, {tuple(word): coeff})

    def element_from_word(self, pairs, coeff=RF_ONE):
        """Normalize an arbitrary word given as (name, exp) pairs."""
        acc = {(): coeff}
        for name, exp in pairs:
            i = self.index[name]
            acc = self._fold_letter_power(acc, i, exp)
        out = PBWElement(self, acc)
        return self._post(out)

    def _post(self, x):
        return self.post_reduce(x) if self.post_reduce else x

    # -- straightening core ---------------------------------------------------

    def rule_terms(self, j, sj, i, si):
        """Rewriting of the two-letter word g_j^sj g_i^si (j > i) into a
        normalized element; letters produced by a rule (commutator tails)
        are folded recursively."""
        try:
            fn = self._rules[(j, i)]
        except KeyError:
            raise StraighteningError(
                "no rule for pair (%s, %s) in %s"
                % (self.gens[j].name, self.gens[i].name, self.id))
        acc = {}
        for coeff, word in fn(sj, si):
            partial = {(): coeff}
            for pos, exp in word:
                partial = self._fold_letter_power(partial, pos, exp)
            for w, c in partial.items():
                s = acc.get(w)
                acc[w] = c if s is None else s + c
        return {w: c for w, c in acc.items() if not c.is_zero()}

    def _fold_letter_power(self, terms, pos, exp):
        if exp == 0:
            return terms
        step = 1 if exp > 0 else -1
        if step < 0 and not self.gens[pos].invertible:
            raise StraighteningError(
                "negative exponent on non-invertible generator %s"
                % self.gens[pos].name)
        for _ in range(abs(exp)):
            nxt = {}
            for word, coeff in terms.items():
                for w2, c2 in self._append_letter(word, pos, step).items():
                    c = coeff * c2
                    s = nxt.get(w2)
                    s = c if s is None else s + c
                    if s.is_zero():
                        nxt.pop(w2, None)
                    else:
                        nxt[w2] = s
            terms = nxt
        return terms

    def _append_letter(self, word, pos, step):
        """word * g_pos^step as dict of normal words -> coeff; word normal."""
        key = (word, pos, step)
        hit = self._append_cache.get(key)
        if hit is not None:
            return hit

        if not word:
            out = {((pos, step),): RF_ONE}
        else:
            h, e = word[-1]
            if h < pos:
                out = {word + ((pos, step),): RF_ONE}
            elif h == pos:
                e2 = e + step
                if e2 == 0:
                    out = {word[:-1]: RF_ONE}
                elif e2 < 0 and not self.gens[pos].invertible:
                    raise StraighteningError(
                        "negative exponent on non-invertible generator %s"
                        % self.gens[pos].name)
                else:
                    out = {word[:-1] + ((pos, e2),): RF_ONE}
            else:
                sh = 1 if e > 0 else -1
                base = word[:-1] if e == sh else word[:-1] + ((h, e - sh),)
                out = {}
                for two_word, c in self.rule_terms(h, sh, pos, step).items():
                    partial = {base: c}
                    for p2, e2 in two_word:
                        partial = self._fold_letter_power(partial, p2, e2)
                    for w2, c2 in partial.items():
                        s = out.get(w2)
                        s = c2 if s is None else s + c2
                        if s.is_zero():
                            out.pop(w2, None)
                        else:
                            out[w2] = s

        self._append_cache[key] = out
        return out

    def __repr__(self):
        return "Presentation(%s)" % self.id


class PBWElement:
    """Linear combination of normal-ordered monomials over Q(q).

    terms maps words (tuples of (generator position, exponent), strictly
    ascending positions, nonzero exponents) to RatFunc coefficients.
    """

    __slots__ = ("pres", "terms")

    def __init__(self, pres, terms):
        self.pres = pres
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.is_zero()
            return self.terms == {(): RatFunc.const(other)}
        return (isinstance(other, PBWElement) and self.pres is other.pres
                and self.terms == other.terms)

    def __hash__(self):
        return hash((id(self.pres), frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return PBWElement(self.pres, out)

    def __neg__(self):
        return PBWElement(self.pres, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not isinstance(c, RatFunc):
            c = RatFunc(c) if isinstance(c, LaurentPoly) else RatFunc.const(c)
        if c.is_zero():
            return self.pres.zero()
        return PBWElement(self.pres, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        pres = self.pres
        out = {}
        for w2, c2 in other.terms.items():
            partial = {w: c * c2 for w, c in self.terms.items()}
            for pos, exp in w2:
                partial = pres._fold_letter_power(partial, pos, exp)
            for w, c in partial.items():
                s = out.get(w)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
        return pres._post(PBWElement(pres, out))

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of algebra element")
        r = self.pres.one()
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def _check(self, other):
        if not isinstance(other, PBWElement) or other.pres is not self.pres:
            raise StraighteningError("presentation mismatch")

    def apply_coeffs(self, fn):
        return PBWElement(self.pres, {w: fn(c) for w, c in self.terms.items()})

    def coeff_of(self, pairs):
        word = tuple((self.pres.index[n], e) for n, e in pairs if e)
        return self.terms.get(word, RatFunc.const(0))

    def word_names(self, word):
        return tuple((self.pres.gens[p].name, e) for p, e in word)

    def render(self):
        if not self.terms:
            return "0"
        bits = []
        for word in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[word]
            mono = "*".join(
                ("%s^%d" % (self.pres.gens[p].name, e)) if e != 1
                else self.pres.gens[p].name for p, e in word) or "1"
            cs = str(c)
            if cs == "1" and mono != "1":
                piece = mono
            elif cs == "-1" and mono != "1":
                piece = "-" + mono
            else:
                if ("+" in cs or " - " in cs or cs.startswith("(")
                        or "/" in cs) and mono != "1":
                    cs = "(%s)" % cs if not cs.startswith("(") else cs
                piece = cs if mono == "1" else "%s*%s" % (cs, mono)
            bits.append(piece)
        out = bits[0]
        for piece in bits[1:]:
            out += (" - " + piece[1:]) if piece.startswith("-") else (" + " + piece)
        return out

    def to_json(self):
        terms = []
        for word in sorted(self.terms, key=lambda w: (len(w), w)):
            terms.append({
                "exponents": {self.pres.gens[p].name: e for p, e in word},
                "coefficient": str(self.terms[word]),
            })
        return {"presentation": self.pres.id, "terms": terms}

    def __repr__(self):
        return self.render()


def normalize(pairs, pres):
    """Normal form of a word given as (generator name, exponent) pairs."""
    return pres.element_from_word(pairs)


def mul(x, y):
    return x * y


def check_confluence(pres, strict=False):
    """Local confluence on all 3-letter overlap words.

    For each word g1 g2 g3 (over all generators, both exponent signs for
    invertible ones) the two reduction orders -- contract (g1 g2) first or
    (g2 g3) first -- must agree; mul() always normalizes fully, so comparing
    (g1*g2)*g3 with g1*(g2*g3) tests exactly this divergence.
    """
    letters = []
    for i, g in enumerate(pres.gens):
        letters.append((i, 1))
        if g.invertible:
            letters.append((i, -1))
    cases = []
    for p1, s1 in letters:
        a = PBWElement(pres, {((p1, s1),): RF_ONE})
        for p2, s2 in letters:
            b = PBWElement(pres, {((p2, s2),): RF_ONE})
            ab = a * b
            for p3, s3 in letters:
                c = PBWElement(pres, {((p3, s3),): RF_ONE})
                left = ab * c
                right = a * (b * c)
                ok = left == right
                cases.append({
                    "identity": "overlap",
                    "params": {"word": "%s^%d %s^%d %s^%d" % (
                        pres.gens[p1].name, s1, pres.gens[p2].name, s2,
                        pres.gens[p3].name, s3)},
                    "status": "pass" if ok else "fail",
                })
    failures = [c for c in cases if c["status"] != "pass"]
    report = {"suite": "confluence", "presentation": pres.id,
              "checked": len(cases), "cases": cases,
              "failures": failures, "passed": not failures}
    if strict and failures:
        raise StraighteningError("confluence failure in %s at %r"
                                 % (pres.id, failures[0]["params"]))
    return report
