"""Hopf-algebra structure on the rewritten word basis.

A FreeHopfAlgebra is determined by the matrix size n, a variant token, and
a coefficient field.  The variant picks the level domain:

  "free"    levels in the nonnegative integers (antipode injective only),
  "bij"     levels in all integers (antipode bijective),
  "ord:<d>" levels modulo 2d (antipode order divides 2d).

Structure maps on a letter x[i,j;r]:

  product      concatenation followed by reduction to normal form
  coproduct    Delta(x[i,j;r]) = sum_a x[i,a;r] (x) x[a,j;r]
  counit       eps(x[i,j;r]) = d(i,j)
  antipode     S(x[i,j;r]) = x[j,i;r+1], extended as an anti-homomorphism

Single-word coproducts and normal forms have integer coefficients, so they
are cached per (n, domain) and shared across coefficient fields.
"""

from itertools import product as iproduct

from .fields import Field, FieldScalar
from .rewrite import rules_for
from .words import UNIT, LevelDomain, letter, storage_key, word_str

_DELTA_CACHES = {}


def parse_variant(token):
    """Normalize a variant token and return (canonical token, LevelDomain)."""
    t = str(token).strip().lower()
    if t == "free":
        return "free", LevelDomain.nat()
    if t == "bij":
        return "bij", LevelDomain.integers()
    if t.startswith("ord:"):
        body = t[4:]
        if not body.lstrip("-").isdigit():
            raise ValueError("bad variant token %r" % token)
        d = int(body)
        if d < 1:
            raise ValueError("antipode order parameter must be >= 1, got %d" % d)
        return "ord:%d" % d, LevelDomain.mod(2 * d)
    raise ValueError("unknown variant token %r (expected free, bij, or ord:<d>)" % token)


class FreeHopfAlgebra:
    """The free Hopf algebra on an n x n matrix coalgebra over a field."""

    def __init__(self, n, variant="free", field=None):
        if field is None:
            field = Field.rationals()
        if isinstance(field, str):
            field = Field.from_token(field)
        self.variant, self.domain = parse_variant(variant)
        self.n = n
        self.field = field
        self.rules = rules_for(n, self.domain)
        self.antipode_order_bound = (
            self.domain.modulus if self.domain.kind == "mod" else None
        )

    def __eq__(self, other):
        return (
            isinstance(other, FreeHopfAlgebra)
            and self.n == other.n
            and self.variant == other.variant
            and self.field is other.field
        )

    def __hash__(self):
        return hash((self.n, self.variant, self.field.characteristic))

    def describe(self):
        return {
            "n": self.n,
            "variant": self.variant,
            "field": self.field.token,
            "domain": str(self.domain),
        }

    def __repr__(self):
        return "FreeHopfAlgebra(n=%d, variant=%r, field=%s)" % (
            self.n, self.variant, self.field,
        )

    # -- element construction ----------------------------------------------

    def zero(self):
        return Element(self, {})

    def one(self):
        return Element(self, {UNIT: self.field.one})

    def gen(self, i, j, r):
        return self.element([(  (letter(self.n, self.domain, i, j, r),), 1)])

    def word(self, raw):
        """Element given by a single (possibly reducible) word."""
        return self.element([(tuple(raw), 1)])

    def element(self, terms):
        """Element from (word, coefficient) pairs; words are validated,
        levels canonicalized, and the result reduced to normal form."""
        items = terms.items() if isinstance(terms, dict) else terms
        acc = {}
        nf = self.rules.normal_form_word
        for raw, coeff in items:
            c = self.field.scalar(coeff)
            if not c:
                continue
            w = tuple(letter(self.n, self.domain, i, j, r) for i, j, r in raw)
            for t, k in nf(w).items():
                s = acc.get(t, self.field.zero) + c * k
                if s:
                    acc[t] = s
                else:
                    acc.pop(t, None)
        return Element(self, acc)

    def _element_from_int(self, terms):
        """Element from an integer combination of already-irreducible words."""
        p = self.field.characteristic
        acc = {}
        for w, k in terms.items():
            c = self.field.scalar(k % p if p else k)
            if c:
                acc[w] = c
        return Element(self, acc)

    def basis_words(self, max_len, levels=None):
        """Irreducible words of length <= max_len (the level window is
        required for the free and bij variants, ignored for ord)."""
        return self.rules.irreducible_words(max_len, levels)

    # -- structure maps on single words -------------------------------------

    def delta_word(self, w):
        """Coproduct of an irreducible word as {(left, right): int}, with
        both legs reduced; cached per (n, domain)."""
        cache = _DELTA_CACHES.setdefault(self.rules, {})
        hit = cache.get(w)
        if hit is not None:
            return hit
        n = self.n
        nf = self.rules.normal_form_word
        acc = {}
        for mid in iproduct(range(1, n + 1), repeat=len(w)):
            left = tuple((l[0], a, l[2]) for l, a in zip(w, mid))
            right = tuple((a, l[1], l[2]) for l, a in zip(w, mid))
            for tl, cl in nf(left).items():
                for tr, cr in nf(right).items():
                    key = (tl, tr)
                    s = acc.get(key, 0) + cl * cr
                    if s:
                        acc[key] = s
                    else:
                        del acc[key]
        cache[w] = acc
        return acc

    @staticmethod
    def counit_word(w):
        for i, j, _ in w:
            if i != j:
                return 0
        return 1

    def antipode_raw_word(self, w, power=1):
        """The antipode power applied to a word, before reduction."""
        if power < 0 and self.domain.kind == "nat":
            raise ValueError("negative antipode powers are undefined for the free variant")
        if power % 2:
            return tuple((j, i, self.domain.step(r, power)) for i, j, r in reversed(w))
        return tuple((i, j, self.domain.step(r, power)) for i, j, r in w)

    def antipode_int(self, terms, power=1):
        """Antipode power on an integer combination, reduced."""
        nf = self.rules.normal_form_word
        acc = {}
        for w, k in terms.items():
            for t, c in nf(self.antipode_raw_word(w, power)).items():
                s = acc.get(t, 0) + k * c
                if s:
                    acc[t] = s
                else:
                    del acc[t]
        return acc

    # -- structure maps on elements -----------------------------------------

    def multiply(self, a, b):
        self._check(a)
        self._check(b)
        nf = self.rules.normal_form_word
        acc = {}
        zero = self.field.zero
        for wa, ca in a.terms.items():
            for wb, cb in b.terms.items():
                c = ca * cb
                for t, k in nf(wa + wb).items():
                    s = acc.get(t, zero) + c * k
                    if s:
                        acc[t] = s
                    else:
                        acc.pop(t, None)
        return Element(self, acc)

    def coproduct(self, a):
        self._check(a)
        acc = {}
        zero = self.field.zero
        for w, c in a.terms.items():
            for pair, k in self.delta_word(w).items():
                s = acc.get(pair, zero) + c * k
                if s:
                    acc[pair] = s
                else:
                    acc.pop(pair, None)
        return Tensor(self, acc)

    def counit(self, a):
        self._check(a)
        out = self.field.zero
        for w, c in a.terms.items():
            if self.counit_word(w):
                out = out + c
        return out

    def antipode(self, a, power=1):
        self._check(a)
        nf = self.rules.normal_form_word
        acc = {}
        zero = self.field.zero
        for w, c in a.terms.items():
            for t, k in nf(self.antipode_raw_word(w, power)).items():
                s = acc.get(t, zero) + c * k
                if s:
                    acc[t] = s
                else:
                    acc.pop(t, None)
        return Element(self, acc)

    def tensor(self, a, b):
        self._check(a)
        self._check(b)
        acc = {}
        for wa, ca in a.terms.items():
            for wb, cb in b.terms.items():
                c = ca * cb
                if c:
                    acc[(wa, wb)] = c
        return Tensor(self, acc)

    def _check(self, x):
        if x.parent != self:
            raise ValueError("element of %r used in %r" % (x.parent, self))

    # -- axiom verification --------------------------------------------------

    def verify_axioms(self, max_len, levels=None, max_examples=5):
        """Check the Hopf axioms on every irreducible word of length <=
        max_len; returns a report whose residual counts should all be zero.

        Checked per word w with Delta(w) = sum w1 (x) w2:
          coassociativity     (Delta(x)id)Delta(w) = (id(x)Delta)Delta(w)
          counit_left/right   (eps(x)id)Delta(w) = w = (id(x)eps)Delta(w)
          antipode_left/right sum S(w1)w2 = eps(w)1 = sum w1 S(w2)
          anti_coalgebra      Delta(S(w)) = twist (S(x)S) Delta(w)
          antipode_order      S^(2d)(w) = w   (ord variant only)
        """
        p = self.field.characteristic

        def same(m1, m2):
            for key in m1.keys() | m2.keys():
                d = m1.get(key, 0) - m2.get(key, 0)
                if d % p if p else d:
                    return False
            return True

        names = [
            "coassociativity", "counit_left", "counit_right",
            "antipode_left", "antipode_right", "anti_coalgebra",
        ]
        order = self.antipode_order_bound
        if order:
            names.append("antipode_order")
        failures = {name: 0 for name in names}
        examples = {name: [] for name in names}

        def fail(name, w):
            failures[name] += 1
            if len(examples[name]) < max_examples:
                examples[name].append(word_str(w))

        words = self.basis_words(max_len, levels)
        nf = self.rules.normal_form_word
        for w in words:
            dw = self.delta_word(w)
            left, right = {}, {}
            cl, cr = {}, {}
            conv_l, conv_r = {}, {}
            for (a, b), k in dw.items():
                for (x, y), k2 in self.delta_word(a).items():
                    key = (x, y, b)
                    left[key] = left.get(key, 0) + k * k2
                for (x, y), k2 in self.delta_word(b).items():
                    key = (a, x, y)
                    right[key] = right.get(key, 0) + k * k2
                if self.counit_word(a):
                    cl[b] = cl.get(b, 0) + k
                if self.counit_word(b):
                    cr[a] = cr.get(a, 0) + k
                for t, c in self.antipode_int({a: 1}).items():
                    for t2, c2 in nf(t + b).items():
                        conv_l[t2] = conv_l.get(t2, 0) + k * c * c2
                for t, c in self.antipode_int({b: 1}).items():
                    for t2, c2 in nf(a + t).items():
                        conv_r[t2] = conv_r.get(t2, 0) + k * c * c2
            if not same(left, right):
                fail("coassociativity", w)
            if not same(cl, {w: 1}):
                fail("counit_left", w)
            if not same(cr, {w: 1}):
                fail("counit_right", w)
            eps = {UNIT: self.counit_word(w)}
            if not same(conv_l, eps):
                fail("antipode_left", w)
            if not same(conv_r, eps):
                fail("antipode_right", w)
            lhs = {}
            for t, c in self.antipode_int({w: 1}).items():
                for pair, k in self.delta_word(t).items():
                    lhs[pair] = lhs.get(pair, 0) + c * k
            rhs = {}
            for (a, b), k in dw.items():
                sa = self.antipode_int({a: 1})
                sb = self.antipode_int({b: 1})
                for ta, ca in sa.items():
                    for tb, cb in sb.items():
                        key = (tb, ta)
                        rhs[key] = rhs.get(key, 0) + k * ca * cb
            if not same(lhs, rhs):
                fail("anti_coalgebra", w)
            if order and not same(self.antipode_int({w: 1}, order), {w: 1}):
                fail("antipode_order", w)

        residuals = sum(failures.values())
        return {
            "config": self.describe(),
            "max_len": max_len,
            "levels": list(levels) if levels else None,
            "words_checked": len(words),
            "failures": failures,
            "failure_examples": {k: v for k, v in examples.items() if v},
            "residuals": residuals,
            "ok": residuals == 0,
        }


class Element:
    """A finite combination of irreducible words with field coefficients.

    The zero element has no terms; construction through FreeHopfAlgebra
    keeps every stored word irreducible and every coefficient nonzero.
    """

    __slots__ = ("parent", "terms")

    def __init__(self, parent, terms):
        self.parent = parent
        self.terms = terms

    def coefficient(self, w):
        return self.terms.get(tuple(w), self.parent.field.zero)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self.parent._check(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            s = acc.get(w)
            s = c if s is None else s + c
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
        return Element(self.parent, acc)

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Element(self.parent, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.parent.multiply(self, other)
        return self._scaled(other)

    def __rmul__(self, other):
        return self._scaled(other)

    def _scaled(self, scalar):
        try:
            c = self.parent.field.scalar(scalar)
        except (TypeError, ValueError):
            return NotImplemented
        if not c:
            return Element(self.parent, {})
        return Element(self.parent, {w: c * v for w, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.parent == other.parent
            and self.terms == other.terms
        )

    __hash__ = None

    def coproduct(self):
        return self.parent.coproduct(self)

    def counit(self):
        return self.parent.counit(self)

    def antipode(self, power=1):
        return self.parent.antipode(self, power)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: storage_key(t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            v = c.value
            neg = self.parent.field.is_rationals and v < 0
            mag = -v if neg else v
            if w == UNIT:
                body = str(mag)
            elif mag == 1:
                body = word_str(w)
            else:
                body = "%s*%s" % (mag, word_str(w))
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "<%s | %s>" % (self, self.parent.describe())


class Tensor:
    """An element of the two-fold tensor square, stored on pairs of
    irreducible words."""

    __slots__ = ("parent", "terms")

    def __init__(self, parent, terms):
        self.parent = parent
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        acc = dict(self.terms)
        for pair, c in other.terms.items():
            s = acc.get(pair)
            s = c if s is None else s + c
            if s:
                acc[pair] = s
            else:
                acc.pop(pair, None)
        return Tensor(self.parent, acc)

    def __sub__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Tensor(self.parent, {p: -c for p, c in self.terms.items()})

    def __rmul__(self, scalar):
        c = self.parent.field.scalar(scalar)
        if not c:
            return Tensor(self.parent, {})
        return Tensor(self.parent, {p: c * v for p, v in self.terms.items()})

    def twist(self):
        return Tensor(self.parent, {(b, a): c for (a, b), c in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Tensor)
            and self.parent == other.parent
            and self.terms == other.terms
        )

    __hash__ = None

    def sorted_terms(self):
        return sorted(
            self.terms.items(), key=lambda t: (storage_key(t[0][0]), storage_key(t[0][1]))
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in self.sorted_terms():
            v = c.value
            neg = self.parent.field.is_rationals and v < 0
            mag = -v if neg else v
            body = "%s (x) %s" % (word_str(a), word_str(b))
            if mag != 1:
                body = "%s*%s" % (mag, body)
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "<%s | tensor over %s>" % (self, self.parent.describe())
