"""Reduction system for the free Hopf algebra on an n x n matrix coalgebra.

Words in the letters x[i,j;r] are rewritten by four rule families.  Writing
n for the last index value and using ' for a level one step up:

  R1:  x[i,n;r] * x[j,n;r']             ->  d(i,j) - sum_{a<n} x[i,a;r]*x[j,a;r']
  R2:  x[n,i;r'] * x[n,j;r]             ->  d(i,j) - sum_{a<n} x[a,i;r']*x[a,j;r]
  R3:  x[i,n;r] * x[j,n-1;r'] * x[k,n-1;r'']
           ->  d(j,k)*x[i,n;r] - d(i,j)*x[k,n;r'']
               + sum_{a<n} x[i,a;r]*x[j,a;r']*x[k,n;r'']
               - sum_{a<n-1} x[i,n;r]*x[j,a;r']*x[k,a;r'']
  R4:  x[n,i;r''] * x[n-1,j;r'] * x[n-1,k;r]
           ->  d(j,k)*x[n,i;r''] - d(i,j)*x[n,k;r]
               + sum_{a<n} x[a,i;r'']*x[a,j;r']*x[n,k;r]
               - sum_{a<n-1} x[n,i;r'']*x[a,j;r']*x[a,k;r]

All rule coefficients are integers, so a single word's normal form has
integer coefficients no matter the ground field; normal forms are cached
per (n, domain) and shared by every field.

Every same-length word on a right-hand side is strictly smaller than the
left-hand side in words.compare_words, which is what makes the rewriting
terminate; check_confluence certifies local confluence by resolving every
concrete overlap and inclusion ambiguity inside a level window.
"""

from dataclasses import dataclass, field as dataclass_field
from itertools import combinations, product

from .words import UNIT, LevelDomain, storage_key, word_str

R1, R2, R3, R4 = 1, 2, 3, 4
RULE_NAMES = {R1: "R1", R2: "R2", R3: "R3", R4: "R4"}

_RULESETS = {}


def rules_for(n, dom):
    """Shared RuleSet instance for a given size and level domain."""
    key = (n, dom)
    rs = _RULESETS.get(key)
    if rs is None:
        rs = RuleSet(n, dom)
        _RULESETS[key] = rs
    return rs


class RuleSet:
    """Matching and reduction for a fixed n >= 2 and level domain."""

    def __init__(self, n, dom):
        if not isinstance(n, int) or n < 2:
            raise ValueError("matrix coalgebra size must be an integer n >= 2, got %r" % (n,))
        if not isinstance(dom, LevelDomain):
            raise TypeError("dom must be a LevelDomain")
        self.n = n
        self.dom = dom
        self._nf = {}

    # -- matching ---------------------------------------------------------

    def match_at(self, w, rule, pos):
        """Does the given rule's left-hand side sit at position pos of w?"""
        n, up = self.n, self.dom.up
        if rule == R1:
            if pos + 2 > len(w):
                return False
            a, b = w[pos], w[pos + 1]
            return a[1] == n and b[1] == n and b[2] == up(a[2])
        if rule == R2:
            if pos + 2 > len(w):
                return False
            a, b = w[pos], w[pos + 1]
            return a[0] == n and b[0] == n and a[2] == up(b[2])
        if rule == R3:
            if pos + 3 > len(w):
                return False
            a, b, c = w[pos], w[pos + 1], w[pos + 2]
            return (
                a[1] == n and b[1] == n - 1 and c[1] == n - 1
                and b[2] == up(a[2]) and c[2] == up(b[2])
            )
        if rule == R4:
            if pos + 3 > len(w):
                return False
            a, b, c = w[pos], w[pos + 1], w[pos + 2]
            return (
                a[0] == n and b[0] == n - 1 and c[0] == n - 1
                and b[2] == up(c[2]) and a[2] == up(b[2])
            )
        raise ValueError("unknown rule id %r" % (rule,))

    def matches(self, w):
        """All (rule, position) pairs matching w, sorted by position then rule."""
        out = []
        for pos in range(len(w)):
            for rule in (R1, R2, R3, R4):
                if self.match_at(w, rule, pos):
                    out.append((rule, pos))
        out.sort(key=lambda m: (m[1], m[0]))
        return out

    def first_match(self, w):
        """Leftmost match, preferring R1 > R2 > R3 > R4 at equal positions."""
        n, up = self.n, self.dom.up
        last = len(w)
        for pos in range(last - 1):
            a, b = w[pos], w[pos + 1]
            if a[1] == n and b[1] == n and b[2] == up(a[2]):
                return (R1, pos)
            if a[0] == n and b[0] == n and a[2] == up(b[2]):
                return (R2, pos)
            if pos + 3 <= last:
                c = w[pos + 2]
                if (a[1] == n and b[1] == n - 1 and c[1] == n - 1
                        and b[2] == up(a[2]) and c[2] == up(b[2])):
                    return (R3, pos)
                if (a[0] == n and b[0] == n - 1 and c[0] == n - 1
                        and b[2] == up(c[2]) and a[2] == up(b[2])):
                    return (R4, pos)
        return None

    def is_irreducible(self, w):
        return self.first_match(w) is None

    # -- single-step reduction -------------------------------------------

    def reduce_once(self, w, rule, pos):
        """Replace the matched left-hand side once; the rest of w is kept.

        Returns the resulting integer combination as a dict {word: coeff}
        (duplicate words merged, zero coefficients dropped).
        """
        if not self.match_at(w, rule, pos):
            raise ValueError(
                "%s does not match %s at position %d" % (RULE_NAMES[rule], word_str(w), pos)
            )
        n = self.n
        pre, post = w[:pos], w[pos + (2 if rule in (R1, R2) else 3):]
        acc = {}

        def put(mid, coeff):
            t = pre + mid + post
            c = acc.get(t, 0) + coeff
            if c:
                acc[t] = c
            else:
                acc.pop(t, None)

        if rule == R1:
            (i, _, r1), (j, _, r2) = w[pos], w[pos + 1]
            if i == j:
                put(UNIT, 1)
            for a in range(1, n):
                put(((i, a, r1), (j, a, r2)), -1)
        elif rule == R2:
            (_, i, r1), (_, j, r2) = w[pos], w[pos + 1]
            if i == j:
                put(UNIT, 1)
            for a in range(1, n):
                put(((a, i, r1), (a, j, r2)), -1)
        elif rule == R3:
            (i, _, r1), (j, _, r2), (k, _, r3) = w[pos], w[pos + 1], w[pos + 2]
            if j == k:
                put(((i, n, r1),), 1)
            if i == j:
                put(((k, n, r3),), -1)
            for a in range(1, n):
                put(((i, a, r1), (j, a, r2), (k, n, r3)), 1)
            for a in range(1, n - 1):
                put(((i, n, r1), (j, a, r2), (k, a, r3)), -1)
        else:  # R4
            (_, i, r1), (_, j, r2), (_, k, r3) = w[pos], w[pos + 1], w[pos + 2]
            if j == k:
                put(((n, i, r1),), 1)
            if i == j:
                put(((n, k, r3),), -1)
            for a in range(1, n):
                put(((a, i, r1), (a, j, r2), (n, k, r3)), 1)
            for a in range(1, n - 1):
                put(((n, i, r1), (a, j, r2), (a, k, r3)), -1)
        return acc

    # -- normal forms ------------------------------------------------------

    def normal_form_word(self, w):
        """Integer-coefficient normal form of a single word, cached.

        Strategy: repeatedly rewrite the leftmost match (R1 before R2 before
        R3 before R4 at equal positions).  Confluence makes the strategy
        irrelevant for the result.
        """
        cache = self._nf
        hit = cache.get(w)
        if hit is not None:
            return hit
        stack = [w]
        while stack:
            u = stack[-1]
            if u in cache:
                stack.pop()
                continue
            m = self.first_match(u)
            if m is None:
                cache[u] = {u: 1}
                stack.pop()
                continue
            expansion = self.reduce_once(u, m[0], m[1])
            pending = [v for v in expansion if v not in cache]
            if pending:
                stack.extend(pending)
                continue
            acc = {}
            for v, c in expansion.items():
                for t, ct in cache[v].items():
                    s = acc.get(t, 0) + c * ct
                    if s:
                        acc[t] = s
                    else:
                        del acc[t]
            cache[u] = acc
            stack.pop()
        return cache[w]

    def normal_form_int(self, terms):
        """Normal form of an integer combination {word: coeff}."""
        out = {}
        for w, c in terms.items():
            if not c:
                continue
            for t, ct in self.normal_form_word(w).items():
                s = out.get(t, 0) + c * ct
                if s:
                    out[t] = s
                else:
                    del out[t]
        return out

    # -- irreducible word enumeration --------------------------------------

    def alphabet(self, levels=None):
        """All letters with levels drawn from the window, in storage order."""
        lvls = self.dom.levels(levels)
        rng = range(1, self.n + 1)
        return [(i, j, r) for r in lvls for i in rng for j in rng]

    def irreducible_words(self, max_len, levels=None):
        """All irreducible words of length <= max_len with levels in the
        window, ordered by length then storage order.

        Extends shorter irreducible words on the right, so only the rule
        patterns touching the final letter need checking; the set is closed
        under taking subwords.
        """
        if max_len < 0:
            raise ValueError("max_len must be >= 0")
        letters = self.alphabet(levels)
        out = [UNIT]
        layer = [UNIT]
        for _ in range(max_len):
            nxt = []
            for w in layer:
                for l in letters:
                    v = w + (l,)
                    top = len(v)
                    if top >= 2 and (
                        self.match_at(v, R1, top - 2) or self.match_at(v, R2, top - 2)
                    ):
                        continue
                    if top >= 3 and (
                        self.match_at(v, R3, top - 3) or self.match_at(v, R4, top - 3)
                    ):
                        continue
                    nxt.append(v)
            nxt.sort(key=storage_key)
            out.extend(nxt)
            layer = nxt
        return out

    # -- rule instances (for the confluence check) --------------------------

    def rule_instances(self, levels=None):
        """Every concrete left-hand side whose levels fit in the window."""
        dom = self.dom
        lvls = dom.levels(levels)
        lset = set(lvls)

        def chain(r, length):
            # r, r+1, ... as far as the window allows
            seq = [r]
            for _ in range(length - 1):
                s = dom.up(seq[-1])
                if dom.kind != "mod" and s not in lset:
                    return None
                seq.append(s)
            return seq

        n = self.n
        rng = range(1, n + 1)
        inst = []
        for r in lvls:
            two = chain(r, 2)
            if two is not None:
                for i, j in product(rng, rng):
                    inst.append((R1, ((i, n, two[0]), (j, n, two[1]))))
                    inst.append((R2, ((n, i, two[1]), (n, j, two[0]))))
            three = chain(r, 3)
            if three is not None:
                for i, j, k in product(rng, rng, rng):
                    inst.append((R3, ((i, n, three[0]), (j, n - 1, three[1]), (k, n - 1, three[2]))))
                    inst.append((R4, ((n, i, three[2]), (n - 1, j, three[1]), (n - 1, k, three[0]))))
        return inst


# -- confluence -------------------------------------------------------------


@dataclass
class AmbiguityRecord:
    word: tuple
    match_a: tuple  # (rule, pos)
    match_b: tuple
    resolved: bool
    nf_a: dict
    nf_b: dict

    def describe(self):
        return {
            "word": word_str(self.word),
            "match_a": [RULE_NAMES[self.match_a[0]], self.match_a[1]],
            "match_b": [RULE_NAMES[self.match_b[0]], self.match_b[1]],
            "resolved": self.resolved,
            "nf_a": {word_str(w): c for w, c in sorted(self.nf_a.items(), key=lambda t: storage_key(t[0]))},
            "nf_b": {word_str(w): c for w, c in sorted(self.nf_b.items(), key=lambda t: storage_key(t[0]))},
        }


@dataclass
class ConfluenceReport:
    n: int
    dom: LevelDomain
    levels: tuple | None
    records: list = dataclass_field(default_factory=list)

    @property
    def total(self):
        return len(self.records)

    @property
    def unresolved(self):
        return [r for r in self.records if not r.resolved]

    @property
    def ok(self):
        return not self.unresolved

    def describe(self):
        return {
            "config": {
                "n": self.n,
                "domain": str(self.dom),
                "levels": list(self.levels) if self.levels else None,
            },
            "total_ambiguities": self.total,
            "unresolved_count": len(self.unresolved),
            "resolved": self.ok,
            "unresolved": [r.describe() for r in self.unresolved],
        }


def check_confluence(n, dom, levels=None):
    """Resolve every overlap and inclusion ambiguity inside a level window.

    For nat/int domains the window must contain at least 5 consecutive
    levels: rule patterns span at most 3 consecutive levels and two glued
    patterns span at most 5, and the rules are invariant under level
    translation, so such a window exhibits every ambiguity shape.
    """
    rs = rules_for(n, dom)
    if dom.kind != "mod":
        if levels is None:
            raise ValueError("a level window is required for the %s domain" % dom.kind)
        if levels[1] - levels[0] + 1 < 5:
            raise ValueError(
                "level window %r too narrow for a conclusive check (need >= 5 levels)" % (levels,)
            )
    inst = rs.rule_instances(levels)
    seen = set()
    records = []
    for (ra, wa), (rb, wb) in product(inst, inst):
        la, lb = len(wa), len(wb)
        for s in range(la):
            if s + lb <= la:
                # wb sits inside wa
                if (rb, s) == (ra, 0) or wa[s:s + lb] != wb:
                    continue
                word = wa
            else:
                # proper overlap: a suffix of wa is a prefix of wb
                if s == 0 or wa[s:] != wb[:la - s]:
                    continue
                word = wa + wb[la - s:]
            key = (word, tuple(sorted(((ra, 0), (rb, s)))))
            if key in seen:
                continue
            seen.add(key)
            nf_a = rs.normal_form_int(rs.reduce_once(word, ra, 0))
            nf_b = rs.normal_form_int(rs.reduce_once(word, rb, s))
            records.append(AmbiguityRecord(word, (ra, 0), (rb, s), nf_a == nf_b, nf_a, nf_b))
    records.sort(key=lambda r: (storage_key(r.word), r.match_a, r.match_b))
    return ConfluenceReport(n, dom, tuple(levels) if levels else None, records)
