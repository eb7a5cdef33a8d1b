"""Subspace and subcoalgebra analysis tools.

Provides finite-dimensional subspace arithmetic on the word basis, the
level spans and alternating-word spans used throughout the test corpus,
subcoalgebra verdicts with witnesses, primitive and grouplike searches,
and a scanner that either checks the alternating candidate span or
exhaustively enumerates all k-dimensional subspaces of a small ambient
space over a prime field, reporting every subcoalgebra found.
"""

import time
from dataclasses import dataclass, field as dc_field
from itertools import combinations, product as iproduct

from .hopf import Element, FreeHopfAlgebra, Tensor
from .linalg import Echelon, kernel
from .words import UNIT, storage_key, word_str


def _pair_key(pair):
    return (storage_key(pair[0]), storage_key(pair[1]))


class Subspace:
    """A finite-dimensional subspace of the algebra, held in reduced
    row-echelon form over the irreducible-word basis."""

    def __init__(self, algebra, elements=()):
        self.algebra = algebra
        self._ech = Echelon(algebra.field, key=storage_key)
        for el in elements:
            self.add(el)

    @classmethod
    def from_words(cls, algebra, words):
        return cls(algebra, [algebra.element([(w, 1)]) for w in words])

    def add(self, el):
        self.algebra._check(el)
        return self._ech.insert(dict(el.terms))

    @property
    def dim(self):
        return self._ech.dim

    def basis(self):
        return [Element(self.algebra, dict(r)) for r in self._ech.basis_rows()]

    def contains(self, el):
        self.algebra._check(el)
        return self._ech.contains(el.terms)

    def reduce(self, el):
        return Element(self.algebra, self._ech.reduce(el.terms))

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.algebra == other.algebra
            and self._ech.rows == other._ech.rows
        )

    __hash__ = None

    def __repr__(self):
        return "<Subspace dim=%d over %s>" % (self.dim, self.algebra.describe())

    def describe(self):
        return {
            "dim": self.dim,
            "basis": [str(b) for b in self.basis()],
        }


# -- distinguished spans -----------------------------------------------------


def level_span(H, levels_seq):
    """Span of the normal forms of all words with the given level sequence
    (the image of the level-indexed matrix-power coalgebra)."""
    seq = [H.domain.canon(r) for r in levels_seq]
    n = H.n
    els = []
    for ij in iproduct(range(1, n + 1), repeat=2 * len(seq)):
        w = tuple((ij[2 * t], ij[2 * t + 1], seq[t]) for t in range(len(seq)))
        els.append(H.element([(w, 1)]))
    return Subspace(H, els)


def irreducible_level_words(H, levels_seq):
    """Irreducible words whose level sequence is exactly the given one,
    in storage order."""
    seq = [H.domain.canon(r) for r in levels_seq]
    n = H.n
    out = []
    for ij in iproduct(range(1, n + 1), repeat=2 * len(seq)):
        w = tuple((ij[2 * t], ij[2 * t + 1], seq[t]) for t in range(len(seq)))
        if H.rules.is_irreducible(w):
            out.append(w)
    out.sort(key=storage_key)
    return out

def irreducible_level_span(H, levels_seq):
    """Span of the irreducible words with the given level sequence."""
    return Subspace.from_words(H, irreducible_level_words(H, levels_seq))


def alternating_words(H, levels_seq):
    """The four words (n = 2 only) whose row indices alternate 1,2,1,...
    or 2,1,2,... and whose column indices do likewise, at the given levels."""
    if H.n != 2:
        raise ValueError("alternating words are defined for n = 2 only")
    if len(levels_seq) < 1:
        raise ValueError("need at least one level")
    seq = [H.domain.canon(r) for r in levels_seq]
    words = []
    for i0, j0 in iproduct((1, 2), repeat=2):
        w = tuple(
            (1 + (i0 - 1 + t) % 2, 1 + (j0 - 1 + t) % 2, seq[t])
            for t in range(len(seq))
        )
        words.append(w)
    words.sort(key=storage_key)
    return words


def alternating_span(H, levels_seq):
    """Span of the four alternating words; they are always irreducible."""
    words = alternating_words(H, levels_seq)
    for w in words:
        if not H.rules.is_irreducible(w):
            raise AssertionError("alternating word %s is reducible" % word_str(w))
    return Subspace.from_words(H, words)


# -- subcoalgebra verdicts ----------------------------------------------------


@dataclass
class Verdict:
    ok: bool
    witness: object = None
    detail: str = ""

    def __bool__(self):
        return self.ok

    def describe(self):
        out = {"ok": self.ok}
        if self.witness is not None:
            out["witness"] = str(self.witness)
        if self.detail:
            out["detail"] = self.detail
        return out


def _pair_echelon(V, W):
    ech = Echelon(V.algebra.field, key=_pair_key)
    for bv in V.basis():
        for bw in W.basis():
            vec = {}
            for wa, ca in bv.terms.items():
                for wb, cb in bw.terms.items():
                    vec[(wa, wb)] = ca * cb
            ech.insert(vec)
    return ech


def tensor_membership(t, V, W):
    """True iff the tensor t lies in V (x) W."""
    if not isinstance(t, Tensor):
        raise TypeError("expected a Tensor")
    return _pair_echelon(V, W).contains(t.terms)


def is_subcoalgebra(V):
    """Verdict on Delta(V) being contained in V (x) V, with a witness basis
    element and an offending tensor component on failure."""
    H = V.algebra
    ech = _pair_echelon(V, V)
    for b in V.basis():
        rem = ech.reduce(H.coproduct(b).terms)
        if rem:
            pair = max(rem, key=_pair_key)
            return Verdict(
                False,
                witness=b,
                detail="Delta(witness) has component %s (x) %s outside V (x) V"
                % (word_str(pair[0]), word_str(pair[1])),
            )
    return Verdict(True)


# -- primitive and grouplike searches -----------------------------------------


def find_primitives(H, max_len, levels=None):
    """Basis of the space of primitive elements (Delta x = x (x) 1 + 1 (x) x)
    supported on irreducible words of length <= max_len."""
    one = H.field.one
    pairs = []
    for w in H.basis_words(max_len, levels):
        vec = {}
        for pair, k in H.delta_word(w).items():
            c = H.field.scalar(k)
            if c:
                vec[pair] = c
        for pair in ((w, UNIT), (UNIT, w)):
            s = vec.get(pair, H.field.zero) - one
            if s:
                vec[pair] = s
            else:
                vec.pop(pair, None)
        pairs.append((w, vec))
    combos = kernel(H.field, pairs, key=_pair_key)
    return [Element(H, dict(c)) for c in combos]


def find_grouplikes(V, bound=2 ** 24):
    """All grouplike elements (eps x = 1, Delta x = x (x) x) inside the
    subspace V, by direct enumeration over a prime field.  The span of the
    unit is handled over any field; other rational searches are refused."""
    H = V.algebra
    basis = V.basis()
    if V.dim == 1 and basis[0] == H.one():
        return [H.one()]
    p = H.field.characteristic
    if not p:
        raise ValueError(
            "grouplike enumeration over the rationals is only supported "
            "for the span of the unit"
        )
    count = p ** V.dim
    if count > bound:
        raise ValueError(
            "search space of size %d exceeds the bound %d" % (count, bound)
        )
    out = []
    for coeffs in iproduct(range(p), repeat=V.dim):
        if not any(coeffs):
            continue
        x = H.zero()
        for c, b in zip(coeffs, basis):
            if c:
                x = x + c * b
        if x.counit() != H.field.one:
            continue
        if x.coproduct() == H.tensor(x, x):
            out.append(x)
    return out


# -- subspace enumeration ------------------------------------------------------


def gaussian_binomial(m, k, q):
    """Number of k-dimensional subspaces of an m-dimensional space over a
    field with q elements."""
    if k < 0 or k > m:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_rref(p, m, k):
    """Yield every k x m reduced row-echelon basis over GF(p) as a list of
    row tuples; pivots are leftmost, rows ordered by pivot."""
    cols = range(m)
    for pivots in combinations(cols, k):
        pivset = set(pivots)
        free = [[c for c in cols if c > pivots[i] and c not in pivset]
                for i in range(k)]
        pools = [list(iproduct(range(p), repeat=len(f))) for f in free]
        for choice in iproduct(*pools):
            rows = []
            for i in range(k):
                row = [0] * m
                row[pivots[i]] = 1
                for c, v in zip(free[i], choice[i]):
                    row[c] = v
                rows.append(tuple(row))
            yield rows


def _enumerate_rref_masks(m, k):
    """GF(2) variant of enumerate_rref yielding rows as bitmasks
    (bit c = coordinate c) together with their set-bit lists."""
    cols = range(m)
    for pivots in combinations(cols, k):
        pivset = set(pivots)
        free = [[c for c in cols if c > pivots[i] and c not in pivset]
                for i in range(k)]
        pools = []
        for i in range(k):
            base = 1 << pivots[i]
            vals = []
            for sub in iproduct((0, 1), repeat=len(free[i])):
                mask = base
                for c, v in zip(free[i], sub):
                    if v:
                        mask |= 1 << c
                bits = tuple(t for t in range(m) if (mask >> t) & 1)
                vals.append((mask, bits))
            pools.append(vals)
        yield pivots, pools


# -- the scan -------------------------------------------------------------------


@dataclass
class ScanReport:
    config: dict
    levels_seq: tuple
    mode: str
    dimension: int
    ambient_dim: int
    subspace_count: object
    found: list = dc_field(default_factory=list)
    contains_alternating: object = None
    elapsed: float = 0.0

    def describe(self):
        return {
            "config": self.config,
            "levels": list(self.levels_seq),
            "mode": self.mode,
            "dimension": self.dimension,
            "ambient_dim": self.ambient_dim,
            "subspace_count": self.subspace_count,
            "found": [s.describe() for s in self.found],
            "found_count": len(self.found),
            "contains_alternating": self.contains_alternating,
            "elapsed_seconds": round(self.elapsed, 3),
        }


EXHAUSTIVE_BOUND = 10 ** 7


def scan_matrix_subcoalgebras(H, levels_seq, mode="candidate", dimension=None):
    """Search the span of irreducible words at the given level sequence for
    subcoalgebras of the given dimension (default n*n).

    candidate mode: test only the alternating-word span.
    exhaustive mode: enumerate every subspace of that dimension over a
    prime field (refused above EXHAUSTIVE_BOUND subspaces).
    """
    start = time.monotonic()
    if dimension is None:
        dimension = H.n * H.n
    seq = tuple(H.domain.canon(r) for r in levels_seq)
    B = irreducible_level_words(H, seq)
    report = ScanReport(
        config=H.describe(),
        levels_seq=seq,
        mode=mode,
        dimension=dimension,
        ambient_dim=len(B),
        subspace_count=None,
    )

    if mode == "candidate":
        D = alternating_span(H, seq)
        verdict = is_subcoalgebra(D)
        report.subspace_count = 1
        report.found = [D] if verdict.ok else []
        report.contains_alternating = verdict.ok
    elif mode == "exhaustive":
        p = H.field.characteristic
        if not p:
            raise ValueError("exhaustive scan requires a prime field")
        count = gaussian_binomial(len(B), dimension, p)
        if count > EXHAUSTIVE_BOUND:
            raise ValueError(
                "exhaustive scan over %d subspaces exceeds the bound %d; "
                "use candidate mode" % (count, EXHAUSTIVE_BOUND)
            )
        report.subspace_count = count
        if p == 2:
            masks = _scan_gf2(H, B, dimension)
            one = H.field.one
            for rows in masks:
                els = [
                    Element(H, {B[t]: one for t in range(len(B)) if (r >> t) & 1})
                    for r in rows
                ]
                report.found.append(Subspace(H, els))
        else:
            for rows in enumerate_rref(p, len(B), dimension):
                els = []
                for row in rows:
                    terms = [(B[c], v) for c, v in enumerate(row) if v]
                    els.append(H.element(terms))
                V = Subspace(H, els)
                if is_subcoalgebra(V).ok:
                    report.found.append(V)
        try:
            D = alternating_span(H, seq)
        except ValueError:
            D = None
        if D is not None:
            report.contains_alternating = any(V == D for V in report.found)
    else:
        raise ValueError("unknown scan mode %r" % mode)

    report.elapsed = time.monotonic() - start
    return report


def _scan_gf2(H, B, k):
    """Exhaustive GF(2) scan core.  Returns the row-mask bases of every
    k-dimensional subspace V of span(B) with Delta(V) inside V (x) V.

    Coordinates are extended by any words that occur in coproduct legs but
    lie outside B; a nonzero component there can never reduce to zero, so
    membership failure is detected by the same mask arithmetic.
    """
    m = len(B)
    index = {w: t for t, w in enumerate(B)}
    extras = []
    deltas = {}
    for b in B:
        dd = {}
        for (wa, wb), c in H.delta_word(b).items():
            if c % 2 == 0:
                continue
            dd[(wa, wb)] = 1
            for w in (wa, wb):
                if w not in index:
                    index[w] = m + len(extras)
                    extras.append(w)
        deltas[b] = dd
    e = m + len(extras)

    drows = [[0] * e for _ in range(m)]
    dcols = [[0] * e for _ in range(m)]
    for t, b in enumerate(B):
        for (wa, wb) in deltas[b]:
            ia, ib = index[wa], index[wb]
            drows[t][ia] |= 1 << ib
            dcols[t][ib] |= 1 << ia
    # visit the extra coordinates first: components there fail immediately
    a_order = list(range(m, e)) + list(range(m))

    found = []
    for pivots, pools in _enumerate_rref_masks(m, k):
        plist = list(pivots)
        for chosen in iproduct(*pools):
            rows = tuple(c[0] for c in chosen)
            ok = True
            for _, bits in chosen:
                for a in a_order:
                    x = 0
                    y = 0
                    for t in bits:
                        x ^= drows[t][a]
                        y ^= dcols[t][a]
                    for pi, ri in zip(plist, rows):
                        if (x >> pi) & 1:
                            x ^= ri
                        if (y >> pi) & 1:
                            y ^= ri
                    if x or y:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                found.append(rows)
    return found


# -- coalgebra endomorphisms ----------------------------------------------------


def verify_coalgebra_map(H, images):
    """True iff the n x n family images[i][j] satisfies the matrix-coalgebra
    map conditions: eps(c[i][j]) = d(i,j) and
    Delta(c[i][j]) = sum_k c[i][k] (x) c[k][j]."""
    n = H.n
    if len(images) != n or any(len(row) != n for row in images):
        raise ValueError("expected an %d x %d family of elements" % (n, n))
    one, zero = H.field.one, H.field.zero
    for i in range(n):
        for j in range(n):
            c = images[i][j]
            H._check(c)
            if c.counit() != (one if i == j else zero):
                return False
    for i in range(n):
        for j in range(n):
            rhs = Tensor(H, {})
            for k in range(n):
                rhs = rhs + H.tensor(images[i][k], images[k][j])
            if images[i][j].coproduct() != rhs:
                return False
    return True


def antipode_power_report(H, max_power):
    """Apply antipode powers 0..max_power to every level-0 generator and
    report how many distinct images arise and the first period, if any."""
    gens = [H.gen(i, j, 0) for i in range(1, H.n + 1) for j in range(1, H.n + 1)]
    snapshots = []
    for t in range(max_power + 1):
        snapshots.append(tuple(str(H.antipode(g, power=t)) for g in gens))
    period = None
    for t in range(1, max_power + 1):
        if snapshots[t] == snapshots[0]:
            period = t
            break
    witness = [snap[min(1, len(snap) - 1)] for snap in snapshots]
    return {
        "config": H.describe(),
        "max_power": max_power,
        "distinct": len(set(snapshots)),
        "period": period,
        "witness_images": witness,
    }
