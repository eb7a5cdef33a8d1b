"""Sparse exact linear algebra over a coefficient field.

Vectors are dicts mapping hashable basis keys (words, word pairs, ...) to
nonzero field scalars.  An Echelon keeps a fully reduced row set: each row
is normalized to leading coefficient 1 on its pivot (the largest key in the
row under the chosen ordering) and contains no other row's pivot, so
reduction against it yields canonical remainders.
"""


class Echelon:
    """Incremental reduced row-echelon form with optional tracking of how
    each inserted vector combines the original inputs (for kernels)."""

    def __init__(self, field, key=None, track=False):
        self.field = field
        self.key = key if key is not None else (lambda k: k)
        self.track = track
        self.rows = {}
        self.combs = {}

    @property
    def dim(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows, key=self.key)

    def basis_rows(self):
        """Rows in ascending pivot order."""
        return [self.rows[p] for p in self.pivots()]

    def _reduce(self, vec, comb):
        v = {k: c for k, c in vec.items() if c}
        out = {}
        while v:
            m = max(v, key=self.key)
            c = v.pop(m)
            row = self.rows.get(m)
            if row is None:
                out[m] = c
                continue
            for k2, c2 in row.items():
                if k2 == m:
                    continue
                s = v.get(k2)
                s = -(c * c2) if s is None else s - c * c2
                if s:
                    v[k2] = s
                else:
                    v.pop(k2, None)
            if comb is not None:
                for tag, c2 in self.combs[m].items():
                    s = comb.get(tag)
                    s = -(c * c2) if s is None else s - c * c2
                    if s:
                        comb[tag] = s
                    else:
                        comb.pop(tag, None)
        return out

    def reduce(self, vec):
        """Canonical remainder of vec modulo the row space."""
        return self._reduce(vec, None)

    def contains(self, vec):
        return not self._reduce(vec, None)

    def insert(self, vec, tag=None):
        """Add vec to the row space; returns True if the rank grew."""
        return self.feed(tag, vec) is None and self._grew

    def feed(self, tag, vec):
        """Insert vec; if it was already in the row space, return the
        combination of previously fed tags that produces it (the kernel
        relation tag - sum ...), else None."""
        comb = {tag: self.field.one} if self.track else None
        rem = self._reduce(vec, comb)
        if not rem:
            self._grew = False
            return comb if self.track else None
        self._grew = True
        m = max(rem, key=self.key)
        inv = self.field.one / rem[m]
        row = {k: c * inv for k, c in rem.items()}
        if comb is not None:
            comb = {t: c * inv for t, c in comb.items()}
        for p, prow in self.rows.items():
            c = prow.get(m)
            if c is None:
                continue
            for k2, c2 in row.items():
                s = prow.get(k2)
                s = -(c * c2) if s is None else s - c * c2
                if s:
                    prow[k2] = s
                else:
                    prow.pop(k2, None)
            if self.track:
                pcomb = self.combs[p]
                for t, c2 in comb.items():
                    s = pcomb.get(t)
                    s = -(c * c2) if s is None else s - c * c2
                    if s:
                        pcomb[t] = s
                    else:
                        pcomb.pop(t, None)
        self.rows[m] = row
        if self.track:
            self.combs[m] = comb
        return None


def kernel(field, pairs, key=None):
    """Kernel of the linear map tag -> vector, described by (tag, vector)
    pairs; returns one combination dict {tag: coeff} per kernel dimension."""
    ech = Echelon(field, key=key, track=True)
    out = []
    for tag, vec in pairs:
        comb = ech.feed(tag, vec)
        if comb is not None:
            out.append(comb)
    return out
