"""Independent reference implementations used to cross-check the package.

Everything here is deliberately written from first principles with naive
algorithms (generate-and-filter enumeration, dense Gaussian elimination)
and does not call into the package's rewrite or linalg internals.
"""

from fractions import Fraction
from itertools import product as iproduct


def make_up(kind, modulus):
    if kind == "mod":
        return lambda r: (r + 1) % modulus
    return lambda r: r + 1


def oracle_reducible(w, n, kind, modulus=None):
    """True iff the word contains any reduction pattern, by direct scan."""
    up = make_up(kind, modulus)
    for t in range(len(w) - 1):
        (ai, aj, ar), (bi, bj, br) = w[t], w[t + 1]
        if aj == n and bj == n and br == up(ar):
            return True
        if ai == n and bi == n and ar == up(br):
            return True
    for t in range(len(w) - 2):
        (ai, aj, ar), (bi, bj, br), (ci, cj, cr) = w[t], w[t + 1], w[t + 2]
        if aj == n and bj == n - 1 and cj == n - 1 and br == up(ar) and cr == up(br):
            return True
        if ai == n and bi == n - 1 and ci == n - 1 and ar == up(br) and br == up(cr):
            return True
    return False


def oracle_irreducible_count(n, kind, modulus, levels, max_len):
    """Generate-and-filter count of irreducible words per length."""
    alphabet = [
        (i, j, r)
        for r in levels
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    ]
    counts = {0: 1}
    for length in range(1, max_len + 1):
        total = 0
        for w in iproduct(alphabet, repeat=length):
            if not oracle_reducible(w, n, kind, modulus):
                total += 1
        counts[length] = total
    return counts


def oracle_rank_q(rows):
    """Rank of a dense rational matrix (list of lists of Fractions/ints)."""
    mat = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for c in range(cols):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][c] != 0:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = 1 / mat[rank][c]
        mat[rank] = [v * inv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][c] != 0:
                f = mat[r][c]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def oracle_rank_p(rows, p):
    """Rank of a dense matrix over GF(p) (list of lists of ints)."""
    mat = [[v % p for v in row] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for c in range(cols):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][c]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][c], p - 2, p)
        mat[rank] = [(v * inv) % p for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][c]:
                f = mat[r][c]
                mat[r] = [(a - f * b) % p for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank
