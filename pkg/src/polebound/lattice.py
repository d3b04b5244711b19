"""Exact integer-lattice arithmetic for finitely presented abelian groups.

A character group is presented as Z^n modulo the lattice spanned by its
relation vectors.  Everything here is plain python-int row reduction
(Hermite normal form), so membership tests and canonical residues are
exact and deterministic.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

Row = Tuple[int, ...]


def hnf_rows(rows: Iterable[Sequence[int]], n: int) -> list[Row]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Pivots are positive, entries above a pivot are reduced into
    ``[0, pivot)``, zero rows are dropped.  The result is a canonical
    basis: two generating sets span the same lattice iff their HNFs are
    equal.
    """
    mat = [list(r) for r in rows if any(r)]
    m = len(mat)
    r = 0
    for c in range(n):
        pivot = None
        for i in range(r, m):
            if mat[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        while True:
            done = True
            for i in range(r + 1, m):
                if mat[i][c]:
                    q = mat[i][c] // mat[r][c]
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[r])]
                    if mat[i][c]:
                        mat[r], mat[i] = mat[i], mat[r]
                        done = False
            if done:
                break
        if mat[r][c] < 0:
            mat[r] = [-a for a in mat[r]]
        for i in range(r):
            q = mat[i][c] // mat[r][c]
            if q:
                mat[i] = [a - q * b for a, b in zip(mat[i], mat[r])]
        r += 1
        if r == m:
            break
    return [tuple(row) for row in mat[:r] if any(row)]


class Lattice:
    """Sublattice of Z^n with canonical-residue reduction."""

    __slots__ = ("n", "rows", "_pivots")

    def __init__(self, n: int, rows: Iterable[Sequence[int]] = ()):
        self.n = n
        self.rows = hnf_rows(rows, n)
        self._pivots = []
        for row in self.rows:
            for c, a in enumerate(row):
                if a:
                    self._pivots.append((c, row))
                    break

    def reduce(self, v: Sequence[int]) -> Row:
        """Canonical representative of ``v`` modulo the lattice."""
        w = list(v)
        for c, row in self._pivots:
            q = w[c] // row[c]
            if q:
                for i in range(c, self.n):
                    w[i] -= q * row[i]
        return tuple(w)

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def extend(self, vecs: Iterable[Sequence[int]]) -> "Lattice":
        return Lattice(self.n, list(self.rows) + [tuple(v) for v in vecs])
