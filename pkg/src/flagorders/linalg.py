"""Exact linear algebra over Fraction and over rational-function fields."""

from __future__ import annotations

from fractions import Fraction


def frac_rank(rows):
    """Rank of a matrix given as a list of Fraction rows (destructive copy)."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        inv = Fraction(1, 1) / pr[col]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col] * inv
                rows[r] = [a - factor * b for a, b in zip(rows[r], pr)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def frac_solve(matrix, rhs):
    """Solve A x = b exactly over the rationals; None when inconsistent.

    Free variables are set to zero, so the returned solution is one
    particular solution.  matrix is a list of rows.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    aug = [list(matrix[i]) + [Fraction(rhs[i])] for i in range(m)]
    pivots = []
    rank = 0
    for col in range(n):
        pivot = None
        for r in range(rank, m):
            if aug[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        pr = aug[rank]
        inv = Fraction(1, 1) / pr[col]
        aug[rank] = [a * inv for a in pr]
        pr = aug[rank]
        for r in range(m):
            if r != rank and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], pr)]
        pivots.append(col)
        rank += 1
    for r in range(rank, m):
        if aug[r][n]:
            return None
    x = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        x[col] = aug[r][n]
    return x


class FieldEchelon:
    """Incremental row-reduction over an arbitrary exact field.

    Vectors are lists of field elements supporting +, -, *, inv() and
    is_zero.  Used to pick determinant-witness columns greedily.
    """

    def __init__(self, dimension, zero, one):
        self.dimension = dimension
        self.zero = zero
        self.one = one
        self.rows = []
        self.pivots = []

    def _reduce(self, vec):
        vec = list(vec)
        for row, piv in zip(self.rows, self.pivots):
            c = vec[piv]
            if not c.is_zero:
                vec = [a - c * b for a, b in zip(vec, row)]
        return vec

    def try_add(self, vec):
        """Add vec if independent of the current span; returns True on success."""
        red = self._reduce(vec)
        piv = None
        for i, c in enumerate(red):
            if not c.is_zero:
                piv = i
                break
        if piv is None:
            return False
        inv = red[piv].inv()
        red = [a * inv for a in red]
        self.rows.append(red)
        self.pivots.append(piv)
        return True

    @property
    def rank(self):
        return len(self.rows)


def field_det(matrix):
    """Determinant over an exact field by cofactor expansion (small n)."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = None
    for j in range(n):
        entry = matrix[0][j]
        if entry.is_zero:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * field_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return matrix[0][0] - matrix[0][0]  # zero of the field
    return total


def field_adjugate(matrix, one):
    """Adjugate matrix satisfying adj(A) * A = det(A) * I; one is the field unit."""
    n = len(matrix)
    if n == 1:
        return [[one]]
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:i] + row[i + 1:] for k, row in enumerate(matrix) if k != j]
            c = field_det(minor)
            if (i + j) % 2:
                c = -c
            adj[i][j] = c
    return adj
