"""Exact integer-lattice arithmetic over Z^n (n small).

Everything here is pure and exact: matrices are tuples of Python ints, so
there is no overflow and no floating point.  Sublattices are kept in a
row-style Hermite normal form, which makes equality of lattices literal
equality of their stored bases.

Conventions for the Hermite normal form used throughout:

* rows are echelonized left to right, pivot entries are positive,
* every entry above a pivot is reduced into ``[0, pivot)``,
* zero rows are dropped, so a basis always has ``rank`` rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class LatticeError(ValueError):
    """Raised for structural errors (shape mismatch, failed containment)."""


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with g = x*a + y*b and g >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


@dataclass(frozen=True)
class IntMatrix:
    """An immutable integer matrix; ``entries`` holds the rows."""

    entries: tuple[tuple[int, ...], ...]
    ncols: int

    def __post_init__(self):
        for row in self.entries:
            if len(row) != self.ncols:
                raise LatticeError("ragged matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "IntMatrix":
        tup = tuple(tuple(int(x) for x in row) for row in rows)
        if ncols is None:
            if not tup:
                raise LatticeError("cannot infer width of an empty matrix")
            ncols = len(tup[0])
        return cls(tup, ncols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(tuple(tuple(0 for _ in range(ncols)) for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.entries) + "]"


def transpose_rows(rows: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    return [tuple(r[j] for r in rows) for j in range(ncols)]


def _hnf_rows(rows: Sequence[Sequence[int]], ncols: int) -> tuple[tuple[int, ...], ...]:
    mat = [list(map(int, r)) for r in rows]
    m = len(mat)
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, m):
            if mat[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        for i in range(r + 1, m):
            if mat[i][c] == 0:
                continue
            a, b = mat[r][c], mat[i][c]
            g, x, y = xgcd(a, b)
            a_g, b_g = a // g, b // g
            row_r, row_i = mat[r], mat[i]
            for j in range(ncols):
                rj, ij = row_r[j], row_i[j]
                row_r[j] = x * rj + y * ij
                row_i[j] = -b_g * rj + a_g * ij
        if mat[r][c] < 0:
            mat[r] = [-x for x in mat[r]]
        p = mat[r][c]
        for i in range(r):
            q = mat[i][c] // p
            if q:
                mat[i] = [u - q * v for u, v in zip(mat[i], mat[r])]
        r += 1
        if r == m:
            break
    return tuple(tuple(row) for row in mat[:r] if any(row))


def hnf(m: IntMatrix) -> IntMatrix:
    """Row-style Hermite normal form of ``m`` (zero rows dropped)."""
    return IntMatrix(_hnf_rows(m.entries, m.ncols), m.ncols)


def _snf_diagonal(rows: Sequence[Sequence[int]], ncols: int) -> list[int]:
    """Diagonal of the Smith normal form, as nonnegative integers d_1 | d_2 | ..."""
    mat = [list(map(int, r)) for r in rows]
    m, n = len(mat), ncols
    diag: list[int] = []
    t = 0
    while t < m and t < n:
        # locate a nonzero entry in the remaining block
        found = None
        for i in range(t, m):
            for j in range(t, n):
                if mat[i][j] != 0:
                    found = (i, j)
                    break
            if found:
                break
        if not found:
            break
        i0, j0 = found
        mat[t], mat[i0] = mat[i0], mat[t]
        for row in mat:
            row[t], row[j0] = row[j0], row[t]
        # clear row/column t, restarting whenever a division fails
        while True:
            for i in range(t + 1, m):
                if mat[i][t] == 0:
                    continue
                a, b = mat[t][t], mat[i][t]
                g, x, y = xgcd(a, b)
                a_g, b_g = a // g, b // g
                for j in range(t, n):
                    rj, ij = mat[t][j], mat[i][j]
                    mat[t][j] = x * rj + y * ij
                    mat[i][j] = -b_g * rj + a_g * ij
            for j in range(t + 1, n):
                if mat[t][j] == 0:
                    continue
                a, b = mat[t][t], mat[t][j]
                g, x, y = xgcd(a, b)
                a_g, b_g = a // g, b // g
                for i in range(t, m):
                    rit, rij = mat[i][t], mat[i][j]
                    mat[i][t] = x * rit + y * rij
                    mat[i][j] = -b_g * rit + a_g * rij
            if any(mat[i][t] for i in range(t + 1, m)):
                continue  # column ops reintroduced entries below the pivot
            break
        # enforce divisibility of the rest of the block by the pivot
        p = mat[t][t]
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if mat[i][j] % p != 0:
                    offender = i
                    break
            if offender:
                break
        if offender is not None:
            for j in range(t, n):
                mat[t][j] += mat[offender][j]
            continue  # redo this pivot
        diag.append(abs(p))
        t += 1
    while len(diag) < min(m, n):
        diag.append(0)
    return diag


def snf_invariants(m: IntMatrix) -> tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... of ``m`` (zeros excluded)."""
    return tuple(d for d in _snf_diagonal(m.entries, m.ncols) if d != 0)


def cokernel_free_rank(m: IntMatrix) -> int:
    """Free rank of Z^ncols / (row span of m)."""
    return m.ncols - len(snf_invariants(m))


@dataclass(frozen=True)
class IntLattice:
    """A sublattice of Z^ambient_rank, stored via a canonical HNF basis.

    Two values are equal as sets of vectors iff they are equal as dataclasses.
    """

    ambient_rank: int
    basis: IntMatrix

    def __post_init__(self):
        if self.basis.ncols != self.ambient_rank:
            raise LatticeError("basis width must equal ambient rank")

    @classmethod
    def span(cls, ambient_rank: int, rows: Iterable[Sequence[int]]) -> "IntLattice":
        return cls(ambient_rank, IntMatrix(_hnf_rows(tuple(rows), ambient_rank), ambient_rank))

    @classmethod
    def zero(cls, ambient_rank: int) -> "IntLattice":
        return cls(ambient_rank, IntMatrix((), ambient_rank))

    @classmethod
    def full(cls, ambient_rank: int) -> "IntLattice":
        return cls(ambient_rank, IntMatrix.identity(ambient_rank))

    @property
    def rank(self) -> int:
        return self.basis.nrows

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self.basis.entries

    def key(self) -> tuple:
        """Total-order key; lexicographic on the flattened canonical basis."""
        return (self.rank, tuple(x for row in self.rows for x in row))

    def contains_vector(self, vec: Sequence[int]) -> bool:
        return self.solve(vec) is not None

    def solve(self, vec: Sequence[int]) -> tuple[int, ...] | None:
        """Coefficients of ``vec`` over the basis, or None if not in the lattice."""
        v = list(map(int, vec))
        if len(v) != self.ambient_rank:
            raise LatticeError("vector has wrong length")
        coeffs = []
        for row in self.rows:
            c = next(j for j, x in enumerate(row) if x != 0)
            if v[c] % row[c] != 0:
                return None
            q = v[c] // row[c]
            coeffs.append(q)
            if q:
                v = [u - q * w for u, w in zip(v, row)]
        if any(v):
            return None
        return tuple(coeffs)

    def contains_lattice(self, other: "IntLattice") -> bool:
        if other.ambient_rank != self.ambient_rank:
            raise LatticeError("ambient rank mismatch")
        return all(self.contains_vector(r) for r in other.rows)

    def transformed(self, mat2: Sequence[Sequence[int]]) -> "IntLattice":
        """Image lattice under the linear map given by ``mat2`` (columns act)."""
        new_rows = []
        for row in self.rows:
            new_rows.append(tuple(sum(mat2[i][j] * row[j] for j in range(self.ambient_rank))
                                  for i in range(len(mat2))))
        return IntLattice.span(self.ambient_rank, new_rows)

    def __str__(self):
        return str(self.basis)


def lattice_sum(a: IntLattice, b: IntLattice) -> IntLattice:
    if a.ambient_rank != b.ambient_rank:
        raise LatticeError("ambient rank mismatch")
    return IntLattice.span(a.ambient_rank, a.rows + b.rows)


def _left_kernel_rows(rows: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    """Basis of {v in Z^m : v . rows = 0} via HNF of the augmented matrix."""
    m = len(rows)
    aug = [tuple(rows[i]) + tuple(1 if j == i else 0 for j in range(m)) for i in range(m)]
    reduced = _hnf_rows(aug, ncols + m)
    return [row[ncols:] for row in reduced if not any(row[:ncols])]


def lattice_intersect(a: IntLattice, b: IntLattice) -> IntLattice:
    if a.ambient_rank != b.ambient_rank:
        raise LatticeError("ambient rank mismatch")
    n = a.ambient_rank
    stacked = list(a.rows) + list(b.rows)
    ra = a.rank
    result = []
    for rel in _left_kernel_rows(stacked, n):
        vec = [0] * n
        for i in range(ra):
            if rel[i]:
                for j in range(n):
                    vec[j] += rel[i] * a.rows[i][j]
        result.append(tuple(vec))
    return IntLattice.span(n, result)


def saturation(a: IntLattice) -> IntLattice:
    """Smallest primitive overlattice of ``a`` of the same rank."""
    n = a.ambient_rank
    if a.rank == n:
        return IntLattice.full(n)
    if a.rank == 0:
        return a
    # rational row space = vectors orthogonal to the integer kernel of basis^T
    cols = transpose_rows(a.rows, n)  # n rows of length rank
    normals = _left_kernel_rows(cols, a.rank)
    normal_cols = transpose_rows(normals, n)
    sat_rows = _left_kernel_rows(normal_cols, len(normals))
    return IntLattice.span(n, sat_rows)


@dataclass(frozen=True)
class QuotientInvariants:
    """Structure of sup/sub: free rank plus invariant factors > 1."""

    free_rank: int
    torsion: tuple[int, ...]

    @property
    def is_free(self) -> bool:
        return not self.torsion

    @property
    def order(self) -> int | None:
        """Order of the quotient group, or None when infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out


def quotient_invariants(sub: IntLattice, sup: IntLattice) -> QuotientInvariants:
    """Invariants of sup/sub; raises LatticeError("not a sublattice") if sub is not inside sup."""
    if sub.ambient_rank != sup.ambient_rank:
        raise LatticeError("ambient rank mismatch")
    coeff_rows = []
    for row in sub.rows:
        c = sup.solve(row)
        if c is None:
            raise LatticeError("not a sublattice")
        coeff_rows.append(c)
    if sup.rank == 0:
        return QuotientInvariants(0, ())
    coeff = IntMatrix.from_rows(coeff_rows, ncols=sup.rank)
    inv = snf_invariants(coeff)
    return QuotientInvariants(sup.rank - len(inv), tuple(d for d in inv if d > 1))


def quotient_order(sub: IntLattice, sup: IntLattice) -> int | None:
    """|sup/sub| when finite, else None."""
    return quotient_invariants(sub, sup).order


def enumerate_full_rank_sublattices(max_index: int, ambient_rank: int = 2) -> list[IntLattice]:
    """All finite-index sublattices of Z^2 with index <= max_index (canonical HNF)."""
    if ambient_rank != 2:
        raise LatticeError("only rank-2 enumeration is supported")
    out = []
    a = 1
    while a <= max_index:
        d = 1
        while a * d <= max_index:
            for b in range(d):
                out.append(IntLattice.span(2, [(a, b), (0, d)]))
            d += 1
        a += 1
    return out
