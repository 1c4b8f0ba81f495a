"""Exact dense integer matrices.

Everything here works over Python's unbounded ``int`` (and ``Fraction`` where
a field is needed).  There is no floating point anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, NamedTuple, Sequence

from .errors import NonSquare, NotSymmetric, NotUnimodular, SizeMismatch, ZeroVector

IntVector = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")
        for x in self.entries:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"matrix entries must be int, got {type(x).__name__}")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise SizeMismatch("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> IntMatrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diag(cls, values: Sequence[int]) -> IntMatrix:
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def row_vector(cls, v: Sequence[int]) -> IntMatrix:
        return cls(1, len(v), tuple(v))

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> IntVector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __repr__(self) -> str:
        return f"IntMatrix.from_rows({self.to_lists()!r}, cols={self.cols})"

    # -- arithmetic -------------------------------------------------------

    @property
    def T(self) -> IntMatrix:
        r, c, e = self.rows, self.cols, self.entries
        return IntMatrix(c, r, tuple(e[i * c + j] for j in range(c) for i in range(r)))

    def _check_same_shape(self, other: IntMatrix) -> None:
        if self.shape != other.shape:
            raise SizeMismatch(f"shapes {self.shape} and {other.shape}")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols,
                         tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, k: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(k * a for a in self.entries))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise SizeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        bcols = [b[j::p] for j in range(p)] if m else [()] * p
        out = []
        for i in range(n):
            arow = a[i * m:(i + 1) * m]
            for j in range(p):
                out.append(sum(x * y for x, y in zip(arow, bcols[j])))
        return IntMatrix(n, p, tuple(out))

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.T

    def is_skew(self) -> bool:
        return self.is_square and self == -self.T

    def is_zero(self) -> bool:
        return not any(self.entries)


def block_diag(*blocks: IntMatrix) -> IntMatrix:
    """Direct sum of matrices."""
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            out[r0 + i][c0:c0 + b.cols] = b.row(i)
        r0 += b.rows
        c0 += b.cols
    return IntMatrix.from_rows(out, cols)


def hstack(*blocks: IntMatrix) -> IntMatrix:
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise SizeMismatch("hstack needs equal row counts")
    return IntMatrix.from_rows(
        [sum((b.row(i) for b in blocks), ()) for i in range(rows)],
        sum(b.cols for b in blocks))


def vstack(*blocks: IntMatrix) -> IntMatrix:
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise SizeMismatch("vstack needs equal column counts")
    return IntMatrix(sum(b.rows for b in blocks), cols, sum((b.entries for b in blocks), ()))


def bilinear(x: Sequence[int], M: IntMatrix, y: Sequence[int]) -> int:
    """x M y^T for integer row vectors x and y."""
    if len(x) != M.rows or len(y) != M.cols:
        raise SizeMismatch("vector lengths do not match the matrix")
    e, c = M.entries, M.cols
    total = 0
    for i, xi in enumerate(x):
        if xi:
            total += xi * sum(e[i * c + j] * yj for j, yj in enumerate(y) if yj)
    return total


def vec_mat(x: Sequence[int], M: IntMatrix) -> IntVector:
    """Row vector times matrix."""
    if len(x) != M.rows:
        raise SizeMismatch("vector length does not match the matrix")
    c, e = M.cols, M.entries
    return tuple(sum(xi * e[i * c + j] for i, xi in enumerate(x) if xi) for j in range(c))


# -- determinant, inverse, rank ----------------------------------------------

def det(M: IntMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    if not M.is_square:
        raise NonSquare(f"determinant of a {M.rows}x{M.cols} matrix")
    n = M.rows
    if n == 0:
        return 1
    a = M.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _fraction_rows(M: IntMatrix) -> list[list[Fraction]]:
    return [[Fraction(x) for x in M.row(i)] for i in range(M.rows)]


def rank(M: IntMatrix) -> int:
    a = _fraction_rows(M)
    r = 0
    for c in range(M.cols):
        piv = next((i for i in range(r, M.rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, M.rows):
            if a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == M.rows:
            break
    return r


def inverse_unimodular(M: IntMatrix) -> IntMatrix:
    """Integer inverse of a matrix with determinant +1 or -1."""
    d = det(M)
    if abs(d) != 1:
        raise NotUnimodular(f"determinant is {d}, not +-1")
    n = M.rows
    a = _fraction_rows(M)
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        inv[c], inv[piv] = inv[piv], inv[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        inv[c] = [x / p for x in inv[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[c])]
    # integrality follows from |det| = 1; assert it anyway
    out = []
    for row in inv:
        assert all(x.denominator == 1 for x in row)
        out.append([x.numerator for x in row])
    return IntMatrix.from_rows(out, n)


# -- inertia ------------------------------------------------------------------

class InertiaTriple(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus

    @property
    def dimension(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero


def hermitian_inertia(a: list[list], conj: Callable = lambda x: x,
                      real_sign: Callable = lambda x: (x > 0) - (x < 0)) -> InertiaTriple:
    """Inertia of a Hermitian matrix over an exact field.

    ``a`` is consumed.  Pivots on the first nonzero diagonal entry; when the
    whole remaining diagonal vanishes but an off-diagonal entry b survives,
    the 2x2 block [[0, b], [conj(b), 0]] is split off (one positive and one
    negative direction) via its Schur complement.
    """
    n_plus = n_minus = 0
    live = list(range(len(a)))
    while live:
        i = next((k for k in live if a[k][k] != 0), None)
        if i is not None:
            p = a[i][i]
            s = real_sign(p)
            if s > 0:
                n_plus += 1
            else:
                n_minus += 1
            live.remove(i)
            for r in live:
                ari = a[r][i]
                if ari == 0:
                    continue
                f = ari / p
                row_r, row_i = a[r], a[i]
                for c in live:
                    if row_i[c] != 0:
                        row_r[c] = row_r[c] - f * row_i[c]
            continue
        pair = next(((k, l) for k in live for l in live if k != l and a[k][l] != 0), None)
        if pair is None:
            break
        i, j = pair
        b = a[i][j]
        bc = a[j][i]
        n_plus += 1
        n_minus += 1
        live.remove(i)
        live.remove(j)
        for r in live:
            ari, arj = a[r][i], a[r][j]
            if ari == 0 and arj == 0:
                continue
            row_r = a[r]
            for c in live:
                aic, ajc = a[i][c], a[j][c]
                row_r[c] = row_r[c] - arj * aic / b - ari * ajc / bc
    return InertiaTriple(n_plus, n_minus, len(live))


def inertia(S: IntMatrix) -> InertiaTriple:
    """Exact inertia of a symmetric integer matrix."""
    if not S.is_square:
        raise NonSquare("inertia needs a square matrix")
    if not S.is_symmetric():
        raise NotSymmetric("inertia needs a symmetric matrix")
    return hermitian_inertia(_fraction_rows(S))


def pfaffian(A: IntMatrix) -> int:
    """Pfaffian of a skew-symmetric integer matrix (exact, via skew elimination)."""
    if not A.is_skew():
        raise NotSymmetric("pfaffian needs a skew-symmetric matrix")
    n = A.rows
    if n % 2:
        return 0
    a = _fraction_rows(A)
    idx = list(range(n))
    result = Fraction(1)
    while idx:
        i = idx[0]
        j = next((k for k in idx[1:] if a[i][k] != 0), None)
        if j is None:
            return 0
        # moving j next to i costs the sign of the transposition
        if idx[1] != j:
            result = -result
            p = idx.index(j)
            idx[1], idx[p] = idx[p], idx[1]
        b = a[i][j]
        result *= b
        idx = idx[2:]
        for r in idx:
            ari, arj = a[r][i], a[r][j]
            if ari == 0 and arj == 0:
                continue
            for c in idx:
                a[r][c] += (ari * a[j][c] - arj * a[i][c]) / b
    assert result.denominator == 1
    return result.numerator


def is_primitive(z: Sequence[int]) -> bool:
    if not any(z):
        raise ZeroVector("primitivity of the zero vector is undefined")
    g = 0
    for x in z:
        g = gcd(g, x)
    return g == 1


# -- integer row reduction and Smith invariants ---------------------------------

def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def row_echelon_unimodular(M: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Integer row echelon form with transform: returns (U, H) with U M = H.

    U is unimodular.  Rows of U whose H-row is zero form a basis of the left
    kernel {x : x M = 0} over the integers.
    """
    n, m = M.rows, M.cols
    h = M.to_lists()
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    r = 0
    for c in range(m):
        if r == n:
            break
        # gcd-combine column c of rows r..n-1 into row r
        for i in range(r + 1, n):
            if h[i][c] == 0:
                continue
            a, b = h[r][c], h[i][c]
            g, s, t = xgcd(a, b)
            x, y = a // g, b // g
            hr, hi = h[r], h[i]
            h[r] = [s * p + t * q for p, q in zip(hr, hi)]
            h[i] = [x * q - y * p for p, q in zip(hr, hi)]
            ur, ui = u[r], u[i]
            u[r] = [s * p + t * q for p, q in zip(ur, ui)]
            u[i] = [x * q - y * p for p, q in zip(ur, ui)]
        if h[r][c] != 0:
            if h[r][c] < 0:
                h[r] = [-x for x in h[r]]
                u[r] = [-x for x in u[r]]
            r += 1
    return IntMatrix.from_rows(u, n), IntMatrix.from_rows(h, m)


def left_kernel(M: IntMatrix) -> IntMatrix:
    """Integer basis (as rows) of {x in Z^rows : x M = 0}."""
    U, H = row_echelon_unimodular(M)
    rows = [U.row(i) for i in range(H.rows) if not any(H.row(i))]
    return IntMatrix.from_rows(rows, M.rows)


def smith_invariants(M: IntMatrix) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form, each dividing the next."""
    a = [list(r) for r in M.to_lists()]
    n, m = M.rows, M.cols
    out = []
    t = 0
    while t < min(n, m):
        nz = [(abs(a[i][j]), i, j) for i in range(t, n) for j in range(t, m) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, m):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if dirty:
                # move the smallest leftover in row/column t to the pivot
                cands = [(abs(a[i][t]), i, t) for i in range(t + 1, n) if a[i][t]]
                cands += [(abs(a[t][j]), t, j) for j in range(t + 1, m) if a[t][j]]
                _, i, j = min(cands)
                if j == t:
                    a[t], a[i] = a[i], a[t]
                else:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                continue
            bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, m)
                        if a[i][j] % p), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
        out.append(abs(a[t][t]))
        t += 1
    return out
