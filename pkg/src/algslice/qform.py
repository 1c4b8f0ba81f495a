"""Integral quadratic forms: isotropic vectors and symplectic completion.

The isotropic search is a bounded, deterministic stand-in for Meyer's
theorem.  Vectors are enumerated over sup-norm shells of increasing radius;
within the first shell that contains a solution the *canonical* one is
returned.  Canonical order: the first nonzero coordinate is positive, and
vectors are compared lexicographically with each coordinate ranked from
largest to smallest value (r, r-1, ..., -r).  So (1, 0) precedes (0, 1) and
(1, 1) precedes (1, -1).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Sequence

from .errors import (BudgetExhausted, NotFound, NotPrimitive, NotSkew, NotSymmetric,
                     NotUnimodular, OrientationMismatch, SizeMismatch)
from .exactmat import (IntMatrix, bilinear, block_diag, det, inertia, is_primitive, left_kernel,
                       pfaffian, vec_mat, xgcd)


@dataclass(frozen=True)
class QuadForm:
    """Symmetric integer matrix Q viewed as q(x) = x Q x^T."""

    matrix: IntMatrix

    def __post_init__(self):
        if not self.matrix.is_symmetric():
            raise NotSymmetric("quadratic form matrix must be symmetric")

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def __call__(self, x: Sequence[int]) -> int:
        return bilinear(x, self.matrix, x)


@dataclass(frozen=True)
class BasisChange:
    """Unimodular P with det(P) = +1, acting on forms by V -> P V P^T."""

    matrix: IntMatrix

    def __post_init__(self):
        d = det(self.matrix)
        if d != 1:
            raise NotUnimodular(f"basis change must have determinant +1, got {d}")


@dataclass(frozen=True)
class SearchBudget:
    max_sup_norm: int = 8
    max_seconds: float = 120.0

    def __post_init__(self):
        if self.max_sup_norm < 1 or self.max_seconds <= 0:
            raise ValueError("search budget knobs must be positive")


@dataclass(frozen=True)
class IsotropicCertificate:
    z: tuple
    q_value: int
    gcd: int
    search_radius_used: int
    method: str = field(default="shell-search", compare=False)

    def verify(self, Q: QuadForm) -> bool:
        return (len(self.z) == Q.dim and any(self.z) and Q(self.z) == 0 == self.q_value
                and _gcd_all(self.z) == 1 == self.gcd)


def _gcd_all(xs) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g


def is_indefinite(Q: QuadForm) -> bool:
    n_plus, n_minus, _ = inertia(Q.matrix)
    return n_plus > 0 and n_minus > 0


def standard_symplectic(n: int) -> IntMatrix:
    """Block diagonal J_std made of n/2 copies of [[0, 1], [-1, 0]]."""
    if n % 2:
        raise SizeMismatch("standard symplectic form needs even dimension")
    block = IntMatrix.from_rows([[0, 1], [-1, 0]])
    return block_diag(*([block] * (n // 2))) if n else IntMatrix.zeros(0)


# -- isotropic search -------------------------------------------------------------

def _trivial_scan(Q: IntMatrix) -> tuple | None:
    """Cheap witnesses: zero diagonal entries, then isotropic binary subforms."""
    n = Q.rows
    for i in range(n):
        if Q[i, i] == 0:
            return tuple(int(k == i) for k in range(n))
    best = None
    for i in range(n):
        for j in range(i + 1, n):
            a, b, c = Q[i, i], Q[i, j], Q[j, j]
            # a u^2 + 2 b u v + c v^2 splits over Z iff b^2 - a c is a square
            disc = b * b - a * c
            if disc < 0 or isqrt(disc) ** 2 != disc:
                continue
            s = isqrt(disc)
            u, v = -b + s, a
            g = gcd(u, v)
            u, v = u // g, v // g
            z = [0] * n
            z[i], z[j] = u, v
            if u < 0 or (u == 0 and v < 0):
                z = [-x for x in z]
            z = tuple(z)
            if best is None or max(map(abs, z)) < max(map(abs, best)):
                best = z
    return best


class _Pruner:
    """Exact bounds on q over a box, from a rational diagonalization.

    N * q(x) = sum_m c_m s_m(x)^2 where s_m is an integer linear form in
    x_0..x_m only.  Once x_0..x_k are fixed, the terms m <= k are exact and
    each later term ranges over an interval.  Falls back to naive interval
    evaluation of x Q x^T when the diagonalization hits a zero pivot.
    """

    def __init__(self, Q: IntMatrix):
        self.n = Q.rows
        self.Q = Q.to_lists()
        self.ldl = self._decompose(Q)

    @staticmethod
    def _decompose(Q: IntMatrix):
        n = Q.rows
        # LDL^T of the reversed form, so term m only sees x_0..x_m
        a = [[Fraction(Q[n - 1 - i, n - 1 - j]) for j in range(n)] for i in range(n)]
        L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        d = [Fraction(0)] * n
        for k in range(n):
            d[k] = a[k][k] - sum(L[k][j] ** 2 * d[j] for j in range(k))
            if d[k] == 0:
                return None
            for i in range(k + 1, n):
                L[i][k] = (a[i][k] - sum(L[i][j] * L[k][j] * d[j] for j in range(k))) / d[k]
        # term m (original index) = d[n-1-m] * (sum_j L[n-1-j][n-1-m] x_j)^2 over j <= m
        coeffs, weights = [], []
        for m in range(n):
            k = n - 1 - m
            row = [L[n - 1 - j][k] for j in range(m + 1)]
            den = lcm(*(x.denominator for x in row))
            coeffs.append([int(x * den) for x in row])
            weights.append(d[k] / (den * den))
        scale = lcm(*(w.denominator for w in weights))
        weights = [int(w * scale) for w in weights]
        return coeffs, weights


def find_primitive_isotropic(Q: QuadForm, budget: SearchBudget | None = None) -> IsotropicCertificate:
    """Canonical primitive isotropic vector of Q of minimal sup-norm.

    Raises NotFound when every shell up to ``budget.max_sup_norm`` is empty
    (immediately for definite forms) and BudgetExhausted when time runs out.
    """
    budget = budget or SearchBudget()
    M = Q.matrix
    n = M.rows
    if n == 0:
        raise NotFound("zero-dimensional form has no nonzero vectors", radius=0, definite=True)
    n_plus, n_minus, n_zero = inertia(M)
    if n_zero == 0 and (n_plus == 0 or n_minus == 0):
        raise NotFound("form is definite", radius=0, definite=True)

    witness = _trivial_scan(M)
    deadline = time.monotonic() + budget.max_seconds
    pruner = _Pruner(M)
    for r in range(1, budget.max_sup_norm + 1):
        z = _search_shell(M, pruner, r, deadline)
        if z is not None:
            assert Q(z) == 0 and _gcd_all(z) == 1
            return IsotropicCertificate(z, 0, 1, r)
    if witness is not None:
        # the shells up to the budget are empty, but the scan found a larger vector
        return IsotropicCertificate(witness, Q(witness), _gcd_all(witness),
                                    budget.max_sup_norm, method="binary-subform")
    raise NotFound(f"no isotropic vector with sup-norm <= {budget.max_sup_norm}",
                   radius=budget.max_sup_norm)


def _search_shell(M: IntMatrix, pruner: _Pruner, r: int, deadline: float) -> tuple | None:
    """First canonical isotropic vector with sup-norm exactly r, or None."""
    n = M.rows
    Q = pruner.Q
    ldl = pruner.ldl
    x = [0] * n
    # running value of x_fixed Q x_fixed^T, and cross terms 2 (x_fixed Q)_j for free j
    lin = [0] * n
    if ldl is not None:
        coeffs, weights = ldl
        # slack[k][m] = r * sum_{j=k..m} |coeffs[m][j]|  (range of the free part of s_m)
        slack = [[r * sum(abs(coeffs[m][j]) for j in range(k, m + 1)) if m >= k else 0
                  for m in range(n)] for k in range(n + 1)]
        partial = [0] * n
    values_nonneg = list(range(r, -1, -1))
    values_all = list(range(r, -r - 1, -1))
    counter = [0]

    def bound_ok(k: int) -> bool:
        """Can q vanish with x_0..x_{k-1} fixed and the rest in [-r, r]?"""
        if ldl is not None:
            lo = hi = 0
            for m in range(n):
                c = weights[m]
                if m < k:
                    v = c * partial[m] * partial[m]
                    lo += v
                    hi += v
                    continue
                p = partial[m]
                h = slack[k][m]
                top = (abs(p) + h) ** 2
                bot = 0 if abs(p) <= h else (abs(p) - h) ** 2
                if c > 0:
                    lo += c * bot
                    hi += c * top
                else:
                    lo += c * top
                    hi += c * bot
            return lo <= 0 <= hi
        lo = hi = fixed_value[0]
        for j in range(k, n):
            g = 2 * abs(lin[j]) * r
            lo -= g
            hi += g
            d = Q[j][j] * r * r
            lo += min(d, 0)
            hi += max(d, 0)
            for l in range(j + 1, n):
                o = 2 * abs(Q[j][l]) * r * r
                lo -= o
                hi += o
        return lo <= 0 <= hi

    fixed_value = [0]

    def assign(k: int, v: int) -> None:
        x[k] = v
        if ldl is not None:
            for m in range(k, n):
                partial[m] += coeffs[m][k] * v

    def unassign(k: int, v: int) -> None:
        x[k] = 0
        if ldl is not None:
            for m in range(k, n):
                partial[m] -= coeffs[m][k] * v

    def dfs(k: int, leading_zero: bool, hit_r: bool):
        counter[0] += 1
        if counter[0] & 0x3FF == 0 and time.monotonic() > deadline:
            raise BudgetExhausted(f"time budget exhausted while searching radius {r}", radius=r)
        if k == n - 1:
            return last(leading_zero, hit_r)
        for v in (values_nonneg if leading_zero else values_all):
            assign(k, v)
            fv_saved = fixed_value[0]
            lin_saved = None
            if v:
                fixed_value[0] += 2 * lin[k] * v + Q[k][k] * v * v
                lin_saved = lin[:]
                row = Q[k]
                for j in range(k + 1, n):
                    lin[j] += row[j] * v
            if bound_ok(k + 1):
                found = dfs(k + 1, leading_zero and v == 0, hit_r or abs(v) == r)
                if found is not None:
                    return found
            fixed_value[0] = fv_saved
            if lin_saved is not None:
                lin[:] = lin_saved
            unassign(k, v)
        return None

    def last(leading_zero: bool, hit_r: bool):
        # q = A + B y + C y^2 in the final coordinate y
        k = n - 1
        A = fixed_value[0]
        B = 2 * lin[k]
        C = Q[k][k]
        if C == 0:
            if B == 0:
                cands = list(range(r, -r - 1, -1)) if A == 0 else []
            else:
                cands = [-A // B] if A % B == 0 else []
        else:
            disc = B * B - 4 * A * C
            if disc < 0:
                return None
            s = isqrt(disc)
            if s * s != disc:
                return None
            cands = []
            for num in {-B + s, -B - s}:
                if num % (2 * C) == 0:
                    cands.append(num // (2 * C))
            cands.sort(reverse=True)
        for y in cands:
            if abs(y) > r:
                continue
            if leading_zero and y <= 0:
                continue
            if not hit_r and abs(y) != r:
                continue
            z = tuple(x[:k]) + (y,)
            if _gcd_all(z) == 1:
                return z
        return None

    if n == 1:
        return last(True, False)
    return dfs(0, True, False)


# -- symplectic completion -----------------------------------------------------------

def _solve_unit_dot(u: Sequence[int]) -> list[int]:
    """Integer w with u . w = 1, for u with gcd 1 (extended Euclid over the entries)."""
    g, w = 0, [0] * len(u)
    for i, ui in enumerate(u):
        if ui == 0:
            continue
        g2, s, t = xgcd(g, ui)
        w = [s * x for x in w]
        w[i] = t
        g = g2
        if g == 1:
            break
    if g != 1:
        raise NotPrimitive("z J has entries with a common factor")
    return w


def symplectic_completion(J: IntMatrix, z: Sequence[int]) -> BasisChange:
    """Unimodular P with first row z and P J P^T = J_std (consecutive 2x2 blocks).

    Works one hyperbolic pair at a time: extend e by a dual vector f with
    e J f^T = 1 (extended gcd), then restrict to the integral J-orthogonal
    complement of span(e, f) and repeat with its first basis vector.
    """
    if not J.is_square:
        raise SizeMismatch("intersection form must be square")
    if not J.is_skew():
        raise NotSkew("intersection form must be skew-symmetric")
    n = J.rows
    if n % 2:
        raise SizeMismatch("intersection form must have even dimension")
    z = tuple(int(x) for x in z)
    if len(z) != n:
        raise SizeMismatch(f"vector of length {len(z)} for a {n}x{n} form")
    if not any(z) or not is_primitive(z):
        raise NotPrimitive("z must be a primitive vector")
    d = det(J)
    if d != 1:
        raise NotUnimodular(f"det(J) = {d}, expected 1")
    if pfaffian(J) != 1:
        raise OrientationMismatch(
            "Pf(J) = -1: every symplectic basis has determinant -1; "
            "negate one basis vector of the form first")

    basis = IntMatrix.identity(n)      # current sublattice, rows in original coordinates
    gram = J
    e = z                              # in coordinates of `basis`
    out_rows: list[tuple] = []
    while basis.rows:
        f = tuple(_solve_unit_dot(vec_mat(e, gram)))
        assert bilinear(e, gram, f) == 1
        out_rows.append(vec_mat(e, basis))
        out_rows.append(vec_mat(f, basis))
        if basis.rows == 2:
            break
        ge = vec_mat(e, gram.T)        # G e^T as a row
        gf = vec_mat(f, gram.T)
        A = IntMatrix.from_rows(list(zip(ge, gf)), 2)
        K = left_kernel(A)
        basis = K @ basis
        gram = K @ gram @ K.T
        e = (1,) + (0,) * (basis.rows - 1)
    P = IntMatrix.from_rows(out_rows, n) if n else IntMatrix.zeros(0)
    if P @ J @ P.T != standard_symplectic(n):
        raise AssertionError("symplectic completion failed to normalize the form")
    return BasisChange(P)
