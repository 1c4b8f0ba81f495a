"""Torus knots T(p, q): Seifert matrices and closed-form invariants."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclotomic import _poly_divmod
from .errors import NotCoprime, InputError
from .exactmat import IntMatrix, pfaffian
from .seifert import LaurentPoly, SeifertForm, normalize_alexander


@dataclass(frozen=True)
class TorusKnotParams:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise InputError(f"torus knot parameters must be positive, got ({self.p}, {self.q})")
        if gcd(self.p, self.q) != 1:
            raise NotCoprime(f"gcd({self.p}, {self.q}) = {gcd(self.p, self.q)}")

    @classmethod
    def canonical(cls, p: int, q: int) -> TorusKnotParams:
        return cls(min(p, q), max(p, q))

    @property
    def is_unknot(self) -> bool:
        return self.p == 1 or self.q == 1

    @property
    def genus(self) -> int:
        return (self.p - 1) * (self.q - 1) // 2


def _a_type_form(n: int) -> IntMatrix:
    """(n-1)x(n-1) upper bidiagonal: 1 on the diagonal, -1 just above it."""
    m = n - 1
    return IntMatrix.from_rows(
        [[1 if j == i else -1 if j == i + 1 else 0 for j in range(m)] for i in range(m)], m)


def _kron(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    r, c = A.rows * B.rows, A.cols * B.cols
    return IntMatrix.from_rows(
        [[A[i // B.rows, j // B.cols] * B[i % B.rows, j % B.cols] for j in range(c)]
         for i in range(r)], c)


def torus_seifert_matrix(p: int, q: int) -> SeifertForm:
    """Seifert matrix of the fiber surface of the positive torus knot T(p, q).

    The fiber of x^p + y^q is the join of p and q points, and its Seifert
    form is (minus) the tensor product of the two A-type forms.  The last
    basis vector is negated when needed so that V - V^T has Pfaffian +1,
    i.e. admits a determinant +1 symplectic basis.
    """
    params = TorusKnotParams.canonical(p, q)
    label = f"T({params.p},{params.q})"
    if params.is_unknot:
        warnings.warn(f"{label} is the unknot; returning the empty Seifert form", stacklevel=2)
        return SeifertForm(IntMatrix.zeros(0), label)
    V = -_kron(_a_type_form(params.p), _a_type_form(params.q))
    if pfaffian(V - V.T) < 0:
        n = V.rows
        flip = IntMatrix.diag([1] * (n - 1) + [-1])
        V = flip @ V @ flip
    return SeifertForm(V, label)


def torus_alexander_formula(p: int, q: int) -> LaurentPoly:
    """(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), symmetrized."""
    params = TorusKnotParams.canonical(p, q)
    p, q = params.p, params.q

    def t_minus_one(k):
        return [-1] + [0] * (k - 1) + [1]

    num = _poly_mul(t_minus_one(p * q), t_minus_one(1))
    den = _poly_mul(t_minus_one(p), t_minus_one(q))
    quo, rem = _poly_divmod(num, den)
    assert not any(rem), "torus Alexander quotient is not exact"
    return normalize_alexander(LaurentPoly.from_list(quo))


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def torus_signature_count(p: int, q: int) -> int:
    """Signature of T(p, q) by counting lattice points.

    Each pair 1 <= i < p, 1 <= j < q gives x = i/p + j/q in (0, 2).  Points
    with x in (1/2, 3/2) contribute -1, the rest +1.
    """
    params = TorusKnotParams.canonical(p, q)
    p, q = params.p, params.q
    inner = outer = 0
    for i in range(1, p):
        for j in range(1, q):
            x = Fraction(i, p) + Fraction(j, q)
            if Fraction(1, 2) < x < Fraction(3, 2):
                inner += 1
            else:
                outer += 1
    return outer - inner


def tau_torus(p: int, q: int) -> int:
    """Ozsvath-Szabo tau of the positive torus knot T(p, q), a cited closed form."""
    return TorusKnotParams.canonical(p, q).genus
