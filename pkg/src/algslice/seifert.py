"""Seifert forms and their algebraic concordance invariants.

Conventions: the symmetrization is the integral form V + V^T, the
intersection form is V - V^T, and the concordance inverse of V is -V (so the
diagonal metabolizes V + (-V)).  Positive torus knots come out with negative
signature.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from . import cyclotomic
from .cyclotomic import RootOfUnity
from .errors import (NotUnimodular, NotUnimodularIntersection, OddDimension, SingularAtOmega,
                     SizeMismatch, UnsupportedOmega, NonSquare)
from .exactmat import IntMatrix, block_diag, det, hermitian_inertia, inertia
from .qform import BasisChange, QuadForm


@dataclass(frozen=True)
class SeifertForm:
    matrix: IntMatrix
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.matrix.is_square:
            raise NonSquare(f"Seifert matrix must be square, got {self.matrix.shape}")

    @classmethod
    def from_rows(cls, rows, label: str = "") -> SeifertForm:
        rows = [list(r) for r in rows]
        return cls(IntMatrix.from_rows(rows, len(rows)), label)

    @property
    def dim(self) -> int:
        return self.matrix.rows


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial, stored as sorted (exponent, coefficient) pairs."""

    terms: tuple = ()

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> LaurentPoly:
        return cls(tuple(sorted((e, c) for e, c in coeffs.items() if c)))

    @classmethod
    def from_list(cls, coeffs, low: int = 0) -> LaurentPoly:
        return cls.from_dict({low + k: c for k, c in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def low(self) -> int:
        return self.terms[0][0]

    @property
    def high(self) -> int:
        return self.terms[-1][0]

    @property
    def breadth(self) -> int:
        return self.high - self.low if self.terms else 0

    def __call__(self, t):
        return sum(c * t ** e for e, c in self.terms)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        out: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def shift(self, k: int) -> LaurentPoly:
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms))

    def is_symmetric(self) -> bool:
        d = self.coeffs
        return all(d.get(-e, 0) == c for e, c in d.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms, reverse=True):
            mag = abs(c)
            if e == 0:
                mono = str(mag)
            else:
                mono = ("" if mag == 1 else f"{mag}*") + ("t" if e == 1 else f"t^{e}")
            parts.append(("-" if c < 0 else "+", mono))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, mono in parts[1:]:
            s += f" {sign} {mono}"
        return s


def normalize_alexander(p: LaurentPoly) -> LaurentPoly:
    """Multiply by +-t^k so the result is centred at degree 0 with value 1 at t = 1."""
    if p.is_zero():
        return p
    if (p.low + p.high) % 2 == 0:
        p = p.shift(-(p.low + p.high) // 2)
    else:
        p = p.shift(-p.low)
    v = p(1)
    if v < 0 or (v == 0 and p.terms[-1][1] < 0):
        p = -p
    return p


def _interpolate(values: list[int]) -> list[int]:
    """Integer coefficients of the polynomial taking values[k] at t = k."""
    n = len(values)
    # Newton divided differences on nodes 0..n-1
    dd = [Fraction(v) for v in values]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / j
    coeffs = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        # coeffs <- coeffs * (t - k) + dd[k]
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [s - k * c for s, c in zip(shifted, coeffs)]
        coeffs[0] += dd[k]
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


# -- operations ---------------------------------------------------------------

def symmetrize(V: SeifertForm) -> QuadForm:
    return QuadForm(V.matrix + V.matrix.T)


def intersection_form(V: SeifertForm) -> IntMatrix:
    J = V.matrix - V.matrix.T
    d = det(J)
    if abs(d) != 1:
        raise NotUnimodularIntersection(
            f"det(V - V^T) = {d}; not the Seifert matrix of a knot")
    return J


def alexander_polynomial(V: SeifertForm) -> LaurentPoly:
    """Normalized Alexander polynomial from det(tV - V^T)."""
    n = V.dim
    if n == 0:
        return LaurentPoly.from_dict({0: 1})
    M, Mt = V.matrix, V.matrix.T
    values = [det(M.scale(t) - Mt) for t in range(n + 1)]
    return normalize_alexander(LaurentPoly.from_list(_interpolate(values)))


def knot_signature(V: SeifertForm) -> int:
    return inertia(symmetrize(V).matrix).signature


class GaussianRational:
    """a + b i with rational a, b; just enough field arithmetic for elimination."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __eq__(self, other):
        if not isinstance(other, GaussianRational):
            other = GaussianRational(other)
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, o):
        return GaussianRational(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __mul__(self, o):
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __truediv__(self, o):
        n = o.re * o.re + o.im * o.im
        return GaussianRational((self.re * o.re + self.im * o.im) / n,
                                (self.im * o.re - self.re * o.im) / n)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        return f"({self.re}+{self.im}i)"


def _real_sign_gaussian(x: GaussianRational) -> int:
    assert x.im == 0, "Hermitian pivot must be real"
    return (x.re > 0) - (x.re < 0)


def _tristram_levine_gaussian(V: SeifertForm, omega_im: int):
    # (1 - w) V + (1 - conj w) V^T with w = +-i
    one_minus_w = GaussianRational(1, -omega_im)
    one_minus_wbar = GaussianRational(1, omega_im)
    n = V.dim
    m = V.matrix
    h = [[one_minus_w * GaussianRational(m[i, j]) + one_minus_wbar * GaussianRational(m[j, i])
          for j in range(n)] for i in range(n)]
    return hermitian_inertia(h, conj=GaussianRational.conjugate, real_sign=_real_sign_gaussian)


def _tristram_levine_cyclotomic(V: SeifertForm, omega: RootOfUnity):
    """Inertia of the Hermitian matrix via its characteristic polynomial over Z[w].

    Coefficients are exact; their signs are certified numerically; the root
    counts follow from Descartes' rule, which is exact for real-rooted
    polynomials.
    """
    ring = cyclotomic.CyclotomicRing(omega)
    one = ring.const(1)
    a = ring.sub(one, ring.power(1))
    abar = ring.sub(one, ring.power(-1))
    n = V.dim
    m = V.matrix
    h = [[ring.add(ring.scale(a, m[i, j]), ring.scale(abar, m[j, i])) for j in range(n)]
         for i in range(n)]
    coeffs = cyclotomic.charpoly(ring, h)
    signs = [ring.real_sign(c) for c in coeffs]
    return cyclotomic.real_rooted_inertia(signs)


def tristram_levine(V: SeifertForm, omega) -> int:
    """Signature of (1 - w) V + (1 - conj w) V^T at a root of unity w.

    ``omega`` is a :class:`RootOfUnity` or a string '-1', 'i', '-i', 'a/b'.
    Exact elimination at -1 and +-i; elsewhere exact cyclotomic arithmetic
    with interval-certified signs.
    """
    w = RootOfUnity.parse(omega)
    if w.den == 1:
        raise UnsupportedOmega("omega = 1 is excluded (the form vanishes identically)")
    if V.dim == 0:
        return 0
    if w.den == 2:
        # (1 - w) = 2, so the matrix is 2 (V + V^T)
        n_plus, n_minus, n_zero = inertia(symmetrize(V).matrix)
    elif w.den == 4:
        n_plus, n_minus, n_zero = _tristram_levine_gaussian(V, 1 if w.num == 1 else -1)
    else:
        n_plus, n_minus, n_zero = _tristram_levine_cyclotomic(V, w)
    if n_zero:
        raise SingularAtOmega(f"form is singular at omega = {w} (a root of the Alexander polynomial)")
    return n_plus - n_minus


def arf_invariant(V: SeifertForm) -> int:
    """Arf invariant by Murasugi's criterion on Delta(-1) mod 8."""
    d = alexander_polynomial(V)(-1)
    return 0 if d % 8 in (1, 7) else 1


def genus(V: SeifertForm) -> int:
    if V.dim % 2:
        raise OddDimension(f"Seifert matrix has odd dimension {V.dim}")
    return V.dim // 2


def connected_sum(V1: SeifertForm, V2: SeifertForm) -> SeifertForm:
    label = f"{V1.label} # {V2.label}" if V1.label or V2.label else ""
    return SeifertForm(block_diag(V1.matrix, V2.matrix), label)


def concordance_inverse(V: SeifertForm) -> SeifertForm:
    return SeifertForm(-V.matrix, f"-({V.label})" if V.label else "")


def congruence_transform(V: SeifertForm, P: BasisChange | IntMatrix) -> SeifertForm:
    """P V P^T for a unimodular change of basis P."""
    M = P.matrix if isinstance(P, BasisChange) else P
    if M.shape != V.matrix.shape:
        raise SizeMismatch(f"basis change {M.shape} vs form {V.matrix.shape}")
    if abs(det(M)) != 1:
        raise NotUnimodular("basis change must be unimodular")
    return SeifertForm(M @ V.matrix @ M.T, V.label)
