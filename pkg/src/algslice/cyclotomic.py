"""Arithmetic in Z[w] for a primitive root of unity w, and certified signs.

Elements are integer coefficient tuples in the power basis 1, w, ..., w^(d-1)
where d = phi(order).  Reduction is modulo the (monic) cyclotomic polynomial,
so zero-testing is exact.  Only the *sign* of a real element needs numerics;
that goes through mpmath interval arithmetic with precision doubling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import iv

from .errors import UnsupportedOmega

MAX_PRECISION_BITS = 1 << 13


@dataclass(frozen=True)
class RootOfUnity:
    """The point exp(2 pi i * num / den) on the unit circle, num/den reduced into [0, 1)."""

    num: int
    den: int

    def __post_init__(self):
        if self.den <= 0:
            raise ValueError("denominator must be positive")
        f = Fraction(self.num, self.den) % 1
        if (f.numerator, f.denominator) != (self.num, self.den):
            raise ValueError(f"use RootOfUnity.of({self.num}, {self.den}) for unreduced angles")

    @classmethod
    def of(cls, num: int, den: int) -> RootOfUnity:
        f = Fraction(num, den) % 1
        return cls(f.numerator, f.denominator)

    @classmethod
    def parse(cls, text: str | RootOfUnity) -> RootOfUnity:
        """Accept '-1', 'i', '-i', or an angle 'a/b' meaning exp(2 pi i a/b)."""
        if isinstance(text, RootOfUnity):
            return text
        t = str(text).strip().replace(" ", "")
        special = {"-1": (1, 2), "i": (1, 4), "+i": (1, 4), "-i": (3, 4), "1": (0, 1)}
        if t in special:
            return cls.of(*special[t])
        f = Fraction(t)
        return cls.of(f.numerator, f.denominator)

    @property
    def order(self) -> int:
        return self.den

    def __str__(self) -> str:
        names = {(1, 2): "-1", (1, 4): "i", (3, 4): "-i", (0, 1): "1"}
        return names.get((self.num, self.den), f"exp(2*pi*i*{self.num}/{self.den})")


def _poly_divmod(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Division by a monic integer polynomial; coefficients low degree first."""
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1]
        if c:
            q[k] = c
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    r = a[:len(b) - 1]
    return q, r


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, low degree first."""
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p, r = _poly_divmod(p, list(cyclotomic_poly(d)))
            assert not any(r)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


class CyclotomicRing:
    """Z[w] / Phi_n(w) with w = exp(2 pi i k / n), gcd(k, n) = 1."""

    def __init__(self, omega: RootOfUnity):
        if omega.den == 1:
            raise ValueError("omega = 1 is excluded")
        self.omega = omega
        self.n = omega.den
        self.phi = cyclotomic_poly(self.n)
        self.d = len(self.phi) - 1

    def const(self, c: int) -> tuple:
        return (c,) + (0,) * (self.d - 1)

    def power(self, k: int) -> tuple:
        k %= self.n
        v = [0] * max(k + 1, self.d)
        v[k] = 1
        return self.reduce(v)

    def reduce(self, v) -> tuple:
        v = list(v)
        d, phi = self.d, self.phi
        for k in range(len(v) - 1, d - 1, -1):
            c = v[k]
            if c:
                # w^k = w^(k-d) * (w^d) and w^d = -sum(phi[j] w^j)
                for j in range(d):
                    v[k - d + j] -= c * phi[j]
                v[k] = 0
        v = v[:d]
        v += [0] * (d - len(v))
        return tuple(v)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def mul(self, a, b):
        if not any(a) or not any(b):
            return (0,) * self.d
        out = [0] * (2 * self.d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return self.reduce(out)

    def scale(self, a, k: int):
        return tuple(k * x for x in a)

    def exact_div(self, a, k: int):
        assert all(x % k == 0 for x in a), "inexact division in Z[w]"
        return tuple(x // k for x in a)

    def real_sign(self, a) -> int:
        """Certified sign of a real element (0 is decided exactly)."""
        if not any(a):
            return 0
        saved = iv.prec
        prec = 64
        try:
            while prec <= MAX_PRECISION_BITS:
                iv.prec = prec
                turn = 2 * iv.pi * iv.mpf(self.omega.num) / self.omega.den
                re = iv.mpf(0)
                im = iv.mpf(0)
                for j, c in enumerate(a):
                    if c:
                        re += c * iv.cos(turn * j)
                        im += c * iv.sin(turn * j)
                if not (im.a <= 0 <= im.b):
                    raise ValueError("element is not real")
                if re.a > 0:
                    return 1
                if re.b < 0:
                    return -1
                prec *= 2
        finally:
            iv.prec = saved
        raise UnsupportedOmega(
            f"could not certify a sign at {MAX_PRECISION_BITS} bits of precision")


def charpoly(ring: CyclotomicRing, a: list[list[tuple]]) -> list[tuple]:
    """Characteristic polynomial det(xI - A) by Faddeev-LeVerrier.

    Returns coefficients low degree first.  The divisions by k are exact
    because the coefficients are algebraic integers in Z[w].
    """
    n = len(a)
    zero = ring.const(0)
    coeffs = [zero] * n + [ring.const(1)]
    m = [[zero] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        am = [[zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                acc = zero
                for l in range(n):
                    if any(a[i][l]) and any(m[l][j]):
                        acc = ring.add(acc, ring.mul(a[i][l], m[l][j]))
                am[i][j] = acc
        c_prev = coeffs[n - k + 1]
        for i in range(n):
            am[i][i] = ring.add(am[i][i], c_prev)
        m = am
        # c_{n-k} = -tr(A M_k) / k
        tr = zero
        for i in range(n):
            for l in range(n):
                if any(a[i][l]) and any(m[l][i]):
                    tr = ring.add(tr, ring.mul(a[i][l], m[l][i]))
        coeffs[n - k] = ring.exact_div(ring.scale(tr, -1), k)
    return coeffs


def real_rooted_inertia(signs: list[int]) -> tuple[int, int, int]:
    """Root counts (positive, negative, zero) of a real-rooted polynomial.

    ``signs`` are the coefficient signs, low degree first.  Descartes' rule is
    exact when every root is real.
    """
    n_zero = next(k for k, s in enumerate(signs) if s != 0)
    rest = signs[n_zero:]

    def changes(seq):
        seq = [s for s in seq if s]
        return sum(1 for x, y in zip(seq, seq[1:]) if x != y)

    n_plus = changes(rest)
    n_minus = changes([s * (-1) ** k for k, s in enumerate(rest)])
    return n_plus, n_minus, n_zero

