import itertools
from math import gcd

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from algslice.errors import NonSquare, NotSymmetric, NotUnimodular, ZeroVector
from algslice.exactmat import (IntMatrix, block_diag, det, inertia, inverse_unimodular,
                               is_primitive, left_kernel, pfaffian, rank, smith_invariants)
from algslice.torus import torus_seifert_matrix

from conftest import elementary_product, symmetric_matrices, unimodular


def leibniz_det(M):
    n = M.rows
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        prod = 1
        for i, j in enumerate(perm):
            prod *= M[i, j]
        total += (-1) ** inv * prod
    return total


def pfaffian_expansion(A):
    rows = A.to_lists()

    def rec(idx):
        if not idx:
            return 1
        i, rest = idx[0], idx[1:]
        return sum((-1) ** k * rows[i][j] * rec([x for x in rest if x != j])
                   for k, j in enumerate(rest))

    return rec(list(range(A.rows)))


def square_matrices(n, lo=-4, hi=4):
    return st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                    min_size=n, max_size=n).map(lambda r: IntMatrix.from_rows(r, n))


# -- det --------------------------------------------------------------------------

def test_det_identity():
    assert det(IntMatrix.identity(3)) == 1


def test_det_symplectic_block():
    assert det(IntMatrix.from_rows([[0, 1], [-1, 0]])) == 1


def test_det_empty_is_one():
    assert det(IntMatrix.zeros(0)) == 1


def test_det_torus_intersection_form():
    V = torus_seifert_matrix(4, 5).matrix
    J = V - V.T
    assert det(J) == sympy.Matrix(J.to_lists()).det() == 1


def test_det_nonsquare():
    with pytest.raises(NonSquare):
        det(IntMatrix.zeros(2, 3))


@given(st.integers(1, 5).flatmap(square_matrices))
def test_det_matches_leibniz(M):
    assert det(M) == leibniz_det(M)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square_matrices(n), square_matrices(n))))
def test_det_multiplicative(pair):
    A, B = pair
    assert det(A @ B) == det(A) * det(B)


def test_det_large_entries_exact():
    big = 10 ** 40
    M = IntMatrix.from_rows([[big, 1], [1, big]])
    assert det(M) == big * big - 1


# -- inverse -------------------------------------------------------------------------

def test_inverse_identity():
    assert inverse_unimodular(IntMatrix.identity(4)) == IntMatrix.identity(4)


def test_inverse_shear():
    M = IntMatrix.from_rows([[1, 1], [0, 1]])
    assert inverse_unimodular(M) == IntMatrix.from_rows([[1, -1], [0, 1]])


def test_inverse_random_elementary_product(rng):
    n = 5
    ops = [(rng.choice(["add", "add", "swap", "neg"]), rng.randrange(n), rng.randrange(n),
            rng.randint(-3, 3)) for _ in range(25)]
    E = elementary_product(n, ops)
    N = inverse_unimodular(E)
    assert E @ N == IntMatrix.identity(n) == N @ E


def test_inverse_rejects_non_unimodular():
    with pytest.raises(NotUnimodular):
        inverse_unimodular(IntMatrix.diag([2, 1]))


@given(st.integers(1, 6).flatmap(unimodular))
def test_det_of_inverse(E):
    assert det(E) * det(inverse_unimodular(E)) == 1


# -- inertia ------------------------------------------------------------------------

def test_inertia_diagonal():
    assert inertia(IntMatrix.diag([1, 1, -1])) == (2, 1, 0)


def test_inertia_hyperbolic_plane():
    assert inertia(IntMatrix.from_rows([[0, 1], [1, 0]])) == (1, 1, 0)


def test_inertia_empty():
    assert inertia(IntMatrix.zeros(0)) == (0, 0, 0)


def test_inertia_torus_4_5():
    V = torus_seifert_matrix(4, 5).matrix
    tri = inertia(V + V.T)
    assert abs(tri.signature) == 8 and tri.n_zero == 0


def test_inertia_rejects_nonsymmetric():
    with pytest.raises(NotSymmetric):
        inertia(IntMatrix.from_rows([[0, 1], [0, 0]]))


def test_inertia_zero_diagonal_with_degenerate_part():
    # hyperbolic block plus a null direction
    S = IntMatrix.from_rows([[0, 2, 0], [2, 0, 0], [0, 0, 0]])
    assert inertia(S) == (1, 1, 1)


def _eigen_oracle(S):
    """Inertia from sympy's exact characteristic polynomial (Descartes on a real-rooted polynomial)."""
    x = sympy.Symbol("x")
    p = sympy.Poly(sympy.Matrix(S.to_lists()).charpoly(x).as_expr(), x)
    n_zero = 0
    while p.eval(0) == 0 and p.degree() > 0:
        p = sympy.Poly(sympy.cancel(p.as_expr() / x), x)
        n_zero += 1
    coeffs = [c for c in p.all_coeffs() if c != 0]
    plus = sum(1 for a, b in zip(coeffs, coeffs[1:]) if (a > 0) != (b > 0))
    return plus, p.degree() - plus, n_zero


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(symmetric_matrices))
def test_inertia_matches_charpoly(S):
    assert tuple(inertia(S)) == _eigen_oracle(S)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(symmetric_matrices(n), unimodular(n))))
def test_sylvester_law(pair):
    S, P = pair
    assert inertia(P @ S @ P.T) == inertia(S)


@given(st.integers(0, 6).flatmap(symmetric_matrices))
def test_inertia_sums_to_dimension(S):
    assert inertia(S).dimension == S.rows


# -- primitivity, pfaffian, smith -------------------------------------------------------

@pytest.mark.parametrize("z, expected", [((1, 0, 0), True), ((2, 4, 6), False), ((3, 5), True)])
def test_is_primitive(z, expected):
    assert is_primitive(z) is expected


def test_is_primitive_zero():
    with pytest.raises(ZeroVector):
        is_primitive((0, 0))


@given(st.integers(1, 3).flatmap(lambda g: st.lists(
    st.integers(-3, 3), min_size=g * (2 * g - 1), max_size=g * (2 * g - 1))))
def test_pfaffian_matches_expansion(upper):
    m = 1
    while m * (m - 1) // 2 != len(upper):
        m += 1
    rows = [[0] * m for _ in range(m)]
    it = iter(upper)
    for i in range(m):
        for j in range(i + 1, m):
            rows[i][j] = next(it)
            rows[j][i] = -rows[i][j]
    A = IntMatrix.from_rows(rows, m)
    pf = pfaffian(A)
    assert pf == pfaffian_expansion(A)
    assert pf * pf == det(A)


def determinantal_divisors(M):
    """Smith invariants via gcds of k x k minors (small matrices only)."""
    out = []
    prev = 1
    for k in range(1, min(M.rows, M.cols) + 1):
        g = 0
        for rs in itertools.combinations(range(M.rows), k):
            for cs in itertools.combinations(range(M.cols), k):
                g = gcd(g, leibniz_det(IntMatrix.from_rows([[M[r, c] for c in cs] for r in rs], k)))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 3), st.integers(1, 4), st.data())
def test_smith_matches_minors(r, c, data):
    rows = data.draw(st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c),
                              min_size=r, max_size=r))
    M = IntMatrix.from_rows(rows, c)
    inv = smith_invariants(M)
    assert inv == determinantal_divisors(M)
    assert len(inv) == rank(M)


def test_smith_examples():
    assert smith_invariants(IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])) == [2, 6, 12]
    assert smith_invariants(IntMatrix.from_rows([[1, 0, 1, 0], [0, 1, 0, 1]])) == [1, 1]


def test_left_kernel():
    A = IntMatrix.from_rows([[1, 2], [3, 4], [5, 6], [0, 1]])
    K = left_kernel(A)
    assert K.rows == 2
    assert (K @ A).is_zero()
    # primitive: the kernel rows form a direct summand
    assert smith_invariants(K) == [1, 1]


def test_block_diag_and_matmul_shapes():
    A = IntMatrix.from_rows([[1, 2]])
    B = IntMatrix.identity(2)
    D = block_diag(A, B)
    assert D.shape == (3, 4)
    assert (A @ B) == A
    assert det(block_diag(B, B)) == 1
