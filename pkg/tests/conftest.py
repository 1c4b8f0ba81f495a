import random

import pytest
from hypothesis import strategies as st

from algslice.exactmat import IntMatrix


def elementary_product(n, ops, rng=None):
    """Unimodular matrix built from a list of elementary row operations.

    Each op is (kind, i, j, k): 'add' adds k * row j to row i, 'swap'
    exchanges rows i and j, 'neg' negates row i.
    """
    rows = [[int(a == b) for b in range(n)] for a in range(n)]
    for kind, i, j, k in ops:
        if kind == "add" and i != j:
            rows[i] = [x + k * y for x, y in zip(rows[i], rows[j])]
        elif kind == "swap":
            rows[i], rows[j] = rows[j], rows[i]
        elif kind == "neg":
            rows[i] = [-x for x in rows[i]]
    return IntMatrix.from_rows(rows, n)


@st.composite
def unimodular(draw, n, max_ops=8):
    ops = draw(st.lists(
        st.tuples(st.sampled_from(["add", "add", "add", "swap", "neg"]),
                  st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0)),
                  st.integers(-2, 2)),
        max_size=max_ops))
    return elementary_product(n, ops)


@st.composite
def symmetric_matrices(draw, n, lo=-3, hi=3):
    vals = {}
    for i in range(n):
        for j in range(i, n):
            vals[i, j] = draw(st.integers(lo, hi))
    return IntMatrix.from_rows([[vals[min(i, j), max(i, j)] for j in range(n)] for i in range(n)], n)


@st.composite
def knot_seifert_matrices(draw, max_genus=3):
    """V = A + S with A - A^T = J_std and S symmetric, so det(V - V^T) = 1."""
    from algslice.seifert import SeifertForm
    g = draw(st.integers(1, max_genus))
    n = 2 * g
    S = draw(symmetric_matrices(n, -2, 2))
    A = IntMatrix.from_rows(
        [[1 if (j == i + 1 and i % 2 == 0) else 0 for j in range(n)] for i in range(n)], n)
    return SeifertForm(A + S, "random")


@pytest.fixture
def rng():
    return random.Random(20031)


# -- acceptance summary -----------------------------------------------------------------

_CRITERIA = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    if report.when == "call" or report.outcome != "passed":
        prev = _CRITERIA.get(name)
        if prev is None or prev[0] == "PASS":
            _CRITERIA[name] = ("PASS" if report.outcome == "passed" else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA, key=lambda n: int(n.split("_")[2])):
        status, secs = _CRITERIA[name]
        num, _, rest = name[len("test_criterion_"):].partition("_")
        terminalreporter.write_line(f"{status}  criterion {num}: {rest.replace('_', ' ')}  ({secs:.2f} s)")
