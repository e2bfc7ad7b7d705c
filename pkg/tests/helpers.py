"""Shared fixture loading and random problem generators for the tests."""

from pathlib import Path

from wmpinv import RatFun, RfMatrix
from wmpinv.matrixio import parse_matrix_file
from wmpinv.scalars import Poly

DATA = Path(__file__).parent / "data"


def load(name):
    return parse_matrix_file((DATA / name).read_text())


def rand_poly(rng, max_deg, lo=-3, hi=3):
    return Poly([rng.randint(lo, hi) for _ in range(rng.randint(0, max_deg) + 1)])


def rand_matrix(rng, rows, cols, max_deg=2, lo=-3, hi=3):
    return RfMatrix.from_rows(
        [[RatFun(rand_poly(rng, max_deg, lo, hi)) for _ in range(cols)] for _ in range(rows)]
    )


def rand_weight(rng, k, max_deg=1):
    """Symmetric weight B^T B + I; positive definite at every real point."""
    b = rand_matrix(rng, k, k, max_deg, -2, 2)
    return b.transpose() * b + RfMatrix.identity(k)


def rand_problem_matrix(rng, max_dim=4, max_deg=2):
    """Random input matrix; about a quarter get a zeroed column and a
    quarter a duplicated column, so both recursion branches are hit."""
    m, n = rng.randint(1, max_dim), rng.randint(1, max_dim)
    a = rand_matrix(rng, m, n, max_deg)
    rows = [list(a.row(r)) for r in range(m)]
    if n >= 2 and rng.random() < 0.25:
        c = rng.randrange(n)
        for r in range(m):
            rows[r][c] = RatFun(0)
    if n >= 2 and rng.random() < 0.25:
        c1, c2 = rng.sample(range(n), 2)
        for r in range(m):
            rows[r][c2] = rows[r][c1]
    return RfMatrix.from_rows(rows)


def rand_ratfun(rng, max_deg=3, lo=-5, hi=5):
    num = rand_poly(rng, max_deg, lo, hi)
    den = Poly([])
    while den.is_zero:
        den = rand_poly(rng, max_deg, lo, hi)
    return RatFun(num, den)
