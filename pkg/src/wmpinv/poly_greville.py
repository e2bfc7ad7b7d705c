"""Column-partitioning pseudoinverse at the coefficient level.

Instead of rational-function entries, every quantity is carried as a
polynomial coefficient sequence: a matrix polynomial is a list of constant
matrices (index j holds the coefficient of s**j), and each stage's
pseudoinverse is one matrix-polynomial numerator over one scalar
polynomial denominator.  Every formula of the rational path then turns
into Cauchy products (convolutions) of coefficient sequences.

The degree of every computed sequence is bounded a priori by the degrees
of its inputs; those capacities are asserted before trailing zeros are
trimmed, so an index slip in any convolution fails loudly.  After each
stage the numerator/denominator pair is reduced (common polynomial factor
and integer content divided out), which is what keeps the capacities from
growing multiplicatively.

Zero-length sequences represent zero throughout; when two sequences of
different lengths are combined the shorter is implicitly padded with
zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateWeightError, PoleError, SingularMatrixError
from .matrices import RfMatrix
from .scalars import ONE_POLY, Poly, RatFun, joint_reduce

# ---------------------------------------------------------------------------
# constant matrices as tuples of tuples of exact numbers


def _mzero(rows, cols):
    return tuple((0,) * cols for _ in range(rows))


def _mis0(a):
    return all(not x for row in a for x in row)


def _madd(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _msub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _mneg(a):
    return tuple(tuple(-x for x in row) for row in a)


def _mscale(a, c):
    return tuple(tuple(c * x for x in row) for row in a)


def _mmul(a, b):
    cols = range(len(b[0]))
    return tuple(
        tuple(sum(ra[t] * b[t][c] for t in range(len(b))) for c in cols) for ra in a
    )


def _mT(a):
    return tuple(zip(*a)) if a else ()


# ---------------------------------------------------------------------------
# coefficient sequences (scalar: numbers; matrix: constant matrices)


def _strim(seq):
    n = len(seq)
    while n and not seq[n - 1]:
        n -= 1
    return list(seq[:n])


def _mtrim(seq):
    n = len(seq)
    while n and _mis0(seq[n - 1]):
        n -= 1
    return list(seq[:n])


def _sconv(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return out


def _sadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for j, c in enumerate(b):
        out[j] += c
    return out


def _ssub(a, b):
    out = list(a) + [0] * max(len(b) - len(a), 0)
    for j, c in enumerate(b):
        out[j] -= c
    return out


def _mmconv(a, b):
    """Cauchy product of two matrix coefficient sequences (matrix product
    per term)."""
    if not a or not b:
        return []
    out = [None] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            p = _mmul(ai, bj)
            out[i + j] = p if out[i + j] is None else _madd(out[i + j], p)
    return out


def _smconv(s, m):
    """Cauchy product of a scalar sequence with a matrix sequence."""
    if not s or not m:
        return []
    out = [None] * (len(s) + len(m) - 1)
    for i, si in enumerate(s):
        for j, mj in enumerate(m):
            p = _mscale(mj, si)
            out[i + j] = p if out[i + j] is None else _madd(out[i + j], p)
    return out


def _mseq_sub(a, b, rows, cols):
    n = max(len(a), len(b))
    zero = _mzero(rows, cols)
    out = []
    for j in range(n):
        x = a[j] if j < len(a) else zero
        y = b[j] if j < len(b) else zero
        out.append(_msub(x, y))
    return out


def _mseq_add(a, b, rows, cols):
    n = max(len(a), len(b))
    zero = _mzero(rows, cols)
    out = []
    for j in range(n):
        x = a[j] if j < len(a) else zero
        y = b[j] if j < len(b) else zero
        out.append(_madd(x, y))
    return out


def _unwrap(seq):
    """Scalar sequence from a sequence of 1x1 matrices."""
    return [m[0][0] for m in seq]


def _check_cap(seq, cap, label):
    # pre-trim length must fit the formula's degree bound
    assert len(seq) <= cap + 1 or not seq, (
        f"{label}: coefficient sequence of length {len(seq)} exceeds "
        f"its degree capacity {cap}"
    )


# ---------------------------------------------------------------------------
# matrix polynomials and matrix/scalar polynomial fractions


def _coerce_num(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    raise TypeError(f"exact coefficient expected, got {type(x).__name__}")


def _coerce_const(m, rows, cols):
    grid = tuple(tuple(_coerce_num(x) for x in row) for row in m)
    if len(grid) != rows or any(len(row) != cols for row in grid):
        raise ValueError(f"coefficient matrix is not {rows}x{cols}")
    return grid


class PolyMatrix:
    """Matrix polynomial as a sequence of constant coefficient matrices.

    ``coeffs[j]`` is the coefficient matrix of s**j; trailing all-zero
    coefficient matrices are trimmed, so the zero matrix has no
    coefficients at all.
    """

    __slots__ = ("rows", "cols", "coeffs")

    def __init__(self, rows, cols, coeffs=()):
        self.rows = rows
        self.cols = cols
        self.coeffs = tuple(_mtrim([_coerce_const(m, rows, cols) for m in coeffs]))

    @classmethod
    def from_rf_matrix(cls, a):
        """Coefficient form of a matrix with polynomial entries.

        Entries with a nontrivial denominator are rejected, naming the
        1-based entry.
        """
        deg = -1
        for r in range(a.rows):
            for c in range(a.cols):
                f = a[r, c]
                if f.den != ONE_POLY:
                    raise ValueError(
                        f"entry ({r + 1}, {c + 1}) is not a polynomial: {f}"
                    )
                deg = max(deg, f.num.degree)
        coeffs = [
            [[a[r, c].num[j] for c in range(a.cols)] for r in range(a.rows)]
            for j in range(deg + 1)
        ]
        return cls(a.rows, a.cols, coeffs)

    @classmethod
    def from_entries(cls, grid):
        """From a grid of polynomials (or exact scalars)."""
        polys = []
        for row in grid:
            wanted = []
            for x in row:
                p = Poly._want(x)
                if p is None:
                    raise TypeError(f"polynomial entry expected, got {type(x).__name__}")
                wanted.append(p)
            polys.append(wanted)
        rows = len(polys)
        cols = len(polys[0]) if rows else 0
        deg = max((p.degree for row in polys for p in row), default=-1)
        coeffs = [
            [[polys[r][c][j] for c in range(cols)] for r in range(rows)]
            for j in range(deg + 1)
        ]
        return cls(rows, cols, coeffs)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [tuple(tuple(int(i == j) for j in range(n)) for i in range(n))])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    def coeff(self, j):
        return self.coeffs[j] if j < len(self.coeffs) else _mzero(self.rows, self.cols)

    def entry_poly(self, r, c):
        return Poly([m[r][c] for m in self.coeffs])

    def column(self, i):
        if not 1 <= i <= self.cols:
            raise IndexError(f"column index {i} out of range 1..{self.cols}")
        c = i - 1
        return PolyMatrix(
            self.rows, 1, [tuple((row[c],) for row in m) for m in self.coeffs]
        )

    def leading_columns(self, i):
        if not 1 <= i <= self.cols:
            raise IndexError(f"column count {i} out of range 1..{self.cols}")
        return PolyMatrix(
            self.rows, i, [tuple(row[:i] for row in m) for m in self.coeffs]
        )

    def leading_block(self, i):
        return PolyMatrix(i, i, [tuple(row[:i] for row in m[:i]) for m in self.coeffs])

    def partition_coeffs(self, i):
        """Pieces of the leading i x i block: previous block, coupling
        column, corner scalar coefficient sequence (i is 1-based)."""
        if self.rows != self.cols:
            raise ValueError("principal partition of a non-square matrix")
        if not 2 <= i <= self.rows:
            raise IndexError(f"partition index {i} out of range 2..{self.rows}")
        prev = self.leading_block(i - 1)
        border = PolyMatrix(
            i - 1, 1, [tuple((m[r][i - 1],) for r in range(i - 1)) for m in self.coeffs]
        )
        corner = _strim([m[i - 1][i - 1] for m in self.coeffs])
        return prev, border, corner

    def transpose(self):
        return PolyMatrix(self.cols, self.rows, [_mT(m) for m in self.coeffs])

    @property
    def is_symmetric(self):
        return self.rows == self.cols and all(m == _mT(m) for m in self.coeffs)

    def to_rf_matrix(self):
        return RfMatrix(
            self.rows,
            self.cols,
            [
                RatFun(self.entry_poly(r, c))
                for r in range(self.rows)
                for c in range(self.cols)
            ],
        )

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.coeffs))

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols}, degree {self.degree})"


def fraction_simplify(num, den):
    """Reduce a matrix-polynomial numerator over a scalar denominator.

    The gcd of the denominator and every numerator entry is divided out,
    then coefficients are cleared to integers with joint content 1 and a
    positive leading denominator coefficient.  The value is unchanged;
    applying it twice changes nothing.  Returns (PolyMatrix, tuple).
    """
    den_poly = den if isinstance(den, Poly) else Poly(den)
    if den_poly.is_zero:
        raise ZeroDivisionError("zero scalar denominator")
    if num.is_zero:
        return PolyMatrix(num.rows, num.cols), (1,)
    entries = [
        num.entry_poly(r, c) for r in range(num.rows) for c in range(num.cols)
    ]
    reduced, new_den = joint_reduce(entries, den_poly)
    deg = max(p.degree for p in reduced)
    coeffs = [
        [
            [reduced[r * num.cols + c][j] for c in range(num.cols)]
            for r in range(num.rows)
        ]
        for j in range(deg + 1)
    ]
    return PolyMatrix(num.rows, num.cols, coeffs), tuple(new_den.coeffs)


class MatrixPolyFraction:
    """A rational matrix as one matrix-polynomial numerator over one scalar
    polynomial denominator, in reduced canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num, self.den = fraction_simplify(num, den)

    @property
    def den_poly(self):
        return Poly(self.den)

    def to_rf_matrix(self):
        den = self.den_poly
        return RfMatrix(
            self.num.rows,
            self.num.cols,
            [
                RatFun(self.num.entry_poly(r, c), den)
                for r in range(self.num.rows)
                for c in range(self.num.cols)
            ],
        )

    def eval_at(self, x):
        x = Fraction(x)
        d = self.den_poly(x)
        if not d:
            raise PoleError(f"pole at s = {x} in the common denominator")
        return tuple(
            tuple(
                self.num.entry_poly(r, c)(x) / d for c in range(self.num.cols)
            )
            for r in range(self.num.rows)
        )

    def __eq__(self, other):
        if not isinstance(other, MatrixPolyFraction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __repr__(self):
        return f"MatrixPolyFraction({self.num!r} / {list(self.den)!r})"


# ---------------------------------------------------------------------------
# stage state


@dataclass
class PolyPartitionState:
    """Coefficient-path state after a stage, plus the stage-local sequences
    recorded while the next stage is being built.

    ``num``/``den`` hold the pseudoinverse of the leading columns processed
    so far; ``ninv`` the inverse of the matching leading block of the
    column weight.  ``q``, ``m_deg``, ``n_deg`` are the input degrees fixed
    for the whole run; the remaining capacities derive from the current
    (reduced) representations.
    """

    i: int
    num: PolyMatrix
    den: tuple
    ninv: MatrixPolyFraction | None
    q: int
    m_deg: int
    n_deg: int
    proj: list = None          # coordinates of the new column (numerator)
    resid: list = None         # residual column (numerator)
    coupling_num: list = None  # weight-coupling column numerator
    coupling_den: list = None  # ... and its scalar denominator
    row_num: list = None       # new bottom row numerator
    row_den: list = None       # ... and its scalar denominator
    schur_num: list = None     # dependent-branch factor numerator
    schur_den: list = None     # ... denominator
    # the stage sequences above describe how THIS stage was produced from
    # the previous one (all None at stage 1)

    @property
    def q_prev(self):
        return self.num.degree

    @property
    def p_prev(self):
        return len(self.den) - 1

    @property
    def q_hat(self):
        return max(self.p_prev, self.q_prev + self.q)

    @property
    def nbar_deg(self):
        return self.ninv.num.degree

    @property
    def ndd_deg(self):
        return len(self.ninv.den) - 1


# ---------------------------------------------------------------------------
# stage formulas


def init_fraction(col, m_weight):
    """Numerator/denominator coefficients of the single-column pseudoinverse.

    The zero column yields (zero, 1).  The pair is returned unreduced; the
    driver reduces it.
    """
    if col.is_zero:
        return PolyMatrix(1, col.rows), (1,)
    q, m_deg = col.degree, m_weight.degree
    colT = [_mT(m) for m in col.coeffs]
    z = _mmconv(colT, m_weight.coeffs)
    _check_cap(z, q + m_deg, "single-column numerator")
    y = _unwrap(_mmconv(z, col.coeffs))
    _check_cap(y, 2 * q + m_deg, "single-column denominator")
    return PolyMatrix(1, col.rows, _mtrim(z)), tuple(_strim(y))


def step_projection(state, col):
    """Numerator coefficients of the new column's coordinates in the old
    columns (shares the previous stage's denominator)."""
    out = _mmconv(state.num.coeffs, col.coeffs)
    _check_cap(out, state.q_prev + state.q, "projection")
    return _mtrim(out)


def step_residual(state, col, prefix):
    """Numerator coefficients of the residual column (over the previous
    denominator); an empty result selects the dependent-column branch."""
    t1 = _smconv(state.den, col.coeffs)
    t2 = _mmconv(prefix.coeffs, state.proj)
    out = _mseq_sub(t1, t2, col.rows, 1)
    _check_cap(out, state.q_hat + state.q, "residual")
    return _mtrim(out)


def step_coupling(state, prefix, border):
    """The weight-coupling column (old-span complement applied to the
    weight-inverse image of the coupling column) as a numerator sequence
    over its own scalar denominator."""
    k = state.i  # previous stage size
    eye = PolyMatrix.identity(k)
    y_eye = _smconv(state.den, eye.coeffs)
    za = _mmconv(state.num.coeffs, prefix.coeffs)
    u = _mseq_sub(y_eye, za, k, k)
    _check_cap(u, state.q_hat, "span complement numerator")
    t = _mmconv(state.ninv.num.coeffs, border.coeffs)
    _check_cap(t, state.nbar_deg + state.n_deg, "weighted coupling column")
    phi = _mmconv(u, t)
    _check_cap(
        phi, state.q_hat + state.nbar_deg + state.n_deg, "coupling numerator"
    )
    psi = _sconv(state.den, state.ninv.den)
    _check_cap(psi, state.p_prev + state.ndd_deg, "coupling denominator")
    return _mtrim(phi), _strim(psi)


def step_bottom_row(state, m_weight, nprev, border, corner):
    """Numerator/denominator coefficients of the stage's new bottom row.

    Independent branch: the weighted residual form.  Dependent branch: the
    weighted Schur factor's fraction is built first (recorded on the
    state) and applied to the previous pseudoinverse.
    """
    i = state.i + 1
    if state.resid:
        residT = [_mT(m) for m in state.resid]
        cm = _mmconv(residT, m_weight.coeffs)
        v = _smconv(state.den, cm)
        _check_cap(
            v,
            state.q_hat + state.q + state.p_prev + state.m_deg,
            "bottom row numerator (independent)",
        )
        w = _unwrap(_mmconv(cm, state.resid))
        _check_cap(
            w,
            2 * (state.q_hat + state.q) + state.m_deg,
            "bottom row denominator (independent)",
        )
        w = _strim(w)
        if not w:
            raise DegenerateWeightError(
                "weighted squared length of a nonzero residual is identically zero",
                stage=i,
            )
        return _mtrim(v), w

    # dependent branch: residual is identically zero
    y, ndd = state.den, list(state.ninv.den)
    projT = [_mT(m) for m in state.proj]
    yy = _sconv(y, y)
    schur_den = _sconv(yy, ndd)
    _check_cap(
        schur_den, 2 * state.p_prev + state.ndd_deg, "Schur factor denominator"
    )

    core = _sconv(corner, yy)
    core = _sadd(core, _unwrap(_mmconv(_mmconv(projT, nprev.coeffs), state.proj)))
    mixed = _sadd(
        _unwrap(_mmconv(projT, border.coeffs)),
        _unwrap(_mmconv([_mT(m) for m in border.coeffs], state.proj)),
    )
    core = _ssub(core, _sconv(mixed, y))
    lphi = _unwrap(_mmconv([_mT(m) for m in border.coeffs], state.coupling_num))
    schur_num = _ssub(_sconv(core, ndd), _sconv(lphi, y))
    _check_cap(
        schur_num,
        2 * state.q_hat
        + state.n_deg
        + max(state.n_deg + state.nbar_deg, state.ndd_deg),
        "Schur factor numerator",
    )
    schur_num = _strim(schur_num)
    if not schur_num:
        raise DegenerateWeightError(
            "weighted Schur factor is identically zero", stage=i
        )
    state.schur_num, state.schur_den = schur_num, _strim(schur_den)

    lhs = _mseq_sub(
        _mmconv(projT, nprev.coeffs),
        _smconv(y, [_mT(m) for m in border.coeffs]),
        1,
        i - 1,
    )
    v = _smconv(state.schur_den, _mmconv(lhs, state.num.coeffs))
    _check_cap(
        v,
        2 * state.p_prev
        + state.ndd_deg
        + state.q_prev
        + state.q_hat
        + state.n_deg,
        "bottom row numerator (dependent)",
    )
    w = _sconv(_sconv(schur_num, y), y)
    _check_cap(
        w,
        2 * state.q_hat
        + state.n_deg
        + max(state.n_deg + state.nbar_deg, state.ndd_deg)
        + 2 * state.p_prev,
        "bottom row denominator (dependent)",
    )
    return _mtrim(v), _strim(w)


def step_extend(state):
    """Assemble and reduce the next stage's numerator/denominator pair:
    corrected previous block stacked on the new bottom row, all over the
    coupling denominator times the row denominator."""
    i = state.i + 1
    m = state.num.cols
    ndd = list(state.ninv.den)
    b_num = len(state.row_num) - 1
    b_den = len(state.row_den) - 1

    t1 = _smconv(_sconv(ndd, state.row_den), state.num.coeffs)
    t2 = _mmconv(_smconv(ndd, state.proj), state.row_num)
    upper = _mseq_sub(t1, t2, i - 1, m)
    t3 = _mmconv(state.coupling_num, state.row_num)
    upper = _mseq_sub(upper, t3, i - 1, m)
    cap_upper = (
        state.q_hat
        + state.q
        + max(state.nbar_deg + state.n_deg, state.ndd_deg)
        + max(b_num, b_den)
    )
    _check_cap(upper, cap_upper, "extended numerator (upper block)")

    lower = _smconv(state.coupling_den, state.row_num)
    _check_cap(lower, cap_upper, "extended numerator (bottom row)")

    den = _sconv(state.coupling_den, state.row_den)
    _check_cap(den, state.p_prev + state.ndd_deg + b_den, "extended denominator")
    den = _strim(den)
    assert den, "extended denominator is identically zero"

    n_coeff = max(len(upper), len(lower))
    zero_u, zero_l = _mzero(i - 1, m), _mzero(1, m)
    stacked = []
    for j in range(n_coeff):
        u = upper[j] if j < len(upper) else zero_u
        l = lower[j] if j < len(lower) else zero_l
        stacked.append(u + l)
    num, den = fraction_simplify(PolyMatrix(i, m, stacked), den)
    return num, den


# ---------------------------------------------------------------------------
# bordering recursion for the column-weight inverse (coefficient form)


@dataclass
class PolyBorderingState:
    """Leading-block inverse as a numerator matrix over a scalar
    denominator, plus the stage-local sequences of the last growth step
    (``p_seq``/``q_seq`` are the two halves of the corner denominator)."""

    i: int
    num: PolyMatrix
    den: tuple
    g_num: list = None
    g_den: list = None
    f_num: list = None
    f_den: list = None
    e_num: list = None
    e_den: list = None
    p_seq: list = None
    q_seq: list = None

    def as_fraction(self):
        f = object.__new__(MatrixPolyFraction)
        f.num, f.den = self.num, self.den
        return f


def poly_bordering_init(mat):
    corner = _strim([m[0][0] for m in mat.coeffs])
    if not corner:
        raise SingularMatrixError(
            "leading 1x1 block is symbolically singular", stage=1
        )
    num, den = fraction_simplify(PolyMatrix(1, 1, [((1,),)]), corner)
    return PolyBorderingState(1, num, den)


def poly_bordering_step(state, nprev, border, corner, n_deg):
    """Grow the coefficient-form inverse by one row and column."""
    i = state.i + 1
    nbar = list(state.num.coeffs)
    ndd = list(state.den)
    nbar_deg = state.num.degree
    ndd_deg = len(ndd) - 1
    borderT = [_mT(m) for m in border.coeffs]

    g_num = list(ndd)
    _check_cap(g_num, ndd_deg, "corner numerator")
    p_seq = _sconv(corner, ndd)
    _check_cap(p_seq, n_deg + ndd_deg, "corner scalar product")
    q_seq = _unwrap(_mmconv(_mmconv(borderT, nbar), border.coeffs))
    _check_cap(q_seq, 2 * n_deg + nbar_deg, "corner coupling form")
    g_den = _ssub(p_seq, q_seq)
    _check_cap(
        g_den, max(n_deg + ndd_deg, 2 * n_deg + nbar_deg), "corner denominator"
    )
    g_den = _strim(g_den)
    if not g_den:
        raise SingularMatrixError(
            "leading principal block is symbolically singular", stage=i
        )

    f_num = [_mneg(m) for m in _mmconv(nbar, border.coeffs)]
    _check_cap(f_num, nbar_deg + n_deg, "border numerator")
    f_num = _mtrim(f_num)
    f_den = list(g_den)

    g_deg = len(g_num) - 1
    gd_deg = len(g_den) - 1
    f_deg = len(f_num) - 1
    fd_deg = len(f_den) - 1

    e_num = _mseq_add(
        _smconv(_sconv(g_num, f_den), nbar),
        _smconv(ndd, _mmconv(f_num, [_mT(m) for m in f_num])),
        i - 1,
        i - 1,
    )
    _check_cap(
        e_num,
        max(nbar_deg + g_deg + fd_deg, ndd_deg + 2 * max(f_deg, 0)),
        "core numerator",
    )
    e_den = _sconv(_sconv(ndd, g_num), f_den)
    _check_cap(e_den, ndd_deg + g_deg + fd_deg, "core denominator")
    e_num, e_den = _mtrim(e_num), _strim(e_den)
    e_deg = len(e_num) - 1
    ed_deg = len(e_den) - 1

    # assemble the enlarged inverse over the common scalar denominator
    den = _sconv(_sconv(e_den, f_den), g_den)
    _check_cap(den, ed_deg + fd_deg + gd_deg, "block denominator")
    tl = _smconv(_sconv(f_den, g_den), e_num)
    _check_cap(tl, e_deg + fd_deg + gd_deg, "block numerator (core)")
    tr = _smconv(_sconv(e_den, g_den), f_num)
    _check_cap(tr, ed_deg + f_deg + gd_deg, "block numerator (border)")
    br = _sconv(_sconv(e_den, f_den), g_num)
    _check_cap(br, ed_deg + fd_deg + g_deg, "block numerator (corner)")

    n_coeff = max(len(tl), len(tr), len(br))
    zero_core, zero_border = _mzero(i - 1, i - 1), _mzero(i - 1, 1)
    stacked = []
    for j in range(n_coeff):
        core_j = tl[j] if j < len(tl) else zero_core
        bord_j = tr[j] if j < len(tr) else zero_border
        corner_j = br[j] if j < len(br) else 0
        top = tuple(core_j[r] + (bord_j[r][0],) for r in range(i - 1))
        bottom = (tuple(bord_j[r][0] for r in range(i - 1)) + (corner_j,),)
        stacked.append(top + bottom)
    num, den = fraction_simplify(PolyMatrix(i, i, stacked), _strim(den))

    new = PolyBorderingState(i, num, den)
    new.g_num, new.g_den = g_num, g_den
    new.f_num, new.f_den = f_num, f_den
    new.e_num, new.e_den = e_num, e_den
    new.p_seq, new.q_seq = _strim(p_seq), _strim(q_seq)
    return new


def bordering_inverse(mat):
    """Inverse of a symmetric matrix polynomial as a matrix-polynomial
    numerator over one scalar denominator."""
    if mat.rows != mat.cols:
        raise ValueError("bordering inverse of a non-square matrix")
    if not mat.is_symmetric:
        raise ValueError("bordering inverse expects a symmetric matrix")
    state = poly_bordering_init(mat)
    n_deg = mat.degree
    for i in range(2, mat.rows + 1):
        nprev, border, corner = mat.partition_coeffs(i)
        state = poly_bordering_step(state, nprev, border, corner, n_deg)
    return state.as_fraction()


# ---------------------------------------------------------------------------
# driver


def _validate_weights(a, m_weight, n_weight):
    if m_weight.rows != a.rows or m_weight.rows != m_weight.cols:
        raise ValueError("row weight must be square of order = row count")
    if n_weight.rows != a.cols or n_weight.rows != n_weight.cols:
        raise ValueError("column weight must be square of order = column count")
    if not m_weight.is_symmetric:
        raise ValueError("row weight must be symmetric")
    if not n_weight.is_symmetric:
        raise ValueError("column weight must be symmetric")


def partition_stages(a, m_weight=None, n_weight=None):
    """Yield the coefficient-path state after every stage i = 1..n."""
    if m_weight is None:
        m_weight = PolyMatrix.identity(a.rows)
    if n_weight is None:
        n_weight = PolyMatrix.identity(a.cols)
    _validate_weights(a, m_weight, n_weight)
    q, m_deg, n_deg = a.degree, m_weight.degree, n_weight.degree

    col1 = a.column(1)
    z, y = init_fraction(col1, m_weight)
    if not y:
        raise DegenerateWeightError(
            "weighted squared length of a nonzero column is identically zero",
            stage=1,
        )
    num, den = fraction_simplify(z, y)
    bord = poly_bordering_init(n_weight) if a.cols > 1 else None
    state = PolyPartitionState(
        1, num, den, bord.as_fraction() if bord else None, q, m_deg, n_deg
    )
    yield state

    for i in range(2, a.cols + 1):
        col = a.column(i)
        prefix = a.leading_columns(i - 1)
        nprev, border, corner = n_weight.partition_coeffs(i)
        # the step functions read the stage sequences off the previous
        # state; restore its own afterwards so yielded states stay intact
        saved = (
            state.proj, state.resid, state.coupling_num, state.coupling_den,
            state.row_num, state.row_den, state.schur_num, state.schur_den,
        )
        state.schur_num = state.schur_den = None
        state.proj = step_projection(state, col)
        state.resid = step_residual(state, col, prefix)
        state.coupling_num, state.coupling_den = step_coupling(
            state, prefix, border
        )
        state.row_num, state.row_den = step_bottom_row(
            state, m_weight, nprev, border, corner
        )
        num, den = step_extend(state)
        ninv = None
        if i < a.cols:
            bord = poly_bordering_step(bord, nprev, border, corner, n_deg)
            ninv = bord.as_fraction()
        new = PolyPartitionState(i, num, den, ninv, q, m_deg, n_deg)
        new.proj, new.resid = state.proj, state.resid
        new.coupling_num, new.coupling_den = state.coupling_num, state.coupling_den
        new.row_num, new.row_den = state.row_num, state.row_den
        new.schur_num, new.schur_den = state.schur_num, state.schur_den
        (
            state.proj, state.resid, state.coupling_num, state.coupling_den,
            state.row_num, state.row_den, state.schur_num, state.schur_den,
        ) = saved
        state = new
        yield state


def weighted_pinv(a, m_weight=None, n_weight=None):
    """Weighted pseudoinverse in numerator-over-scalar-denominator form.

    Agrees entrywise (as rational functions) with the rational path; the
    weighted pseudoinverse is unique, so this is a complete cross-check of
    both implementations.
    """
    for state in partition_stages(a, m_weight, n_weight):
        pass
    f = object.__new__(MatrixPolyFraction)
    f.num, f.den = state.num, state.den
    return f
