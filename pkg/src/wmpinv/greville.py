"""Weighted pseudoinverse of a rational matrix by column partitioning.

The pseudoinverse of the leading i-column submatrix is grown one column at
a time.  Appending column i either enlarges the column space (nonzero
residual branch) or not (dependent-column branch, where a weighted
Schur-type factor replaces the quadratic form).  The inverse of the
leading principal block of the column weight is carried along by the
classical bordering recursion, never recomputed from scratch.

All quantities are exact rational functions; "zero" always means
identically zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateWeightError, SingularMatrixError
from .matrices import RfMatrix
from .scalars import RatFun


@dataclass(frozen=True)
class WeightedProblem:
    """A matrix with its two symmetric weights; identity weights by default."""

    a: RfMatrix
    m_weight: RfMatrix = None
    n_weight: RfMatrix = None

    def __post_init__(self):
        if self.m_weight is None:
            object.__setattr__(self, "m_weight", RfMatrix.identity(self.a.rows))
        if self.n_weight is None:
            object.__setattr__(self, "n_weight", RfMatrix.identity(self.a.cols))
        if self.m_weight.rows != self.a.rows or not self.m_weight.is_square:
            raise ValueError("row weight must be square of order = row count")
        if self.n_weight.rows != self.a.cols or not self.n_weight.is_square:
            raise ValueError("column weight must be square of order = column count")
        if not self.m_weight.is_symmetric:
            raise ValueError("row weight must be symmetric")
        if not self.n_weight.is_symmetric:
            raise ValueError("column weight must be symmetric")


@dataclass
class PartitionState:
    """State after stage i: the pseudoinverse of the first i columns, the
    inverse of the order-i leading block of the column weight (None at the
    last stage), and the stage vectors that produced this stage (None at
    stage 1; ``schur`` only on the dependent-column branch)."""

    i: int
    x: RfMatrix
    ninv: RfMatrix = None
    proj: RfMatrix = None      # coordinates of the new column in the old ones
    resid: RfMatrix = None     # part of the new column outside the old span
    row: RfMatrix = None       # new bottom row of the pseudoinverse
    schur: RatFun = None       # weighted Schur factor (dependent branch only)


def column_pinv_init(col, m_weight):
    """Weighted pseudoinverse of a single column (1 x rows).

    The zero column has pseudoinverse zero; otherwise the weighted squared
    length col^T M col must be a nonzero rational function.
    """
    colT = col.transpose()
    if col.is_zero:
        return colT
    form = colT * m_weight
    sq = (form * col)[0, 0]
    if sq.is_zero:
        raise DegenerateWeightError(
            "weighted squared length of a nonzero column is identically zero",
            stage=1,
        )
    return form.scale(sq.reciprocal())


def project_column(state, problem, i):
    """Coordinates of column i in the preceding columns and the residual."""
    col = problem.a.column(i)
    prefix = problem.a.leading_columns(i - 1)
    proj = state.x * col
    resid = col - prefix * proj
    return proj, resid


def weighted_schur_factor(state, problem, i):
    """Schur-type scalar inverted on the dependent-column branch.

    Combines the corner of the order-i weight block with the projection
    coordinates and the coupling column; must be a nonzero rational
    function for the recursion to continue.
    """
    part = problem.n_weight.principal_partition(i)
    proj, projT = state.proj, state.proj.transpose()
    lt = part.l.transpose()
    prefix = problem.a.leading_columns(i - 1)
    eye = RfMatrix.identity(i - 1)
    mixed = (projT * part.l)[0, 0]
    coupling = (lt * (eye - state.x * prefix) * state.ninv * part.l)[0, 0]
    value = (
        part.n_ii
        + (projT * part.n_prev * proj)[0, 0]
        - (mixed + mixed)
        - coupling
    )
    if value.is_zero:
        raise DegenerateWeightError(
            "weighted Schur factor is identically zero", stage=i
        )
    return value


def bottom_row(state, problem, i):
    """New bottom row of the pseudoinverse for stage i (1 x rows)."""
    if not state.resid.is_zero:
        residT = state.resid.transpose()
        form = residT * problem.m_weight
        sq = (form * state.resid)[0, 0]
        if sq.is_zero:
            raise DegenerateWeightError(
                "weighted squared length of a nonzero residual is identically zero",
                stage=i,
            )
        return form.scale(sq.reciprocal())
    part = problem.n_weight.principal_partition(i)
    lhs = state.proj.transpose() * part.n_prev - part.l.transpose()
    return (lhs * state.x).scale(state.schur.reciprocal())


def extend_pinv(state, problem, i):
    """Stack the corrected previous pseudoinverse on the new bottom row."""
    part = problem.n_weight.principal_partition(i)
    prefix = problem.a.leading_columns(i - 1)
    eye = RfMatrix.identity(i - 1)
    coupling = (eye - state.x * prefix) * state.ninv * part.l
    upper = state.x - (state.proj + coupling) * state.row
    return RfMatrix.block([[upper], [state.row]])


def bordering_step(prev_inv, part):
    """Grow a leading-block inverse by one row and column.

    Given the inverse of the previous block and the partition pieces,
    returns (core, border, corner): the updated top-left block, the new
    border column and the new corner scalar of the enlarged inverse.
    """
    lt = part.l.transpose()
    schur = part.n_ii - (lt * prev_inv * part.l)[0, 0]
    if schur.is_zero:
        raise SingularMatrixError(
            "leading principal block is symbolically singular"
        )
    corner = schur.reciprocal()
    border = (prev_inv * part.l).scale(-corner)
    core = prev_inv + (border * border.transpose()).scale(corner.reciprocal())
    return core, border, corner


def _assemble_bordered(core, border, corner):
    corner_m = RfMatrix(1, 1, [corner])
    return RfMatrix.block([[core, border], [border.transpose(), corner_m]])


def bordering_inverse(mat):
    """Inverse of a square matrix whose leading principal blocks are all
    symbolically nonsingular, computed by the bordering recursion."""
    if not mat.is_square:
        raise ValueError("bordering inverse of a non-square matrix")
    corner = mat[0, 0]
    if corner.is_zero:
        raise SingularMatrixError(
            "leading 1x1 block is symbolically singular", stage=1
        )
    inv = RfMatrix(1, 1, [corner.reciprocal()])
    for i in range(2, mat.rows + 1):
        part = mat.principal_partition(i)
        try:
            core, border, corner = bordering_step(inv, part)
        except SingularMatrixError as exc:
            raise SingularMatrixError(str(exc), stage=i) from None
        inv = _assemble_bordered(core, border, corner)
    return inv


def partition_stages(problem):
    """Yield the PartitionState after every stage i = 1..n.

    The final state's ``x`` is the weighted pseudoinverse of the full
    matrix.  Degenerate-weight and singularity errors carry the failing
    stage index.
    """
    a, n_w = problem.a, problem.n_weight
    x = column_pinv_init(a.column(1), problem.m_weight)
    ninv = None
    if a.cols > 1:
        corner = n_w[0, 0]
        if corner.is_zero:
            raise SingularMatrixError(
                "leading 1x1 block of the column weight is symbolically singular",
                stage=1,
            )
        ninv = RfMatrix(1, 1, [corner.reciprocal()])
    state = PartitionState(1, x, ninv)
    yield state
    for i in range(2, a.cols + 1):
        # the step functions read the stage vectors off the previous state;
        # restore its own vectors afterwards so yielded states stay intact
        saved = (state.proj, state.resid, state.row, state.schur)
        state.proj, state.resid = project_column(state, problem, i)
        state.schur = None
        if state.resid.is_zero:
            state.schur = weighted_schur_factor(state, problem, i)
        state.row = bottom_row(state, problem, i)
        x = extend_pinv(state, problem, i)
        ninv = None
        if i < a.cols:
            part = n_w.principal_partition(i)
            try:
                core, border, corner = bordering_step(state.ninv, part)
            except SingularMatrixError as exc:
                raise SingularMatrixError(str(exc), stage=i) from None
            ninv = _assemble_bordered(core, border, corner)
        new = PartitionState(
            i, x, ninv, proj=state.proj, resid=state.resid,
            row=state.row, schur=state.schur,
        )
        state.proj, state.resid, state.row, state.schur = saved
        state = new
        yield state


def weighted_pinv(problem):
    """Weighted pseudoinverse of problem.a (cols x rows).

    The result satisfies the four weighted Penrose identities exactly over
    the rational-function field.
    """
    for state in partition_stages(problem):
        pass
    return state.x
