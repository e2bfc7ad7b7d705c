"""Coefficient-path recursion: representation, stage formulas, per-stage
reduction, bordering inverse, and bit-exact agreement with the rational
path (which is the reference semantics)."""

import random
from fractions import Fraction

import pytest

from helpers import load, rand_problem_matrix, rand_weight
from wmpinv.errors import SingularMatrixError
from wmpinv.greville import WeightedProblem
from wmpinv.greville import partition_stages as rational_stages
from wmpinv.matrices import RfMatrix
from wmpinv.matrixio import parse_entry, parse_matrix_file
from wmpinv.poly_greville import (
    MatrixPolyFraction,
    PolyMatrix,
    _check_cap,
    bordering_inverse,
    fraction_simplify,
    init_fraction,
    partition_stages,
    weighted_pinv,
)
from wmpinv.scalars import Poly, RatFun
from wmpinv.verify import penrose_check


def e(text):
    return parse_entry(text)


def seq_value(mat_seq, den_seq, rows, cols):
    """Independent decoder: a (matrix seq, scalar seq) pair as an RfMatrix."""
    den = Poly(den_seq)
    out = []
    for r in range(rows):
        out.append(
            [RatFun(Poly([m[r][c] for m in mat_seq]), den) for c in range(cols)]
        )
    return RfMatrix.from_rows(out)


class TestPolyMatrix:
    def test_coefficient_extraction(self):
        a = parse_matrix_file("matrix 2 2\ns; 1\n0; s^2")
        p = PolyMatrix.from_rf_matrix(a)
        assert p.coeffs == (
            ((0, 1), (0, 0)),
            ((1, 0), (0, 0)),
            ((0, 0), (0, 1)),
        )

    def test_constant_matrix_single_coefficient(self):
        a = parse_matrix_file("matrix 2 2\n3; 1\n-2; 0")
        p = PolyMatrix.from_rf_matrix(a)
        assert p.coeffs == (((3, 1), (-2, 0)),)

    def test_rational_entry_rejected_with_position(self):
        a = parse_matrix_file("matrix 1 1\n1/s")
        with pytest.raises(ValueError, match=r"\(1, 1\)"):
            PolyMatrix.from_rf_matrix(a)

    def test_roundtrip_through_rf_matrix(self):
        rng = random.Random(41)
        for _ in range(20):
            a = rand_problem_matrix(rng, max_dim=3)
            p = PolyMatrix.from_rf_matrix(a)
            assert p.to_rf_matrix() == a

    def test_partition_coeffs(self):
        n = PolyMatrix.from_rf_matrix(load("wmp_rank2_n.mat"))
        prev, border, corner = n.partition_coeffs(3)
        assert prev.to_rf_matrix() == load("wmp_rank2_n.mat").leading_block(2)
        assert border.entry_poly(0, 0) == Poly([1, 1])
        assert border.entry_poly(1, 0) == Poly([0, 1])
        assert corner == [3, 1]


class TestInitFraction:
    def test_zero_column(self):
        z, y = init_fraction(PolyMatrix(3, 1), PolyMatrix.identity(3))
        assert z.is_zero
        assert y == (1,)

    def test_monomial_column_left_unreduced(self):
        # single entry s, unit weight: numerator {0,1}, denominator {0,0,1};
        # reduction to 1/s happens only in the driver
        z, y = init_fraction(
            PolyMatrix.from_entries([[Poly([0, 1])]]), PolyMatrix.identity(1)
        )
        assert z.coeffs == (((0,),), ((1,),))
        assert y == (0, 0, 1)

    def test_matches_rational_path_after_reduction(self):
        a = PolyMatrix.from_rf_matrix(load("wmp_poly3_a.mat"))
        w = PolyMatrix.from_rf_matrix(load("wmp_poly3_w.mat"))
        z, y = init_fraction(a.column(1), w)
        got = seq_value(list(z.coeffs), list(y), 1, 3)
        states = list(
            rational_stages(
                WeightedProblem(
                    load("wmp_poly3_a.mat"),
                    load("wmp_poly3_w.mat"),
                    load("wmp_poly3_w.mat"),
                )
            )
        )
        assert got == states[0].x


class TestStageSequences:
    def test_orthogonal_columns(self):
        states = list(partition_stages(PolyMatrix.identity(2)))
        st = states[1]
        assert st.proj == []  # zero projection trims to nothing
        assert seq_value(st.resid, st.den and [1], 2, 1) == RfMatrix.from_rows(
            [[e("0")], [e("1")]]
        )
        assert st.row_num == [((0, 1),)]
        assert st.row_den == [1]
        assert st.num.coeffs == (((1, 0), (0, 1)),)
        assert st.den == (1,)
        # identity weight: the coupling column vanishes and its scalar
        # denominator collapses to the previous one
        assert st.coupling_num == []
        assert st.coupling_den == [1]

    def test_dependent_column_value(self):
        a = PolyMatrix.from_entries([[1, 1]])
        states = list(partition_stages(a))
        st = states[1]
        assert st.resid == []
        # Schur factor 2, bottom row value 1/2
        assert RatFun(Poly(st.schur_num), Poly(st.schur_den)) == RatFun(2)
        assert RatFun(
            Poly([m[0][0] for m in st.row_num]), Poly(st.row_den)
        ) == RatFun.const(Fraction(1, 2))
        assert st.num.entry_poly(0, 0) == Poly([1])
        assert st.den == (2,)

    def test_branch_and_value_agreement_with_rational_path(self):
        # the rational path is the reference semantics: branch choice and
        # every stage value must match exactly
        rng = random.Random(47)
        for _ in range(12):
            a = rand_problem_matrix(rng, max_dim=4)
            m, n = rand_weight(rng, a.rows), rand_weight(rng, a.cols)
            problem = WeightedProblem(a, m, n)
            ap = PolyMatrix.from_rf_matrix(a)
            mp = PolyMatrix.from_rf_matrix(m)
            np_ = PolyMatrix.from_rf_matrix(n)
            for st_rat, st_pol in zip(
                rational_stages(problem), partition_stages(ap, mp, np_)
            ):
                assert st_rat.i == st_pol.i
                got = MatrixPolyFraction(st_pol.num, st_pol.den).to_rf_matrix()
                assert got == st_rat.x, f"stage {st_rat.i}"
                if st_rat.i > 1:
                    assert (st_pol.resid == []) == st_rat.resid.is_zero
                if st_pol.ninv is not None:
                    assert st_pol.ninv.to_rf_matrix() == st_rat.ninv


class TestExtend:
    def test_identity(self):
        x = weighted_pinv(PolyMatrix.identity(2))
        assert x.num.coeffs == (((1, 0), (0, 1)),)
        assert x.den == (1,)

    def test_pair_of_equal_columns_penrose_oracle(self):
        a = PolyMatrix.from_entries([[1, 1]])
        x = weighted_pinv(a).to_rf_matrix()
        rep = penrose_check(
            a.to_rf_matrix(), RfMatrix.identity(1), RfMatrix.identity(2), x
        )
        assert rep.all_hold
        assert x == RfMatrix.from_rows([[e("1/2")], [e("1/2")]])

    def test_polynomial_fixture_corner_entry(self):
        a = PolyMatrix.from_rf_matrix(load("wmp_poly3_a.mat"))
        w = PolyMatrix.from_rf_matrix(load("wmp_poly3_w.mat"))
        x = weighted_pinv(a, w, w).to_rf_matrix()
        assert x[1, 1] == e("(1+2*s)/(-1+s+s^2-s^5)")
        assert x[0, 0] == e("1/(1-s-s^2+s^5)")

    def test_hessenberg_bottom_row(self):
        a = PolyMatrix.from_rf_matrix(load("wmp_hessenberg_a.mat"))
        x = weighted_pinv(a).to_rf_matrix()
        assert list(x.row(4)) == [
            e("0"), e("0"), e("-s"), e("1/(1+s^2)"), e("s/(1+s^2)"),
        ]


class TestFractionSimplify:
    def test_common_factor_divided_out(self):
        ee = ((1, 2), (3, 4))
        num = PolyMatrix(2, 2, [((0, 0), (0, 0)), tuple(tuple(2 * x for x in r) for r in ee)])
        out_num, out_den = fraction_simplify(num, (0, 2))
        assert out_num.coeffs == (ee,)
        assert out_den == (1,)

    def test_idempotent(self):
        rng = random.Random(53)
        for _ in range(20):
            n = rand_weight(rng, 2)
            frac = bordering_inverse(PolyMatrix.from_rf_matrix(n))
            again_num, again_den = fraction_simplify(frac.num, frac.den)
            assert (again_num, again_den) == (frac.num, frac.den)

    def test_value_preserved_at_sample_points(self):
        num = PolyMatrix.from_entries([[Poly([0, 2, 2]), Poly([2, 2])]])
        den = (0, 4, 4)
        simplified = MatrixPolyFraction(num, den)
        orig_den = Poly(den)
        for x in (1, 2, Fraction(1, 3), -3):
            expected = tuple(
                tuple(
                    num.entry_poly(r, c)(x) / orig_den(x)
                    for c in range(num.cols)
                )
                for r in range(num.rows)
            )
            assert simplified.eval_at(x) == expected

    def test_zero_numerator(self):
        out_num, out_den = fraction_simplify(PolyMatrix(1, 2), (3, 3))
        assert out_num.is_zero and out_den == (1,)


class TestCapacityChecks:
    def test_violation_raises(self):
        with pytest.raises(AssertionError):
            _check_cap([1, 2, 3], 1, "probe")

    def test_empty_always_fits(self):
        _check_cap([], -2, "probe")

    def test_random_runs_stay_within_bounds(self):
        # every step asserts its pre-trim length against the formula bound,
        # so a clean run is the property
        rng = random.Random(59)
        for _ in range(15):
            a = rand_problem_matrix(rng, max_dim=4)
            m, n = rand_weight(rng, a.rows), rand_weight(rng, a.cols)
            weighted_pinv(
                PolyMatrix.from_rf_matrix(a),
                PolyMatrix.from_rf_matrix(m),
                PolyMatrix.from_rf_matrix(n),
            )


class TestPolyBordering:
    def test_scalar(self):
        frac = bordering_inverse(PolyMatrix.from_entries([[Poly([2, 1])]]))
        assert frac.num.coeffs == (((1,),),)
        assert frac.den == (2, 1)

    def test_identity(self):
        frac = bordering_inverse(PolyMatrix.identity(4))
        assert frac.to_rf_matrix() == RfMatrix.identity(4)

    def test_fixture_matches_elimination_oracle(self):
        n1 = load("wmp_poly3_w.mat")
        frac = bordering_inverse(PolyMatrix.from_rf_matrix(n1))
        assert frac.to_rf_matrix() == n1.ff_inverse()

    def test_product_is_identity(self):
        rng = random.Random(61)
        for _ in range(10):
            n = rand_weight(rng, rng.randint(1, 5))
            frac = bordering_inverse(PolyMatrix.from_rf_matrix(n))
            assert n * frac.to_rf_matrix() == RfMatrix.identity(n.rows)

    def test_singular_stage_reported(self):
        n = PolyMatrix.from_entries([[0, 0], [0, 1]])
        with pytest.raises(SingularMatrixError) as err:
            bordering_inverse(n)
        assert err.value.stage == 1


class TestDegenerateWeights:
    def test_degenerate_residual_form_reports_stage(self):
        from wmpinv.errors import DegenerateWeightError

        a = PolyMatrix.identity(2)
        m = PolyMatrix.from_entries([[1, 0], [0, 0]])
        with pytest.raises(DegenerateWeightError) as err:
            weighted_pinv(a, m, PolyMatrix.identity(2))
        assert err.value.stage == 2

    def test_degenerate_schur_factor_reports_stage(self):
        from wmpinv.errors import DegenerateWeightError

        a = PolyMatrix.from_entries([[1, 1]])
        n = PolyMatrix.from_entries([[1, 1], [1, 1]])
        with pytest.raises(DegenerateWeightError) as err:
            weighted_pinv(a, PolyMatrix.identity(1), n)
        assert err.value.stage == 2
