"""Laurent-polynomial ring, symbolic determinant, and the period identity."""

import random
from itertools import permutations

import pytest

from periodkit import (
    LaurentPoly,
    PairContext,
    RegularMotiveData,
    SizeLimitError,
    SymMatrix,
    build_mat1,
    sym_det,
    verify_proposition,
)
from periodkit.oracle import PairVariables, cleared_period_product, naive_det
from periodkit.sampling import random_pp_free_pair

XV = ("x", "y", "z", "w")


def poly_of(pairs):
    out = LaurentPoly.zero(XV)
    for exps, coeff in pairs:
        out = out + LaurentPoly.monomial(XV, dict(enumerate(exps)), coeff)
    return out


class TestLaurentPoly:
    def test_ring_axioms_small(self):
        x = LaurentPoly.var(XV, 0)
        y = LaurentPoly.var(XV, 1)
        assert (x + y) * (x - y) == x * x - y * y
        assert x * y == y * x
        assert (x + y) + x == x + (y + x)
        assert (x - x).is_zero

    def test_negative_exponents(self):
        xinv = LaurentPoly.var(XV, 0, -1)
        x = LaurentPoly.var(XV, 0)
        assert x * xinv == LaurentPoly.one(XV)

    def test_str_is_canonical(self):
        p = poly_of([((1, 0, 0, 0), 2), ((0, -1, 0, 0), -1)])
        q = poly_of([((0, -1, 0, 0), -1), ((1, 0, 0, 0), 2)])
        assert str(p) == str(q) == "-1*y^-1 + 2*x"


class TestSymDet:
    def test_one_by_one(self):
        mx = SymMatrix(XV, ((LaurentPoly.var(XV, 0),),))
        assert sym_det(mx) == LaurentPoly.var(XV, 0)

    def test_two_by_two(self):
        x, y, z, w = (LaurentPoly.var(XV, i) for i in range(4))
        mx = SymMatrix(XV, ((x, y), (z, w)))
        assert sym_det(mx) == x * w - y * z

    def test_permutation_matrix_signs(self):
        one = LaurentPoly.one(XV)
        zero = LaurentPoly.zero(XV)
        for perm in permutations(range(4)):
            rows = tuple(
                tuple(one if perm[r] == c else zero for c in range(4)) for r in range(4)
            )
            det = sym_det(SymMatrix(XV, rows))
            inversions = sum(
                1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j]
            )
            want = one if inversions % 2 == 0 else -one
            assert det == want

    def test_matches_permutation_sum(self):
        rng = random.Random(61)
        for _ in range(40):
            k = rng.randint(1, 4)
            rows = []
            for _ in range(k):
                row = []
                for _ in range(k):
                    p = LaurentPoly.zero(XV)
                    for _ in range(rng.randint(0, 2)):
                        exps = {rng.randrange(4): rng.randint(-2, 2)}
                        p = p + LaurentPoly.monomial(XV, exps, rng.randint(-3, 3))
                    row.append(p)
                rows.append(tuple(row))
            mx = SymMatrix(XV, tuple(rows))
            assert sym_det(mx) == naive_det(mx)


class TestMat1:
    def test_one_by_one_entry(self):
        ctx = PairContext.build(
            RegularMotiveData("M", 0, (1,)), RegularMotiveData("M'", 0, (0,))
        )
        mx = build_mat1(ctx)
        pv = PairVariables.build(1, 1)
        want = LaurentPoly.monomial(
            pv.names,
            {pv.a_idx(1, 1): 1, pv.b_idx(1, 1): 1, pv.q_idx(1): -1, pv.qp_idx(1): -1},
        )
        assert mx.rows[0][0] == want
        assert mx.col_desc == (("T-complement", 1, 1),)

    def test_column_count_is_nn(self):
        rng = random.Random(62)
        for _ in range(50):
            ctx = PairContext.build(*random_pp_free_pair(rng, 3))
            mx = build_mat1(ctx)
            assert mx.size == ctx.M.rank * ctx.Mp.rank
            assert all(len(row) == mx.size for row in mx.rows)

    def test_worked_two_by_two(self):
        ctx = PairContext.build(
            RegularMotiveData("M", 1, (1, 0)), RegularMotiveData("M'", 0, (1,))
        )
        mx = build_mat1(ctx)
        assert mx.col_desc == (("T-complement", 1, 1), ("T-complement", 2, 1))


class TestVerifyProposition:
    def test_one_by_one(self):
        ctx = PairContext.build(
            RegularMotiveData("M", 0, (1,)), RegularMotiveData("M'", 0, (0,))
        )
        rep = verify_proposition(ctx)
        assert rep.ok and rep.sign == 1
        pv = PairVariables.build(1, 1)
        want = LaurentPoly.monomial(pv.names, {pv.a_idx(1, 1): 1, pv.b_idx(1, 1): 1})
        assert rep.lhs == want == rep.rhs

    def test_worked_two_by_two(self):
        ctx = PairContext.build(
            RegularMotiveData("M", 1, (1, 0)), RegularMotiveData("M'", 0, (1,))
        )
        assert verify_proposition(ctx).ok

    def test_lhs_matches_det_times_cleared(self):
        rng = random.Random(63)
        for _ in range(20):
            ctx = PairContext.build(*random_pp_free_pair(rng, 2))
            rep = verify_proposition(ctx)
            assert rep.lhs == sym_det(build_mat1(ctx)) * cleared_period_product(ctx)

    def test_random_small_shapes(self):
        rng = random.Random(64)
        for _ in range(60):
            ctx = PairContext.build(*random_pp_free_pair(rng, 3))
            assert verify_proposition(ctx).ok

    def test_cleared_periods_match_raw_q_part(self):
        from periodkit import deligne_period_raw, motive_tag
        from periodkit.periods import PeriodSymbol

        rng = random.Random(67)
        for _ in range(50):
            ctx = PairContext.build(*random_pp_free_pair(rng, 3))
            pv = PairVariables.build(ctx.M.rank, ctx.Mp.rank)
            ((key, coeff),) = cleared_period_product(ctx).terms.items()
            assert coeff == 1
            raw = deligne_period_raw(ctx)
            for a in range(1, ctx.M.rank + 1):
                want = raw.exponent(PeriodSymbol("Q", a, motive_tag(ctx.M)))
                assert key[pv.q_idx(a)] == want
            for b in range(1, ctx.Mp.rank + 1):
                want = raw.exponent(PeriodSymbol("Q", b, motive_tag(ctx.Mp)))
                assert key[pv.qp_idx(b)] == want

    def test_size_limit(self):
        rng = random.Random(65)
        ctx = PairContext.build(*random_pp_free_pair(rng, 4, ranks=(4, 4)))
        with pytest.raises(SizeLimitError):
            verify_proposition(ctx)

    def test_size_limit_env_override(self, monkeypatch):
        rng = random.Random(66)
        ctx = PairContext.build(*random_pp_free_pair(rng, 2, ranks=(2, 2)))
        monkeypatch.setenv("PK_MAX_ORACLE_SIZE", "3")
        with pytest.raises(SizeLimitError):
            verify_proposition(ctx)
        monkeypatch.setenv("PK_MAX_ORACLE_SIZE", "4")
        assert verify_proposition(ctx).ok
