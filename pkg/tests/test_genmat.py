"""Evaluation on matrices, identity checking, diagonal models."""
import random
from fractions import Fraction

import pytest

from tracealg import linalg
from tracealg.chident import ch_poly, t_multilinear
from tracealg.freetrace import TracePoly, formal_trace, x
from tracealg.genmat import (diagonal_model, discriminant_relation, evaluate,
                             generic_discriminant, generic_matrix,
                             is_trace_identity, random_counterexample,
                             rational_matrix)
from tracealg.mpoly import MPoly, PolyMatrix


class TestGenericMatrix:
    def test_one_by_one(self):
        m = generic_matrix(1, 1)
        assert m.rows[0][0] == MPoly.var("xi1_1_1")

    def test_trace_is_diagonal_sum(self):
        m = generic_matrix(1, 2)
        assert m.trace() == MPoly.var("xi1_1_1") + MPoly.var("xi1_2_2")

    def test_product_entry(self):
        a, b = generic_matrix(1, 2), generic_matrix(2, 2)
        v = lambda name: MPoly.var(name)
        expected = v("xi1_1_1") * v("xi2_1_1") + v("xi1_1_2") * v("xi2_2_1")
        assert (a * b).rows[0][0] == expected


class TestEvaluate:
    def test_trace_of_identity_matrix(self):
        eye = rational_matrix(linalg.identity(3))
        out = evaluate(formal_trace(x(1)), {1: eye}, 3)
        assert out == PolyMatrix.scalar(3, 3)

    def test_ch2_vanishes_on_generic_2x2(self):
        assert evaluate(ch_poly(2), {1: generic_matrix(1, 2)}, 2).is_zero()

    def test_commuting_diagonals(self):
        d1 = rational_matrix([[1, 0], [0, 2]])
        d2 = rational_matrix([[5, 0], [0, -3]])
        p = x(1) * x(2) - x(2) * x(1)
        assert evaluate(p, {1: d1, 2: d2}, 2).is_zero()

    def test_trace_of_one_is_the_size(self):
        t1 = formal_trace(TracePoly.one())
        out = evaluate(t1, {}, 4)
        assert out == PolyMatrix.scalar(4, 4)

    def test_size_mismatch(self):
        with pytest.raises(ValueError, match="size"):
            evaluate(x(1), {1: rational_matrix([[1]])}, 2)

    def test_unassigned_variable(self):
        with pytest.raises(ValueError, match="x1"):
            evaluate(x(1), {}, 2)

    def test_multiplicative_and_trace_soundness(self):
        rng = random.Random(7)

        def rand_poly():
            p = TracePoly.zero()
            for _ in range(rng.randint(1, 3)):
                word = tuple(rng.randint(1, 2) for _ in range(rng.randint(0, 2)))
                term = TracePoly.scalar(rng.randint(-3, 3)) * TracePoly.word(word)
                if rng.random() < 0.5:
                    tw = tuple(rng.randint(1, 2) for _ in range(rng.randint(1, 2)))
                    term = term * formal_trace(TracePoly.word(tw))
                p = p + term
            return p

        for n in (2, 3):
            mats = {i: rational_matrix([[rng.randint(-2, 2) for _ in range(n)]
                                        for _ in range(n)]) for i in (1, 2)}
            for _ in range(5):
                p, q = rand_poly(), rand_poly()
                assert evaluate(p * q, mats, n) == evaluate(p, mats, n) * evaluate(q, mats, n)
                traced = evaluate(formal_trace(p), mats, n)
                assert traced == PolyMatrix.scalar(evaluate(p, mats, n).trace(), n)


class TestIsTraceIdentity:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_ch_n_on_size_n(self, n):
        assert is_trace_identity(ch_poly(n), n)

    @pytest.mark.parametrize("n,m", [(1, 2), (2, 3), (3, 4)])
    def test_ch_n_fails_one_size_up(self, n, m):
        assert not is_trace_identity(ch_poly(n), m)
        witness = random_counterexample(ch_poly(n), m, trials=20, seed=0)
        assert witness is not None

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_ch_n_holds_below(self, m):
        # the degree-n identity also vanishes on smaller matrices
        for n in range(m, 5):
            assert is_trace_identity(ch_poly(n), m)

    @pytest.mark.parametrize("n,m", [(n, m) for n in (1, 2, 3) for m in (1, 2, 3)])
    def test_fundamental_trace_identity_table(self, n, m):
        # T_{m+1} is an identity of size-n matrices iff n <= m
        holds = is_trace_identity(t_multilinear(m + 1), n)
        assert holds == (n <= m)

    def test_cyclic_trace_identity(self):
        p = formal_trace(TracePoly.word([1, 2])) - formal_trace(TracePoly.word([2, 1]))
        assert random_counterexample(p, 4, trials=10, seed=3) is None
        assert is_trace_identity(p, 4)


class TestNilpotentAndIdempotentTraces:
    def test_nilpotent_matrices_have_zero_trace(self):
        rng = random.Random(1)
        for n in (2, 3, 4):
            strict = [[Fraction(rng.randint(-4, 4)) if j > i else Fraction(0)
                       for j in range(n)] for i in range(n)]
            base = None
            while base is None:
                cand = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
                if linalg.invert(cand) is not None:
                    base = cand
            conj = linalg.matmul(linalg.matmul(base, strict), linalg.invert(base))
            trace = sum(conj[i][i] for i in range(n))
            assert trace == 0

    def test_idempotent_traces_are_small_integers(self):
        rng = random.Random(2)
        for n in (2, 3, 4):
            for r in range(n + 1):
                base = None
                while base is None:
                    cand = [[Fraction(rng.randint(-3, 3)) for _ in range(n)]
                            for _ in range(n)]
                    if linalg.invert(cand) is not None:
                        base = cand
                diag = [[Fraction(1) if i == j and i < r else Fraction(0)
                         for j in range(n)] for i in range(n)]
                proj = linalg.matmul(linalg.matmul(base, diag), linalg.invert(base))
                assert linalg.matmul(proj, proj) == proj
                trace = sum(proj[i][i] for i in range(n))
                assert trace == r and 0 <= trace <= n


class TestDiagonalModel:
    def test_two_distinct_eigenvalues_no_relation(self):
        model = diagonal_model((1, 1))
        e1 = MPoly.var("x1") + MPoly.var("x2")
        e2 = MPoly.var("x1") * MPoly.var("x2")
        assert model.charpoly_coeffs == (e1, e2)

    def test_one_two_model_identities(self):
        # construction itself verifies the closed-form identities
        model = diagonal_model((1, 2))
        u, v = MPoly.var("x1"), MPoly.var("x2")
        a, b, c = model.charpoly_coeffs
        assert a == u + 2 * v
        assert b == 2 * u * v + v * v
        assert c == u * v * v

    def test_matrix_satisfies_characteristic_polynomial(self):
        model = diagonal_model((1, 2))
        X = model.matrix
        a, b, c = model.charpoly_coeffs
        value = X ** 3 - a * X ** 2 + b * X - c * PolyMatrix.identity(3)
        assert value.is_zero()


class TestDiscriminantRelation:
    def test_cubic_discriminant(self):
        expected = (18 * MPoly.var("a1") * MPoly.var("a2") * MPoly.var("a3")
                    - 4 * MPoly.var("a1") ** 3 * MPoly.var("a3")
                    + MPoly.var("a1") ** 2 * MPoly.var("a2") ** 2
                    - 4 * MPoly.var("a2") ** 3
                    - 27 * MPoly.var("a3") ** 2)
        assert discriminant_relation((1, 2)) == expected

    def test_double_root(self):
        assert discriminant_relation((2,)) == \
            MPoly.var("a1") ** 2 - 4 * MPoly.var("a2")

    def test_all_distinct_is_an_error(self):
        with pytest.raises(ValueError, match="no forced relation"):
            discriminant_relation((1, 1, 1))

    def test_quartic_candidate_with_mixed_weights_is_not_a_relation(self):
        # a circulated degree-4 candidate whose first term has weight 4,
        # not 6; the oracle rejects it
        a, b, c = MPoly.var("a1"), MPoly.var("a2"), MPoly.var("a3")
        candidate = (3 * a ** 2 * b - 162 * a * b * c + 243 * c ** 2
                     - 12 * a ** 2 * b ** 2 + 18 * a ** 3 * c + 36 * b ** 3)
        model = diagonal_model((1, 2))
        subs = {f"a{j}": model.charpoly_coeffs[j - 1] for j in (1, 2, 3)}
        assert not candidate.substitute(subs).is_zero()

    def test_discriminant_nonvanishing_for_distinct_eigenvalues(self):
        disc = generic_discriminant(3)
        model = diagonal_model((1, 1, 1))
        subs = {f"a{j}": model.charpoly_coeffs[j - 1] for j in (1, 2, 3)}
        assert not disc.substitute(subs).is_zero()
