import random
from fractions import Fraction
from math import gcd as gcd_int

import numpy as np
import pytest

from twistorlat import (
    DimensionMismatch,
    GramLattice,
    HyperTriple,
    InvalidTriple,
    NotSymmetric,
    integer_kernel,
    load_lattice,
    perp_V_basis,
    project_to_V,
    q_eval,
    signature,
    vector,
)
from twistorlat.linalg import expand_in_V, triple_gram_rows

from support import (
    conjugate_gram,
    in_integer_span,
    random_rational_vector,
    random_unimodular,
    rational_rank,
)

U3, U3_TRIPLE = load_lattice("U3")
K3, K3_TRIPLE = load_lattice("K3")
D222, D222_TRIPLE = load_lattice("diag222")


class TestQEval:
    def test_u3_hyperbolic(self):
        x = vector([1, 1, 0, 0, 0, 0])
        assert q_eval(U3, x, x) == 2

    def test_zero_vector(self):
        x = vector([0] * 6)
        y = vector([3, 1, 4, 1, 5, 9])
        assert q_eval(U3, x, y) == 0

    def test_orthogonal_pair(self):
        x = vector([1, -1, 0, 0, 0, 0])
        y = vector([1, 1, 0, 0, 0, 0])
        assert q_eval(U3, x, y) == 0

    def test_symmetry_random(self):
        rng = random.Random(11)
        for _ in range(50):
            x = random_rational_vector(rng, 6)
            y = random_rational_vector(rng, 6)
            assert q_eval(U3, x, y) == q_eval(U3, y, x)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            q_eval(U3, vector([1, 2]), vector([0] * 6))


class TestSignature:
    def test_u3(self):
        assert signature(U3).as_tuple() == (3, 3, 0)

    def test_diag222(self):
        assert signature(D222).as_tuple() == (3, 0, 0)

    def test_k3(self):
        assert signature(K3).as_tuple() == (3, 19, 0)

    def test_against_eigenvalue_oracle(self):
        for lat in (U3, K3, D222):
            eig = np.linalg.eigvalsh(np.array(lat.gram, dtype=float))
            oracle = (int(np.sum(eig > 1e-9)), int(np.sum(eig < -1e-9)),
                      int(np.sum(np.abs(eig) <= 1e-9)))
            assert signature(lat).as_tuple() == oracle

    def test_degenerate(self):
        lat = GramLattice.from_rows([[0, 0], [0, 1]])
        assert signature(lat).as_tuple() == (1, 0, 1)

    def test_zero_diagonal_block(self):
        lat = GramLattice.from_rows([[0, 1], [1, 0]])
        assert signature(lat).as_tuple() == (1, 1, 0)

    def test_sylvester_stability(self):
        rng = random.Random(3)
        for _ in range(10):
            u = random_unimodular(rng, 6)
            lat = GramLattice.from_rows(conjugate_gram([list(r) for r in U3.gram], u))
            assert signature(lat).as_tuple() == (3, 3, 0)

    def test_not_symmetric_rejected(self):
        with pytest.raises(NotSymmetric):
            GramLattice.from_rows([[1, 2], [3, 1]])


class TestProjection:
    def test_fixes_triple_vector(self):
        assert project_to_V(U3, U3_TRIPLE, U3_TRIPLE.w_i) == (1, 0, 0)

    def test_perp_vector_kills(self):
        x = vector([1, -1, 0, 0, 0, 0])
        assert project_to_V(U3, U3_TRIPLE, x) == (0, 0, 0)

    def test_mixed_vector(self):
        x = vector([1, 1, 1, 0, 0, 0])
        assert project_to_V(U3, U3_TRIPLE, x) == (1, Fraction(1, 2), 0)

    def test_idempotence(self):
        rng = random.Random(5)
        for _ in range(30):
            x = random_rational_vector(rng, 6)
            coeffs = project_to_V(U3, U3_TRIPLE, x)
            px = expand_in_V(U3_TRIPLE, coeffs)
            assert project_to_V(U3, U3_TRIPLE, px) == coeffs

    def test_residual_orthogonality(self):
        rng = random.Random(6)
        for _ in range(30):
            x = random_rational_vector(rng, 6)
            coeffs = project_to_V(U3, U3_TRIPLE, x)
            px = expand_in_V(U3_TRIPLE, coeffs)
            resid = tuple(a - b for a, b in zip(x, px))
            for w in U3_TRIPLE.vectors:
                assert q_eval(U3, resid, w) == 0

    def test_invalid_triple(self):
        bad = HyperTriple.from_rows([
            [1, 1, 0, 0, 0, 0],
            [0, 0, 1, 1, 0, 0],
            [0, 0, 1, 0, 0, 1],  # not orthogonal to w_J
        ])
        with pytest.raises(InvalidTriple):
            project_to_V(U3, bad, vector([1, 0, 0, 0, 0, 0]))


class TestIntegerKernel:
    def test_identity_empty(self):
        assert integer_kernel([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == []

    def test_difference_row(self):
        assert integer_kernel([[1, -1]]) == [(1, 1)]

    def test_saturation_2_4(self):
        basis = integer_kernel([[2, 4]])
        assert len(basis) == 1
        assert basis[0] in ((2, -1), (-2, 1))

    def test_random_matrices(self):
        rng = random.Random(9)
        for _ in range(40):
            rows = [[rng.randint(-4, 4) for _ in range(5)]
                    for _ in range(rng.randint(1, 4))]
            basis = integer_kernel(rows)
            # every basis vector solves the system
            for v in basis:
                for r in rows:
                    assert sum(a * b for a, b in zip(r, v)) == 0
            # dimension matches the rational kernel
            assert len(basis) == 5 - rational_rank(rows)
            # basis is linearly independent
            if basis:
                assert rational_rank(basis) == len(basis)

    def test_saturation_gcd(self):
        from math import gcd
        rng = random.Random(10)
        for _ in range(40):
            rows = [[rng.randint(-4, 4) for _ in range(5)]
                    for _ in range(2)]
            for v in integer_kernel(rows):
                g = 0
                for e in v:
                    g = gcd(g, abs(e))
                assert g == 1

    def test_saturation_against_rational_kernel(self):
        # every integral point of the rational kernel must be an integer
        # combination of the computed basis
        from support import rref
        rng = random.Random(13)
        for _ in range(30):
            rows = [[rng.randint(-3, 3) for _ in range(4)]
                    for _ in range(2)]
            basis = integer_kernel(rows)
            red, pivots = rref(rows)
            free = [c for c in range(4) if c not in pivots]
            for f in free:
                # back-substitute a kernel vector with free coordinate 1
                v = [Fraction(0)] * 4
                v[f] = Fraction(1)
                for row, p in zip(red, pivots):
                    v[p] = -row[f]
                scale = 1
                for e in v:
                    scale = scale * e.denominator // gcd_int(scale, e.denominator)
                iv = [int(e * scale) for e in v]
                g = 0
                for e in iv:
                    g = gcd_int(g, abs(e))
                iv = [e // g for e in iv]
                assert in_integer_span(basis, iv)


class TestPerpBasis:
    def test_u3_double_inclusion(self):
        basis = perp_V_basis(U3, U3_TRIPLE)
        expected = [(1, -1, 0, 0, 0, 0), (0, 0, 1, -1, 0, 0),
                    (0, 0, 0, 0, 1, -1)]
        assert len(basis) == 3
        for v in expected:
            assert in_integer_span(basis, v)
        for v in basis:
            assert in_integer_span(expected, v)

    def test_diag222_empty(self):
        assert perp_V_basis(D222, D222_TRIPLE) == []

    def test_k3_negative_definite(self):
        basis = perp_V_basis(K3, K3_TRIPLE)
        assert len(basis) == 19
        restricted = [[int(q_eval(K3, vector(a), vector(b))) for b in basis]
                      for a in basis]
        assert signature(GramLattice.from_rows(restricted)).as_tuple() == (0, 19, 0)

    def test_u3_negative_definite(self):
        basis = perp_V_basis(U3, U3_TRIPLE)
        restricted = [[int(q_eval(U3, vector(a), vector(b))) for b in basis]
                      for a in basis]
        assert signature(GramLattice.from_rows(restricted)).as_tuple() == (0, 3, 0)

    def test_saturation(self):
        for v in perp_V_basis(K3, K3_TRIPLE):
            from math import gcd
            g = 0
            for e in v:
                g = gcd(g, abs(e))
            assert g == 1


class TestTripleGramRows:
    def test_rows_reproduce_pairing_direction(self):
        rng = random.Random(12)
        rows = triple_gram_rows(U3, U3_TRIPLE)
        for _ in range(20):
            x = tuple(Fraction(rng.randint(-5, 5)) for _ in range(6))
            pair = [q_eval(U3, x, w) for w in U3_TRIPLE.vectors]
            dots = [sum(Fraction(r[i]) * x[i] for i in range(6)) for r in rows]
            # same triple up to one common positive factor
            for a in range(3):
                for b in range(3):
                    assert pair[a] * dots[b] == pair[b] * dots[a]
