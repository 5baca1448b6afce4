import math
import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from treespec.errors import IndexOutOfRange, InexactDivision, NotMonic, NotSquare, NotSymmetric
from treespec.generators import complete_graph, cycle, path
from treespec.graph import (
    adjacency,
    delete_vertex_row_col,
    incidence_unoriented,
    laplacian,
    line_graph,
    signless_laplacian,
)
from treespec.linalg import (
    block_diagonal,
    char_poly,
    cofactor,
    det,
    integer_eigenvalues,
    principal_full_rank_submatrix_gf2,
    rank_gf2,
    root_bound,
    smith_normal_form,
    submatrix,
)
from treespec.matrix import IntMatrix, IntPolynomial


# -- independent oracles --------------------------------------------------------

def leibniz_det(m: IntMatrix) -> int:
    n = m.rows
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i, p in enumerate(perm):
            term *= m[i, p]
        total += term
    return total


def naive_rank_mod2(m: IntMatrix) -> int:
    rows = [[x % 2 for x in m.row(i)] for i in range(m.rows)]
    rank = 0
    for col in range(m.cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                rows[r] = [(a + b) % 2 for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def gcd_of_minors(m: IntMatrix, k: int) -> int:
    g = 0
    for rs in combinations(range(m.rows), k):
        for cs in combinations(range(m.cols), k):
            g = math.gcd(g, leibniz_det(submatrix(m, rs, cs)))
    return g


def int_matrices(max_n=6, lo=-5, hi=5, square=True):
    @st.composite
    def build(draw):
        r = draw(st.integers(0, max_n))
        c = r if square else draw(st.integers(0, max_n))
        entries = draw(st.lists(st.integers(lo, hi), min_size=r * c, max_size=r * c))
        return IntMatrix(r, c, tuple(entries))
    return build()


def symmetric_matrices(max_n=7, lo=-3, hi=3):
    @st.composite
    def build(draw):
        n = draw(st.integers(0, max_n))
        upper = draw(st.lists(st.integers(lo, hi), min_size=n * (n + 1) // 2,
                              max_size=n * (n + 1) // 2))
        flat = [0] * (n * n)
        k = 0
        for i in range(n):
            for j in range(i, n):
                flat[i * n + j] = flat[j * n + i] = upper[k]
                k += 1
        return IntMatrix(n, n, tuple(flat))
    return build()


# -- IntMatrix / IntPolynomial ----------------------------------------------------

class TestTypes:
    def test_matrix_basics(self):
        m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert m.shape == (2, 3)
        assert m.T.to_lists() == [[1, 4], [2, 5], [3, 6]]
        assert (m @ m.T).to_lists() == [[14, 32], [32, 77]]
        assert (2 * m - m) == m
        with pytest.raises(IndexOutOfRange):
            m[2, 0]

    def test_ragged_rows(self):
        with pytest.raises(ValueError):
            IntMatrix.from_rows([[1, 2], [3]])

    def test_polynomial_arithmetic(self):
        p = IntPolynomial.linear(1) * IntPolynomial.linear(3)
        assert p.coeffs == (3, -4, 1)
        assert p(3) == 0 and p(0) == 3
        assert str(p) == "x^2 - 4x + 3"
        assert p.descending_coefficients() == (-4, 3)
        q, r = p.divide_linear(3)
        assert q == IntPolynomial.linear(1) and r == 0

    def test_zero_polynomial(self):
        z = IntPolynomial((0, 0))
        assert z.coeffs == () and z.degree == -1 and str(z) == "0"


# -- determinant -----------------------------------------------------------------

class TestDet:
    def test_reduced_triangle_laplacian(self):
        assert det(IntMatrix.from_rows([[2, -1], [-1, 2]])) == 3

    def test_identity(self):
        assert det(IntMatrix.identity(4)) == 1

    def test_empty(self):
        assert det(IntMatrix.zeros(0)) == 1

    def test_triangle_incidence(self):
        # by hand: [[1,1,0],[1,0,1],[0,1,1]] expands to 1*(0-1) - 1*(1-0) + 0 = -2
        assert det(incidence_unoriented(cycle(3))) == -2

    def test_needs_pivoting(self):
        assert det(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1
        assert det(IntMatrix.from_rows([[0, 0], [1, 0]])) == 0

    def test_not_square(self):
        with pytest.raises(NotSquare):
            det(IntMatrix.zeros(2, 3))

    @given(int_matrices(max_n=6))
    def test_matches_leibniz(self, m):
        assert det(m) == leibniz_det(m)

    def test_large_entries(self):
        rng = random.Random(3)
        m = IntMatrix.from_rows([[rng.randint(-10**20, 10**20) for _ in range(5)] for _ in range(5)])
        assert det(m) == leibniz_det(m)


# -- characteristic polynomial -------------------------------------------------

def det_xI_minus(m: IntMatrix, x: int) -> int:
    return leibniz_det(x * IntMatrix.identity(m.rows) - m) if m.rows <= 6 else det(
        x * IntMatrix.identity(m.rows) - m)


class TestCharPoly:
    def test_path_laplacian(self):
        # eigenvalues 0, 1, 3
        assert char_poly(laplacian(path(3))) == IntPolynomial.from_high([1, -4, 3, 0])

    def test_triangle_signless(self):
        # (x - 4)(x - 1)^2
        assert char_poly(signless_laplacian(cycle(3))) == IntPolynomial.from_high([1, -6, 9, -4])

    def test_zero_matrix(self):
        assert char_poly(IntMatrix.zeros(2)) == IntPolynomial((0, 0, 1))

    def test_empty(self):
        assert char_poly(IntMatrix.zeros(0)) == IntPolynomial((1,))

    def test_not_square(self):
        with pytest.raises(NotSquare):
            char_poly(IntMatrix.zeros(1, 2))

    @given(int_matrices(max_n=6))
    def test_pointwise_against_determinants(self, m):
        p = char_poly(m)
        assert p.is_monic and p.degree == m.rows
        for x in range(-2, m.rows + 2):
            assert p(x) == det_xI_minus(m, x)

    @settings(max_examples=60)
    @given(int_matrices(max_n=8))
    def test_constant_term_is_signed_det(self, m):
        assert det(m) == (-1) ** m.rows * char_poly(m).coefficient(0)

    @settings(max_examples=40)
    @given(int_matrices(max_n=4), int_matrices(max_n=4))
    def test_block_diagonal_multiplies(self, a, b):
        assert char_poly(block_diagonal([a, b])) == char_poly(a) * char_poly(b)

    def test_inexact_division_is_an_error(self):
        from treespec.linalg import _exact_div
        with pytest.raises(InexactDivision):
            _exact_div(7, 2)

    def test_k9_line_graph(self):
        # A(L(K9)) is 36x36: eigenvalues 2*9-4=14, 9-4=5 (x8), -2 (x27)
        p = char_poly(adjacency(line_graph(complete_graph(9))))
        assert integer_eigenvalues(p).as_dict() == {14: 1, 5: 8, -2: 27}


# -- Smith normal form ------------------------------------------------------------

class TestSmith:
    def test_triangle_laplacian(self):
        snf = smith_normal_form(laplacian(cycle(3)))
        assert snf.invariant_factors == (1, 3) and snf.rank == 2

    def test_identity(self):
        assert smith_normal_form(IntMatrix.identity(4)).invariant_factors == (1, 1, 1, 1)

    def test_already_diagonal(self):
        assert smith_normal_form(IntMatrix.diagonal([2, 4])).invariant_factors == (2, 4)

    def test_needs_divisibility_fix(self):
        # diag(2, 3) ~ diag(1, 6)
        assert smith_normal_form(IntMatrix.diagonal([2, 3])).invariant_factors == (1, 6)

    def test_zero_and_empty(self):
        assert smith_normal_form(IntMatrix.zeros(3, 2)).invariant_factors == ()
        assert smith_normal_form(IntMatrix.zeros(0, 0)).invariant_factors == ()

    def test_k4_laplacian(self):
        snf = smith_normal_form(laplacian(complete_graph(4)))
        assert snf.invariant_factors == (1, 4, 4) and snf.product() == 16

    @settings(max_examples=80)
    @given(int_matrices(max_n=5, lo=-6, hi=6, square=False))
    def test_minor_gcds(self, m):
        snf = smith_normal_form(m)
        s = snf.invariant_factors
        assert all(x > 0 for x in s)
        assert all(s[i + 1] % s[i] == 0 for i in range(len(s) - 1))
        prod = 1
        for k in range(1, min(m.rows, m.cols, 3) + 1):
            expected = gcd_of_minors(m, k)
            if k <= len(s):
                prod *= s[k - 1]
                assert prod == expected
            else:
                assert expected == 0


# -- GF(2) ----------------------------------------------------------------------

class TestGF2:
    def test_line_graph_of_path(self):
        assert rank_gf2(adjacency(line_graph(path(3)))) == 2

    def test_even_matrix(self):
        assert rank_gf2(2 * IntMatrix.identity(5)) == 0

    def test_line_graph_of_k4(self):
        assert rank_gf2(adjacency(line_graph(complete_graph(4)))) == 2

    @given(int_matrices(max_n=9, lo=-3, hi=3, square=False))
    def test_matches_naive_elimination(self, m):
        assert rank_gf2(m) == naive_rank_mod2(m)

    def test_wide_rows(self):
        rng = random.Random(11)
        m = IntMatrix.from_rows([[rng.randint(0, 1) for _ in range(90)] for _ in range(40)])
        assert rank_gf2(m) == naive_rank_mod2(m)


class TestPrincipalSubmatrix:
    def test_full_rank(self):
        assert principal_full_rank_submatrix_gf2(IntMatrix.from_rows([[0, 1], [1, 0]])) == (0, 1)

    def test_rank_zero(self):
        assert principal_full_rank_submatrix_gf2(2 * IntMatrix.identity(3)) == ()

    def test_triangle_signless(self):
        q = signless_laplacian(cycle(3))
        idx = principal_full_rank_submatrix_gf2(q)
        assert len(idx) == 2
        # every 2-subset works here
        for pair in combinations(range(3), 2):
            assert rank_gf2(submatrix(q, pair, pair)) == 2

    def test_not_symmetric(self):
        with pytest.raises(NotSymmetric):
            principal_full_rank_submatrix_gf2(IntMatrix.from_rows([[0, 1], [0, 0]]))

    @given(symmetric_matrices(max_n=10))
    def test_certificate(self, m):
        idx = principal_full_rank_submatrix_gf2(m)
        r = rank_gf2(m)
        assert len(idx) == r
        assert rank_gf2(submatrix(m, idx, idx)) == r


# -- integer eigenvalues --------------------------------------------------------------

class TestIntegerEigenvalues:
    def test_triangle_signless(self):
        spec = integer_eigenvalues(IntPolynomial.from_high([1, -6, 9, -4]))
        assert spec.as_dict() == {4: 1, 1: 2}
        assert spec.residual == IntPolynomial((1,))

    def test_with_zero(self):
        spec = integer_eigenvalues(IntPolynomial.from_high([1, -4, 3, 0]))
        assert spec.as_dict() == {0: 1, 1: 1, 3: 1}

    def test_no_integer_roots(self):
        p = IntPolynomial.from_high([1, 0, -2])
        spec = integer_eigenvalues(p)
        assert spec.eigenvalues == () and spec.residual == p

    def test_not_monic(self):
        with pytest.raises(NotMonic):
            integer_eigenvalues(IntPolynomial((1, 2)))
        with pytest.raises(NotMonic):
            integer_eigenvalues(IntPolynomial(()))

    def test_constant_one(self):
        assert integer_eigenvalues(IntPolynomial((1,))).eigenvalues == ()

    @given(st.lists(st.integers(-12, 12), max_size=7),
           st.lists(st.integers(-5, 5), max_size=3))
    def test_reconstruction(self, roots, extra):
        # residual factor x^2 + c with c > 0 has no real roots at all
        p = IntPolynomial((1,))
        for r in roots:
            p = p * IntPolynomial.linear(r)
        for c in extra:
            p = p * IntPolynomial((abs(c) + 1, 0, 1))
        spec = integer_eigenvalues(p)
        assert spec.reconstruct() == p
        expected = {}
        for r in roots:
            expected[r] = expected.get(r, 0) + 1
        assert spec.as_dict() == expected
        bound = root_bound(spec.residual) + 1
        assert all(spec.residual(k) != 0 for k in range(-bound, bound + 1))

    @given(graphs(max_order=7))
    def test_graph_spectra_reconstruct(self, g):
        p = char_poly(signless_laplacian(g))
        spec = integer_eigenvalues(p)
        assert spec.reconstruct() == p
        assert sum(m for _, m in spec.eigenvalues) + spec.residual.degree == g.order


# -- submatrices ------------------------------------------------------------------------

class TestSubmatrix:
    def test_identity_block(self):
        assert submatrix(IntMatrix.identity(3), [0, 1], [0, 1]) == IntMatrix.identity(2)

    def test_triangle_incidence(self):
        x = incidence_unoriented(cycle(3))
        # edges of C3 sorted: (0,1), (0,2), (1,2); pick e01 and e12
        sub = submatrix(x, {0, 1}, {0, 2})
        assert sub.to_lists() == [[1, 0], [1, 1]] and det(sub) == 1

    def test_empty(self):
        assert submatrix(IntMatrix.identity(3), [], []).shape == (0, 0)

    def test_order_is_original(self):
        m = IntMatrix.from_rows([[1, 2], [3, 4]])
        assert submatrix(m, [1, 0], [1, 0]) == m

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            submatrix(IntMatrix.identity(3), [3], [0])

    def test_cofactor(self):
        lap = laplacian(cycle(3))
        assert {cofactor(lap, i, j) for i in range(3) for j in range(3)} == {3}


# -- interlacing ---------------------------------------------------------------------

def test_interlacing_forces_shared_even_eigenvalue(connected_n6):
    """An even eigenvalue of multiplicity mu survives in every principal
    submatrix of order n - mu + 1."""
    cases = 0
    for g in connected_n6 + [complete_graph(7), cycle(8)]:
        for m in (laplacian(g), signless_laplacian(g)):
            for lam, mu in integer_eigenvalues(char_poly(m)).eigenvalues:
                if lam % 2 or mu < 2:
                    continue
                k = m.rows - mu + 1
                for idx in combinations(range(m.rows), k):
                    assert char_poly(submatrix(m, idx, idx))(lam) == 0
                cases += 1
    assert cases > 20


def test_reduced_laplacian_determinant_k6():
    assert det(delete_vertex_row_col(laplacian(complete_graph(6)))) == 6 ** 4
