from fractions import Fraction
from itertools import combinations

import pytest

from homlie import (
    LinearMap,
    ShapeError,
    build_matrix,
    determinant,
    diagonal_support,
    bidiagonal_support,
    generic_reduced_rank,
    hom_jacobi_defect,
    is_hom_lie,
    is_in_kernel,
    kernel_basis,
    make_algebra,
    nullity,
    random_algebra,
    random_linear_map,
    rank,
    restrict_columns,
    rng,
    triple_count,
)
from homlie.field import QQ
from homlie.system import product_block

from oracles import rank_fraction


def _defects_vanish(A, f):
    zero = A.zero_vector()
    return all(vec == zero for _, vec in hom_jacobi_defect(A, f))


def test_matrix_shape_counts(fp):
    for n in range(3, 8):
        A = random_algebra(n, fp, seed=50 + n)
        M = build_matrix(A)
        assert M.nrows == n * n * (n - 1) * (n - 2) // 6 == n * triple_count(n)
        assert M.ncols == n * n
        assert rank(M) + nullity(M) == n * n


def test_low_dimension_conventions(qq):
    for n in (1, 2):
        A = make_algebra(n, qq, [] if n == 1 else [(1, 2, [1, 0])])
        M = build_matrix(A)
        assert M.nrows == 0 and M.ncols == n * n
        assert determinant(M) == 1
        ok, witness = is_hom_lie(A)
        assert ok and witness is not None and not witness.is_zero()
        assert kernel_basis(M).nullity == n * n


def test_golden_matrix(named, fixtures_dir):
    M = build_matrix(named["nonhomlie4"].algebra)
    golden = [
        [int(tok) for tok in line.split()]
        for line in (fixtures_dir / "nonhomlie4_matrix.txt").read_text().splitlines()
    ]
    assert [[int(x) for x in row] for row in M.rows] == golden
    assert [int(x) for x in M.rows[0]] == [-5, -1, 3, -4, -1, 1, 1, -6, 0, 3, -3, -3, 0, 0, 0, 0]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_matrix_entry_invariant_on_random_algebra(fp, n):
    # entry (row (T,l), col (p,q)) must equal coordinate l of the product
    # block for the complementary pair of the triple
    A = random_algebra(n, fp, seed=51)
    M = build_matrix(A)
    for t, (i, j, k) in enumerate(M.triples):
        for q in range(1, n + 1):
            for p in range(1, n + 1):
                col = (q - 1) * n + (p - 1)
                if q == i:
                    expected = product_block(A, j, k, p)
                elif q == j:
                    expected = product_block(A, k, i, p)
                elif q == k:
                    expected = product_block(A, i, j, p)
                else:
                    expected = tuple([0] * n)
                assert tuple(M.rows[t * n + l][col] for l in range(n)) == tuple(expected)


def test_heisenberg_matrix_is_zero(named):
    M = build_matrix(named["heisenberg3"].algebra)
    assert M.nrows == 3 and M.ncols == 9
    assert all(x == 0 for row in M.rows for x in row)
    assert kernel_basis(M).nullity == 9


def test_cross_product_kernel_is_symmetric_maps(named):
    A = named["cross_product3"].algebra
    M = build_matrix(A)
    basis = kernel_basis(M)
    assert basis.nullity == 6
    # membership of the six elementary symmetric maps ...
    for p in range(1, 4):
        for q in range(p, 4):
            entries = {(p, q): 1, (q, p): 1} if p != q else {(p, p): 1}
            f = LinearMap.from_entries(3, QQ, entries)
            assert is_in_kernel(A, f, matrix=M)
            assert _defects_vanish(A, f)
    # ... and exclusion of an antisymmetric one
    anti = LinearMap.from_entries(3, QQ, {(1, 2): 1, (2, 1): -1})
    assert not is_in_kernel(A, anti, matrix=M)
    assert not _defects_vanish(A, anti)
    # every canonical basis map is itself symmetric
    for f in basis.maps:
        for p in range(1, 4):
            for q in range(1, 4):
                assert f.entry(p, q) == f.entry(q, p)


def test_defect_of_zero_map_vanishes(named):
    for entry in named.values():
        A = entry.algebra
        assert _defects_vanish(A, LinearMap.zero(A.dim, A.field))


def test_defect_of_identity_detects_lie(named):
    for entry in named.values():
        A = entry.algebra
        ident = LinearMap.identity(A.dim, A.field)
        assert _defects_vanish(A, ident) == entry.is_lie
        assert is_in_kernel(A, ident) == entry.is_lie


def test_single_entry_map_fails_on_cross_product(named):
    A = named["cross_product3"].algebra
    f = LinearMap.from_entries(3, QQ, {(2, 1): 1})
    assert not is_in_kernel(A, f)


def test_oracle_equivalence_on_randoms(fp, qq):
    s = rng.stream(52, 0)
    for t in range(60):
        n = (3, 4, 5)[t % 3]
        field = fp if t % 2 == 0 else qq
        A = random_algebra(n, field, rng.split(53, t), bound=6)
        f = random_linear_map(n, field, rng.split(54, t), bound=6)
        M = build_matrix(A)
        assert is_in_kernel(A, f, matrix=M) == _defects_vanish(A, f)
        # matrix route agrees with defects blockwise, not just on zero/nonzero
        flat = M.apply(f.flatten())
        defects = hom_jacobi_defect(A, f)
        for r, (_, vec) in enumerate(defects):
            assert tuple(flat[r * n : (r + 1) * n]) == tuple(vec)


def test_kernel_maps_all_have_zero_defect(fp):
    for t in range(20):
        A = random_algebra(3, fp, rng.split(55, t))
        M = build_matrix(A)
        basis = kernel_basis(M)
        assert basis.nullity >= 6
        for f in basis.maps:
            assert all(x == 0 for x in M.apply(f.flatten()))
            assert _defects_vanish(A, f)


def test_rank_nullity_against_fraction_oracle(qq):
    for t in range(10):
        A = random_algebra(3, qq, rng.split(56, t), bound=5)
        M = build_matrix(A)
        assert rank(M) == rank_fraction([[Fraction(x) for x in row] for row in M.rows])


def test_determinant_rejects_non_square(named):
    M = build_matrix(named["cross_product3"].algebra)
    with pytest.raises(ShapeError, match="rank"):
        determinant(M)


def test_determinant_of_lie_dim4_is_zero(named, qq):
    assert determinant(build_matrix(named["abelian4"].algebra)) == 0
    assert determinant(build_matrix(named["sl2_plus_abelian4"].algebra)) == 0


def test_dim4_determinant_criterion(named, fp):
    # is_hom_lie <=> det == 0, on catalog and random dim-4 samples
    for entry in (named["abelian4"], named["sl2_plus_abelian4"], named["nonhomlie4"]):
        M = build_matrix(entry.algebra)
        assert (determinant(M) == 0) == entry.is_hom_lie
    for t in range(25):
        A = random_algebra(4, fp, rng.split(57, t))
        M = build_matrix(A)
        assert (determinant(M) == 0) == is_hom_lie(A)[0]


def test_quadratic_homogeneity(named):
    A = named["cross_product3"].algebra
    lam = Fraction(5, 3)
    scaled = make_algebra(3, QQ, [
        (i, j, [lam * x for x in vec]) for (i, j), vec in sorted(A.constants.items())
    ])
    M, Ms = build_matrix(A), build_matrix(scaled)
    lam2 = lam * lam
    for r in range(M.nrows):
        assert Ms.rows[r] == [lam2 * x for x in M.rows[r]]
    assert kernel_basis(M).maps == kernel_basis(Ms).maps


def test_restrict_bidiagonal_matches_block_formulas(named):
    A = named["nonhomlie4"].algebra
    M = build_matrix(A)
    R = restrict_columns(M, bidiagonal_support(4))
    assert (R.nrows, R.ncols) == (16, 7)
    assert R.support == ((1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 4), (4, 4))
    # first block row carries 23.1, 31.1, 31.2, 12.2, 12.3, 0, 0
    blocks = [
        product_block(A, 2, 3, 1),
        product_block(A, 3, 1, 1),
        product_block(A, 3, 1, 2),
        product_block(A, 1, 2, 2),
        product_block(A, 1, 2, 3),
        (0, 0, 0, 0),
        (0, 0, 0, 0),
    ]
    for l in range(4):
        assert R.rows[l] == [b[l] for b in blocks]
    assert R.rank() == 7


def test_restrict_diagonal_matches_cyclic_system(named):
    A = named["nonhomlie4"].algebra
    R = restrict_columns(build_matrix(A), diagonal_support(4))
    assert (R.nrows, R.ncols) == (16, 4)
    expected = {
        0: [(2, 3, 1), (3, 1, 2), (1, 2, 3), None],
        1: [(2, 4, 1), (4, 1, 2), None, (1, 2, 4)],
        2: [(3, 4, 1), None, (4, 1, 3), (1, 3, 4)],
        3: [None, (3, 4, 2), (4, 2, 3), (2, 3, 4)],
    }
    for t, cols in expected.items():
        for c, ijk in enumerate(cols):
            want = (0, 0, 0, 0) if ijk is None else product_block(A, *ijk)
            assert tuple(R.rows[t * 4 + l][c] for l in range(4)) == tuple(want)


def test_restrict_full_support_is_whole_matrix(named):
    A = named["cross_product3"].algebra
    M = build_matrix(A)
    full = [(p, q) for p in range(1, 4) for q in range(1, 4)]
    R = restrict_columns(M, full)
    assert R.rows == M.rows


def test_restricted_solutions_extend_to_kernel(named):
    A = named["cross_product3"].algebra
    M = build_matrix(A)
    R = restrict_columns(M, diagonal_support(3))
    # every diagonal map is a twisting map of the cross product
    assert R.rank() == 0
    for coeffs in R.kernel():
        f = R.extend(coeffs)
        assert is_in_kernel(A, f, matrix=M)


def test_restrict_rejects_bad_support(named):
    M = build_matrix(named["cross_product3"].algebra)
    with pytest.raises(ShapeError):
        restrict_columns(M, [])
    with pytest.raises(ShapeError):
        restrict_columns(M, [(0, 1)])
    with pytest.raises(ShapeError):
        restrict_columns(M, [(1, 4)])


def test_generic_reduced_rank_is_deterministic(fp):
    h1 = generic_reduced_rank(20, fp, seed=58)
    h2 = generic_reduced_rank(20, fp, seed=58)
    assert h1 == h2
    assert sum(h1.values()) == 20


def test_reduced_rank_of_abelian_is_zero(qq):
    A = make_algebra(4, qq, [])
    R = restrict_columns(build_matrix(A), bidiagonal_support(4))
    assert R.rank() == 0


def test_is_hom_lie_examples(named, fp):
    ok, witness = is_hom_lie(named["nonhomlie4"].algebra)
    assert not ok and witness is None
    for t in range(10):
        A = random_algebra(3, fp, rng.split(59, t))
        ok, witness = is_hom_lie(A)
        assert ok and not witness.is_zero()
        assert is_in_kernel(A, witness)


def test_witness_of_lie_algebra_exists(named):
    for name in ("abelian4", "heisenberg3", "cross_product3", "sl2_plus_abelian4"):
        ok, witness = is_hom_lie(named[name].algebra)
        assert ok and witness is not None and not witness.is_zero()
