"""Exact matrix operations: determinants, factorizations, products, spectra."""

import itertools
import random

import pytest

from ffpd import gf, linalg
from ffpd.gf import Field
from ffpd.linalg import Mat


def M(lit, rows):
    return Mat(Field.parse(lit), rows)


def symmetric_matrices(F, n):
    slots = n * (n + 1) // 2
    for combo in itertools.product(range(F.q), repeat=slots):
        it = iter(combo)
        rows = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                e = F.from_index(next(it))
                rows[i][j] = rows[j][i] = e
        yield Mat(F, rows)


def random_mat(F, n, rng):
    return Mat(F, [[F.from_index(rng.randrange(F.q)) for _ in range(n)] for _ in range(n)])


# -- oracles: cofactor expansion over the field and over polynomial entries --


def det_cofactor(A):
    n = A.n_rows
    F = A.field
    if n == 0:
        return F.one()
    if n == 1:
        return A[0, 0]
    acc = F.zero()
    sign = F.one()
    for j in range(n):
        minor = Mat(F, [[A.rows[i][c] for c in range(n) if c != j] for i in range(1, n)])
        acc = acc + sign * A[0, j] * det_cofactor(minor)
        sign = -sign
    return acc


def poly_add(a, b, F):
    out = [F.zero()] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = out[i] + c
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return out


def poly_mul(a, b, F):
    out = [F.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def poly_det(rows, F):
    """Cofactor determinant of a matrix of ascending-coefficient polynomials."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = [F.zero()]
    neg = False
    for j in range(n):
        minor = [[rows[i][c] for c in range(n) if c != j] for i in range(1, n)]
        term = poly_mul(rows[0][j], poly_det(minor, F), F)
        if neg:
            term = [-c for c in term]
        acc = poly_add(acc, term, F)
        neg = not neg
    return acc


def char_poly_oracle(A):
    """det(xI - A) by polynomial-entry cofactor expansion, ascending coefficients."""
    F = A.field
    n = A.n_rows
    rows = [
        [
            [-A[i, j], F.one()] if i == j else [-A[i, j]]
            for j in range(n)
        ]
        for i in range(n)
    ]
    out = poly_det(rows, F)
    out += [F.zero()] * (n + 1 - len(out))
    return out[: n + 1]


# -- construction and basics -------------------------------------------------


def test_shapes_and_accessors():
    A = M("GF(3)", [[1, 2], [0, 1]])
    assert (A.n_rows, A.n_cols) == (2, 2)
    assert A[0, 1] == Field(3)(2)
    with pytest.raises(linalg.DimensionMismatch):
        M("GF(3)", [[1, 2], [0]])


def test_identity_zeros_exchange():
    F = Field(5)
    assert Mat.identity(F, 2) == M("GF(5)", [[1, 0], [0, 1]])
    assert Mat.zeros(F, 2).is_zero()
    assert Mat.exchange(F, 3) == M("GF(5)", [[0, 0, 1], [0, 1, 0], [1, 0, 0]])


def test_mul_add_transpose():
    A = M("GF(3)", [[1, 2], [0, 1]])
    B = M("GF(3)", [[1, 1], [1, 0]])
    assert A * B == M("GF(3)", [[0, 1], [1, 0]])
    assert A + B == M("GF(3)", [[2, 0], [1, 1]])
    assert (A * B).transpose() == B.transpose() * A.transpose()
    with pytest.raises(linalg.DimensionMismatch):
        A * M("GF(3)", [[1, 2, 0]])


def test_predicates():
    assert M("GF(2)", [[1, 1], [1, 0]]).is_symmetric()
    assert not M("GF(2)", [[1, 1], [0, 0]]).is_symmetric()
    assert M("GF(2)", [[1, 0], [1, 1]]).is_lower_triangular()
    assert not M("GF(2)", [[1, 1], [1, 1]]).is_lower_triangular()


def test_json_round_trip():
    for A in (
        M("GF(7)", [[2, 4], [4, 2]]),
        Mat(Field(3, 2), [[[1, 1], [0, 2]], [[0, 2], [1, 0]]]),
    ):
        assert Mat.from_json(A.to_json()) == A


# -- determinant and minors --------------------------------------------------


def test_det_examples():
    assert linalg.det(M("GF(5)", [[1, 2], [3, 4]])) == Field(5)(3)
    assert linalg.det(M("GF(2)", [[1, 1], [1, 1]])).is_zero()
    assert linalg.det(M("GF(7)", [])) == Field(7)(1)


def test_det_matches_cofactor_oracle():
    rng = random.Random(7)
    for lit in ("GF(2)", "GF(3)", "GF(5)", "GF(3^2)"):
        F = Field.parse(lit)
        for n in (1, 2, 3, 4):
            for _ in range(15):
                A = random_mat(F, n, rng)
                assert linalg.det(A) == det_cofactor(A)


def test_det_multiplicative():
    rng = random.Random(11)
    F = Field(5)
    for _ in range(40):
        A = random_mat(F, 3, rng)
        B = random_mat(F, 3, rng)
        assert linalg.det(A * B) == linalg.det(A) * linalg.det(B)


def test_leading_minors_example():
    A = M("GF(5)", [[2, 1], [1, 4]])
    assert linalg.leading_minors(A) == [Field(5)(2), Field(5)(2)]


# -- LDU ---------------------------------------------------------------------


def test_ldu_example():
    L, D, U = linalg.ldu(M("GF(5)", [[2, 4], [4, 4]]))
    assert L == M("GF(5)", [[1, 0], [2, 1]])
    assert D == M("GF(5)", [[2, 0], [0, 1]])
    assert U == L.transpose()


def test_ldu_zero_pivot():
    with pytest.raises(linalg.ZeroPivot) as ei:
        linalg.ldu(M("GF(2)", [[0, 1], [1, 0]]))
    assert ei.value.k == 1
    # trailing zero pivot is rejected too
    with pytest.raises(linalg.ZeroPivot) as ei:
        linalg.ldu(M("GF(2)", [[1, 1], [1, 1]]))
    assert ei.value.k == 2


def test_ldu_reconstruction_and_pivot_law():
    rng = random.Random(3)
    for lit in ("GF(2)", "GF(3)", "GF(7)"):
        F = Field.parse(lit)
        for n in (1, 2, 3, 4):
            done = 0
            while done < 15:
                A = random_mat(F, n, rng)
                try:
                    L, D, U = linalg.ldu(A)
                except linalg.ZeroPivot:
                    continue
                done += 1
                assert L * D * U == A
                assert L.is_lower_triangular() and U.transpose().is_lower_triangular()
                minors = linalg.leading_minors(A)
                prod = F.one()
                for k in range(n):
                    prod = prod * D[k, k]
                    assert prod == minors[k]


# -- Cholesky ----------------------------------------------------------------


def test_cholesky_example():
    L = linalg.cholesky(M("GF(7)", [[2, 4], [4, 2]]))
    assert L == M("GF(7)", [[4, 0], [1, 1]])
    assert L * L.transpose() == M("GF(7)", [[2, 4], [4, 2]])


def test_cholesky_failures():
    with pytest.raises(linalg.NotPositiveDefinite) as ei:
        linalg.cholesky(M("GF(3)", [[2, 0], [0, 2]]))
    assert ei.value.k == 1
    with pytest.raises(linalg.NonDefiniteField):
        linalg.cholesky(M("GF(5)", [[1, 0], [0, 1]]))
    with pytest.raises(linalg.NotSymmetric):
        linalg.cholesky(M("GF(2)", [[1, 1], [0, 1]]))


def test_cholesky_psd_zero_tail():
    A = M("GF(2)", [[1, 1], [1, 1]])
    L = linalg.cholesky_psd(A)
    assert L == M("GF(2)", [[1, 0], [1, 0]])
    assert L * L.transpose() == A
    with pytest.raises(linalg.NotPositiveDefinite):
        linalg.cholesky_psd(M("GF(2)", [[0, 1], [1, 0]]))


def test_cholesky_iff_minors_exhaustive_small():
    for lit, n in (("GF(2)", 3), ("GF(3)", 2), ("GF(7)", 2)):
        F = Field.parse(lit)
        for A in symmetric_matrices(F, n):
            minors_ok = all(gf.is_positive(m) for m in linalg.leading_minors(A))
            try:
                L = linalg.cholesky(A)
                chol_ok = True
            except linalg.NotPositiveDefinite:
                chol_ok = False
            assert minors_ok == chol_ok
            if chol_ok:
                assert L.is_lower_triangular()
                assert all(gf.is_positive(L[i, i]) for i in range(n))
                assert L * L.transpose() == A


def test_is_positive_definite_examples():
    assert linalg.is_positive_definite(M("GF(7)", [[2, 4], [4, 2]]))
    assert not linalg.is_positive_definite(M("GF(7)", [[6, 6], [6, 4]]))
    assert not linalg.is_positive_definite(M("GF(2)", [[1, 1], [1, 1]]))
    assert linalg.is_positive_definite(M("GF(2)", [[1, 1], [1, 1]]), relaxed=True)
    assert not linalg.is_positive_definite(M("GF(2)", [[0, 1], [1, 0]]), relaxed=True)


def test_cholesky_uniqueness_gf2_n2():
    # positive diagonal over GF(2) means both diagonal entries are 1
    F = Field(2)
    seen = {}
    for b in range(2):
        L = Mat(F, [[1, 0], [b, 1]])
        A = L * L.transpose()
        if A in seen:
            assert seen[A] == L
        seen[A] = L
    assert len(seen) == 2


# -- inverse and anti-inverse ------------------------------------------------


def test_inverse_examples():
    A = M("GF(3)", [[1, 2, 0], [2, 2, 0], [0, 0, 1]])
    assert linalg.inverse(A) == M("GF(3)", [[2, 1, 0], [1, 1, 0], [0, 0, 1]])
    with pytest.raises(linalg.Singular):
        linalg.inverse(M("GF(2)", [[1, 1], [1, 1]]))


def test_inverse_property():
    rng = random.Random(5)
    for lit in ("GF(2)", "GF(5)", "GF(3^2)"):
        F = Field.parse(lit)
        done = 0
        while done < 25:
            A = random_mat(F, 3, rng)
            if linalg.det(A).is_zero():
                continue
            done += 1
            assert A * linalg.inverse(A) == Mat.identity(F, 3)


def test_anti_inverse_example():
    A = M("GF(3)", [[1, 2, 0], [2, 2, 0], [0, 0, 1]])
    assert linalg.anti_inverse(A) == M("GF(3)", [[1, 0, 0], [0, 1, 1], [0, 1, 2]])


def test_anti_inverse_involution_and_pd():
    rng = random.Random(13)
    for lit in ("GF(2)", "GF(3)", "GF(7)"):
        F = Field.parse(lit)
        done = 0
        while done < 20:
            A = random_mat(F, 3, rng)
            if linalg.det(A).is_zero():
                continue
            done += 1
            assert linalg.anti_inverse(linalg.anti_inverse(A)) == A


# -- products ----------------------------------------------------------------


def test_scalar_mul():
    A = M("GF(5)", [[1, 2], [3, 4]])
    assert linalg.scalar_mul(Field(5)(2), A) == M("GF(5)", [[2, 4], [1, 3]])


def test_kronecker_example_and_mixed_product():
    A = M("GF(3)", [[1, 2], [2, 1]])
    B = M("GF(3)", [[2]])
    assert linalg.kronecker(A, B) == M("GF(3)", [[2, 1], [1, 2]])
    rng = random.Random(17)
    F = Field(5)
    for _ in range(10):
        A, B, C, D = (random_mat(F, 2, rng) for _ in range(4))
        lhs = linalg.kronecker(A, B) * linalg.kronecker(C, D)
        assert lhs == linalg.kronecker(A * C, B * D)


def test_hadamard_and_frobenius_examples():
    A = M("GF(7)", [[1, 4], [4, 3]])
    B = M("GF(7)", [[2, 2], [2, 3]])
    had = linalg.hadamard(A, B)
    assert had == M("GF(7)", [[2, 1], [1, 2]])
    assert linalg.det(had) == Field(7)(3)
    assert linalg.frobenius_inner(A, B) == Field(7)(6)


# -- spectra -----------------------------------------------------------------


def test_char_poly_example():
    # det(xI - A) for [[2,4],[4,2]] over GF(7): x^2 - 4x - 12 = x^2 + 3x + 2
    assert linalg.char_poly(M("GF(7)", [[2, 4], [4, 2]])) == [
        Field(7)(2),
        Field(7)(3),
        Field(7)(1),
    ]


def test_char_poly_matches_cofactor_oracle():
    rng = random.Random(23)
    for lit in ("GF(2)", "GF(3)", "GF(7)", "GF(3^2)"):
        F = Field.parse(lit)
        for n in (1, 2, 3):
            for _ in range(15):
                A = random_mat(F, n, rng)
                assert linalg.char_poly(A) == char_poly_oracle(A)


def test_char_poly_det_and_trace_ties():
    rng = random.Random(29)
    F = Field(7)
    for n in (1, 2, 3, 4):
        for _ in range(10):
            A = random_mat(F, n, rng)
            coeffs = linalg.char_poly(A)
            assert coeffs[-1] == F.one()
            # constant term is (-1)^n det(A)
            sign = F.one() if n % 2 == 0 else -F.one()
            assert coeffs[0] == sign * linalg.det(A)


def test_eigenvalues_examples():
    assert [e.index for e in linalg.eigenvalues_in_field(M("GF(7)", [[2, 4], [4, 2]]))] == [5, 6]
    assert [
        e.index
        for e in linalg.eigenvalues_in_field(M("GF(3)", [[1, 0, 2], [0, 1, 1], [2, 1, 0]]))
    ] == [1, 2, 2]
    assert linalg.eigenvalues_in_field(M("GF(2)", [[0, 1], [1, 0]])) == [
        Field(2)(1),
        Field(2)(1),
    ]


def test_eigenvalues_are_char_poly_roots():
    rng = random.Random(31)
    F = Field(5)
    for _ in range(20):
        A = random_mat(F, 3, rng)
        coeffs = linalg.char_poly(A)
        for lam in linalg.eigenvalues_in_field(A):
            acc = F.zero()
            for c in reversed(coeffs):
                acc = acc * lam + c
            assert acc.is_zero()


# -- gram and isotropy -------------------------------------------------------


def test_gram_from_examples():
    B = M("GF(2)", [[1, 0], [1, 1]])
    assert linalg.gram_from(B) == M("GF(2)", [[0, 1], [1, 1]])
    with pytest.raises(linalg.Singular):
        linalg.gram_from(M("GF(2)", [[1, 1], [1, 1]]))


def test_is_gram_is_the_pd_predicate():
    for A in symmetric_matrices(Field(2), 3):
        assert linalg.is_gram(A) == linalg.is_positive_definite(A)


def test_isotropic_examples():
    v = linalg.isotropic_vector(M("GF(2)", [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert [e.index for e in v] == [1, 1, 0]
    assert linalg.isotropic_vector(M("GF(3)", [[1, 0], [0, 1]])) is None


def test_isotropic_always_exists_n3():
    rng = random.Random(37)
    for lit in ("GF(2)", "GF(3)", "GF(5)"):
        F = Field.parse(lit)
        for _ in range(20):
            A = random_mat(F, 3, rng)
            A = A + A.transpose()  # symmetrize; any form works for the scan
            v = linalg.isotropic_vector(A)
            assert v is not None
            acc = F.zero()
            for i in range(3):
                for j in range(3):
                    acc = acc + v[i] * A[i, j] * v[j]
            assert acc.is_zero()


def test_isotropic_limit():
    with pytest.raises(linalg.SearchSpaceTooLarge):
        linalg.isotropic_vector(Mat.identity(Field(101), 5), limit=10**6)


def test_principal_submatrix():
    A = M("GF(3)", [[1, 2, 0], [2, 2, 0], [0, 0, 1]])
    assert linalg.principal_submatrix(A, {1}) == M("GF(3)", [[2, 0], [0, 1]])
    assert linalg.principal_submatrix(A, {2, 3}) == M("GF(3)", [[1]])
    with pytest.raises(linalg.IndexOutOfRange):
        linalg.principal_submatrix(A, {0})
