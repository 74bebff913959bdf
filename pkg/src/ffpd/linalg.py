"""Dense exact matrices over a finite field.

Everything here is exact: determinants and inverses use Gaussian elimination
with row swaps, while LDU/Cholesky use swap-free Doolittle elimination (the
swap-free discipline is what makes the factorization line up with graph
pressing).  Matrices are immutable; operations return new values.

Positive definiteness follows the finite-field convention: a symmetric matrix
over a definite field is positive definite when it has a Cholesky
factorization A = L L^T with positive diagonal.  The leading-minors test is
the canonical predicate; `cholesky` is the constructive witness.  A relaxed
variant `cholesky_psd` accepts a trailing all-zero Schur complement (needed
for pressing sequences that end on an already-empty graph).
"""

from __future__ import annotations

from typing import NamedTuple

from . import gf
from .gf import Elem, Field, FieldMismatch


class LinalgError(Exception):
    pass


class DimensionMismatch(LinalgError):
    pass


class NotSquare(LinalgError):
    pass


class NotSymmetric(LinalgError):
    pass


class NonDefiniteField(LinalgError):
    pass


class Singular(LinalgError):
    pass


class IndexOutOfRange(LinalgError):
    pass


class SearchSpaceTooLarge(LinalgError):
    pass


class ZeroPivot(LinalgError):
    """Swap-free elimination hit a singular leading principal minor."""

    def __init__(self, k: int):
        super().__init__(f"zero pivot at position {k}")
        self.k = k


class NotPositiveDefinite(LinalgError):
    """Cholesky failed; k is the 1-based index of the first bad pivot."""

    def __init__(self, k: int, reason: str = "non-positive pivot"):
        super().__init__(f"{reason} at position {k}")
        self.k = k


class Mat:
    """Immutable dense matrix over one Field, row-major."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows):
        rows = tuple(tuple(field(e) for e in row) for row in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch("ragged rows")
        self.field = field
        self.rows = rows

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, n: int, m=None) -> "Mat":
        m = n if m is None else m
        zero = field.zero()
        return cls(field, [[zero] * m for _ in range(n)])

    @classmethod
    def exchange(cls, field: Field, n: int) -> "Mat":
        """Ones on the antidiagonal: entry (i, j) is 1 iff i + j = n + 1 (1-based)."""
        one, zero = field.one(), field.zero()
        return cls(
            field, [[one if i + j == n - 1 else zero for j in range(n)] for i in range(n)]
        )

    def __getitem__(self, ij) -> Elem:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        body = "; ".join("[" + ", ".join(map(repr, r)) + "]" for r in self.rows)
        return f"Mat({self.field.literal()}, [{body}])"

    def _check_same_field(self, other: "Mat"):
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same_field(other)
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise DimensionMismatch("shape mismatch in add")
        return Mat(
            self.field,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
        )

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same_field(other)
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise DimensionMismatch("shape mismatch in sub")
        return Mat(
            self.field,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
        )

    def __mul__(self, other: "Mat") -> "Mat":
        self._check_same_field(other)
        if self.n_cols != other.n_rows:
            raise DimensionMismatch("inner dimensions differ in mul")
        cols = list(zip(*other.rows)) if other.rows else []
        zero = self.field.zero()
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return Mat(self.field, out)

    def transpose(self) -> "Mat":
        return Mat(self.field, list(zip(*self.rows)) if self.rows else [])

    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        n = self.n_rows
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i))

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.rows for e in row)

    def is_lower_triangular(self) -> bool:
        return all(
            self.rows[i][j].is_zero()
            for i in range(self.n_rows)
            for j in range(i + 1, self.n_cols)
        )

    # -- JSON wire format ----------------------------------------------------

    def to_json(self) -> dict:
        """Canonical JSON shape: {"field": literal, "rows": [[e, ...], ...]}."""
        return {
            "field": self.field.literal(),
            "rows": [[e.to_json() for e in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Mat":
        field = Field.parse(obj["field"])
        return cls(field, obj["rows"])


class LduResult(NamedTuple):
    L: Mat
    D: Mat
    U: Mat


def det(A: Mat) -> Elem:
    """Determinant via Gaussian elimination with partial pivoting (row swaps tracked)."""
    if not A.is_square():
        raise NotSquare("det requires a square matrix")
    n = A.n_rows
    F = A.field
    if n == 0:
        return F.one()
    m = [list(r) for r in A.rows]
    result = F.one()
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if not m[r][k].is_zero()), None)
        if pivot_row is None:
            return F.zero()
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            result = -result
        pivot = m[k][k]
        result = result * pivot
        inv = pivot.inverse()
        for r in range(k + 1, n):
            factor = m[r][k] * inv
            if not factor.is_zero():
                for c in range(k, n):
                    m[r][c] = m[r][c] - factor * m[k][c]
    return result


def leading_minors(A: Mat) -> list:
    """[det(A_1), ..., det(A_n)] for the leading principal submatrices."""
    if not A.is_square():
        raise NotSquare("leading_minors requires a square matrix")
    return [
        det(Mat(A.field, [row[: k + 1] for row in A.rows[: k + 1]]))
        for k in range(A.n_rows)
    ]


def ldu(A: Mat) -> LduResult:
    """Swap-free Doolittle factorization A = L D U, unit triangular L and U.

    Raises ZeroPivot(k) when the k-th pivot d_kk = det(A_k)/det(A_{k-1})
    vanishes, i.e. when some leading principal minor is singular.
    """
    if not A.is_square():
        raise NotSquare("ldu requires a square matrix")
    n = A.n_rows
    F = A.field
    m = [list(r) for r in A.rows]
    L = [[F.one() if i == j else F.zero() for j in range(n)] for i in range(n)]
    d = []
    for k in range(n):
        pivot = m[k][k]
        if pivot.is_zero():
            raise ZeroPivot(k + 1)
        d.append(pivot)
        inv = pivot.inverse()
        for r in range(k + 1, n):
            factor = m[r][k] * inv
            L[r][k] = factor
            if not factor.is_zero():
                for c in range(k, n):
                    m[r][c] = m[r][c] - factor * m[k][c]
    zero = F.zero()
    D = Mat(F, [[d[i] if i == j else zero for j in range(n)] for i in range(n)])
    U = Mat(F, [[m[i][j] * d[i].inverse() if j >= i else zero for j in range(n)] for i in range(n)])
    Lm = Mat(F, L)
    if A.is_symmetric():
        assert U == Lm.transpose(), "symmetric input must give U = L^T"
    return LduResult(Lm, D, U)


def _require_pd_input(A: Mat, op: str):
    if not A.is_square():
        raise NotSquare(f"{op} requires a square matrix")
    if not A.is_symmetric():
        raise NotSymmetric(f"{op} requires a symmetric matrix")
    if not gf.is_definite(A.field):
        raise NonDefiniteField(f"{op} requires a definite field, got {A.field.literal()}")


def cholesky(A: Mat) -> Mat:
    """Strict Cholesky: lower-triangular L with positive diagonal, A = L L^T.

    Succeeds exactly when A is positive definite; raises NotPositiveDefinite
    with the 1-based index of the first pivot that is zero or non-positive.
    """
    _require_pd_input(A, "cholesky")
    try:
        L, D, _U = ldu(A)
    except ZeroPivot as e:
        raise NotPositiveDefinite(e.k, "zero pivot") from e
    return _scale_by_sqrt_pivots(L, [D[i, i] for i in range(A.n_rows)])


def cholesky_psd(A: Mat) -> Mat:
    """Relaxed Cholesky: elimination with positive pivots, allowing the tail.

    When a zero pivot is met and the whole remaining Schur complement is zero,
    the remaining factor columns are zero (so L may have zeros on its trailing
    diagonal).  Any other pivot failure raises NotPositiveDefinite.
    """
    _require_pd_input(A, "cholesky_psd")
    n = A.n_rows
    F = A.field
    m = [list(r) for r in A.rows]
    L = [[F.one() if i == j else F.zero() for j in range(n)] for i in range(n)]
    pivots = []
    for k in range(n):
        pivot = m[k][k]
        if pivot.is_zero():
            remaining_zero = all(
                m[r][c].is_zero() for r in range(k, n) for c in range(k, n)
            )
            if not remaining_zero:
                raise NotPositiveDefinite(k + 1, "zero pivot with nonzero remainder")
            # already-empty tail: zero columns, zero diagonal
            for r in range(k, n):
                for c in range(k, n):
                    L[r][c] = F.zero()
            pivots.extend([F.zero()] * (n - k))
            break
        if not gf.is_positive(pivot):
            raise NotPositiveDefinite(k + 1)
        pivots.append(pivot)
        inv = pivot.inverse()
        for r in range(k + 1, n):
            factor = m[r][k] * inv
            L[r][k] = factor
            if not factor.is_zero():
                for c in range(k, n):
                    m[r][c] = m[r][c] - factor * m[k][c]
    return _scale_by_sqrt_pivots(Mat(F, L), pivots)


def _scale_by_sqrt_pivots(L: Mat, pivots) -> Mat:
    """L * sqrt(D) with the positive square root of each pivot; zero stays zero."""
    F = L.field
    roots = []
    for k, d in enumerate(pivots):
        if d.is_zero():
            roots.append(F.zero())
            continue
        root = gf.positive_sqrt(d)
        if root is None:
            raise NotPositiveDefinite(k + 1)
        roots.append(root)
    n = L.n_rows
    return Mat(F, [[L[i, j] * roots[j] for j in range(n)] for i in range(n)])


def is_positive_definite(A: Mat, relaxed: bool = False) -> bool:
    """Leading-minors positivity test; `relaxed` accepts an all-zero tail."""
    _require_pd_input(A, "is_positive_definite")
    if relaxed:
        try:
            cholesky_psd(A)
            return True
        except NotPositiveDefinite:
            return False
    return all(gf.is_positive(mi) for mi in leading_minors(A))


def inverse(A: Mat) -> Mat:
    """Exact inverse by Gauss-Jordan elimination (row swaps permitted)."""
    if not A.is_square():
        raise NotSquare("inverse requires a square matrix")
    n = A.n_rows
    F = A.field
    m = [list(r) + list(i) for r, i in zip(A.rows, Mat.identity(F, n).rows)]
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if not m[r][k].is_zero()), None)
        if pivot_row is None:
            raise Singular("matrix is not invertible")
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
        inv = m[k][k].inverse()
        m[k] = [e * inv for e in m[k]]
        for r in range(n):
            if r != k and not m[r][k].is_zero():
                factor = m[r][k]
                m[r] = [a - factor * b for a, b in zip(m[r], m[k])]
    return Mat(F, [row[n:] for row in m])


def anti_inverse(A: Mat) -> Mat:
    """Exchange-conjugated inverse: nabla A^-1 nabla (PD-preserving on PD input)."""
    nabla = Mat.exchange(A.field, A.n_rows)
    return nabla * inverse(A) * nabla


def scalar_mul(r: Elem, A: Mat) -> Mat:
    if r.field != A.field:
        raise FieldMismatch("scalar from a different field")
    return Mat(A.field, [[r * e for e in row] for row in A.rows])


def kronecker(A: Mat, B: Mat) -> Mat:
    A._check_same_field(B)
    out = []
    for arow in A.rows:
        for brow in B.rows:
            out.append([a * b for a in arow for b in brow])
    return Mat(A.field, out)


def hadamard(A: Mat, B: Mat) -> Mat:
    A._check_same_field(B)
    if (A.n_rows, A.n_cols) != (B.n_rows, B.n_cols):
        raise DimensionMismatch("hadamard requires equal shapes")
    return Mat(
        A.field, [[a * b for a, b in zip(r1, r2)] for r1, r2 in zip(A.rows, B.rows)]
    )


def frobenius_inner(A: Mat, B: Mat) -> Elem:
    A._check_same_field(B)
    if (A.n_rows, A.n_cols) != (B.n_rows, B.n_cols):
        raise DimensionMismatch("frobenius_inner requires equal shapes")
    acc = A.field.zero()
    for r1, r2 in zip(A.rows, B.rows):
        for a, b in zip(r1, r2):
            acc = acc + a * b
    return acc


def char_poly(A: Mat) -> list:
    """Coefficients of det(xI - A), ascending degree, via the Berkowitz recurrence.

    Division-free, so it is valid in any characteristic (Leverrier-style
    methods divide by integers that vanish mod p).
    """
    if not A.is_square():
        raise NotSquare("char_poly requires a square matrix")
    n = A.n_rows
    F = A.field
    if n == 0:
        return [F.one()]
    # vect holds descending coefficients for the leading principal submatrices
    vect = [F.one(), -A[0, 0]]
    for i in range(1, n):
        # A_{i+1} partitioned into M (i x i), row R, column C, corner a
        R = [A[i, j] for j in range(i)]
        C = [A[j, i] for j in range(i)]
        a = A[i, i]
        terms = [F.one(), -a]
        v = C
        for _ in range(i):
            dot = F.zero()
            for r, x in zip(R, v):
                dot = dot + r * x
            terms.append(-dot)
            v = [
                sum((A[r, c] * v[c] for c in range(1, i)), A[r, 0] * v[0])
                for r in range(i)
            ]
        new = []
        for row in range(i + 2):
            acc = F.zero()
            for col in range(min(row, i) + 1):
                if row - col < len(terms):
                    acc = acc + terms[row - col] * vect[col]
            new.append(acc)
        vect = new
    return list(reversed(vect))


def eigenvalues_in_field(A: Mat) -> list:
    """Roots of char_poly lying in the base field, with multiplicity.

    Returned sorted by canonical element order.  Extension-field roots are
    out of scope; this mirrors only what an exhaustive in-field scan sees.
    """
    coeffs = char_poly(A)
    F = A.field
    out = []
    for lam in F.elements():
        rem = coeffs
        while len(rem) > 1:
            quotient, r = _synth_div(rem, lam, F)
            if not r.is_zero():
                break
            out.append(lam)
            rem = quotient
    return out


def _synth_div(coeffs, lam, F):
    """Divide an ascending-coefficient poly by (x - lam); returns (quotient, remainder)."""
    desc = list(reversed(coeffs))
    q = []
    acc = F.zero()
    for c in desc:
        acc = acc * lam + c
        q.append(acc)
    rem = q.pop()
    return list(reversed(q)), rem


def gram_from(B: Mat) -> Mat:
    """B^T B for B with linearly independent columns."""
    if not B.is_square():
        raise NotSquare("gram_from requires a square factor")
    if det(B).is_zero():
        raise Singular("gram factor must have independent columns")
    return B.transpose() * B


def is_gram(A: Mat) -> bool:
    """Gram matrices over a definite field are exactly the positive definite ones."""
    return is_positive_definite(A)


def isotropic_vector(A: Mat, limit: int = 10**7):
    """First nonzero v (in scan order) with v^T A v = 0, or None.

    Scan order counts vectors as base-q integers with coordinate 0 the least
    significant digit, so results are reproducible.  Guaranteed to find one
    when n >= 3 (Chevalley); may be None for n <= 2.
    """
    if not A.is_square():
        raise NotSquare("isotropic_vector requires a square matrix")
    n = A.n_rows
    F = A.field
    total = F.q**n
    if total - 1 > limit:
        raise SearchSpaceTooLarge(f"{total - 1} candidate vectors exceeds limit {limit}")
    for idx in range(1, total):
        digits = []
        t = idx
        for _ in range(n):
            digits.append(t % F.q)
            t //= F.q
        v = [F.from_index(d) for d in digits]
        acc = F.zero()
        for i in range(n):
            row_acc = F.zero()
            for j in range(n):
                row_acc = row_acc + A[i, j] * v[j]
            acc = acc + v[i] * row_acc
        if acc.is_zero():
            return v
    return None


def principal_submatrix(A: Mat, drop) -> Mat:
    """Remove the 1-based rows/columns in `drop`, preserving order."""
    if not A.is_square():
        raise NotSquare("principal_submatrix requires a square matrix")
    n = A.n_rows
    drop = set(drop)
    if any(not isinstance(i, int) or i < 1 or i > n for i in drop):
        raise IndexOutOfRange(f"drop indices must lie in 1..{n}")
    keep = [i for i in range(n) if i + 1 not in drop]
    return Mat(A.field, [[A.rows[i][j] for j in keep] for i in keep])
