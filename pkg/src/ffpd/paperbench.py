"""One-command verification battery.

Reproduces every numeric claim and small-case theorem check the library is
built around: the counterexample gallery over GF(2)/GF(3)/GF(7), the
definite-field classification up to q = 729, the exhaustive equivalences
between the minors test, Cholesky success and Gram membership, the pressing
correspondence, and the randomized product/anti-inverse batteries.

Checks are pure functions returning CheckReport values; failures are
reported, never raised, so a run always produces a full table.  Randomized
suites take an explicit seed (default 2022) recorded in the report.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass

from . import gf, linalg, pressing
from .gf import Field
from .linalg import Mat

DEFAULT_SEED = 2022
DEFAULT_Q_MAX = 729
DEFAULT_N_MAX = 3


class LimitExceeded(Exception):
    pass


@dataclass
class CheckReport:
    name: str
    paper_anchor: str
    status: str  # "Pass" | "Fail"
    details: str

    @property
    def passed(self) -> bool:
        return self.status == "Pass"


def _report(name, anchor, ok, details):
    return CheckReport(name, anchor, "Pass" if ok else "Fail", details)


def _mat(field_literal, rows) -> Mat:
    return Mat(Field.parse(field_literal), rows)


def _eigs(A):
    return sorted(e.index for e in linalg.eigenvalues_in_field(A))


# ---------------------------------------------------------------------------
# Counterexample gallery
# ---------------------------------------------------------------------------


def verify_counterexamples() -> list:
    """Each classical Hermitian-PD property with its finite-field refutation."""
    reports = []
    F7 = Field(7)
    F3 = Field(3)
    F2 = Field(2)

    # 1. PD does not imply positive eigenvalues, nor conversely.
    A = _mat("GF(7)", [[2, 4], [4, 2]])
    reports.append(
        _report(
            "eigenvalues-not-positive-gf7",
            "counterexample 1 (GF(7) 2x2)",
            linalg.is_positive_definite(A) and _eigs(A) == [5, 6],
            f"PD={linalg.is_positive_definite(A)}, eigenvalues={_eigs(A)} expected [5, 6]",
        )
    )
    B = _mat("GF(3)", [[1, 0, 2], [0, 1, 1], [2, 1, 0]])
    reports.append(
        _report(
            "eigenvalues-not-positive-gf3",
            "counterexample 1 (GF(3) 3x3)",
            linalg.is_positive_definite(B) and _eigs(B) == [1, 2, 2],
            f"PD={linalg.is_positive_definite(B)}, eigenvalues={_eigs(B)} expected [1, 2, 2]",
        )
    )
    C = _mat("GF(7)", [[6, 6], [6, 4]])
    c_eigs = _eigs(C)
    c_ok = (
        not linalg.is_positive_definite(C)
        and c_eigs == [1, 2]
        and all(gf.is_positive(F7(v)) for v in c_eigs)
    )
    reports.append(
        _report(
            "positive-eigenvalues-not-pd",
            "counterexample 1 converse (GF(7) 2x2)",
            c_ok,
            f"PD={linalg.is_positive_definite(C)}, eigenvalues={c_eigs} expected [1, 2]",
        )
    )

    # 2. The bilinear form is isotropic for n >= 3, so it is never an inner product.
    v = linalg.isotropic_vector(A_pd3 := _mat("GF(3)", [[1, 2, 0], [2, 2, 0], [0, 0, 1]]))
    ok2 = (
        linalg.is_positive_definite(A_pd3)
        and v is not None
        and not all(e.is_zero() for e in v)
    )
    reports.append(
        _report(
            "inner-product-fails",
            "counterexample 2 / isotropy for n >= 3",
            ok2,
            f"isotropic vector {v} for a PD 3x3 over GF(3)",
        )
    )

    # 3. Principal submatrices of a PD matrix need not be PD.
    sub3 = linalg.principal_submatrix(A_pd3, {1})
    ok3a = linalg.is_positive_definite(A_pd3) and not linalg.is_positive_definite(sub3)
    A2 = _mat("GF(2)", [[1, 1, 0], [1, 0, 0], [0, 0, 1]])
    sub2 = linalg.principal_submatrix(A2, {1})
    ok3b = (
        linalg.is_positive_definite(A2)
        and sub2 == _mat("GF(2)", [[0, 0], [0, 1]])
        and not linalg.is_positive_definite(sub2)
    )
    reports.append(
        _report(
            "submatrix-not-pd",
            "counterexample 3 (GF(3) and GF(2))",
            ok3a and ok3b,
            f"GF(3) drop-1 submatrix PD={linalg.is_positive_definite(sub3)}; "
            f"GF(2) drop-1 submatrix PD={linalg.is_positive_definite(sub2)}",
        )
    )

    # 4. Inverses of PD matrices need not be PD (exact printed inverses).
    inv3 = linalg.inverse(A_pd3)
    expect_inv3 = _mat("GF(3)", [[2, 1, 0], [1, 1, 0], [0, 0, 1]])
    A2b = _mat("GF(2)", [[1, 1, 1], [1, 0, 0], [1, 0, 1]])
    inv2 = linalg.inverse(A2b)
    expect_inv2 = _mat("GF(2)", [[0, 1, 0], [1, 0, 1], [0, 1, 1]])
    ok4 = (
        inv3 == expect_inv3
        and not linalg.is_positive_definite(inv3)
        and linalg.is_positive_definite(A2b)
        and inv2 == expect_inv2
        and not linalg.is_positive_definite(inv2)
    )
    reports.append(
        _report(
            "inverse-not-pd",
            "counterexample 4 (GF(3) and GF(2) inverses)",
            ok4,
            f"GF(3) inverse match={inv3 == expect_inv3}, "
            f"GF(2) inverse match={inv2 == expect_inv2}",
        )
    )

    # 5. Sums: I + I = 0 over GF(2).
    I3 = Mat.identity(F2, 3)
    ok5 = (I3 + I3).is_zero() and linalg.is_positive_definite(I3)
    reports.append(
        _report(
            "sum-not-pd",
            "counterexample 5 (GF(2) identity sum)",
            ok5,
            "I + I over GF(2) is the zero matrix",
        )
    )

    # 6. ABA need not be PD.
    A6 = _mat("GF(7)", [[2, 1], [1, 5]])
    B6 = _mat("GF(7)", [[4, 3], [3, 6]])
    aba = A6 * B6 * A6
    ok6a = (
        linalg.is_positive_definite(A6)
        and linalg.is_positive_definite(B6)
        and aba == _mat("GF(7)", [[6, 1], [1, 2]])
        and not linalg.is_positive_definite(aba)
    )
    A6b = _mat("GF(2)", [[1, 0, 1], [0, 1, 0], [1, 0, 0]])
    B6b = _mat("GF(2)", [[1, 0, 1], [0, 1, 1], [1, 1, 1]])
    aba2 = A6b * B6b * A6b
    ok6b = (
        linalg.is_positive_definite(A6b)
        and linalg.is_positive_definite(B6b)
        and aba2 == _mat("GF(2)", [[0, 1, 0], [1, 1, 0], [0, 0, 1]])
        and not linalg.is_positive_definite(aba2)
    )
    reports.append(
        _report(
            "aba-not-pd",
            "counterexample 6 (GF(7) and GF(2))",
            ok6a and ok6b,
            f"GF(7) ABA={aba.to_json()['rows']} expected [[6,1],[1,2]]",
        )
    )

    # 7. Hadamard and Frobenius products.
    A7 = _mat("GF(7)", [[1, 4], [4, 3]])
    B7 = _mat("GF(7)", [[2, 2], [2, 3]])
    had = linalg.hadamard(A7, B7)
    frob = linalg.frobenius_inner(A7, B7)
    ok7a = (
        linalg.is_positive_definite(A7)
        and linalg.is_positive_definite(B7)
        and had == _mat("GF(7)", [[2, 1], [1, 2]])
        and linalg.det(had) == F7(3)
        and not gf.is_positive(linalg.det(had))
        and frob == F7(6)
        and not gf.is_positive(frob)
    )
    A7b = _mat("GF(2)", [[1, 1, 0], [1, 0, 1], [0, 1, 0]])
    B7b = _mat("GF(2)", [[1, 0, 1], [0, 1, 1], [1, 1, 1]])
    had2 = linalg.hadamard(A7b, B7b)
    ok7b = (
        linalg.is_positive_definite(A7b)
        and linalg.is_positive_definite(B7b)
        and had2 == _mat("GF(2)", [[1, 0, 0], [0, 0, 1], [0, 1, 0]])
        and not linalg.is_positive_definite(had2)
    )
    A7c = _mat("GF(2)", [[1, 0, 0], [0, 1, 1], [0, 1, 0]])
    B7c = _mat("GF(2)", [[1, 0, 1], [0, 1, 0], [1, 0, 0]])
    ok7c = (
        linalg.is_positive_definite(A7c)
        and linalg.is_positive_definite(B7c)
        and linalg.frobenius_inner(A7c, B7c).is_zero()
    )
    reports.append(
        _report(
            "hadamard-frobenius-not-positive",
            "counterexample 7 (GF(7) det 3, Frobenius 6; GF(2) pairs)",
            ok7a and ok7b and ok7c,
            f"Hadamard det={linalg.det(had)} expected 3; Frobenius={frob} expected 6",
        )
    )
    return reports


# ---------------------------------------------------------------------------
# Exhaustive / randomized theorem suites
# ---------------------------------------------------------------------------


def prime_powers_up_to(q_max: int):
    out = []
    for p in range(2, q_max + 1):
        if not gf.is_prime(p):
            continue
        q, k = p, 1
        while q <= q_max:
            out.append((p, k, q))
            q *= p
            k += 1
    return sorted(out, key=lambda t: t[2])


def brute_force_is_definite(F: Field) -> bool:
    """Oracle: every positive element has a positive square root (full square table)."""
    squares = {}
    for x in F.elements():
        if x.is_zero():
            continue
        squares.setdefault(x * x, []).append(x)
    pos = set(squares)
    return all(any(mu in pos for mu in squares.get(y, [])) for y in pos)


def check_classification(q_max: int) -> CheckReport:
    bad = []
    for p, k, q in prime_powers_up_to(q_max):
        F = Field(p, k)
        if brute_force_is_definite(F) != gf.is_definite(F):
            bad.append(q)
    return _report(
        "definite-field-classification",
        f"closed-form classification, q <= {q_max}",
        not bad,
        f"checked {len(prime_powers_up_to(q_max))} prime powers; mismatches: {bad}",
    )


def symmetric_matrices(F: Field, n: int):
    """All symmetric n x n matrices over F, deterministic order."""
    slots = n * (n + 1) // 2
    for combo in itertools.product(range(F.q), repeat=slots):
        it = iter(combo)
        rows = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                e = F.from_index(next(it))
                rows[i][j] = rows[j][i] = e
        yield Mat(F, rows)


def all_matrices(F: Field, n: int):
    for combo in itertools.product(range(F.q), repeat=n * n):
        yield Mat(F, [[F.from_index(c) for c in combo[i * n : (i + 1) * n]] for i in range(n)])


def _strict_cholesky_ok(A: Mat) -> bool:
    try:
        linalg.cholesky(A)
        return True
    except linalg.NotPositiveDefinite:
        return False


def brute_gram_set(F: Field, n: int) -> set:
    """{B^T B : det B != 0} by exhaustive enumeration of the factor B."""
    out = set()
    for B in all_matrices(F, n):
        if not linalg.det(B).is_zero():
            out.add(linalg.gram_from(B))
    return out


def check_pd_equivalence(field_literal: str, n: int) -> CheckReport:
    """minors test == strict Cholesky success, and PD => Gram, exhaustively."""
    F = Field.parse(field_literal)
    gram_set = brute_gram_set(F, n)
    mismatches = 0
    checked = 0
    for A in symmetric_matrices(F, n):
        checked += 1
        pd = linalg.is_positive_definite(A)
        if pd != _strict_cholesky_ok(A) or (pd and A not in gram_set):
            mismatches += 1
    return _report(
        f"pd-equivalence-{field_literal}-n{n}",
        "minors <=> Cholesky, and PD => Gram, exhaustive",
        mismatches == 0,
        f"{checked} symmetric matrices over {field_literal}, {mismatches} mismatches",
    )


def check_gram_set_equality(field_literal: str, n: int) -> CheckReport:
    """Claimed equivalence: {B^T B : det B != 0} equals the PD set.

    Only the PD => Gram direction is a theorem.  The converse is refuted by
    explicit counterexamples ([[0,1],[1,1]] = B^T B over GF(2) with
    B = [[1,0],[1,1]]; diag(2,2) over GF(3)), so this check reports the
    discrepancy rather than passing.
    """
    F = Field.parse(field_literal)
    gram_set = brute_gram_set(F, n)
    pd_set = {A for A in symmetric_matrices(F, n) if linalg.is_positive_definite(A)}
    extra = gram_set - pd_set
    missing = pd_set - gram_set
    return _report(
        f"gram-set-equality-{field_literal}-n{n}",
        "Gram set == PD set (claimed equivalence; converse is false)",
        not extra and not missing,
        f"{len(gram_set)} Grams, {len(pd_set)} PD; Gram-not-PD={len(extra)}, "
        f"PD-not-Gram={len(missing)}",
    )


def check_gram_hereditary(field_literal: str, n: int) -> CheckReport:
    """Leading submatrices of B^T B equal the Gram of the column-truncated factor."""
    F = Field.parse(field_literal)
    bad = 0
    for B in all_matrices(F, n):
        if linalg.det(B).is_zero():
            continue
        G = linalg.gram_from(B)
        for k in range(1, n + 1):
            Bk = Mat(F, [row[:k] for row in B.rows])
            Gk = Mat(F, [row[:k] for row in G.rows[:k]])
            if Bk.transpose() * Bk != Gk:
                bad += 1
    return _report(
        f"gram-hereditary-{field_literal}-n{n}",
        "leading submatrices of Gram matrices are Gram",
        bad == 0,
        f"{bad} violations over {field_literal}, n = {n}",
    )


def lower_triangular_positive(F: Field, n: int):
    """All lower-triangular matrices with positive diagonal, deterministic order."""
    pos = sorted(gf.positives(F), key=lambda e: e.index)
    diag_slots = n
    low_slots = n * (n - 1) // 2
    for dcombo in itertools.product(pos, repeat=diag_slots):
        for lcombo in itertools.product(range(F.q), repeat=low_slots):
            it = iter(lcombo)
            rows = [[F.zero()] * n for _ in range(n)]
            for i in range(n):
                rows[i][i] = dcombo[i]
                for j in range(i):
                    rows[i][j] = F.from_index(next(it))
            yield Mat(F, rows)


def check_cholesky_uniqueness(field_literal: str, n: int) -> CheckReport:
    F = Field.parse(field_literal)
    seen = {}
    collisions = 0
    for L in lower_triangular_positive(F, n):
        A = L * L.transpose()
        if A in seen and seen[A] != L:
            collisions += 1
        seen[A] = L
    return _report(
        f"cholesky-uniqueness-{field_literal}-n{n}",
        "L -> L L^T injective on positive-diagonal lower triangulars",
        collisions == 0,
        f"{len(seen)} distinct products, {collisions} collisions",
    )


def random_pd(F: Field, n: int, rng: random.Random) -> Mat:
    """Random PD matrix via a random positive-diagonal lower-triangular factor."""
    pos = sorted(gf.positives(F), key=lambda e: e.index)
    rows = [[F.zero()] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = rng.choice(pos)
        for j in range(i):
            rows[i][j] = F.from_index(rng.randrange(F.q))
    L = Mat(F, rows)
    return L * L.transpose()


def check_product_batteries(seed: int, pairs: int = 200) -> list:
    """Kronecker, anti-inverse, positive-scalar and pivot-law random batteries."""
    rng = random.Random(seed)
    reports = []
    for lit in ("GF(2)", "GF(3)", "GF(7)"):
        F = Field.parse(lit)
        pos = sorted(gf.positives(F), key=lambda e: e.index)
        kron_bad = anti_bad = scalar_bad = pivot_bad = 0
        for _ in range(pairs):
            n = rng.randint(1, 3)
            A = random_pd(F, n, rng)
            B = random_pd(F, n, rng)
            K = linalg.kronecker(A, B)
            LA = linalg.cholesky(A)
            LB = linalg.cholesky(B)
            LK = linalg.kronecker(LA, LB)
            if not linalg.is_positive_definite(K) or LK * LK.transpose() != K:
                kron_bad += 1
            if not linalg.is_positive_definite(linalg.anti_inverse(A)):
                anti_bad += 1
            r = rng.choice(pos)
            if not linalg.is_positive_definite(linalg.scalar_mul(r, A)):
                scalar_bad += 1
            L, D, _ = linalg.ldu(A)
            minors = linalg.leading_minors(A)
            prod = F.one()
            for k in range(n):
                prod = prod * D[k, k]
                if prod != minors[k]:
                    pivot_bad += 1
        reports.append(
            _report(
                f"product-battery-{lit}",
                "rA / anti-inverse / Kronecker theorems + pivot law, randomized",
                kron_bad == anti_bad == scalar_bad == pivot_bad == 0,
                f"seed={seed}, {pairs} pairs: kron={kron_bad} anti={anti_bad} "
                f"scalar={scalar_bad} pivot={pivot_bad} failures",
            )
        )
    return reports


def check_pressing_theorem(n_max: int = 4) -> CheckReport:
    """run_sequence success <=> permuted-matrix relaxed PD, exhaustive GF(2)."""
    F = Field(2)
    bad = 0
    checked = 0
    for n in range(1, n_max + 1):
        for A in symmetric_matrices(F, n):
            G = pressing.Pseudograph(A)
            for perm in itertools.permutations(range(1, n + 1)):
                checked += 1
                ran = pressing.run_sequence(G, perm).status == "success"
                thm = pressing.order_is_successful(G, list(perm))
                if ran != thm:
                    bad += 1
    return _report(
        "pressing-theorem-gf2",
        f"pressing <=> PD, exhaustive GF(2) n <= {n_max}",
        bad == 0,
        f"{checked} (matrix, order) pairs, {bad} disagreements",
    )


def check_f3_triangle() -> CheckReport:
    """The GF(3) triangle with unit loops and weight-2 edges has no order."""
    F = Field(3)
    G = pressing.Pseudograph(Mat(F, [[1, 2, 2], [2, 1, 2], [2, 2, 1]]))
    order = pressing.find_order(G)
    any_perm = any(
        pressing.order_is_successful(G, list(p))
        for p in itertools.permutations([1, 2, 3])
    )
    return _report(
        "f3-triangle-unpressable",
        "GF(3) triangle, loops 1, edges 2: no successful order",
        order is None and not any_perm,
        f"find_order={order}, any permutation successful={any_perm}",
    )


def _random_gf2_rows(n: int, rng: random.Random):
    rows = [0] * n
    for i in range(n):
        if rng.getrandbits(1):
            rows[i] |= 1 << i
        for j in range(i + 1, n):
            if rng.getrandbits(1):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return tuple(rows)


def _rows_component_ok(rows, n) -> bool:
    seen = [False] * n
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in range(n):
                if y != x and not seen[y] and (rows[x] >> y) & 1:
                    seen[y] = True
                    stack.append(y)
        if not any((rows[x] >> x) & 1 for x in comp):
            return False
    return True


def check_cooper_davis(n_exhaustive: int = 6, n_sampled: int = 7, samples: int = 10000,
                       seed: int = DEFAULT_SEED) -> CheckReport:
    """Cooper-Davis: some order exists <=> every component has a blue vertex.

    Exhaustive over all GF(2) bicolored graphs up to n_exhaustive; a seeded
    random sample at n_sampled (the n = 7 space is 2^28 graphs).
    """
    bad = 0
    checked = 0
    for n in range(1, n_exhaustive + 1):
        slots = n * (n + 1) // 2
        for bits in range(1 << slots):
            rows = [0] * n
            b = bits
            for i in range(n):
                for j in range(i, n):
                    if b & 1:
                        rows[i] |= 1 << j
                        rows[j] |= 1 << i
                    b >>= 1
            rows = tuple(rows)
            checked += 1
            found = pressing.gf2_find_order_bitmask(rows, n) is not None
            if found != _rows_component_ok(rows, n):
                bad += 1
    rng = random.Random(seed)
    for _ in range(samples):
        rows = _random_gf2_rows(n_sampled, rng)
        checked += 1
        found = pressing.gf2_find_order_bitmask(rows, n_sampled) is not None
        if found != _rows_component_ok(rows, n_sampled):
            bad += 1
    return _report(
        "cooper-davis-characterization",
        f"GF(2) component characterization, exhaustive n <= {n_exhaustive}, "
        f"{samples} samples at n = {n_sampled}",
        bad == 0,
        f"seed={seed}, {checked} graphs, {bad} disagreements",
    )


def verify_theorems(q_max: int = DEFAULT_Q_MAX, n_max: int = DEFAULT_N_MAX,
                    seed: int = DEFAULT_SEED) -> list:
    if q_max > 2048 or n_max > 4:
        raise LimitExceeded(f"limits q_max <= 2048, n_max <= 4; got {q_max}, {n_max}")
    reports = [check_classification(q_max)]
    for lit in ("GF(2)", "GF(3)"):
        reports.append(check_pd_equivalence(lit, min(n_max, 3)))
        reports.append(check_gram_set_equality(lit, min(n_max, 3)))
        reports.append(check_gram_hereditary(lit, 2))
        reports.append(check_cholesky_uniqueness(lit, min(n_max, 3)))
    reports.append(check_pd_equivalence("GF(7)", 2))
    reports.append(check_cholesky_uniqueness("GF(7)", 2))
    reports.extend(check_product_batteries(seed))
    reports.append(check_pressing_theorem())
    reports.append(check_f3_triangle())
    reports.append(check_cooper_davis(seed=seed))
    return reports


def run_all(q_max: int = DEFAULT_Q_MAX, n_max: int = DEFAULT_N_MAX,
            seed: int = DEFAULT_SEED) -> list:
    return verify_counterexamples() + verify_theorems(q_max, n_max, seed)


# ---------------------------------------------------------------------------
# Reporting
# ---------------------------------------------------------------------------


def report_text(reports) -> str:
    reports = sorted(reports, key=lambda r: r.name)
    width = max(len(r.name) for r in reports)
    lines = [
        f"{r.name:<{width}}  {r.status:<4}  {r.paper_anchor}" for r in reports
    ]
    total = sum(r.passed for r in reports)
    lines.append(f"{total}/{len(reports)} checks passed")
    return "\n".join(lines)


def report_json(reports, seed: int = DEFAULT_SEED) -> str:
    reports = sorted(reports, key=lambda r: r.name)
    return json.dumps(
        {
            "seed": seed,
            "all_passed": all(r.passed for r in reports),
            "checks": [
                {
                    "name": r.name,
                    "anchor": r.paper_anchor,
                    "status": r.status,
                    "details": r.details,
                }
                for r in reports
            ],
        },
        indent=2,
    )
