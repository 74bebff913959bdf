"""Exact arithmetic in GF(p^k), plus squares, positivity and definite-field tests.

Elements of an extension field are stored in the polynomial basis: a length-k
coefficient vector over GF(p), low degree first, reduced modulo a monic
irreducible of degree k.  When no modulus is supplied, the lexicographically
smallest monic irreducible (coefficients compared low-degree-first) is chosen,
so field construction is deterministic.

Supported bounds are desk scale: p < 2**31 (deterministic trial division) and
k <= 9 (trial-factorization irreducibility; k = 9 is needed to reach GF(512)
in the exhaustive classification suites).

Terminology: a nonzero square is called "positive"; a field where every
positive element has a positive square root is "definite".
"""

from __future__ import annotations

import re
from functools import lru_cache

MAX_PRIME = 2**31
MAX_DEGREE = 9


class FieldError(Exception):
    """Base class for field construction and arithmetic errors."""


class NotPrime(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class DegreeMismatch(FieldError):
    pass


class FieldMismatch(FieldError):
    pass


class DivisionByZero(FieldError):
    pass


class EvenOrCompositeModulus(FieldError):
    pass


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk scale)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m, coefficients mod p."""
    a = [x % p for x in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    del a[dm:]
    return a


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_divides(d, a, p):
    """True iff polynomial d divides a over GF(p)."""
    r = list(a)
    dd = len(_poly_trim(d)) - 1
    d = _poly_trim(d)
    lead_inv = pow(d[-1], p - 2, p) if d[-1] != 1 else 1
    while True:
        r = _poly_trim(r)
        if len(r) - 1 < dd:
            break
        shift = len(r) - 1 - dd
        c = (r[-1] * lead_inv) % p
        for j in range(dd + 1):
            r[shift + j] = (r[shift + j] - c * d[j]) % p
    return not _poly_trim(r)


def _is_irreducible(m, p):
    """Trial factorization: no monic divisor of degree 1..deg/2."""
    deg = len(m) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True

    def monic_polys(d):
        # all monic polynomials of degree d, low-degree-first coefficients
        def rec(i, cur):
            if i == d:
                yield cur + [1]
                return
            for c in range(p):
                yield from rec(i + 1, cur + [c])

        yield from rec(0, [])

    for d in range(1, deg // 2 + 1):
        for cand in monic_polys(d):
            if _poly_divides(cand, m, p):
                return False
    return True


@lru_cache(maxsize=None)
def _default_modulus(p: int, k: int):
    """Lexicographically smallest monic irreducible of degree k over GF(p)."""
    if k == 1:
        return (0, 1)

    def candidates(prefix):
        if len(prefix) == k:
            yield prefix + (1,)
            return
        for c in range(p):
            yield from candidates(prefix + (c,))

    for m in candidates(()):
        if _is_irreducible(list(m), p):
            return m
    raise ReducibleModulus(f"no irreducible of degree {k} over GF({p})")  # unreachable


class Field:
    """A finite field GF(p^k) with a fixed monic irreducible modulus."""

    __slots__ = ("p", "k", "modulus", "q")

    def __init__(self, p, k=1, modulus=None):
        if not isinstance(p, int) or p >= MAX_PRIME or not is_prime(p):
            raise NotPrime(f"p must be a prime below 2**31, got {p!r}")
        if not isinstance(k, int) or k < 1 or k > MAX_DEGREE:
            raise DegreeMismatch(f"k must be in 1..{MAX_DEGREE}, got {k!r}")
        if modulus is None:
            modulus = _default_modulus(p, k)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise DegreeMismatch(
                    f"modulus must be monic of degree {k}, got {modulus}"
                )
            if k > 1 and not _is_irreducible(list(modulus), p):
                raise ReducibleModulus(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.q = p**k

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"Field({self.literal()!r})"

    # -- element construction ------------------------------------------------

    def __call__(self, value) -> "Elem":
        """Coerce an int (k = 1, reduced mod p) or coefficient sequence to an Elem."""
        if isinstance(value, Elem):
            if value.field != self:
                raise FieldMismatch("element belongs to a different field")
            return value
        if isinstance(value, int):
            if self.k == 1:
                return Elem(self, (value % self.p,))
            if 0 <= value < self.p:
                return Elem(self, (value,) + (0,) * (self.k - 1))
            raise DegreeMismatch(
                f"int {value} is ambiguous in GF({self.p}^{self.k}); "
                "pass a coefficient list"
            )
        coeffs = [c % self.p for c in value]
        if len(coeffs) > self.k:
            coeffs = _poly_mod(coeffs, list(self.modulus), self.p)
        coeffs += [0] * (self.k - len(coeffs))
        return Elem(self, tuple(coeffs))

    def zero(self) -> "Elem":
        return Elem(self, (0,) * self.k)

    def one(self) -> "Elem":
        return Elem(self, (1,) + (0,) * (self.k - 1))

    def from_index(self, i: int) -> "Elem":
        """The i-th element in the canonical scan order (base-p digits, low first)."""
        if not 0 <= i < self.q:
            raise IndexError(f"index {i} out of range for a field of order {self.q}")
        coeffs = []
        for _ in range(self.k):
            coeffs.append(i % self.p)
            i //= self.p
        return Elem(self, tuple(coeffs))

    def elements(self):
        """All q elements in canonical scan order."""
        for i in range(self.q):
            yield self.from_index(i)

    # -- serialization -------------------------------------------------------

    def literal(self) -> str:
        """Canonical field literal, e.g. GF(7) or GF(3^2);modulus=1,0,1."""
        if self.k == 1:
            return f"GF({self.p})"
        mod = ",".join(str(c) for c in self.modulus)
        return f"GF({self.p}^{self.k});modulus={mod}"

    @classmethod
    def parse(cls, literal: str) -> "Field":
        m = re.fullmatch(
            r"\s*GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\)\s*(?:;\s*modulus=([\d,\s]+))?\s*",
            literal,
        )
        if not m:
            raise FieldError(f"cannot parse field literal {literal!r}")
        p = int(m.group(1))
        k = int(m.group(2)) if m.group(2) else 1
        modulus = None
        if m.group(3):
            modulus = [int(c) for c in m.group(3).split(",")]
        return cls(p, k, modulus)


class Elem:
    """An element of a Field: an immutable coefficient vector, low degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    # -- helpers -------------------------------------------------------------

    def _coerce(self, other) -> "Elem":
        if isinstance(other, Elem):
            if other.field != self.field:
                raise FieldMismatch("operands belong to different fields")
            return other
        return self.field(other)

    @property
    def index(self) -> int:
        """Position in the canonical scan order: sum of c_i * p^i."""
        i = 0
        for c in reversed(self.coeffs):
            i = i * self.field.p + c
        return i

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        p = self.field.p
        return Elem(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        other = self._coerce(other)
        p = self.field.p
        return Elem(
            self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        p = self.field.p
        return Elem(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        F = self.field
        if F.k == 1:
            return Elem(F, ((self.coeffs[0] * other.coeffs[0]) % F.p,))
        prod = _poly_mul(list(self.coeffs), list(other.coeffs), F.p)
        red = _poly_mod(prod, list(F.modulus), F.p)
        red += [0] * (F.k - len(red))
        return Elem(F, tuple(red))

    def inverse(self) -> "Elem":
        if self.is_zero():
            raise DivisionByZero("0 has no multiplicative inverse")
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __pow__(self, e: int) -> "Elem":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int) and self.field.k == 1:
            return self.coeffs[0] == other % self.field.p
        return (
            isinstance(other, Elem)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if self.field.k == 1:
            return str(self.coeffs[0])
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    # -- serialization -------------------------------------------------------

    def to_json(self):
        """int for prime fields, coefficient list for extensions."""
        if self.field.k == 1:
            return self.coeffs[0]
        return list(self.coeffs)


def field_new(p: int, k: int = 1, modulus=None) -> Field:
    """Construct and validate GF(p^k); see Field."""
    return Field(p, k, modulus)


def is_positive(x: Elem) -> bool:
    """True iff x is a nonzero square.

    In characteristic 2 squaring is an automorphism, so every nonzero element
    qualifies; in odd characteristic this is the Euler criterion generalized
    to GF(q): x^((q-1)/2) == 1.
    """
    if x.is_zero():
        return False
    F = x.field
    if F.p == 2:
        return True
    return x ** ((F.q - 1) // 2) == F.one()


def positives(F: Field) -> set:
    """The set of positive (nonzero square) elements of F."""
    return {x * x for x in F.elements() if not x.is_zero()}


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, via Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise EvenOrCompositeModulus(f"p must be an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else 1


def sqrt(x: Elem) -> set:
    """All square roots of x (a set of size 0, 1, or 2).

    char 2: the unique root x^(2^(k-1)) (inverse Frobenius).
    odd q = 3 mod 4: candidate x^((q+1)/4), kept with its negative if it works.
    other odd q: exhaustive scan; those fields are non-definite and only show
    up in counterexample checks at desk scale.
    """
    F = x.field
    if x.is_zero():
        return {F.zero()}
    if F.p == 2:
        return {x ** (2 ** (F.k - 1))}
    if F.q % 4 == 3:
        cand = x ** ((F.q + 1) // 4)
        if cand * cand == x:
            return {cand, -cand}
        return set()
    return {mu for mu in F.elements() if mu * mu == x}


def positive_sqrt(x: Elem):
    """The positive square root of x, or None if it has none."""
    for mu in sqrt(x):
        if is_positive(mu):
            return mu
    return None


def is_definite(F: Field) -> bool:
    """Closed-form classification: characteristic 2, or p = 3 (mod 4) with k odd."""
    return F.p == 2 or (F.p % 4 == 3 and F.k % 2 == 1)


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def generator(F: Field) -> Elem:
    """First element in scan order that generates the multiplicative group."""
    if F.q == 2:
        return F.one()
    order = F.q - 1
    factors = _prime_factors(order)
    for i in range(1, F.q):
        a = F.from_index(i)
        if all(a ** (order // f) != F.one() for f in factors):
            return a
    raise FieldError("no generator found; field construction is broken")
