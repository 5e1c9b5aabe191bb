"""Exact arithmetic in F_p, F_p[x] and the quadratic-over-F_q extension F_{q^2}.

Field elements are plain Python ints: the element with coefficient vector
(c_0, c_1, ..., c_{n-1}) over F_p (little-endian, c_k multiplies x^k) is
encoded as the base-p integer sum(c_k * p**k).  This makes the whole field
enumerable as range(p**n) and gives a stable, compact serialization (the
decimal form of the encoding).

Polynomials over F_p (``FpPoly``) are little-endian lists of residues with
no trailing zeros; [] is the zero polynomial.
"""

from __future__ import annotations

import math
from typing import Iterator, List, Sequence

# Hard bound on field size accepted by make_field.
DEFAULT_SIZE_BOUND = 2**24
# Below this size a discrete-log table pair is built so that multiplication
# and exponentiation are table lookups.
LOG_TABLE_BOUND = 2**20


class NonPrimeP(ValueError):
    """Raised when the requested characteristic is not prime."""


class SizeExceeded(ValueError):
    """Raised when a requested field or sweep exceeds the configured size bound."""


class ZeroInverse(ZeroDivisionError):
    """Raised when a negative power of zero is requested."""


def is_prime(n: int) -> bool:
    """Trial-division primality check; inputs here are desk-scale."""
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


def prime_factors(n: int) -> List[int]:
    """Distinct prime factors of n by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# FpPoly helpers (little-endian coefficient lists over F_p)
# ---------------------------------------------------------------------------

FpPoly = List[int]


def fp_trim(f: FpPoly) -> FpPoly:
    while f and f[-1] == 0:
        f.pop()
    return f


def fp_mul(f: FpPoly, g: FpPoly, p: int) -> FpPoly:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] = (out[i + j] + fi * gj) % p
    return fp_trim(out)


def fp_mod(f: FpPoly, m: FpPoly, p: int) -> FpPoly:
    """Remainder of f modulo m (m nonzero)."""
    r = [c % p for c in f]
    fp_trim(r)
    inv_lead = pow(m[-1], -1, p)
    while len(r) >= len(m):
        c = r[-1] * inv_lead % p
        if c:
            off = len(r) - len(m)
            for k in range(len(m)):
                r[off + k] = (r[off + k] - c * m[k]) % p
        r.pop()
        fp_trim(r)
    return r


def fp_mulmod(f: FpPoly, g: FpPoly, m: FpPoly, p: int) -> FpPoly:
    return fp_mod(fp_mul(f, g, p), m, p)


def fp_gcd(f: FpPoly, g: FpPoly, p: int) -> FpPoly:
    """Monic gcd over F_p via Euclid."""
    a, b = [c % p for c in f], [c % p for c in g]
    fp_trim(a)
    fp_trim(b)
    while b:
        a, b = b, fp_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _xpow_pk(k: int, m: FpPoly, p: int) -> FpPoly:
    """x^(p^k) mod m, by k successive p-th powerings."""
    r: FpPoly = [0, 1]
    for _ in range(k):
        out: FpPoly = [1]
        base, e = r, p
        while e:
            if e & 1:
                out = fp_mulmod(out, base, m, p)
            base = fp_mulmod(base, base, m, p)
            e >>= 1
        r = out
    return r


def _sub_x(f: FpPoly, p: int) -> FpPoly:
    """f(x) - x over F_p."""
    r = list(f) + [0] * max(0, 2 - len(f))
    r[1] = (r[1] - 1) % p
    return fp_trim(r)


def is_irreducible(m: FpPoly, p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial over F_p."""
    n = len(m) - 1
    if n < 1:
        return False
    if _sub_x(_xpow_pk(n, m, p), p):
        return False
    for r in prime_factors(n):
        if len(fp_gcd(_sub_x(_xpow_pk(n // r, m, p), p), m, p)) != 1:
            return False
    return True


def canonical_modulus(p: int, n: int) -> List[int]:
    """First irreducible monic degree-n polynomial over F_p.

    Candidates are ordered by the base-p integer value of their lower
    coefficient vector, so the choice is reproducible across runs.
    """
    for c in range(p**n):
        m, cc = [], c
        for _ in range(n):
            m.append(cc % p)
            cc //= p
        m.append(1)
        if is_irreducible(m, p):
            return m
    raise ValueError(f"no irreducible monic polynomial of degree {n} over F_{p}")


# ---------------------------------------------------------------------------
# The extension field F_{q^2}
# ---------------------------------------------------------------------------


class FieldCtx:
    """Immutable construction of F_{q^2} = F_p[x]/(m(x)), q = p^e, deg m = 2e.

    Elements are ints in range(q2) encoding base-p coefficient vectors.
    Identical (p, e) always yields identical contexts: the modulus is the
    canonical (first-in-enumeration) irreducible polynomial and the stored
    generator is the smallest-encoding generator of the unit group.
    """

    __slots__ = ("p", "e", "n", "q", "q2", "modulus", "generator", "_exp", "_log")

    def __init__(self, p: int, e: int, size_bound: int = DEFAULT_SIZE_BOUND):
        if not is_prime(p):
            raise NonPrimeP(f"p = {p} is not prime")
        if e < 1:
            raise ValueError("e must be >= 1")
        n = 2 * e
        q2 = p**n
        if q2 > size_bound:
            raise SizeExceeded(f"p^(2e) = {q2} exceeds the size bound {size_bound}")
        self.p = p
        self.e = e
        self.n = n
        self.q = p**e
        self.q2 = q2
        self.modulus = tuple(canonical_modulus(p, n))
        self.generator: int | None = None
        self._exp: List[int] | None = None
        self._log: List[int] | None = None
        if q2 <= LOG_TABLE_BOUND:
            self._build_tables()

    # -- construction helpers -------------------------------------------------

    def _mul_poly(self, a: int, b: int) -> int:
        """Multiplication via polynomial arithmetic (used before tables exist)."""
        fa, fb = self.to_coeffs(a), self.to_coeffs(b)
        return self.from_coeffs(fp_mulmod(list(fa), list(fb), list(self.modulus), self.p))

    def _build_tables(self) -> None:
        order = self.q2 - 1
        factors = prime_factors(order)
        for g in range(2, self.q2):
            ok = True
            for r in factors:
                x, k = 1, order // r
                b = g
                while k:
                    if k & 1:
                        x = self._mul_poly(x, b)
                    b = self._mul_poly(b, b)
                    k >>= 1
                if x == 1:
                    ok = False
                    break
            if ok:
                self.generator = g
                break
        assert self.generator is not None
        exp = [1] * order
        log = [0] * self.q2
        acc = 1
        for i in range(order):
            exp[i] = acc
            log[acc] = i
            acc = self._mul_poly(acc, self.generator)
        self._exp = exp
        self._log = log

    # -- identity / hashing ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldCtx) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self) -> int:
        return hash((self.p, self.e))

    def __repr__(self) -> str:
        return f"FieldCtx(F_{self.p}^{self.n}, q={self.q}, modulus={list(self.modulus)})"

    def descriptor(self) -> str:
        """The "p^e" text form of the base field F_q."""
        return f"{self.p}^{self.e}"

    # -- encoding --------------------------------------------------------------

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c % self.p
        return v

    def to_coeffs(self, a: int) -> tuple:
        out = []
        for _ in range(self.n):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def scalar(self, c: int) -> int:
        """The constant-polynomial element with value c mod p."""
        return c % self.p

    @property
    def one(self) -> int:
        return 1

    @property
    def zero(self) -> int:
        return 0

    def elements(self) -> Iterator[int]:
        return iter(range(self.q2))

    def units(self) -> Iterator[int]:
        return iter(range(1, self.q2))

    # -- arithmetic ------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        v, mult = 0, 1
        while a or b:
            v += (a % p + b % p) % p * mult
            a //= p
            b //= p
            mult *= p
        return v

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        v, mult = 0, 1
        while a:
            v += (p - a % p) % p * mult
            a //= p
            mult *= p
        return v

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q2 - 1)]
        return self._mul_poly(a, b)

    def pow(self, a: int, k: int) -> int:
        """a^k; negative k means the inverse power a^(k mod (q^2 - 1))."""
        if a == 0:
            if k < 0:
                raise ZeroInverse("negative power of zero")
            return 1 if k == 0 else 0
        order = self.q2 - 1
        k %= order
        if self._exp is not None:
            return self._exp[self._log[a] * k % order]
        r, b = 1, a
        while k:
            if k & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            k >>= 1
        return r

    def inv(self, a: int) -> int:
        return self.pow(a, -1)

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)


def make_field(p: int, e: int, size_bound: int = DEFAULT_SIZE_BOUND) -> FieldCtx:
    """Canonical context for F_{q^2}, q = p^e."""
    return FieldCtx(p, e, size_bound=size_bound)


def parse_field_descriptor(s: str) -> tuple:
    """Parse a "p^e" string into (p, e); bare "p" means e = 1."""
    if "^" in s:
        ps, es = s.split("^", 1)
        return int(ps), int(es)
    return int(s), 1


# ---------------------------------------------------------------------------
# Combinatorial and subfield helpers
# ---------------------------------------------------------------------------


def lucas_binom(p: int, m: int, k: int) -> int:
    """C(m, k) mod p by base-p digit products.

    Out-of-range k (k < 0 or k > m) gives 0, matching the starred convention
    of treating binomials at impossible indices as vanishing.
    """
    if k < 0 or k > m:
        return 0
    r = 1
    while m or k:
        mi, ki = m % p, k % p
        if ki > mi:
            return 0
        r = r * math.comb(mi, ki) % p
        m //= p
        k //= p
    return r


def is_primitive_cube_root(ctx: FieldCtx, y: int) -> bool:
    """True iff y^2 + y + 1 = 0 in the field."""
    return ctx.add(ctx.add(ctx.mul(y, y), y), 1) == 0


def subfield_q_members(ctx: FieldCtx) -> set:
    """The copy of F_q inside F_{q^2}: fixed points of z -> z^q."""
    q = ctx.q
    return {z for z in ctx.elements() if ctx.pow(z, q) == z or z == 0}
