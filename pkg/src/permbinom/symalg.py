"""Exact symbolic layer: rational/integer polynomial algebra.

Polynomials are dense little-endian coefficient lists with no trailing
zeros; [] is the zero polynomial.  QPoly holds ``fractions.Fraction``
coefficients, ZPoly plain ints (Python ints are arbitrary precision, so no
separate bignum type is needed).

The module generates the bracket polynomial B_alpha(v) (the inner sum of
the closed form of S_q(alpha, a) for alpha = 2 mod 3), extracts from it the
integer elimination polynomial g_alpha of degree 3*alpha - 1, and provides
the resultant / factorization / gcd-chain machinery consumed by the
classification pipeline.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from permbinom.ffield import fp_gcd, fp_trim

Coeff = Union[int, Fraction]


class BadAlpha(ValueError):
    """Raised when alpha is not of the form 2 mod 3, alpha >= 2."""


class NotDivisible(ArithmeticError):
    """Raised when the exact-division step of g-extraction fails."""


class FractionalResidue(ArithmeticError):
    """Raised when bracket denominators are not a pure power of 3."""


class AllZero(ValueError):
    """Raised when every polynomial of a gcd chain reduces to 0 mod p."""


# ---------------------------------------------------------------------------
# Dense polynomial helpers
# ---------------------------------------------------------------------------


def poly_trim(f: List[Coeff]) -> List[Coeff]:
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_degree(f: Sequence[Coeff]) -> int:
    return len(f) - 1


def poly_add(f: Sequence[Coeff], g: Sequence[Coeff]) -> List[Coeff]:
    out = list(f) + [0] * (len(g) - len(f)) if len(g) > len(f) else list(f)
    for i, c in enumerate(g):
        out[i] += c
    return poly_trim(out)


def poly_mul(f: Sequence[Coeff], g: Sequence[Coeff]) -> List[Coeff]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] += fi * gj
    return poly_trim(out)


def poly_scale(f: Sequence[Coeff], c: Coeff) -> List[Coeff]:
    return poly_trim([c * x for x in f])


def poly_eval(f: Sequence[Coeff], x: Coeff) -> Coeff:
    r = 0
    for c in reversed(f):
        r = r * x + c
    return r


def poly_divmod_exact(f: Sequence[Coeff], g: Sequence[Coeff]) -> List[Coeff]:
    """Quotient of f by g; raises NotDivisible unless the remainder vanishes.

    Exact over the rationals; when both inputs are integral and g is monic
    the quotient stays integral.
    """
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = poly_trim([Fraction(c) for c in f])
    quot = [Fraction(0)] * max(0, len(rem) - len(g) + 1)
    lead = Fraction(g[-1])
    while len(rem) >= len(g):
        c = rem[-1] / lead
        k = len(rem) - len(g)
        quot[k] = c
        for i, gi in enumerate(g):
            rem[k + i] -= c * gi
        rem.pop()
        poly_trim(rem)
    if rem:
        raise NotDivisible("remainder is not identically zero")
    out = poly_trim(quot)
    if all(c.denominator == 1 for c in out):
        return [int(c) for c in out]
    return out


# ---------------------------------------------------------------------------
# Generalized binomials and the bracket polynomial
# ---------------------------------------------------------------------------


def gen_binom(x: Coeff, n: int) -> Fraction:
    """Falling-factorial binomial x(x-1)...(x-n+1)/n!, exact over Q."""
    if n < 0:
        raise ValueError("n must be >= 0")
    r = Fraction(1)
    x = Fraction(x)
    for k in range(n):
        r *= x - k
    return r / math.factorial(n)


def bracket_poly(alpha: int) -> List[Fraction]:
    """The rational polynomial B_alpha(v) of degree 3*alpha + 2.

    B_alpha(v) = sum over i in [0, alpha], l in [0, 2] of
    (-1)^i C(alpha, i) gen_binom(i + (2*alpha - 1 + l)/3, alpha) v^(3i + l).
    Its constant term vanishes, and clearing the 3-power denominators and
    dividing by v(v^2 + v + 1) yields the integer polynomial g_alpha.
    """
    if alpha < 2 or alpha % 3 != 2:
        raise BadAlpha(f"alpha = {alpha} is not 2 mod 3 with alpha >= 2")
    out = [Fraction(0)] * (3 * alpha + 3)
    for i in range(alpha + 1):
        sign_binom = (-1) ** i * math.comb(alpha, i)
        for l in range(3):
            out[3 * i + l] += sign_binom * gen_binom(
                Fraction(3 * i + 2 * alpha - 1 + l, 3), alpha
            )
    return out


@dataclass(frozen=True)
class GPolyRecord:
    """The elimination polynomial g_alpha and its provenance.

    ``3**d_alpha * bracket`` is integral (and no smaller power of 3 works);
    dividing it by v(v^2+v+1) and reversing the quotient's coefficients at
    degree 3*alpha - 1 gives ``g``.  ``q_bound`` = 2*alpha + 4 is the least
    q for which the closed form behind the bracket is valid.
    """

    alpha: int
    d_alpha: int
    bracket: Tuple[Fraction, ...]
    g: Tuple[int, ...]
    q_bound: int

    def reconstruction_holds(self) -> bool:
        scaled = [c * 3**self.d_alpha for c in self.bracket]
        rev = list(reversed(self.g))
        return poly_mul([0, 1, 1, 1], rev) == poly_trim([Fraction(c) for c in scaled])


def g_poly(alpha: int) -> GPolyRecord:
    """Generate g_alpha from the bracket polynomial."""
    bracket = bracket_poly(alpha)
    den_lcm = 1
    for c in bracket:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    d_alpha = 0
    rest = den_lcm
    while rest % 3 == 0:
        rest //= 3
        d_alpha += 1
    if rest != 1:
        raise FractionalResidue(
            f"bracket denominators of alpha={alpha} are not a pure power of 3: {den_lcm}"
        )
    scaled = [c * 3**d_alpha for c in bracket]
    assert all(c.denominator == 1 for c in scaled)
    quotient = poly_divmod_exact([int(c) for c in scaled], [0, 1, 1, 1])
    if poly_degree(quotient) != 3 * alpha - 1 or quotient[0] == 0:
        raise NotDivisible(
            f"quotient for alpha={alpha} does not reverse to degree {3 * alpha - 1}"
        )
    g = tuple(reversed(quotient))
    record = GPolyRecord(
        alpha=alpha,
        d_alpha=d_alpha,
        bracket=tuple(bracket),
        g=g,
        q_bound=2 * alpha + 4,
    )
    assert record.reconstruction_holds()
    return record


# ---------------------------------------------------------------------------
# Resultants, factorization and gcd chains
# ---------------------------------------------------------------------------


def _pseudo_rem(f: List[int], g: List[int]) -> List[int]:
    """Pseudo-remainder lc(g)^(deg f - deg g + 1) * f mod g over Z."""
    rem = list(f)
    lead = g[-1]
    steps = len(f) - len(g) + 1
    for _ in range(steps):
        if len(rem) < len(g):
            rem = [c * lead for c in rem]
            continue
        c = rem[-1]
        rem = [x * lead for x in rem]
        k = len(rem) - len(g)
        for i, gi in enumerate(g):
            rem[k + i] -= c * gi
        rem.pop()
        poly_trim(rem)
    return rem


def resultant_z(f: Sequence[int], g: Sequence[int]) -> int:
    """Resultant over Z via the fraction-free subresultant remainder sequence."""
    a = poly_trim([int(c) for c in f])
    b = poly_trim([int(c) for c in g])
    if not a or not b:
        raise ValueError("resultant of the zero polynomial")
    if len(a) == 1:
        return a[0] ** poly_degree(b)
    if len(b) == 1:
        return b[0] ** poly_degree(a)
    sign = 1
    if len(a) < len(b):
        if (poly_degree(a) * poly_degree(b)) % 2:
            sign = -sign
        a, b = b, a
    g_, h = 1, 1
    while True:
        da, db = poly_degree(a), poly_degree(b)
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        rem = _pseudo_rem(a, b)
        if not rem:
            return 0
        a = b
        divisor = g_ * h**delta
        b = [c // divisor for c in rem]
        g_ = a[-1]
        if delta > 0:
            h = g_**delta // h ** (delta - 1)
        if poly_degree(b) == 0:
            break
    da = poly_degree(a)
    return sign * b[0] ** da // h ** (da - 1)


@dataclass(frozen=True)
class FactorResult:
    """Trial-division factorization; ``complete`` is False when a cofactor
    above the proving range is left unfactored."""

    n: int
    factors: Dict[int, int]
    complete: bool
    cofactor: int = 1

    def reassemble(self) -> int:
        v = self.cofactor
        for p, m in self.factors.items():
            v *= p**m
        return v if self.n > 0 else -v


def factor_trial(n: int, bound: int = 10**6) -> FactorResult:
    """Factor |n| by trial division up to ``bound``.

    A remaining cofactor c with c <= bound^2 is certified prime (it has no
    divisor below its square root); anything larger is reported unfactored
    with ``complete=False``.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    m = abs(n)
    factors: Dict[int, int] = {}
    d = 2
    while d <= bound and d * d <= m:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m == 1:
        return FactorResult(n=n, factors=factors, complete=True)
    if m <= bound * bound:
        factors[m] = factors.get(m, 0) + 1
        return FactorResult(n=n, factors=factors, complete=True)
    return FactorResult(n=n, factors=factors, complete=False, cofactor=m)


def gcd_mod_p(polys: Sequence[Sequence[int]], p: int) -> List[int]:
    """Monic gcd over F_p of the mod-p reductions of integer polynomials."""
    reduced = [fp_trim([c % p for c in f]) for f in polys]
    reduced = [f for f in reduced if f]
    if not reduced:
        raise AllZero(f"all polynomials vanish mod {p}")
    acc = reduced[0]
    for f in reduced[1:]:
        acc = fp_gcd(acc, f, p)
    return acc


def eval_mod_p(f: Sequence[int], x: int, p: int) -> int:
    """Horner evaluation of f at x, mod p."""
    r = 0
    for c in reversed(f):
        r = (r * x + c) % p
    return r


# ---------------------------------------------------------------------------
# Text and JSON forms
# ---------------------------------------------------------------------------


def poly_str(f: Sequence[Coeff], var: str = "y") -> str:
    """Compact human form, descending: 2y^5+3y^4-23y^3-8y^2-9y+44."""
    if not poly_trim(list(f)):
        return "0"
    parts = []
    for k in range(len(f) - 1, -1, -1):
        c = f[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            x = var if k == 1 else f"{var}^{k}"
            body = x if mag == 1 else f"{mag}{x}"
        parts.append(sign + body)
    return "".join(parts)


def poly_text(f: Sequence[Coeff], var: str = "y") -> str:
    """Machine text form: space-separated "coeff*y^k" terms, descending."""
    if not poly_trim(list(f)):
        return f"0*{var}^0"
    return " ".join(
        f"{f[k]}*{var}^{k}" for k in range(len(f) - 1, -1, -1) if f[k] != 0
    )


def parse_poly_text(s: str, var: str = "y") -> List[Coeff]:
    """Inverse of poly_text."""
    term = re.compile(rf"^(-?\d+(?:/\d+)?)\*{re.escape(var)}\^(\d+)$")
    coeffs: List[Coeff] = []
    for tok in s.split():
        m = term.match(tok)
        if not m:
            raise ValueError(f"bad polynomial term: {tok!r}")
        c = Fraction(m.group(1)) if "/" in m.group(1) else int(m.group(1))
        k = int(m.group(2))
        if k >= len(coeffs):
            coeffs.extend([0] * (k + 1 - len(coeffs)))
        coeffs[k] = c
    return poly_trim(coeffs)


def poly_json(f: Sequence[Coeff]) -> List[str]:
    """Little-endian array of exact coefficient strings ("num/den" for rationals)."""
    return [str(c) for c in f]


def poly_from_json(strings: Sequence[str]) -> List[Coeff]:
    out: List[Coeff] = []
    for s in strings:
        out.append(Fraction(s) if "/" in s else int(s))
    return poly_trim(out)
