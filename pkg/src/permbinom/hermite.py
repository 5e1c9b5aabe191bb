"""Power sums, coefficient sums S_q(alpha, a) and permutation tests for
the binomial map x -> a*x + x^(3q-2) on F_{q^2}.

Two independent permutation tests are provided:

- ``brute_pp_test``: the ground truth.  Evaluates the map literally at every
  point and checks for collisions with a bitset.
- ``hermite_pp_test``: the reduced power-sum criterion.  The map permutes
  F_{q^2} iff 0 is its only root and S_q(alpha, a) = 0 for all
  0 <= alpha <= q-1; only the exponents s = alpha + (q-1-alpha)q need
  checking because all other power sums vanish identically.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Dict, List

from permbinom.ffield import FieldCtx, is_primitive_cube_root, lucas_binom


class PreconditionViolated(ValueError):
    """Raised when an operation's hypothesis on (q, a) does not hold."""


@dataclass(frozen=True)
class BinomialMap:
    """The map x -> a*x + x^(3q-2) with a != 0; 0 maps to 0."""

    ctx: FieldCtx
    a: int

    def __post_init__(self):
        if self.a == 0:
            raise PreconditionViolated("a must be nonzero")

    @property
    def exponent(self) -> int:
        return 3 * self.ctx.q - 2

    def __call__(self, x: int) -> int:
        # Evaluated literally via pow; no symbolic reduction, so the ground
        # truth cannot inherit a simplification under test.
        ctx = self.ctx
        return ctx.add(ctx.mul(self.a, x), ctx.pow(x, self.exponent))


@functools.lru_cache(maxsize=None)
def _power_table(ctx: FieldCtx, k: int) -> tuple:
    """x^k for every x in the field, indexed by encoding."""
    return tuple(ctx.pow(x, k) if x else 0 for x in range(ctx.q2))


def image_table(ctx: FieldCtx, a: int) -> List[int]:
    """[f(x) for every x], f = BinomialMap(ctx, a)."""
    cube = _power_table(ctx, 3 * ctx.q - 2)
    if ctx.p == 2:
        exp, log = ctx._exp, ctx._log
        if exp is not None:
            la, m = log[a], ctx.q2 - 1
            out = [0] * ctx.q2
            for x in range(1, ctx.q2):
                out[x] = exp[(la + log[x]) % m] ^ cube[x]
            return out
    mul, add = ctx.mul, ctx.add
    return [add(mul(a, x), cube[x]) for x in range(ctx.q2)]


def power_sum(ctx: FieldCtx, a: int, s: int) -> int:
    """Sum of f(x)^s over all x in F_{q^2} (ground-truth oracle)."""
    if a == 0:
        raise PreconditionViolated("a must be nonzero")
    tot = 0
    for fx in image_table(ctx, a):
        if fx:
            tot = ctx.add(tot, ctx.pow(fx, s))
    return tot


@dataclass(frozen=True)
class IntervalCensus:
    """Multiples of q+1 in the exponent-shift interval of a given alpha.

    ``hi_stated`` records the interval's displayed upper end alpha - 1;
    the actual range of -alpha-1+3(i-j) over valid (i, j) is
    [2*alpha+2-3q, 2*alpha-1] and that working form is what the census (and
    all sums built on it) uses.
    """

    q: int
    alpha: int
    lo: int
    hi_stated: int
    hi_working: int
    multiples: tuple

    @property
    def count(self) -> int:
        return len(self.multiples)


def interval_census(q: int, alpha: int) -> IntervalCensus:
    """All l with l*(q+1) in [2*alpha+2-3q, 2*alpha-1]."""
    if not 0 <= alpha <= q - 1:
        raise PreconditionViolated(f"alpha = {alpha} out of range for q = {q}")
    lo, hi = 2 * alpha + 2 - 3 * q, 2 * alpha - 1
    l_min = -((-lo) // (q + 1))  # ceil(lo / (q+1))
    l_max = hi // (q + 1)
    return IntervalCensus(
        q=q,
        alpha=alpha,
        lo=lo,
        hi_stated=alpha - 1,
        hi_working=hi,
        multiples=tuple(range(l_min, l_max + 1)),
    )


def s_q(ctx: FieldCtx, a: int, alpha: int) -> int:
    """The coefficient sum S_q(alpha, a).

    Sums C(alpha, i) * C(q-1-alpha, j) * a^(-i-jq) over all (i, j) with
    -alpha-1+3(i-j) a multiple of q+1; only the <= 3 admissible differences
    d = i - j are iterated, so the cost is O(q).  Binomials are taken mod p
    via Lucas' theorem.  Stored without the leading minus sign of the
    power-sum identity (see ``power_sum`` tests).
    """
    if a == 0:
        raise PreconditionViolated("a must be nonzero")
    p, q = ctx.p, ctx.q
    total = 0
    for l in interval_census(q, alpha).multiples:
        num = alpha + 1 + l * (q + 1)
        if num % 3:
            continue  # no (i, j) pair can satisfy the congruence
        d = num // 3
        i_lo = max(0, d)
        i_hi = min(alpha, q - 1 - alpha + d)
        for i in range(i_lo, i_hi + 1):
            j = i - d
            c = lucas_binom(p, alpha, i) * lucas_binom(p, q - 1 - alpha, j) % p
            if c:
                total = ctx.add(total, ctx.mul(c, ctx.pow(a, -i - j * q)))
    return total


def has_nonzero_root(ctx: FieldCtx, a: int) -> bool:
    """True iff a*x + x^(3q-2) vanishes at some x != 0."""
    table = image_table(ctx, a)
    return any(table[x] == 0 for x in range(1, ctx.q2))


def brute_pp_test(ctx: FieldCtx, a: int) -> bool:
    """Ground truth: does the map hit all q^2 values?  Bitset with early exit."""
    if a == 0:
        raise PreconditionViolated("a must be nonzero")
    seen = bytearray(ctx.q2)
    for fx in image_table(ctx, a):
        if seen[fx]:
            return False
        seen[fx] = 1
    return True


def hermite_pp_test(ctx: FieldCtx, a: int, full_range: bool = False) -> bool:
    """Reduced power-sum permutation test.

    When 3 | q+1 the only-root-zero condition is equivalent to
    a^((q+1)/3) != 1; otherwise the roots are checked directly.  No case is
    assumed impossible a priori: for 3 not dividing q+1 the sums are still
    computed, so the divisibility necessity is observed, not hard-coded.

    ``full_range=True`` switches to the slow oracle that checks every power
    sum s in [1, q^2-2] directly (intended for q <= 8).
    """
    if a == 0:
        raise PreconditionViolated("a must be nonzero")
    q = ctx.q
    if (q + 1) % 3 == 0:
        only_root_zero = ctx.pow(a, (q + 1) // 3) != 1
    else:
        only_root_zero = not has_nonzero_root(ctx, a)
    if not only_root_zero:
        return False
    if full_range:
        return all(power_sum(ctx, a, s) == 0 for s in range(1, ctx.q2 - 1))
    return all(s_q(ctx, a, alpha) == 0 for alpha in range(q))


REDUCED_INDICES = "s = alpha + (q-1-alpha)*q for 0 <= alpha <= q-1"


@dataclass(frozen=True)
class PowerSumProfile:
    """All reduced-index power sums of a fixed map, with the expected shape.

    When y = a^((q+1)/3) is a primitive cube root of unity, every entry must
    vanish except, for odd q, the single index s = (q^2-1)/2 whose value is
    a^(-(q+1)(3q-2)/6) * (1+y).  ``verdict`` records whether the computed
    entries match that shape exactly.
    """

    q: int
    a: int
    entries: Dict[int, int] = field(repr=False)
    expected_nonzero_index: int | None
    expected_nonzero_value: int | None
    verdict: bool


def lemma31_profile(ctx: FieldCtx, a: int) -> PowerSumProfile:
    """Reduced power-sum profile for a with y = a^((q+1)/3) a primitive cube root."""
    q = ctx.q
    if (q + 1) % 3:
        raise PreconditionViolated("q + 1 must be divisible by 3")
    y = ctx.pow(a, (q + 1) // 3)
    if not is_primitive_cube_root(ctx, y):
        raise PreconditionViolated("a^((q+1)/3) is not a primitive cube root of unity")
    entries = {}
    for alpha in range(q):
        s = alpha + (q - 1 - alpha) * q
        if s == 0:
            continue
        entries[s] = power_sum(ctx, a, s)
    if q % 2:
        idx = (q * q - 1) // 2
        val = ctx.mul(ctx.pow(a, -(q + 1) * (3 * q - 2) // 6), ctx.add(1, y))
    else:
        idx = val = None
    ok = all(v == 0 for s, v in entries.items() if s != idx)
    if idx is not None:
        ok = ok and entries.get(idx, 0) == val
    return PowerSumProfile(
        q=q,
        a=a,
        entries=entries,
        expected_nonzero_index=idx,
        expected_nonzero_value=val,
        verdict=ok,
    )
