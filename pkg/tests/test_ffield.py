import math
import random

import pytest

from permbinom.ffield import (
    NonPrimeP,
    SizeExceeded,
    ZeroInverse,
    is_irreducible,
    is_primitive_cube_root,
    lucas_binom,
    make_field,
    parse_field_descriptor,
    subfield_q_members,
)


def first_irreducible_by_enumeration(p, n):
    """Oracle: irreducibility by brute factor search over monic candidates."""

    def divides(d, f):
        # trial polynomial division over F_p, little-endian lists
        rem = list(f)
        inv = pow(d[-1], -1, p)
        while len(rem) >= len(d):
            c = rem[-1] * inv % p
            k = len(rem) - len(d)
            for i, di in enumerate(d):
                rem[k + i] = (rem[k + i] - c * di) % p
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return not rem

    def monics(deg):
        for c in range(p**deg):
            out, cc = [], c
            for _ in range(deg):
                out.append(cc % p)
                cc //= p
            yield out + [1]

    for f in monics(n):
        if any(divides(d, f) for deg in range(1, n // 2 + 1) for d in monics(deg)):
            continue
        return f
    raise AssertionError("no irreducible found")


class TestConstruction:
    def test_f4_unique_modulus(self):
        assert make_field(2, 1).modulus == (1, 1, 1)

    @pytest.mark.parametrize("p,e", [(5, 1), (2, 3), (3, 1), (7, 1)])
    def test_canonical_modulus_matches_enumeration_oracle(self, p, e):
        assert list(make_field(p, e).modulus) == first_irreducible_by_enumeration(p, 2 * e)

    def test_reproducible(self):
        a, b = make_field(11, 1), make_field(11, 1)
        assert a.modulus == b.modulus and a.generator == b.generator

    def test_non_prime_rejected(self):
        with pytest.raises(NonPrimeP):
            make_field(6, 1)

    def test_size_bound(self):
        with pytest.raises(SizeExceeded):
            make_field(2, 13)  # 2^26 elements

    def test_modulus_is_irreducible(self):
        for p, e in [(2, 1), (2, 3), (5, 1), (13, 1)]:
            ctx = make_field(p, e)
            assert is_irreducible(list(ctx.modulus), p)
            assert len(ctx.modulus) == 2 * e + 1 and ctx.modulus[-1] == 1

    def test_descriptor_roundtrip(self):
        assert parse_field_descriptor("2^3") == (2, 3)
        assert parse_field_descriptor("29") == (29, 1)
        assert make_field(2, 3).descriptor() == "2^3"


class TestArithmetic:
    @pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (5, 1), (2, 2)])
    def test_field_axioms_exhaustive(self, p, e, fields):
        ctx = fields(p, e)
        els = list(ctx.elements())
        assert ctx.q2 <= 625
        for a in els:
            for b in els:
                assert ctx.add(a, b) == ctx.add(b, a)
                assert ctx.mul(a, b) == ctx.mul(b, a)
                for c in els[:: max(1, len(els) // 7)]:
                    assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
                    assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))

    @pytest.mark.parametrize("p,e", [(7, 1), (2, 3), (11, 1)])
    def test_field_axioms_sampled(self, p, e, fields):
        ctx = fields(p, e)
        rng = random.Random(0)
        for _ in range(1000):
            a, b, c = (rng.randrange(ctx.q2) for _ in range(3))
            assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
            assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
            assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
            assert ctx.add(a, ctx.neg(a)) == 0
            if a:
                assert ctx.mul(a, ctx.inv(a)) == 1

    def test_f4_mul_forced_by_modulus(self, fields):
        ctx = fields(2, 1)
        x = ctx.from_coeffs([0, 1])
        assert ctx.mul(x, x) == ctx.from_coeffs([1, 1])

    def test_identity(self, fields):
        ctx = fields(5, 1)
        for a in ctx.elements():
            assert ctx.mul(a, 1) == a

    def test_frobenius_fixes_whole_field_at_q2(self, fields):
        ctx = fields(5, 1)
        for a in ctx.elements():
            acc = a
            for _ in range(24):
                acc = ctx.mul(acc, a)
            if a:
                assert acc == a  # a^25 = a
            assert ctx.pow(a, 25) == a

    @pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1)])
    def test_frobenius_is_a_homomorphism(self, p, e, fields):
        ctx = fields(p, e)
        for a in ctx.elements():
            for b in ctx.elements():
                assert ctx.frobenius(ctx.add(a, b)) == ctx.add(ctx.frobenius(a), ctx.frobenius(b))
                assert ctx.frobenius(ctx.mul(a, b)) == ctx.mul(ctx.frobenius(a), ctx.frobenius(b))


class TestPow:
    def test_pow_zero_exponent(self, fields):
        ctx = fields(2, 3)
        for a in ctx.units():
            assert ctx.pow(a, 0) == 1

    def test_lagrange(self, fields):
        ctx = fields(2, 3)
        for a in ctx.units():
            assert ctx.pow(a, ctx.q2 - 1) == 1

    def test_negative_powers(self, fields):
        ctx = fields(11, 1)
        rng = random.Random(1)
        for _ in range(50):
            a = rng.randrange(1, ctx.q2)
            assert ctx.mul(ctx.pow(a, -3), ctx.pow(a, 3)) == 1

    def test_zero_inverse_raises(self, fields):
        with pytest.raises(ZeroInverse):
            fields(5, 1).pow(0, -1)

    def test_pow_matches_repeated_mul(self, fields):
        ctx = fields(3, 1)
        for a in ctx.elements():
            acc = 1
            for k in range(1, 10):
                acc = ctx.mul(acc, a)
                assert ctx.pow(a, k) == acc


class TestCubeRootsAndSubfield:
    def test_one_is_not_primitive(self, fields):
        assert not is_primitive_cube_root(fields(2, 1), 1)

    def test_f4_nontrivial_elements(self, fields):
        ctx = fields(2, 1)
        for y in ctx.elements():
            assert is_primitive_cube_root(ctx, y) == (y not in (0, 1))

    def test_f289_has_exactly_two(self, fields):
        ctx = fields(17, 1)
        assert sum(is_primitive_cube_root(ctx, y) for y in ctx.elements()) == 2

    def test_subfield_sizes(self, fields):
        assert subfield_q_members(fields(2, 1)) == {0, 1}
        assert len(subfield_q_members(fields(5, 1))) == 5
        assert len(subfield_q_members(fields(2, 3))) == 8

    def test_subfield_closed_under_mul(self, fields):
        ctx = fields(5, 1)
        sub = subfield_q_members(ctx)
        for a in sub:
            for b in sub:
                assert ctx.mul(a, b) in sub and ctx.add(a, b) in sub


class TestLucasBinom:
    def test_odd_binomial_mod_2(self):
        assert lucas_binom(2, 7, 3) == 1

    def test_vanishing_mod_5(self):
        assert lucas_binom(5, 6, 2) == 0

    def test_out_of_range_is_zero(self):
        for p in (2, 5, 11):
            assert lucas_binom(p, 9, -1) == 0
            assert lucas_binom(p, 4, 5) == 0

    @pytest.mark.parametrize("p", [2, 5, 11, 17, 23, 29])
    def test_against_factorial_definition(self, p):
        for m in range(31):
            for k in range(-2, m + 3):
                expected = math.comb(m, k) % p if 0 <= k <= m else 0
                assert lucas_binom(p, m, k) == expected
