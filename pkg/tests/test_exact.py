import math
import random
from fractions import Fraction

import pytest

from symcurves.exact import (
    IntPoly,
    factorize,
    int_poly_disc,
    is_prime,
    is_squarefree,
    legendre_symbol,
    log_abs,
    p_valuation,
    qpoly_divmod,
    qpoly_ext_gcd,
    qpoly_gcd,
    qpoly_resultant,
    rational_sqrt,
    roots_mod_p,
    sqrt_mod_pk,
    squarefree_part,
)


def primes_below(n):
    return [p for p in range(2, n) if is_prime(p)]


def test_is_prime_small():
    assert primes_below(60) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
                                41, 43, 47, 53, 59]


def test_is_prime_carmichael_and_large():
    assert not is_prime(561)
    assert not is_prime(1729)
    assert is_prime(2**61 - 1)
    assert not is_prime(2**67 - 1)
    assert is_prime(577)  # squarefree example prime


def test_factorize_roundtrip():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randrange(2, 10**9)
        fac = factorize(n)
        prod = 1
        for p, e in fac.items():
            assert is_prime(p)
            prod *= p**e
        assert prod == n


def test_legendre_against_square_listing():
    # Oracle: exhaustive squares mod p for every odd prime p < 200.
    for p in primes_below(200):
        if p == 2:
            continue
        squares = {(x * x) % p for x in range(1, p)}
        for a in range(p):
            expected = 0 if a == 0 else (1 if a in squares else -1)
            assert legendre_symbol(a, p) == expected


def test_legendre_examples_and_euler():
    assert legendre_symbol(-1, 5) == 1
    assert legendre_symbol(-1, 3) == -1
    assert legendre_symbol(2, 7) == 1  # 4^2 = 16 = 2 mod 7
    for p in (11, 13, 101):
        for a in range(1, p):
            assert pow(a, (p - 1) // 2, p) % p == legendre_symbol(a, p) % p


def test_legendre_rejects_bad_modulus():
    with pytest.raises(ValueError):
        legendre_symbol(3, 10)
    with pytest.raises(ValueError):
        legendre_symbol(3, 2)


def test_legendre_multiplicative():
    for p in (7, 19, 43):
        for a in range(1, p):
            for b in range(1, p):
                assert (legendre_symbol(a * b, p)
                        == legendre_symbol(a, p) * legendre_symbol(b, p))


def test_rational_sqrt():
    assert rational_sqrt(Fraction(4, 9)) == Fraction(2, 3)
    assert rational_sqrt(2) is None
    assert rational_sqrt(0) == 0
    assert rational_sqrt(Fraction(49, 64)) == Fraction(7, 8)
    assert rational_sqrt(-4) is None
    rng = random.Random(3)
    for _ in range(100):
        q = Fraction(rng.randrange(1, 500), rng.randrange(1, 500))
        assert rational_sqrt(q * q) == abs(q)


def test_p_valuation():
    assert p_valuation(50, 5) == 2
    assert p_valuation(Fraction(3, 8), 2) == -3
    assert p_valuation(7 * 11, 7) == 1
    assert p_valuation(0, 3) == math.inf
    for p in (2, 3, 5):
        x, y = Fraction(18, 5), Fraction(40, 27)
        assert p_valuation(x * y, p) == p_valuation(x, p) + p_valuation(y, p)
        assert p_valuation(x + y, p) >= min(p_valuation(x, p), p_valuation(y, p))


def test_is_squarefree():
    assert is_squarefree(6)
    assert not is_squarefree(12)
    assert is_squarefree(577)
    assert is_squarefree(-15)
    assert not is_squarefree(49)


def test_squarefree_part():
    assert squarefree_part(12) == 3
    assert squarefree_part(-18) == -2
    assert squarefree_part(1) == 1


def test_roots_mod_p_examples():
    f = IntPoly([2, 0, -4, 0, 1])  # x^4 - 4x^2 + 2
    assert roots_mod_p(f, 5) == set()
    assert roots_mod_p(f, 31) != set()
    assert roots_mod_p(IntPoly([-1, 0, 1]), 3) == {1, 2}


def test_roots_mod_p_vs_exhaustive():
    rng = random.Random(11)
    for p in primes_below(100):
        for _ in range(3):
            f = IntPoly([rng.randrange(-9, 10) for _ in range(rng.randrange(2, 8))])
            if all(c % p == 0 for c in f.coeffs):
                continue
            expected = {r for r in range(p) if f(r) % p == 0}
            assert roots_mod_p(f, p) == expected


def test_roots_mod_p_large_prime_gcd_path():
    f = IntPoly([2, 0, -4, 0, 1])
    p = 10007  # 10007 mod 16 = 7, expect no roots
    assert roots_mod_p(f, p) == {r for r in range(p) if f.eval_mod(r, p) == 0}
    p2 = 10111  # 10111 mod 16 = 15, expect roots
    got = roots_mod_p(f, p2)
    assert got and all(f.eval_mod(r, p2) == 0 for r in got)


def test_roots_mod_p_rejects_zero_poly():
    with pytest.raises(ValueError):
        roots_mod_p(IntPoly([5, 10]), 5)


def test_sqrt_mod_pk():
    t = sqrt_mod_pk(73, 2, 8)
    assert t is not None and (t * t - 73) % 256 == 0
    t = sqrt_mod_pk(73, 3, 5)
    assert t is not None and (t * t - 73) % 243 == 0
    assert sqrt_mod_pk(5, 2, 8) is None  # 5 = 5 mod 8 is not a 2-adic square
    t = sqrt_mod_pk(2, 7, 4)
    assert t is not None and (t * t - 2) % 7**4 == 0


def test_intpoly_basics():
    f = IntPoly([2, 0, -4, 0, 1])
    assert f.degree == 4
    assert f(2) == 2
    assert f(Fraction(1, 2)) == Fraction(2, 1) - 1 + Fraction(1, 16)
    assert f.derivative() == IntPoly([0, -8, 0, 4])
    g = IntPoly([1, 1])
    assert (f * g).degree == 5
    assert f.shift_scale(1, 2)(0) == f(1)
    assert f.shift_scale(1, 2)(1) == f(3)
    assert f.reverse(4)(2) == 2**4 * f(Fraction(1, 2))


def test_qpoly_divmod_gcd():
    # (x^2 - 1) = (x - 1)(x + 1)
    q, r = qpoly_divmod([Fraction(-1), Fraction(0), Fraction(1)],
                        [Fraction(-1), Fraction(1)])
    assert q == [Fraction(1), Fraction(1)] and r == [Fraction(0)]
    g = qpoly_gcd([Fraction(-1), Fraction(0), Fraction(1)],
                  [Fraction(1), Fraction(1)])
    assert g == [Fraction(1), Fraction(1)]


def test_qpoly_ext_gcd_identity():
    rng = random.Random(5)
    for _ in range(20):
        a = [Fraction(rng.randrange(-5, 6)) for _ in range(4)] + [Fraction(1)]
        b = [Fraction(rng.randrange(-5, 6)) for _ in range(3)] + [Fraction(1)]
        g, u, v = qpoly_ext_gcd(a, b)

        def mul(x, y):
            out = [Fraction(0)] * (len(x) + len(y) - 1)
            for i, xi in enumerate(x):
                for j, yj in enumerate(y):
                    out[i + j] += xi * yj
            return out

        lhs = mul(u, a)
        rhs = mul(v, b)
        n = max(len(lhs), len(rhs), len(g))
        comb = [(lhs[i] if i < len(lhs) else 0) + (rhs[i] if i < len(rhs) else 0)
                for i in range(n)]
        while len(comb) > 1 and comb[-1] == 0:
            comb.pop()
        assert comb == g


def test_qpoly_resultant_vs_root_product():
    # res(f, g) = lc(f)^deg g * prod g(roots of f) for f = (x-1)(x-2)(x-3)
    f = [Fraction(-6), Fraction(11), Fraction(-6), Fraction(1)]
    g = [Fraction(5), Fraction(0), Fraction(1)]  # x^2 + 5
    expected = Fraction(1) * (1 + 5) * (4 + 5) * (9 + 5)
    assert qpoly_resultant(g, f) in (expected, -expected)
    assert qpoly_resultant(f, g) == (1 + 5) * (4 + 5) * (9 + 5)


def test_int_poly_disc():
    # disc(x^2 + bx + c) = b^2 - 4c
    assert int_poly_disc(IntPoly([3, 5, 1])) == 25 - 12
    # disc(x^3 + px + q) = -4p^3 - 27q^2
    assert int_poly_disc(IntPoly([2, -1, 0, 1])) == -4 * (-1) ** 3 - 27 * 4


def test_log_abs_large():
    n = 12345**400
    assert abs(log_abs(n) - 400 * math.log(12345)) < 1e-9
    assert abs(log_abs(Fraction(3, 7)) - math.log(3 / 7)) < 1e-12
