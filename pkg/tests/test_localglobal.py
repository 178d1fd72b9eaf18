import pytest

from symcurves.exact import is_prime
from symcurves.localglobal import (
    bad_primes,
    count_smooth_points_quartic_Fq,
    everywhere_locally_solvable,
    family_curve,
    real_solvable,
    special_place_checks,
)
from symcurves.quartic import SymQuartic
from fractions import Fraction


def brute_projective_count(F, q):
    """Oracle: triple loop over representatives of P^2(F_q) on the closure
    x^4 + a x^2 z^2 + a y^2 z^2 + y^4 - b z^4."""
    a = F.a_eff.numerator * pow(F.a_eff.denominator, -1, q) % q
    b = F.b_eff.numerator * pow(F.b_eff.denominator, -1, q) % q

    def form(x, y, z):
        return (x**4 + a * x * x * z * z + a * y * y * z * z
                + y**4 - b * z**4) % q

    count = 0
    for x in range(q):
        for y in range(q):
            if form(x, y, 1) == 0:
                count += 1
    for x in range(q):
        if form(x, 1, 0) == 0:
            count += 1
    if form(1, 0, 0) == 0:
        count += 1
    return count


def test_real_solvable():
    assert real_solvable(family_curve(5))
    assert real_solvable(family_curve(73))
    assert real_solvable(SymQuartic(-4, -3, 1))  # point (1, 0)
    for alpha in (1, 2, 5, -1, -3):
        F = SymQuartic(Fraction(-21, 4), Fraction(-889, 16), alpha)
        assert not real_solvable(F)


def test_count_examples():
    F = family_curve(73)
    count, witness = count_smooth_points_quartic_Fq(F, 5)
    assert count == brute_projective_count(F, 5)
    assert count >= 1 and witness is not None
    count7, w7 = count_smooth_points_quartic_Fq(F, 7)
    assert count7 == brute_projective_count(F, 7)
    assert w7 is not None


def test_count_rejects_bad_reduction():
    F = family_curve(73)
    for q in (2, 3, 73):
        with pytest.raises(ValueError):
            count_smooth_points_quartic_Fq(F, q)


def test_weil_bound_small_good_primes():
    for p in (73, 97):
        F = family_curve(p)
        for q in range(5, 37):
            if not is_prime(q) or q in bad_primes(F):
                continue
            count, witness = count_smooth_points_quartic_Fq(F, q)
            assert (count - q - 1) ** 2 <= 36 * q  # genus 3 Weil bound
            assert witness is not None


def test_special_place_checks():
    for p in (73, 97):
        reports = special_place_checks(p)
        assert [r.place for r in reports] == [2, 3, p]
        assert all(r.solvable is True for r in reports)
    with pytest.raises(ValueError):
        special_place_checks(5)
    with pytest.raises(ValueError):
        special_place_checks(97 + 24)  # 121 not prime


def test_witness_lifts_one_more_digit():
    # Hensel sanity: the square root witnesses extend to higher precision.
    from symcurves.exact import sqrt_mod_pk

    for p in (73, 97, 193):
        t8 = sqrt_mod_pk(p, 2, 8)
        t9 = sqrt_mod_pk(p, 2, 9)
        assert (t9 - t8) % 2**7 == 0  # the lift extends the mod-2^8 witness
        assert (t9 * t9 - p) % 2**9 == 0
        t5 = sqrt_mod_pk(p, 3, 5)
        t6 = sqrt_mod_pk(p, 3, 6)
        assert (t6 - t5) % 3**5 == 0 or (t6 + t5) % 3**5 == 0
        assert (t6 * t6 - p) % 3**6 == 0


def test_everywhere_locally_solvable():
    for p in (73, 97, 193):
        ok, reports = everywhere_locally_solvable(p)
        assert ok is True
        places = [r.place for r in reports]
        assert places[0] == "real"
        assert {2, 3, p} <= set(x for x in places if isinstance(x, int))
        for r in reports:
            assert r.solvable is True


def test_smooth_witness_is_smooth():
    F = family_curve(73)
    a = F.a_eff.numerator % 11
    b = F.b_eff.numerator % 11
    count, (x, y, z) = count_smooth_points_quartic_Fq(F, 11)
    q = 11
    dx = (4 * x**3 + 2 * a * x * z * z) % q
    dy = (4 * y**3 + 2 * a * y * z * z) % q
    dz = (2 * a * x * x * z + 2 * a * y * y * z - 4 * b * z**3) % q
    assert (dx, dy, dz) != (0, 0, 0)


def test_non_special_prime_reports_undetermined():
    # p = 5 is not 1 mod 24: bad places cannot be certified constructively.
    ok, reports = everywhere_locally_solvable(5)
    assert ok is False
    assert any(r.solvable == "undetermined" for r in reports)
