import pytest

from symcurves.descent import (
    HomSpace,
    dual_isogeny_spaces,
    hasse_candidate_verdict,
    homspace_locally_solvable,
    isogeny_spaces,
    family_space,
    quartic_residue_criterion,
    root_number,
    selmer_rank_bound,
)
from symcurves.exact import is_prime


def primes(lo, hi):
    return [p for p in range(lo, hi) if is_prime(p)]


def test_root_number_examples():
    r5 = root_number(5)
    assert (r5.Wp, r5.W2, r5.W) == (1, -1, -1)
    r3 = root_number(3)
    assert (r3.Wp, r3.W2, r3.W) == (-1, 1, -1)
    assert r5.kodaira_at_p == "I0*" and r5.kodaira_at_2 == "III"
    assert r5.c4 == 2**5 * 5 * 25 and abs(r5.c6) == 2**8 * 7 * 125
    with pytest.raises(ValueError):
        root_number(2)


def test_root_number_always_minus_one():
    for p in primes(3, 500):
        assert root_number(p).W == -1


def test_family_space_matches_generic_construction():
    # The family's spaces are exactly the generic ones for the minimal
    # model y^2 = x(x^2 + 4px + 2p^2).
    for p in (5, 7, 11):
        generic = {(C.d, C.c2, C.c4) for C in isogeny_spaces(4 * p, 2 * p * p)}
        literal = {(d, -8 * p * d, 8 * p * p)
                   for d in (1, -1, 2, -2, p, -p, 2 * p, -2 * p)}
        assert literal == generic
        C = family_space(3, p)
        assert (C.c2, C.c4) == (-24 * p, 8 * p * p)


def test_homspace_real_place():
    p = 5
    assert not homspace_locally_solvable(family_space(-1, p), "real")
    assert not homspace_locally_solvable(family_space(-2, p), "real")
    assert homspace_locally_solvable(family_space(1, p), "real")
    assert homspace_locally_solvable(family_space(2, p), "real")


def test_homspace_trivial_class_everywhere():
    for p in (5, 7, 11, 73):
        C = family_space(1, p)
        for place in ("real", 2, 3, p):
            assert homspace_locally_solvable(C, place)


def test_homspace_place_p_criterion():
    # d = p solvable at p requires x^4 - 4x^2 + 2 to have a root mod p,
    # i.e. p = +-1 mod 16.
    for p in primes(3, 120):
        got = homspace_locally_solvable(family_space(p, p), p)
        expected = quartic_residue_criterion(p)
        assert got == expected, p


def brute_zl_solvable(C: HomSpace, ell: int, k: int) -> bool:
    """Oracle: scan (z, w) mod ell^k for d*w^2 = d^2 + c2 z^2 + c4 z^4 with a
    liftability margin: a solution whose two sides agree to high ell-adic
    precision with a unit-square pattern."""
    mod = ell**k
    G = lambda z: C.d**3 + C.d * C.c2 * z * z + C.d * C.c4 * z**4
    for z in range(mod):
        val = G(z)
        if val == 0:
            return True
        v = 0
        t = val
        while t % ell == 0 and v < k:
            t //= ell
            v += 1
        if v >= k - 2 - (2 if ell == 2 else 0):
            continue  # precision exhausted; deeper structure decided elsewhere
        if v % 2:
            continue
        if ell == 2:
            if t % 8 == 1:
                return True
        elif pow(t % ell, (ell - 1) // 2, ell) == 1:
            return True
    return False


def test_recursive_solver_vs_bounded_bruteforce():
    # Dual route at small places: the recursive Hensel descent agrees with
    # an exhaustive residue scan at high precision.
    for p in (5, 7, 11, 13):
        for d in (1, -1, 2, -2, p, -p, 2 * p, -2 * p):
            C = family_space(d, p)
            for ell in (3, 5, 7):
                got = homspace_locally_solvable(C, ell)
                brute = brute_zl_solvable(C, ell, 6)
                # reversed chart (z with negative valuation) folds in, so the
                # recursive answer may be True when the Z_ell scan is not.
                if brute:
                    assert got, (p, d, ell)


def test_selmer_candidate_set_is_group():
    from symcurves.descent import selmer_candidate_set
    from symcurves.exact import squarefree_part

    for p in (5, 7, 11, 29, 73):
        sols = selmer_candidate_set(isogeny_spaces(4 * p, 2 * p * p))
        assert 1 in sols
        assert all(d > 0 for d in sols)  # d < 0 fails at the real place
        for d1 in sols:
            for d2 in sols:
                assert squarefree_part(d1 * d2) in sols


def test_selmer_rank_bound_examples():
    assert selmer_rank_bound(5) <= 2
    assert selmer_rank_bound(7) <= 2
    assert selmer_rank_bound(73) <= 2
    for p in primes(3, 200):
        if p % 16 in (1, 15):
            continue
        b = selmer_rank_bound(p)
        assert 0 <= b <= 2, p


def test_quartic_residue_criterion():
    assert quartic_residue_criterion(31)
    assert quartic_residue_criterion(17)
    assert not quartic_residue_criterion(5)
    for p in primes(3, 600):
        assert quartic_residue_criterion(p) == (p % 16 in (1, 15)), p


def test_dual_spaces_shape():
    spaces = dual_isogeny_spaces(4 * 5, 2 * 25)
    assert {(C.c2, C.c4) for C in spaces} == \
        {(16 * 5 * C.d, 32 * 25) for C in spaces}


def test_hasse_verdict_73():
    v = hasse_candidate_verdict(73, assume_parity=True)
    assert v.congruence_gate is True
    assert v.locally_solvable is True
    assert v.root_number == -1
    assert v.selmer_bound <= 2
    assert v.conditional_rank == 1
    assert "below explicit threshold" in v.conclusion


def test_hasse_verdict_gates():
    v = hasse_candidate_verdict(5, assume_parity=True)
    assert v.congruence_gate is False
    v = hasse_candidate_verdict(73, assume_parity=False)
    assert "unconditional conclusion unavailable" in v.conclusion
