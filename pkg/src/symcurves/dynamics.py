"""Orbit machinery for quadratic dynamics and the Chebyshev curves
X_{d,k}: T_d(x) + T_d(y) = k: shifted-orbit intersections, rational
preperiodic points, the proven case analysis for the rational points of
X_d (k = 1), the nonsingularity criterion, and brute-force evidence scans.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .chebyshev import _cheb_coeffs, cheb_eval
from .demjanenko import PointCertificate, determine_points
from .exact import IntPoly, qpoly_gcd
from .quartic import SymQuartic
from .elliptic import EllipticCurve, point

# Externally certified inputs for the proven cases.  The X_4 companion
# curve has Mordell-Weil rank one with the recorded generator; the X_5
# point list comes from a certified genus-2 computation; X_3 is empty
# because its Jacobian y^2 = x^3 - 27x + 189/4 has trivial Mordell-Weil
# group.  Each import is re-verified on-curve and guarded by bounded scans.
X4_GENERATOR = point(4, -16)
X5_POINTS = frozenset({
    (Fraction(0), Fraction(1)), (Fraction(1), Fraction(0)),
    (Fraction(-1), Fraction(2)), (Fraction(2), Fraction(-1)),
})
X3_JACOBIAN = EllipticCurve(0, -27, Fraction(189, 4))

SMALL_SET = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(-2))


@dataclass(frozen=True)
class PolyMap:
    """A polynomial map together with an affine shift L(x) = u + v*x."""

    f: IntPoly
    u: Fraction = Fraction(0)
    v: Fraction = Fraction(1)

    def __post_init__(self):
        if self.f.degree < 2:
            raise ValueError("orbit machinery needs deg f >= 2")
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))

    def shift(self, x: Fraction) -> Fraction:
        return self.u + self.v * x


@dataclass(frozen=True)
class ChebCurve:
    d: int
    k: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "k", Fraction(self.k))


@dataclass
class OrbitTail:
    values: list
    cycled: bool

    def as_set(self) -> set:
        return set(self.values)


def orbit_tail(pm: PolyMap, n: int, start, horizon: int) -> OrbitTail:
    """[f^n(start), f^(n+1)(start), ...] truncated at `horizon` values, with
    early stop and a cycle tag once a value repeats."""
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    x = Fraction(start)
    for _ in range(n):
        x = pm.f(x)
    values, seen = [], set()
    for _ in range(horizon):
        if x in seen:
            return OrbitTail(values, True)
        values.append(x)
        seen.add(x)
        x = pm.f(x)
    return OrbitTail(values, x in seen)


def shifted_intersection(pm: PolyMap, n: int, alpha, beta, horizon: int):
    """(L(O_{f,n}(alpha)) intersect O_{f,n}(beta), exact_flag); exact when
    both orbits were detected periodic within the horizon."""
    ta = orbit_tail(pm, n, alpha, horizon)
    tb = orbit_tail(pm, n, beta, horizon)
    shifted = {pm.shift(x) for x in ta.values}
    return shifted & tb.as_set(), ta.cycled and tb.cycled


def preperiodic_points(f: IntPoly, height_cap: int) -> set[Fraction]:
    """All rational preperiodic points of a monic integer quadratic with
    numerator/denominator at most height_cap.  Such points are integers, so
    the scan runs over |r| <= height_cap with an exact escape radius."""
    if f.degree != 2 or f.coeffs[-1] != 1:
        raise ValueError("monic integer quadratic required")
    b, c = abs(f.coeffs[1]), abs(f.coeffs[0])
    # |f(r)| > |r| outside this radius, so escape is monotone past it.
    radius = (b + 1 + math.isqrt((b + 1) ** 2 + 4 * c)) // 2 + 1
    out = set()
    for r in range(-height_cap, height_cap + 1):
        x, seen = r, set()
        while abs(x) <= max(radius, abs(r)) and x not in seen:
            seen.add(x)
            x = f(x)
        if x in seen:
            out.add(Fraction(r))
    return out


def integral_pullback(d_prime: int, targets) -> set[Fraction]:
    """All integers x0 with T_{d'}(x0) in targets, for targets inside
    {0, +-1, +-2}: the growth floor |T_{d'}(x)| >= 7 for |x| >= 3 confines
    the scan to {0, +-1, +-2}."""
    targets = {Fraction(t) for t in targets}
    if not targets <= set(SMALL_SET):
        raise ValueError("targets outside {0, +-1, +-2}: growth bound "
                         "does not apply")
    return {x for x in SMALL_SET if cheb_eval(d_prime, x) in targets}


@lru_cache(maxsize=1)
def _x4_certificate() -> PointCertificate:
    F = SymQuartic(-4, -3, 1)
    return determine_points(F, X4_GENERATOR, rank_claim=1)


def _verify_on_curve(d: int, pts) -> frozenset:
    for x, y in pts:
        assert cheb_eval(d, x) + cheb_eval(d, y) == 1
    return frozenset(pts)


def chebyshev_curve_points(d: int, scan_cap: int = 40) -> PointCertificate:
    """The rational points of X_d: T_d(x) + T_d(y) = 1 in the proven cases,
    with a bounded-scan consistency guard; a conjectural evidence record
    otherwise.

    Cases: 3 | d is empty (covering to the trivial-Jacobian X_3); otherwise
    4 | d reduces through the two-cover enumeration on X_4, and 5 | d
    reduces to the certified X_5 list, both pulled back through the
    integral-point argument and the special-value table.
    """
    if d < 3:
        raise ValueError("d must be >= 3")
    if d % 3 == 0:
        cert = PointCertificate(
            points=frozenset(), index_bound=0, n_window=0,
            conditional_on=("imported certificate: the degree-3 curve has "
                            "trivial Jacobian Mordell-Weil group",),
        )
        _guard_scan(d, cert.points, scan_cap)
        return cert
    if d % 4 == 0:
        base = _x4_certificate()
        pairs = {(P.x, P.y) for P in base.points}
        pts = _pullback_pairs(d // 4, pairs)
        cert = PointCertificate(
            points=_verify_on_curve(d, pts),
            index_bound=base.index_bound, n_window=base.n_window,
            conditional_on=base.conditional_on,
        )
        _guard_scan(d, cert.points, scan_cap)
        return cert
    if d % 5 == 0:
        pts = _pullback_pairs(d // 5, X5_POINTS)
        cert = PointCertificate(
            points=_verify_on_curve(d, pts), index_bound=0, n_window=0,
            conditional_on=("imported certificate: degree-5 point list from "
                            "a certified genus-2 computation",),
        )
        _guard_scan(d, cert.points, scan_cap)
        return cert
    evidence = conjecture_scan(d, scan_cap)
    return PointCertificate(
        points=frozenset((x, y) for x, y in evidence.inside_points),
        index_bound=0, n_window=0,
        conditional_on=(f"bounded scan to cap {scan_cap} only",),
        status="conjectural-evidence",
    )


def _pullback_pairs(d_prime: int, base_pairs) -> set:
    out = set()
    for u, v in base_pairs:
        xs = integral_pullback(d_prime, {u})
        ys = integral_pullback(d_prime, {v})
        out |= {(x, y) for x in xs for y in ys}
    return out


def _guard_scan(d: int, certified: frozenset, cap: int):
    evidence = conjecture_scan(d, cap)
    found = {(x, y) for x, y in evidence.inside_points} | \
            {(x, y) for x, y in evidence.exceptional}
    assert found <= set(certified), \
        "bounded scan found a point outside the certificate"


@dataclass
class ScanEvidence:
    d: int
    cap: int
    inside_points: set = field(default_factory=set)
    exceptional: set = field(default_factory=set)


def _solve_cheb_value(d: int, t: Fraction) -> set[Fraction]:
    """All rational y with T_d(y) = t for integer targets; solutions are
    integers by monicity, found among |y| <= 2 and by monotone bisection on
    |y| >= 3."""
    if t.denominator != 1:
        return set()
    out = {y for y in SMALL_SET if cheb_eval(d, y) == t}
    tt = int(t)

    def search_positive(target):
        lo, hi = 3, 3
        if cheb_eval(d, Fraction(hi)) > target:
            return None
        while cheb_eval(d, Fraction(hi)) < target:
            hi *= 2
        while lo < hi:
            mid = (lo + hi) // 2
            if cheb_eval(d, Fraction(mid)) < target:
                lo = mid + 1
            else:
                hi = mid
        return lo if cheb_eval(d, Fraction(lo)) == target else None

    r = search_positive(tt)
    if r is not None:
        out.add(Fraction(r))
    mirrored = search_positive(-tt if d % 2 else tt)
    if mirrored is not None:
        out.add(Fraction(-mirrored))
    return out


def conjecture_scan(d: int, num_den_cap: int) -> ScanEvidence:
    """Exhaustive scan for rational points of X_d with x an integer of
    absolute value at most the cap (monicity makes every rational point
    integral), solving for y exactly; points outside {0,+-1,+-2}^2 are
    recorded as exceptional."""
    if d < 3:
        raise ValueError("d must be >= 3")
    ev = ScanEvidence(d, num_den_cap)
    small = set(SMALL_SET)
    for x0 in range(-num_den_cap, num_den_cap + 1):
        x = Fraction(x0)
        t = 1 - cheb_eval(d, x)
        for y in _solve_cheb_value(d, t):
            if x in small and y in small:
                ev.inside_points.add((x, y))
            else:
                ev.exceptional.add((x, y))
    return ev


def _critical_values(d: int) -> set[int]:
    """Values of T_d at its critical points (always within {2, -2})."""
    td = [Fraction(c) for c in _cheb_coeffs(d).coeffs]
    deriv = [i * td[i] for i in range(1, len(td))]
    out = set()
    for s in (2, -2):
        shifted = list(td)
        shifted[0] -= s
        g = qpoly_gcd(shifted, deriv)
        if len(g) > 1:
            out.add(s)
    return out


def nonsingular(dk: ChebCurve) -> bool:
    """Nonsingularity of X_{d,k} over Q-bar: certified whenever
    k is not in {0, 4, -4} (singular points force T_d' to vanish in both
    variables, pinning T_d to +-2 at each, so k must be a sum of two
    critical values).  For d <= 8 the criterion is re-verified exactly via
    polynomial gcds."""
    if dk.d < 2:
        raise ValueError("d must be >= 2")
    certified = dk.k not in (0, 4, -4)
    if dk.d <= 8:
        crits = _critical_values(dk.d)
        sums = {Fraction(s + t) for s in crits for t in crits}
        assert sums <= {Fraction(0), Fraction(4), Fraction(-4)}
        if certified:
            assert dk.k not in sums
    return certified
