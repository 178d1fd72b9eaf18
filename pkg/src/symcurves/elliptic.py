"""Exact elliptic curve arithmetic over Q for models y^2 = x^3 + a2*x^2 +
a4*x + a6: group law, point counting mod p, torsion, Weil and canonical
heights.

The canonical height is normalized as hhat(P) = lim 4^-n h(x(2^n P)) with
h(p/q) = log max(|p|, |q|).  It is computed by splitting that limit into an
archimedean part (a normalized float iteration of the duplication polynomials
on directions, with a rigorous truncation bound) and exact p-adic content
corrections at the finitely many primes where the duplication pair can
acquire a common factor.  A literal big-integer doubling limit is also
provided (`canonical_height_doubling`) as an independent, slower oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import (
    IntPoly,
    factorize,
    is_prime,
    legendre_symbol,
    log_abs,
    qpoly_ext_gcd,
)

MAZUR_ORDER_CAP = 12


class Infinity:
    """The point at infinity (group identity); a singleton."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "O"


INF = Infinity()


@dataclass(frozen=True)
class ECPoint:
    x: Fraction
    y: Fraction

    def __repr__(self):
        return f"({self.x}, {self.y})"


def point(x, y) -> ECPoint:
    return ECPoint(Fraction(x), Fraction(y))


class EllipticCurve:
    """y^2 = x^3 + a2*x^2 + a4*x + a6 over Q, nonsingular."""

    def __init__(self, a2, a4, a6=0):
        self.a2, self.a4, self.a6 = Fraction(a2), Fraction(a4), Fraction(a6)
        if self.discriminant() == 0:
            raise ValueError("singular curve (discriminant 0)")

    def b_invariants(self):
        b2 = 4 * self.a2
        b4 = 2 * self.a4
        b6 = 4 * self.a6
        b8 = 4 * self.a2 * self.a6 - self.a4 * self.a4
        return b2, b4, b6, b8

    def discriminant(self) -> Fraction:
        b2, b4, b6, b8 = self.b_invariants()
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def rhs(self, x: Fraction) -> Fraction:
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def contains(self, P) -> bool:
        if P is INF:
            return True
        return P.y * P.y == self.rhs(P.x)

    def _require(self, P):
        if P is not INF and not self.contains(P):
            raise ValueError(f"point {P} is not on {self}")

    def neg(self, P):
        if P is INF:
            return INF
        return ECPoint(P.x, -P.y)

    def add(self, P, Q):
        """Chord-and-tangent group law with O as identity."""
        self._require(P)
        self._require(Q)
        if P is INF:
            return Q
        if Q is INF:
            return P
        if P.x == Q.x:
            if P.y == -Q.y:
                return INF
            lam = (3 * P.x * P.x + 2 * self.a2 * P.x + self.a4) / (2 * P.y)
        else:
            lam = (Q.y - P.y) / (Q.x - P.x)
        x3 = lam * lam - self.a2 - P.x - Q.x
        y3 = lam * (P.x - x3) - P.y
        return ECPoint(x3, y3)

    def scalar_mul(self, n: int, P):
        """n*P by double-and-add; (-n)P = -(nP)."""
        self._require(P)
        if n < 0:
            return self.neg(self.scalar_mul(-n, P))
        R, Q = INF, P
        while n:
            if n & 1:
                R = self.add(R, Q)
            Q = self.add(Q, Q)
            n >>= 1
        return R

    def integral_model(self):
        """(curve, u) with integer coefficients; points map (x, y) ->
        (u^2 x, u^3 y).  The canonical height is invariant under this."""
        dens = [self.a2.denominator, self.a4.denominator, self.a6.denominator]
        u = 1
        for d in dens:
            u = u * d // math.gcd(u, d)
        if u == 1:
            return self, 1
        return EllipticCurve(self.a2 * u * u, self.a4 * u**4, self.a6 * u**6), u

    def __repr__(self):
        terms = ["x^3"]
        for coef, mono in ((self.a2, "x^2"), (self.a4, "x"), (self.a6, "")):
            if coef == 0:
                continue
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else f"{mag}")
            terms.append(f"{sign} {body}")
        return "y^2 = " + " ".join(terms)

    def __eq__(self, other):
        return (isinstance(other, EllipticCurve)
                and (self.a2, self.a4, self.a6) == (other.a2, other.a4, other.a6))

    def __hash__(self):
        return hash((self.a2, self.a4, self.a6))


def count_points_mod_p(E: EllipticCurve, p: int) -> int:
    """#E(F_p) including infinity, by character sums; p odd, good reduction."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"p = {p} must be an odd prime")
    Ei, u = E.integral_model()
    if u % p == 0:
        raise ValueError(f"p = {p} divides a coefficient denominator")
    disc = Ei.discriminant()
    if disc.numerator % p == 0:
        raise ValueError(f"p = {p} is a prime of bad reduction")
    a2, a4, a6 = int(Ei.a2) % p, int(Ei.a4) % p, int(Ei.a6) % p
    count = 1  # infinity
    for x in range(p):
        fx = (((x + a2) * x + a4) * x + a6) % p
        if fx == 0:
            count += 1
        else:
            count += 1 + legendre_symbol(fx, p)
    return count


def _torsion_multiple_bound(E: EllipticCurve, num_primes: int = 10) -> int:
    """gcd of #E(F_p) over good odd primes; a multiple of #E(Q)_tors."""
    g = 0
    p, found = 3, 0
    while found < num_primes:
        try:
            n = count_points_mod_p(E, p)
        except ValueError:
            p += 2
            continue
        g = math.gcd(g, n)
        found += 1
        p += 2
        if g == 1:
            break
    return g


def _integer_roots_monic_cubic(a2: int, a4: int, a6: int) -> list[int]:
    # Roots of x^3 + a2 x^2 + a4 x + a6 in Z via divisors of the constant term.
    if a6 == 0:
        roots = [0]
        # remaining quadratic x^2 + a2 x + a4
        d = a2 * a2 - 4 * a4
        if d >= 0:
            s = math.isqrt(d)
            if s * s == d:
                for r in {(-a2 + s), (-a2 - s)}:
                    if r % 2 == 0:
                        roots.append(r // 2)
        return sorted(set(roots))
    roots = []
    for d in _divisors(abs(a6)):
        for r in (d, -d):
            if ((r + a2) * r + a4) * r + a6 == 0:
                roots.append(r)
    return sorted(set(roots))


def _divisors(n: int) -> list[int]:
    fac = factorize(n)
    divs = [1]
    for p, e in fac.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return divs


def torsion_subgroup(E: EllipticCurve) -> list:
    """All rational torsion points, O first.

    Candidates come from y = 0 (rational 2-torsion) and from the Lutz-Nagell
    divisibility y^2 | disc on an integral model; each candidate is certified
    by checking its order divides the Mazur cap 12, and the result is closed
    under the group law.
    """
    Ei, u = E.integral_model()
    bound = _torsion_multiple_bound(Ei)
    found = {None}  # None stands for INF
    a2, a4, a6 = int(Ei.a2), int(Ei.a4), int(Ei.a6)
    candidates = set()
    for r in _integer_roots_monic_cubic(a2, a4, a6):
        candidates.add((Fraction(r), Fraction(0)))
    disc = abs(int(Ei.discriminant()))
    for y in _divisors(disc):
        if y * y > disc or (disc % (y * y)):
            continue
        for x in _integer_roots_monic_cubic(a2, a4, a6 - y * y):
            candidates.add((Fraction(x), Fraction(y)))
            candidates.add((Fraction(x), Fraction(-y)))
    for x, y in candidates:
        P = ECPoint(x, y)
        if not Ei.contains(P):
            continue
        Q, order = P, None
        for n in range(1, MAZUR_ORDER_CAP + 1):
            if Q is INF:
                order = n - 1
                break
            Q = Ei.add(Q, P)
        else:
            if Q is INF:
                order = MAZUR_ORDER_CAP
        if order:
            found.add((P.x, P.y))
    # Close under the group law (redundant for Lutz-Nagell candidates, cheap).
    pts = [INF] + [ECPoint(x, y) for (x, y) in sorted(p for p in found if p)]
    closed = True
    while closed:
        closed = False
        for P in list(pts[1:]):
            for Q in list(pts[1:]):
                R = Ei.add(P, Q)
                if R is not INF and (R.x, R.y) not in found:
                    found.add((R.x, R.y))
                    pts.append(R)
                    closed = True
    assert bound % (len(found)) == 0 or bound == 0
    # Map back from the integral model to the original coordinates.
    out = [INF]
    uu = Fraction(u)
    for xy in sorted(p for p in found if p):
        out.append(ECPoint(xy[0] / uu**2, xy[1] / uu**3))
    return out


def naive_height(P) -> float:
    """Weil height of the x-coordinate: log max(|num|, |den|); h(O) = 0."""
    if P is INF:
        return 0.0
    x = P.x
    return log_abs(max(abs(x.numerator), x.denominator))


def is_torsion(E: EllipticCurve, P) -> bool:
    if P is INF:
        return True
    Q = P
    for _ in range(MAZUR_ORDER_CAP):
        Q = E.add(Q, P)
        if Q is INF:
            return True
    return False


def _duplication_forms(E: EllipticCurve):
    """Integer homogeneous quartics (N, D) with x(2P) = N(p, q)/D(p, q) for
    x(P) = p/q, on an integral model."""
    a2, a4, a6 = int(E.a2), int(E.a4), int(E.a6)
    N = IntPoly([a4 * a4 - 4 * a2 * a6, -8 * a6, -2 * a4, 0, 1])
    D = IntPoly([4 * a6, 4 * a4, 4 * a2, 4])
    return N, D


def _bezout_data(E: EllipticCurve):
    """Certified constants for the duplication pair (N, D):

    returns (c_q, U, V, c_p, Ur, Vr) with integer cubic forms satisfying
    U*N' + V*D' = c_q * q^7 and Ur*N' + Vr*D' = c_p * p^7 on the homogenized
    pair.  Any common divisor of (N'(p,q), D'(p,q)) for coprime (p, q)
    divides c_p * c_q.
    """
    N, D = _duplication_forms(E)
    nq = [Fraction(c) for c in N.coeffs]
    dq = [Fraction(c) for c in D.coeffs]
    g, u, v = qpoly_ext_gcd(nq, dq)
    assert g == [Fraction(1)], "duplication pair not coprime (singular curve?)"
    cq, U, V = _integerize(u, v)
    nr = [Fraction(c) for c in N.reverse(4).coeffs]
    dr = [Fraction(c) for c in D.reverse(4).coeffs]
    g2, ur, vr = qpoly_ext_gcd(nr, dr)
    assert g2 == [Fraction(1)]
    cp, Ur, Vr = _integerize(ur, vr)
    return cq, U, V, cp, Ur, Vr


def _integerize(u, v):
    # Scale u*N + v*D = 1 to integer cofactors U*N + V*D = c, c > 0 minimal
    # for this denominator choice.
    den = 1
    for c in list(u) + list(v):
        den = den * c.denominator // math.gcd(den, c.denominator)
    U = [int(c * den) for c in u]
    V = [int(c * den) for c in v]
    content = 0
    for c in U + V + [den]:
        content = math.gcd(content, abs(c))
    if content > 1:
        den //= content
        U = [c // content for c in U]
        V = [c // content for c in V]
    return den, U, V


@lru_cache(maxsize=None)
def _height_machine(key):
    return _HeightMachine(EllipticCurve(*key))


def _machine_for(E: EllipticCurve):
    Ei, u = E.integral_model()
    return _height_machine((Ei.a2, Ei.a4, Ei.a6))


class _HeightMachine:
    """Per-curve data for canonical height computation (integral model)."""

    def __init__(self, E: EllipticCurve):
        self.E = E
        self.N, self.D = _duplication_forms(E)
        assert self.N.coeffs[3] == 0  # _arch_step exploits the missing x^3 term
        cq, U, V, cp, Ur, Vr = _bezout_data(E)
        self.cq, self.cp = cq, cp
        self.content_bound = cp * cq
        sum_uv = sum(abs(c) for c in U) + sum(abs(c) for c in V)
        sum_uvr = sum(abs(c) for c in Ur) + sum(abs(c) for c in Vr)
        # Lower bound for max(|N|, |D|) on the max-norm unit sphere.
        self.m_min = min(cq / sum_uv, cp / sum_uvr)
        self.g_sum = max(sum(abs(c) for c in self.N.coeffs),
                         sum(abs(c) for c in self.D.coeffs))
        self.c_upper = math.log(self.g_sum)
        self.c_lower = -math.log(self.m_min) + math.log(self.content_bound)
        # |hhat - h| <= (step bound)/3 from the telescoping series.
        self.step_bound = max(self.c_upper, self.c_lower)
        self.bad_primes = sorted(factorize(self.content_bound)) \
            if self.content_bound > 1 else []

    def gap_bounds(self):
        """(sup(hhat - h), sup(h - hhat)) over all rational points."""
        return self.c_upper / 3, self.c_lower / 3

    def _arch_step(self, u0, u1):
        n = self.N.coeffs
        d = self.D.coeffs
        w0 = ((u0 * u0 * u0 * u0) * n[4] + (u0 * u0) * (u1 * u1) * n[2]
              + u0 * (u1 * u1 * u1) * n[1] + (u1 * u1 * u1 * u1) * n[0])
        w1 = u1 * (d[3] * u0 * u0 * u0 + d[2] * u0 * u0 * u1
                   + d[1] * u0 * u1 * u1 + d[0] * u1 * u1 * u1)
        m = max(abs(w0), abs(w1))
        return w0 / m, w1 / m, math.log(m)

    def height(self, p0: int, q0: int, tol: float) -> float:
        total_const = self.step_bound + (math.log(self.content_bound)
                                         if self.content_bound > 1 else 0.0)
        n_steps = max(3, math.ceil(math.log(total_const / (1.5 * tol)) / math.log(4)))
        # Archimedean part: normalized direction iteration.
        shift = max(abs(p0).bit_length(), abs(q0).bit_length()) - 500
        if shift > 0:
            f0, f1 = float(p0 >> shift) if p0 >= 0 else -float(-p0 >> shift), \
                     float(q0 >> shift)
        else:
            f0, f1 = float(p0), float(q0)
        m = max(abs(f0), abs(f1))
        u0, u1 = f0 / m, f1 / m
        h = log_abs(max(abs(p0), abs(q0)))
        weight = 1.0
        arch = 0.0
        for _ in range(n_steps):
            weight /= 4.0
            u0, u1, s = self._arch_step(u0, u1)
            arch += weight * s
        # Finite part: exact content removal at the bad primes.
        fin = 0.0
        for ell in self.bad_primes:
            e = 0
            cb = self.content_bound
            while cb % ell == 0:
                cb //= ell
                e += 1
            prec = (n_steps + 2) * e + 4
            mod = ell**prec
            w = (p0 % mod, q0 % mod)
            weight = 1.0
            log_ell = math.log(ell)
            for _ in range(n_steps):
                weight /= 4.0
                a0 = _eval_homog(self.N.coeffs, w[0], w[1], mod)
                a1 = _eval_homog_d(self.D.coeffs, w[0], w[1], mod)
                delta = min(_val_capped(a0, ell, e), _val_capped(a1, ell, e))
                assert delta <= e
                if delta:
                    fin += weight * delta * log_ell
                    mod //= ell**delta
                    a0 = (a0 // ell**delta) % mod
                    a1 = (a1 // ell**delta) % mod
                else:
                    a0 %= mod
                    a1 %= mod
                w = (a0, a1)
        return h + arch - fin


def _eval_homog(coeffs, p, q, mod):
    # sum coeffs[i] * p^i * q^(4-i) mod `mod` (quartic coefficient list).
    powers_p = [1, p % mod]
    powers_q = [1, q % mod]
    for _ in range(3):
        powers_p.append(powers_p[-1] * p % mod)
        powers_q.append(powers_q[-1] * q % mod)
    acc = 0
    for i, c in enumerate(coeffs):
        acc = (acc + c * powers_p[i] * powers_q[4 - i]) % mod
    return acc


def _eval_homog_d(coeffs, p, q, mod):
    # Degree-3 list homogenized to quartic by one extra factor of q.
    powers_p = [1, p % mod, p * p % mod, p * p * p % mod]
    powers_q = [1, q % mod, q * q % mod, q * q * q % mod, pow(q, 4, mod)]
    acc = 0
    for i, c in enumerate(coeffs):
        acc = (acc + c * powers_p[i] * powers_q[4 - i]) % mod
    return acc


def _val_capped(a, ell, cap):
    # v_ell(a) but never looking past cap (a may be a truncated residue).
    if a == 0:
        return cap + 1
    v = 0
    while v <= cap and a % ell == 0:
        a //= ell
        v += 1
    return v


def height_gap_bounds(E: EllipticCurve):
    """Rigorous (upper, lower) bounds: hhat - h <= upper and h - hhat <=
    lower for all rational points, from the duplication-polynomial Bezout
    identities on an integral model."""
    return _machine_for(E).gap_bounds()


def height_difference_bound(E: EllipticCurve) -> float:
    """A single C with |hhat - h| <= C, used for iteration control."""
    return max(height_gap_bounds(E))


def canonical_height(E: EllipticCurve, P, tol: float = 1e-10) -> float:
    """hhat(P) = lim 4^-n h(x(2^n P)) to within tol; exactly 0 on torsion."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    E._require(P)
    if is_torsion(E, P):
        return 0.0
    Ei, u = E.integral_model()
    x = P.x * u * u
    machine = _machine_for(E)
    return machine.height(x.numerator, x.denominator, tol)


def canonical_height_doubling(E: EllipticCurve, P, tol: float = 1e-2) -> float:
    """Literal doubling-limit oracle: iterate P -> 2P with exact coordinates
    and return 4^-n h(x(2^n P)) once the telescoping tail (step bound / 3 *
    4^-n) is below tol.  Feasible only for loose tolerances; the fast path
    in `canonical_height` computes the same limit."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    E._require(P)
    if is_torsion(E, P):
        return 0.0
    machine = _machine_for(E)
    n_steps = max(1, math.ceil(math.log(machine.step_bound / (3 * tol)) / math.log(4)))
    Ei, u = E.integral_model()
    Q = ECPoint(P.x * u * u, P.y * u**3)
    for _ in range(n_steps):
        Q = Ei.add(Q, Q)
    return naive_height(Q) / 4.0**n_steps
