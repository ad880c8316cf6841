"""Integrality of k = (p^{ab}-1)/(b(p^a-1)) and sufficient-condition catalogue.

k is an integer exactly when b divides 1 + x + ... + x^{b-1} with x = p^a.
The catalogue evaluates six published sufficient conditions for that
divisibility; each fired case must imply integrality (tested as a sweep).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .field import is_prime, prime_factors


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk-scale inputs)."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    phi = 1
    for r, t in factorize(n).items():
        phi *= (r - 1) * r ** (t - 1)
    return phi


def multiplicative_order(x: int, n: int) -> int | None:
    """Order of x modulo n, or None if gcd(x, n) != 1.

    Starts from phi(n) and strips prime factors while the power stays 1.
    """
    x %= n
    if n == 1:
        return 1
    import math

    if math.gcd(x, n) != 1:
        return None
    order = euler_phi(n)
    for r in prime_factors(order):
        while order % r == 0 and pow(x, order // r, n) == 1:
            order //= r
    return order


def repunit(x: int, b: int) -> int:
    """1 + x + ... + x^{b-1}, evaluated exactly."""
    return sum(x**j for j in range(b))


def k_is_integer(p: int, a: int, b: int) -> bool:
    """Whether b divides (p^{ab}-1)/(p^a-1)."""
    return repunit(p**a, b) % b == 0


@dataclass
class DivisibilityReport:
    p: int
    a: int
    b: int
    k_integer: bool
    cases: set = dc_field(default_factory=set)
    # ambiguity note: case (b) tests x = +-1 modulo the odd prime part only
    case_b_reading: str = "x congruent to +-1 mod r (r the odd prime), as written"

    def to_dict(self):
        return {
            "p": self.p,
            "a": self.a,
            "b": self.b,
            "k_integer": self.k_integer,
            "cases": sorted(self.cases),
        }


def remark_cases(p: int, a: int, b: int) -> DivisibilityReport:
    """Evaluate the six sufficient conditions with x = p^a.

    Cases are reported as a set (they overlap), never first-match.
    """
    x = p**a
    cases = set()
    fac = factorize(b)
    primes = sorted(fac)

    # (a) b prime, different from p, x = 1 mod b
    if len(fac) == 1 and fac[primes[0]] == 1 and b != p and x % b == 1:
        cases.add("a")

    # (b) b = 2r with r an odd prime, x coprime to b, x = +-1 mod r
    if set(fac.values()) == {1} and len(fac) == 2 and 2 in fac:
        r = max(primes)
        import math

        if r % 2 == 1 and math.gcd(x, b) == 1 and x % r in (1, r - 1):
            cases.add("b")

    # (c) b = r r' with r < r' odd primes, r does not divide r'-1, x = 1 mod rr'
    if set(fac.values()) == {1} and len(fac) == 2 and 2 not in fac:
        r, rp = primes
        if (rp - 1) % r != 0 and x % (r * rp) == 1:
            cases.add("c")

    # (d) b squarefree with >= 2 primes, all different from p,
    #     x = 1 mod r_1 and x^{b/r_i} = 1 mod r_i for i >= 2
    if set(fac.values()) == {1} and len(fac) >= 2 and p not in fac:
        r1 = primes[0]
        if x % r1 == 1 and all(
            pow(x, b // ri, ri) == 1 for ri in primes[1:]
        ):
            cases.add("d")

    # (e) b = r^t prime power with ord_b(x) = r^h for some 0 <= h < t
    if len(fac) == 1:
        r = primes[0]
        t = fac[r]
        order = multiplicative_order(x, b)
        if order is not None:
            of = factorize(order)
            is_power_of_r = not of or set(of) == {r}
            h = of.get(r, 0)
            if is_power_of_r and h < t:
                cases.add("e")

    # (f) b a product of >= 2 prime powers, primes different from p,
    #     ord_{r_i^{t_i}}(x) = r_i^{h_i} with h_i <= t_i - 1 for all i
    if len(fac) >= 2 and p not in fac:
        ok = True
        for r, t in fac.items():
            order = multiplicative_order(x, r**t)
            if order is None:
                ok = False
                break
            of = factorize(order)
            if (of and set(of) != {r}) or of.get(r, 0) > t - 1:
                ok = False
                break
        if ok:
            cases.add("f")

    return DivisibilityReport(p=p, a=a, b=b, k_integer=k_is_integer(p, a, b),
                              cases=cases)
