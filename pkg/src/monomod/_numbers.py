"""Elementary integer arithmetic shared by the other modules.

Everything here is deterministic trial-division territory: the scans this
package performs stay below N ~ 1e8, where nothing fancier pays off.
"""

from __future__ import annotations

import math


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def inv_mod(a: int, n: int) -> int:
    """Inverse of a modulo n; raises ValueError if gcd(a, n) != 1."""
    g, x, _ = egcd(a % n, n)
    if g != 1:
        raise ValueError(f"{a} is not invertible modulo {n}")
    return x % n


def crt_pair(a1: int, n1: int, a2: int, n2: int) -> tuple[int, int]:
    """Combine x = a1 (mod n1), x = a2 (mod n2) for coprime n1, n2."""
    g, u, _ = egcd(n1, n2)
    if g != 1:
        raise ValueError(f"moduli {n1} and {n2} are not coprime")
    n = n1 * n2
    # x = a1 + n1 * u * (a2 - a1) works because n1*u = 1 (mod n2)
    return (a1 + n1 * u * (a2 - a1)) % n, n


def crt(pairs: list[tuple[int, int]]) -> tuple[int, int]:
    """Solve x = a_i (mod n_i) for pairwise coprime moduli.

    Returns (x, prod(n_i)) with x canonical.  Raises ValueError on an
    empty input or non-coprime moduli.
    """
    if not pairs:
        raise ValueError("crt needs at least one congruence")
    a, n = pairs[0]
    a %= n
    for b, m in pairs[1:]:
        a, n = crt_pair(a, n, b, m)
    return a, n


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit by Eratosthenes."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i, f in enumerate(flags) if f]


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine for n <= ~1e10."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {p: exponent} by trial division."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    """Euler's totient via the factorization of n."""
    if n < 1:
        raise ValueError("euler_phi expects a positive integer")
    out = n
    for p in factorize(n):
        out = out // p * (p - 1)
    return out


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, e) if n = p**e with e >= 1, else None."""
    if n < 2:
        return None
    fac = factorize(n)
    if len(fac) != 1:
        return None
    return next(iter(fac.items()))
