"""Tuples over Z/NZ: the border-merging sum, equivalence up to rotation
and reversal, and membership in the equation M_n(a_1,...,a_n) = +/-Id."""

from __future__ import annotations

from dataclasses import dataclass

from . import core
from ._numbers import crt, factorize
from .modring import ResidueRing, chain, pm_id

# Below this modulus, roots of x*(x-k) are found by direct enumeration;
# above it, per-prime-power analysis plus CRT recombination takes over.
_ENUMERATION_LIMIT = 10**6


@dataclass(frozen=True)
class ModTuple:
    """An ordered tuple of canonical residues, length >= 1."""

    ring: ResidueRing
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) == 0:
            raise ValueError("tuple must have at least one entry")
        object.__setattr__(
            self, "entries", tuple(self.ring.canon(v) for v in self.entries)
        )

    def __len__(self) -> int:
        return len(self.entries)


def oplus(u: ModTuple, v: ModTuple) -> ModTuple:
    """(a_1+b_m, a_2, ..., a_{n-1}, a_n+b_1, b_2, ..., b_{m-1}).

    Both operands need length >= 2; the result has length n+m-2.  When v
    solves the equation, u (+) v solves it iff u does.
    """
    if u.ring != v.ring:
        raise ValueError("operands live in different rings")
    if len(u) < 2 or len(v) < 2:
        raise ValueError("both operands need length >= 2")
    a, b = u.entries, v.entries
    merged = (a[0] + b[-1],) + a[1:-1] + (a[-1] + b[0],) + b[1:-1]
    return ModTuple(u.ring, merged)


def equivalent(u: ModTuple, v: ModTuple) -> bool:
    """True iff v is a cyclic rotation of u or of u reversed."""
    if u.ring != v.ring:
        raise ValueError("operands live in different rings")
    if len(u) != len(v):
        return False

    def is_rotation(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
        n = len(a)
        doubled = a + a
        return any(doubled[i : i + n] == b for i in range(n))

    return is_rotation(u.entries, v.entries) or is_rotation(
        tuple(reversed(u.entries)), v.entries
    )


def solution_sign(t: ModTuple) -> int | None:
    """+1 / -1 when the tuple solves the equation with that sign, else None."""
    return pm_id(chain(t.ring, t.entries))


def _prime_power_roots(p: int, e: int, k: int) -> list[int]:
    """Roots of x*(x-k) mod p**e.

    With a = min(v_p(k), e): if 2a >= e every multiple of p**ceil(e/2)
    works and nothing else does; otherwise the roots split into the two
    classes x = 0 and x = k mod p**(e-a).
    """
    q = p**e
    k %= q
    a = 0
    kk = k
    while a < e and kk % p == 0:
        kk //= p
        a += 1
    if 2 * a >= e:
        step = p ** ((e + 1) // 2)
        return list(range(0, q, step))
    step = p ** (e - a)
    roots = set(range(0, q, step))
    roots.update((k + i * step) % q for i in range(p**a))
    return sorted(roots)


def _roots_by_crt(n: int, k: int) -> list[int]:
    """Factored-modulus path: solve per prime power, recombine by CRT."""
    factors = sorted(factorize(n).items())
    combos: list[list[tuple[int, int]]] = [[]]
    for p, e in factors:
        q = p**e
        combos = [c + [(r, q)] for c in combos for r in _prime_power_roots(p, e, k)]
    return sorted(crt(c)[0] for c in combos)


def bordered_constraint_roots(ring: ResidueRing, k: int) -> list[int]:
    """All x with x*(x-k) = 0 mod N, ascending; always contains 0 and k.

    Any solution of the bordered form (x, k, ..., k, x) forces this
    constraint on x, so these are the only candidate border values.
    """
    n = ring.modulus
    k = ring.canon(k)
    if n <= _ENUMERATION_LIMIT:
        return core.constraint_roots(n, k)
    return _roots_by_crt(n, k)
