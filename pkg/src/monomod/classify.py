"""Classify moduli by which monomial minimal solutions are irreducible.

Three nested families over N >= 2:

  * monomially irreducible: every k != 0 gives an irreducible minimal
    solution;
  * quasi monomially irreducible: every invertible k does;
  * semi monomially irreducible: every doubled unit k = 2a does, where
    a runs over residues invertible mod N (mod N/2 when N = 2 mod 4,
    otherwise the candidate set would be empty for half the units).

Deciders walk their candidate list in ascending order and stop at the
first reducible k; predictors give the closed-form characterizations
the deciders are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from ._numbers import euler_phi, is_prime, prime_power
from .modring import ResidueRing
from .monomial import (
    ReductionWitness,
    find_reduction,
    minimal_size_prime_fast,
)

__all__ = [
    "ClassVerdict",
    "Counterexample",
    "decide_monomial",
    "decide_quasi",
    "decide_semi",
    "euler_phi",
    "omega_count",
    "predict_monomial",
    "predict_quasi",
    "predict_reducible_set_2x3m",
    "semi_candidates",
    "sizes_table",
    "units_only",
]

MONOMIAL_SPORADIC = frozenset({4, 6, 8, 12, 24})

# Odd primes whose nonzero minimal sizes all avoid 2 mod 4; the building
# blocks of the product closure for semi irreducibility.
SEMI_CLOSURE_PRIMES = frozenset({3, 5, 7, 17, 31, 127})


@dataclass(frozen=True)
class Counterexample:
    """A reducible candidate k together with its reduction witness."""

    k: int
    witness: ReductionWitness


@dataclass(frozen=True)
class ClassVerdict:
    """Outcome of one irreducibility class decision for one modulus.
    checked_k lists the candidates examined, in order, including the
    failing one when the verdict is negative."""

    modulus: int
    kind: str  # "monomial" | "quasi" | "semi"
    verdict: bool
    counterexample: Counterexample | None
    checked_k: tuple[int, ...]


def _decide(ring: ResidueRing, kind: str, candidates: Iterable[int]) -> ClassVerdict:
    checked: list[int] = []
    for k in candidates:
        checked.append(k)
        witness = find_reduction(ring, k)
        if witness is not None:
            return ClassVerdict(
                ring.modulus, kind, False, Counterexample(k, witness), tuple(checked)
            )
    return ClassVerdict(ring.modulus, kind, True, None, tuple(checked))


def decide_monomial(ring: ResidueRing) -> ClassVerdict:
    """Is every nonzero minimal monomial solution irreducible?"""
    return _decide(ring, "monomial", range(1, ring.modulus))


def decide_quasi(ring: ResidueRing) -> ClassVerdict:
    """Is every invertible k irreducible?"""
    n = ring.modulus
    units = (k for k in range(1, n) if gcd(k, n) == 1)
    return _decide(ring, "quasi", units)


def semi_candidates(ring: ResidueRing) -> list[int]:
    """Ascending doubled units 2a, a invertible mod N (mod N/2 when
    N = 2 mod 4).  0 can only appear for N = 2 and is dropped: the
    0-monomial solution is handled by the k = 0 convention, not here."""
    n = ring.modulus
    base = n // 2 if n % 4 == 2 else n
    doubled = {2 * a % n for a in range(1, n) if gcd(a, base) == 1}
    doubled.discard(0)
    return sorted(doubled)


def decide_semi(ring: ResidueRing) -> ClassVerdict:
    """Is every doubled unit irreducible?  (True vacuously for N = 2.)"""
    return _decide(ring, "semi", semi_candidates(ring))


def predict_monomial(n: int) -> bool:
    """Closed form: primes and the five sporadic values 4, 6, 8, 12, 24."""
    if n < 2:
        raise ValueError("modulus must be >= 2")
    return is_prime(n) or n in MONOMIAL_SPORADIC


def predict_quasi(n: int) -> bool:
    """Closed form: prime powers and 2**a * 3**b with a, b >= 1."""
    if n < 2:
        raise ValueError("modulus must be >= 2")
    if prime_power(n) is not None:
        return True
    if n % 6 != 0:
        return False
    m = n
    for p in (2, 3):
        while m % p == 0:
            m //= p
    return m == 1


def predict_reducible_set_2x3m(m: int) -> list[int]:
    """Over N = 2 * 3**m (m >= 2): the k in [0, N) with reducible
    minimal solution are exactly the multiples of 3 other than
    3**(m-1), 3**m and 5 * 3**(m-1)."""
    if m < 2:
        raise ValueError("m must be >= 2")
    n = 2 * 3**m
    kept = {3 ** (m - 1), 3**m, 5 * 3 ** (m - 1)}
    return [k for k in range(0, n, 3) if k not in kept]


def omega_count(ring: ResidueRing) -> int:
    """Number of k in [1, N) whose minimal solution is irreducible."""
    return sum(
        1 for k in range(1, ring.modulus) if find_reduction(ring, k) is None
    )


def units_only(ring: ResidueRing) -> bool:
    """Does irreducibility coincide exactly with invertibility?
    (Holds precisely for N = 2 and odd prime powers.)"""
    n = ring.modulus
    return all(
        (find_reduction(ring, k) is None) == (gcd(k, n) == 1)
        for k in range(1, n)
    )


def sizes_table(p: int) -> list[tuple[int, int]]:
    """Rows (k, size) for k = 1 .. (p-1)//2 over a prime modulus;
    k and -k always share a size, so half the range is the whole story."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return [
        (k, minimal_size_prime_fast(p, k)[0]) for k in range(1, (p - 1) // 2 + 1)
    ]
