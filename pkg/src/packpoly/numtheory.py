"""Exact number-theory primitives behind the quadratic classifier.

Jacobi/Legendre symbols, square-free decomposition by trial division,
Chinese remaindering, a budgeted prime search in arithmetic progressions,
and the construction of a prime modulo which a given non-square is a
quadratic non-residue.  All arithmetic is arbitrary-precision integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from math import gcd, isqrt
from typing import Sequence

from .errors import (
    BudgetExhausted,
    FactorizationTooHard,
    IsSquare,
    ModuliNotCoprime,
    NotCoprime,
    NotOddPrime,
    ZeroInput,
)

# Witnesses making Miller-Rabin deterministic for n < 3.317e24, far beyond
# anything the bounded searches in this package can reach; a strong
# probable-prime test past that.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin with a fixed deterministic witness set."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n, by binary reciprocity."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs odd positive n, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p): 0 if p | a, else +-1 by quadratic character.

    Computed through the Jacobi symbol, which agrees with the Legendre
    symbol whenever p is an odd prime; a probable-prime check guards
    against misuse on composite or even moduli.
    """
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise NotOddPrime(f"modulus must be an odd prime, got {p}")
    return jacobi(a, p)


def is_square(n: int) -> int | None:
    """The integer square root of n if n is a perfect square, else None."""
    if n < 0:
        return None
    t = isqrt(n)
    return t if t * t == n else None


@dataclass(frozen=True)
class SquareDecomposition:
    """|D| split as 2^beta * m^2 * (product of odd_primes), sign (-1)^alpha.

    alpha and beta are 0 or 1; odd_primes are distinct, ascending.
    """

    alpha: int
    beta: int
    m: int
    odd_primes: tuple[int, ...]

    def reassemble(self) -> int:
        value = (-1) ** self.alpha * 2**self.beta * self.m * self.m
        for q in self.odd_primes:
            value *= q
        return value


def square_decompose(D: int, trial_limit: int = 10**6) -> SquareDecomposition:
    """Factor D into sign, power of two, square part, and square-free odd part.

    Trial division only; a cofactor whose least factor exceeds trial_limit
    raises FactorizationTooHard rather than stalling.
    """
    if D == 0:
        raise ZeroInput("cannot decompose zero")
    n = abs(D)
    alpha = 1 if D < 0 else 0
    e2 = 0
    while n % 2 == 0:
        n //= 2
        e2 += 1
    m = 1 << (e2 // 2)
    beta = e2 & 1
    odd: list[int] = []
    d = 3
    while d * d <= n:
        if d > trial_limit:
            raise FactorizationTooHard(
                f"no factor of remaining cofactor {n} below {trial_limit}"
            )
        if n % d == 0:
            exp = 0
            while n % d == 0:
                n //= d
                exp += 1
            m *= d ** (exp // 2)
            if exp & 1:
                odd.append(d)
        d += 2
    if n > 1:
        odd.append(n)  # prime cofactor, first power
    return SquareDecomposition(alpha=alpha, beta=beta, m=m, odd_primes=tuple(odd))


def crt(congruences: Sequence[tuple[int, int]]) -> tuple[int, int]:
    """Solve x = r_i (mod m_i) for pairwise coprime moduli.

    Returns (s, M) with M the product of the moduli and 0 <= s < M the
    unique solution.  Raises ModuliNotCoprime when two moduli share a
    factor.
    """
    s, M = 0, 1
    for r, mod in congruences:
        if mod <= 0:
            raise ValueError(f"modulus must be positive, got {mod}")
        if gcd(M, mod) != 1:
            raise ModuliNotCoprime(f"modulus {mod} shares a factor with {M}")
        inv = pow(M % mod, -1, mod)
        s += M * ((r - s) * inv % mod)
        M *= mod
    return s % M, M


def prime_in_ap(s: int, M: int, exceed: int, budget: int = 10**6) -> int:
    """Smallest prime p = s (mod M) with p > exceed, testing at most budget candidates."""
    if M <= 0:
        raise ValueError(f"modulus must be positive, got {M}")
    if gcd(s, M) != 1:
        raise NotCoprime(f"gcd({s}, {M}) != 1: the progression holds at most one prime")
    if budget <= 0:
        raise ValueError("budget must be positive")
    t = exceed + 1
    candidate = t + (s - t) % M
    for _ in range(budget):
        if candidate >= 2 and is_prime(candidate):
            return candidate
        candidate += M
    raise BudgetExhausted(
        f"no prime = {s} (mod {M}) above {exceed} among {budget} candidates"
    )


@dataclass(frozen=True)
class NonResidueCertificate:
    """A prime p with (D/p) = -1 and p coprime to ell."""

    D: int
    ell: int
    p: int

    def holds(self) -> bool:
        """Re-check the defining invariants from scratch."""
        if self.p < 3 or self.p % 2 == 0 or not is_prime(self.p):
            return False
        if self.ell % self.p == 0:
            return False
        return legendre(self.D, self.p) == -1


def nonresidue_prime(
    D: int,
    ell: int,
    budget: int = 10**6,
    trial_limit: int = 10**6,
    exceed: int | None = None,
) -> NonResidueCertificate:
    """A prime p > |ell| modulo which D is a quadratic non-residue.

    Writes D = (-1)^alpha 2^beta m^2 q_1...q_k and picks the residue class
    by cases: with no odd square-free primes, p = 3 (mod 4) handles
    D = -m^2 and p = 5 (mod 8) handles D = +-2 m^2; otherwise p = 1
    (mod 8), p = r_1 (mod q_1) for a non-residue r_1, and p = 1 (mod q_i)
    for the rest, combined by remaindering.  Any prime found in that class
    has (D/p) = -1 by multiplicativity and reciprocity, except primes
    dividing the square part m, which are skipped.

    Exists for every non-square D (raises IsSquare otherwise); the class
    search is bounded by budget candidates per scan.  `exceed` raises the
    floor above the default |ell|, letting callers ask for the next
    witness prime when the smallest one does not suit them.
    """
    if D == 0 or ell == 0:
        raise ZeroInput("D and ell must both be nonzero")
    if is_square(D) is not None:
        raise IsSquare(f"{D} is a perfect square; every odd prime sees it as a residue")
    dec = square_decompose(D, trial_limit)
    if not dec.odd_primes:
        # D = -m^2 (beta = 0 forces alpha = 1 here) or D = +-2 m^2.
        s, M = (3, 4) if dec.beta == 0 else (5, 8)
    else:
        q1 = dec.odd_primes[0]
        r1 = next(r for r in count(2) if legendre(r, q1) == -1)
        parts = [(1, 8), (r1, q1)] + [(1, q) for q in dec.odd_primes[1:]]
        s, M = crt(parts)
    floor = abs(ell) if exceed is None else max(abs(ell), exceed)
    while True:
        p = prime_in_ap(s, M, floor, budget)
        if D % p != 0:
            break
        floor = p  # p divides the square part of D; (D/p) would be 0
    return NonResidueCertificate(D=D, ell=ell, p=p)
