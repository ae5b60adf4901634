"""Dual knots in lens spaces and the hyperbolicity certificate phi.

After a knot with an order-p lens surgery is filled, the core of the glued
solid torus is a knot in L(p, q) determined by one extra residue k.  Walking
the residues i*q mod p for i = 1 .. p-1 and counting, around the position of
k, how many terms smaller/larger than k come before/after it gives four
counts (s, ell, s', ell'); their minimum phi decides hyperbolicity of the
original knot: hyperbolic iff phi >= 2.

The counting scan is streaming (two counters, O(1) memory) because orders in
the Fibonacci-parameter family reach millions; ``basic_stats_bruteforce``
materialises the whole residue sequence instead and exists as the reference
implementation the streaming scan is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .sequences import InvalidIndex, fib

__all__ = [
    "BasicSequenceStats",
    "DualKnotTriple",
    "basic_stats",
    "basic_stats_bruteforce",
    "fibonacci_kplus_data",
    "kplus_dual",
    "kplus_is_hyperbolic",
]


@dataclass(frozen=True)
class DualKnotTriple:
    """(p, q, k): the surgered lens space L(p, q) plus the core parameter k."""

    p: int
    q: int
    k: int

    def __post_init__(self):
        if self.p < 2:
            raise ValueError(f"order must be >= 2, got {self.p}")
        if not 1 <= self.q < self.p or gcd(self.p, self.q) != 1:
            raise ValueError(f"parameter {self.q} invalid mod {self.p}")
        if not 1 <= self.k < self.p:
            raise ValueError(f"core parameter {self.k} must lie in [1, {self.p})")


@dataclass(frozen=True)
class BasicSequenceStats:
    """Counts around the position h of k in the residue walk i*q mod p."""

    h: int
    s: int
    ell: int
    s_prime: int
    ell_prime: int
    phi: int


def kplus_dual(a: int, b: int) -> DualKnotTriple:
    """Dual-knot triple of the doubly primitive knot kplus(a, b).

    With p = a^2 + ab + b^2 and w = b/(a+b) mod p, the surgery yields
    L(p, w^2) and the core parameter is -w mod p.
    """
    if a < 1 or b < 1 or gcd(a, b) != 1:
        raise ValueError(f"need coprime positive parameters, got ({a}, {b})")
    p = a * a + a * b + b * b
    w = b * pow(a + b, -1, p) % p
    return DualKnotTriple(p, w * w % p, -w % p)


def basic_stats(triple: DualKnotTriple) -> BasicSequenceStats:
    """Streaming scan of the residue walk; O(1) memory.

    The position h of k is k/q mod p, so the walk only needs two counters
    on each side of h instead of the materialised sequence.
    """
    p, q, k = triple.p, triple.q, triple.k
    h = k * pow(q, -1, p) % p
    s = ell = 0
    cur = 0
    for _ in range(1, h):
        cur += q
        if cur >= p:
            cur -= p
        if cur < k:
            s += 1
        else:
            ell += 1
    s_prime = ell_prime = 0
    cur = k
    for _ in range(h + 1, p):
        cur += q
        if cur >= p:
            cur -= p
        if cur < k:
            s_prime += 1
        else:
            ell_prime += 1
    return BasicSequenceStats(h, s, ell, s_prime, ell_prime, min(s, ell, s_prime, ell_prime))


def basic_stats_bruteforce(triple: DualKnotTriple) -> BasicSequenceStats:
    """Reference implementation that materialises the whole residue walk."""
    p, q, k = triple.p, triple.q, triple.k
    walk = [i * q % p for i in range(1, p)]
    h = walk.index(k) + 1
    before = walk[: h - 1]
    after = walk[h:]
    s = sum(1 for v in before if v < k)
    ell = sum(1 for v in before if v > k)
    s_prime = sum(1 for v in after if v < k)
    ell_prime = sum(1 for v in after if v > k)
    return BasicSequenceStats(h, s, ell, s_prime, ell_prime, min(s, ell, s_prime, ell_prime))


def kplus_is_hyperbolic(a: int, b: int) -> bool:
    """True iff kplus(a, b) is hyperbolic, decided by phi >= 2."""
    return basic_stats(kplus_dual(a, b)).phi >= 2


def fibonacci_kplus_data(n: int) -> DualKnotTriple:
    """Closed-form dual triple of kplus(F(n+2), F(n)), n >= 1.

    p = 4 F(n) F(n+2) + (-1)^n, q ≡ (-1)^(n+1) 4 F(n)^2 and
    k ≡ (-1)^n 4 F(n) (F(n) + F(n+2)), all reduced mod p.
    """
    if n < 1:
        raise InvalidIndex("index must be >= 1")
    fn, fn2 = fib(n), fib(n + 2)
    sign = -1 if n % 2 else 1
    p = 4 * fn * fn2 + sign
    q = -sign * 4 * fn * fn % p
    k = sign * 4 * fn * (fn + fn2) % p
    return DualKnotTriple(p, q, k)
