"""Oriented lens spaces L(p, q) and their homeomorphism predicates.

L(p, q) is the result of p/q-surgery on the unknot; reversing the
orientation replaces q by p - q.  Two spaces of the same order p are
orientation-preservingly homeomorphic when the parameters agree or are
inverse mod p, and homeomorphic (orientation ignored) when they agree up
to both sign and inversion.  All comparisons elsewhere in the package go
through these predicates, never through raw field equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

__all__ = [
    "InvalidOrder",
    "LensSpace",
    "NotCoprime",
    "canonical_form",
    "homeomorphic",
    "make_lens",
    "oriented_homeomorphic",
    "reverse_orientation",
]


class InvalidOrder(ValueError):
    """Lens space order p must be a positive integer."""


class NotCoprime(ValueError):
    """Lens space parameters must satisfy gcd(p, q) = 1."""


@dataclass(frozen=True, order=True)
class LensSpace:
    """L(p, q) with q stored reduced mod p; L(1, 0) is the 3-sphere."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise InvalidOrder(f"order must be >= 1, got {self.p}")
        if not 0 <= self.q < self.p:
            raise ValueError(f"parameter {self.q} is not reduced mod {self.p}")
        if gcd(self.p, self.q) != 1:
            raise NotCoprime(f"gcd({self.p}, {self.q}) != 1")

    def __str__(self):
        return f"L({self.p},{self.q})"


def make_lens(p: int, q: int) -> LensSpace:
    """Build L(p, q mod p), validating the order and coprimality."""
    if p < 1:
        raise InvalidOrder(f"order must be >= 1, got {p}")
    return LensSpace(p, q % p)


def reverse_orientation(space: LensSpace) -> LensSpace:
    """The same space with reversed orientation: q goes to p - q."""
    return make_lens(space.p, space.p - space.q)


def _parameter_orbit(space: LensSpace) -> set[int]:
    # all q' with L(p, q') homeomorphic to L(p, q): {±q, ±q^-1} mod p
    p, q = space.p, space.q
    if p == 1:
        return {0}
    inv = pow(q, -1, p)
    return {q, p - q, inv, p - inv}


def oriented_homeomorphic(first: LensSpace, second: LensSpace) -> bool:
    """True iff the spaces are homeomorphic preserving orientation.

    Same order p and q2 ≡ q1 or q1*q2 ≡ 1 (mod p).
    """
    if first.p != second.p:
        return False
    p = first.p
    return first.q == second.q or (first.q * second.q - 1) % p == 0


def homeomorphic(first: LensSpace, second: LensSpace) -> bool:
    """True iff the spaces are homeomorphic, orientations ignored.

    Same order p and q2 ≡ ±q1 or q1*q2 ≡ ±1 (mod p).
    """
    if first.p != second.p:
        return False
    return second.q in _parameter_orbit(first)


def canonical_form(space: LensSpace) -> tuple[int, int]:
    """(p, q_min) with q_min the least parameter in the unoriented class.

    Two lens spaces are homeomorphic exactly when their canonical forms
    are equal, so the pair serves as a dictionary key.
    """
    return space.p, min(_parameter_orbit(space))
