"""Fibonacci numbers, two auxiliary pair sequences, and exact identity checks.

Two families of integer pairs (a_n, b_n) drive the torus-knot pair
constructions:

* ``fibonacci``: a_n = F(n+2) and b_n = F(n+3) + F(n+1), so the b_n are
  Lucas numbers.  Starts (2, 4), (3, 7), (5, 11), ...
* ``pell``: a_1 = 2, b_1 = 3 with a_{n+1} = a_n + b_n and
  b_{n+1} = a_{n+1} + a_n.  Starts (2, 3), (5, 7), (12, 17), ...

``check_identity`` evaluates both sides of the closed-form identities these
sequences satisfy and reports equality, exactly and with no tolerance; the
checks return booleans instead of asserting so that callers can aggregate
failures into reports.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "FAMILIES",
    "IDENTITIES",
    "InvalidIndex",
    "SequencePair",
    "check_identity",
    "fib",
    "pair",
]

FAMILIES = ("fibonacci", "pell")

IDENTITIES = ("cassini", "fib_cross", "pell_cross", "pell_product", "fib_quartic")


class InvalidIndex(ValueError):
    """Index outside the valid range of a sequence or identity."""


def fib(n: int) -> int:
    """The n-th Fibonacci number, F(0) = 0 and F(1) = 1."""
    if n < 0:
        raise InvalidIndex("Fibonacci index must be >= 0")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class SequencePair:
    """The n-th pair (a, b) of one of the two families."""

    family: str
    n: int
    a: int
    b: int


def pair(family: str, n: int) -> SequencePair:
    """The pair (a_n, b_n) of the requested family, n >= 1."""
    if n < 1:
        raise InvalidIndex("pair index must be >= 1")
    if family == "fibonacci":
        return SequencePair(family, n, fib(n + 2), fib(n + 3) + fib(n + 1))
    if family == "pell":
        a, b = 2, 3
        for _ in range(n - 1):
            a, b = a + b, 2 * a + b
        return SequencePair(family, n, a, b)
    raise InvalidIndex(f"unknown family {family!r}")


def check_identity(name: str, n: int) -> bool:
    """Evaluate both sides of the named identity at index n; True iff equal.

    cassini       F(k-1) F(k+1) - F(k)^2 = (-1)^k                    for k >= 1
    fib_cross     a(n+1) b(n) + (-1)^(n+1) = a(n) b(n+1) + (-1)^n    fibonacci, n >= 1
    pell_cross    2 a(n) b(n+1) + (-1)^(n+1) = 2 a(n+1) b(n) + (-1)^n    pell, n >= 1
    pell_product  4 a(n+1)^2 b(n+1)^2 + 1 =
                  (2 a(n+1) b(n+2) + (-1)^(n+2)) (2 a(n) b(n+1) + (-1)^(n+1))    pell, n >= 1
    fib_quartic   4 F(n)^4 + (-1)^n F(n+2)^2 =
                  (4 F(n) F(n+2) + (-1)^n) (F(n+2)^2 - 4 F(n) F(n+1))    n >= 0
    """
    if name == "cassini":
        if n < 1:
            raise InvalidIndex("cassini needs k >= 1")
        return fib(n - 1) * fib(n + 1) - fib(n) ** 2 == (-1) ** n
    if name == "fib_cross":
        if n < 1:
            raise InvalidIndex("fib_cross needs n >= 1")
        cur, nxt = pair("fibonacci", n), pair("fibonacci", n + 1)
        return nxt.a * cur.b + (-1) ** (n + 1) == cur.a * nxt.b + (-1) ** n
    if name == "pell_cross":
        if n < 1:
            raise InvalidIndex("pell_cross needs n >= 1")
        cur, nxt = pair("pell", n), pair("pell", n + 1)
        return 2 * cur.a * nxt.b + (-1) ** (n + 1) == 2 * nxt.a * cur.b + (-1) ** n
    if name == "pell_product":
        if n < 1:
            raise InvalidIndex("pell_product needs n >= 1")
        cur, nxt, far = pair("pell", n), pair("pell", n + 1), pair("pell", n + 2)
        lhs = 4 * nxt.a ** 2 * nxt.b ** 2 + 1
        rhs = (2 * nxt.a * far.b + (-1) ** (n + 2)) * (2 * cur.a * nxt.b + (-1) ** (n + 1))
        return lhs == rhs
    if name == "fib_quartic":
        if n < 0:
            raise InvalidIndex("fib_quartic needs n >= 0")
        fn, fn1, fn2 = fib(n), fib(n + 1), fib(n + 2)
        sign = (-1) ** n
        return 4 * fn ** 4 + sign * fn2 ** 2 == (4 * fn * fn2 + sign) * (fn2 ** 2 - 4 * fn * fn1)
    raise InvalidIndex(f"unknown identity {name!r}")
