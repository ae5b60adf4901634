"""Exhaustive surgery enumeration, coincidence detection, and family checks.

``enumerate_surgeries`` walks every knot of the configured families whose
designated lens surgeries stay within the order bound and emits the
resulting lens spaces in a fixed deterministic order.  ``find_coincidences``
buckets that stream by (reduced slope, unoriented lens class) and keeps the
buckets with at least two members that are not the same knot; because the
artifact cannot always certify non-equivalence, every record carries both
its raw member count and the size of its largest subset of pairwise
certified-distinct members.

``verify_family`` re-derives, instance by instance, the six constructions
of knot pairs sharing a surgery slope and a lens space, and
``verify_no_nonintegral_pairs`` confirms at desk scale that two distinct
torus knots never share a lens space under a common slope of denominator
three or more.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

from .knots import (
    KnotDescriptor,
    Lens,
    SurgerySlope,
    cable,
    distinct,
    kplus,
    lens_surgery,
    natural_slope,
    tangle_hh,
    tangle_th,
    torus,
)
from .lens import LensSpace, canonical_form, homeomorphic, make_lens
from .sequences import InvalidIndex, fib, pair

__all__ = [
    "CoincidenceRecord",
    "FamilyCheck",
    "FamilyReport",
    "NonintegralReport",
    "SearchConfig",
    "VERIFY_FAMILIES",
    "enumerate_surgeries",
    "find_coincidences",
    "verify_family",
    "verify_no_nonintegral_pairs",
]

ALL_FAMILIES = frozenset({"torus", "cable", "kplus", "tangleHH", "tangleTH"})


@dataclass(frozen=True)
class SearchConfig:
    """Bounds and options for one enumeration run."""

    families: frozenset = ALL_FAMILIES
    torus_max: int = 500
    cable_max: int = 500
    kplus_max: int = 60
    tangle_max: int = 20
    order_max: int = 500
    slope_denominators: frozenset = frozenset({1, 2})
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "families", frozenset(self.families))
        object.__setattr__(self, "slope_denominators", frozenset(self.slope_denominators))
        if not self.families <= ALL_FAMILIES:
            raise ValueError(f"unknown families {sorted(self.families - ALL_FAMILIES)}")
        for name in ("torus_max", "cable_max", "kplus_max", "tangle_max", "order_max", "workers"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if not self.slope_denominators <= frozenset(range(1, 17)):
            raise ValueError("slope denominators must lie in [1, 16]")


def _family_params(config: SearchConfig, family: str) -> list[tuple[int, ...]]:
    # ordered parameter tuples; pruned so at least one slope fits order_max
    out = []
    if family == "torus":
        min_n = min(config.slope_denominators)
        for p in range(2, config.torus_max + 1):
            for q in range(p + 1, config.torus_max + 1):
                if min_n * p * q - 1 > config.order_max:
                    break
                if gcd(p, q) == 1:
                    out.append((p, q))
    elif family == "cable":
        for a in range(2, config.cable_max + 1):
            for b in range(a + 1, config.cable_max + 1):
                if 4 * a * b - 1 > config.order_max:
                    break
                if gcd(a, b) == 1:
                    out.append((a, b, -1))
                    out.append((a, b, 1))
    elif family == "kplus":
        for a in range(1, config.kplus_max + 1):
            for b in range(a, config.kplus_max + 1):
                if a * a + a * b + b * b > config.order_max:
                    break
                if gcd(a, b) == 1:
                    out.append((a, b))
    elif family == "tangleHH":
        for n in range(1, config.tangle_max + 1):
            if 27 * n * n + 45 * n + 21 > config.order_max:
                break
            out.append((n,))
    elif family == "tangleTH":
        for n in range(1, config.tangle_max + 1):
            if 18 * n * n + 33 * n + 15 > config.order_max:
                break
            out.append((n,))
    return out


def _surgeries_for(family: str, params_list, config: SearchConfig):
    # (knot, slope, lens space) triples for one family chunk, in order
    out = []
    if family == "torus":
        for p, q in params_list:
            knot = torus(p, q)
            for n in sorted(config.slope_denominators):
                for eps in (-1, 1):
                    m = n * p * q + eps
                    if not 1 <= m <= config.order_max:
                        continue
                    slope = SurgerySlope(m, n)
                    result = lens_surgery(knot, slope)
                    out.append((knot, slope, result.space))
    else:
        builder = {"cable": cable, "kplus": kplus, "tangleHH": tangle_hh, "tangleTH": tangle_th}[family]
        for params in params_list:
            knot = builder(*params)
            slope = natural_slope(knot)
            if slope.m > config.order_max:
                continue
            result = lens_surgery(knot, slope)
            if isinstance(result, Lens):
                out.append((knot, slope, result.space))
    return out


def _surgeries_task(task):
    family, params_list, config = task
    return _surgeries_for(family, params_list, config)


def enumerate_surgeries(config: SearchConfig):
    """Yield (knot, slope, lens space) in deterministic (family, params, slope) order."""
    for family in sorted(config.families):
        yield from _surgeries_for(family, _family_params(config, family), config)


def _all_surgeries(config: SearchConfig) -> list:
    if config.workers <= 1:
        return list(enumerate_surgeries(config))
    tasks = []
    for family in sorted(config.families):
        params = _family_params(config, family)
        step = max(1, -(-len(params) // config.workers))
        for start in range(0, len(params), step):
            tasks.append((family, params[start : start + step], config))
    triples = []
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        for part in pool.map(_surgeries_task, tasks):
            triples.extend(part)
    return triples


@dataclass(frozen=True)
class CoincidenceRecord:
    """Knots sharing one reduced slope and one unoriented lens class."""

    slope: SurgerySlope
    lens_class: tuple[int, int]
    members: tuple[tuple[KnotDescriptor, LensSpace], ...]

    @property
    def multiplicity(self) -> int:
        return len(self.members)

    def certified_members(self) -> tuple:
        """Largest member subset that is pairwise certified distinct."""
        knots = [knot for knot, _ in self.members]
        for size in range(len(knots), 0, -1):
            for combo in itertools.combinations(range(len(knots)), size):
                if all(
                    distinct(knots[i], knots[j]) == "distinct"
                    for i, j in itertools.combinations(combo, 2)
                ):
                    return tuple(self.members[i] for i in combo)
        return ()

    @property
    def certified_multiplicity(self) -> int:
        return len(self.certified_members())

    def to_json(self) -> str:
        obj = {
            "slope": str(self.slope),
            "lens": {"p": self.lens_class[0], "q_canonical": self.lens_class[1]},
            "members": [
                {"family": knot.family, "params": list(knot.params), "raw_q": space.q}
                for knot, space in self.members
            ],
            "certified_multiplicity": self.certified_multiplicity,
        }
        return json.dumps(obj, sort_keys=True)


def find_coincidences(config: SearchConfig) -> list[CoincidenceRecord]:
    """Group the enumeration by (slope, lens class); keep groups of >= 2 knots.

    Members that are the same knot up to a family symmetry are merged; pairs
    whose non-equivalence cannot be certified stay in the record and are
    accounted for by ``certified_multiplicity``.
    """
    buckets: dict = {}
    for knot, slope, space in _all_surgeries(config):
        key = (slope.m, slope.n, *canonical_form(space))
        buckets.setdefault(key, []).append((knot, space))
    records = []
    for (m, n, p, q_min), members in buckets.items():
        kept = []
        for knot, space in members:
            if any(distinct(knot, prev) == "equal" for prev, _ in kept):
                continue
            kept.append((knot, space))
        if len(kept) >= 2:
            records.append(CoincidenceRecord(SurgerySlope(m, n), (p, q_min), tuple(kept)))
    records.sort(key=lambda r: (r.lens_class[0], r.slope.m, r.slope.n, r.lens_class[1]))
    return records


VERIFY_FAMILIES = (
    "torus_torus",
    "torus_torus_half",
    "torus_cable",
    "cable_kplus",
    "tangle_kplus",
    "torus_tangle",
)

_VERIFY_MIN_N = {"cable_kplus": 3}


def _family_pair(family: str, n: int):
    # the two knots and their shared slope for instance n of a verified family
    if family == "torus_torus":
        cur, nxt = pair("fibonacci", n), pair("fibonacci", n + 1)
        return torus(nxt.a, cur.b), torus(cur.a, nxt.b), SurgerySlope(nxt.a * cur.b + (-1) ** (n + 1))
    if family == "torus_torus_half":
        cur, nxt = pair("pell", n), pair("pell", n + 1)
        return torus(cur.a, nxt.b), torus(cur.b, nxt.a), SurgerySlope(2 * cur.a * nxt.b + (-1) ** (n + 1), 2)
    if family == "torus_cable":
        return (
            torus(2 * n + 1, 4 * n + 4),
            cable(n + 1, 2 * n + 1, 1),
            SurgerySlope(8 * n * n + 12 * n + 5),
        )
    if family == "cable_kplus":
        fn, fn2 = fib(n), fib(n + 2)
        eps = -1 if n % 2 else 1
        return cable(fn, fn2, eps), kplus(fn2, fn), SurgerySlope(4 * fn * fn2 + eps)
    if family == "tangle_kplus":
        return (
            tangle_hh(n),
            kplus(3 * n + 1, 3 * n + 4),
            SurgerySlope(27 * n * n + 45 * n + 21),
        )
    if family == "torus_tangle":
        return (
            torus(3 * n + 2, 6 * n + 7),
            tangle_th(n),
            SurgerySlope(18 * n * n + 33 * n + 15),
        )
    raise InvalidIndex(f"unknown verification family {family!r}")


@dataclass(frozen=True)
class FamilyCheck:
    family: str
    n: int
    passed: bool
    witness: str


@dataclass(frozen=True)
class FamilyReport:
    family: str
    checks: tuple[FamilyCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def lines(self) -> list[str]:
        out = [
            f"{'PASS' if c.passed else 'FAIL'} {c.family} n={c.n} witness={c.witness}"
            for c in self.checks
        ]
        good = sum(c.passed for c in self.checks)
        out.append(f"{self.family}: {good}/{len(self.checks)} instances verified")
        return out


def verify_family(family: str, n_range) -> FamilyReport:
    """Check every instance n: both surgeries are lens spaces, the lens
    spaces are homeomorphic, and the two knots are certified distinct."""
    if family not in VERIFY_FAMILIES:
        raise InvalidIndex(f"unknown verification family {family!r}")
    ns = sorted(set(n_range))
    low = _VERIFY_MIN_N.get(family, 1)
    if not ns:
        raise InvalidIndex("empty index range")
    if ns[0] < low:
        raise InvalidIndex(f"{family} needs n >= {low}, got {ns[0]}")
    checks = []
    for n in ns:
        first, second, slope = _family_pair(family, n)
        res1, res2 = lens_surgery(first, slope), lens_surgery(second, slope)
        both_lens = isinstance(res1, Lens) and isinstance(res2, Lens)
        ok = (
            both_lens
            and homeomorphic(res1.space, res2.space)
            and distinct(first, second) == "distinct"
        )
        if both_lens:
            witness = f"{first} & {second} @ {slope} -> {res1.space} ~ {res2.space}"
        else:
            witness = f"{first} & {second} @ {slope} -> {res1} / {res2}"
        checks.append(FamilyCheck(family, n, ok, witness))
    return FamilyReport(family, tuple(checks))


@dataclass(frozen=True)
class NonintegralReport:
    """Outcome of the no-shared-lens-space scan for slope denominators >= 3."""

    pairs: tuple
    checked: int
    violations: tuple

    @property
    def clean(self) -> bool:
        return not self.violations


def verify_no_nonintegral_pairs(p_max: int, n_min: int, n_max: int) -> NonintegralReport:
    """Confirm distinct torus knots sharing p*q never share the lens space.

    For every pair of coprime parameter pairs (p, q), (r, s) with equal
    products and 2 <= q < p <= p_max, 2 <= s < r < p, and every denominator
    n in [n_min, n_max], the two candidate lens spaces L(n p q +- 1, n q^2)
    and L(., n s^2) are compared; any homeomorphic pair is a violation.
    """
    if n_min < 3:
        raise InvalidIndex("meaningful only for slope denominators >= 3")
    by_product: dict[int, list] = {}
    for p in range(3, p_max + 1):
        for q in range(2, p):
            if gcd(p, q) == 1:
                by_product.setdefault(p * q, []).append((p, q))
    pairs = []
    checked = 0
    violations = []
    for product in sorted(by_product):
        group = by_product[product]
        for (r, s), (p, q) in itertools.combinations(sorted(group), 2):
            # sorted puts the smaller first coordinate first, so r < p
            pairs.append(((p, q), (r, s)))
            for n in range(n_min, n_max + 1):
                for eps in (-1, 1):
                    m = n * product + eps
                    checked += 1
                    if homeomorphic(make_lens(m, n * q * q), make_lens(m, n * s * s)):
                        violations.append((p, q, r, s, n, m))
    return NonintegralReport(tuple(pairs), checked, tuple(violations))
