import random
from fractions import Fraction

import pytest

from lenspairs.arith import is_perfect_square
from lenspairs.bqf import (
    CapExceeded,
    FormSolution,
    InvalidUnit,
    NotADiscriminant,
    NotApplicable,
    QuadForm,
    UnitElement,
    apply_unit,
    divisibility_scan,
    fundamental_unit,
    generate_solutions,
    orbit_representatives,
    solutions_in_box,
    window_bound,
)

F = QuadForm(1, -6, 1)  # discriminant 32
G = QuadForm(1, -6, -1)  # discriminant 40


def naive_box(form, m, bound):
    # literal double loop, the most primitive oracle there is
    return sorted(
        (FormSolution(x, y)
         for x in range(-bound, bound + 1)
         for y in range(-bound, bound + 1)
         if form(x, y) == m),
        key=lambda s: (s.y, s.x),
    )


def orbit_points_in_box(form, m, bound, cap=10 ** 6):
    # walk each representative's orbit in both directions while inside the box
    tau = fundamental_unit(form.delta, cap)
    points = set()
    for rep in orbit_representatives(form, m, cap):
        for inverse in (False, True):
            cur = rep
            while abs(cur.x) <= bound and abs(cur.y) <= bound:
                points.add(cur)
                cur = apply_unit(form, cur, tau, inverse=inverse)
    return points


def test_form_validation():
    with pytest.raises(NotApplicable):
        QuadForm(1, 2, 1)  # discriminant 0
    with pytest.raises(NotApplicable):
        QuadForm(1, 0, 1)  # discriminant -4
    with pytest.raises(NotApplicable):
        QuadForm(0, 3, 5)  # discriminant 9, a square
    assert F.delta == 32
    assert G.delta == 40


def test_fundamental_units():
    assert (fundamental_unit(32).u, fundamental_unit(32).v) == (3, 1)
    assert (fundamental_unit(5).u, fundamental_unit(5).v) == (1, 1)
    assert (fundamental_unit(40).u, fundamental_unit(40).v) == (19, 6)
    assert (fundamental_unit(13).u, fundamental_unit(13).v) == (4, 3)


def test_fundamental_unit_errors():
    with pytest.raises(NotApplicable):
        fundamental_unit(36)
    with pytest.raises(NotApplicable):
        fundamental_unit(-8)
    with pytest.raises(NotADiscriminant):
        fundamental_unit(7)
    with pytest.raises(CapExceeded):
        fundamental_unit(244, cap=100)  # fundamental v for 4*61 is 226153980


def test_fundamental_unit_norm_and_minimality():
    for delta in (5, 13, 17, 32, 40, 60, 68, 96, 104, 140, 148):
        unit = fundamental_unit(delta)
        assert unit.norm() == 1
        for v in range(1, unit.v):
            smaller = (
                is_perfect_square((delta // 4) * v * v + 1)
                if delta % 4 == 0
                else is_perfect_square(delta * v * v + 4)
            )
            assert smaller is None


def test_closed_form_units():
    # for even t, disc t^2 - 4 has unit (t/2, 1) and t^2 + 4 its square (t^2/2 + 1, t)
    for t in (6, 8, 10, 12):
        low = fundamental_unit(t * t - 4)
        assert (low.u, low.v) == (t // 2, 1)
        high = fundamental_unit(t * t + 4)
        assert (high.u, high.v) == (t * t // 2 + 1, t)
    # odd t: disc t^2 - 4 gives ((t-1)/2, 1), t^2 + 4 gives ((t^2-t)/2 + 1, t)
    for t in (3, 5, 7):
        low = fundamental_unit(t * t - 4)
        assert (low.u, low.v) == ((t - 1) // 2, 1)
        high = fundamental_unit(t * t + 4)
        assert (high.u, high.v) == ((t * t - t) // 2 + 1, t)


def test_window_bound():
    assert window_bound(F, 1).w_squared == Fraction(4, 32)
    assert window_bound(F, 1).floor == 0
    assert window_bound(F, -1).w_squared == Fraction(8, 32)
    assert window_bound(F, -1).floor == 0
    assert window_bound(G, 1).floor == 0
    bound = window_bound(G, -1)
    assert bound.w_squared == Fraction(1)
    assert bound.floor == 1 and bound.exact == 1


def test_orbit_representatives():
    assert orbit_representatives(F, 1) == [FormSolution(1, 0)]
    assert orbit_representatives(F, -1) == []
    assert orbit_representatives(G, -1) == [FormSolution(0, 1)]
    assert orbit_representatives(G, 1) == [FormSolution(1, 0)]


def test_apply_unit():
    tau = fundamental_unit(32)
    first = apply_unit(F, FormSolution(1, 0), tau)
    assert first == FormSolution(6, 1)
    assert apply_unit(F, first, tau) == FormSolution(35, 6)
    assert apply_unit(F, first, tau, inverse=True) == FormSolution(1, 0)
    assert apply_unit(G, FormSolution(0, 1), fundamental_unit(40)) == FormSolution(6, 1)


def test_apply_unit_roundtrip():
    tau = fundamental_unit(40)
    rng = random.Random(51)
    for _ in range(50):
        sol = FormSolution(rng.randrange(-99, 100), rng.randrange(-99, 100))
        there = apply_unit(G, sol, tau)
        assert apply_unit(G, there, tau, inverse=True) == sol


def test_apply_unit_rejects_bad_units():
    with pytest.raises(InvalidUnit):
        apply_unit(F, FormSolution(1, 0), UnitElement(32, 2, 1))  # norm -4
    with pytest.raises(InvalidUnit):
        apply_unit(F, FormSolution(1, 0), fundamental_unit(40))  # wrong discriminant


def test_generate_solutions():
    assert generate_solutions(F, 1, 3) == [FormSolution(1, 0), FormSolution(6, 1), FormSolution(35, 6)]
    assert generate_solutions(F, -1, 3) == []
    assert generate_solutions(G, -1, 2) == [FormSolution(0, 1), FormSolution(6, 1)]
    for sol in generate_solutions(G, 1, 6):
        assert G(sol.x, sol.y) == 1


def test_solutions_in_box_matches_naive_oracle():
    assert solutions_in_box(F, 1, 40) == naive_box(F, 1, 40)
    assert solutions_in_box(F, 2, 40) == naive_box(F, 2, 40) == []
    assert solutions_in_box(G, -1, 25) == naive_box(G, -1, 25)
    assert solutions_in_box(QuadForm(1, -3, 1), 1, 10) == naive_box(QuadForm(1, -3, 1), 1, 10)


def test_box_is_sign_orbit_closure():
    for form, m in ((F, 1), (G, 1), (G, -1), (QuadForm(1, -3, 1), 1)):
        walked = orbit_points_in_box(form, m, 10 ** 4)
        expected = {FormSolution(-s.x, -s.y) for s in walked} | walked
        assert set(solutions_in_box(form, m, 10 ** 4)) == expected


def test_box_oracle_on_random_forms():
    rng = random.Random(53)
    cases = 0
    while cases < 50:
        a = rng.randrange(-12, 13)
        b = rng.randrange(-12, 13)
        c = rng.randrange(-12, 13)
        m = rng.randrange(-10, 11)
        if a == 0 or m == 0:
            continue
        delta = b * b - 4 * a * c
        if delta <= 0 or is_perfect_square(delta) is not None or delta % 4 in (2, 3):
            continue
        form = QuadForm(a, b, c)
        try:
            walked = orbit_points_in_box(form, m, 10 ** 4, cap=10 ** 5)
        except CapExceeded:
            continue
        expected = {FormSolution(-s.x, -s.y) for s in walked} | walked
        assert set(solutions_in_box(form, m, 10 ** 4)) == expected
        cases += 1


def test_divisible_coordinate_property():
    # positive solutions of x^2 - t*x*y + y^2 = Q have a coordinate divisible
    # by a; for x^2 - t*x*y - y^2 the divisible coordinate is y when m = Q
    # and x when m = -Q (t = Q*n*a)
    for q_val in (1, 4):
        for n in (3, 4):
            for a in (2, 3, 5):
                t = q_val * n * a
                plus = QuadForm(1, -t, 1)
                minus = QuadForm(1, -t, -1)
                for sol in solutions_in_box(plus, q_val, 10 ** 4):
                    if sol.x > 0 and sol.y > 0:
                        assert sol.x % a == 0 or sol.y % a == 0
                for sol in solutions_in_box(minus, q_val, 10 ** 4):
                    if sol.x > 0 and sol.y > 0:
                        assert sol.y % a == 0
                for sol in solutions_in_box(minus, -q_val, 10 ** 4):
                    if sol.x > 0 and sol.y > 0:
                        assert sol.x % a == 0


def test_divisibility_scan_clean_region():
    report = divisibility_scan(range(2, 3), range(1, 6), range(1, 6), range(3, 4))
    assert report.clean
    assert report.checked > 0


def test_divisibility_scan_flags_a_equal_one():
    report = divisibility_scan(range(1, 2), range(3, 4), range(8, 9), range(3, 4))
    assert any(
        (hit.a, hit.b, hit.c, hit.n, hit.value, hit.modulus) == (1, 3, 8, 3, 73, 73)
        for hit in report.counterexamples
    )


def test_divisibility_scan_skips_zero_difference():
    # b = c makes b^2 - c^2 = 0; divisibility of zero is vacuous, not a hit
    report = divisibility_scan(range(2, 3), range(1, 2), range(1, 2), range(3, 4))
    assert report.clean
