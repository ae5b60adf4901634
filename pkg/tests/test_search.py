import json

import pytest

from lenspairs.knots import Lens, SurgerySlope, cable, kplus, lens_surgery, tangle_hh, tangle_th, torus
from lenspairs.lens import canonical_form, make_lens
from lenspairs.search import (
    SearchConfig,
    enumerate_surgeries,
    find_coincidences,
    verify_family,
    verify_no_nonintegral_pairs,
)
from lenspairs.sequences import InvalidIndex


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(families={"moebius"})
    with pytest.raises(ValueError):
        SearchConfig(order_max=0)
    with pytest.raises(ValueError):
        SearchConfig(slope_denominators={0})
    with pytest.raises(ValueError):
        SearchConfig(slope_denominators={17})


def test_enumerate_torus_examples():
    config = SearchConfig(families={"torus"}, torus_max=4, order_max=100, slope_denominators={1})
    stream = list(enumerate_surgeries(config))
    assert (torus(3, 4), SurgerySlope(13), make_lens(13, 3)) in stream
    assert (torus(3, 4), SurgerySlope(11), make_lens(11, 5)) in stream


def test_enumerate_other_families():
    config = SearchConfig(families={"kplus"}, kplus_max=3, order_max=100)
    assert (kplus(2, 3), SurgerySlope(19), make_lens(19, 11)) in list(enumerate_surgeries(config))
    config = SearchConfig(families={"tangleHH", "tangleTH"}, tangle_max=1, order_max=100)
    stream = list(enumerate_surgeries(config))
    assert (tangle_hh(1), SurgerySlope(93), make_lens(93, 67)) in stream
    assert (tangle_th(1), SurgerySlope(66), make_lens(66, 29)) in stream


def test_enumerate_respects_order_bound():
    config = SearchConfig(order_max=60)
    for _, slope, space in enumerate_surgeries(config):
        assert space.p <= 60
        assert slope.m <= 60


def test_find_coincidences_torus_pair():
    config = SearchConfig(families={"torus"}, torus_max=7, order_max=20, slope_denominators={1})
    records = find_coincidences(config)
    assert len(records) == 1
    record = records[0]
    assert record.slope == SurgerySlope(13)
    assert record.lens_class == (13, 3)
    assert {str(knot) for knot, _ in record.members} == {"torus(3,4)", "torus(2,7)"}
    assert record.certified_multiplicity == 2


def test_find_coincidences_torus_cable_pair():
    config = SearchConfig(
        families={"torus", "cable"}, torus_max=8, cable_max=3, order_max=25, slope_denominators={1}
    )
    records = find_coincidences(config)
    assert any(
        record.slope == SurgerySlope(25)
        and {str(knot) for knot, _ in record.members} == {"torus(3,8)", "cable(2,3,+1)"}
        for record in records
    )


def test_records_reverify():
    config = SearchConfig(order_max=200)
    for record in find_coincidences(config):
        assert record.multiplicity >= 2
        for knot, space in record.members:
            result = lens_surgery(knot, record.slope)
            assert isinstance(result, Lens)
            assert result.space == space
            assert canonical_form(space) == record.lens_class


def test_no_equal_members():
    from lenspairs.knots import distinct

    config = SearchConfig(order_max=300)
    for record in find_coincidences(config):
        knots = [knot for knot, _ in record.members]
        for i in range(len(knots)):
            for j in range(i + 1, len(knots)):
                assert distinct(knots[i], knots[j]) != "equal"


def test_cable_only_finds_nothing():
    config = SearchConfig(families={"cable"}, cable_max=30, order_max=500)
    assert find_coincidences(config) == []


def test_worker_determinism():
    sequential = find_coincidences(SearchConfig(order_max=300, workers=1))
    parallel = find_coincidences(SearchConfig(order_max=300, workers=3))
    assert [record.to_json() for record in sequential] == [record.to_json() for record in parallel]


def test_record_json_shape():
    config = SearchConfig(families={"torus"}, torus_max=7, order_max=20, slope_denominators={1})
    record = find_coincidences(config)[0]
    obj = json.loads(record.to_json())
    assert obj["slope"] == "13/1"
    assert obj["lens"] == {"p": 13, "q_canonical": 3}
    assert {"family": "torus", "params": [3, 4], "raw_q": 3} in obj["members"]
    assert {"family": "torus", "params": [2, 7], "raw_q": 10} in obj["members"]


def test_verify_family_witnesses():
    report = verify_family("torus_torus", range(1, 21))
    assert report.passed
    first = report.checks[0]
    assert "torus(3,4)" in first.witness and "torus(2,7)" in first.witness and "13/1" in first.witness

    report = verify_family("torus_torus_half", range(1, 16))
    assert report.passed
    assert "29/2" in report.checks[0].witness

    report = verify_family("cable_kplus", range(3, 13))
    assert report.passed
    assert "cable(2,5,-1)" in report.checks[0].witness

    assert verify_family("torus_cable", range(1, 31)).passed
    assert verify_family("tangle_kplus", range(1, 13)).passed
    assert verify_family("torus_tangle", range(1, 13)).passed


def test_verify_family_lines_format():
    lines = verify_family("torus_torus", range(1, 4)).lines()
    assert len(lines) == 4
    assert all(line.startswith("PASS torus_torus n=") for line in lines[:3])
    assert lines[3].endswith("3/3 instances verified")


def test_verify_family_bad_ranges():
    with pytest.raises(InvalidIndex):
        verify_family("cable_kplus", range(1, 5))
    with pytest.raises(InvalidIndex):
        verify_family("torus_torus", range(0, 3))
    with pytest.raises(InvalidIndex):
        verify_family("torus_torus", range(5, 5))
    with pytest.raises(InvalidIndex):
        verify_family("unknot_unknot", range(1, 5))


def test_no_nonintegral_pairs():
    report = verify_no_nonintegral_pairs(40, 3, 6)
    assert report.clean
    assert ((15, 2), (10, 3)) in report.pairs
    # every pair is checked at both signs for every denominator
    assert report.checked == len(report.pairs) * 4 * 2


def test_no_nonintegral_pairs_smallest_case():
    # the product-30 pair at n = 3 gives orders 89 and 91; neither collides
    from lenspairs.lens import homeomorphic

    assert not homeomorphic(make_lens(91, 3 * 4), make_lens(91, 3 * 9))
    assert not homeomorphic(make_lens(89, 3 * 4), make_lens(89, 3 * 9))


def test_no_nonintegral_pairs_empty_scan_passes():
    report = verify_no_nonintegral_pairs(12, 3, 3)
    assert report.clean


def test_no_nonintegral_pairs_rejects_small_n():
    with pytest.raises(InvalidIndex):
        verify_no_nonintegral_pairs(40, 2, 6)


def test_mixed_family_product_congruences():
    # the parameter products that make each mixed pair homeomorphic
    from lenspairs.sequences import fib

    for n in range(1, 13):
        m = 27 * n * n + 45 * n + 21
        w = (3 * n + 1) * pow(3 * n + 4, -1, m) % m
        assert w * w * (18 * n * n + 33 * n + 16) % m == 1
    for n in range(1, 13):
        m = 18 * n * n + 33 * n + 15
        assert (9 * n * n + 12 * n + 4) * (18 * n + 19) % m == 1
    for n in range(3, 13):
        fn, fn2 = fib(n), fib(n + 2)
        m = 4 * fn * fn2 + (-1) ** n
        w = fn * pow(fn2, -1, m) % m
        assert 4 * fn * fn * w * w % m == (-1) ** (n + 1) % m
