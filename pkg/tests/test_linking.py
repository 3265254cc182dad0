"""Linking counts, parity reports, counterexample verification, existence."""

import json

import pytest

from linkparity.combinatorics import enumerate_disjoint_pairs
from linkparity.configuration import (
    explicit_configuration,
    moment_curve,
    sample_random_configuration,
)
from linkparity.errors import ContractError, DegeneracyError
from linkparity.intersection import intersect_complementary
from linkparity.linking import (
    boundary_intersection_count,
    counterexample_document,
    dumps_canonical,
    find_intersecting_pair,
    is_linked,
    link_report_document,
    total_linked_parity,
    verify_counterexample,
)
from oracles import planar_boundary_crossings


def test_boundary_counts_on_planar_moment_curve():
    config = moment_curve(5, 2)
    assert boundary_intersection_count(config, (1, 3)) == 2
    assert boundary_intersection_count(config, (1, 2)) == 0


def test_boundary_count_on_quartic_moment_curve():
    config = moment_curve(7, 4)
    assert boundary_intersection_count(config, (2, 4, 6)) == 2


def test_is_linked_false_on_moment_curve():
    config = moment_curve(5, 2)
    assert not is_linked(config, (1, 3))
    assert not is_linked(config, (1, 2))


def test_boundary_count_contract_errors():
    config = moment_curve(5, 2)
    with pytest.raises(ContractError):
        boundary_intersection_count(config, (1, 2, 3))  # wrong size
    with pytest.raises(ContractError):
        boundary_intersection_count(moment_curve(6, 2), (1, 2))  # n != d+3


def test_boundary_counts_match_planar_crossing_oracle():
    # independent orientation-sign oracle on random planar configurations
    for seed in range(20):
        config = sample_random_configuration(5, 2, seed=seed, bound=50)
        for first, _ in enumerate_disjoint_pairs(5, 2):
            assert boundary_intersection_count(config, first) == \
                planar_boundary_crossings(config, first), (seed, first)


def test_linked_segment_from_interior_point():
    # point 5 sits inside the square: the segments from it to the two far
    # corners each cross the complementary triangle boundary exactly once
    config = explicit_configuration([(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)])
    report = total_linked_parity(config)
    assert report.parity_ok
    for row in report.per_subset:
        assert row.n3 == planar_boundary_crossings(config, row.subset)
    assert report.linked_subsets == ((3, 5), (4, 5))
    assert report.single_point_subsets == ((3, 5), (4, 5))
    assert report.total_linked == 2


def test_total_linked_parity_on_moment_curves():
    for k in (1, 2, 3):
        report = total_linked_parity(moment_curve(2 * k + 3, 2 * k))
        assert report.total_linked == 0
        assert report.parity_ok
        assert report.linked_subsets == ()
        assert all(row.even for row in report.per_subset)


def test_total_linked_parity_on_random_configuration():
    config = sample_random_configuration(5, 2, seed=42, bound=100)
    report = total_linked_parity(config)
    assert report.parity_ok
    assert report.total_linked % 2 == 0
    assert len(report.per_subset) == 10
    # single-point subsets are exactly the rows with one distinct hit
    assert set(report.single_point_subsets) == {
        row.subset for row in report.per_subset if row.n1 == 1
    }


def test_total_linked_parity_rejects_degenerate_input():
    config = explicit_configuration([(0, 0), (1, 1), (2, 2), (0, 1), (1, 0)])
    with pytest.raises(DegeneracyError) as info:
        total_linked_parity(config)
    assert info.value.labels == (1, 2, 3)


def test_total_linked_parity_shape_contract():
    with pytest.raises(ContractError):
        total_linked_parity(moment_curve(6, 2))
    with pytest.raises(ContractError):
        total_linked_parity(moment_curve(6, 3))


def test_double_sum_evenness_identity():
    # ordered double sum equals twice the unordered pair sum
    for seed in (0, 3):
        config = sample_random_configuration(5, 2, seed=seed, bound=100)
        report = total_linked_parity(config)
        ordered = sum(row.n3 for row in report.per_subset)
        unordered = sum(
            1
            for first, second in enumerate_disjoint_pairs(5, 2)
            if intersect_complementary(config, first, second).intersects
        )
        assert ordered == 2 * unordered
        assert ordered % 2 == 0


@pytest.mark.parametrize("k", [1, 2])
def test_verify_counterexample_small(k):
    result = verify_counterexample(k)
    assert result.ok
    assert len(result.cross_checks) == len(result.report.per_subset)
    for check in result.cross_checks:
        assert check.n1 == check.n2 == check.n3 == check.n4
        assert check.n1 % 2 == 0
    assert result.report.total_linked == 0


def test_verify_counterexample_rejects_bad_k():
    with pytest.raises(ContractError):
        verify_counterexample(0)


def test_find_intersecting_pair_on_moment_curve():
    config = moment_curve(5, 2)
    found = find_intersecting_pair(config)
    assert found is not None
    first, second, result = found
    assert (first, second) == ((1, 3), (2, 4))
    assert result.intersects


def test_find_intersecting_pair_all_flag():
    config = moment_curve(5, 2)
    pairs = find_intersecting_pair(config, find_all=True)
    assert ((1, 3), (2, 4)) == (pairs[0][0], pairs[0][1])
    assert all(r.intersects for _, _, r in pairs)
    # ordered count is twice the unordered count
    report = total_linked_parity(config)
    assert 2 * len(pairs) == sum(row.n3 for row in report.per_subset)


def test_find_intersecting_pair_on_random_configurations():
    for seed in range(5):
        config = sample_random_configuration(7, 4, seed=seed, bound=1000)
        found = find_intersecting_pair(config)
        assert found is not None
        _, _, result = found
        assert result.intersects
        assert all(c > 0 for c in result.coeffs_first + result.coeffs_second)


def test_find_intersecting_pair_rejects_degenerate():
    config = explicit_configuration([(0, 0), (1, 1), (2, 2), (0, 1), (1, 0)])
    with pytest.raises(DegeneracyError):
        find_intersecting_pair(config)


def test_worker_pool_preserves_report_bytes():
    result1 = verify_counterexample(2, workers=1)
    result2 = verify_counterexample(2, workers=2)
    doc1 = dumps_canonical(counterexample_document(result1))
    doc2 = dumps_canonical(counterexample_document(result2))
    assert doc1 == doc2


def test_report_document_layout():
    result = verify_counterexample(1)
    doc = counterexample_document(result, manifest={"command": "verify"})
    assert list(doc.keys()) == [
        "config", "k", "per_subset", "linked_pairs", "single_point_subsets",
        "total", "parity_ok", "witnesses", "failures", "cross_checks", "manifest",
    ]
    assert doc["total"] == 0
    assert doc["parity_ok"] is True
    assert doc["failures"] == []
    assert doc["config"]["points"][0] == ["1", "1"]
    row = doc["per_subset"][0]
    assert set(row) == {"I", "n1", "n3", "n4", "even"}
    # canonical serialization is valid JSON and stable
    text = dumps_canonical(doc)
    assert json.loads(text) == doc
    assert text == dumps_canonical(doc)


def test_parity_report_document_on_random_config():
    config = sample_random_configuration(5, 2, seed=11, bound=100)
    report = total_linked_parity(config)
    doc = link_report_document(report)
    assert doc["config"]["provenance"].startswith("random-sample seed=11")
    assert doc["total"] == report.total_linked
    # witnesses listed exactly for linked subsets, with exact rational points
    assert len(doc["witnesses"]) == len(report.linked_subsets)
    for witness in doc["witnesses"]:
        assert witness["faces"]
        for face in witness["faces"]:
            assert all(isinstance(c, str) for c in face["point"])
