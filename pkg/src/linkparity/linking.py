"""Linking counts and whole-configuration verification campaigns.

For a configuration of n = 2k+3 general-position points in R^{2k} and a
(k+1)-subset I, the boundary of the complementary (k+1)-simplex is the union
of its k-faces, one per (k+1)-subset J of the complement.  Each face meets
conv(I) in at most one point, so the boundary intersection count is the
number of faces hit.  I is *linked* with its complement when that count is
odd.

Verification campaigns:

* ``total_linked_parity`` enumerates every I and checks the total number of
  linked subsets is even (it is: the ordered double sum over disjoint (I, J)
  counts every unordered pair twice).
* ``verify_counterexample`` builds the moment-curve configuration on
  2k+3 integer parameters and checks that it has *no* linked pair at all,
  cross-checking three counts for every I: distinct boundary points (n1),
  faces hit (n2 = n3, faces being in bijection with subsets J), and subsets
  alternating with I (n4).
* ``find_intersecting_pair`` exhibits two disjoint (k+1)-subsets with
  intersecting hulls, which must exist for any d+3 general-position points
  in even dimension d.

Reports serialize to JSON with a stable key order; volatile data (timestamps,
elapsed time, worker counts) never enters the document, so reruns and
different worker counts produce byte-identical files.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .combinatorics import (
    IndexSubset,
    alternating_count_bruteforce,
    check_subset,
    combinations_colex,
    enumerate_disjoint_pairs,
)
from .configuration import Configuration, Point, find_degenerate_subset, moment_curve
from .errors import ContractError, DegeneracyError
from .intersection import IntersectionResult, intersect_complementary
from .ratmat import format_rational


@dataclass(frozen=True)
class FaceHit:
    """One face of the complementary simplex met by conv(I), with the point."""

    face: IndexSubset
    point: Point


@dataclass(frozen=True)
class SubsetCounts:
    """Per-subset counts: distinct boundary points, faces hit, alternating subsets."""

    subset: IndexSubset
    n1: int
    n3: int
    n4: int
    hits: tuple[FaceHit, ...]

    @property
    def even(self) -> bool:
        return self.n3 % 2 == 0

    @property
    def linked(self) -> bool:
        return self.n3 % 2 == 1


@dataclass(frozen=True)
class CrossCheckReport:
    """The four counts compared for one subset I.

    n2 equals n3 by construction: the k-faces of the complementary simplex
    are exactly the sets conv(J) for (k+1)-subsets J of the complement.
    """

    subject: IndexSubset
    n1: int
    n2: int
    n3: int
    n4: int

    @property
    def consistent(self) -> bool:
        return self.n1 == self.n2 == self.n3 == self.n4

    @property
    def even(self) -> bool:
        return self.n1 % 2 == 0


@dataclass(frozen=True)
class LinkReport:
    """Outcome of a full linked-pair enumeration over one configuration."""

    dimension: int
    n: int
    k: int
    provenance: str
    points: tuple[Point, ...]
    per_subset: tuple[SubsetCounts, ...]
    linked_subsets: tuple[IndexSubset, ...]
    single_point_subsets: tuple[IndexSubset, ...]
    total_linked: int
    parity_ok: bool
    elapsed_seconds: float

    def __post_init__(self):
        if self.parity_ok != (self.total_linked % 2 == 0):
            raise AssertionError("parity flag inconsistent with total")


@dataclass(frozen=True)
class CounterexampleReport:
    """LinkReport plus per-subset cross-checks for the moment-curve configuration."""

    k: int
    report: LinkReport
    cross_checks: tuple[CrossCheckReport, ...]
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def _require_linking_shape(config: Configuration) -> int:
    d = config.dimension
    if d % 2 != 0:
        raise ContractError(f"linking verification needs even dimension, got d={d}")
    if config.n != d + 3:
        raise ContractError(f"need n = d + 3 points, got n={config.n}, d={d}")
    return d // 2


def _face_hits(config: Configuration, subset: IndexSubset) -> tuple[FaceHit, ...]:
    complement = tuple(v for v in config.labels if v not in set(subset))
    hits = []
    for face in combinations_colex(complement, len(subset)):
        result = intersect_complementary(config, subset, face)
        if result.intersects:
            assert result.point is not None
            hits.append(FaceHit(face=face, point=result.point))
    return tuple(hits)


def _subset_counts(config: Configuration, subset: IndexSubset) -> SubsetCounts:
    hits = _face_hits(config, subset)
    distinct_points = {hit.point for hit in hits}
    return SubsetCounts(
        subset=subset,
        n1=len(distinct_points),
        n3=len(hits),
        n4=alternating_count_bruteforce(subset, config.n),
        hits=hits,
    )


def boundary_intersection_count(config: Configuration, subset: Iterable[int]) -> int:
    """Number of boundary points of the complementary simplex met by conv(I).

    Sums [conv(I) ∩ conv(J) != empty] over the (k+1)-subsets J of the
    complement; each face contributes at most one point, and distinct faces
    hit distinct points under general position (asserted).
    """
    k = _require_linking_shape(config)
    canon = check_subset(subset, config.n, name="I")
    if len(canon) != k + 1:
        raise ContractError(f"|I| must be k + 1 = {k + 1}, got {len(canon)}")
    hits = _face_hits(config, canon)
    assert len({hit.point for hit in hits}) == len(hits), \
        "coincident face hits indicate a general-position violation"
    return len(hits)


def is_linked(config: Configuration, subset: Iterable[int]) -> bool:
    """True iff conv(I) meets the complementary simplex boundary oddly often."""
    return boundary_intersection_count(config, subset) % 2 == 1


# --- worker-pool plumbing: rows are computed per subset, order-preserving ---

_WORKER_CONFIG: Configuration | None = None


def _init_worker(config: Configuration) -> None:
    global _WORKER_CONFIG
    _WORKER_CONFIG = config


def _worker_counts(subset: IndexSubset) -> SubsetCounts:
    assert _WORKER_CONFIG is not None
    return _subset_counts(_WORKER_CONFIG, subset)


def _all_subset_counts(
    config: Configuration,
    subsets: Sequence[IndexSubset],
    workers: int,
) -> list[SubsetCounts]:
    if workers <= 1 or len(subsets) < 2:
        return [_subset_counts(config, s) for s in subsets]
    chunk = max(1, len(subsets) // (workers * 8))
    with ProcessPoolExecutor(
        max_workers=workers, initializer=_init_worker, initargs=(config,)
    ) as pool:
        return list(pool.map(_worker_counts, subsets, chunksize=chunk))


def total_linked_parity(config: Configuration, workers: int = 1) -> LinkReport:
    """Enumerate every (k+1)-subset, count the linked ones, and check evenness.

    Raises DegeneracyError (with the offending subset) when the configuration
    is not in general position.
    """
    k = _require_linking_shape(config)
    degenerate = find_degenerate_subset(config)
    if degenerate is not None:
        raise DegeneracyError(
            f"points {degenerate} lie in a common hyperplane", labels=degenerate
        )
    start = time.perf_counter()
    subsets = list(combinations_colex(tuple(config.labels), k + 1))
    rows = _all_subset_counts(config, subsets, workers)
    linked = tuple(row.subset for row in rows if row.linked)
    single = tuple(row.subset for row in rows if row.n1 == 1)
    total = len(linked)
    return LinkReport(
        dimension=config.dimension,
        n=config.n,
        k=k,
        provenance=config.provenance.describe(),
        points=config.points,
        per_subset=tuple(rows),
        linked_subsets=linked,
        single_point_subsets=single,
        total_linked=total,
        parity_ok=total % 2 == 0,
        elapsed_seconds=time.perf_counter() - start,
    )


def verify_counterexample(k: int, workers: int = 1) -> CounterexampleReport:
    """Check that the moment-curve configuration on 2k+3 points has no linked pair.

    Certifies general position, computes n1/n3 geometrically and n4
    combinatorially for every (k+1)-subset I, and requires n1 = n3 = n4, all
    even, and zero linked subsets.  Any violation is recorded as a failure
    (it would falsify the implementation, not the statement being checked).
    """
    if k < 1:
        raise ContractError(f"k must be >= 1, got {k}")
    config = moment_curve(2 * k + 3, 2 * k)
    report = total_linked_parity(config, workers=workers)

    failures = []
    cross_checks = []
    for row in report.per_subset:
        check = CrossCheckReport(
            subject=row.subset, n1=row.n1, n2=row.n3, n3=row.n3, n4=row.n4
        )
        cross_checks.append(check)
        if not check.consistent:
            failures.append(
                f"count mismatch at I={row.subset}: "
                f"n1={check.n1} n2={check.n2} n3={check.n3} n4={check.n4}"
            )
        if not check.even:
            failures.append(f"odd boundary count {check.n1} at I={row.subset}")
    if report.total_linked != 0:
        failures.append(f"{report.total_linked} linked subsets: {report.linked_subsets}")
    if not report.parity_ok:
        failures.append("total linked count is odd")
    return CounterexampleReport(
        k=k,
        report=report,
        cross_checks=tuple(cross_checks),
        failures=tuple(failures),
    )


def find_intersecting_pair(
    config: Configuration,
    find_all: bool = False,
) -> (
    tuple[IndexSubset, IndexSubset, IntersectionResult]
    | None
    | list[tuple[IndexSubset, IndexSubset, IntersectionResult]]
):
    """First disjoint (k+1)-subset pair (colex order) with intersecting hulls.

    With ``find_all`` set, returns every intersecting pair instead.  Returns
    None (or an empty list) only for inputs outside the guarantee; for
    general-position configurations with n = d + 3 an intersecting pair
    always exists.
    """
    k = _require_linking_shape(config)
    degenerate = find_degenerate_subset(config)
    if degenerate is not None:
        raise DegeneracyError(
            f"points {degenerate} lie in a common hyperplane", labels=degenerate
        )
    found = []
    for first, second in enumerate_disjoint_pairs(config.n, k + 1):
        result = intersect_complementary(config, first, second)
        if result.intersects:
            if not find_all:
                return first, second, result
            found.append((first, second, result))
    return found if find_all else None


# ---------------------------------------------------------------------------
# JSON report document (stable key order, exact rationals as "p/q" strings)
# ---------------------------------------------------------------------------


def _point_json(point: Point) -> list[str]:
    return [format_rational(x) for x in point]


def _witnesses_json(report: LinkReport) -> list[dict]:
    docs = []
    for row in report.per_subset:
        if not row.linked:
            continue
        docs.append({
            "I": list(row.subset),
            "faces": [
                {"J": list(hit.face), "point": _point_json(hit.point)}
                for hit in row.hits
            ],
        })
    return docs


def link_report_document(
    report: LinkReport,
    cross_checks: Sequence[CrossCheckReport] = (),
    failures: Sequence[str] = (),
    manifest: dict | None = None,
) -> dict:
    """Assemble the serializable report document.

    Key order is fixed; elapsed time and timestamps are deliberately absent
    so that identical inputs give byte-identical documents.
    """
    doc = {
        "config": {
            "dimension": report.dimension,
            "n": report.n,
            "provenance": report.provenance,
            "points": [_point_json(p) for p in report.points],
        },
        "k": report.k,
        "per_subset": [
            {
                "I": list(row.subset),
                "n1": row.n1,
                "n3": row.n3,
                "n4": row.n4,
                "even": row.even,
            }
            for row in report.per_subset
        ],
        "linked_pairs": [list(s) for s in report.linked_subsets],
        "single_point_subsets": [list(s) for s in report.single_point_subsets],
        "total": report.total_linked,
        "parity_ok": report.parity_ok,
        "witnesses": _witnesses_json(report),
        "failures": list(failures),
    }
    if cross_checks:
        doc["cross_checks"] = [
            {
                "I": list(c.subject),
                "n1": c.n1,
                "n2": c.n2,
                "n3": c.n3,
                "n4": c.n4,
                "consistent": c.consistent,
            }
            for c in cross_checks
        ]
    if manifest is not None:
        doc["manifest"] = manifest
    return doc


def counterexample_document(result: CounterexampleReport, manifest: dict | None = None) -> dict:
    return link_report_document(
        result.report,
        cross_checks=result.cross_checks,
        failures=result.failures,
        manifest=manifest,
    )


def dumps_canonical(document: dict) -> str:
    """Serialize with a stable layout suitable for byte-for-byte comparison."""
    return json.dumps(document, indent=2, ensure_ascii=True) + "\n"
