"""Exact intersection of complementary simplices and separating witnesses.

Two disjoint vertex sets M, N with |M| + |N| = d + 2 in R^d intersect in at
most one point: the d + 2 points carry (generically) a one-dimensional space
of affine dependencies sum_c g_c x_c = 0, sum_c g_c = 0, and conv(M) meets
conv(N) exactly when the dependence signs split along (M, N).  The predicate
solves the square system formed by the homogenized coordinates plus a unit
normalization of the last coefficient; that system is singular precisely
when d + 1 of the points are affinely dependent, so singularity (or a zero
coefficient) certifies a general position violation and is never silently
absorbed.  Note the naive formulation {sum lambda_i p_i = sum mu_j q_j,
sum lambda_i = 1, sum mu_j = 1} would go singular already when the two
affine hulls are merely parallel, which happens for honest general-position
inputs; the dependence formulation does not.

On success the witness is exactly the unique solution of the naive system:
strictly positive barycentric coordinates over both vertex sets and the
common point they describe.

For point sets on the moment curve, a non-alternating pair (P, Q) of
parameter sets is separated by an explicit hyperplane: the polynomial with
simple roots at the midpoints of the bicolored parameter gaps (plus filler
roots below the parameter range, bringing the degree to exactly d) changes
sign precisely where the color changes, so it takes one strict sign on P's
curve points and the opposite sign on Q's.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .combinatorics import alternates, check_subset
from .configuration import Configuration, Point
from .errors import ContractError, DegeneracyError
from .ratmat import Matrix, solve


@dataclass(frozen=True)
class IntersectionResult:
    """Decision plus exact witness for conv(first) against conv(second).

    When the hulls intersect, ``point`` is the unique common point and the
    coefficient tuples are its strictly positive barycentric coordinates over
    the first and second vertex sets.  Otherwise ``failing_index`` records a
    position (into the concatenated coefficient vector) whose coefficient is
    not positive.
    """

    intersects: bool
    point: Point | None
    coeffs_first: tuple[Fraction, ...] | None
    coeffs_second: tuple[Fraction, ...] | None
    failing_index: int | None = None


def _disjoint_subsets(config_n: int, first: Iterable[int], second: Iterable[int]):
    fs = check_subset(first, config_n, name="first subset")
    ss = check_subset(second, config_n, name="second subset")
    overlap = set(fs) & set(ss)
    if overlap:
        raise ContractError(f"subsets overlap: {sorted(overlap)}")
    return fs, ss


def intersect_complementary(
    config: Configuration,
    first: Iterable[int],
    second: Iterable[int],
) -> IntersectionResult:
    """Decide conv(first) ∩ conv(second) for complementary vertex sets.

    Requires |first| + |second| = d + 2.  Raises DegeneracyError when some
    d + 1 of the involved points are affinely dependent, i.e. the points are
    not in general position.
    """
    fs, ss = _disjoint_subsets(config.n, first, second)
    d = config.dimension
    if len(fs) + len(ss) != d + 2:
        raise ContractError(
            f"|first| + |second| must be d + 2 = {d + 2}, got {len(fs) + len(ss)}"
        )
    labels = fs + ss
    points = [config.point(label) for label in labels]
    m = len(fs)
    total = len(labels)

    zero, one = Fraction(0), Fraction(1)
    rows = [[p[axis] for p in points] for axis in range(d)]
    rows.append([one] * total)
    rows.append([zero] * (total - 1) + [one])
    rhs = [zero] * (d + 1) + [one]

    result = solve(Matrix.from_rows(rows), rhs)
    if result.is_singular:
        raise DegeneracyError(
            f"points {labels[:-1]} are affinely dependent: "
            "not in general position",
            labels=labels[:-1],
        )
    gamma = result.solution
    assert gamma is not None
    for idx, g in enumerate(gamma):
        if g == 0:
            others = labels[:idx] + labels[idx + 1:]
            raise DegeneracyError(
                f"points {others} are affinely dependent: not in general position",
                labels=others,
            )

    scale = sum(gamma[:m])
    if scale != 0:
        # unique common point of the affine hulls; barycentric over both sets
        candidate = tuple(g / scale for g in gamma[:m]) + tuple(
            -g / scale for g in gamma[m:]
        )
    else:
        # parallel affine hulls: no common point, so no orientation sums to 1;
        # orient by the first coefficient just to exhibit a sign mismatch
        orient = 1 if gamma[0] > 0 else -1
        candidate = tuple(orient * g for g in gamma[:m]) + tuple(
            -orient * g for g in gamma[m:]
        )
    failing = next((idx for idx, c in enumerate(candidate) if c <= 0), None)
    if scale == 0 or failing is not None:
        assert failing is not None
        return IntersectionResult(
            intersects=False,
            point=None,
            coeffs_first=None,
            coeffs_second=None,
            failing_index=failing,
        )
    lam = candidate[:m]
    mu = candidate[m:]
    point = tuple(
        sum((l * p[axis] for l, p in zip(lam, points[:m])), zero)
        for axis in range(d)
    )
    return IntersectionResult(
        intersects=True,
        point=point,
        coeffs_first=lam,
        coeffs_second=mu,
    )


@dataclass(frozen=True)
class HyperplaneWitness:
    """Hyperplane n_1 x_1 + ... + n_d x_d - offset = 0 separating two moment-curve simplices.

    Restricted to the curve, the hyperplane is the degree-d polynomial
    p(x) = n_1 x + n_2 x^2 + ... + n_d x^d - offset whose simple roots are
    exactly ``midpoint_roots`` (one per bicolored parameter gap) and
    ``filler_roots`` (below the parameter range).
    """

    coefficients: tuple[Fraction, ...]
    offset: Fraction
    midpoint_roots: tuple[Fraction, ...]
    filler_roots: tuple[Fraction, ...]
    bicolored_count: int

    def __post_init__(self):
        if len(self.midpoint_roots) + len(self.filler_roots) != len(self.coefficients):
            raise AssertionError("root count must equal the polynomial degree")
        if len(self.midpoint_roots) != self.bicolored_count:
            raise AssertionError("one midpoint root per bicolored gap")

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    def value_at(self, x: Fraction) -> Fraction:
        """Evaluate the restricted polynomial p at parameter x."""
        x = Fraction(x)
        acc = self.coefficients[-1]
        for c in reversed(self.coefficients[:-1]):
            acc = acc * x + c
        return acc * x - self.offset


def _expand_monic(roots: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients c_0..c_deg of the monic polynomial with the given roots."""
    coeffs = [Fraction(1)]
    for root in roots:
        coeffs = [Fraction(0)] + coeffs
        for i in range(len(coeffs) - 1):
            coeffs[i] -= root * coeffs[i + 1]
    return coeffs


def separating_hyperplane_moment(
    p_labels: Iterable[int],
    q_labels: Iterable[int],
    parameters: Sequence[Fraction],
    d: int,
) -> HyperplaneWitness:
    """Separator for non-alternating moment-curve simplices in R^d (d even).

    ``parameters`` holds the curve parameters t_1 < ... < t_n for all labels;
    P and Q index into it and must be disjoint, of size d/2 + 1 each, and not
    alternate.  The witness polynomial has one root at the midpoint of each
    bicolored gap of the merged parameter sequence, plus d - t filler roots
    at t_min - 1 - j (j = 1..d-t), all strictly below t_min - 1.
    """
    if d < 2 or d % 2 != 0:
        raise ContractError(f"dimension must be even and >= 2, got {d}")
    params = tuple(Fraction(t) for t in parameters)
    if any(a >= b for a, b in zip(params, params[1:])):
        raise ContractError("parameters must be strictly increasing")
    ps = check_subset(p_labels, len(params), name="P")
    qs = check_subset(q_labels, len(params), name="Q")
    if set(ps) & set(qs):
        raise ContractError(f"subsets overlap: {sorted(set(ps) & set(qs))}")
    if len(ps) != d // 2 + 1 or len(qs) != d // 2 + 1:
        raise ContractError(f"|P| and |Q| must be d/2 + 1 = {d // 2 + 1}")
    if alternates(ps, qs):
        raise ContractError("P and Q alternate: no separating hyperplane exists")

    merged = sorted(ps + qs)
    in_p = set(ps)
    colors = [label in in_p for label in merged]
    midpoints = tuple(
        (params[a - 1] + params[b - 1]) / 2
        for a, b, ca, cb in zip(merged, merged[1:], colors, colors[1:])
        if ca != cb
    )
    t = len(midpoints)
    assert t <= d, f"{t} bicolored gaps exceed dimension {d}"

    t_min = params[merged[0] - 1]
    fillers = tuple(t_min - 1 - j for j in range(1, d - t + 1))
    coeffs = _expand_monic(midpoints + fillers)

    witness = HyperplaneWitness(
        coefficients=tuple(coeffs[1:]),
        offset=-coeffs[0],
        midpoint_roots=midpoints,
        filler_roots=fillers,
        bicolored_count=t,
    )
    p_signs = {witness.value_at(params[label - 1]) > 0 for label in ps}
    q_signs = {witness.value_at(params[label - 1]) > 0 for label in qs}
    if not (len(p_signs) == 1 and len(q_signs) == 1 and p_signs != q_signs):
        raise AssertionError("separator failed strict sign check")
    if any(witness.value_at(params[label - 1]) == 0 for label in ps + qs):
        raise AssertionError("separator vanished on an input point")
    return witness
