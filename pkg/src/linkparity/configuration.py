"""Labeled point configurations in R^d.

A configuration is an immutable list of points with labels 1..n, a dimension,
and a provenance record saying how it was built.  Three constructors are
provided: points on the moment curve t -> (t, t^2, ..., t^d), explicit point
lists, and rejection-sampled random integer configurations.

General position means no d+1 points lie in a common (d-1)-hyperplane; it is
certified exhaustively by checking every (d+1)x(d+1) homogenized determinant.

Random sampling PRNG (documented for cross-language reproduction): the value
for coordinate slot c is drawn from its own splitmix64 output stream

    u_r = mix64(mix64(seed + (c+1)*PHI) + (r+1)*PHI),   r = 0, 1, ...

where PHI = 0x9E3779B97F4A7C15, mix64 is the splitmix64 finalizer, and
c = (attempt*n + point_index)*d + coord_index.  Each 64-bit draw u_r is
mapped to [-bound, bound] by rejection: with range = 2*bound + 1 and
limit = 2^64 - (2^64 mod range), the first u_r < limit is accepted and the
value is (u_r mod range) - bound.  Whole configurations are resampled until
general position holds.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ContractError, SamplingError
from .ratmat import Matrix, det, format_rational, parse_rational

Point = tuple[Fraction, ...]

_MASK64 = (1 << 64) - 1
_PHI64 = 0x9E3779B97F4A7C15


@dataclass(frozen=True)
class MomentCurve:
    parameters: tuple[Fraction, ...]

    def describe(self) -> str:
        return "moment-curve params=" + ",".join(format_rational(t) for t in self.parameters)


@dataclass(frozen=True)
class Explicit:
    def describe(self) -> str:
        return "explicit"


@dataclass(frozen=True)
class RandomSample:
    seed: int
    bound: int
    attempts: int

    def describe(self) -> str:
        return f"random-sample seed={self.seed} bound={self.bound} attempts={self.attempts}"


Provenance = MomentCurve | Explicit | RandomSample


@dataclass(frozen=True)
class Configuration:
    """n labeled points in R^d; point with label i sits at ``points[i - 1]``."""

    dimension: int
    points: tuple[Point, ...]
    provenance: Provenance

    def __post_init__(self):
        if self.dimension < 1:
            raise ContractError(f"dimension must be >= 1, got {self.dimension}")
        for idx, point in enumerate(self.points):
            if len(point) != self.dimension:
                raise ContractError(
                    f"point {idx + 1} has {len(point)} coordinates, expected {self.dimension}"
                )

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def labels(self) -> range:
        return range(1, self.n + 1)

    def point(self, label: int) -> Point:
        if not 1 <= label <= self.n:
            raise ContractError(f"label {label} outside 1..{self.n}")
        return self.points[label - 1]


def explicit_configuration(points: Iterable[Iterable], dimension: int | None = None) -> Configuration:
    """Build a configuration from raw coordinate rows (ints, strings, Fractions)."""
    rows = tuple(tuple(Fraction(x) for x in row) for row in points)
    if not rows:
        raise ContractError("configuration needs at least one point")
    d = dimension if dimension is not None else len(rows[0])
    return Configuration(dimension=d, points=rows, provenance=Explicit())


def moment_curve(n: int, d: int, parameters: Sequence[Fraction] | None = None) -> Configuration:
    """Points (t_i, t_i^2, ..., t_i^d) for strictly increasing parameters.

    Defaults to t_i = i, realizing the image of {1, ..., n}.
    """
    if n < 1:
        raise ContractError(f"need n >= 1, got {n}")
    if d < 1:
        raise ContractError(f"need d >= 1, got {d}")
    if parameters is None:
        params = tuple(Fraction(i) for i in range(1, n + 1))
    else:
        params = tuple(Fraction(t) for t in parameters)
        if len(params) != n:
            raise ContractError(f"expected {n} parameters, got {len(params)}")
        if any(a >= b for a, b in zip(params, params[1:])):
            raise ContractError("parameters must be strictly increasing")
    points = []
    for t in params:
        coords = []
        power = Fraction(1)
        for _ in range(d):
            power *= t
            coords.append(power)
        points.append(tuple(coords))
    return Configuration(dimension=d, points=tuple(points), provenance=MomentCurve(params))


def find_degenerate_subset(config: Configuration) -> tuple[int, ...] | None:
    """First (d+1)-subset of labels lying in a common hyperplane, or None.

    Affine dependence of points p_1..p_{d+1} is the vanishing of the
    homogenized determinant with rows (p_i, 1).
    """
    d = config.dimension
    one = Fraction(1)
    for subset in combinations(config.labels, d + 1):
        rows = [config.point(label) + (one,) for label in subset]
        if det(Matrix.from_rows(rows)) == 0:
            return subset
    return None


def is_general_position(config: Configuration) -> bool:
    """True iff every (d+1)-subset of the points spans R^d affinely."""
    if config.n < config.dimension + 1:
        warnings.warn(
            f"only {config.n} points in R^{config.dimension}: "
            "general position holds trivially",
            stacklevel=2,
        )
        return True
    return find_degenerate_subset(config) is None


def _mix64(z: int) -> int:
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def _coordinate_draw(seed: int, slot: int, bound: int) -> int:
    """Uniform integer in [-bound, bound] from the slot's splitmix64 stream."""
    span = 2 * bound + 1
    limit = (1 << 64) - ((1 << 64) % span)
    stream = _mix64(seed + (slot + 1) * _PHI64)
    trial = 0
    while True:
        value = _mix64(stream + (trial + 1) * _PHI64)
        if value < limit:
            return value % span - bound
        trial += 1


def sample_random_configuration(
    n: int,
    d: int,
    seed: int,
    bound: int,
    max_attempts: int = 1000,
) -> Configuration:
    """Deterministic rejection sampler for general-position integer configurations.

    Coordinates are uniform integers in [-bound, bound]; whole configurations
    are redrawn until general position holds.  Identical (n, d, seed, bound)
    always produce identical output.  Small bounds may exhaust the attempt
    budget, which raises SamplingError.
    """
    if n < d + 1:
        raise ContractError(f"need n >= d + 1 points, got n={n}, d={d}")
    if bound < 1:
        raise ContractError(f"bound must be a positive integer, got {bound}")
    if max_attempts < 1:
        raise ContractError(f"max_attempts must be >= 1, got {max_attempts}")
    for attempt in range(max_attempts):
        base = attempt * n * d
        points = tuple(
            tuple(
                Fraction(_coordinate_draw(seed, base + i * d + j, bound))
                for j in range(d)
            )
            for i in range(n)
        )
        config = Configuration(
            dimension=d,
            points=points,
            provenance=RandomSample(seed=seed, bound=bound, attempts=attempt + 1),
        )
        if find_degenerate_subset(config) is None:
            return config
    raise SamplingError(
        f"no general-position configuration with n={n}, d={d}, bound={bound} "
        f"after {max_attempts} attempts (seed {seed})"
    )


# ---------------------------------------------------------------------------
# Point-set text format: header "d n", optional "# provenance:" comment,
# then n lines of d whitespace-separated rationals.  Round-trips bit-exactly.
# ---------------------------------------------------------------------------


def _parse_provenance(text: str) -> Provenance:
    body = text.strip()
    if body == "explicit":
        return Explicit()
    if body.startswith("moment-curve params="):
        raw = body[len("moment-curve params="):]
        params = tuple(parse_rational(tok) for tok in raw.split(","))
        return MomentCurve(params)
    if body.startswith("random-sample "):
        fields = dict(part.split("=", 1) for part in body[len("random-sample "):].split())
        return RandomSample(
            seed=int(fields["seed"]),
            bound=int(fields["bound"]),
            attempts=int(fields["attempts"]),
        )
    raise ValueError(f"unrecognized provenance: {text!r}")


def write_points_text(config: Configuration) -> str:
    lines = [f"{config.dimension} {config.n}"]
    lines.append(f"# provenance: {config.provenance.describe()}")
    for point in config.points:
        lines.append(" ".join(format_rational(x) for x in point))
    return "\n".join(lines) + "\n"


def read_points_text(text: str) -> Configuration:
    provenance: Provenance = Explicit()
    data_lines = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            comment = stripped.lstrip("#").strip()
            if comment.startswith("provenance:"):
                provenance = _parse_provenance(comment[len("provenance:"):])
            continue
        data_lines.append(stripped)
    if not data_lines:
        raise ValueError("empty point-set file")
    header = data_lines[0].split()
    if len(header) != 2:
        raise ValueError(f"header must be 'd n', got {data_lines[0]!r}")
    d, n = int(header[0]), int(header[1])
    if len(data_lines) - 1 != n:
        raise ValueError(f"expected {n} point lines, got {len(data_lines) - 1}")
    points = []
    for line in data_lines[1:]:
        coords = tuple(parse_rational(tok) for tok in line.split())
        if len(coords) != d:
            raise ValueError(f"expected {d} coordinates per point, got {len(coords)}")
        points.append(coords)
    return Configuration(dimension=d, points=tuple(points), provenance=provenance)


def save_points(config: Configuration, path) -> None:
    with open(path, "w", encoding="ascii") as handle:
        handle.write(write_points_text(config))


def load_points(path) -> Configuration:
    with open(path, "r", encoding="ascii") as handle:
        return read_points_text(handle.read())
