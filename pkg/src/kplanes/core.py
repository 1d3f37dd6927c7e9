"""Core objects: configurations of order k, incidence profiles, Levi graphs.

A configuration of order k is a set of points 1..n together with a set of
k-planes (point sets of a common size t >= k+1) such that any k+1 distinct
points lie in at most one plane.  ``Configuration`` stores the combinatorial
data and enforces structural invariants; ``validate`` checks the incidence
axiom and regularity and produces an ``IncidenceProfile``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass


class ConfigurationError(ValueError):
    """Structural or axiomatic defect in a configuration."""


class ParseError(ConfigurationError):
    """Malformed configuration text; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class AxiomViolationError(ConfigurationError):
    """Some k+1 points lie in two distinct planes."""

    def __init__(self, points: tuple[int, ...], planes: tuple[tuple[int, ...], tuple[int, ...]]):
        self.points = points
        self.planes = planes
        super().__init__(
            f"points {points} lie in two distinct planes {planes[0]} and {planes[1]}"
        )


class RegularityError(ConfigurationError):
    """Point degrees (or plane sizes) are not uniform."""

    def __init__(self, kind: str, first: tuple[int, int], second: tuple[int, int]):
        self.kind = kind
        self.first = first
        self.second = second
        super().__init__(
            f"{kind} degrees differ: {kind} {first[0]} has {first[1]}, "
            f"{kind} {second[0]} has {second[1]}"
        )


class WithoutDualError(ConfigurationError):
    """s <= k, so the dual structure cannot exist."""


@dataclass(frozen=True)
class Configuration:
    """A configuration of order ``order`` on points 1..num_points.

    Planes are stored as strictly increasing tuples and the plane list is
    kept sorted lexicographically, so equal configurations compare equal
    structurally.  Planes must be pairwise distinct, share one cardinality
    t >= order+1, and cover every point.
    """

    order: int
    num_points: int
    planes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.order < 1:
            raise ConfigurationError(f"order must be >= 1, got {self.order}")
        n = self.num_points
        if n < 1:
            raise ConfigurationError(f"need at least one point, got {n}")
        normalized = tuple(sorted(tuple(sorted(plane)) for plane in self.planes))
        object.__setattr__(self, "planes", normalized)
        if not normalized:
            raise ConfigurationError("a configuration needs at least one plane")
        t = len(normalized[0])
        covered = set()
        seen = set()
        for plane in normalized:
            if len(set(plane)) != len(plane):
                raise ConfigurationError(f"plane {plane} repeats a point")
            if len(plane) != t:
                raise ConfigurationError(
                    f"plane {plane} has {len(plane)} points, expected {t}"
                )
            if plane[0] < 1 or plane[-1] > n:
                raise ConfigurationError(f"plane {plane} is not within 1..{n}")
            if plane in seen:
                raise ConfigurationError(f"duplicate plane {plane}")
            seen.add(plane)
            covered.update(plane)
        if t < self.order + 1:
            raise ConfigurationError(
                f"planes have {t} points but order {self.order} needs at least {self.order + 1}"
            )
        if len(covered) != n:
            isolated = sorted(set(range(1, n + 1)) - covered)
            raise ConfigurationError(f"isolated points {isolated} lie in no plane")

    @property
    def m(self) -> int:
        return len(self.planes)

    @property
    def t(self) -> int:
        return len(self.planes[0])

    @property
    def points(self) -> range:
        return range(1, self.num_points + 1)

    def degrees(self) -> dict[int, int]:
        """Number of planes through each point."""
        deg = dict.fromkeys(self.points, 0)
        for plane in self.planes:
            for p in plane:
                deg[p] += 1
        return deg

    def plane_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(plane) for plane in self.planes)


@dataclass(frozen=True)
class IncidenceProfile:
    """The tuple (n, m, s, t, k) plus regularity and exactness flags.

    ``s`` is 0 when the point degrees are not uniform; ``without_dual`` is
    only meaningful for regular profiles and records s <= k.
    """

    n: int
    m: int
    s: int
    t: int
    k: int
    is_regular: bool
    is_order_exact: bool
    without_dual: bool


@dataclass(frozen=True)
class CountingReport:
    """Pass/fail record for the counting identities of a regular profile.

    The two lower bounds do not apply to without-dual profiles and are
    ``None`` in that case.
    """

    incidence_identity_ok: bool
    order_bound_ok: bool
    plane_lower_bound_ok: bool | None
    point_lower_bound_ok: bool | None

    @property
    def all_ok(self) -> bool:
        checks = (
            self.incidence_identity_ok,
            self.order_bound_ok,
            self.plane_lower_bound_ok,
            self.point_lower_bound_ok,
        )
        return all(c is not False for c in checks)


@dataclass(frozen=True)
class LeviGraph:
    """Bipartite incidence graph: black point-vertices, white plane-vertices.

    White vertex j is the j-th plane in lexicographic order; edges are
    (point, plane index) pairs sorted by point then plane rank.
    """

    black: tuple[int, ...]
    white: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    def black_degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(self.black, 0)
        for p, _ in self.edges:
            deg[p] += 1
        return deg

    def white_degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(range(len(self.white)), 0)
        for _, j in self.edges:
            deg[j] += 1
        return deg


def parse_configuration(text: str) -> Configuration:
    """Parse configuration text format v1.

    The format is line oriented (UTF-8, LF, ``#`` starts a comment)::

        order <k>
        points <n>
        plane <i1> <i2> ... <it>    # indices strictly increasing, 1-based

    Raises ParseError with the offending line number on malformed input,
    out-of-range points, duplicate planes, or plane size mismatches.
    """
    order: int | None = None
    npoints: int | None = None
    planes: list[tuple[int, ...]] = []
    plane_size: int | None = None
    seen: dict[tuple[int, ...], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        keyword, args = fields[0], fields[1:]
        if keyword == "order":
            if order is not None:
                raise ParseError("repeated 'order' line", lineno)
            order = _parse_int(args, 1, "order", lineno)
            if order < 1:
                raise ParseError(f"order must be >= 1, got {order}", lineno)
        elif keyword == "points":
            if order is None:
                raise ParseError("'points' before 'order'", lineno)
            if npoints is not None:
                raise ParseError("repeated 'points' line", lineno)
            npoints = _parse_int(args, 1, "points", lineno)
            if npoints < 1:
                raise ParseError(f"need at least one point, got {npoints}", lineno)
        elif keyword == "plane":
            if order is None or npoints is None:
                raise ParseError("'plane' before 'order'/'points' header", lineno)
            try:
                pts = tuple(int(a) for a in args)
            except ValueError:
                raise ParseError(f"plane entries must be integers: {line!r}", lineno) from None
            if len(pts) < 2:
                raise ParseError("a plane needs at least two points", lineno)
            if any(a >= b for a, b in zip(pts, pts[1:])):
                raise ParseError(f"plane indices must be strictly increasing: {pts}", lineno)
            if pts[0] < 1 or pts[-1] > npoints:
                raise ParseError(f"point index out of range 1..{npoints}: {pts}", lineno)
            if plane_size is None:
                plane_size = len(pts)
            elif len(pts) != plane_size:
                raise ParseError(
                    f"plane has {len(pts)} points, earlier planes have {plane_size}", lineno
                )
            if pts in seen:
                raise ParseError(f"duplicate plane {pts} (first at line {seen[pts]})", lineno)
            seen[pts] = lineno
            planes.append(pts)
        else:
            raise ParseError(f"unknown directive {keyword!r}", lineno)
    if order is None or npoints is None:
        raise ParseError("missing 'order'/'points' header")
    if not planes:
        raise ParseError("no planes given")
    try:
        return Configuration(order, npoints, tuple(planes))
    except ConfigurationError as exc:
        raise ParseError(str(exc)) from exc


def _parse_int(args: list[str], arity: int, keyword: str, lineno: int) -> int:
    if len(args) != arity:
        raise ParseError(f"'{keyword}' takes {arity} argument(s)", lineno)
    try:
        return int(args[0])
    except ValueError:
        raise ParseError(f"'{keyword}' argument must be an integer", lineno) from None


def serialize_configuration(config: Configuration) -> str:
    """Emit format v1 text; planes in lexicographic order."""
    lines = [f"order {config.order}", f"points {config.num_points}"]
    for plane in config.planes:
        lines.append("plane " + " ".join(str(p) for p in plane))
    return "\n".join(lines) + "\n"


def profile(config: Configuration) -> IncidenceProfile:
    """Compute the incidence profile; irregularity is reported in the flags."""
    deg = config.degrees()
    values = set(deg.values())
    regular = len(values) == 1
    s = values.pop() if regular else 0
    return IncidenceProfile(
        n=config.num_points,
        m=config.m,
        s=s,
        t=config.t,
        k=config.order,
        is_regular=regular,
        is_order_exact=is_order_exact(config),
        without_dual=regular and s <= config.order,
    )


def is_order_exact(config: Configuration) -> bool:
    """True iff some k points lie in at least two planes.

    Equivalently two distinct planes share at least k points; a false
    result means the same plane set is really a structure of order k-1.
    """
    k = config.order
    sets = config.plane_sets()
    for a, b in itertools.combinations(sets, 2):
        if len(a & b) >= k:
            return True
    return False


def validate(config: Configuration, allow_without_dual: bool = False) -> IncidenceProfile:
    """Check the order-k axiom and regularity; return the profile.

    Fails when some k+1 points lie in two distinct planes (the witness is
    attached to the error), when point degrees are not uniform, or when
    s <= k and ``allow_without_dual`` is false.
    """
    k = config.order
    if config.t <= k:
        raise ConfigurationError(f"planes of {config.t} points cannot support order {k}")
    planes = config.planes
    sets = config.plane_sets()
    for i, j in itertools.combinations(range(len(sets)), 2):
        common = sets[i] & sets[j]
        if len(common) >= k + 1:
            witness = tuple(sorted(common)[: k + 1])
            raise AxiomViolationError(witness, (planes[i], planes[j]))
    deg = config.degrees()
    first_point = min(deg)
    for p in sorted(deg):
        if deg[p] != deg[first_point]:
            raise RegularityError("point", (first_point, deg[first_point]), (p, deg[p]))
    s = deg[first_point]
    if s <= k and not allow_without_dual:
        raise WithoutDualError(
            f"every point lies on s={s} <= k={k} planes; "
            "this is a configuration without dual"
        )
    return profile(config)


def check_counting_identities(prof: IncidenceProfile) -> CountingReport:
    """Verify n*s = m*t, k < n-1, and the lower bounds on m and n.

    All arithmetic is exact (cross-multiplied integers).  The profile must
    be regular.
    """
    if not prof.is_regular:
        raise ValueError("counting identities are defined for regular profiles only")
    n, m, s, t, k = prof.n, prof.m, prof.s, prof.t, prof.k
    incidence_ok = n * s == m * t
    order_ok = k < n - 1
    if prof.without_dual:
        plane_ok = None
        point_ok = None
    else:
        plane_ok = k * (m - 1) >= t * (s - 1)
        point_ok = k * (n - 1) >= s * (t - 1)
    return CountingReport(incidence_ok, order_ok, plane_ok, point_ok)


def levi_graph(config: Configuration) -> LeviGraph:
    """Build the Levi graph; requires the configuration to validate."""
    validate(config, allow_without_dual=True)
    edges = []
    for p in config.points:
        for j, plane in enumerate(config.planes):
            if p in set(plane):
                edges.append((p, j))
    return LeviGraph(
        black=tuple(config.points),
        white=config.planes,
        edges=tuple(edges),
    )


def configuration_from_levi(graph: LeviGraph, order: int) -> Configuration:
    """Reconstruct the configuration from a Levi graph edge set."""
    planes: list[list[int]] = [[] for _ in graph.white]
    for p, j in graph.edges:
        planes[j].append(p)
    return Configuration(order, len(graph.black), tuple(tuple(sorted(pl)) for pl in planes))


def is_connected(config: Configuration) -> bool:
    """True iff the Levi graph of the configuration is connected."""
    n = config.num_points
    adjacency: dict[int, set[int]] = {p: set() for p in config.points}
    for j, plane in enumerate(config.planes):
        for p in plane:
            adjacency[p].add(j)
    seen_points = {1}
    seen_planes: set[int] = set()
    queue = deque([1])
    while queue:
        p = queue.popleft()
        for j in adjacency[p]:
            if j not in seen_planes:
                seen_planes.add(j)
                for q in config.planes[j]:
                    if q not in seen_points:
                        seen_points.add(q)
                        queue.append(q)
    return len(seen_points) == n and len(seen_planes) == config.m


def levi_dot(graph: LeviGraph) -> str:
    """Render the Levi graph as deterministic DOT.

    Point vertices p1..pn are filled black, plane vertices e1..em white;
    the vertex and edge order follows the graph's canonical ordering.
    """
    lines = ["graph levi {"]
    for p in graph.black:
        lines.append(f'  p{p} [shape=circle, style=filled, fillcolor=black, label="p{p}"];')
    for j in range(len(graph.white)):
        lines.append(f'  e{j + 1} [shape=circle, style=filled, fillcolor=white, label="e{j + 1}"];')
    for p, j in graph.edges:
        lines.append(f"  p{p} -- e{j + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
