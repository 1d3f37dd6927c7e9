"""Face posets, simplicial views, and numerical realization in 3-space.

An order-2 configuration induces a rank-3 face poset: the empty face, the
points, the pairwise plane intersections of size >= 2 (the derived lines),
the planes, and the full point set.  ``polytope_diagnostics`` checks the
abstract-polytope conditions on that poset instead of assuming them; the
diamond condition is expected to fail whenever more than two planes share
a line.

``realize`` searches for point coordinates making every plane's points
exactly coplanar while keeping the geometry non-degenerate.  A returned
embedding is a certificate (re-checked by ``verify_embedding``); absence
of a result after the restart budget is inconclusive and never a proof of
non-realizability.
"""

from __future__ import annotations

import concurrent.futures
import itertools
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .core import (
    Configuration,
    ConfigurationError,
    IncidenceProfile,
    ParseError,
    validate,
)

RANKS = (-1, 0, 1, 2, 3)


def derive_lines(config: Configuration) -> tuple[tuple[int, ...], ...]:
    """Distinct pairwise plane intersections of size >= 2, sorted."""
    validate(config, allow_without_dual=True)
    if config.order != 2:
        raise ValueError("derived lines are defined for order-2 configurations")
    sets = config.plane_sets()
    lines = {
        frozenset(a & b)
        for a, b in itertools.combinations(sets, 2)
        if len(a & b) >= 2
    }
    return tuple(sorted(tuple(sorted(line)) for line in lines))


@dataclass(frozen=True)
class Polytope:
    """Ranked faces of an order-2 configuration, ordered by set inclusion.

    Ranks: -1 the empty face, 0 points, 1 derived lines, 2 planes, 3 the
    full point set.
    """

    num_points: int
    point_faces: tuple[tuple[int, ...], ...]
    line_faces: tuple[tuple[int, ...], ...]
    plane_faces: tuple[tuple[int, ...], ...]

    @property
    def full_face(self) -> tuple[int, ...]:
        return tuple(range(1, self.num_points + 1))

    def faces(self, rank: int) -> tuple[tuple[int, ...], ...]:
        if rank == -1:
            return ((),)
        if rank == 0:
            return self.point_faces
        if rank == 1:
            return self.line_faces
        if rank == 2:
            return self.plane_faces
        if rank == 3:
            return (self.full_face,)
        raise ValueError(f"rank must be in {RANKS}, got {rank}")

    def face_count(self) -> int:
        return sum(len(self.faces(r)) for r in RANKS)

    @staticmethod
    def leq(f: tuple[int, ...], g: tuple[int, ...]) -> bool:
        return set(f) <= set(g)


def build_polytope(config: Configuration) -> Polytope:
    """Assemble the face poset; intersections of size <= 1 are dropped
    (they are already the empty face or a point)."""
    lines = derive_lines(config)
    return Polytope(
        num_points=config.num_points,
        point_faces=tuple((p,) for p in config.points),
        line_faces=lines,
        plane_faces=config.planes,
    )


@dataclass(frozen=True)
class PolytopeDiagnostics:
    """Checked abstract-polytope conditions, each with witnesses.

    ``flag_violations`` holds maximal chains whose length is not 4;
    ``section_violations`` holds (lower, upper) pairs whose open interval
    is disconnected; ``diamond_violations`` holds (lower, upper, count)
    triples where the number of intermediate faces differs from 2.
    """

    bounded_ok: bool
    flag_length_ok: bool
    flag_violations: tuple[tuple[tuple[int, ...], ...], ...]
    sections_ok: bool
    section_violations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    diamond_ok: bool
    diamond_violations: tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]

    @property
    def is_generalized_abstract_polytope(self) -> bool:
        """Conditions 1-3; the diamond condition is intentionally not required."""
        return self.bounded_ok and self.flag_length_ok and self.sections_ok

    @property
    def is_abstract_polytope(self) -> bool:
        return self.is_generalized_abstract_polytope and self.diamond_ok


def polytope_diagnostics(polytope: Polytope) -> PolytopeDiagnostics:
    """Check boundedness, flag lengths, section connectivity, and the
    diamond condition on the face poset.

    Sections with at most one intermediate rank are connected by
    convention; all larger sections are checked explicitly.
    """
    # distinct faces with their rank; a plane equal to the full face (only
    # possible for single-plane inputs) collapses to the higher rank
    rank_of: dict[frozenset[int], int] = {}
    for rank in RANKS:
        for face in polytope.faces(rank):
            rank_of[frozenset(face)] = rank
    faces = sorted(rank_of, key=lambda f: (rank_of[f], sorted(f)))
    least = frozenset()
    greatest = frozenset(polytope.full_face)
    bounded_ok = least in rank_of and greatest in rank_of and all(
        least <= f <= greatest for f in faces
    )

    covers: dict[frozenset[int], list[frozenset[int]]] = {f: [] for f in faces}
    for f in faces:
        above = [g for g in faces if f < g]
        for g in above:
            if not any(f < h < g for h in above):
                covers[f].append(g)

    flag_violations: list[tuple[tuple[int, ...], ...]] = []

    def walk(chain: list[frozenset[int]]):
        top = chain[-1]
        if not covers[top]:
            if len(chain) != 5:
                flag_violations.append(tuple(tuple(sorted(f)) for f in chain))
            return
        for nxt in covers[top]:
            chain.append(nxt)
            walk(chain)
            chain.pop()

    walk([least])

    section_violations: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for f in faces:
        for g in faces:
            if not (f < g) or rank_of[g] - rank_of[f] - 1 < 2:
                continue
            interior = [h for h in faces if f < h < g]
            if len(interior) <= 1:
                continue
            if not _comparability_connected(interior):
                section_violations.append((tuple(sorted(f)), tuple(sorted(g))))

    diamond_violations: list[tuple[tuple[int, ...], tuple[int, ...], int]] = []
    for f in faces:
        for g in faces:
            if not (f < g) or rank_of[g] - rank_of[f] != 2:
                continue
            middle_rank = rank_of[f] + 1
            count = sum(1 for h in faces if rank_of[h] == middle_rank and f < h < g)
            if count != 2:
                diamond_violations.append((tuple(sorted(f)), tuple(sorted(g)), count))

    return PolytopeDiagnostics(
        bounded_ok=bounded_ok,
        flag_length_ok=not flag_violations,
        flag_violations=tuple(flag_violations),
        sections_ok=not section_violations,
        section_violations=tuple(section_violations),
        diamond_ok=not diamond_violations,
        diamond_violations=tuple(diamond_violations),
    )


def _comparability_connected(interior: list[frozenset[int]]) -> bool:
    index = {f: i for i, f in enumerate(interior)}
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        fi = interior[i]
        for f, j in index.items():
            if j not in seen and (f < fi or fi < f):
                seen.add(j)
                stack.append(j)
    return len(seen) == len(interior)


@dataclass(frozen=True)
class SimplicialRealization:
    """All non-empty subsets of the planes of an s=t=3 configuration."""

    simplices: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return max(len(s) for s in self.simplices) - 1

    def of_dimension(self, d: int) -> tuple[tuple[int, ...], ...]:
        return tuple(s for s in self.simplices if len(s) == d + 1)

    def is_downward_closed(self) -> bool:
        have = set(self.simplices)
        return all(
            tuple(sorted(sub)) in have
            for simplex in self.simplices
            for size in range(1, len(simplex))
            for sub in itertools.combinations(simplex, size)
        )


def simplicial_realization(config: Configuration) -> SimplicialRealization:
    """The abstract simplicial complex of all subsets of the planes.

    Only defined for t = 3 (larger planes would not be 2-simplices).
    """
    if config.t != 3:
        raise ConfigurationError(
            f"the simplicial view needs planes of 3 points, got t={config.t}"
        )
    simplices: set[tuple[int, ...]] = set()
    for plane in config.planes:
        for size in range(1, len(plane) + 1):
            simplices.update(itertools.combinations(plane, size))
    return SimplicialRealization(
        simplices=tuple(sorted(simplices, key=lambda s: (len(s), s)))
    )


# ---------------------------------------------------------------------------
# embeddings


@dataclass(frozen=True, eq=False)
class Embedding:
    """Coordinates in 3-space per point.

    Residuals and margins are always recomputed from the coordinates.  The
    planarity residual of a plane is the squared smallest singular value
    of its centered coordinate block.  The genericity margins say that the
    face poset embeds faithfully, rank by rank: points stay separated,
    each plane's point set is genuinely two-dimensional, distinct derived
    lines land on distinct lines, and distinct planes land on distinct
    affine hulls.
    """

    config: Configuration
    coordinates: np.ndarray

    def __post_init__(self):
        coords = np.array(self.coordinates, dtype=float)
        if coords.shape != (self.config.num_points, 3):
            raise ValueError(
                f"expected {(self.config.num_points, 3)} coordinates, got {coords.shape}"
            )
        coords.setflags(write=False)
        object.__setattr__(self, "coordinates", coords)

    def _singular_values(self, members: tuple[int, ...]) -> np.ndarray:
        block = self.coordinates[np.array(members) - 1]
        centered = block - block.mean(axis=0)
        return np.linalg.svd(centered, compute_uv=False)

    def planarity_residuals(self) -> np.ndarray:
        return np.array([self._singular_values(p)[2] ** 2 for p in self.config.planes])

    def collinearity_margins(self) -> np.ndarray:
        return np.array([self._singular_values(p)[1] for p in self.config.planes])

    def plane_distinctness_margins(self) -> np.ndarray:
        """Smallest singular value of the union of each plane pair; zero
        exactly when two combinatorial planes share one affine hull."""
        sets = self.config.plane_sets()
        return np.array(
            [
                self._singular_values(tuple(sorted(a | b)))[2]
                for a, b in itertools.combinations(sets, 2)
            ]
        )

    def line_distinctness_margins(self) -> np.ndarray:
        """Second singular value of the union of each derived-line pair;
        zero exactly when two rank-1 faces land on one common line."""
        lines = derive_lines(self.config)
        return np.array(
            [
                self._singular_values(tuple(sorted(set(a) | set(b))))[1]
                for a, b in itertools.combinations(lines, 2)
            ]
        )

    def min_pairwise_distance(self) -> float:
        diffs = self.coordinates[:, None, :] - self.coordinates[None, :, :]
        dist = np.sqrt((diffs**2).sum(axis=2))
        np.fill_diagonal(dist, np.inf)
        return float(dist.min())


@dataclass(frozen=True)
class EmbeddingReport:
    """Independent re-check of an embedding against the certificate bounds."""

    max_residual: float
    min_distance: float
    min_margin: float
    min_plane_distinctness: float
    min_line_distinctness: float
    residuals: tuple[float, ...]
    margins: tuple[float, ...]
    planarity_ok: bool
    separation_ok: bool
    collinearity_ok: bool
    plane_distinctness_ok: bool
    line_distinctness_ok: bool
    unintended_incidences: tuple[tuple[int, int, float], ...]

    @property
    def ok(self) -> bool:
        return (
            self.planarity_ok
            and self.separation_ok
            and self.collinearity_ok
            and self.plane_distinctness_ok
            and self.line_distinctness_ok
        )


def verify_embedding(
    config: Configuration,
    embedding: Embedding | np.ndarray,
    tolerance: float = 1e-8,
    separation: float = 1e-3,
    collinearity: float = 1e-3,
    plane_distinctness: float = 1e-3,
    line_distinctness: float = 1e-3,
    incidence_tolerance: float | None = None,
) -> EmbeddingReport:
    """Recompute residuals and margins from the coordinates alone.

    Unintended incidences (a point within ``incidence_tolerance`` of the
    affine hull of a plane it does not lie on) are reported informationally
    and do not affect the verdict; the default cutoff is sqrt(tolerance).
    """
    if not isinstance(embedding, Embedding):
        embedding = Embedding(config, embedding)
    if not np.all(np.isfinite(embedding.coordinates)):
        raise ValueError("embedding coordinates must be finite")
    if incidence_tolerance is None:
        incidence_tolerance = float(np.sqrt(tolerance))
    residuals = embedding.planarity_residuals()
    margins = embedding.collinearity_margins()
    distinctness = embedding.plane_distinctness_margins()
    min_distinctness = float(distinctness.min()) if distinctness.size else np.inf
    line_margins = embedding.line_distinctness_margins()
    min_line = float(line_margins.min()) if line_margins.size else np.inf
    min_distance = embedding.min_pairwise_distance()

    unintended: list[tuple[int, int, float]] = []
    coords = embedding.coordinates
    for j, plane in enumerate(config.planes):
        block = coords[np.array(plane) - 1]
        centroid = block.mean(axis=0)
        _, svals, vt = np.linalg.svd(block - centroid)
        if svals[1] <= collinearity:
            continue  # no well-defined affine hull to test against
        normal = vt[2]
        members = set(plane)
        for p in config.points:
            if p in members:
                continue
            distance = abs(float((coords[p - 1] - centroid) @ normal))
            if distance < incidence_tolerance:
                unintended.append((p, j, distance))

    return EmbeddingReport(
        max_residual=float(residuals.max()),
        min_distance=min_distance,
        min_margin=float(margins.min()),
        min_plane_distinctness=min_distinctness,
        min_line_distinctness=min_line,
        residuals=tuple(float(r) for r in residuals),
        margins=tuple(float(v) for v in margins),
        planarity_ok=bool(residuals.max() < tolerance),
        separation_ok=bool(min_distance > separation),
        collinearity_ok=bool(margins.min() > collinearity),
        plane_distinctness_ok=bool(min_distinctness > plane_distinctness),
        line_distinctness_ok=bool(min_line > line_distinctness),
        unintended_incidences=tuple(unintended),
    )


def _coplanarity_objective(
    x: np.ndarray,
    plane_indices: list[np.ndarray],
    plane_union_indices: list[np.ndarray],
    line_union_indices: list[np.ndarray],
    pair_left: np.ndarray,
    pair_right: np.ndarray,
    sep_target: float,
    col_target: float,
    hull_target: float,
    line_target: float,
) -> tuple[float, np.ndarray]:
    """Sum of squared smallest singular values plus hinge penalties.

    The gradient of the planarity term follows from d(|Av|^2)/dA = 2 A v v^T
    at the optimal unit v (envelope theorem); A is already centered so the
    row gradients need no recentering.  Hinge terms keep point pairs apart,
    plane blocks non-collinear, plane-pair unions non-coplanar (otherwise
    everything-in-one-plane is a trivial minimum), and derived-line pairs
    off a common line.
    """
    points = x.reshape(-1, 3)
    value = 0.0
    grad = np.zeros_like(points)
    for idx in plane_indices:
        block = points[idx]
        centered = block - block.mean(axis=0)
        u, svals, vt = np.linalg.svd(centered, full_matrices=False)
        s3 = svals[2]
        v3 = vt[2]
        value += s3 * s3
        w = centered @ v3
        grad[idx] += 2.0 * np.outer(w, v3)
        s2 = svals[1]
        if s2 < col_target:
            value += (s2 - col_target) ** 2
            g = 2.0 * (s2 - col_target) * np.outer(u[:, 1], vt[1])
            grad[idx] += g - g.mean(axis=0)
    for idx in plane_union_indices:
        block = points[idx]
        centered = block - block.mean(axis=0)
        u, svals, vt = np.linalg.svd(centered, full_matrices=False)
        s3 = svals[2]
        if s3 < hull_target:
            value += (s3 - hull_target) ** 2
            g = 2.0 * (s3 - hull_target) * np.outer(u[:, 2], vt[2])
            grad[idx] += g - g.mean(axis=0)
    for idx in line_union_indices:
        block = points[idx]
        centered = block - block.mean(axis=0)
        u, svals, vt = np.linalg.svd(centered, full_matrices=False)
        s2 = svals[1]
        if s2 < line_target:
            value += (s2 - line_target) ** 2
            g = 2.0 * (s2 - line_target) * np.outer(u[:, 1], vt[1])
            grad[idx] += g - g.mean(axis=0)
    diff = points[pair_left] - points[pair_right]
    dist = np.sqrt((diff**2).sum(axis=1))
    close = dist < sep_target
    if close.any():
        short = dist[close]
        value += float(((short - sep_target) ** 2).sum())
        coeff = 2.0 * (short - sep_target) / np.maximum(short, 1e-12)
        push = coeff[:, None] * diff[close]
        np.add.at(grad, pair_left[close], push)
        np.add.at(grad, pair_right[close], -push)
    return value, grad.ravel()


def _run_restart(args) -> np.ndarray | None:
    (
        planes,
        lines,
        num_points,
        seed,
        index,
        tolerance,
        separation,
        collinearity,
        plane_distinctness,
        line_distinctness,
        max_iterations,
    ) = args
    plane_indices = [np.array(plane) - 1 for plane in planes]
    plane_union_indices = [
        np.array(sorted(set(a) | set(b))) - 1
        for a, b in itertools.combinations(planes, 2)
    ]
    line_union_indices = [
        np.array(sorted(set(a) | set(b))) - 1
        for a, b in itertools.combinations(lines, 2)
    ]
    pairs = np.array(
        list(itertools.combinations(range(num_points), 2)), dtype=int
    )
    pair_left, pair_right = pairs[:, 0], pairs[:, 1]
    sep_target = max(0.2, 2.0 * separation)
    col_target = max(0.2, 2.0 * collinearity)
    hull_target = max(0.2, 2.0 * plane_distinctness)
    line_target = max(0.2, 2.0 * line_distinctness)
    rng = np.random.default_rng(np.random.SeedSequence(entropy=(seed, index)))
    direction = rng.normal(size=(num_points, 3))
    direction /= np.linalg.norm(direction, axis=1, keepdims=True)
    radius = rng.uniform(size=(num_points, 1)) ** (1.0 / 3.0)
    x0 = (direction * radius).ravel()
    result = minimize(
        _coplanarity_objective,
        x0,
        args=(
            plane_indices,
            plane_union_indices,
            line_union_indices,
            pair_left,
            pair_right,
            sep_target,
            col_target,
            hull_target,
            line_target,
        ),
        jac=True,
        method="L-BFGS-B",
        options={"maxiter": max_iterations, "ftol": 1e-18, "gtol": 1e-14},
    )
    coords = result.x.reshape(num_points, 3)
    config = Configuration(2, num_points, planes)
    report = verify_embedding(
        config,
        coords,
        tolerance,
        separation,
        collinearity,
        plane_distinctness,
        line_distinctness,
    )
    return coords if report.ok else None


def realize(
    config: Configuration,
    restarts: int = 64,
    seed: int = 0,
    tolerance: float = 1e-8,
    separation: float = 1e-3,
    collinearity: float = 1e-3,
    plane_distinctness: float = 1e-3,
    line_distinctness: float = 1e-3,
    max_iterations: int = 400,
    jobs: int = 1,
) -> Embedding | None:
    """Search for a flat-faced embedding of an order-2 configuration.

    Runs seeded random restarts of a local descent on the coplanarity
    objective; the first restart index whose result passes the independent
    verifier wins, so the outcome does not depend on scheduling.  ``None``
    means the budget ran out without a certificate, which is inconclusive.
    """
    validate(config, allow_without_dual=True)
    if config.order != 2:
        raise ValueError("realization targets order-2 configurations")
    lines = derive_lines(config)
    arg_list = [
        (
            config.planes,
            lines,
            config.num_points,
            seed,
            index,
            tolerance,
            separation,
            collinearity,
            plane_distinctness,
            line_distinctness,
            max_iterations,
        )
        for index in range(restarts)
    ]
    winner: np.ndarray | None = None
    if jobs <= 1:
        for args in arg_list:
            coords = _run_restart(args)
            if coords is not None:
                winner = coords
                break
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            for coords in pool.map(_run_restart, arg_list):
                if coords is not None:
                    winner = coords
                    break
    if winner is None:
        return None
    embedding = Embedding(config, winner)
    report = verify_embedding(
        config,
        embedding,
        tolerance,
        separation,
        collinearity,
        plane_distinctness,
        line_distinctness,
    )
    if not report.ok:
        raise AssertionError("solver returned an embedding the verifier rejects")
    return embedding


# ---------------------------------------------------------------------------
# superconfigurations


@dataclass(frozen=True)
class SuperconfigurationReport:
    """Verdict plus the two derived order-1 profiles (None when invalid)."""

    is_superconfiguration: bool
    lines: tuple[tuple[int, ...], ...]
    point_line_profile: IncidenceProfile | None
    line_plane_profile: IncidenceProfile | None


def is_superconfiguration(config: Configuration) -> SuperconfigurationReport:
    """Check that points/lines and lines/planes each form an order-1
    configuration, with the derived lines as intermediate objects."""
    lines = derive_lines(config)
    point_line = _order1_profile(config.num_points, lines)
    line_plane = None
    if lines:
        index = {line: i + 1 for i, line in enumerate(lines)}
        traces = tuple(
            tuple(sorted(index[line] for line in lines if set(line) <= set(plane)))
            for plane in config.planes
        )
        line_plane = _order1_profile(len(lines), traces)
    return SuperconfigurationReport(
        is_superconfiguration=point_line is not None and line_plane is not None,
        lines=lines,
        point_line_profile=point_line,
        line_plane_profile=line_plane,
    )


def _order1_profile(
    num_points: int, blocks: tuple[tuple[int, ...], ...]
) -> IncidenceProfile | None:
    if not blocks or any(len(b) < 2 for b in blocks):
        return None
    try:
        structure = Configuration(1, num_points, blocks)
        return validate(structure, allow_without_dual=False)
    except ConfigurationError:
        return None


# ---------------------------------------------------------------------------
# embedding text format


def serialize_embedding(embedding: Embedding) -> str:
    """One line per point: ``point <i> <x> <y> <z>``."""
    lines = []
    for p in embedding.config.points:
        x, y, z = (float(v) for v in embedding.coordinates[p - 1])
        lines.append(f"point {p} {x!r} {y!r} {z!r}")
    return "\n".join(lines) + "\n"


def parse_embedding(text: str, config: Configuration) -> Embedding:
    """Read coordinates written by ``serialize_embedding``."""
    coords = np.full((config.num_points, 3), np.nan)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 5 or fields[0] != "point":
            raise ParseError(f"expected 'point <i> <x> <y> <z>': {raw!r}", lineno)
        try:
            p = int(fields[1])
            xyz = [float(v) for v in fields[2:]]
        except ValueError:
            raise ParseError(f"bad numeric field in {raw!r}", lineno) from None
        if not 1 <= p <= config.num_points:
            raise ParseError(f"point {p} out of range 1..{config.num_points}", lineno)
        if np.isfinite(coords[p - 1]).any():
            raise ParseError(f"point {p} given twice", lineno)
        coords[p - 1] = xyz
    missing = [p for p in config.points if not np.isfinite(coords[p - 1]).all()]
    if missing:
        raise ParseError(f"missing coordinates for points {missing}")
    return Embedding(config, coords)
