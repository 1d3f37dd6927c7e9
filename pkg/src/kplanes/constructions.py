"""Generators for configurations: complete families, polygons, duals,
stacks, and Cartesian products.

The stacking and product constructions build order-2 (and higher) structures
out of order-1 operands; each output is validated at its declared order
before being returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    Configuration,
    ConfigurationError,
    validate,
)
from .isomorphism import are_isomorphic


def complete_configuration(n: int) -> Configuration:
    """Order-2 configuration whose planes are all triples of 1..n."""
    if n < 4:
        raise ValueError(f"complete configurations need n >= 4, got {n}")
    planes = tuple(itertools.combinations(range(1, n + 1), 3))
    return Configuration(2, n, planes)


def polygon(n: int) -> Configuration:
    """Order-1 configuration with lines {i, i+1 mod n}."""
    if n < 3:
        raise ValueError(f"polygons need n >= 3, got {n}")
    lines = [(i, i + 1) for i in range(1, n)]
    lines.append((1, n))
    return Configuration(1, n, tuple(lines))


def fano() -> Configuration:
    """The 7-point, 7-line order-1 configuration covering every pair once."""
    lines = ((1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (1, 5, 6), (2, 6, 7), (1, 3, 7))
    return Configuration(1, 7, lines)


def four_line_geometry() -> Configuration:
    """The 6-point, 4-line order-1 configuration (complete quadrilateral)."""
    return Configuration(1, 6, ((1, 2, 3), (1, 4, 5), (3, 4, 6), (2, 5, 6)))


def dual(config: Configuration) -> Configuration:
    """Exchange points and planes; point p becomes the set of planes on p.

    Requires s >= k+1, otherwise the dual would have planes of t <= k
    points.  The dual's planes must also satisfy the structural plane
    invariants: two points lying in exactly the same planes would collapse
    to one dual plane, which raises a ConfigurationError.
    """
    validate(config, allow_without_dual=False)
    stars = tuple(
        tuple(j + 1 for j, plane in enumerate(config.planes) if p in set(plane))
        for p in config.points
    )
    return Configuration(config.order, config.m, stars)


def is_self_dual(config: Configuration) -> bool:
    """True iff the configuration is isomorphic to its own dual."""
    return are_isomorphic(config, dual(config))


def simple_stack(config: Configuration, d: int = 2) -> Configuration:
    """Blow each point of an order-1 configuration up into a block of d.

    Point i becomes the block {(i-1)d+1, ..., id} and each line becomes the
    union of its points' blocks, giving a configuration of order d on d*n
    points with profile (d*n, m, s, d*t).  The order is d rather than 2
    because all d points of one block already lie in s common planes, so no
    lower order validates once s >= 2; for the classical d=2 case the
    result is the usual stacked configuration of order 2.
    """
    if config.order != 1:
        raise ValueError("simple stacking takes an order-1 configuration")
    if d < 2:
        raise ValueError(f"stacking multiplicity must be >= 2, got {d}")
    validate(config, allow_without_dual=True)
    planes = []
    for line in config.planes:
        merged: list[int] = []
        for i in line:
            merged.extend(range((i - 1) * d + 1, i * d + 1))
        planes.append(tuple(sorted(merged)))
    stacked = Configuration(d, config.num_points * d, tuple(planes))
    validate(stacked, allow_without_dual=True)
    return stacked


def stack_projection(point: int, d: int) -> int:
    """The projection sending a stacked point back to its source point."""
    return (point - 1) // d + 1


def general_stack(
    a: Configuration,
    b: Configuration,
    pairing: tuple[int, ...] | None = None,
) -> Configuration:
    """Fuse paired lines of two order-1 configurations into planes.

    The operands must have the same number of lines and the same point
    degree.  ``pairing[i] = j`` pairs the i-th line of ``a`` with the j-th
    line of ``b`` (both in lexicographic order); the default is the
    identity pairing.  b's points are shifted up by a's point count.  The
    result is checked against the order-2 axiom.
    """
    validate(a, allow_without_dual=True)
    profile_b = validate(b, allow_without_dual=True)
    if a.order != 1 or b.order != 1:
        raise ValueError("general stacking takes two order-1 configurations")
    if a.m != b.m:
        raise ValueError(f"line counts differ: {a.m} != {b.m}")
    deg_a = next(iter(a.degrees().values()))
    if deg_a != profile_b.s:
        raise ValueError(f"point degrees differ: {deg_a} != {profile_b.s}")
    if pairing is None:
        pairing = tuple(range(a.m))
    if sorted(pairing) != list(range(a.m)):
        raise ValueError(f"pairing must be a permutation of 0..{a.m - 1}")
    shift = a.num_points
    planes = tuple(
        tuple(sorted(a.planes[i] + tuple(p + shift for p in b.planes[pairing[i]])))
        for i in range(a.m)
    )
    stacked = Configuration(2, a.num_points + b.num_points, planes)
    validate(stacked, allow_without_dual=True)
    return stacked


def decompose_stack(
    config: Configuration, max_points: int = 16
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Find a bipartition of the points exhibiting the configuration as a
    general stack, or None.

    Both trace structures E -> E & P_i must be valid order-1 configurations
    and every plane must trace to a distinct line on each side (otherwise
    the line/plane correspondence of the stack degenerates).  The search is
    exhaustive over bipartitions and is capped at ``max_points`` points.
    """
    validate(config, allow_without_dual=True)
    if config.order != 2:
        raise ValueError("stack decomposition applies to order-2 configurations")
    n = config.num_points
    if n > max_points:
        raise ValueError(
            f"exhaustive bipartition search is capped at {max_points} points, got {n}"
        )
    rest = [p for p in config.points if p != 1]
    for size in range(2, n - 1):
        for chosen in itertools.combinations(rest, size - 1):
            part1 = frozenset((1,) + chosen)
            part2 = frozenset(config.points) - part1
            if _valid_trace(config, part1) and _valid_trace(config, part2):
                return tuple(sorted(part1)), tuple(sorted(part2))
    return None


def _valid_trace(config: Configuration, part: frozenset[int]) -> bool:
    traces = []
    for plane in config.planes:
        trace = tuple(p for p in plane if p in part)
        if not 2 <= len(trace) <= len(plane) - 2:
            return False
        traces.append(trace)
    if len(set(traces)) != len(traces):
        return False
    order = {p: i + 1 for i, p in enumerate(sorted(part))}
    try:
        side = Configuration(1, len(part), tuple(tuple(order[p] for p in t) for t in traces))
        validate(side, allow_without_dual=False)
    except ConfigurationError:
        return False
    return True


def cartesian_product(a: Configuration, b: Configuration) -> Configuration:
    """Cartesian product: points are pairs, planes are products of lines.

    The pair (i, j) is encoded row-major as (i-1)*n_b + j.  The result has
    profile (n_a*n_b, m_a*m_b, s_a*s_b, t_a*t_b) and order max(t_a, t_b).
    """
    validate(a, allow_without_dual=True)
    validate(b, allow_without_dual=True)
    if a.order != 1 or b.order != 1:
        raise ValueError("the product takes two order-1 configurations")
    nb = b.num_points
    planes = tuple(
        tuple(sorted((i - 1) * nb + j for i in la for j in lb))
        for la in a.planes
        for lb in b.planes
    )
    order = max(a.t, b.t)
    product = Configuration(order, a.num_points * nb, planes)
    validate(product, allow_without_dual=True)
    return product


_RECIPE_ARITY = {
    "complete": 0,
    "polygon": 0,
    "fano": 0,
    "dual": 1,
    "simple_stack": 1,
    "general_stack": 2,
    "product": 2,
}


@dataclass(frozen=True)
class ConstructionRecipe:
    """A construction request: kind, operand configurations, multiplicity."""

    kind: str
    operands: tuple[Configuration, ...] = ()
    n: int | None = None
    multiplicity: int = 2
    pairing: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in _RECIPE_ARITY:
            raise ValueError(f"unknown construction kind {self.kind!r}")
        arity = _RECIPE_ARITY[self.kind]
        if len(self.operands) != arity:
            raise ValueError(
                f"{self.kind} takes {arity} operand(s), got {len(self.operands)}"
            )
        if self.kind in ("complete", "polygon") and self.n is None:
            raise ValueError(f"{self.kind} needs a point count n")


def build_recipe(recipe: ConstructionRecipe) -> Configuration:
    """Run a construction recipe."""
    if recipe.kind == "complete":
        return complete_configuration(recipe.n)
    if recipe.kind == "polygon":
        return polygon(recipe.n)
    if recipe.kind == "fano":
        return fano()
    if recipe.kind == "dual":
        return dual(recipe.operands[0])
    if recipe.kind == "simple_stack":
        return simple_stack(recipe.operands[0], recipe.multiplicity)
    if recipe.kind == "general_stack":
        return general_stack(recipe.operands[0], recipe.operands[1], recipe.pairing)
    return cartesian_product(recipe.operands[0], recipe.operands[1])
