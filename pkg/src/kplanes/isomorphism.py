"""Canonical labeling, isomorphism tests, and automorphism groups.

The canonical form of a configuration is defined as the lexicographically
least sorted plane list over all relabelings of its points.  For a fixed
number of planes this is equivalent to maximising the characteristic
bitvector of the plane set over the lexicographically ordered t-subsets of
the point set, which is what the fast path computes: for n <= 9 the full
permutation orbit is evaluated with precomputed numpy index tables.  Larger
point sets fall back to a branch-and-bound search over partial relabelings
whose bound is a per-plane optimistic image list.

Permutations are tuples of length n where ``perm[i]`` is the image of point
i+1 (values are 1-based).
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .core import Configuration


class SearchBudgetError(RuntimeError):
    """A canonicalization or group search exceeded its budget."""


# ---------------------------------------------------------------------------
# permutation helpers


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Apply p first, then q."""
    return tuple(q[x - 1] for x in p)


def inverse_perm(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x - 1] = i + 1
    return tuple(inv)


def perm_order(p: tuple[int, ...]) -> int:
    order = 1
    for cycle in _cycles(p):
        order = math.lcm(order, len(cycle))
    return order


def _cycles(p: tuple[int, ...]) -> list[list[int]]:
    seen: set[int] = set()
    cycles = []
    for start in range(1, len(p) + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        x = p[start - 1]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = p[x - 1]
        if len(cycle) > 1:
            cycles.append(cycle)
    return cycles


def cycle_notation(p: tuple[int, ...]) -> str:
    cycles = _cycles(p)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)


def apply_to_planes(
    planes: tuple[tuple[int, ...], ...], perm: tuple[int, ...]
) -> tuple[tuple[int, ...], ...]:
    """Relabel a normalized plane list by a point permutation."""
    return tuple(sorted(tuple(sorted(perm[p - 1] for p in plane)) for plane in planes))


def relabel(config: Configuration, perm: tuple[int, ...]) -> Configuration:
    return Configuration(config.order, config.num_points, apply_to_planes(config.planes, perm))


# ---------------------------------------------------------------------------
# full-orbit tables (n <= 9)

_TABLE_MAX_POINTS = 9


@functools.lru_cache(maxsize=4)
def _orbit_tables(n: int, t: int) -> "_OrbitTables":
    return _OrbitTables(n, t)


class _OrbitTables:
    """Precomputed action of all n! point permutations on t-subsets.

    ``pre[i][j]`` is the index of the t-subset whose image under permutation
    i is the j-th subset, so the characteristic vector of a permuted plane
    set is ``vec[pre[i]]``.
    """

    def __init__(self, n: int, t: int):
        if n > _TABLE_MAX_POINTS:
            raise ValueError(f"orbit tables support n <= {_TABLE_MAX_POINTS}, got {n}")
        self.n = n
        self.t = t
        self.universe = tuple(itertools.combinations(range(1, n + 1), t))
        self.index_of = {subset: i for i, subset in enumerate(self.universe)}
        nt = len(self.universe)
        self.nperms = math.factorial(n)
        self.perms = np.array(
            list(itertools.permutations(range(n))), dtype=np.int8
        )
        subsets0 = np.array([[p - 1 for p in s] for s in self.universe], dtype=np.int8)
        codes_universe = self._encode(subsets0.astype(np.int64))
        pre = np.empty((self.nperms, nt), dtype=np.int16)
        positions = np.arange(nt, dtype=np.int16)
        chunk = max(1, 4_000_000 // max(1, nt * t))
        for lo in range(0, self.nperms, chunk):
            hi = min(self.nperms, lo + chunk)
            images = self.perms[lo:hi][:, subsets0]
            images.sort(axis=2)
            codes = self._encode(images.astype(np.int32))
            img_idx = np.searchsorted(codes_universe, codes)
            block = np.empty(img_idx.shape, dtype=np.int16)
            np.put_along_axis(block, img_idx, positions[None, :], axis=1)
            pre[lo:hi] = block
        self.pre = pre
        self.nbits = nt
        self.nlimbs = (nt + 63) // 64
        self._pad = np.zeros((self.nperms, self.nlimbs * 8), dtype=np.uint8)
        self._img = np.empty((self.nperms, nt), dtype=np.uint8)

    def _encode(self, subsets: np.ndarray) -> np.ndarray:
        codes = subsets[..., 0]
        for i in range(1, self.t):
            codes = codes * self.n + subsets[..., i]
        return codes

    def charvec(self, planes: tuple[tuple[int, ...], ...]) -> np.ndarray:
        vec = np.zeros(self.nbits, dtype=np.uint8)
        for plane in planes:
            vec[self.index_of[plane]] = 1
        return vec

    def decode(self, vec: np.ndarray) -> tuple[tuple[int, ...], ...]:
        return tuple(self.universe[i] for i in np.flatnonzero(vec))

    def _limbs(self, vec: np.ndarray) -> np.ndarray:
        pad = np.zeros(self.nlimbs * 8, dtype=np.uint8)
        packed = np.packbits(vec)
        pad[: packed.size] = packed
        return pad.view(">u8")

    def _orbit_limbs(self, vec: np.ndarray) -> np.ndarray:
        np.take(vec, self.pre, out=self._img)
        packed = np.packbits(self._img, axis=1)
        self._pad[:, : packed.shape[1]] = packed
        return self._pad.view(">u8")

    def _max_rows(self, limbs: np.ndarray) -> np.ndarray:
        rows = np.arange(self.nperms)
        for limb in range(self.nlimbs):
            col = limbs[rows, limb]
            rows = rows[col == col.max()]
        return rows

    def is_canonical(self, vec: np.ndarray) -> bool:
        limbs = self._orbit_limbs(vec)
        own = self._limbs(vec)
        rows = np.arange(self.nperms)
        for limb in range(self.nlimbs):
            col = limbs[rows, limb]
            mx = col.max()
            if mx != own[limb]:
                return False
            rows = rows[col == mx]
        return True

    def canonicalize(
        self, planes: tuple[tuple[int, ...], ...]
    ) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
        vec = self.charvec(planes)
        limbs = self._orbit_limbs(vec)
        rows = self._max_rows(limbs)
        best = int(rows[0])
        perm = tuple(int(x) + 1 for x in self.perms[best])
        return apply_to_planes(planes, perm), perm

    def automorphisms(self, planes: tuple[tuple[int, ...], ...]) -> list[tuple[int, ...]]:
        vec = self.charvec(planes)
        limbs = self._orbit_limbs(vec)
        own = self._limbs(vec)
        mask = np.all(limbs == own[None, :], axis=1)
        return [tuple(int(x) + 1 for x in row) for row in self.perms[np.flatnonzero(mask)]]


# ---------------------------------------------------------------------------
# branch-and-bound canonical labeling (n > 9)


def _canonical_bnb(
    planes: tuple[tuple[int, ...], ...], n: int, node_budget: int
) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    plane_sets = [set(plane) for plane in planes]
    m = len(planes)
    best: list[tuple[int, ...]] | None = None
    best_map: dict[int, int] = {}
    assigned: list[list[int]] = [[] for _ in range(m)]
    open_slots = [len(plane) for plane in planes]
    new_of: dict[int, int] = {}
    nodes = 0

    def bound(depth: int) -> list[tuple[int, ...]]:
        out = []
        for i in range(m):
            u = open_slots[i]
            out.append(tuple(assigned[i]) + tuple(range(depth + 1, depth + 1 + u)))
        out.sort()
        return out

    def push(point: int, label: int):
        for i, ps in enumerate(plane_sets):
            if point in ps:
                assigned[i].append(label)
                open_slots[i] -= 1

    def pop(point: int):
        for i, ps in enumerate(plane_sets):
            if point in ps:
                assigned[i].pop()
                open_slots[i] += 1

    def recurse(depth: int):
        nonlocal best, best_map, nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetError(
                f"canonical labeling exceeded {node_budget} nodes at n={n}"
            )
        current = bound(depth)
        if best is not None and current >= best:
            return
        if depth == n:
            best = current
            best_map = dict(new_of)
            return
        label = depth + 1
        scored = []
        for p in range(1, n + 1):
            if p in new_of:
                continue
            push(p, label)
            scored.append((bound(depth + 1), p))
            pop(p)
        scored.sort()
        for _, p in scored:
            new_of[p] = label
            push(p, label)
            recurse(depth + 1)
            pop(p)
            del new_of[p]

    recurse(0)
    assert best is not None
    perm = tuple(best_map[p] for p in range(1, n + 1))
    return tuple(best), perm


# ---------------------------------------------------------------------------
# backtracking automorphism search (n > 9)


def _point_invariants(planes: tuple[tuple[int, ...], ...], n: int) -> list[tuple]:
    degree = [0] * (n + 1)
    pair_deg: dict[tuple[int, int], int] = {}
    for plane in planes:
        for p in plane:
            degree[p] += 1
        for a, b in itertools.combinations(plane, 2):
            pair_deg[(a, b)] = pair_deg.get((a, b), 0) + 1
    inv = []
    for p in range(1, n + 1):
        profile = sorted(
            pair_deg.get((min(p, q), max(p, q)), 0) for q in range(1, n + 1) if q != p
        )
        inv.append((degree[p], tuple(profile)))
    return inv


def _automorphisms_backtracking(
    planes: tuple[tuple[int, ...], ...], n: int, element_budget: int, node_budget: int
) -> list[tuple[int, ...]]:
    plane_sets = [frozenset(plane) for plane in planes]
    plane_lookup = set(plane_sets)
    by_point: list[list[int]] = [[] for _ in range(n + 1)]
    for i, ps in enumerate(plane_sets):
        for p in ps:
            by_point[p].append(i)
    inv = _point_invariants(planes, n)
    candidates = [
        [q for q in range(1, n + 1) if inv[q - 1] == inv[p - 1]] for p in range(1, n + 1)
    ]
    found: list[tuple[int, ...]] = []
    sigma: dict[int, int] = {}
    used: set[int] = set()
    nodes = 0

    def feasible(p: int) -> bool:
        # every plane through p must map into some plane of equal leftover size
        for i in by_point[p]:
            image = {sigma[x] for x in plane_sets[i] if x in sigma}
            if not any(image <= f for f in plane_lookup):
                return False
        return True

    def recurse(p: int):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetError(f"automorphism search exceeded {node_budget} nodes")
        if p > n:
            perm = tuple(sigma[x] for x in range(1, n + 1))
            if set(apply_to_planes(planes, perm)) == set(planes):
                found.append(perm)
                if len(found) > element_budget:
                    raise SearchBudgetError(
                        f"automorphism group exceeds {element_budget} elements"
                    )
            return
        for q in candidates[p - 1]:
            if q in used:
                continue
            sigma[p] = q
            used.add(q)
            if feasible(p):
                recurse(p + 1)
            used.remove(q)
            del sigma[p]

    recurse(1)
    return found


# ---------------------------------------------------------------------------
# public canonical form / isomorphism API


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical plane list plus one relabeling that achieves it."""

    planes: tuple[tuple[int, ...], ...]
    permutation: tuple[int, ...]


def canonical_form(config: Configuration, node_budget: int = 2_000_000) -> CanonicalForm:
    """Deterministic, relabeling-invariant canonical representative.

    The semantics are the lexicographically least sorted plane list over
    all point relabelings; the implementation is exact for every input it
    accepts (full-orbit scan for n <= 9, pruned search with a node budget
    beyond).
    """
    n = config.num_points
    if n <= _TABLE_MAX_POINTS:
        tables = _orbit_tables(n, config.t)
        planes, perm = tables.canonicalize(config.planes)
    else:
        planes, perm = _canonical_bnb(config.planes, n, node_budget)
    return CanonicalForm(planes=planes, permutation=perm)


def canonical_form_reference(config: Configuration) -> tuple[tuple[int, ...], ...]:
    """Reference semantics: minimum over all n! relabelings, in pure Python.

    Exponential; guarded to n <= 9.
    """
    n = config.num_points
    if n > 9:
        raise ValueError("reference canonicalization is limited to n <= 9")
    best = None
    for images in itertools.permutations(range(1, n + 1)):
        candidate = apply_to_planes(config.planes, images)
        if best is None or candidate < best:
            best = candidate
    assert best is not None
    return best


def are_isomorphic(a: Configuration, b: Configuration) -> bool:
    """True iff some relabeling of a's points maps its plane set onto b's."""
    if a.num_points != b.num_points or a.m != b.m or a.t != b.t:
        return False
    if sorted(a.degrees().values()) != sorted(b.degrees().values()):
        return False
    return canonical_form(a).planes == canonical_form(b).planes


# ---------------------------------------------------------------------------
# permutation groups


@dataclass(frozen=True)
class PermGroup:
    """A permutation group on points 1..degree, as generators plus order."""

    degree: int
    generators: tuple[tuple[int, ...], ...]
    order: int


@dataclass(frozen=True)
class Fingerprint:
    """Order, abelian flag, and element-order multiset of a finite group."""

    order: int
    abelian: bool
    element_orders: tuple[tuple[int, int], ...]


def expand_group(
    generators: tuple[tuple[int, ...], ...], degree: int, max_elements: int = 100_000
) -> set[tuple[int, ...]]:
    """All elements generated, by breadth-first closure."""
    ident = identity_perm(degree)
    elements = {ident}
    frontier = [ident]
    while frontier:
        new_frontier = []
        for g in frontier:
            for h in generators:
                prod = compose(g, h)
                if prod not in elements:
                    elements.add(prod)
                    new_frontier.append(prod)
                    if len(elements) > max_elements:
                        raise SearchBudgetError(
                            f"group expansion exceeded {max_elements} elements"
                        )
        frontier = new_frontier
    return elements


def _reduce_generators(
    elements: list[tuple[int, ...]], degree: int
) -> tuple[tuple[int, ...], ...]:
    """Greedy small generating set from a full, sorted element list."""
    target = len(elements)
    gens: list[tuple[int, ...]] = []
    generated: set[tuple[int, ...]] = {identity_perm(degree)}
    for g in elements:
        if g in generated:
            continue
        gens.append(g)
        generated = expand_group(tuple(gens), degree, max_elements=max(target, 1))
        if len(generated) == target:
            break
    return tuple(gens)


def automorphism_group(
    config: Configuration,
    element_budget: int = 1_000_000,
    node_budget: int = 5_000_000,
) -> PermGroup:
    """The full stabilizer of the plane set inside the symmetric group.

    Exhaustive over the n! orbit for n <= 9; invariant-pruned backtracking
    beyond, subject to the given budgets.
    """
    n = config.num_points
    if n <= _TABLE_MAX_POINTS:
        elements = _orbit_tables(n, config.t).automorphisms(config.planes)
    else:
        elements = _automorphisms_backtracking(
            config.planes, n, element_budget, node_budget
        )
    elements.sort()
    gens = _reduce_generators(elements, n)
    return PermGroup(degree=n, generators=gens, order=len(elements))


def group_fingerprint(group: PermGroup, max_elements: int = 100_000) -> Fingerprint:
    """Exact fingerprint computed by expanding the group from generators."""
    if group.order > max_elements:
        raise SearchBudgetError(
            f"group of order {group.order} exceeds fingerprint budget {max_elements}"
        )
    elements = expand_group(group.generators, group.degree, max_elements)
    abelian = all(
        compose(g, h) == compose(h, g)
        for g, h in itertools.combinations(group.generators, 2)
    )
    counts: dict[int, int] = {}
    for el in elements:
        o = perm_order(el)
        counts[o] = counts.get(o, 0) + 1
    orders = tuple(sorted(counts.items()))
    return Fingerprint(order=len(elements), abelian=abelian, element_orders=orders)


# ---------------------------------------------------------------------------
# named groups for the small symmetric census


def _perm_from_cycles(degree: int, cycles: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    images = list(range(1, degree + 1))
    for cycle in cycles:
        for a, b in zip(cycle, cycle[1:]):
            images[a - 1] = b
        images[cycle[-1] - 1] = cycle[0]
    return tuple(images)


# Generator sets for the groups that occur in the small census; fingerprints
# are derived from these at run time, never hard-coded.  Each generator is a
# tuple of disjoint cycles.
_NAMED_GROUP_GENERATORS: dict[str, tuple[int, tuple[tuple[tuple[int, ...], ...], ...]]] = {
    "trivial": (1, ()),
    "Z2": (2, (((1, 2),),)),
    "Z3": (3, (((1, 2, 3),),)),
    "Z4": (4, (((1, 2, 3, 4),),)),
    "Z2xZ2": (4, (((1, 2),), ((3, 4),))),
    "S3": (3, (((1, 2),), ((1, 2, 3),))),
    "S4": (4, (((1, 2),), ((1, 2, 3, 4),))),
    "D4": (4, (((1, 2, 3, 4),), ((1, 3),))),
    "D5": (5, (((1, 2, 3, 4, 5),), ((2, 5), (3, 4)))),
    "D6": (6, (((1, 2, 3, 4, 5, 6),), ((2, 6), (3, 5)))),
    "D7": (7, (((1, 2, 3, 4, 5, 6, 7),), ((2, 7), (3, 6), (4, 5)))),
    "D8": (8, (((1, 2, 3, 4, 5, 6, 7, 8),), ((2, 8), (3, 7), (4, 6)))),
    "Z2xZ2xZ2": (6, (((1, 2),), ((3, 4),), ((5, 6),))),
    "Z2xA4": (6, (((1, 2),), ((3, 4, 5),), ((3, 4), (5, 6)))),
    "Z2xD4": (6, (((1, 2),), ((3, 4, 5, 6),), ((3, 5),))),
    "D4xS3": (7, (((1, 2, 3, 4),), ((1, 3),), ((5, 6),), ((5, 6, 7),))),
    "Z2xZ2xS3": (7, (((1, 2),), ((3, 4),), ((5, 6),), ((5, 6, 7),))),
}

# The order-64 group of the census is realized as the automorphism group of
# this 8-point plane family.
_ORDER_64_PLANES = (
    (1, 2, 5), (1, 2, 6), (1, 7, 8), (2, 7, 8),
    (3, 4, 7), (3, 4, 8), (3, 5, 6), (4, 5, 6),
)
_ORDER_64_NAME = "((Z2xZ2xZ2):Z4):Z2"


@functools.lru_cache(maxsize=1)
def named_group_table() -> dict[str, Fingerprint]:
    """Fingerprints of the named groups, generated from explicit generators."""
    table: dict[str, Fingerprint] = {}
    for name, (degree, cycle_gens) in _NAMED_GROUP_GENERATORS.items():
        gens = tuple(_perm_from_cycles(degree, cycles) for cycles in cycle_gens)
        order = len(expand_group(gens, degree))
        table[name] = group_fingerprint(PermGroup(degree, gens, order))
    config = Configuration(2, 8, _ORDER_64_PLANES)
    table[_ORDER_64_NAME] = group_fingerprint(automorphism_group(config))
    if len(set(table.values())) != len(table):
        raise AssertionError("named group fingerprints are not distinct")
    return table


def match_named_group(fingerprint: Fingerprint) -> str | None:
    """Name of the group with this fingerprint, if it is in the built table."""
    for name, fp in named_group_table().items():
        if fp == fingerprint:
            return name
    return None
