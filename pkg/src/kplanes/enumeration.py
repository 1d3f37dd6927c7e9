"""Isomorph-free exhaustive generation of small configurations.

The generator is an orderly algorithm: plane lists grow in strictly
increasing lexicographic order and a partial list survives only if it is
the canonical (lexicographically least) representative of its relabeling
class.  Removing the last plane of a canonical list leaves a canonical
list, so the search tree contains every class exactly once and no
explicit isomorph rejection between branches is needed.

Two strong prunes keep the tree small: a new plane must start at the
lowest point that still misses planes, and no point may exceed its target
degree.  A brute-force enumerator over all plane subsets provides an
independent oracle for small n, and catalogs round-trip through a JSON
lines file format.
"""

from __future__ import annotations

import itertools
import json
import math
import time
from dataclasses import dataclass
from pathlib import Path
from typing import IO

import numpy as np

from .core import Configuration
from .isomorphism import (
    SearchBudgetError,
    _canonical_bnb,
    _orbit_tables,
    _TABLE_MAX_POINTS,
    automorphism_group,
    canonical_form_reference,
    compose,
    group_fingerprint,
    match_named_group,
)


class EnumerationBudgetError(RuntimeError):
    """Search budget exhausted; carries the records found so far."""

    def __init__(self, message: str, partial: list["CatalogRecord"]):
        super().__init__(message)
        self.partial = partial


class CatalogFormatError(ValueError):
    """A catalog file failed to parse; the message names the record."""


@dataclass(frozen=True)
class EnumerationSpec:
    """Search parameters: every point on s planes of t points each, order k."""

    n: int
    s: int = 3
    t: int = 3
    k: int = 2
    connected: bool = True
    order_exact: bool = True
    allow_without_dual: bool = False
    max_nodes: int = 2_000_000
    max_seconds: float | None = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"order must be >= 1, got {self.k}")
        if self.t < self.k + 1:
            raise ValueError(f"planes of {self.t} points cannot support order {self.k}")
        if self.s < self.k + 1 and not self.allow_without_dual:
            raise ValueError(
                f"s={self.s} <= k={self.k} needs allow_without_dual"
            )
        if self.s < 1:
            raise ValueError(f"point degree must be >= 1, got {self.s}")
        if self.k >= self.n - 1:
            raise ValueError(f"order {self.k} needs more than {self.k + 1} points")
        if (self.n * self.s) % self.t != 0:
            raise ValueError(
                f"n*s = {self.n * self.s} is not divisible by t = {self.t}"
            )

    @property
    def plane_count(self) -> int:
        return self.n * self.s // self.t


@dataclass(frozen=True)
class CatalogRecord:
    """One isomorphism class: canonical planes plus derived invariants."""

    n: int
    k: int
    s: int
    t: int
    planes: tuple[tuple[int, ...], ...]
    aut_order: int
    aut_abelian: bool
    aut_name: str | None
    connected: bool


def _pairwise_order_exact(planes: tuple[tuple[int, ...], ...], k: int) -> bool:
    sets = [set(p) for p in planes]
    return any(
        len(a & b) >= k for a, b in itertools.combinations(sets, 2)
    )


def _planes_connected(planes: tuple[tuple[int, ...], ...], n: int) -> bool:
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for plane in planes:
        root = find(plane[0])
        for p in plane[1:]:
            parent[find(p)] = root
    return len({find(p) for p in range(1, n + 1)}) == 1


def _build_record(spec: EnumerationSpec, planes: tuple[tuple[int, ...], ...]) -> CatalogRecord:
    config = Configuration(spec.k, spec.n, planes)
    group = automorphism_group(config)
    abelian = all(
        compose(g, h) == compose(h, g)
        for g, h in itertools.combinations(group.generators, 2)
    )
    try:
        fingerprint = group_fingerprint(group)
        name = match_named_group(fingerprint)
        abelian = fingerprint.abelian
    except SearchBudgetError:
        name = None
    return CatalogRecord(
        n=spec.n,
        k=spec.k,
        s=spec.s,
        t=spec.t,
        planes=planes,
        aut_order=group.order,
        aut_abelian=abelian,
        aut_name=name,
        connected=_planes_connected(planes, spec.n),
    )


class _Canonicity:
    """Is a sorted plane list the least representative of its class?"""

    def __init__(self, n: int, t: int):
        self.n = n
        self.t = t
        self.tables = _orbit_tables(n, t) if n <= _TABLE_MAX_POINTS else None
        if self.tables is not None:
            self.vec = np.zeros(len(self.tables.universe), dtype=np.uint8)

    def push(self, index: int):
        if self.tables is not None:
            self.vec[index] = 1

    def pop(self, index: int):
        if self.tables is not None:
            self.vec[index] = 0

    def check(self, planes: tuple[tuple[int, ...], ...]) -> bool:
        if self.tables is not None:
            return self.tables.is_canonical(self.vec)
        canon, _ = _canonical_bnb(planes, self.n, node_budget=2_000_000)
        return canon == planes


def enumerate_symmetric(spec: EnumerationSpec) -> list[CatalogRecord]:
    """One record per isomorphism class matching the spec, orderly-generated.

    Output is sorted by canonical plane list and is deterministic.  Raises
    EnumerationBudgetError (carrying partial results) when the node or time
    budget runs out.
    """
    n, s, t, k = spec.n, spec.s, spec.t, spec.k
    universe = tuple(itertools.combinations(range(1, n + 1), t))
    m_target = spec.plane_count
    first_index = {}
    end_index = {}
    for i, subset in enumerate(universe):
        first_index.setdefault(subset[0], i)
        end_index[subset[0]] = i + 1
    oracle = _Canonicity(n, t)
    track_subsets = t > k + 1
    used_subsets: set[tuple[int, ...]] = set()
    degrees = [0] * (n + 1)
    chosen: list[int] = []
    results: list[CatalogRecord] = []
    nodes = 0
    started = time.monotonic()

    def charge_node():
        nonlocal nodes
        nodes += 1
        if nodes > spec.max_nodes:
            raise EnumerationBudgetError(
                f"node budget {spec.max_nodes} exhausted (partial results attached)",
                sorted(results, key=lambda r: r.planes),
            )
        if spec.max_seconds is not None and time.monotonic() - started > spec.max_seconds:
            raise EnumerationBudgetError(
                f"time budget {spec.max_seconds}s exhausted (partial results attached)",
                sorted(results, key=lambda r: r.planes),
            )

    def complete():
        planes = tuple(universe[i] for i in chosen)
        if spec.order_exact and not _pairwise_order_exact(planes, k):
            return
        if spec.connected and not _planes_connected(planes, n):
            return
        results.append(_build_record(spec, planes))

    def extend(last_index: int):
        if len(chosen) == m_target:
            complete()
            return
        lowest = next((p for p in range(1, n + 1) if degrees[p] < s), None)
        if lowest is None or lowest not in first_index:
            return
        lo = max(first_index[lowest], last_index + 1)
        for index in range(lo, end_index[lowest]):
            plane = universe[index]
            if any(degrees[p] >= s for p in plane):
                continue
            if track_subsets:
                subs = list(itertools.combinations(plane, k + 1))
                if any(sub in used_subsets for sub in subs):
                    continue
            else:
                subs = []
            charge_node()
            chosen.append(index)
            for p in plane:
                degrees[p] += 1
            used_subsets.update(subs)
            oracle.push(index)
            if oracle.check(tuple(universe[i] for i in chosen)):
                extend(index)
            oracle.pop(index)
            used_subsets.difference_update(subs)
            for p in plane:
                degrees[p] -= 1
            chosen.pop()

    extend(-1)
    results.sort(key=lambda r: r.planes)
    forms = [r.planes for r in results]
    assert len(set(forms)) == len(forms), "orderly generation produced a duplicate"
    return results


def brute_force_enumerate(spec: EnumerationSpec) -> list[CatalogRecord]:
    """Independent oracle: scan all plane subsets, filter, deduplicate.

    Deduplication uses the pure-Python reference canonical form, so this
    shares nothing with the orderly generator beyond the record builder.
    Only feasible for small n (the subset count is checked first).
    """
    n, s, t, k = spec.n, spec.s, spec.t, spec.k
    universe = tuple(itertools.combinations(range(1, n + 1), t))
    m_target = spec.plane_count
    total = math.comb(len(universe), m_target)
    if total > 20_000_000:
        raise ValueError(
            f"brute force would scan {total} subsets; n={n} is too large"
        )
    seen: set[tuple[tuple[int, ...], ...]] = set()
    records: list[CatalogRecord] = []
    for combo in itertools.combinations(universe, m_target):
        degrees = [0] * (n + 1)
        for plane in combo:
            for p in plane:
                degrees[p] += 1
        if any(degrees[p] != s for p in range(1, n + 1)):
            continue
        sets = [set(p) for p in combo]
        if any(
            len(a & b) >= k + 1 for a, b in itertools.combinations(sets, 2)
        ):
            continue
        if spec.order_exact and not _pairwise_order_exact(combo, k):
            continue
        if spec.connected and not _planes_connected(combo, n):
            continue
        config = Configuration(k, n, combo)
        canon = canonical_form_reference(config)
        if canon in seen:
            continue
        seen.add(canon)
        records.append(_build_record(spec, canon))
    records.sort(key=lambda r: r.planes)
    return records


# ---------------------------------------------------------------------------
# catalog persistence (JSON lines)

_CATALOG_FIELDS = (
    "n", "k", "s", "t", "planes", "aut_order", "aut_abelian", "aut_name", "connected",
)


def record_to_line(record: CatalogRecord) -> str:
    payload = {
        "n": record.n,
        "k": record.k,
        "s": record.s,
        "t": record.t,
        "planes": [list(plane) for plane in record.planes],
        "aut_order": record.aut_order,
        "aut_abelian": record.aut_abelian,
        "aut_name": record.aut_name,
        "connected": record.connected,
    }
    return json.dumps(payload, separators=(",", ":"))


def record_from_line(line: str, index: int) -> CatalogRecord:
    try:
        payload = json.loads(line)
    except json.JSONDecodeError as exc:
        raise CatalogFormatError(f"record {index}: invalid JSON ({exc})") from exc
    if not isinstance(payload, dict) or set(payload) != set(_CATALOG_FIELDS):
        raise CatalogFormatError(
            f"record {index}: expected fields {sorted(_CATALOG_FIELDS)}"
        )
    try:
        planes = tuple(tuple(int(p) for p in plane) for plane in payload["planes"])
        return CatalogRecord(
            n=int(payload["n"]),
            k=int(payload["k"]),
            s=int(payload["s"]),
            t=int(payload["t"]),
            planes=planes,
            aut_order=int(payload["aut_order"]),
            aut_abelian=bool(payload["aut_abelian"]),
            aut_name=payload["aut_name"],
            connected=bool(payload["connected"]),
        )
    except (TypeError, ValueError, KeyError) as exc:
        raise CatalogFormatError(f"record {index}: {exc}") from exc


def write_catalog(records: list[CatalogRecord], target: str | Path | IO[str]) -> None:
    """Write records as JSON lines; identical inputs give identical bytes."""
    text = "".join(record_to_line(r) + "\n" for r in records)
    if hasattr(target, "write"):
        target.write(text)
    else:
        Path(target).write_text(text, encoding="utf-8")


def read_catalog(source: str | Path | IO[str]) -> list[CatalogRecord]:
    """Read a JSON lines catalog back into records."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text(encoding="utf-8")
    records = []
    for index, line in enumerate(text.splitlines()):
        if not line.strip():
            continue
        records.append(record_from_line(line, index))
    return records
