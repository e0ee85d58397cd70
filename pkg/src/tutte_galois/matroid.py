"""Matroids given by rank oracles.

Ground sets are ``{0, ..., m-1}`` with ``m <= 24``; subsets are passed around
as integer bitmasks.  Every matroid is immutable and exposes ``rank(mask)``
plus a cached ``rank_table`` holding the rank of all ``2**m`` subsets.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels

MAX_GROUND = 24


class MatroidError(ValueError):
    """Invalid matroid data or an argument outside the ground set."""


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def elements_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def fraction_free_rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank of an integer matrix by Bareiss elimination."""
    a = [list(map(int, r)) for r in rows]
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            row = a[r]
            f = row[col]
            for c in range(col + 1, ncols):
                row[c] = (p * row[c] - f * a[rank][c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def _check_size(m: int) -> None:
    if m > MAX_GROUND:
        raise MatroidError(f"ground set of {m} elements exceeds the cap of {MAX_GROUND}")


@dataclass(frozen=True)
class Matroid:
    """Base class; subclasses implement ``_rank`` on in-range masks."""

    @property
    def size(self) -> int:
        raise NotImplementedError

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    @property
    def key(self) -> str:
        """Canonical text descriptor, used in reports and as an RNG key."""
        raise NotImplementedError

    def rank(self, subset: int | Iterable[int]) -> int:
        mask = subset if isinstance(subset, int) else mask_of(subset)
        if mask < 0 or mask >> self.size:
            raise MatroidError(f"subset {mask:#x} is not inside a ground set of size {self.size}")
        return self._rank(mask)

    def _rank(self, mask: int) -> int:
        raise NotImplementedError

    @cached_property
    def rank_table(self) -> np.ndarray:
        """Ranks of all subsets, indexed by bitmask."""
        return np.fromiter((self._rank(a) for a in range(1 << self.size)),
                           dtype=np.uint8, count=1 << self.size)

    @property
    def total_rank(self) -> int:
        return int(self.rank_table[self.full_mask])

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.key}>"


@dataclass(frozen=True, repr=False)
class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph; self-loop edges ``(u, u)`` are loops."""

    vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        _check_size(len(edges))
        if self.vertices < 0:
            raise MatroidError("negative vertex count")
        for u, v in edges:
            if not (0 <= u < self.vertices and 0 <= v < self.vertices):
                raise MatroidError(f"edge ({u}, {v}) references a missing vertex")

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def key(self) -> str:
        body = ",".join(f"{u}-{v}" for u, v in self.edges)
        return f"graphic({self.vertices};{body})"

    @cached_property
    def rank_table(self) -> np.ndarray:
        return kernels.graphic_rank_table(self.vertices, self.edges)

    def _rank(self, mask: int) -> int:
        parent = list(range(self.vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        r = 0
        for e in elements_of(mask):
            u, v = self.edges[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                r += 1
        return r


@dataclass(frozen=True, repr=False)
class UniformMatroid(Matroid):
    r: int
    m: int

    def __post_init__(self):
        _check_size(self.m)
        if not 0 <= self.r <= self.m:
            raise MatroidError(f"uniform matroid needs 0 <= r <= m, got U({self.r},{self.m})")

    @property
    def size(self) -> int:
        return self.m

    @property
    def key(self) -> str:
        return f"uniform({self.r},{self.m})"

    def _rank(self, mask: int) -> int:
        return min(popcount(mask), self.r)


@dataclass(frozen=True, repr=False)
class LinearMatroid(Matroid):
    """Column matroid of an integer matrix over the rationals."""

    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise MatroidError("matrix rows have different lengths")
        _check_size(self.size)

    @property
    def size(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    @property
    def key(self) -> str:
        return "linear(" + ";".join(",".join(map(str, r)) for r in self.matrix) + ")"

    def _rank(self, mask: int) -> int:
        cols = elements_of(mask)
        if not cols:
            return 0
        return fraction_free_rank([[row[c] for c in cols] for row in self.matrix])


@dataclass(frozen=True, repr=False)
class BasesMatroid(Matroid):
    """Matroid given by the explicit list of its bases."""

    m: int
    bases: tuple[int, ...]  # bitmasks

    def __post_init__(self):
        _check_size(self.m)
        bases = tuple(sorted(set(int(b) for b in self.bases)))
        object.__setattr__(self, "bases", bases)
        if not bases:
            raise MatroidError("a matroid needs at least one basis")
        if len({popcount(b) for b in bases}) != 1:
            raise MatroidError("bases have different cardinalities")
        for b in bases:
            if b >> self.m:
                raise MatroidError("basis element outside the ground set")

    @classmethod
    def from_lists(cls, m: int, bases: Iterable[Iterable[int]]) -> "BasesMatroid":
        return cls(m, tuple(mask_of(b) for b in bases))

    @property
    def size(self) -> int:
        return self.m

    @property
    def key(self) -> str:
        return f"bases({self.m};" + ",".join(f"{b:x}" for b in self.bases) + ")"

    def _rank(self, mask: int) -> int:
        return max(popcount(mask & b) for b in self.bases)


@dataclass(frozen=True, repr=False)
class MinorMatroid(Matroid):
    """``base / contracted \\ deleted`` with the survivors relabelled densely.

    ``labels[i]`` is the base element that plays the role of element ``i``.
    """

    base: Matroid
    deleted: int
    contracted: int
    labels: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if self.deleted & self.contracted:
            raise MatroidError("deleted and contracted sets overlap")
        if (self.deleted | self.contracted) >> self.base.size:
            raise MatroidError("minor sets reach outside the ground set")
        live = self.base.full_mask & ~(self.deleted | self.contracted)
        object.__setattr__(self, "labels", tuple(elements_of(live)))

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def key(self) -> str:
        return f"minor({self.base.key};del={self.deleted:x};con={self.contracted:x})"

    def lift(self, mask: int) -> int:
        """Translate a subset of the minor into base-element indices."""
        out = 0
        for i in elements_of(mask):
            out |= 1 << self.labels[i]
        return out

    @cached_property
    def _lift_table(self) -> np.ndarray:
        k = self.size
        table = np.zeros(1 << k, dtype=np.int64)
        for i, label in enumerate(self.labels):
            table[1 << i:1 << (i + 1)] = table[:1 << i] | (1 << label)
        return table

    @cached_property
    def rank_table(self) -> np.ndarray:
        base = self.base.rank_table
        lifted = self._lift_table | self.contracted
        return (base[lifted] - base[self.contracted]).astype(np.uint8)

    def _rank(self, mask: int) -> int:
        return self.base.rank(self.lift(mask) | self.contracted) - self.base.rank(self.contracted)


@dataclass(frozen=True, repr=False)
class DirectSumMatroid(Matroid):
    """``first ⊕ second``; the second summand's elements are shifted up."""

    first: Matroid
    second: Matroid

    def __post_init__(self):
        _check_size(self.first.size + self.second.size)

    @property
    def size(self) -> int:
        return self.first.size + self.second.size

    @property
    def key(self) -> str:
        return f"sum({self.first.key},{self.second.key})"

    @property
    def first_mask(self) -> int:
        return self.first.full_mask

    @cached_property
    def rank_table(self) -> np.ndarray:
        a = self.first.rank_table.astype(np.uint8)
        b = self.second.rank_table.astype(np.uint8)
        return (b[:, None] + a[None, :]).reshape(-1)

    def _rank(self, mask: int) -> int:
        k = self.first.size
        return self.first.rank(mask & self.first.full_mask) + self.second.rank(mask >> k)


class ElementStatus(enum.Enum):
    LOOP = "loop"
    COLOOP = "coloop"
    REGULAR = "regular"


def minor(m: Matroid, delete: int | Iterable[int] = 0, contract: int | Iterable[int] = 0) -> MinorMatroid:
    """Delete and contract element sets; nested minors flatten onto one base."""
    d = delete if isinstance(delete, int) else mask_of(delete)
    c = contract if isinstance(contract, int) else mask_of(contract)
    if d & c:
        raise MatroidError("deleted and contracted sets overlap")
    if (d | c) >> m.size or d < 0 or c < 0:
        raise MatroidError("minor sets reach outside the ground set")
    if isinstance(m, MinorMatroid):
        return MinorMatroid(m.base, m.deleted | m.lift(d), m.contracted | m.lift(c))
    return MinorMatroid(m, d, c)


def delete(m: Matroid, e: int) -> MinorMatroid:
    return minor(m, delete=1 << e)


def contract(m: Matroid, e: int) -> MinorMatroid:
    return minor(m, contract=1 << e)


def restrict(m: Matroid, subset: int | Iterable[int]) -> MinorMatroid:
    keep = subset if isinstance(subset, int) else mask_of(subset)
    return minor(m, delete=m.full_mask & ~keep)


def element_status(m: Matroid, e: int) -> ElementStatus:
    if not 0 <= e < m.size:
        raise MatroidError(f"element {e} outside ground set of size {m.size}")
    ranks = m.rank_table
    if ranks[1 << e] == 0:
        return ElementStatus.LOOP
    full = m.full_mask
    if int(ranks[full & ~(1 << e)]) == int(ranks[full]) - 1:
        return ElementStatus.COLOOP
    return ElementStatus.REGULAR


def find_separator(m: Matroid) -> int | None:
    """A proper nonempty ``A`` with ``r(A) + r(E-A) = r(E)``, or None.

    Only subsets containing element 0 are scanned since separators come in
    complementary pairs.
    """
    ranks = m.rank_table
    full = m.full_mask
    total = int(ranks[full])
    for a in range(1, full, 2):
        if int(ranks[a]) + int(ranks[full ^ a]) == total:
            return a
    return None


def is_connected(m: Matroid) -> bool:
    """Connectivity by exhaustive separator scan.

    Matroids of rank zero, the empty one included, are never connected; a
    one-element matroid is connected iff its element is not a loop.
    """
    if m.total_rank == 0:
        return False
    return find_separator(m) is None


def circuits(m: Matroid) -> list[int]:
    """All circuits as bitmasks, sorted by (size, mask)."""
    ranks = m.rank_table
    out = []
    for a in range(1, 1 << m.size):
        k = popcount(a)
        if int(ranks[a]) != k - 1:
            continue
        rest = a
        while rest:
            low = rest & -rest
            rest ^= low
            if int(ranks[a ^ low]) != k - 1:
                break
        else:
            out.append(a)
    out.sort(key=lambda c: (popcount(c), c))
    return out


def direct_sum(first: Matroid, second: Matroid) -> DirectSumMatroid:
    return DirectSumMatroid(first, second)


def from_json(data: dict | str) -> Matroid:
    """Build a matroid from the CLI's JSON schema."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "type" not in data:
        raise MatroidError("matroid JSON must be an object with a 'type' field")
    kind = data["type"]
    try:
        if kind == "graphic":
            return GraphicMatroid(int(data["vertices"]), tuple(tuple(e) for e in data["edges"]))
        if kind == "uniform":
            return UniformMatroid(int(data["rank"]), int(data["size"]))
        if kind == "linear":
            return LinearMatroid(tuple(tuple(r) for r in data["matrix"]))
        if kind == "bases":
            return BasesMatroid.from_lists(int(data["size"]), data["bases"])
    except (KeyError, TypeError) as exc:
        raise MatroidError(f"malformed {kind!r} matroid: {exc}") from exc
    raise MatroidError(f"unknown matroid type {kind!r}")
