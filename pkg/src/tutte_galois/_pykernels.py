"""Pure-Python (numpy-assisted) versions of the hot kernels.

Semantics are identical to the compiled ``_ckernels`` module; this file is
what runs when the extension was not built.  Edge masks for small simple
graphs use graph6 column order: edge ``(i, j)`` with ``i < j`` sits at bit
``j*(j-1)//2 + i``.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

MAX_EDGES = 24
MAX_ORDER = 8


def edge_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def edge_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def graphic_rank_table(n_vertices: int, edges) -> np.ndarray:
    """Rank of every edge subset of a (multi)graph, indexed by bitmask.

    Built incrementally: adding edge ``i`` to a subset of the first ``i``
    edges raises the rank iff its endpoints lie in different components.
    Component labels for all masks are carried as one ``(2**m, V)`` array.
    """
    edges = [(int(u), int(v)) for u, v in edges]
    m = len(edges)
    if m > MAX_EDGES:
        raise ValueError(f"at most {MAX_EDGES} edges supported, got {m}")
    for u, v in edges:
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise ValueError(f"edge ({u}, {v}) outside vertex range")
    nv = max(n_vertices, 1)
    dtype = np.uint8 if nv < 256 else np.uint16
    labels = np.arange(nv, dtype=dtype).reshape(1, nv)
    ranks = np.zeros(1, dtype=np.uint8)
    for u, v in edges:
        lu = labels[:, u]
        lv = labels[:, v]
        lo = np.minimum(lu, lv)
        hi = np.maximum(lu, lv)
        joined = lo != hi
        merged = np.where(labels == hi[:, None], lo[:, None], labels)
        labels = np.concatenate([labels, merged])
        ranks = np.concatenate([ranks, ranks + joined.astype(np.uint8)])
    return ranks


def _degree_arrays(n: int, masks: np.ndarray) -> np.ndarray:
    deg = np.zeros((n, masks.shape[0]), dtype=np.int8)
    for i, j in edge_pairs(n):
        bit = ((masks >> edge_index(i, j)) & 1).astype(np.int8)
        deg[i] += bit
        deg[j] += bit
    return deg


def _permuted(mask: int, perm, pairs) -> int:
    out = 0
    for e, (i, j) in enumerate(pairs):
        if mask >> e & 1:
            out |= 1 << edge_index(perm[i], perm[j])
    return out


def _block_permutations(blocks: list[list[int]]):
    """Yield vertex maps that permute vertices only inside each block."""
    def rec(b: int, perm: dict):
        if b == len(blocks):
            yield perm
            return
        block = blocks[b]
        for image in permutations(block):
            for v, w in zip(block, image):
                perm[v] = w
            yield from rec(b + 1, perm)

    yield from rec(0, {})


def _blocks(order, key) -> list[list[int]]:
    blocks: list[list[int]] = []
    last = None
    for v in order:
        if blocks and key[v] == last:
            blocks[-1].append(v)
        else:
            blocks.append([v])
            last = key[v]
    return blocks


def canonical_reps(n: int, min_degree: int = 0) -> list[int]:
    """Masks that are the canonical representative of their isomorphism class.

    The canonical labelling of a graph is the minimum mask among all its
    labellings with non-decreasing degree sequence.  Only classes whose
    minimum degree is at least ``min_degree`` are reported, ascending.
    """
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must lie in [1, {MAX_ORDER}]")
    pairs = edge_pairs(n)
    total = 1 << len(pairs)
    masks = np.arange(total, dtype=np.int64)
    deg = _degree_arrays(n, masks)
    keep = np.ones(total, dtype=bool)
    for v in range(n):
        keep &= deg[v] >= min_degree
    for v in range(n - 1):
        keep &= deg[v] <= deg[v + 1]
    out = []
    for mask in masks[keep].tolist():
        degrees = [0] * n
        for e, (i, j) in enumerate(pairs):
            if mask >> e & 1:
                degrees[i] += 1
                degrees[j] += 1
        blocks = _blocks(range(n), degrees)
        if all(len(b) == 1 for b in blocks):
            out.append(mask)
            continue
        for perm in _block_permutations(blocks):
            if _permuted(mask, perm, pairs) < mask:
                break
        else:
            out.append(mask)
    return out


def _adjacency(n: int, mask: int, pairs) -> list[int]:
    adj = [0] * n
    for e, (i, j) in enumerate(pairs):
        if mask >> e & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return adj


def _spans(adj: list[int], alive: int) -> bool:
    """True iff the vertex set ``alive`` induces a connected subgraph."""
    if alive == 0:
        return True
    start = alive & -alive
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & alive & ~seen
        seen |= new
        frontier |= new
    return seen == alive


def graph_predicate(n: int, mask: int, kind: str) -> bool:
    pairs = edge_pairs(n)
    adj = _adjacency(n, mask, pairs)
    full = (1 << n) - 1
    if kind == "connected":
        return _spans(adj, full)
    if kind == "biconnected":
        if n < 3 or not _spans(adj, full):
            return False
        return all(_spans(adj, full & ~(1 << v)) for v in range(n))
    raise ValueError(f"unknown predicate {kind!r}")


def canonical_form_max(n: int, mask: int) -> int:
    """Maximum mask over all labellings with non-increasing degrees."""
    pairs = edge_pairs(n)
    degrees = [0] * n
    for e, (i, j) in enumerate(pairs):
        if mask >> e & 1:
            degrees[i] += 1
            degrees[j] += 1
    order = sorted(range(n), key=lambda v: -degrees[v])
    blocks = _blocks(order, degrees)
    slots = []
    pos = 0
    for b in blocks:
        slots.append(list(range(pos, pos + len(b))))
        pos += len(b)
    best = -1
    def rec(b: int, perm: dict):
        nonlocal best
        if b == len(blocks):
            best = max(best, _permuted(mask, perm, pairs))
            return
        for image in permutations(slots[b]):
            for v, w in zip(blocks[b], image):
                perm[v] = w
            rec(b + 1, perm)

    rec(0, {})
    return best


def oracle_forms(n: int, kind: str) -> list[int]:
    """Filter-then-dedupe: canonical max-forms of every labelled graph on ``n``
    vertices satisfying ``kind``, each class once, ascending."""
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must lie in [1, {MAX_ORDER}]")
    total = 1 << (n * (n - 1) // 2)
    forms = set()
    for mask in range(total):
        if graph_predicate(n, mask, kind):
            forms.add(canonical_form_max(n, mask))
    return sorted(forms)
