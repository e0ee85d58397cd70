"""The built-in matroid corpus used by the identity suite and experiments."""

from __future__ import annotations

from functools import lru_cache

from .graphs import complete, cycle, cycle_matroid, enumerate_connected
from .matroid import GraphicMatroid, Matroid, UniformMatroid, direct_sum


@lru_cache(maxsize=1)
def builtin_corpus() -> tuple[tuple[str, Matroid], ...]:
    """Named matroids: every U(r, m) with 1 <= r < m <= 6, the cycle matroid of
    every connected simple graph on 2..5 vertices (keyed by graph6), K4,
    C3 + C3, a single loop and a single coloop."""
    out: list[tuple[str, Matroid]] = []
    for m in range(2, 7):
        for r in range(1, m):
            out.append((f"U({r},{m})", UniformMatroid(r, m)))
    for n in range(2, 6):
        for g in enumerate_connected(n):
            out.append((f"graph:{g.to_graph6()}", cycle_matroid(g)))
    out.append(("K4", cycle_matroid(complete(4))))
    c3 = cycle_matroid(cycle(3))
    out.append(("C3+C3", direct_sum(c3, c3)))
    out.append(("loop", GraphicMatroid(1, ((0, 0),))))
    out.append(("coloop", GraphicMatroid(2, ((0, 1),))))
    return tuple(out)
