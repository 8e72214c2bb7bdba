"""Exact vertex separation (equivalently pathwidth) by DP over vertex subsets.

``cost(S)`` is the best achievable maximum boundary over layouts whose first
``|S|`` vertices are exactly ``S``::

    cost(∅) = 0
    cost(S) = max(boundary(S), min_{v in S} cost(S - v))

where ``boundary(S)`` counts vertices of ``S`` with a neighbour outside ``S``.
The table is filled one popcount layer at a time with numpy, so a 24-vertex
component needs a 16M-entry byte table.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from sweepkit.errors import EmptyGraph, InvalidLayout, TooLarge
from sweepkit.graph import Graph, components, induced_subgraph, size_limit
from sweepkit.pathdecomp import PathDecomposition

DP_CAP = 24


@dataclass(frozen=True)
class Layout:
    order: tuple[int, ...]
    cost: int


def layout_cost(g: Graph, order) -> int:
    """Max over prefixes of the number of prefix vertices with a neighbour outside."""
    _check_permutation(g, order)
    prefix = 0
    worst = 0
    for v in order:
        prefix |= 1 << v
        boundary = sum(1 for u in range(g.n) if prefix >> u & 1 and g.adj[u] & ~prefix)
        worst = max(worst, boundary)
    return worst


def _check_permutation(g: Graph, order) -> None:
    if sorted(order) != list(range(g.n)):
        raise InvalidLayout(f"order is not a permutation of 0..{g.n - 1}")


def _subset_dp(g: Graph) -> tuple[int, list[int]]:
    n = g.n
    full = (1 << n) - 1
    subsets = np.arange(1 << n, dtype=np.int64)
    boundary = np.zeros(1 << n, dtype=np.uint8)
    popcount = np.zeros(1 << n, dtype=np.uint8)
    for u in range(n):
        member = ((subsets >> u) & 1).astype(np.uint8)
        popcount += member
        boundary += member & ((g.adj[u] & ~subsets) != 0)
    cost = np.full(1 << n, 255, dtype=np.uint8)
    cost[0] = 0
    by_layer = np.argsort(popcount, kind="stable")
    starts = np.searchsorted(popcount[by_layer], np.arange(n + 2))
    for p in range(1, n + 1):
        layer = by_layer[starts[p]:starts[p + 1]]
        best = np.full(layer.size, 255, dtype=np.uint8)
        for v in range(n):
            has = (layer >> v) & 1 == 1
            idx = np.nonzero(has)[0]
            best[idx] = np.minimum(best[idx], cost[layer[idx] ^ (1 << v)])
        cost[layer] = np.maximum(boundary[layer], best)

    reversed_order = []
    s = full
    while s:
        members = [v for v in range(n) if s >> v & 1]
        # lowest id among the minimisers
        v = min(members, key=lambda u: (int(cost[s ^ (1 << u)]), u))
        reversed_order.append(v)
        s ^= 1 << v
    return int(cost[full]), reversed_order[::-1]


def vertex_separation_exact(g: Graph) -> tuple[int, Layout]:
    """Minimum vertex separation number with an optimal layout as witness.

    Disconnected graphs are solved per component and the component layouts
    concatenated, so the value is the maximum over components.
    """
    if g.n == 0:
        raise EmptyGraph("vertex separation of the empty graph")
    cap = size_limit(DP_CAP)
    order: list[int] = []
    value = 0
    for comp in components(g):
        if len(comp) > cap:
            raise TooLarge(f"subset DP is capped at {cap} vertices per component, got {len(comp)}")
        sub = induced_subgraph(g, comp)
        c, local = _subset_dp(sub)
        value = max(value, c)
        order += [comp[i] for i in local]
    return value, Layout(tuple(order), value)


def pathwidth_exact(g: Graph) -> int:
    return vertex_separation_exact(g)[0]


def layout_to_decomposition(g: Graph, layout: Layout) -> PathDecomposition:
    """Bag ``i`` = boundary of the first ``i-1`` vertices plus the ``i``-th vertex."""
    _check_permutation(g, layout.order)
    bags = []
    prefix = 0
    for v in layout.order:
        live = [u for u in range(g.n) if prefix >> u & 1 and g.adj[u] & ~prefix]
        bags.append(live + [v])
        prefix |= 1 << v
    return PathDecomposition(bags)
