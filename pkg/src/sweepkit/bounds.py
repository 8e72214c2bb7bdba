"""Certified intervals for search numbers, composed from individual inequalities.

Each contributing inequality becomes a :class:`BoundEntry`; a report's lower
end is the largest lower entry and its upper end the smallest upper entry.
A rule whose hypotheses do not hold for the input contributes nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from sweepkit.errors import DomainError, InconsistentBounds, TooLarge
from sweepkit.graph import (Graph, cartesian_product, clique_number, clique_product,
                            complete_graph, factor_graphs, is_complete, is_connected,
                            is_path)
from sweepkit.pathdecomp import pw_clique_product_formula
from sweepkit.searchgame import exact_search_number
from sweepkit.vsep import pathwidth_exact

# Largest clique product whose search number is solved outright for the
# clique-minor bound; K_3 □ K_3 has 18 edges.
SOLVE_EDGE_CAP = 18
PRODUCT_DP_CAP = 16


@dataclass(frozen=True)
class BoundEntry:
    value: int
    side: str  # "lower" | "upper"
    rule: str
    statement: str

    def as_dict(self) -> dict:
        return {"value": self.value, "side": self.side, "rule": self.rule,
                "statement": self.statement}


@dataclass(frozen=True)
class BoundsReport:
    quantity: str
    lower: int
    upper: int
    provenance: tuple[BoundEntry, ...] = field(default=())

    def as_dict(self) -> dict:
        return {"quantity": self.quantity, "lower": self.lower, "upper": self.upper,
                "provenance": [e.as_dict() for e in self.provenance]}


def compose(quantity: str, entries: list[BoundEntry]) -> BoundsReport:
    lowers = [e.value for e in entries if e.side == "lower"]
    uppers = [e.value for e in entries if e.side == "upper"]
    if not lowers or not uppers:
        raise InconsistentBounds("a report needs at least one lower and one upper entry")
    lo, hi = max(lowers), min(uppers)
    if lo > hi:
        raise InconsistentBounds(f"lower bound {lo} exceeds upper bound {hi}")
    return BoundsReport(quantity, lo, hi, tuple(entries))


def _clique_product_entries(m: int, n: int) -> list[BoundEntry]:
    pw = pw_clique_product_formula(m, n)
    entries = [
        BoundEntry(pw, "lower", "clique-product-pathwidth",
                   "s(K_m□K_n) >= pw(K_m□K_n) = closed form"),
        BoundEntry(pw + 2, "upper", "clique-product-pathwidth-plus-two",
                   "s(K_m□K_n) <= pw(K_m□K_n) + 2"),
        BoundEntry(n * (m - 1) + 1, "upper", "clique-product-row-sweep",
                   "s(K_m□K_n) <= n(m-1) + 1"),
    ]
    if m == 2 and n >= 3:
        for side in ("lower", "upper"):
            entries.append(BoundEntry(n + 1, side, "clique-prism-exact",
                                      "s(K_n□K_2) = n + 1 for n >= 3"))
    return entries


def clique_product_search_bounds(m: int, n: int) -> BoundsReport:
    if m < 2 or n < m:
        raise DomainError(f"clique product bounds need 2 <= m <= n, got m={m}, n={n}")
    return compose("search_number", _clique_product_entries(m, n))


def product_search_lower_bound(g: Graph, h: Graph) -> tuple[int, list[BoundEntry]]:
    """Lower bound on ``s(g □ h)`` driven by the clique numbers of the factors.

    The closed form applies when both factors have at least four vertices.
    Independently, ``K_a □ K_b`` (``a``, ``b`` the clique numbers) is a minor
    of ``g □ h``; its search number is solved exactly when small and
    otherwise replaced by its own best lower bound.
    """
    a, b = sorted((clique_number(g), clique_number(h)))
    entries = []
    if min(g.n, h.n) >= 4 and a >= 2:
        entries.append(BoundEntry(pw_clique_product_formula(a, b), "lower",
                                  "clique-number-closed-form",
                                  "s(G□H) >= pw(K_w(G)□K_w(H)) for |V(H)| >= |V(G)| >= 4"))
    minor = clique_product(a, b)
    if minor.m <= SOLVE_EDGE_CAP:
        s, _ = exact_search_number(minor)
        entries.append(BoundEntry(s, "lower", "clique-minor-exact",
                                  f"s(G□H) >= s(K_{a}□K_{b}) = {s} (solved)"))
    else:
        floor = pw_clique_product_formula(a, b) if a >= 2 else b - 1
        entries.append(BoundEntry(floor, "lower", "clique-minor-bounded",
                                  f"s(G□H) >= s(K_{a}□K_{b}) >= {floor} (lower bound only)"))
    for left, right, label in ((g, h, "G□K_w(H)"), (h, g, "H□K_w(G)")):
        w = clique_number(right)
        if left.n * w <= PRODUCT_DP_CAP:
            pw = pathwidth_exact(cartesian_product(left, complete_graph(w)))
            entries.append(BoundEntry(pw, "lower", "one-side-clique-minor",
                                      f"s(G□H) >= s({label}) >= pw({label}) = {pw}"))
    return max(e.value for e in entries), entries


def sandwich_bounds(g: Graph) -> BoundsReport:
    """``[pw(g), pw(g) + 2]`` with the pathwidth computed exactly."""
    pw = pathwidth_exact(g)
    return compose("search_number", [
        BoundEntry(pw, "lower", "pathwidth-lower", "pw(G) <= s(G)"),
        BoundEntry(pw + 2, "upper", "pathwidth-plus-two", "s(G) <= pw(G) + 2"),
    ])


def graph_bounds(g: Graph) -> BoundsReport:
    """Every applicable rule for ``s(g)``, using product coordinates when present."""
    entries = [BoundEntry(g.n + 1, "upper", "guard-every-vertex",
                          "guards on all vertices plus one walker clear any graph")]
    entries.append(BoundEntry(1 if g.m else 0, "lower", "has-edges",
                              "any edge needs a searcher"))
    try:
        entries += sandwich_bounds(g).provenance
    except TooLarge:
        pass
    factors = factor_graphs(g)
    if factors is not None and min(f.n for f in factors) >= 2:
        g1, g2 = factors
        if is_complete(g1) and is_complete(g2):
            m, n = sorted((g1.n, g2.n))
            entries += _clique_product_entries(m, n)
        _, lows = product_search_lower_bound(g1, g2)
        entries += lows
        entries += _path_factor_entries(g1, g2)
    return compose("search_number", entries)


def _path_factor_entries(g1: Graph, g2: Graph) -> list[BoundEntry]:
    out = []
    for other, path in ((g1, g2), (g2, g1)):
        if is_path(path) and path.n >= 3 and is_connected(other):
            out.append(BoundEntry(other.n + 1, "upper", "sweep-along-path",
                                  "s(G□P_n) <= |V(G)| + 1 for connected G, n >= 3"))
    if is_path(g1) and is_path(g2) and min(g1.n, g2.n) >= 3:
        v = min(g1.n, g2.n) + 1
        out += [BoundEntry(v, side, "grid-exact", "s(P_m□P_n) = min(m, n) + 1")
                for side in ("lower", "upper")]
    for clique, path in ((g1, g2), (g2, g1)):
        if is_complete(clique) and clique.n >= 3 and is_path(path) and path.n >= 3:
            out += [BoundEntry(clique.n + 1, side, "clique-path-exact",
                               "s(K_m□P_n) = m + 1") for side in ("lower", "upper")]
    return out
