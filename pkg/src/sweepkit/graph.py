"""Immutable simple graphs, path/clique generators and Cartesian products.

Vertices are dense integers ``0..n-1``.  Product graphs additionally carry
1-based ``(row, column)`` coordinates, with vertex ``(i, j)`` stored at id
``(i - 1) * |V(h)| + (j - 1)`` so that bag formulas written in coordinates
translate directly into vertex ids.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass, field
from typing import Iterable

from sweepkit.errors import EmptyGraph, GraphFormatError, InvalidEdge, TooLarge

CLIQUE_CAP = 64


def size_limit(default: int) -> int:
    """Return a size guard, honouring the ``SWEEPKIT_MAX_VERTICES`` override."""
    raw = os.environ.get("SWEEPKIT_MAX_VERTICES")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return default


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    coords: tuple[tuple[int, int], ...] | None = None
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(masks))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[int]:
        mask = self.adj[v]
        return [u for u in range(self.n) if mask >> u & 1]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def vertex(self, i: int, j: int) -> int:
        """Vertex id of 1-based product coordinate ``(i, j)``."""
        if self.coords is None:
            raise ValueError("graph has no product coordinates")
        rows, cols = self.shape
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise IndexError(f"coordinate ({i}, {j}) outside {rows}x{cols}")
        return (i - 1) * cols + (j - 1)

    @property
    def shape(self) -> tuple[int, int]:
        if self.coords is None:
            raise ValueError("graph has no product coordinates")
        return max(c[0] for c in self.coords), max(c[1] for c in self.coords)

    def canonical_text(self, with_coords: bool = True) -> str:
        lines = [f"p {self.n} {self.m}"]
        lines += [f"e {u + 1} {v + 1}" for u, v in self.edges]
        if with_coords and self.coords is not None:
            lines += [f"x {v + 1} {i} {j}" for v, (i, j) in enumerate(self.coords)]
        return "\n".join(lines) + "\n"

    def content_hash(self) -> str:
        """SHA-256 over the sorted edge list; coordinates do not participate."""
        return hashlib.sha256(self.canonical_text(with_coords=False).encode()).hexdigest()


def new_graph(n: int, edge_list: Iterable[tuple[int, int]],
              coords: Iterable[tuple[int, int]] | None = None) -> Graph:
    """Build a normalized graph: deduplicated edges, each as ``(min, max)``, sorted."""
    if n < 0:
        raise InvalidEdge(f"negative vertex count {n}")
    seen = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise InvalidEdge(f"self-loop at vertex {u}")
        seen.add((min(u, v), max(u, v)))
    if coords is not None:
        coords = tuple((int(i), int(j)) for i, j in coords)
        if len(coords) != n:
            raise InvalidEdge("coordinate table does not cover every vertex")
    return Graph(n, tuple(sorted(seen)), coords)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise EmptyGraph("path needs at least one vertex")
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise EmptyGraph("clique needs at least one vertex")
    return new_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``g □ h``: ``(x, y) ~ (s, t)`` iff one coordinate agrees and the other is adjacent.

    Row coordinates index ``g`` and column coordinates index ``h``.
    """
    if g.n == 0 or h.n == 0:
        raise EmptyGraph("Cartesian product with an empty factor")
    cols = h.n

    def vid(x, y):
        return x * cols + y

    edges = []
    for x in range(g.n):
        for a, b in h.edges:
            edges.append((vid(x, a), vid(x, b)))
    for y in range(h.n):
        for a, b in g.edges:
            edges.append((vid(a, y), vid(b, y)))
    coords = [(x + 1, y + 1) for x in range(g.n) for y in range(h.n)]
    return new_graph(g.n * h.n, edges, coords)


def clique_product(m: int, n: int) -> Graph:
    return cartesian_product(complete_graph(m), complete_graph(n))


def swap_coordinates(g: Graph) -> Graph:
    """Relabel a product ``g □ h`` as ``h □ g`` by exchanging coordinates."""
    rows, cols = g.shape
    mapping = [(j - 1) * rows + (i - 1) for i, j in g.coords]
    edges = [(mapping[u], mapping[v]) for u, v in g.edges]
    coords = [None] * g.n
    for v, (i, j) in enumerate(g.coords):
        coords[mapping[v]] = (j, i)
    return new_graph(g.n, edges, coords)


def factor_graphs(g: Graph) -> tuple[Graph, Graph] | None:
    """Recover ``(g1, g2)`` with ``g == g1 □ g2`` from the coordinates, if consistent."""
    if g.coords is None:
        return None
    rows, cols = g.shape
    if rows * cols != g.n or sorted(g.coords) != [(i, j) for i in range(1, rows + 1)
                                                  for j in range(1, cols + 1)]:
        return None
    row_edges, col_edges = set(), set()
    for u, v in g.edges:
        (a, b), (c, d) = g.coords[u], g.coords[v]
        if a == c:
            col_edges.add((min(b, d) - 1, max(b, d) - 1))
        elif b == d:
            row_edges.add((min(a, c) - 1, max(a, c) - 1))
        else:
            return None
    g1 = new_graph(rows, row_edges)
    g2 = new_graph(cols, col_edges)
    if cartesian_product(g1, g2).edges != g.edges:
        return None
    return g1, g2


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_path(g: Graph) -> bool:
    """True iff ``g`` is the path ``0-1-...-(n-1)`` as produced by :func:`path_graph`."""
    return g.edges == tuple((i, i + 1) for i in range(g.n - 1))


def components(g: Graph) -> list[list[int]]:
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= g.adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        out.append([v for v in range(g.n) if comp >> v & 1])
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise EmptyGraph("connectivity of the empty graph is undefined")
    return len(components(g)) == 1


def induced_subgraph(g: Graph, vertices: list[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return new_graph(len(vertices), edges)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return new_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    return new_graph(g.n, [f for f in g.edges if f != e])


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Merge the endpoints of ``e`` into the lower id; parallel edges collapse."""
    a, b = e
    keep = [u for u in range(g.n) if u != b]
    index = {u: i for i, u in enumerate(keep)}
    index[b] = index[a]
    edges = {(index[u], index[v]) for u, v in g.edges if {u, v} != {a, b}}
    return new_graph(len(keep), [(u, v) for u, v in edges if u != v])


def maximal_cliques(g: Graph) -> list[int]:
    """All maximal cliques as bitmasks (Bron-Kerbosch with Tomita pivoting)."""
    out: list[int] = []
    adj = g.adj

    def expand(r, p, x):
        if not p and not x:
            out.append(r)
            return
        px = p | x
        pivot, best = -1, -1
        while px:
            low = px & -px
            u = low.bit_length() - 1
            c = (p & adj[u]).bit_count()
            if c > best:
                pivot, best = u, c
            px ^= low
        cand = p & ~adj[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            expand(r | low, p & adj[v], x & adj[v])
            p &= ~low
            x |= low
            cand ^= low

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    return out


def clique_number(g: Graph) -> int:
    """Size of a maximum clique, by branch and bound over candidate sets."""
    if g.n == 0:
        raise EmptyGraph("clique number of the empty graph")
    if g.n > size_limit(CLIQUE_CAP):
        raise TooLarge(f"clique_number is capped at {CLIQUE_CAP} vertices, got {g.n}")
    adj = g.adj
    best = 1

    def grow(size, cand):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        while cand:
            # prune: even taking every candidate cannot beat the incumbent
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            grow(size + 1, cand & adj[v])
            cand ^= low

    grow(0, (1 << g.n) - 1)
    return best


def parse_graph(text: str) -> Graph:
    """Parse the DIMACS-like text format (1-based ids, optional ``x`` coordinate lines)."""
    n = declared = None
    edges, coords = [], {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "p":
                # tolerate "p edge n m" as written by some DIMACS tools
                nums = [int(t) for t in parts[1:] if t.lstrip("-").isdigit()]
                n, declared = nums[0], nums[1]
            elif parts[0] == "e":
                edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
            elif parts[0] == "x":
                coords[int(parts[1]) - 1] = (int(parts[2]), int(parts[3]))
            else:
                raise GraphFormatError(f"line {lineno}: unknown record {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            raise GraphFormatError(f"line {lineno}: malformed record {raw!r}") from exc
    if n is None:
        raise GraphFormatError("missing 'p <n> <edge_count>' header")
    if declared != len(edges):
        raise GraphFormatError(f"header declares {declared} edges, found {len(edges)}")
    coord_list = None
    if coords:
        if sorted(coords) != list(range(n)):
            raise GraphFormatError("coordinate lines must cover every vertex exactly once")
        coord_list = [coords[v] for v in range(n)]
    try:
        return new_graph(n, edges, coord_list)
    except InvalidEdge as exc:
        raise GraphFormatError(str(exc)) from exc


def read_graph(path: str | os.PathLike) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w") as fh:
        fh.write(g.canonical_text())
