"""Path decompositions of graphs and explicit decompositions of ``K_m □ K_n``.

The builders below work in 1-based ``(row, column)`` coordinates of the
product ``K_m □ K_n`` (``m`` rows, ``n`` columns) and only translate to
vertex ids at the end, so each bag family reads like its set formula.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil

from sweepkit.errors import DomainError, EmptyDecomposition, InvalidBag
from sweepkit.graph import Graph, maximal_cliques

Coord = tuple[int, int]


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[tuple[int, ...], ...]

    def __init__(self, bags):
        object.__setattr__(self, "bags", tuple(tuple(sorted(set(b))) for b in bags))

    @property
    def width(self) -> int:
        return width(self)

    def __len__(self):
        return len(self.bags)


@dataclass(frozen=True)
class Violation:
    condition: str  # "cover-vertices" | "cover-edges" | "connectivity" | "empty-bag"
    vertex: int | None = None
    edge: tuple[int, int] | None = None
    bags: tuple[int, ...] = ()

    def describe(self) -> str:
        if self.condition == "cover-vertices":
            return f"vertex {self.vertex + 1} lies in no bag"
        if self.condition == "cover-edges":
            u, v = self.edge
            return f"edge ({u + 1}, {v + 1}) is not contained in any bag"
        if self.condition == "empty-bag":
            return f"bag {self.bags[0] + 1} is empty"
        first, gap, last = (i + 1 for i in self.bags)
        return (f"vertex {self.vertex + 1} is in bags {first} and {last} "
                f"but not in bag {gap}")


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default=())

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid


def width(d: PathDecomposition) -> int:
    if not d.bags:
        raise EmptyDecomposition("decomposition has no bags")
    return max(len(b) for b in d.bags) - 1


def validate_path_decomposition(g: Graph, d: PathDecomposition) -> ValidationReport:
    """Check vertex cover, edge cover and the interval property; report every violation.

    The interval property is checked from each vertex's first and last bag:
    every bag strictly between them that misses the vertex is a witness.
    """
    for i, bag in enumerate(d.bags):
        for v in bag:
            if not 0 <= v < g.n:
                raise InvalidBag(f"bag {i + 1} holds vertex {v + 1}, graph has {g.n} vertices")
    found: list[Violation] = []
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    masks = []
    for i, bag in enumerate(d.bags):
        if not bag:
            found.append(Violation("empty-bag", bags=(i,)))
        mask = 0
        for v in bag:
            first.setdefault(v, i)
            last[v] = i
            mask |= 1 << v
        masks.append(mask)
    for v in range(g.n):
        if v not in first:
            found.append(Violation("cover-vertices", vertex=v))
    for u, v in g.edges:
        pair = 1 << u | 1 << v
        if not any(mask & pair == pair for mask in masks):
            found.append(Violation("cover-edges", edge=(u, v)))
    for v in sorted(first):
        for i in range(first[v] + 1, last[v]):
            if not masks[i] >> v & 1:
                found.append(Violation("connectivity", vertex=v, bags=(first[v], i, last[v])))
    return ValidationReport(tuple(found))


def check_cliques_in_bags(g: Graph, d: PathDecomposition) -> tuple[bool, tuple[int, ...] | None]:
    """Every maximal clique must sit inside a single bag; return a violating clique if not."""
    masks = [sum(1 << v for v in bag) for bag in d.bags]
    for clique in maximal_cliques(g):
        if not any(mask & clique == clique for mask in masks):
            return False, tuple(v for v in range(g.n) if clique >> v & 1)
    return True, None


def pw_clique_product_formula(m: int, n: int) -> int:
    """Pathwidth of ``K_m □ K_n`` for ``2 <= m <= n``."""
    if m < 2 or m > n:
        raise DomainError(f"formula needs 2 <= m <= n, got m={m}, n={n}")
    if m % 2 == 0:
        return (m // 2) * n + m // 2 - 1
    return ceil(m / 2) * n - 1


def _to_ids(n: int, bags: list[set[Coord]]) -> PathDecomposition:
    return PathDecomposition([(i - 1) * n + (j - 1) for i, j in bag] for bag in bags)


def block(rows: range, cols: range) -> set[Coord]:
    return {(i, j) for i in rows for j in cols}


def even_bag(m: int, n: int, k: int) -> set[Coord]:
    """Bag ``k``: top half of the rows on columns ``k..n``, bottom half on ``1..k``."""
    h = m // 2
    return block(range(1, h + 1), range(k, n + 1)) | block(range(h + 1, m + 1), range(1, k + 1))


def build_decomposition_even(m: int, n: int) -> PathDecomposition:
    """``n`` bags of ``(m/2)(n+1)`` vertices each, for even ``m`` and ``n >= m``."""
    if m % 2 or m < 2 or n < m:
        raise DomainError(f"even construction needs even m >= 2 and n >= m, got m={m}, n={n}")
    return _to_ids(n, [even_bag(m, n, k) for k in range(1, n + 1)])


# Odd construction.  With c = ceil(n/2), lo = floor(m/2), hi = ceil(m/2) the bag
# index runs through three phases: 1..c, c+1..c+lo, and the single bag c+hi.

def odd_phase1_bag(m: int, n: int, k: int) -> set[Coord]:
    lo, hi = m // 2, ceil(m / 2)
    return block(range(1, lo + 1), range(k, n + 1)) | block(range(hi, m + 1), range(1, k + 1))


def odd_phase2_bag(m: int, n: int, k: int) -> set[Coord]:
    c, lo, hi = ceil(n / 2), m // 2, ceil(m / 2)
    row = k - c + lo
    upper_right = block(range(1, row), range(c + 1, n + 1))
    full_row = block(range(row, row + 1), range(1, n + 1))
    lower_left = block(range(k - c + hi, m + 1), range(1, c + 1))
    return upper_right | full_row | lower_left


def odd_phase3_bag(m: int, n: int) -> set[Coord]:
    c = ceil(n / 2)
    return block(range(1, m), range(c + 1, n + 1)) | block(range(m, m + 1), range(1, n + 1))


def build_decomposition_odd(m: int, n: int) -> PathDecomposition:
    """``ceil(n/2) + ceil(m/2)`` bags of at most ``ceil(m/2) n`` vertices, odd ``m``, ``n >= m``."""
    if m % 2 == 0 or m < 3 or n < m:
        raise DomainError(f"odd construction needs odd m >= 3 and n >= m, got m={m}, n={n}")
    c, lo = ceil(n / 2), m // 2
    bags = [odd_phase1_bag(m, n, k) for k in range(1, c + 1)]
    bags += [odd_phase2_bag(m, n, k) for k in range(c + 1, c + lo + 1)]
    bags.append(odd_phase3_bag(m, n))
    return _to_ids(n, bags)


def build_clique_product_decomposition(m: int, n: int) -> PathDecomposition:
    if m % 2 == 0:
        return build_decomposition_even(m, n)
    return build_decomposition_odd(m, n)


def split_partition(part_sizes: list[int], m: int) -> int:
    """Index ``t`` (1-based) splitting an ordered partition into three light pieces.

    The parts before ``t``, part ``t`` itself, and the parts after ``t`` each
    hold between 1 and ``floor(m/2)`` elements.  ``t`` is the first index at
    which the running total exceeds ``floor(m/2)``.
    """
    if len(part_sizes) < 3:
        raise DomainError("need an ordered partition into at least three parts")
    if m < 3:
        raise DomainError("need at least three elements")
    if sum(part_sizes) != m:
        raise DomainError(f"part sizes sum to {sum(part_sizes)}, expected {m}")
    half_up = ceil(m / 2)
    for s in part_sizes:
        if s < 1 or s >= half_up:
            raise DomainError(f"every part must have between 1 and {half_up - 1} elements, got {s}")
    total = 0
    for t, s in enumerate(part_sizes, 1):
        total += s
        if total > m // 2:
            return t
    raise AssertionError("unreachable: the parts sum to m > floor(m/2)")
