"""Edge searching: game semantics, strategy replay, exact solvers, sweep strategy.

An edge ``uv`` is cleared when a searcher moves from ``u`` to ``v`` and,
just before the move, either ``u`` holds at least two searchers or every
other edge at ``u`` is already clear.  After every action the cleared set is
closed under recontamination: a clear edge turns dirty when it shares an
unguarded endpoint with a dirty edge, repeated until nothing changes.

Two solvers decide whether ``k`` searchers suffice.

* ``full`` explores every reachable (occupancy, cleared) pair under the
  literal rules above, breadth first.
* ``monotone`` searches over cleared sets only.  In a strategy that never
  loses a clear edge, every vertex touching both a clear and a dirty edge
  must be guarded at all times, and clearing ``uv`` needs those guards plus
  one searcher at ``u`` (two if ``u`` still has another dirty edge).  Extra
  searchers can always be lifted and re-placed, so a cleared set is
  reachable iff some single-edge extension chain stays within ``k``.

Both solvers hand back concrete action lists that are replayed through
:func:`validate_strategy` before being returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Union

from sweepkit.errors import DomainError, EmptyGraph, IllegalAction, TooLarge
from sweepkit.graph import (Graph, cartesian_product, components, induced_subgraph,
                            is_connected, path_graph, size_limit)
from sweepkit.vsep import vertex_separation_exact

FULL_MAX_VERTICES = 12
FULL_MAX_EDGES = 18
MONOTONE_MAX_VERTICES = 16


@dataclass(frozen=True)
class Place:
    v: int


@dataclass(frozen=True)
class Remove:
    v: int


@dataclass(frozen=True)
class Move:
    u: int
    v: int


SearchAction = Union[Place, Remove, Move]


@dataclass(frozen=True)
class SearchState:
    occupancy: tuple[int, ...]
    reserve: int
    cleared: frozenset[tuple[int, int]]

    @property
    def budget(self) -> int:
        return sum(self.occupancy) + self.reserve


@dataclass(frozen=True)
class SearchStrategy:
    k: int
    actions: tuple[SearchAction, ...]


@dataclass(frozen=True)
class StrategyReport:
    success: bool
    monotone: bool
    step_of_failure: int | None
    final: SearchState
    dirty: tuple[tuple[int, int], ...]


def initial_state(g: Graph, k: int) -> SearchState:
    return SearchState((0,) * g.n, k, frozenset())


def _edge(u, v):
    return (u, v) if u < v else (v, u)


def recontamination_closure(g: Graph, s: SearchState) -> SearchState:
    cleared = set(s.cleared)
    changed = True
    while changed:
        changed = False
        dirty_at = [False] * g.n
        for u, v in g.edges:
            if (u, v) not in cleared:
                dirty_at[u] = dirty_at[v] = True
        for e in list(cleared):
            if any(s.occupancy[w] == 0 and dirty_at[w] for w in e):
                cleared.discard(e)
                changed = True
    if len(cleared) == len(s.cleared):
        return s
    return SearchState(s.occupancy, s.reserve, frozenset(cleared))


def apply_action(g: Graph, s: SearchState, a: SearchAction) -> SearchState:
    occ = list(s.occupancy)
    reserve = s.reserve
    cleared = s.cleared
    if isinstance(a, Place):
        if not 0 <= a.v < g.n:
            raise IllegalAction("place", f"vertex {a.v} does not exist")
        if reserve == 0:
            raise IllegalAction("place", "no searcher left in reserve")
        occ[a.v] += 1
        reserve -= 1
    elif isinstance(a, Remove):
        if not 0 <= a.v < g.n or occ[a.v] == 0:
            raise IllegalAction("remove", f"no searcher on vertex {a.v}")
        occ[a.v] -= 1
        reserve += 1
    elif isinstance(a, Move):
        u, v = a.u, a.v
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise IllegalAction("move", f"({u}, {v}) is not an edge")
        if occ[u] == 0:
            raise IllegalAction("move", f"no searcher on vertex {u}")
        e = _edge(u, v)
        others_clear = all(_edge(u, w) in cleared for w in g.neighbors(u) if w != v)
        if occ[u] >= 2 or others_clear:
            cleared = cleared | {e}
        occ[u] -= 1
        occ[v] += 1
    else:
        raise IllegalAction(type(a).__name__, "unknown action")
    return recontamination_closure(g, SearchState(tuple(occ), reserve, cleared))


def validate_strategy(g: Graph, strat: SearchStrategy) -> StrategyReport:
    """Replay ``strat`` from the empty board; IllegalAction carries the failing step."""
    state = initial_state(g, strat.k)
    monotone = True
    for step, a in enumerate(strat.actions):
        try:
            nxt = apply_action(g, state, a)
        except IllegalAction as exc:
            raise IllegalAction(exc.kind, exc.reason, step) from None
        if not state.cleared <= nxt.cleared:
            monotone = False
        state = nxt
    dirty = tuple(e for e in g.edges if e not in state.cleared)
    success = not dirty
    return StrategyReport(success, monotone, None if success else len(strat.actions),
                          state, dirty)


# -- solvers --------------------------------------------------------------

def _incidence(g: Graph) -> list[int]:
    inc = [0] * g.n
    for i, (u, v) in enumerate(g.edges):
        inc[u] |= 1 << i
        inc[v] |= 1 << i
    return inc


def _frontier(inc: list[int], cleared: int) -> int:
    """Vertices touching both a clear and a dirty edge, as a bitmask."""
    mask = 0
    for w, m in enumerate(inc):
        if m & cleared and m & ~cleared:
            mask |= 1 << w
    return mask


def _monotone_search(g: Graph, k: int) -> list[SearchAction] | None:
    inc = _incidence(g)
    full = (1 << g.m) - 1
    parent: dict[int, tuple[int, int, int, bool] | None] = {0: None}
    stack = [0]
    while stack:
        c = stack.pop()
        if c == full:
            break
        guards = _frontier(inc, c)
        moves = []
        for i, (a, b) in enumerate(g.edges):
            if c >> i & 1:
                continue
            for u, v in ((a, b), (b, a)):
                rule_ii = not (inc[u] & ~c & ~(1 << i))
                need = (guards | 1 << u).bit_count() + (0 if rule_ii else 1)
                if need <= k:
                    moves.append((c | 1 << i, u, v, rule_ii))
                    break
        # reversed so the lowest edge is expanded first
        for nxt, u, v, rule_ii in reversed(moves):
            if nxt not in parent:
                parent[nxt] = (c, u, v, rule_ii)
                stack.append(nxt)
    if full not in parent:
        return None
    steps = []
    c = full
    while parent[c] is not None:
        prev, u, v, rule_ii = parent[c]
        steps.append((prev, u, v, rule_ii))
        c = prev
    steps.reverse()

    actions: list[SearchAction] = []
    occ = [0] * g.n
    for prev, u, v, rule_ii in steps:
        guards = _frontier(inc, prev)
        for w in range(g.n):
            keep = 1 if guards >> w & 1 else 0
            while occ[w] > keep:
                actions.append(Remove(w))
                occ[w] -= 1
        want = 1 if rule_ii else 2
        while occ[u] < want:
            actions.append(Place(u))
            occ[u] += 1
        actions.append(Move(u, v))
        occ[u] -= 1
        occ[v] += 1
    return actions


def _full_search(g: Graph, k: int) -> list[SearchAction] | None:
    inc = _incidence(g)
    full = (1 << g.m) - 1
    arcs = []
    for i, (a, b) in enumerate(g.edges):
        arcs.append((a, b, i))
        arcs.append((b, a, i))
    arcs.sort()

    def close(occ, cleared):
        while True:
            dirty = full & ~cleared
            lost = 0
            for w in range(g.n):
                if occ[w] == 0 and inc[w] & dirty:
                    lost |= inc[w] & cleared
            if not lost:
                return cleared
            cleared &= ~lost

    start = ((0,) * g.n, 0)
    parent: dict = {start: None}
    queue = deque([start])
    goal = None
    while queue:
        state = queue.popleft()
        occ, cleared = state
        if cleared == full:
            goal = state
            break
        placed = sum(occ)
        succ = []
        if placed < k:
            for w in range(g.n):
                o = list(occ)
                o[w] += 1
                succ.append(((tuple(o), cleared), Place(w)))
        for u, v, i in arcs:
            if occ[u] == 0:
                continue
            c = cleared
            if occ[u] >= 2 or not (inc[u] & ~cleared & ~(1 << i)):
                c |= 1 << i
            o = list(occ)
            o[u] -= 1
            o[v] += 1
            o = tuple(o)
            succ.append(((o, close(o, c)), Move(u, v)))
        for w in range(g.n):
            if occ[w]:
                o = list(occ)
                o[w] -= 1
                o = tuple(o)
                succ.append(((o, close(o, cleared)), Remove(w)))
        for nxt, action in succ:
            if nxt not in parent:
                parent[nxt] = (state, action)
                queue.append(nxt)
    if goal is None:
        return None
    actions = []
    state = goal
    while parent[state] is not None:
        state, action = parent[state]
        actions.append(action)
    return actions[::-1]


def decide_search_with_k(g: Graph, k: int, mode: str = "monotone") -> SearchStrategy | None:
    """A validated strategy clearing ``g`` with at most ``k`` searchers, or None."""
    if mode not in ("monotone", "full"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "full":
        cap_v = size_limit(FULL_MAX_VERTICES)
        cap_e = FULL_MAX_EDGES if cap_v == FULL_MAX_VERTICES else cap_v * (cap_v - 1) // 2
        if g.n > cap_v or g.m > cap_e:
            raise TooLarge(f"full-mode search is capped at {cap_v} vertices and "
                           f"{cap_e} edges, got {g.n} and {g.m}")
        actions = _full_search(g, k)
    else:
        cap = size_limit(MONOTONE_MAX_VERTICES)
        if g.n > cap:
            raise TooLarge(f"monotone search is capped at {cap} vertices, got {g.n}")
        actions = _monotone_search(g, k)
    if actions is None:
        return None
    strat = SearchStrategy(k, tuple(actions))
    report = validate_strategy(g, strat)
    if not report.success or (mode == "monotone" and not report.monotone):
        raise AssertionError(f"{mode} solver produced a strategy that fails replay")
    return strat


def _relabel_actions(actions, mapping):
    out = []
    for a in actions:
        if isinstance(a, Move):
            out.append(Move(mapping[a.u], mapping[a.v]))
        else:
            out.append(type(a)(mapping[a.v]))
    return out


def exact_search_number(g: Graph, mode: str = "monotone") -> tuple[int, SearchStrategy]:
    """Smallest ``k`` that clears ``g``, with a replay-checked witness.

    The search starts at the vertex separation number, which is a lower bound,
    and normally succeeds at it or one above.  Components are cleared one
    after another, lifting all searchers in between.
    """
    if g.n == 0:
        raise EmptyGraph("search number of the empty graph")
    best = 0
    actions: list[SearchAction] = []
    occ = [0] * g.n
    for comp in components(g):
        sub = induced_subgraph(g, comp)
        if sub.m == 0:
            continue
        vs, _ = vertex_separation_exact(sub)
        k = vs
        while True:
            strat = decide_search_with_k(sub, k, mode)
            if strat is not None:
                break
            k += 1
        best = max(best, k)
        # the previous component is clear, so its searchers can leave
        for w in range(g.n):
            actions += [Remove(w)] * occ[w]
            occ[w] = 0
        for a in _relabel_actions(strat.actions, comp):
            actions.append(a)
            if isinstance(a, Move):
                occ[a.u] -= 1
                occ[a.v] += 1
            else:
                occ[a.v] += 1 if isinstance(a, Place) else -1
    strat = SearchStrategy(best, tuple(actions))
    assert validate_strategy(g, strat).success
    return best, strat


def sweep_strategy_product_with_path(g: Graph, n: int) -> SearchStrategy:
    """``|V(g)| + 1`` searchers clearing ``g □ P_n`` copy by copy.

    One guard sits on every vertex of the current copy of ``g`` while a free
    searcher walks the copy, clearing each internal edge from a doubly
    occupied vertex.  The guards then step to the next copy one at a time in
    vertex order, each step clearing the rung it uses, and the free searcher
    follows.  All placements come first.
    """
    if n < 3:
        raise DomainError(f"path length must be at least 3, got {n}")
    if g.n == 0 or not is_connected(g):
        raise DomainError("sweep strategy needs a connected graph")

    def vid(x, j):
        return x * n + j

    walk = _covering_walk(g)
    actions: list[SearchAction] = [Place(vid(x, 0)) for x in range(g.n)]
    actions.append(Place(vid(walk[0], 0)))
    for j in range(n):
        for a, b in zip(walk, walk[1:]):
            actions.append(Move(vid(a, j), vid(b, j)))
        if j == n - 1:
            break
        for x in range(g.n):
            actions.append(Move(vid(x, j), vid(x, j + 1)))
        actions.append(Move(vid(walk[-1], j), vid(walk[-1], j + 1)))
    return SearchStrategy(g.n + 1, tuple(actions))


def _covering_walk(g: Graph) -> list[int]:
    """Closed walk from vertex 0 that traverses every edge (each exactly twice)."""
    walk = [0]
    used = set()
    visited = {0}

    def visit(u):
        for w in g.neighbors(u):
            e = _edge(u, w)
            if e in used:
                continue
            used.add(e)
            walk.append(w)
            if w not in visited:
                visited.add(w)
                visit(w)
            walk.append(u)

    visit(0)
    return walk


def search_number_formula(family: str, m: int, n: int) -> int:
    """Search number of ``P_m □ P_n`` (``"path-path"``) or ``K_m □ P_n`` (``"clique-path"``)."""
    if m < 3 or n < 3:
        raise DomainError(f"formula is stated for m, n >= 3, got m={m}, n={n}")
    if family == "path-path":
        return min(m, n) + 1
    if family == "clique-path":
        return m + 1
    raise DomainError(f"unknown family {family!r}")


def sweep_target(g: Graph, n: int) -> Graph:
    return cartesian_product(g, path_graph(n))
