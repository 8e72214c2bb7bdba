import itertools
import random

import pytest

from sweepkit.graph import new_graph

ACCEPTANCE_LINES = {}


def random_connected_graph(rng, n, extra_edges):
    """Random spanning tree on ``n`` vertices plus up to ``extra_edges`` chords."""
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    possible = n * (n - 1) // 2
    target = min(possible, n - 1 + extra_edges)
    while len(edges) < target:
        u, v = sorted(rng.sample(range(n), 2))
        edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return new_graph(n, [(perm[u], perm[v]) for u, v in edges])


def random_graph(rng, n, p):
    return new_graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2)
                         if rng.random() < p])


def brute_force_vs(g):
    """Vertex separation by trying every ordering (small graphs only)."""
    best = None
    for order in itertools.permutations(range(g.n)):
        prefix, worst = set(), 0
        for v in order:
            prefix.add(v)
            worst = max(worst, sum(1 for u in prefix
                                   if any(w not in prefix for w in g.neighbors(u))))
            if best is not None and worst >= best:
                break
        if best is None or worst < best:
            best = worst
    return best


def brute_force_clique_number(g):
    for size in range(g.n, 0, -1):
        for combo in itertools.combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
                return size
    return 0


def literal_definition_check(g, bags):
    """Path decomposition check written straight from the three conditions."""
    sets = [set(b) for b in bags]
    if set().union(*sets) != set(range(g.n)):
        return False
    if not all(any({u, v} <= b for b in sets) for u, v in g.edges):
        return False
    r = len(sets)
    return all(sets[i] & sets[k] <= sets[j]
               for i in range(r) for j in range(i, r) for k in range(j, r))


@pytest.fixture
def rng():
    return random.Random(20261019)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, text = marker.args
    status = "PASS" if report.passed else "FAIL"
    ACCEPTANCE_LINES[number] = f"criterion {number}: {status}  {text}  ({report.duration:.1f}s)"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
