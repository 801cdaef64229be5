"""Shared graph corpora for the test suite.

Labeled enumeration covers every graph on up to 6 vertices; the networkx
atlas supplies one representative per isomorphism class up to 7 vertices
for the suites whose predicates are isomorphism-invariant.
"""

from itertools import combinations

import pytest

from sepgamma import Graph


def pair_list(n):
    return list(combinations(range(1, n + 1), 2))


def all_graphs(n):
    """Every labeled graph on vertex set 1..n."""
    pairs = pair_list(n)
    for mask in range(1 << len(pairs)):
        edges = frozenset(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        yield Graph(n, edges)


def all_graphs_upto(n):
    for k in range(1, n + 1):
        yield from all_graphs(k)


def nx_to_graph(nxg) -> Graph:
    nodes = sorted(nxg.nodes())
    index = {v: i + 1 for i, v in enumerate(nodes)}
    edges = frozenset(
        (index[u], index[v]) if index[u] < index[v] else (index[v], index[u])
        for u, v in nxg.edges()
    )
    return Graph(len(nodes), edges)


_ATLAS_CACHE = {}


def atlas_graphs(max_n=7, min_n=1):
    """One representative per isomorphism class with min_n..max_n vertices."""
    key = (min_n, max_n)
    if key not in _ATLAS_CACHE:
        from networkx.generators.atlas import graph_atlas_g
        out = []
        for nxg in graph_atlas_g()[1:]:
            k = nxg.number_of_nodes()
            if min_n <= k <= max_n:
                out.append(nx_to_graph(nxg))
        _ATLAS_CACHE[key] = out
    return _ATLAS_CACHE[key]


def random_graph(rng, n, p) -> Graph:
    edges = frozenset(pq for pq in pair_list(n) if rng.random() < p)
    return Graph(n, edges)


@pytest.fixture(scope="session")
def atlas7():
    return atlas_graphs(7)


@pytest.fixture(scope="session")
def atlas6():
    return atlas_graphs(6)
