import itertools
import random

import pytest

from critgroup.digraph import BasePoint, Multidigraph

# Bidirected triangle: all six ordered pairs, lexicographic.
G2_EDGES = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]


def two_cycle():
    return Multidigraph(("u", "w"), ((0, 1), (1, 0)))


def bidirected_triangle():
    return Multidigraph.from_edges(3, G2_EDGES)


def single_loop():
    return Multidigraph(("x",), ((0, 0),))


@pytest.fixture
def g1():
    return two_cycle()


@pytest.fixture
def g2():
    return bidirected_triangle()


@pytest.fixture
def g3():
    return single_loop()


def small_digraph_corpus(max_vertices, max_edges):
    """Every multidigraph with the given bounds, one per isomorphism class."""
    for n in range(1, max_vertices + 1):
        pairs = [(t, h) for t in range(n) for h in range(n)]
        perms = list(itertools.permutations(range(n)))
        for m in range(max_edges + 1):
            for es in itertools.combinations_with_replacement(pairs, m):
                canon = min(tuple(sorted((p[t], p[h]) for t, h in es)) for p in perms)
                if canon == es:
                    yield Multidigraph.from_edges(n, es)


def random_digraphs(count, max_vertices, max_edges, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_vertices)
        m = rng.randint(0, max_edges)
        yield Multidigraph.from_edges(n, [(rng.randrange(n), rng.randrange(n)) for _ in range(m)])


def functional_graphs(max_vertices):
    """All 1-out-regular graphs on 1..max_vertices vertices (vertex i -> f(i))."""
    for n in range(1, max_vertices + 1):
        for heads in itertools.product(range(n), repeat=n):
            yield Multidigraph.from_edges(n, list(enumerate(heads)))


def base_points(g):
    return [BasePoint.from_edge(g, e) for e in range(g.n_edges)]
