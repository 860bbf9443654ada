"""Shared small instances with independently known optima."""

import pytest

from mist import make_graph


def path_graph(n):
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(k):
    # K_{1,k}: center 0
    return make_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_bipartite(a, b):
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def bowtie():
    # two triangles sharing vertex 0
    return make_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def chain_prefix(degrees, n2):
    """Chain graph from nondecreasing X-side prefix-neighborhood sizes."""
    n1 = len(degrees)
    return make_graph(n1 + n2,
                      [(i, n1 + j) for i, d in enumerate(degrees) for j in range(d)])


# The tightness pair from the chain-graph bound discussion: covers of 8 and 9
# edges, optima 6 and 8.
def fig8_g1():
    return chain_prefix((2, 2, 2, 4, 5), 5)


def fig8_g2():
    return chain_prefix((2, 2, 2, 4, 5, 5), 5)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c6():
    return cycle_graph(6)
