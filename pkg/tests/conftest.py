import os
import random

import pytest

from vlimits import loader
from vlimits.graph import Graph
from vlimits.verify import random_graph

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


def data_file(name):
    return os.path.join(DATA_DIR, name)


def banana():
    return Graph(["u", "v"], [("e1", "u", "v"), ("e2", "u", "v")])


def k2():
    return Graph(["u", "v"], [("e", "u", "v")])


def triangle():
    return Graph(["a", "b", "c"], [("e1", "a", "b"), ("e2", "b", "c"), ("e3", "a", "c")])


def theta():
    return Graph(["u", "v"], [("e1", "u", "v"), ("e2", "u", "v"), ("e3", "u", "v")])


def k4():
    vertices = ["a", "b", "c", "d"]
    edges = []
    for i, tail in enumerate(vertices):
        for head in vertices[i + 1 :]:
            edges.append(("{}{}".format(tail, head), tail, head))
    return Graph(vertices, edges)


@pytest.fixture
def b2():
    return banana()


@pytest.fixture
def edge():
    return k2()


@pytest.fixture
def tri():
    return triangle()


@pytest.fixture
def theta3():
    return theta()


@pytest.fixture
def complete4():
    return k4()


@pytest.fixture
def random_graphs():
    rng = random.Random(2024)
    return [random_graph(rng, 6, 4) for _i in range(50)]


@pytest.fixture
def load_input():
    def load(name):
        return loader.load_graph(data_file(name))

    return load


@pytest.fixture
def datafile():
    return data_file
