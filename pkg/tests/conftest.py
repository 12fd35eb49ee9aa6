import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from arcschemes.graphs import (
    complete,
    cycle,
    elementary_caw,
    empty_graph,
    lex_product,
)

import oracles


@pytest.fixture(scope="session")
def corpus():
    """Small graphs exercising every structural case the closure sees."""
    rng = random.Random(20240901)
    graphs = [
        complete(1),
        complete(2),
        complete(4),
        empty_graph(3),
        cycle(5),
        cycle(6),
        elementary_caw(7, 2),
        elementary_caw(6, 2),
        elementary_caw(8, 3),
        lex_product(cycle(5), complete(2)),
        lex_product(empty_graph(3), complete(2)),
        oracles.path(4),
        oracles.star(3),
        oracles.petersen(),
    ]
    graphs.extend(oracles.random_graph(rng, rng.randint(2, 9)) for _ in range(8))
    return graphs
