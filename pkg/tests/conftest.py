from __future__ import annotations

import random

import pytest

from minwait import Instance, Sequence

# Five-job walkthrough instance used across the suite: two contiguous
# queues ({1,2,3} and {4,5}), 8 units of forced idle, optimum 4.
REFERENCE_TEXT = "5\n0 5\n3 3\n7 4\n20 5\n24 6\n"


@pytest.fixture
def reference() -> Instance:
    return Instance(n=5, release=(0, 3, 7, 20, 24), processing=(5, 3, 4, 5, 6))


def random_instance(rng: random.Random, n: int) -> Instance:
    return Instance(
        n=n,
        release=tuple(rng.randint(0, 200) for _ in range(n)),
        processing=tuple(rng.randint(1, 50) for _ in range(n)),
    )


def random_sequence(rng: random.Random, n: int) -> Sequence:
    order = list(range(1, n + 1))
    rng.shuffle(order)
    return Sequence(order=tuple(order))
