import itertools

import pytest


def all_sequences(max_length, alphabet_size, min_length=0):
    for length in range(min_length, max_length + 1):
        yield from itertools.product(range(alphabet_size), repeat=length)


@pytest.fixture
def desk_sequences():
    """Every sequence of length <= 7 over {0..4}."""
    return list(all_sequences(7, 5))
