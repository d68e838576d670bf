import random

import pytest
from hypothesis import strategies as st

LETTERS = (1, 2, 3, -1, -2, -3)

letters_st = st.sampled_from(LETTERS)
words_st = st.lists(letters_st, max_size=10).map(tuple)
short_words_st = st.lists(letters_st, max_size=6).map(tuple)


def random_word(rng: random.Random, max_len: int, min_len: int = 0) -> tuple[int, ...]:
    n = rng.randint(min_len, max_len)
    return tuple(rng.choice(LETTERS) for _ in range(n))


@pytest.fixture(scope="session")
def rng() -> random.Random:
    return random.Random(0x3B7A1D)
