import numpy as np
import pytest

from gmeanrep.verify import random_sequence

ACCEPTANCE_SEED = 42


@pytest.fixture(scope="session")
def corpus_200():
    """The seeded 200-instance corpus shared by the acceptance criteria."""
    rng = np.random.default_rng(ACCEPTANCE_SEED)
    return [random_sequence(rng) for _ in range(200)]
