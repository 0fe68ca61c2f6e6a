import pytest
from hypothesis import settings
from hypothesis import strategies as st

from vbridge.gauss import random_diagram

# fixed example sequences keep runs reproducible
settings.register_profile("repro", derandomize=True)
settings.load_profile("repro")


def diagrams(max_chords=6):
    """Hypothesis strategy: seeded random diagrams with 0..max_chords chords."""
    return st.builds(random_diagram, st.integers(0, max_chords), st.integers(0, 2**32))


def pool(count=500, max_chords=8):
    """Deterministic pool of random diagrams, chord counts cycling through 0..max_chords."""
    return [random_diagram(i % (max_chords + 1), seed=1000 + i) for i in range(count)]


@pytest.fixture(scope="session")
def random_pool():
    return pool()
