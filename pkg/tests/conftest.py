"""Shared generators for the test suite."""

from hypothesis import strategies as st

from chogen.designs import ChoiceDesign, all_treatments


def random_design(rng, n, m, N):
    """A design drawn with a stdlib Random instance (distinct options per set)."""
    pool = all_treatments(n)
    sets = [tuple(rng.sample(pool, m)) for _ in range(N)]
    return ChoiceDesign.from_sets(sets)


@st.composite
def designs(draw, max_n=4, max_m=4, max_N=5, min_n=1):
    n = draw(st.integers(min_n, max_n))
    m = draw(st.integers(2, min(max_m, 1 << n)))
    N = draw(st.integers(1, max_N))
    pool = all_treatments(n)
    sets = []
    for _ in range(N):
        perm = draw(st.permutations(pool))
        sets.append(tuple(perm[:m]))
    return ChoiceDesign.from_sets(sets)
