import random
from functools import lru_cache

from hypothesis import HealthCheck, settings, strategies as st

from ncflips.oracle import enumerate_trees
from ncflips.sampling import random_tree

settings.register_profile(
    "default", max_examples=150, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def tree_pairs(draw, min_n: int = 3, max_n: int = 14):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    return random_tree(n, rng), random_tree(n, rng)


@st.composite
def trees(draw, min_n: int = 3, max_n: int = 14):
    return draw(tree_pairs(min_n, max_n))[0]


@lru_cache(maxsize=None)
def all_trees(n: int) -> tuple:
    return tuple(enumerate_trees(n))


@lru_cache(maxsize=None)
def nice_pairs(n: int) -> tuple:
    """Ordered pairs with the same border edges and no common chord."""
    groups: dict = {}
    for t in all_trees(n):
        groups.setdefault(t.border_edges, []).append(t)
    out = []
    for group in groups.values():
        for t1 in group:
            for t2 in group:
                if t1 is not t2 and not set(t1.chords) & set(t2.chords):
                    out.append((t1, t2))
    return tuple(out)
