"""Shared generators for the test suite."""

from fractions import Fraction

from hypothesis import strategies as st

from starplumb.graph_core import StarPlumbing, is_negative_definite_star


def legs_strategy(max_len=4, min_weight=-7):
    return st.lists(st.integers(min_weight, -2), min_size=1, max_size=max_len).map(tuple)


def star_strategy(max_legs=4, max_len=4, min_weight=-7, central_lo=-8, central_hi=3):
    return st.builds(
        StarPlumbing,
        st.integers(central_lo, central_hi),
        st.lists(legs_strategy(max_len, min_weight), min_size=1, max_size=max_legs).map(tuple),
    )


def random_star(rng, max_legs=3, max_len=3, min_weight=-5, central_lo=-6, central_hi=1):
    legs = tuple(
        tuple(rng.randint(min_weight, -2) for _ in range(rng.randint(1, max_len)))
        for _ in range(rng.randint(1, max_legs))
    )
    return StarPlumbing(rng.randint(central_lo, central_hi), legs)


def random_definite_star(rng, **kw):
    while True:
        g = random_star(rng, **kw)
        if is_negative_definite_star(g):
            return g


def random_area(rng, cap=10):
    """Positive rational in (0, cap]."""
    den = rng.randint(1, 12)
    return Fraction(rng.randint(1, cap * den), den)
