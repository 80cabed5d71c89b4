import itertools
import random

import pytest

from monideal import MonomialIdeal


def random_ideal(rng, max_vars=4, max_exp=4, max_gens=4):
    """A random proper nonzero monomial ideal at desk scale."""
    n = rng.randint(2, max_vars)
    while True:
        gens = []
        for _ in range(rng.randint(1, max_gens)):
            g = tuple(rng.randint(0, max_exp) for _ in range(n))
            if any(g):
                gens.append(g)
        if gens:
            I = MonomialIdeal.make(tuple("x%d" % (i + 1) for i in range(n)), gens)
            if I.is_proper():
                return I


def box_points(box):
    return itertools.product(*(range(b + 1) for b in box))


def brute_force_member(gens, m):
    """Ideal membership straight from the definition: some generator
    divides m.  Independent of MonomialIdeal internals."""
    return any(all(x <= y for x, y in zip(g, m)) for g in gens)


@pytest.fixture
def rng():
    return random.Random(20260826)
